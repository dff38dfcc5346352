#pragma once

#include <string>
#include <vector>

#include "pathideal/bigint.hpp"
#include "pathideal/ideal.hpp"
#include "pathideal/polynomial.hpp"

namespace pathideal {

// Numerator K(z) of the Hilbert series HS(S/I, z) = K(z) / (1-z)^n.
// K depends only on the generator multidegrees, not on the ambient size.
// Computed by the pivot recursion
//     K(S/(J + (m))) = K(S/J) - z^deg(m) K(S/(J : m)),
// with K(S/0) = 1, products over support-disjoint generator blocks, and
// memoization on the canonical generator list (unused variables stripped,
// so translated copies of a subproblem share one cache entry). The pivot m
// is the generator of largest total degree (ties broken by the fixed
// order); ideals with more generators than the configured limit switch to
// splitting along the most frequent variable instead, which keeps the
// recursion depth proportional to exponents rather than generator count.
IntPolynomial k_polynomial(const MonomialIdeal& ideal);

// Independent inclusion-exclusion oracle over generator subsets:
// sum over A of (-1)^|A| z^(deg lcm A). Rejects ideals with more than 20
// generators.
IntPolynomial taylor_oracle(const MonomialIdeal& ideal);

// Krull dimension of S/I: n - height(radical(I)); n for the zero ideal,
// error for the unit ideal.
int dimension(const MonomialIdeal& ideal);

// K divided exactly by (1-z)^height; equals the numerator over
// (1-z)^dim(S/I). Inexact division signals an engine bug (logic_error).
IntPolynomial q_polynomial(const MonomialIdeal& ideal);

// Q evaluated at z = 1; always a positive integer for proper ideals.
BigInt multiplicity(const MonomialIdeal& ideal);

// Coefficients e_i of the expansion Q(z) = sum_i e_i (1-z)^i, so that
// e_i = (-1)^i Q^(i)(1) / i!. e_0 is the multiplicity. For Artinian
// quotients only e_0 (the length) is returned.
std::vector<BigInt> hilbert_coefficients(const MonomialIdeal& ideal);

// In-memory memo control; clearing is mainly useful for benchmarks.
void clear_hilbert_cache();
size_t hilbert_cache_size();

namespace detail {
// Generator count above which the recursion pivots on a variable instead of
// a generator (default 24). Mutable so tests can force either branch onto
// the same inputs; clear the cache when changing it.
int& generator_pivot_limit();
}  // namespace detail

// Optional on-disk spill for top-level K-polynomials: content-addressed
// files keyed by a hash of the canonical generator list. Empty path
// disables. Purely an optimization.
void set_hilbert_disk_cache(const std::string& directory);
std::string hilbert_disk_cache();

// --- closed forms and identity checks for the path-ideal family ---

// C(s+a-1, s-1) * C(a+t-b-1, a) where n = at + b, 0 <= b < t.
BigInt multiplicity_closed_form(int n, int t, int s);

// Colon identities of the power family (s >= 2): I^s : u_last = I^(s-1);
// the last-variable chain A_i : x_{n-i+1} = A_{i+1} together with
// B_i = (I_t(L_{n-i})^s, x_{n-i+1}); and, for n > t, the reduction
// (I_t(L_{n-1})^s : u_last, x_{n-t}) = (I_t(L_{n-t-1})^s, x_{n-t}) with the
// principal degenerate form when n <= 2t.
bool verify_colon_identities(int n, int t, int s);

struct RecursionCheck {
    std::string branch;  // "b>0,n>2t", "b>0,n<2t" or "b=0" (n = 2t lands here)
    bool ok = false;
};
// Exact Q-polynomial recursion for Q(S/I_t(L_n)^s), s >= 2, n > t.
RecursionCheck verify_recursions(int n, int t, int s);

struct MainFormulaCheck {
    BigInt engine;   // multiplicity via Q(1)
    BigInt formula;  // closed form
    BigInt oracle;   // sum of localization lengths over the min-height primes
    bool match = false;
};
MainFormulaCheck verify_main(int n, int t, int s);

// Multiplicity of S/I_t(L_n)^s via Q(1) when the power's generating set is
// small enough for the K recursion, otherwise via the localization sum
// (both routes are cross-checked wherever both run).
BigInt path_power_multiplicity(int n, int t, int s);

// The degree-a polynomial behaviour of s -> mult(S/I^s) from s = 1 on:
// the (a+1)-st finite differences vanish on 1..s_max and the a-th do not.
// Requires s_max >= a + 2.
bool verify_degree_in_s(int n, int t, int s_max);
// The constant a-th finite difference (equals C(a+t-b-1, a)); throws if the
// sequence fails the polynomiality test.
BigInt degree_in_s_leading_difference(int n, int t, int s_max);

}  // namespace pathideal
