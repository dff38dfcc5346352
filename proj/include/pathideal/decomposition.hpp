#pragma once

#include <vector>

#include "pathideal/bigint.hpp"
#include "pathideal/covers.hpp"
#include "pathideal/ideal.hpp"

namespace pathideal {

// Irredundant irreducible decomposition of a nonzero proper monomial ideal:
// components are generated by pure variable powers, their intersection is
// the ideal, and no component contains the intersection of the others.
// Splitting: the first generator (canonical order) that is not a pure power
// is factored at its lowest-index variable into coprime parts u, v, and the
// recursion descends into I + (u) and I + (v); redundant components are
// dropped once at the end.
std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& ideal);

// Radicals of the irredundant irreducible components, as a sorted family of
// prime supports.
CoverFamily associated_primes(const MonomialIdeal& ideal);

// Empirical normal torsion-freeness up to s_max: Ass(I^s) stays equal to
// Ass(I) for both I = path_ideal(n,t) and its Alexander dual, and Ass(I)
// matches the six-condition cover family.
bool verify_ntf(int n, int t, int s_max);

// Number of monomials in the variables of F outside the ideal obtained by
// substituting x_j = 1 for all j outside F. Finite (and accepted) exactly
// when F is a minimal prime of the ideal.
BigInt local_length(const MonomialIdeal& ideal, const PrimeSupport& prime);

}  // namespace pathideal
