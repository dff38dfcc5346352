#pragma once

#include <string>
#include <vector>

#include "pathideal/bigint.hpp"
#include "pathideal/ideal.hpp"
#include "pathideal/simplicial.hpp"

namespace pathideal {

// Family of minimal vertex covers, sorted by (size, lex) and duplicate-free.
struct CoverFamily {
    int ambient = 0;
    std::vector<PrimeSupport> covers;

    int size() const { return static_cast<int>(covers.size()); }
    bool operator==(const CoverFamily& other) const {
        return ambient == other.ambient && covers == other.covers;
    }
    std::string str() const;  // "[[2], [1,3]]"
};

CoverFamily make_cover_family(int ambient, std::vector<std::vector<int>> sets);

// Minimal transversals of the facet list, by iterated expansion: seed with
// the first facet's singletons, extend through each further facet,
// minimalizing by inclusion after every step.
CoverFamily minimal_covers(const SimplicialComplex& complex);
// Test oracle: full scan over all 2^n subsets. Intended for n <= ~20.
CoverFamily minimal_covers_bruteforce(const SimplicialComplex& complex);

// Membership in the six-condition family describing the minimal covers of
// the path facet complex; conditions over empty index ranges hold vacuously
// (r = 1 leaves only (1) and (6); r = 2 skips the triple-gap condition).
bool cnt_member(const std::vector<int>& subset, int n, int t);
// All subsets of [n] passing cnt_member, as a sorted family.
CoverFamily cnt_family(int n, int t);
// Equality of minimal_covers(facet_complex(n,t)) with cnt_family(n,t).
bool verify_theorem_minimal_primes(int n, int t);

// Minimum vertex-cover size of the support complex of radical(I).
int height(const MonomialIdeal& ideal);
// Maximum number of pairwise support-disjoint minimal generators
// (exhaustive search).
int m_grade(const MonomialIdeal& ideal);

// Integer sequences i_1 < ... < i_a with (j-1)t + 1 <= i_j <= jt and
// successive gaps at most t.
std::vector<std::vector<int>> enumerate_T(int a, int t);
// Same with the lower bounds raised by b, where n = at + b: the index sets
// of the minimum-size covers. Requires n >= t >= 1.
std::vector<std::vector<int>> enumerate_X(int n, int t);

// The proof maps behind the counting formulas, exposed for elementwise
// bijection checks: subtract j, resp. b*j, from the j-th entry.
std::vector<int> shift_by_position(const std::vector<int>& seq);
std::vector<int> shift_by_step(const std::vector<int>& seq, int b);
// Smallest j with i_j = (j-1)t + 1 (1-based), or len+1 if none.
int tau_statistic(const std::vector<int>& seq, int t);

// Minimal covers of the path facet complex having the minimum cardinality
// height(I_t(L_n)) = a.
CoverFamily min_height_primes(int n, int t);
// Number of such covers; equals C(a + t - b - 1, a).
BigInt multiplicity_squarefree(int n, int t);

}  // namespace pathideal
