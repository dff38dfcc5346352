#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pathideal/ideal.hpp"
#include "pathideal/simplicial.hpp"

namespace pathideal {

// Graded Betti numbers of a quotient S/I, indexed by (homological index i,
// internal degree j). Finitely many nonzero entries; beta(0,0) = 1.
struct BettiTable {
    std::map<std::pair<int, int>, long long> entries;

    long long value(int i, int j) const;
    int projective_dimension() const;  // max i with a nonzero entry
    int quotient_regularity() const;   // max j - i over nonzero entries
    // Macaulay-style triangle: column i, row j - i.
    std::string markdown() const;

    friend bool operator==(const BettiTable& a, const BettiTable& b) {
        return a.entries == b.entries;
    }
};

// Complex on [n] whose faces are exactly the monomial supports outside the
// ideal; its Stanley-Reisner ideal is the input. Squarefree proper input.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal);

// Dimensions of the reduced rational homology of the restriction of the
// complex to the vertex set sigma; entry k holds dim of homology in degree
// k - 1 (so the first entry is the reduced degree -1 part). Ranks are exact
// (fraction-free integer elimination).
std::vector<long long> reduced_homology_dims(const SimplicialComplex& complex,
                                             const std::vector<int>& sigma);

// beta_{i,j}(S/I) = sum over |sigma| = j of dim H~_{j-i-1} of the
// restriction. Restriction scan over all vertex subsets; ambient capped at
// 12 variables. Cone restrictions are skipped (acyclic).
BettiTable betti_table(const MonomialIdeal& ideal);

int projective_dimension(const MonomialIdeal& ideal);
// Castelnuovo-Mumford regularity of the ideal itself (its resolution is the
// shifted truncation of the quotient's).
int regularity(const MonomialIdeal& ideal);

// Closed form 2p / 2p+1 for pd(S/I_t(L_n)) with n = (t+1)p + q, 0 <= q <= t.
int pd_formula_value(int n, int t);

}  // namespace pathideal
