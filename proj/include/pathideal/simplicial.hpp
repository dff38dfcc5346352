#pragma once

#include <string>
#include <vector>

#include "pathideal/ideal.hpp"

namespace pathideal {

// Simplicial complex on the vertex set [n], held by its facet list. Facets
// are sorted index lists; the list itself is sorted and inclusion-free.
class SimplicialComplex {
public:
    // Keeps only the inclusion-maximal sets of the given list. Every set
    // must be a nonempty subset of [n].
    static SimplicialComplex from_facets(int n, std::vector<std::vector<int>> facets);

    int vertex_count() const { return n_; }
    const std::vector<std::vector<int>>& facets() const { return facets_; }
    int facet_count() const { return static_cast<int>(facets_.size()); }

    // Facets as bitmasks (bit i-1 for vertex i); n must be <= 31.
    const std::vector<unsigned>& facet_masks() const { return masks_; }
    bool is_face(const std::vector<int>& subset) const;

    std::string str() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.n_ == b.n_ && a.facets_ == b.facets_;
    }

private:
    SimplicialComplex(int n, std::vector<std::vector<int>> facets);
    int n_ = 0;
    std::vector<std::vector<int>> facets_;
    std::vector<unsigned> masks_;
};

// Generators u_i = x_i ... x_{i+t-1}, i = 1..n-t+1; requires 1 <= t <= n.
MonomialIdeal path_ideal(int n, int t);
// Facets {i, ..., i+t-1}; its facet ideal is path_ideal(n, t).
SimplicialComplex facet_complex(int n, int t);
// Ideal generated by x_F over the facets of the complex.
MonomialIdeal facet_ideal(const SimplicialComplex& complex);
// Complex whose facets are the supports of the minimal generators; input
// must be squarefree and nonzero.
SimplicialComplex support_complex(const MonomialIdeal& ideal);

// All inclusion-minimal subsets of [n] contained in no facet, sorted by
// (size, lex).
std::vector<std::vector<int>> minimal_nonfaces(const SimplicialComplex& complex);
// Ideal generated by x_F over the minimal nonfaces.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex);

// Leaf: F joined with some other facet G absorbing every intersection
// H cap F. A good leaf additionally has {F cap H : H facet} totally ordered
// by inclusion. `facet` must be a facet of the complex.
bool is_leaf(const SimplicialComplex& complex, const std::vector<int>& facet);
bool is_good_leaf(const SimplicialComplex& complex, const std::vector<int>& facet);
// Every nonempty subcollection has a leaf. Exponential scan; rejects
// complexes with more than 20 facets.
bool is_simplicial_forest(const SimplicialComplex& complex);
bool is_connected(const SimplicialComplex& complex);

std::string to_json_string(const SimplicialComplex& complex);

}  // namespace pathideal
