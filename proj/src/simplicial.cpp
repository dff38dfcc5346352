#include "pathideal/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pathideal {

namespace {

unsigned to_mask(int n, const std::vector<int>& subset) {
    unsigned mask = 0;
    for (int v : subset) {
        if (v < 1 || v > n) throw std::invalid_argument("vertex out of range");
        mask |= 1u << (v - 1);
    }
    return mask;
}

std::vector<int> from_mask(unsigned mask) {
    std::vector<int> out;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1u) out.push_back(i + 1);
    return out;
}

bool subset_less(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

SimplicialComplex::SimplicialComplex(int n, std::vector<std::vector<int>> facets)
    : n_(n), facets_(std::move(facets)) {
    masks_.reserve(facets_.size());
    for (const auto& f : facets_) masks_.push_back(to_mask(n_, f));
}

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<std::vector<int>> facets) {
    if (n <= 0 || n > 31)
        throw std::invalid_argument("SimplicialComplex: vertex count must be in 1..31");
    std::vector<unsigned> masks;
    masks.reserve(facets.size());
    for (auto& f : facets) {
        if (f.empty()) throw std::invalid_argument("SimplicialComplex: empty facet");
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        masks.push_back(to_mask(n, f));
    }
    // keep inclusion-maximal sets only
    std::vector<std::vector<int>> kept;
    for (size_t i = 0; i < facets.size(); ++i) {
        bool maximal = true;
        for (size_t j = 0; j < facets.size() && maximal; ++j) {
            if (i == j) continue;
            if ((masks[i] | masks[j]) == masks[j] && masks[i] != masks[j]) maximal = false;
            if (masks[i] == masks[j] && j < i) maximal = false;  // dedup
        }
        if (maximal) kept.push_back(facets[i]);
    }
    std::sort(kept.begin(), kept.end());
    return SimplicialComplex(n, std::move(kept));
}

bool SimplicialComplex::is_face(const std::vector<int>& subset) const {
    unsigned mask = to_mask(n_, subset);
    for (unsigned f : masks_)
        if ((mask & f) == mask) return true;
    return false;
}

std::string SimplicialComplex::str() const {
    std::ostringstream os;
    os << "<";
    for (size_t i = 0; i < facets_.size(); ++i) {
        if (i) os << ", ";
        os << "{";
        for (size_t j = 0; j < facets_[i].size(); ++j) {
            if (j) os << ",";
            os << facets_[i][j];
        }
        os << "}";
    }
    os << ">";
    return os.str();
}

MonomialIdeal path_ideal(int n, int t) {
    if (t < 1 || t > n)
        throw std::invalid_argument("path_ideal: need 1 <= t <= n, got t=" + std::to_string(t) +
                                    ", n=" + std::to_string(n));
    std::vector<Monomial> gens;
    for (int i = 1; i + t - 1 <= n; ++i) {
        std::vector<int> window(static_cast<size_t>(t));
        std::iota(window.begin(), window.end(), i);
        gens.push_back(Monomial::from_support(n, window));
    }
    return MonomialIdeal::from_generators(n, std::move(gens));
}

SimplicialComplex facet_complex(int n, int t) {
    if (t < 1 || t > n)
        throw std::invalid_argument("facet_complex: need 1 <= t <= n, got t=" +
                                    std::to_string(t) + ", n=" + std::to_string(n));
    std::vector<std::vector<int>> facets;
    for (int i = 1; i + t - 1 <= n; ++i) {
        std::vector<int> window(static_cast<size_t>(t));
        std::iota(window.begin(), window.end(), i);
        facets.push_back(std::move(window));
    }
    return SimplicialComplex::from_facets(n, std::move(facets));
}

MonomialIdeal facet_ideal(const SimplicialComplex& complex) {
    std::vector<Monomial> gens;
    gens.reserve(complex.facets().size());
    for (const auto& f : complex.facets())
        gens.push_back(Monomial::from_support(complex.vertex_count(), f));
    return MonomialIdeal::from_generators(complex.vertex_count(), std::move(gens));
}

SimplicialComplex support_complex(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw std::invalid_argument("support_complex: zero ideal");
    if (!ideal.is_squarefree())
        throw std::invalid_argument("support_complex: ideal is not squarefree");
    std::vector<std::vector<int>> facets;
    facets.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) facets.push_back(g.support());
    return SimplicialComplex::from_facets(ideal.ambient(), std::move(facets));
}

std::vector<std::vector<int>> minimal_nonfaces(const SimplicialComplex& complex) {
    int n = complex.vertex_count();
    const auto& facets = complex.facet_masks();
    auto contained_in_some_facet = [&](unsigned mask) {
        for (unsigned f : facets)
            if ((mask & f) == mask) return true;
        return false;
    };
    // ascending-cardinality scan; prune supersets of found nonfaces via the
    // minimality test (all maximal proper subsets must be faces)
    std::vector<unsigned> result_masks;
    unsigned full = n == 31 ? 0x7fffffffu : ((1u << n) - 1);
    for (unsigned mask = 1; mask <= full; ++mask) {
        if (contained_in_some_facet(mask)) continue;
        bool minimal = true;
        for (unsigned bits = mask; bits && minimal; bits &= bits - 1) {
            unsigned sub = mask & ~(bits & (~bits + 1));
            if (sub != 0 && !contained_in_some_facet(sub)) minimal = false;
            if (sub == 0) continue;  // the empty set is always a face
        }
        if (minimal) result_masks.push_back(mask);
    }
    std::vector<std::vector<int>> out;
    out.reserve(result_masks.size());
    for (unsigned m : result_masks) out.push_back(from_mask(m));
    std::sort(out.begin(), out.end(), subset_less);
    return out;
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex) {
    std::vector<Monomial> gens;
    for (const auto& nf : minimal_nonfaces(complex))
        gens.push_back(Monomial::from_support(complex.vertex_count(), nf));
    return MonomialIdeal::from_generators(complex.vertex_count(), std::move(gens));
}

namespace {

int find_facet(const SimplicialComplex& complex, const std::vector<int>& facet) {
    std::vector<int> sorted = facet;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < complex.facets().size(); ++i)
        if (complex.facets()[i] == sorted) return static_cast<int>(i);
    throw std::invalid_argument("not a facet of the complex");
}

bool mask_collection_has_leaf(const std::vector<unsigned>& masks) {
    size_t r = masks.size();
    if (r == 1) return true;
    for (size_t f = 0; f < r; ++f) {
        for (size_t g = 0; g < r; ++g) {
            if (g == f) continue;
            bool absorbs = true;
            for (size_t h = 0; h < r && absorbs; ++h) {
                if (h == f) continue;
                unsigned hf = masks[h] & masks[f];
                if ((hf & masks[g]) != hf) absorbs = false;
            }
            if (absorbs) return true;  // f is a leaf (witness g)
        }
    }
    return false;
}

}  // namespace

bool is_leaf(const SimplicialComplex& complex, const std::vector<int>& facet) {
    int fi = find_facet(complex, facet);
    const auto& masks = complex.facet_masks();
    if (masks.size() == 1) return true;
    unsigned fm = masks[static_cast<size_t>(fi)];
    for (size_t g = 0; g < masks.size(); ++g) {
        if (static_cast<int>(g) == fi) continue;
        bool absorbs = true;
        for (size_t h = 0; h < masks.size() && absorbs; ++h) {
            if (static_cast<int>(h) == fi) continue;
            unsigned hf = masks[h] & fm;
            if ((hf & masks[g]) != hf) absorbs = false;
        }
        if (absorbs) return true;
    }
    return false;
}

bool is_good_leaf(const SimplicialComplex& complex, const std::vector<int>& facet) {
    if (!is_leaf(complex, facet)) return false;
    int fi = find_facet(complex, facet);
    const auto& masks = complex.facet_masks();
    unsigned fm = masks[static_cast<size_t>(fi)];
    std::vector<unsigned> inters;
    for (size_t h = 0; h < masks.size(); ++h)
        if (static_cast<int>(h) != fi) inters.push_back(masks[h] & fm);
    std::sort(inters.begin(), inters.end(), [](unsigned a, unsigned b) {
        return std::popcount(a) > std::popcount(b);
    });
    for (size_t i = 0; i + 1 < inters.size(); ++i)
        if ((inters[i] & inters[i + 1]) != inters[i + 1]) return false;
    return true;
}

bool is_simplicial_forest(const SimplicialComplex& complex) {
    int r = complex.facet_count();
    if (r > 20)
        throw std::invalid_argument(
            "is_simplicial_forest: subcollection scan capped at 20 facets, got " +
            std::to_string(r));
    const auto& masks = complex.facet_masks();
    for (unsigned sel = 1; sel < (1u << r); ++sel) {
        std::vector<unsigned> sub;
        for (int i = 0; i < r; ++i)
            if (sel & (1u << i)) sub.push_back(masks[static_cast<size_t>(i)]);
        if (!mask_collection_has_leaf(sub)) return false;
    }
    return true;
}

bool is_connected(const SimplicialComplex& complex) {
    int r = complex.facet_count();
    if (r == 0) return false;
    const auto& masks = complex.facet_masks();
    std::vector<char> seen(static_cast<size_t>(r), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        for (int j = 0; j < r; ++j)
            if (!seen[static_cast<size_t>(j)] &&
                (masks[static_cast<size_t>(cur)] & masks[static_cast<size_t>(j)]) != 0) {
                seen[static_cast<size_t>(j)] = 1;
                stack.push_back(j);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

std::string to_json_string(const SimplicialComplex& complex) {
    std::ostringstream os;
    os << "{\"n\": " << complex.vertex_count() << ", \"facets\": [";
    for (size_t i = 0; i < complex.facets().size(); ++i) {
        if (i) os << ", ";
        os << "[";
        for (size_t j = 0; j < complex.facets()[i].size(); ++j) {
            if (j) os << ", ";
            os << complex.facets()[i][j];
        }
        os << "]";
    }
    os << "]}";
    return os.str();
}

}  // namespace pathideal
