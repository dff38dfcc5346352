#include <doctest.h>

#include <stdexcept>

#include "pathideal/simplicial.hpp"
#include "test_util.hpp"

using namespace pathideal;
using testutil::ideal;

namespace {

// independent oracle: minimal nonfaces by scanning every subset
std::vector<std::vector<int>> nonfaces_bruteforce(const SimplicialComplex& complex) {
    int n = complex.vertex_count();
    auto contained = [&](unsigned mask) {
        for (unsigned f : complex.facet_masks())
            if ((mask & f) == mask) return true;
        return false;
    };
    std::vector<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (contained(mask)) continue;
        bool minimal = true;
        for (unsigned bits = mask; bits; bits &= bits - 1)
            if (!contained(mask ^ (bits & (~bits + 1)))) minimal = false;
        if (!minimal) continue;
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) s.push_back(v + 1);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace

TEST_CASE("path ideal generators") {
    CHECK(path_ideal(4, 2) == ideal(4, {"x1*x2", "x2*x3", "x3*x4"}));
    CHECK(path_ideal(4, 2).str() == "[x1*x2, x2*x3, x3*x4]");
    CHECK(path_ideal(5, 5) == ideal(5, {"x1*x2*x3*x4*x5"}));
    CHECK(path_ideal(3, 1) == ideal(3, {"x1", "x2", "x3"}));
    CHECK_THROWS_AS(path_ideal(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(path_ideal(3, 0), std::invalid_argument);
}

TEST_CASE("facet complex") {
    SimplicialComplex d53 = facet_complex(5, 3);
    CHECK(d53.facets() == std::vector<std::vector<int>>{{1, 2, 3}, {2, 3, 4}, {3, 4, 5}});
    CHECK(facet_complex(4, 4).facets() == std::vector<std::vector<int>>{{1, 2, 3, 4}});
    CHECK(facet_ideal(facet_complex(6, 2)) == path_ideal(6, 2));
    CHECK(to_json_string(facet_complex(3, 2)) ==
          "{\"n\": 3, \"facets\": [[1, 2], [2, 3]]}");
}

TEST_CASE("facet ideal round trip") {
    for (int n = 1; n <= 9; ++n)
        for (int t = 1; t <= n; ++t) {
            CHECK(facet_ideal(facet_complex(n, t)) == path_ideal(n, t));
            CHECK(support_complex(path_ideal(n, t)) == facet_complex(n, t));
        }
}

TEST_CASE("from_facets keeps maximal sets and rejects empties") {
    SimplicialComplex c = SimplicialComplex::from_facets(3, {{1}, {1, 2}, {3}, {1, 2}});
    CHECK(c.facets() == std::vector<std::vector<int>>{{1, 2}, {3}});
    CHECK_THROWS_AS(SimplicialComplex::from_facets(3, {{1}, {}}), std::invalid_argument);
}

TEST_CASE("minimal nonfaces") {
    CHECK(minimal_nonfaces(facet_complex(4, 2)) ==
          std::vector<std::vector<int>>{{1, 3}, {1, 4}, {2, 4}});
    CHECK(minimal_nonfaces(facet_complex(4, 4)).empty());
    CHECK(minimal_nonfaces(facet_complex(5, 3)) ==
          std::vector<std::vector<int>>{{1, 4}, {1, 5}, {2, 5}});
    for (int n = 2; n <= 8; ++n)
        for (int t = 1; t <= n; ++t) {
            SimplicialComplex c = facet_complex(n, t);
            CHECK(minimal_nonfaces(c) == nonfaces_bruteforce(c));
        }
}

TEST_CASE("flag description of the nonfaces") {
    // minimal nonfaces of the path complex are exactly the distant pairs
    for (int n = 2; n <= 12; ++n)
        for (int t = 2; t <= n; ++t) {
            std::vector<Monomial> pairs;
            for (int i = 1; i <= n; ++i)
                for (int j = i + t; j <= n; ++j)
                    pairs.push_back(Monomial::from_support(n, {i, j}));
            CHECK(stanley_reisner_ideal(facet_complex(n, t)) ==
                  MonomialIdeal::from_generators(n, std::move(pairs)));
        }
}

TEST_CASE("leaves") {
    SimplicialComplex single = facet_complex(4, 4);
    CHECK(is_leaf(single, {1, 2, 3, 4}));
    SimplicialComplex d73 = facet_complex(7, 3);
    CHECK(is_good_leaf(d73, {1, 2, 3}));
    CHECK(is_good_leaf(d73, {5, 6, 7}));
    CHECK_FALSE(is_leaf(d73, {3, 4, 5}));
    CHECK_THROWS_AS(is_leaf(d73, {1, 2, 4}), std::invalid_argument);
}

TEST_CASE("first facet is a good leaf of every subcollection containing it") {
    for (int n : {5, 6, 7})
        for (int t = 2; t <= n; ++t) {
            SimplicialComplex full = facet_complex(n, t);
            int r = full.facet_count();
            for (unsigned sel = 1; sel < (1u << r); sel += 2) {  // subsets containing facet 0
                std::vector<std::vector<int>> facets;
                for (int i = 0; i < r; ++i)
                    if (sel & (1u << i)) facets.push_back(full.facets()[static_cast<size_t>(i)]);
                SimplicialComplex sub =
                    SimplicialComplex::from_facets(n, facets);
                if (!sub.is_face(full.facets()[0])) continue;  // absorbed by a larger facet
                CHECK(is_good_leaf(sub, full.facets()[0]));
            }
        }
}

TEST_CASE("path complexes are simplicial forests") {
    CHECK(is_simplicial_forest(facet_complex(7, 3)));
    for (int n = 1; n <= 10; ++n)
        for (int t = 1; t <= n; ++t) {
            CHECK(is_simplicial_forest(facet_complex(n, t)));
            // connected (a tree) as soon as consecutive windows overlap
            if (t >= 2) CHECK(is_connected(facet_complex(n, t)));
        }
    CHECK_FALSE(is_connected(facet_complex(3, 1)));
    SimplicialComplex big = SimplicialComplex::from_facets(
        31, {{1, 2},  {2, 3},   {3, 4},   {4, 5},   {5, 6},   {6, 7},   {7, 8},
             {8, 9},  {9, 10},  {10, 11}, {11, 12}, {12, 13}, {13, 14}, {14, 15},
             {15, 16}, {16, 17}, {17, 18}, {18, 19}, {19, 20}, {20, 21}, {21, 22}});
    CHECK_THROWS_AS(is_simplicial_forest(big), std::invalid_argument);
}
