#include <doctest.h>

#include <stdexcept>

#include "pathideal/alexander.hpp"
#include "test_util.hpp"

using namespace pathideal;
using testutil::ideal;
using testutil::mono;

TEST_CASE("dual of small path ideals") {
    CHECK(alexander_dual(path_ideal(3, 2)) == ideal(3, {"x2", "x1*x3"}));
    CHECK(alexander_dual(ideal(4, {"x1*x2*x3*x4"})) == ideal(4, {"x1", "x2", "x3", "x4"}));
    CHECK(alexander_dual(alexander_dual(path_ideal(7, 3))) == path_ideal(7, 3));
    CHECK_THROWS_AS(alexander_dual(ideal(2, {"x1^2"})), std::invalid_argument);
    CHECK_THROWS_AS(alexander_dual(MonomialIdeal::zero(2)), std::invalid_argument);
}

TEST_CASE("duality is an involution on the test family") {
    for (int n = 1; n <= 9; ++n)
        for (int t = 1; t <= n; ++t) {
            MonomialIdeal i = path_ideal(n, t);
            CHECK(alexander_dual(alexander_dual(i)) == i);
        }
}

TEST_CASE("membership in the dual means covering") {
    for (int n = 2; n <= 10; ++n)
        for (int t = 2; t <= n; ++t) {
            MonomialIdeal dual = alexander_dual(path_ideal(n, t));
            SimplicialComplex complex = facet_complex(n, t);
            for (unsigned mask = 1; mask < (1u << n); ++mask) {
                std::vector<int> subset;
                for (int v = 0; v < n; ++v)
                    if (mask & (1u << v)) subset.push_back(v + 1);
                bool covers_all = true;
                for (unsigned f : complex.facet_masks())
                    if ((f & mask) == 0) covers_all = false;
                CHECK(dual.contains(Monomial::from_support(n, subset)) == covers_all);
            }
        }
}

TEST_CASE("largest dual generator degree") {
    CHECK(deg_max(alexander_dual(path_ideal(7, 3))) == 3);
    CHECK(cnt_member({1, 4, 5}, 7, 3));  // a witness cover of that size
    CHECK(deg_max(alexander_dual(path_ideal(4, 4))) == 1);
    CHECK(deg_max(alexander_dual(path_ideal(8, 3))) == 4);
    for (int n = 2; n <= 14; ++n)
        for (int t = 2; t <= n; ++t) CHECK(verify_deg_formula(n, t));
}
