#include <doctest.h>

#include <stdexcept>

#include "pathideal/alexander.hpp"
#include "pathideal/decomposition.hpp"
#include "pathideal/hilbert.hpp"
#include "test_util.hpp"

using namespace pathideal;
using testutil::ideal;

TEST_CASE("small decompositions") {
    auto comps = irreducible_decomposition(ideal(2, {"x1*x2"}));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == ideal(2, {"x1"}));
    CHECK(comps[1] == ideal(2, {"x2"}));

    comps = irreducible_decomposition(ideal(2, {"x1^2", "x1*x2"}));
    REQUIRE(comps.size() == 2);
    MonomialIdeal meet = intersect(comps[0], comps[1]);
    CHECK(meet == ideal(2, {"x1^2", "x1*x2"}));
    bool seen_x1 = false, seen_mixed = false;
    for (const auto& q : comps) {
        if (q == ideal(2, {"x1"})) seen_x1 = true;
        if (q == ideal(2, {"x1^2", "x2"})) seen_mixed = true;
    }
    CHECK(seen_x1);
    CHECK(seen_mixed);

    comps = irreducible_decomposition(ideal(3, {"x1^2*x2^2*x3^2"}));
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == ideal(3, {"x1^2"}));
    CHECK(comps[1] == ideal(3, {"x2^2"}));
    CHECK(comps[2] == ideal(3, {"x3^2"}));

    CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal::zero(2)), std::invalid_argument);
    CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal::unit_ideal(2)),
                    std::invalid_argument);
}

TEST_CASE("decomposition intersects back and is irredundant") {
    std::vector<MonomialIdeal> samples = {
        path_ideal(5, 2),
        power(path_ideal(5, 2), 2),
        power(path_ideal(6, 3), 2),
        ideal(3, {"x1^2", "x1*x2", "x2^3", "x2*x3^2"}),
        ideal(4, {"x1*x3", "x2*x4", "x1^2*x2"}),
        alexander_dual(path_ideal(6, 2)),
    };
    for (const auto& i : samples) {
        auto comps = irreducible_decomposition(i);
        MonomialIdeal meet = MonomialIdeal::unit_ideal(i.ambient());
        bool first = true;
        for (const auto& q : comps) {
            for (const auto& g : q.generators()) CHECK(g.is_pure_power());
            meet = first ? q : intersect(meet, q);
            first = false;
        }
        CHECK(meet == i);
        // no component absorbs the intersection of the others
        for (size_t skip = 0; skip < comps.size(); ++skip) {
            if (comps.size() == 1) break;
            MonomialIdeal others = MonomialIdeal::unit_ideal(i.ambient());
            bool started = false;
            for (size_t j = 0; j < comps.size(); ++j) {
                if (j == skip) continue;
                others = started ? intersect(others, comps[j]) : comps[j];
                started = true;
            }
            bool inside = true;
            for (const auto& g : others.generators())
                if (!comps[skip].contains(g)) inside = false;
            CHECK_FALSE(inside);
        }
    }
}

TEST_CASE("associated primes") {
    CHECK(associated_primes(path_ideal(3, 2)) == make_cover_family(3, {{2}, {1, 3}}));
    CHECK(associated_primes(ideal(2, {"x1^4"})) == make_cover_family(2, {{1}}));
    CoverFamily c73 = cnt_family(7, 3);
    CHECK(associated_primes(path_ideal(7, 3)) == c73);
    CHECK(associated_primes(power(path_ideal(7, 3), 2)) == c73);
    // minimal members agree with the cover enumeration on squarefree input
    for (int n = 2; n <= 7; ++n)
        for (int t = 1; t <= n; ++t)
            CHECK(associated_primes(path_ideal(n, t)) ==
                  minimal_covers(facet_complex(n, t)));
}

TEST_CASE("normal torsion-freeness at desk scale") {
    CHECK(verify_ntf(4, 2, 3));
    CHECK(verify_ntf(5, 5, 3));
    CHECK(verify_ntf(7, 3, 2));
}

TEST_CASE("localization lengths") {
    CHECK(local_length(path_ideal(3, 2), PrimeSupport(3, {2})) == 1);
    CHECK(local_length(ideal(1, {"x1^3"}), PrimeSupport(1, {1})) == 3);
    CHECK(local_length(power(path_ideal(4, 2), 2), PrimeSupport(4, {2, 3})) == 3);
    // embedded or non-associated supports are rejected
    CHECK_THROWS_AS(local_length(ideal(2, {"x1"}), PrimeSupport(2, {1, 2})),
                    std::invalid_argument);
    CHECK_THROWS_AS(local_length(path_ideal(4, 2), PrimeSupport(4, {4})),
                    std::invalid_argument);
}

TEST_CASE("localization lengths add up to the multiplicity") {
    std::vector<MonomialIdeal> samples = {
        path_ideal(5, 2),        power(path_ideal(5, 2), 2), power(path_ideal(6, 3), 2),
        power(path_ideal(4, 2), 3), ideal(3, {"x1^2", "x2^2", "x1*x2*x3"}),
    };
    for (const auto& i : samples) {
        int h = height(i);
        CoverFamily primes = minimal_covers(support_complex(i.radical()));
        BigInt total = 0;
        for (const auto& p : primes.covers)
            if (p.size() == h) total += local_length(i, p);
        CHECK(total == multiplicity(i));
    }
}
