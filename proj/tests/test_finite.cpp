#include <catch2/catch_amalgamated.hpp>

#include "riskshare/choquet.hpp"
#include "riskshare/errors.hpp"
#include "riskshare/finite.hpp"

using namespace riskshare;

TEST_CASE("space construction and exact choquet") {
    auto sp = make_space({1, 1, 1, 1});
    CHECK(sp.total == 4);
    CHECK(sp.prob(0) == 0.25);
    CHECK_THROWS_AS(make_space({1, 0}), InvalidParameter);

    auto sq = make_distortion(Family::power, {{"alpha", 2.0}});
    // Bernoulli(1/2) on a refined space
    CHECK(choquet_on_space(sq, sp, {1.0, 1.0, 0.0, 0.0}) == Catch::Approx(0.25).margin(1e-15));
    // agrees with the atom-based evaluator
    auto d = to_distribution(sp, {1.0, 1.0, 0.0, 0.0});
    CHECK(choquet_finite(sq, d.atoms) == Catch::Approx(0.25).margin(1e-15));
    CHECK(d.atoms.size() == 2);

    auto wsp = make_space({2, 1, 1});
    CHECK(choquet_on_space(make_distortion(Family::dual_power, {{"alpha", 1.0}}), wsp,
                           {1.0, 2.0, 3.0}) == Catch::Approx(0.5 + 0.5 + 0.75).margin(1e-15));
    CHECK_THROWS_AS(choquet_on_space(sq, wsp, {1.0, 2.0}), ShapeMismatch);
}

TEST_CASE("dependence scan finds witnesses") {
    // antithetic pair is counter-monotonic
    Values x{0.0, 1.0, 2.0};
    Values mx{0.0, -1.0, -2.0};
    CHECK_FALSE(dependence_check({x, mx}, Dependence::counter_monotonic).has_value());
    CHECK(dependence_check({x, mx}, Dependence::comonotonic).has_value());

    // identical nondegenerate components are comonotonic, not counter-monotonic
    CHECK_FALSE(dependence_check({x, x}, Dependence::comonotonic).has_value());
    auto w = dependence_check({x, x}, Dependence::counter_monotonic);
    REQUIRE(w.has_value());
    CHECK(w->comp_i == 0);
    CHECK(w->comp_j == 1);

    // indicator pair on disjoint sets
    Values a{1.0, 1.0, 0.0, 0.0};
    Values b{0.0, 0.0, 1.0, 1.0};
    CHECK_FALSE(dependence_check({a, b}, Dependence::counter_monotonic).has_value());

    // constants are compatible with everything
    Values c{0.5, 0.5, 0.5, 0.5};
    CHECK_FALSE(dependence_check({a, c}, Dependence::counter_monotonic).has_value());
    CHECK_FALSE(dependence_check({a, c}, Dependence::comonotonic).has_value());

    // three components where only one pair clashes
    Values e{0.0, 1.0, 0.0, 0.0};
    auto w2 = dependence_check({a, c, e}, Dependence::counter_monotonic);
    REQUIRE(w2.has_value());
    CHECK(w2->comp_i == 0);
    CHECK(w2->comp_j == 2);

    CHECK_THROWS_AS(dependence_check({a}, Dependence::comonotonic), InvalidParameter);
    CHECK_THROWS_AS(dependence_check({a, b}, Dependence::unconstrained), InvalidParameter);
}
