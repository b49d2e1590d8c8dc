#include <doctest.h>

#include <algorithm>
#include <set>

#include "supell/construct.hpp"
#include "supell/search.hpp"

using namespace supell;

namespace {

SearchConfig config_q3(std::uint64_t cap, bool pruned) {
    SearchConfig cfg;
    cfg.params = make_params_xs1(make_field(3, 1), 2, 5, 4);
    cfg.delta_cap = cap;
    cfg.pruned = pruned;
    return cfg;
}

std::set<std::pair<std::string, std::string>> point_set(const SearchReport& r) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& pt : r.points)
        out.insert({pt.x.to_string(), pt.y.to_string()});
    return out;
}

}  // namespace

TEST_CASE("candidate stream contains the known x-coordinates") {
    auto cfg = config_q3(6, true);
    auto xs = candidate_x_list(cfg);
    auto has = [&](const RatFunc& x) {
        return std::find(xs.begin(), xs.end(), x) != xs.end();
    };
    auto f3 = cfg.params.field;
    CHECK(has(RatFunc::t_power(f3, 1)));
    CHECK(has(RatFunc::t_power(f3, 3)));
    // (t+1)/1 has a non-t factor of multiplicity 1: excluded
    CHECK_FALSE(has(RatFunc::from_poly(parse_poly(f3, "1,1"))));
    // every candidate obeys the height cap and is in lowest terms
    for (const auto& x : xs) {
        CHECK(x.height() <= 6);
        CHECK(x.den().is_monic());
        if (!x.num().is_constant() || !x.den().is_constant())
            CHECK(poly_gcd(x.num(), x.den()).deg() == 0);
    }
}

TEST_CASE("cap 0 stream is the nonzero constants") {
    auto cfg = config_q3(0, true);
    auto xs = candidate_x_list(cfg);
    REQUIRE(xs.size() == 2);
    CHECK(xs[0] == RatFunc::constant(cfg.params.field, 1));
    CHECK(xs[1] == RatFunc::constant(cfg.params.field, 2));
}

TEST_CASE("y solutions") {
    auto cfg = config_q3(10, true);
    const auto& params = cfg.params;
    auto f3 = params.field;
    {
        auto ys = y_solutions(params, RatFunc::t_power(f3, 1));
        REQUIRE(ys.size() == 2);  // +/- (t^5+1)^2
        RatFunc y = RatFunc::from_poly(parse_poly(f3, "1,0,0,0,0,1").pow(2));
        CHECK(std::find(ys.begin(), ys.end(), y) != ys.end());
        CHECK(std::find(ys.begin(), ys.end(), -y) != ys.end());
        for (auto& yy : ys) CHECK(on_curve(params, RatFunc::t_power(f3, 1), yy));
    }
    CHECK(y_solutions(params, RatFunc::from_poly(parse_poly(f3, "1,1"))).empty());
    {
        // x = 2 = -1 is a root of h: the y = 0 point
        auto ys = y_solutions(params, RatFunc::constant(f3, 2));
        REQUIRE(ys.size() == 1);
        CHECK(ys[0].is_zero());
        CHECK(on_curve(params, RatFunc::constant(f3, 2), ys[0]));
    }
    {
        // q = 2: at most one solution since gcd(r, q-1) = 1
        auto f2 = make_field(2, 1);
        auto params2 = make_params_xs1(f2, 5, 1, 5);
        auto ys = y_solutions(params2, RatFunc::t_power(f2, 1));
        REQUIRE(ys.size() == 1);
        CHECK(ys[0] == RatFunc::from_poly(parse_poly(f2, "1,1")));
    }
    CHECK_THROWS_AS(y_solutions(params, RatFunc::zero(f3)), x_is_zero);
    // the generic evaluation path agrees with the specialized one
    {
        CurveParams generic = params;
        generic.s.reset();
        for (auto x : {RatFunc::t_power(f3, 1), RatFunc::constant(f3, 2),
                       RatFunc::reduce(parse_poly(f3, "1,1"), parse_poly(f3, "0,1"))}) {
            CHECK(y_solutions(params, x) == y_solutions(generic, x));
        }
    }
}

TEST_CASE("oracle equivalence at small caps") {
    for (std::uint64_t cap = 0; cap <= 3; ++cap) {
        auto pruned = enumerate_points(config_q3(cap, true));
        auto oracle = enumerate_points(config_q3(cap, false));
        CHECK(point_set(pruned) == point_set(oracle));
    }
}

TEST_CASE("search finds the constructed points and their mirrors") {
    auto cfg = config_q3(10, true);
    auto report = enumerate_points(cfg);
    auto pts = point_set(report);
    auto f3 = cfg.params.field;
    RatFunc y = RatFunc::from_poly(parse_poly(f3, "1,0,0,0,0,1").pow(2));
    CHECK(pts.count({RatFunc::t_power(f3, 1).to_string(), y.to_string()}));
    CHECK(pts.count({RatFunc::t_power(f3, 1).to_string(), (-y).to_string()}));
    CHECK(pts.count({RatFunc::t_power(f3, 3).to_string(), y.to_string()}));
    CHECK(pts.count({RatFunc::t_power(f3, 3).to_string(), (-y).to_string()}));

    // every reported point is on the curve within the cap
    for (const auto& pt : report.points) {
        CHECK(on_curve(cfg.params, pt.x, pt.y));
        CHECK(pt.height <= 10);
    }

    // bound conformance per p-th power class (d=4, g=5: bounds 6 / 10)
    auto bounds = height_bound(4, 5);
    for (const auto& pt : report.points) {
        std::uint64_t cap_for_class = pt.cls == PthClass::pth_power
                                          ? bounds.pth_power_bound
                                          : bounds.non_pth_power_bound;
        CHECK(pt.height <= cap_for_class);
    }

    // mirror closure
    for (const auto& pt : report.points) {
        RatFunc mx = RatFunc::t_power(f3, 4) / pt.x;
        if (mx.height() <= cfg.delta_cap)
            CHECK(pts.count({mx.to_string(), pt.y.to_string()}));
        else
            CHECK(mx.height() > cfg.delta_cap);
    }

    // gcd structure of every found (u, v)
    for (const auto& pt : report.points) {
        auto gs = gcd_structure_check(pt.x.num(), pt.x.den(), 4, 5);
        CHECK(gs.all_hold);
    }

    // deterministic and job-count independent
    auto cfg8 = cfg;
    cfg8.jobs = 8;
    auto report8 = enumerate_points(cfg8);
    REQUIRE(report8.points.size() == report.points.size());
    for (std::size_t i = 0; i < report.points.size(); ++i) {
        CHECK(report8.points[i].x == report.points[i].x);
        CHECK(report8.points[i].y == report.points[i].y);
    }
}

TEST_CASE("gcd structure check") {
    auto f3 = make_field(3, 1);
    {
        auto gs = gcd_structure_check(parse_poly(f3, "0,1"), Poly::one(f3), 4, 5);
        CHECK(gs.all_hold);
    }
    {
        auto gs = gcd_structure_check(parse_poly(f3, "0,0,0,1"), Poly::one(f3), 4, 5);
        CHECK(gs.all_hold);
    }
    CHECK_THROWS_AS(
        gcd_structure_check(parse_poly(f3, "0,1"), parse_poly(f3, "0,1"), 4, 5),
        not_coprime);
}

TEST_CASE("p-th power classification of x") {
    auto f3 = make_field(3, 1);
    CHECK(classify_pth_power(RatFunc::t_power(f3, 3)) == PthClass::pth_power);
    CHECK(classify_pth_power(RatFunc::t_power(f3, 1)) == PthClass::not_pth_power);
    CHECK(classify_pth_power(RatFunc::reduce(parse_poly(f3, "1,0,0,1"),
                                             parse_poly(f3, "0,0,0,1"))) ==
          PthClass::pth_power);
    CHECK_THROWS_AS(classify_pth_power(RatFunc::zero(f3)), x_is_zero);
}

TEST_CASE("budget guard") {
    auto cfg = config_q3(10, true);
    cfg.budget = 10;
    CHECK_THROWS_AS(enumerate_points(cfg), cap_too_large);
    try {
        enumerate_points(cfg);
    } catch (const cap_too_large& e) {
        CHECK(e.estimate > e.budget);
    }
}

TEST_CASE("default config uses the proven bound") {
    auto cfg = default_search_config(make_params_xs1(make_field(3, 1), 2, 5, 4));
    CHECK(cfg.delta_cap == 10);
    // genus 1 family: no default cap exists
    CHECK_THROWS_AS(default_search_config(make_params_xs1(make_field(3, 1), 2, 1, 4)),
                    genus_too_small);
}
