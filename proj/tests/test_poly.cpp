#include <doctest.h>

#include "supell/factor.hpp"
#include "supell/poly.hpp"

using namespace supell;

namespace {

std::uint64_t rng_state = 0x1234abcdull;
std::uint64_t rnd() {
    rng_state = rng_state * 6364136223846793005ull + 1442695040888963407ull;
    return rng_state >> 17;
}

Poly random_poly(const FieldPtr& f, int max_deg) {
    std::vector<felem> c(rnd() % (max_deg + 1) + 1);
    for (auto& x : c) x = rnd() % f->q();
    return Poly(f, std::move(c));
}

Poly random_nonzero(const FieldPtr& f, int max_deg) {
    for (;;) {
        Poly p = random_poly(f, max_deg);
        if (!p.is_zero()) return p;
    }
}

}  // namespace

TEST_CASE("arithmetic examples") {
    auto f3 = make_field(3, 1);
    auto f2 = make_field(2, 1);
    Poly t1 = parse_poly(f3, "1,1");  // t+1
    Poly t2 = parse_poly(f3, "2,1");  // t+2
    CHECK((t1 * t2).to_string() == "2,0,1");  // t^2+2
    CHECK((parse_poly(f2, "0,1,1") + parse_poly(f2, "1,0,1")).to_string() ==
          "1,1");
    CHECK(parse_poly(f3, "1,0,0,0,0,1").eval(2) == 0);  // t^5+1 at t=2
}

TEST_CASE("divrem round trip") {
    auto f5 = make_field(5, 1);
    for (int i = 0; i < 300; ++i) {
        Poly a = random_poly(f5, 12);
        Poly b = random_nonzero(f5, 6);
        auto [q, r] = divrem(a, b);
        CHECK(q * b + r == a);
        CHECK(r.deg() < b.deg());
    }
    CHECK_THROWS_AS(divrem(random_poly(f5, 3), Poly::zero(f5)),
                    division_by_zero);
}

TEST_CASE("gcd examples") {
    auto f3 = make_field(3, 1);
    auto f2 = make_field(2, 1);
    CHECK(poly_gcd(parse_poly(f3, "2,0,1"), parse_poly(f3, "0,1,1")).to_string() ==
          "1,1");  // gcd(t^2-1, t^2+t) = t+1
    Poly g = parse_poly(f3, "2,0,2,1");
    CHECK(poly_gcd(g, Poly::zero(f3)) == g.monic());
    CHECK(poly_gcd(parse_poly(f2, "1,0,1"), parse_poly(f2, "1,1")).to_string() ==
          "1,1");  // t^2+1 = (t+1)^2 in char 2
    CHECK_THROWS_AS(poly_gcd(Poly::zero(f3), Poly::zero(f3)), both_zero);
}

TEST_CASE("factorization examples") {
    auto f3 = make_field(3, 1);
    auto f2 = make_field(2, 1);
    {
        auto fac = factorize(parse_poly(f3, "1,0,0,1"));  // t^3+1 = (t+1)^3
        CHECK(fac.unit == 1);
        REQUIRE(fac.factors.size() == 1);
        CHECK(fac.factors[0].first.to_string() == "1,1");
        CHECK(fac.factors[0].second == 3);
    }
    {
        auto fac = factorize(parse_poly(f3, "1,0,1"));  // t^2+1 irreducible
        REQUIRE(fac.factors.size() == 1);
        CHECK(fac.factors[0].first.to_string() == "1,0,1");
        CHECK(fac.factors[0].second == 1);
    }
    {
        // t^4+t = t(t+1)(t^2+t+1) over F_2
        auto fac = factorize(parse_poly(f2, "0,1,0,0,1"));
        REQUIRE(fac.factors.size() == 3);
        CHECK(fac.factors[0].first.to_string() == "0,1");
        CHECK(fac.factors[1].first.to_string() == "1,1");
        CHECK(fac.factors[2].first.to_string() == "1,1,1");
        for (auto& [p, m] : fac.factors) CHECK(m == 1);
    }
    CHECK_THROWS_AS(factorize(Poly::zero(f3)), zero_input);
}

TEST_CASE("factorize reassembly invariant") {
    struct { std::uint64_t p; std::uint32_t k; } fields[] = {
        {2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}};
    for (auto [p, k] : fields) {
        auto f = make_field(p, k);
        // high trial count spread over the five fields; degrees up to 30
        for (int i = 0; i < 2000; ++i) {
            Poly poly = random_nonzero(f, 30);
            auto fac = factorize(poly);
            CHECK(fac.reassemble(f) == poly);
            for (auto& [g, m] : fac.factors) {
                CHECK(g.is_monic());
                CHECK(m >= 1);
            }
            // factors pairwise distinct and sorted
            for (std::size_t j = 1; j < fac.factors.size(); ++j)
                CHECK(canon_less(fac.factors[j - 1].first, fac.factors[j].first));
        }
    }
}

TEST_CASE("radical") {
    auto f3 = make_field(3, 1);
    Poly t = Poly::variable(f3);
    Poly t1 = parse_poly(f3, "1,1");
    CHECK(radical(t.pow(3) * t1.pow(2)) == t * t1);  // t(t+1) = t^2+t
    CHECK(radical(parse_poly(f3, "1,0,0,1")) == t1); // (t+1)^3
    CHECK(radical(Poly::one(f3)) == Poly::one(f3));
    CHECK_THROWS_AS(radical(Poly::zero(f3)), zero_input);

    // radical properties on random inputs, char-p p-th powers included
    for (int i = 0; i < 400; ++i) {
        Poly poly = random_nonzero(f3, 12);
        Poly rad = radical(poly);
        CHECK(poly_mod(poly, rad).is_zero());           // rad | poly
        CHECK(radical(poly.pow(3)) == rad);             // radical(f^r) = radical(f)
        CHECK(radical(poly.pow(2)) == rad);
        if (!rad.derivative().is_zero())
            CHECK(poly_gcd(rad, rad.derivative()).deg() == 0);
        if (rad.deg() > 0) CHECK_FALSE(poly_is_pth_power(rad));
    }
}

TEST_CASE("p-th powers") {
    auto f3 = make_field(3, 1);
    CHECK(poly_is_pth_power(parse_poly(f3, "1,0,0,1")));
    CHECK(poly_pth_root(parse_poly(f3, "1,0,0,1")).to_string() == "1,1");
    CHECK_FALSE(poly_is_pth_power(parse_poly(f3, "1,1")));
    CHECK_THROWS_AS(poly_pth_root(parse_poly(f3, "1,1")), not_a_pth_power);

    // F_9, p = 3: (z t)^3 = z^3 t^3; root recovered via inverse Frobenius
    auto f9 = make_field(3, 2);
    felem z = 3;
    Poly zt = Poly::monomial(f9, 1, z);
    Poly cubed = zt.pow(3);
    CHECK(poly_is_pth_power(cubed));
    CHECK(poly_pth_root(cubed) == zt);
    for (int i = 0; i < 200; ++i) {
        Poly g = random_nonzero(f9, 8);
        CHECK(poly_pth_root(g.pow(3)) == g);
    }
}

TEST_CASE("polynomial r-th powers") {
    auto f5 = make_field(5, 1);
    Poly x = parse_poly(f5, "0,2");  // 2t
    CHECK(poly_is_rth_power(x.pow(2), 2));  // 4t^2
    CHECK(poly_rth_root(x.pow(2), 2) == x); // canonical root 2t
    auto f3 = make_field(3, 1);
    CHECK_FALSE(poly_is_rth_power(parse_poly(f3, "1,1"), 2));

    for (std::uint64_t r = 2; r <= 10; ++r) {
        for (int i = 0; i < 60; ++i) {
            Poly g = random_nonzero(f3, 6);
            Poly gr = g.pow(r);
            CHECK(poly_is_rth_power(gr, r));
            CHECK(poly_rth_root(gr, r).pow(r) == gr);
        }
    }
}

TEST_CASE("Frobenius composition law h(t^(q^n)) = h(t)^(q^n)") {
    for (auto [p, k] : {std::pair<std::uint64_t, std::uint32_t>{2, 1},
                        {3, 1}, {2, 2}, {5, 1}, {7, 1}, {3, 2}}) {
        auto f = make_field(p, k);
        for (std::uint32_t n = 1; n <= 3; ++n) {
            std::uint64_t qn = 1;
            for (std::uint32_t i = 0; i < n; ++i) qn *= f->q();
            if (qn > 729) continue;
            for (int i = 0; i < 3; ++i) {
                Poly h = random_nonzero(f, 4);
                CHECK(h.compose_power(qn) == h.pow(qn));
            }
        }
    }
}

TEST_CASE("canonical text format") {
    auto f3 = make_field(3, 1);
    Poly h = parse_poly(f3, "1,0,0,0,0,1");
    CHECK(h.to_string() == "1,0,0,0,0,1");
    CHECK(h.pretty() == "t^5+1");
    CHECK(parse_poly(f3, h.to_string()) == h);
    auto f9 = make_field(3, 2);
    Poly g = Poly(f9, {5, 0, 3});
    CHECK(g.to_string() == "[2,1],[0,0],[0,1]");
    CHECK(parse_poly(f9, g.to_string()) == g);
}
