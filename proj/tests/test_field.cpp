#include <doctest.h>

#include <set>

#include "supell/field.hpp"

using namespace supell;

TEST_CASE("canonical modulus selection") {
    // k = 1: the variable itself, F_p represented directly
    CHECK(find_irreducible(3, 1) == std::vector<std::uint64_t>{0, 1});

    // exhaustive oracle: smallest monic irreducible quadratic over F_3 in
    // base-p order of the non-leading coefficients
    {
        auto got = find_irreducible(3, 2);
        bool found = false;
        for (std::uint64_t code = 0; code < 9 && !found; ++code) {
            std::uint64_t c0 = code % 3, c1 = code / 3;
            bool irreducible = true;
            for (std::uint64_t x = 0; x < 3; ++x)
                if ((x * x + c1 * x + c0) % 3 == 0) irreducible = false;
            if (irreducible) {
                CHECK(got == std::vector<std::uint64_t>{c0, c1, 1});
                found = true;
            }
        }
        CHECK(found);
        CHECK(got == std::vector<std::uint64_t>{1, 0, 1});  // z^2 + 1
    }

    // only irreducible monic quadratic over F_2
    CHECK(find_irreducible(2, 2) == std::vector<std::uint64_t>{1, 1, 1});
}

TEST_CASE("basic arithmetic") {
    auto f3 = make_field(3, 1);
    CHECK(f3->add(2, 2) == 1);
    CHECK(f3->inv(2) == 2);
    CHECK_THROWS_AS(f3->inv(0), division_by_zero);

    // F_9 = F_3[z]/(z^2+1): z * z = -1 = 2
    auto f9 = make_field(3, 2);
    felem z = 3;  // code of the generator z = [0,1]
    CHECK(f9->mul(z, z) == 2);
    CHECK(f9->to_string(f9->mul(z, z)) == "[2,0]");
    CHECK(f9->parse("[0,1]") == z);
}

static void check_axioms(const FieldPtr& f, bool exhaustive) {
    const std::uint64_t q = f->q();
    auto triple_check = [&](felem a, felem b, felem c) {
        CHECK(f->mul(a, f->mul(b, c)) == f->mul(f->mul(a, b), c));
        CHECK(f->add(a, f->add(b, c)) == f->add(f->add(a, b), c));
        CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
    };
    if (exhaustive) {
        for (felem a = 0; a < q; ++a)
            for (felem b = 0; b < q; ++b)
                for (felem c = 0; c < q; ++c) triple_check(a, b, c);
    } else {
        std::uint64_t state = 12345;
        for (int i = 0; i < 2000; ++i) {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            triple_check((state >> 11) % q, (state >> 23) % q, (state >> 37) % q);
        }
    }
    for (felem a = 0; a < q; ++a) {
        CHECK(f->add(a, f->neg(a)) == 0);
        if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
        // Frobenius is additive and multiplicative
        for (felem b = 0; b < q; ++b) {
            CHECK(f->pow(f->add(a, b), f->p()) ==
                  f->add(f->pow(a, f->p()), f->pow(b, f->p())));
        }
    }
}

TEST_CASE("field axioms for all q = p^k <= 81") {
    for (std::uint64_t p = 2; p <= 81; ++p) {
        if (!is_prime_u64(p)) continue;
        for (std::uint32_t k = 1;; ++k) {
            std::uint64_t q = 1;
            for (std::uint32_t i = 0; i < k; ++i) q *= p;
            if (q > 81) break;
            check_axioms(make_field(p, k), q <= 27);
        }
    }
}

TEST_CASE("unit r-th powers against brute-force enumeration") {
    CHECK(make_field(5, 1)->unit_is_rth_power(4, 2));
    CHECK_FALSE(make_field(5, 1)->unit_is_rth_power(2, 2));
    CHECK(make_field(5, 1)->unit_rth_root(4, 2) == 2);
    CHECK(make_field(3, 1)->unit_rth_root(1, 4) == 1);
    CHECK(make_field(2, 1)->unit_rth_root(1, 7) == 1);

    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
        for (std::uint32_t k = 1;; ++k) {
            std::uint64_t q = 1;
            for (std::uint32_t i = 0; i < k; ++i) q *= p;
            if (q > 49) break;
            auto f = make_field(p, k);
            for (std::uint64_t r = 1; r <= 12; ++r) {
                std::set<felem> powers;
                for (felem b = 1; b < q; ++b) powers.insert(f->pow(b, r));
                for (felem c = 1; c < q; ++c) {
                    CHECK(f->unit_is_rth_power(c, r) == (powers.count(c) > 0));
                    if (powers.count(c)) {
                        felem root = f->unit_rth_root(c, r);
                        CHECK(f->pow(root, r) == c);
                    }
                }
            }
        }
    }
}

TEST_CASE("element order and serialization") {
    auto f9 = make_field(3, 2);
    CHECK(f9->to_string(5) == "[2,1]");  // 2 + z
    CHECK(f9->parse("[2,1]") == 5);
    auto f7 = make_field(7, 1);
    CHECK(f7->to_string(6) == "6");
    CHECK(f7->parse("6") == 6);
    CHECK_THROWS_AS(f7->parse("7"), error);
}

TEST_CASE("explicit modulus override is validated") {
    CHECK_NOTHROW(make_field(2, 2, {1, 1, 1}));
    CHECK_THROWS_AS(make_field(2, 2, {1, 0, 1}), error);  // (z+1)^2
    CHECK_THROWS_AS(make_field(4, 1), error);             // p not prime
}
