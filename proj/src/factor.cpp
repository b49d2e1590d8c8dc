#include "supell/factor.hpp"

#include <algorithm>
#include <optional>

namespace supell {

namespace {

struct SplitMix64 {
    std::uint64_t s;
    explicit SplitMix64(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

Poly random_poly(const FieldPtr& f, int deg_below, SplitMix64& rng) {
    std::vector<felem> c(deg_below);
    for (auto& x : c) x = rng.next() % f->q();
    return Poly(f, std::move(c));
}

// r-th root of a monic polynomial, or nullopt.  Walks the squarefree
// decomposition and bails on the first multiplicity not divisible by r;
// p-th powers (vanishing derivative) are peeled via the inverse Frobenius.
std::optional<Poly> monic_rth_root(const Poly& m, std::uint64_t r) {
    const FieldPtr& f = m.field();
    if (r == 1) return m;
    if (m.is_constant()) return Poly::one(f);
    Poly fp = m.derivative();
    const std::uint64_t p = f->p();
    if (fp.is_zero()) {
        Poly g = poly_pth_root(m);
        if (r % p == 0) return monic_rth_root(g, r / p);
        auto sub = monic_rth_root(g, r);
        if (!sub) return std::nullopt;
        return sub->pow(p);
    }
    Poly c = poly_gcd(m, fp);
    Poly w = m / c;
    Poly root = Poly::one(f);
    std::uint64_t i = 1;
    while (w.deg() > 0) {
        Poly y = poly_gcd(w, c);
        Poly z = w / y;
        if (z.deg() > 0) {
            if (i % r != 0) return std::nullopt;
            root = root * z.pow(i / r);
        }
        ++i;
        w = std::move(y);
        c = c / w;
    }
    if (c.deg() > 0) {
        auto sub = monic_rth_root(c, r);
        if (!sub) return std::nullopt;
        root = root * *sub;
    }
    return root;
}

// Distinct-degree factorization of a squarefree monic polynomial:
// (product of irreducibles of degree d, d) pairs.
std::vector<std::pair<Poly, int>> ddf(const Poly& g) {
    std::vector<std::pair<Poly, int>> out;
    const std::uint64_t q = g.field()->q();
    Poly rest = g;
    Poly t = Poly::variable(g.field());
    Poly h = poly_mod(t, rest);
    int d = 0;
    while (rest.deg() >= 2 * (d + 1)) {
        ++d;
        h = poly_powmod(h, q, rest);
        Poly gd = poly_gcd(rest, h - t);
        if (gd.deg() > 0) {
            out.emplace_back(gd, d);
            rest = rest / gd;
            if (rest.deg() == 0) return out;
            h = poly_mod(h, rest);
        }
    }
    if (rest.deg() > 0) out.emplace_back(rest, rest.deg());
    return out;
}

// Equal-degree splitting (Cantor-Zassenhaus; trace construction for p = 2).
void edf(const Poly& g, int d, SplitMix64& rng, std::vector<Poly>& out) {
    if (g.deg() == d) {
        out.push_back(g.monic());
        return;
    }
    const FieldPtr& f = g.field();
    const std::uint64_t q = f->q();
    for (;;) {
        Poly a = random_poly(f, g.deg(), rng);
        if (a.is_zero()) continue;
        Poly u = poly_gcd(a, g);
        if (u.deg() > 0 && u.deg() < g.deg()) {
            edf(u, d, rng, out);
            edf(g / u, d, rng, out);
            return;
        }
        Poly h = Poly::zero(f);
        if (f->p() != 2) {
            // a^((q^d-1)/2) - 1, with the exponent taken as
            // ((q-1)/2) * (1 + q + ... + q^(d-1))
            Poly s = poly_mod(a, g);
            Poly b = s;
            for (int i = 1; i < d; ++i) {
                b = poly_powmod(b, q, g);
                b = poly_mulmod(b, s, g);
            }
            b = poly_powmod(b, (q - 1) / 2, g);
            h = b - Poly::one(f);
        } else {
            // trace map to F_2: a + a^2 + a^4 + ... + a^(2^(kd-1))
            Poly s = poly_mod(a, g);
            Poly cur = s;
            Poly sum = s;
            std::uint64_t bits = static_cast<std::uint64_t>(f->k()) * d;
            for (std::uint64_t i = 1; i < bits; ++i) {
                cur = poly_mulmod(cur, cur, g);
                sum = poly_mod(sum + cur, g);
            }
            h = sum;
        }
        if (h.is_zero()) continue;
        u = poly_gcd(g, h);
        if (u.deg() > 0 && u.deg() < g.deg()) {
            edf(u, d, rng, out);
            edf(g / u, d, rng, out);
            return;
        }
    }
}

}  // namespace

Poly Factorization::reassemble(const FieldPtr& f) const {
    Poly r = Poly::constant(f, unit);
    for (const auto& [fac, mult] : factors) r = r * fac.pow(mult);
    return r;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
    if (f.is_zero()) throw zero_input("squarefree decomposition");
    std::vector<std::pair<Poly, int>> out;
    Poly m = f.monic();
    if (m.is_constant()) return out;
    const std::uint64_t p = f.field()->p();
    Poly fp = m.derivative();
    if (fp.is_zero()) {
        for (auto& [part, mult] : squarefree_decomposition(poly_pth_root(m)))
            out.emplace_back(part, mult * static_cast<int>(p));
        return out;
    }
    Poly c = poly_gcd(m, fp);
    Poly w = m / c;
    int i = 1;
    while (w.deg() > 0) {
        Poly y = poly_gcd(w, c);
        Poly z = w / y;
        if (z.deg() > 0) out.emplace_back(z, i);
        ++i;
        w = std::move(y);
        c = c / w;
    }
    if (c.deg() > 0)
        for (auto& [part, mult] : squarefree_decomposition(poly_pth_root(c)))
            out.emplace_back(part, mult * static_cast<int>(p));
    return out;
}

Factorization factorize(const Poly& f) {
    if (f.is_zero()) throw zero_input("factorize");
    Factorization out;
    out.unit = f.lead();
    SplitMix64 rng(kFactorSeed);
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        for (const auto& [prod, d] : ddf(part)) {
            std::vector<Poly> irr;
            edf(prod, d, rng, irr);
            for (auto& g : irr) out.factors.emplace_back(std::move(g), mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return canon_less(a.first, b.first); });
    return out;
}

Poly radical(const Poly& f) {
    if (f.is_zero()) throw zero_input("radical");
    Poly r = Poly::one(f.field());
    for (const auto& [part, mult] : squarefree_decomposition(f)) r = r * part;
    return r;
}

bool poly_is_pth_power(const Poly& f) {
    const std::uint64_t p = f.field()->p();
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        if (f.coeffs()[i] != 0 && i % p != 0) return false;
    return true;
}

Poly poly_pth_root(const Poly& f) {
    if (!poly_is_pth_power(f)) throw not_a_pth_power();
    const FieldPtr& fld = f.field();
    const std::uint64_t p = fld->p();
    // inverse Frobenius on coefficients: c -> c^(q/p)
    const std::uint64_t e = fld->q() / p;
    std::vector<felem> c(f.coeffs().size() / p + 1, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); i += p)
        c[i / p] = fld->pow(f.coeffs()[i], e);
    return Poly(fld, std::move(c));
}

bool poly_is_rth_power(const Poly& f, std::uint64_t r) {
    if (f.is_zero()) throw zero_input("r-th power test");
    if (r == 1) return true;
    if (!f.field()->unit_is_rth_power(f.lead(), r)) return false;
    return monic_rth_root(f.monic(), r).has_value();
}

Poly poly_rth_root(const Poly& f, std::uint64_t r) {
    if (f.is_zero()) throw zero_input("r-th root");
    if (r == 1) return f;
    if (!f.field()->unit_is_rth_power(f.lead(), r))
        throw not_an_rth_power("leading unit");
    auto root = monic_rth_root(f.monic(), r);
    if (!root) throw not_an_rth_power("multiplicity pattern");
    return root->scaled(f.field()->unit_rth_root(f.lead(), r));
}

}  // namespace supell
