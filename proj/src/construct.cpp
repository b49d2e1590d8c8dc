#include "supell/construct.hpp"

namespace supell {

std::vector<DivisorWitness> divisor_witnesses(std::uint64_t q, std::uint64_t r,
                                              std::uint32_t n) {
    bool has_f = false;
    for (std::uint32_t f = 1; f <= n; ++f) {
        if (n % f != 0 || (n / f) % 2 == 0) continue;
        if ((checked_pow_u64(q, f) + 1) % r == 0) {
            has_f = true;
            break;
        }
    }
    if (!has_f) throw no_valid_f();

    const std::uint64_t d = checked_pow_u64(q, n) + 1;
    std::vector<DivisorWitness> out;
    for (std::uint32_t m = 1; m <= n; ++m) {
        if (n % m != 0 || (n / m) % 2 == 0) continue;
        std::uint64_t d_prime = checked_pow_u64(q, m) + 1;
        if (d_prime % r != 0) continue;
        if (d % d_prime != 0) throw error("internal: d' does not divide d");
        out.push_back({n, m, d, d_prime, d / d_prime});
    }
    return out;
}

std::vector<RationalPoint> theorem_points(const CurveParams& params,
                                          std::uint32_t n) {
    const FieldPtr& f = params.field;
    const std::uint64_t q = f->q();
    if (!params.generic_a || params.d != checked_pow_u64(q, n) + 1)
        throw error("theorem_points requires a = t^d with d = q^n + 1");
    auto witnesses = divisor_witnesses(q, params.r, n);
    std::vector<RationalPoint> out;
    const std::uint64_t orbit = gcd_u64(params.r, q - 1);
    for (const auto& w : witnesses) {
        RationalPoint pt;
        pt.x = RatFunc::t_power(f, w.e);
        pt.y = RatFunc::from_poly(
            params.h.compose_power(w.e).pow(w.d_prime / params.r));
        pt.prov = Provenance::constructed;
        pt.m = w.m;
        pt.e = w.e;
        pt.mult = orbit;
        if (!on_curve(params, pt.x, pt.y))
            throw error("internal: constructed point failed on_curve");
        out.push_back(std::move(pt));
    }
    return out;
}

RationalPoint mirror_point(const CurveParams& params, const RationalPoint& pt) {
    if (pt.x.is_zero()) throw x_is_zero();
    RationalPoint out;
    out.x = params.a() / pt.x;
    out.y = pt.y;
    out.prov = Provenance::mirrored;
    out.m = pt.m;
    out.e = pt.e;
    out.mult = pt.mult;
    if (!on_curve(params, out.x, out.y))
        throw error("internal: mirror point failed on_curve");
    return out;
}

std::vector<CountRow> count_table(std::uint64_t q, std::uint64_t r,
                                  const std::vector<std::uint32_t>& n_list) {
    std::vector<CountRow> rows;
    for (std::uint32_t n : n_list) {
        CountRow row;
        row.n = n;
        row.d = checked_pow_u64(q, n) + 1;
        try {
            auto ws = divisor_witnesses(q, r, n);
            row.base_witnesses = ws.size();
            // Base x-exponents e = d/d' are pairwise distinct, and a mirror
            // (exponent d - e) can only collide with a base point when
            // d' = 2, impossible for d' = q^m + 1 > 2.
            row.total_points = 2 * ws.size();
        } catch (const no_valid_f&) {
            row.base_witnesses = 0;
            row.total_points = 0;
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace supell
