#include "supell/curve.hpp"

namespace supell {

RatFunc CurveParams::a() const {
    if (generic_a) return RatFunc::t_power(field, d);
    return *a_explicit;
}

std::uint64_t CurveParams::s_or_throw() const {
    if (!s) throw error("params are not in h = x^s + 1 form");
    return *s;
}

CurveParams make_params_xs1(FieldPtr field, std::uint64_t r, std::uint64_t s,
                            std::uint64_t d) {
    CurveParams p;
    p.field = field;
    p.r = r;
    std::vector<felem> hc(s + 1, 0);
    hc[0] = 1;
    hc[s] = 1;
    p.h = Poly(field, std::move(hc));
    p.generic_a = true;
    p.d = d;
    p.s = s;
    return p;
}

std::vector<std::string> hypothesis_violations(const CurveParams& params) {
    std::vector<std::string> v;
    const std::uint64_t p = params.field->p();
    if (params.r <= 1) v.push_back("r must be > 1");
    if (gcd_u64(params.r, p) != 1) v.push_back("gcd(r, p) != 1");
    if (params.h.deg() < 1) v.push_back("h must have positive degree");
    else {
        if (params.h.eval(0) == 0) v.push_back("h(0) = 0");
        for (std::uint64_t e = 2; e <= params.r; ++e) {
            if (params.r % e != 0) continue;
            if (poly_is_rth_power(params.h, e))
                v.push_back("h is an e-th power, e = " + std::to_string(e));
        }
    }
    if (params.generic_a) {
        if (params.d < 1) v.push_back("d must be >= 1");
        else if (gcd_u64(params.d, p) != 1) v.push_back("gcd(d, p) != 1");
    } else {
        if (!params.a_explicit || params.a_explicit->is_constant())
            v.push_back("a must lie outside F_q");
    }
    if (params.s) {
        std::uint64_t s = *params.s;
        if (params.h.deg() >= 1 &&
            params.h != make_params_xs1(params.field, params.r, s, 1).h)
            v.push_back("s is set but h != x^s + 1");
        if (gcd_u64(params.r, s) != 1) v.push_back("gcd(r, s) != 1");
        if (gcd_u64(s, p) != 1) v.push_back("gcd(s, p) != 1");
    }
    return v;
}

CurveParams validate(CurveParams params) {
    auto v = hypothesis_violations(params);
    if (!v.empty()) throw hypothesis_violation(std::move(v));
    return params;
}

std::uint64_t genus_x(const CurveParams& params) {
    const Poly& h = params.h;
    if (h.deg() < 1) throw formula_inapplicable("h must be nonconstant");
    std::uint64_t s = static_cast<std::uint64_t>(h.deg());
    Poly hp = h.derivative();
    if (hp.is_zero() || poly_gcd(h, hp).deg() != 0)
        throw formula_inapplicable("h must have distinct roots");
    if (gcd_u64(params.r, s) != 1)
        throw formula_inapplicable("gcd(r, s) != 1");
    return (params.r - 1) * s;
}

std::uint64_t genus_c(const CurveParams& params, std::uint64_t d) {
    const Poly& h = params.h;
    if (h.deg() < 1) throw formula_inapplicable("h must be nonconstant");
    std::uint64_t s = static_cast<std::uint64_t>(h.deg());
    Poly hp = h.derivative();
    if (hp.is_zero() || poly_gcd(h, hp).deg() != 0)
        throw formula_inapplicable("h must have distinct roots");
    if (h.eval(0) == 0) throw formula_inapplicable("h(0) = 0");
    if (gcd_u64(params.r, s) != 1)
        throw formula_inapplicable("gcd(r, s) != 1");
    if (d % params.r != 0) throw formula_inapplicable("r must divide d");
    return (params.r - 1) * (d * s - 2) / 2;
}

bool on_curve(const CurveParams& params, const RatFunc& x, const RatFunc& y) {
    if (x.is_zero()) throw x_is_zero();
    RatFunc rhs = poly_at(params.h, x) * poly_at(params.h, params.a() / x);
    return y.pow(params.r) == rhs;
}

bool covering_check(const CurveParams& params, std::uint64_t d, CPoint p1,
                    CPoint p2, const FieldPtr& eval_field) {
    const Field& E = *eval_field;
    if (E.p() != params.field->p())
        throw error("evaluation field has a different characteristic");
    // embed h into the evaluation field via the prime subfield
    std::vector<felem> hc;
    for (felem c : params.h.coeffs()) {
        if (!params.field->in_prime_subfield(c))
            throw error("h has coefficients outside the prime subfield");
        hc.push_back(E.from_int(c));
    }
    auto h_at = [&](felem z) {
        felem r = 0;
        for (std::size_t i = hc.size(); i-- > 0;) r = E.add(E.mul(r, z), hc[i]);
        return r;
    };
    if (p1.z == 0) throw x_is_zero();
    for (const CPoint& pt : {p1, p2})
        if (E.pow(pt.w, params.r) != h_at(E.pow(pt.z, d)))
            throw precondition_violation("input point is not on w^r = h(z^d)");
    felem x = E.pow(p1.z, d);
    felem t = E.mul(p1.z, p2.z);
    felem lhs = E.pow(E.mul(p1.w, p2.w), params.r);
    felem rhs = E.mul(h_at(x), h_at(E.div(E.pow(t, d), x)));
    return lhs == rhs;
}

}  // namespace supell
