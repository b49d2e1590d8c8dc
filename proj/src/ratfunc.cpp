#include "supell/ratfunc.hpp"

#include <algorithm>

namespace supell {

RatFunc RatFunc::reduce(Poly num, Poly den) {
    if (den.is_zero()) throw zero_denominator();
    if (!num.field()->same_as(*den.field())) throw field_mismatch();
    const FieldPtr& f = num.field();
    if (num.is_zero()) return RatFunc(Poly::zero(f), Poly::one(f));
    Poly g = poly_gcd(num, den);
    if (g.deg() > 0) {
        num = num / g;
        den = den / g;
    }
    if (!den.is_monic()) {
        felem il = f->inv(den.lead());
        num = num.scaled(il);
        den = den.scaled(il);
    }
    return RatFunc(std::move(num), std::move(den));
}

RatFunc RatFunc::from_poly(Poly p) {
    Poly one = Poly::one(p.field());
    return RatFunc(std::move(p), std::move(one));
}

RatFunc RatFunc::zero(const FieldPtr& f) { return from_poly(Poly::zero(f)); }
RatFunc RatFunc::one(const FieldPtr& f) { return from_poly(Poly::one(f)); }
RatFunc RatFunc::constant(const FieldPtr& f, felem c) {
    return from_poly(Poly::constant(f, c));
}
RatFunc RatFunc::t_power(const FieldPtr& f, std::uint64_t e) {
    return from_poly(Poly::monomial(f, e, 1));
}

std::uint64_t RatFunc::height() const {
    int h = std::max(num_.deg(), den_.deg());
    return h < 0 ? 0 : static_cast<std::uint64_t>(h);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return reduce(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return reduce(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return reduce(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw division_by_zero();
    return reduce(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inv(); }

RatFunc RatFunc::pow(std::uint64_t e) const {
    // reduced stays reduced under powering; no re-reduction needed
    return RatFunc(num_.pow(e), den_.pow(e));
}

bool RatFunc::operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

bool RatFunc::is_rth_power(std::uint64_t r) const {
    if (is_zero()) throw zero_input("ratfunc r-th power test");
    return poly_is_rth_power(num_, r) && poly_is_rth_power(den_, r);
}

RatFunc RatFunc::rth_root(std::uint64_t r) const {
    if (is_zero()) throw zero_input("ratfunc r-th root");
    return RatFunc(poly_rth_root(num_, r), poly_rth_root(den_, r));
}

std::vector<RatFunc> RatFunc::all_rth_roots(std::uint64_t r) const {
    RatFunc root = rth_root(r);
    const FieldPtr& f = field();
    std::uint64_t m = gcd_u64(r, f->q() - 1);
    std::vector<RatFunc> out;
    for (felem z : f->roots_of_unity(m))
        out.push_back(RatFunc(root.num_.scaled(z), root.den_));
    std::sort(out.begin(), out.end(), ratfunc_canon_less);
    return out;
}

bool RatFunc::is_pth_power() const {
    if (is_zero()) throw zero_input("ratfunc p-th power test");
    return poly_is_pth_power(num_) && poly_is_pth_power(den_);
}

std::string RatFunc::to_string() const {
    return num_.to_string() + "/" + den_.to_string();
}

std::string RatFunc::pretty() const {
    if (den_.is_constant()) return num_.pretty();
    return "(" + num_.pretty() + ")/(" + den_.pretty() + ")";
}

RatFunc poly_at(const Poly& h, const RatFunc& x) {
    const FieldPtr& f = x.field();
    RatFunc r = RatFunc::zero(f);
    for (std::size_t i = h.coeffs().size(); i-- > 0;)
        r = r * x + RatFunc::constant(f, h.coeffs()[i]);
    return r;
}

bool ratfunc_canon_less(const RatFunc& a, const RatFunc& b) {
    if (a.den() != b.den()) return canon_less(a.den(), b.den());
    return canon_less(a.num(), b.num());
}

RatFunc parse_ratfunc(const FieldPtr& f, const std::string& s) {
    auto pos = s.find('/');
    if (pos == std::string::npos)
        return RatFunc::from_poly(parse_poly(f, s));
    Poly num = parse_poly(f, s.substr(0, pos));
    Poly den = parse_poly(f, s.substr(pos + 1));
    return RatFunc::reduce(std::move(num), std::move(den));
}

}  // namespace supell
