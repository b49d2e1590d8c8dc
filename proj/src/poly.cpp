#include "supell/poly.hpp"

#include <algorithm>

namespace supell {

namespace {
void trim(std::vector<felem>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}
}  // namespace

Poly::Poly(FieldPtr f, std::vector<felem> coeffs)
    : field_(std::move(f)), c_(std::move(coeffs)) {
    trim(c_);
}

Poly Poly::monomial(FieldPtr f, std::size_t deg, felem c) {
    std::vector<felem> v(deg + 1, 0);
    v[deg] = c;
    return Poly(std::move(f), std::move(v));
}

void Poly::check_same_field(const Poly& o) const {
    if (!field_->same_as(*o.field_)) throw field_mismatch();
}

Poly Poly::operator+(const Poly& o) const {
    check_same_field(o);
    std::vector<felem> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = field_->add(coeff(i), o.coeff(i));
    return Poly(field_, std::move(r));
}

Poly Poly::operator-() const {
    std::vector<felem> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = field_->neg(c_[i]);
    return Poly(field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    check_same_field(o);
    std::vector<felem> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = field_->sub(coeff(i), o.coeff(i));
    return Poly(field_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    check_same_field(o);
    if (is_zero() || o.is_zero()) return zero(field_);
    const Field& F = *field_;
    std::vector<felem> r(c_.size() + o.c_.size() - 1, 0);
    if (F.k() == 1) {
        // Prime-field fast path: accumulate in uint64 and reduce per cell.
        // p <= 2^20 and the loop reduces each accumulation, so no overflow.
        const std::uint64_t p = F.p();
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            const std::uint64_t a = c_[i];
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = (r[i + j] + a * o.c_[j]) % p;
        }
    } else {
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                if (o.c_[j] != 0)
                    r[i + j] = F.add(r[i + j], F.mul(c_[i], o.c_[j]));
        }
    }
    return Poly(field_, std::move(r));
}

Poly Poly::scaled(felem c) const {
    if (c == 0) return zero(field_);
    std::vector<felem> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = field_->mul(c_[i], c);
    return Poly(field_, std::move(r));
}

bool Poly::operator==(const Poly& o) const {
    return field_->same_as(*o.field_) && c_ == o.c_;
}

felem Poly::eval(felem x) const {
    felem r = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        r = field_->add(field_->mul(r, x), c_[i]);
    return r;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return zero(field_);
    std::vector<felem> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = field_->mul(c_[i], field_->from_int(i));
    return Poly(field_, std::move(r));
}

Poly Poly::monic() const {
    if (is_zero()) throw zero_input("monic normalization");
    if (is_monic()) return *this;
    return scaled(field_->inv(lead()));
}

Poly Poly::pow(std::uint64_t e) const {
    Poly r = one(field_);
    Poly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Poly Poly::compose_power(std::uint64_t e) const {
    if (is_zero()) return *this;
    if (e == 0) return constant(field_, eval(1));
    std::vector<felem> r(static_cast<std::size_t>(deg()) * e + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i * e] = c_[i];
    return Poly(field_, std::move(r));
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw division_by_zero();
    if (!a.field()->same_as(*b.field())) throw field_mismatch();
    const Field& F = *a.field();
    if (a.deg() < b.deg()) return {Poly::zero(a.field()), a};
    std::vector<felem> rem = a.coeffs();
    const int db = b.deg();
    std::vector<felem> quo(a.deg() - db + 1, 0);
    const felem inv_lead = F.inv(b.lead());
    const auto& bc = b.coeffs();
    for (int i = a.deg(); i >= db; --i) {
        felem c = F.mul(rem[i], inv_lead);
        if (c != 0) {
            quo[i - db] = c;
            for (int j = 0; j <= db; ++j)
                rem[i - db + j] = F.sub(rem[i - db + j], F.mul(c, bc[j]));
        }
    }
    rem.resize(db);
    return {Poly(a.field(), std::move(quo)), Poly(a.field(), std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }
Poly poly_mod(const Poly& a, const Poly& b) { return divrem(a, b).second; }

Poly poly_gcd(Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) throw both_zero();
    while (!b.is_zero()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

bool canon_less(const Poly& a, const Poly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (std::size_t i = a.coeffs().size(); i-- > 0;)
        if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
    return false;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod) {
    return poly_mod(a * b, mod);
}

Poly poly_powmod(const Poly& a, std::uint64_t e, const Poly& mod) {
    Poly r = Poly::one(a.field());
    Poly base = poly_mod(a, mod);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, mod);
        base = poly_mulmod(base, base, mod);
        e >>= 1;
    }
    return r;
}

std::string Poly::to_string() const {
    if (c_.empty()) return field_->to_string(0);
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ",";
        s += field_->to_string(c_[i]);
    }
    return s;
}

std::string Poly::pretty() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += "+";
        std::string cs = field_->to_string(c_[i]);
        if (i == 0) {
            s += cs;
        } else {
            if (cs != "1") s += cs + "*";
            s += (i == 1) ? "t" : "t^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

Poly parse_poly(const FieldPtr& f, const std::string& s) {
    // split on commas that are not inside [...] element brackets
    std::vector<felem> coeffs;
    std::string tok;
    int depth = 0;
    auto flush = [&]() {
        if (tok.empty()) throw error("empty coefficient in polynomial: " + s);
        coeffs.push_back(f->parse(tok));
        tok.clear();
    };
    for (char ch : s) {
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (ch == ',' && depth == 0) {
            flush();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            tok += ch;
        }
    }
    flush();
    return Poly(f, std::move(coeffs));
}

}  // namespace supell
