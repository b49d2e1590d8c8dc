#ifndef SUPELL_POLY_HPP
#define SUPELL_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "supell/field.hpp"

namespace supell {

// Dense univariate polynomial over F_q, coefficients ascending degree,
// no trailing zeros (the zero polynomial is the empty vector).
class Poly {
  public:
    Poly() = default;
    Poly(FieldPtr f, std::vector<felem> coeffs);

    static Poly zero(FieldPtr f) { return Poly(std::move(f), {}); }
    static Poly one(FieldPtr f) { return Poly(std::move(f), {1}); }
    static Poly constant(FieldPtr f, felem c) { return Poly(std::move(f), {c}); }
    static Poly variable(FieldPtr f) { return Poly(std::move(f), {0, 1}); }
    // c * t^deg
    static Poly monomial(FieldPtr f, std::size_t deg, felem c);

    const FieldPtr& field() const { return field_; }
    const std::vector<felem>& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    // degree; -1 stands in for deg(0) = -infinity
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    felem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    felem lead() const { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool is_constant() const { return c_.size() <= 1; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(felem c) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    felem eval(felem x) const;
    Poly derivative() const;
    Poly monic() const;  // throws zero_input on 0
    Poly pow(std::uint64_t e) const;
    // f(t^e)
    Poly compose_power(std::uint64_t e) const;

    std::string to_string() const;   // canonical comma-separated coefficient list
    std::string pretty() const;      // human-readable "t^5+1" form

  private:
    void check_same_field(const Poly& o) const;
    FieldPtr field_;
    std::vector<felem> c_;
};

// quotient, remainder with deg rem < deg divisor; throws division_by_zero
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);  // exact or truncating division
Poly poly_mod(const Poly& a, const Poly& b);

// monic gcd via Euclid; throws both_zero
Poly poly_gcd(Poly a, Poly b);

// Canonical total order: by degree, then coefficients compared from the
// top degree down by element code.  Used for sorting factor lists and for
// deterministic enumeration/output order.
bool canon_less(const Poly& a, const Poly& b);

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod);
Poly poly_powmod(const Poly& a, std::uint64_t e, const Poly& mod);

Poly parse_poly(const FieldPtr& f, const std::string& s);

}  // namespace supell

#endif
