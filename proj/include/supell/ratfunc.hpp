#ifndef SUPELL_RATFUNC_HPP
#define SUPELL_RATFUNC_HPP

#include <string>
#include <vector>

#include "supell/factor.hpp"
#include "supell/poly.hpp"

namespace supell {

// Reduced fraction num/den over F_q[t]: gcd(num, den) = 1, den monic.
class RatFunc {
  public:
    RatFunc() = default;

    // Divides out the gcd and normalizes the denominator monic.
    // Throws zero_denominator.
    static RatFunc reduce(Poly num, Poly den);
    static RatFunc from_poly(Poly p);
    static RatFunc zero(const FieldPtr& f);
    static RatFunc one(const FieldPtr& f);
    static RatFunc constant(const FieldPtr& f, felem c);
    // t^e
    static RatFunc t_power(const FieldPtr& f, std::uint64_t e);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const FieldPtr& field() const { return num_.field(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    // max(deg num, deg den); the height of 0 is 0
    std::uint64_t height() const;

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;  // throws division_by_zero
    RatFunc inv() const;
    RatFunc pow(std::uint64_t e) const;
    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    bool is_rth_power(std::uint64_t r) const;       // throws zero_input on 0
    RatFunc rth_root(std::uint64_t r) const;        // canonical root
    // All gcd(r, q-1) roots (canonical root times the r-th roots of unity),
    // sorted canonically.
    std::vector<RatFunc> all_rth_roots(std::uint64_t r) const;
    bool is_pth_power() const;                      // throws zero_input on 0

    std::string to_string() const;  // "num/den" in canonical list form
    std::string pretty() const;

  private:
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}
    Poly num_, den_;
};

// Evaluate a polynomial (in x) at a rational function, exactly.
RatFunc poly_at(const Poly& h, const RatFunc& x);

bool ratfunc_canon_less(const RatFunc& a, const RatFunc& b);

RatFunc parse_ratfunc(const FieldPtr& f, const std::string& s);

}  // namespace supell

#endif
