#ifndef SUPELL_CURVE_HPP
#define SUPELL_CURVE_HPP

#include <optional>
#include <string>
#include <vector>

#include "supell/ratfunc.hpp"

namespace supell {

// Parameters of the superelliptic family y^r = h(x) * h(a/x) over F_q(t).
// a is either the generic t^d or an explicit non-constant rational function.
struct CurveParams {
    FieldPtr field;
    std::uint64_t r = 0;
    Poly h;                       // polynomial in x over F_q
    bool generic_a = true;        // a = t^d
    std::uint64_t d = 0;
    std::optional<RatFunc> a_explicit;
    std::optional<std::uint64_t> s;  // set when h = x^s + 1

    RatFunc a() const;
    std::uint64_t s_or_throw() const;
};

// Convenience builder for the h = x^s + 1 family.
CurveParams make_params_xs1(FieldPtr field, std::uint64_t r, std::uint64_t s,
                            std::uint64_t d);

// Empty when all hypotheses hold; one message per violation otherwise.
std::vector<std::string> hypothesis_violations(const CurveParams& params);
// Returns the params unchanged or throws hypothesis_violation.
CurveParams validate(CurveParams params);

// (r-1)*s, valid only when h has distinct roots, deg h = s, gcd(r,s) = 1.
// Throws formula_inapplicable outside that regime.
std::uint64_t genus_x(const CurveParams& params);

// (r-1)(d*s-2)/2 for the auxiliary curve w^r = h(z^d); requires r | d and
// h with distinct nonzero roots, gcd(r,s) = 1.
std::uint64_t genus_c(const CurveParams& params, std::uint64_t d);

// Exact identity test y^r = h(x) h(a/x) in F_q(t).  Throws x_is_zero.
bool on_curve(const CurveParams& params, const RatFunc& x, const RatFunc& y);

enum class Provenance { constructed, mirrored, searched };

struct RationalPoint {
    RatFunc x, y;
    Provenance prov = Provenance::searched;
    std::uint32_t m = 0;      // witness divisor (constructed points)
    std::uint64_t e = 0;      // x-exponent (constructed points)
    std::uint64_t mult = 1;   // size of the y-orbit under the roots of unity
};

// A point of the auxiliary curve w^r = h(z^d), with coordinates in an
// evaluation field extending the prime field.
struct CPoint {
    felem z, w;
};

// Executable witness of the product-of-curves covering: checks that
// (x, y, t) = (z1^d, w1*w2, z1*z2) satisfies y^r = h(x) h(t^d / x) in the
// evaluation field.  Both inputs must lie on w^r = h(z^d) (else
// precondition_violation); z1 = 0 throws x_is_zero.  h must have
// prime-subfield coefficients so it can be evaluated in the extension.
bool covering_check(const CurveParams& params, std::uint64_t d, CPoint p1,
                    CPoint p2, const FieldPtr& eval_field);

}  // namespace supell

#endif
