#ifndef SUPELL_ERRORS_HPP
#define SUPELL_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace supell {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
};

struct field_mismatch : error {
    field_mismatch() : error("operands belong to different fields") {}
};

struct zero_input : error {
    zero_input(const std::string& what) : error("zero input: " + what) {}
};

struct both_zero : error {
    both_zero() : error("gcd(0, 0) is undefined") {}
};

struct zero_denominator : error {
    zero_denominator() : error("zero denominator") {}
};

struct not_an_rth_power : error {
    not_an_rth_power(const std::string& what) : error("not an r-th power: " + what) {}
};

struct not_a_pth_power : error {
    not_a_pth_power() : error("not a p-th power") {}
};

struct x_is_zero : error {
    x_is_zero() : error("x = 0 is excluded from the affine model") {}
};

// Carries one message per violated curve hypothesis.
struct hypothesis_violation : error {
    std::vector<std::string> violations;
    explicit hypothesis_violation(std::vector<std::string> v)
        : error(join(v)), violations(std::move(v)) {}
  private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s = "hypothesis violation:";
        for (const auto& x : v) s += " [" + x + "]";
        return s;
    }
};

struct formula_inapplicable : error {
    formula_inapplicable(const std::string& what)
        : error("genus formula inapplicable: " + what) {}
};

struct genus_too_small : error {
    genus_too_small() : error("height bound requires genus > 2") {}
};

struct not_coprime : error {
    not_coprime() : error("inputs are not coprime") {}
};

struct both_pth_powers : error {
    both_pth_powers() : error("A and B are both p-th powers") {}
};

struct no_valid_f : error {
    no_valid_f() : error("r divides no q^f+1 with f | n and n/f odd") {}
};

struct precondition_violation : error {
    precondition_violation(const std::string& what)
        : error("precondition violation: " + what) {}
};

struct cap_too_large : error {
    unsigned long long estimate;
    unsigned long long budget;
    cap_too_large(unsigned long long est, unsigned long long bud)
        : error("candidate count estimate " + std::to_string(est) +
                " exceeds budget " + std::to_string(bud)),
          estimate(est), budget(bud) {}
};

}  // namespace supell

#endif
