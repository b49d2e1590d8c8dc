#ifndef SUPELL_FIELD_HPP
#define SUPELL_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "supell/errors.hpp"

namespace supell {

// An element of F_{p^k}, encoded as the base-p integer value of its
// coefficient vector (c_0 + c_1*p + ... + c_{k-1}*p^{k-1}).  This base-p
// value is also the canonical element order used for tie-breaking
// everywhere (root selection, enumeration, serialization).
using felem = std::uint64_t;

// Smallest monic irreducible of degree k over F_p, where "smallest" means
// minimal base-p value of the non-leading coefficient vector.  For k = 1
// this is the variable itself (coefficients {0, 1}), i.e. F_p is
// represented directly.  Returned ascending degree, length k+1.
std::vector<std::uint64_t> find_irreducible(std::uint64_t p, std::uint32_t k);

// F_q with q = p^k.  Immutable after construction; all arithmetic is on
// element codes and is pure, so a Field may be shared freely across threads.
class Field {
  public:
    // Canonical modulus from find_irreducible.
    Field(std::uint64_t p, std::uint32_t k);
    // Explicit modulus override (must be monic, degree k, irreducible).
    Field(std::uint64_t p, std::uint32_t k, std::vector<std::uint64_t> modulus);

    std::uint64_t p() const { return p_; }
    std::uint32_t k() const { return k_; }
    std::uint64_t q() const { return q_; }
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    bool same_as(const Field& o) const {
        return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
    }

    felem zero() const { return 0; }
    felem one() const { return 1; }

    felem add(felem a, felem b) const;
    felem sub(felem a, felem b) const;
    felem neg(felem a) const;
    felem mul(felem a, felem b) const;
    felem inv(felem a) const;           // throws division_by_zero on 0
    felem div(felem a, felem b) const;
    felem pow(felem a, std::uint64_t e) const;

    // Embeds an integer via the prime subfield.
    felem from_int(std::uint64_t v) const { return v % p_; }
    // True when the element lies in the prime subfield; its value there.
    bool in_prime_subfield(felem a) const { return a < p_; }

    // c = b^r for some unit b?  Decided by c^((q-1)/gcd(r,q-1)) == 1.
    bool unit_is_rth_power(felem c, std::uint64_t r) const;
    // Smallest root in the canonical element order.  Throws not_an_rth_power.
    felem unit_rth_root(felem c, std::uint64_t r) const;
    // All m-th roots of unity in F_q^*, ascending, where m is taken as given.
    std::vector<felem> roots_of_unity(std::uint64_t m) const;

    std::string to_string(felem a) const;
    felem parse(const std::string& s) const;

  private:
    void init();
    felem mul_slow(felem a, felem b) const;

    std::uint64_t p_;
    std::uint32_t k_;
    std::uint64_t q_;
    std::vector<std::uint64_t> modulus_;
    // Lookup tables for small extension fields (q <= 256); empty otherwise.
    std::vector<felem> mul_table_;
    std::vector<felem> add_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(std::uint64_t p, std::uint32_t k);
FieldPtr make_field(std::uint64_t p, std::uint32_t k,
                    std::vector<std::uint64_t> modulus);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
bool is_prime_u64(std::uint64_t n);
// q^n with overflow check (throws error if it would exceed 2^62).
std::uint64_t checked_pow_u64(std::uint64_t q, std::uint32_t n);

}  // namespace supell

#endif
