#ifndef SUPELL_EFFBOUNDS_HPP
#define SUPELL_EFFBOUNDS_HPP

#include <cstdint>

#include "supell/factor.hpp"

namespace supell {

// Integer height caps for rational points, by p-th-power class of x.
// delta is an integer, so the rational bounds are floored.
struct HeightBound {
    std::uint64_t d = 0;
    std::uint64_t g = 0;
    std::uint64_t non_pth_power_bound = 0;  // floor((d*g - 1)/(g - 2))
    std::uint64_t pth_power_bound = 0;      // floor((2*d*(g-1) - 1)/(g - 2))
};

// Throws genus_too_small when g <= 2.
HeightBound height_bound(std::uint64_t d, std::uint64_t g);

// Degree audit of one polynomial ABC instance A + B = C.
// holds must be true whenever the preconditions are met; a false return is
// a fatal correctness signal for radical/factorize.
struct MasonRecord {
    int max_deg = 0;
    int rad_deg = 0;
    bool holds = false;
};

// Requires gcd(A,B) = 1 and not both p-th powers; violations are refused
// (not_coprime / both_pth_powers), never silently checked through.
MasonRecord mason_check(const Poly& A, const Poly& B);

// Heights of the near-tightness witness points with x = t^((p^n+1)/(p^m+1))
// and its p^m-fold mirror exponent.  Requires m | n, n/m odd, r | p^m + 1.
struct WitnessDegrees {
    std::uint64_t non_pth_power_witness_deg = 0;  // (p^n+1)/(p^m+1)
    std::uint64_t pth_power_witness_deg = 0;      // (p^n+1)*p^m/(p^m+1)
};

WitnessDegrees witness_degrees(std::uint64_t p, std::uint32_t n,
                               std::uint32_t m, std::uint64_t r);

}  // namespace supell

#endif
