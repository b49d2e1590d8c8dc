#include "supell/effbounds.hpp"

#include <algorithm>

namespace supell {

HeightBound height_bound(std::uint64_t d, std::uint64_t g) {
    if (g <= 2) throw genus_too_small();
    HeightBound b;
    b.d = d;
    b.g = g;
    b.non_pth_power_bound = (d * g - 1) / (g - 2);
    b.pth_power_bound = (2 * d * (g - 1) - 1) / (g - 2);
    return b;
}

MasonRecord mason_check(const Poly& A, const Poly& B) {
    if (A.is_zero() || B.is_zero()) throw zero_input("mason_check");
    if (poly_gcd(A, B).deg() != 0) throw not_coprime();
    if (poly_is_pth_power(A) && poly_is_pth_power(B)) throw both_pth_powers();
    Poly C = A + B;
    // C = 0 would force A, B to be coprime associates, hence both constant,
    // hence both p-th powers; rejected above.
    MasonRecord rec;
    rec.max_deg = std::max({A.deg(), B.deg(), C.deg()});
    rec.rad_deg = radical(A * B * C).deg();
    rec.holds = rec.max_deg <= rec.rad_deg - 1;
    return rec;
}

WitnessDegrees witness_degrees(std::uint64_t p, std::uint32_t n,
                               std::uint32_t m, std::uint64_t r) {
    if (m == 0 || n % m != 0 || (n / m) % 2 == 0)
        throw precondition_violation("need m | n with n/m odd");
    std::uint64_t pm = checked_pow_u64(p, m);
    if ((pm + 1) % r != 0)
        throw precondition_violation("r must divide p^m + 1");
    std::uint64_t pn = checked_pow_u64(p, n);
    WitnessDegrees w;
    w.non_pth_power_witness_deg = (pn + 1) / (pm + 1);
    w.pth_power_witness_deg = w.non_pth_power_witness_deg * pm;
    return w;
}

}  // namespace supell
