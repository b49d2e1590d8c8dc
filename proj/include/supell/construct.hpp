#ifndef SUPELL_CONSTRUCT_HPP
#define SUPELL_CONSTRUCT_HPP

#include <vector>

#include "supell/curve.hpp"

namespace supell {

// One divisor m of n with n/m odd and r | q^m + 1, packaged with
// d = q^n + 1, d' = q^m + 1 and e = d/d'.
struct DivisorWitness {
    std::uint32_t n = 0;
    std::uint32_t m = 0;
    std::uint64_t d = 0;
    std::uint64_t d_prime = 0;
    std::uint64_t e = 0;
};

// All witnesses for (q, r, n), sorted by m ascending.  Throws no_valid_f
// when r divides no q^f + 1 with f | n and n/f odd.
std::vector<DivisorWitness> divisor_witnesses(std::uint64_t q, std::uint64_t r,
                                              std::uint32_t n);

// The explicit point family: for each witness, (t^e, h(t^e)^(d'/r)).
// params must be generic with d = q^n + 1.  Every point is verified
// on-curve before emission.
std::vector<RationalPoint> theorem_points(const CurveParams& params,
                                          std::uint32_t n);

// (t^d / x, y); on-curve by the x <-> a/x symmetry, verified anyway.
RationalPoint mirror_point(const CurveParams& params, const RationalPoint& pt);

struct CountRow {
    std::uint32_t n = 0;
    std::uint64_t d = 0;
    std::uint64_t base_witnesses = 0;   // 0 when no valid f exists
    std::uint64_t total_points = 0;     // base points plus mirrors, deduplicated
};

// Point counts per n.  Counting is structural (integer exponent
// arithmetic): base points are pairwise distinct, mirrors are distinct
// from every base point for this family, so total = 2 * witnesses.
// The structural count is cross-checked against materialized points in
// the test suite for small n.
std::vector<CountRow> count_table(std::uint64_t q, std::uint64_t r,
                                  const std::vector<std::uint32_t>& n_list);

}  // namespace supell

#endif
