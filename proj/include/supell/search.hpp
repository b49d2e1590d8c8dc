#ifndef SUPELL_SEARCH_HPP
#define SUPELL_SEARCH_HPP

#include <functional>
#include <vector>

#include "supell/curve.hpp"
#include "supell/effbounds.hpp"

namespace supell {

struct SearchConfig {
    CurveParams params;           // h = x^s + 1 family, a = t^d
    std::uint64_t delta_cap = 0;  // height cap for x
    bool pruned = true;           // false = unpruned brute-force oracle
    unsigned jobs = 1;
    std::uint64_t budget = 1'000'000'000ull;  // max candidate pairs
};

// Config with delta_cap defaulted to the proven pth-power bound
// (requires genus > 2).
SearchConfig default_search_config(CurveParams params);

enum class PthClass { pth_power, not_pth_power };

// x = u/v in reduced form is a p-th power in F_q(t) iff both u and v are
// p-th powers in F_q[t].  Throws x_is_zero.
PthClass classify_pth_power(const RatFunc& x);

struct FoundPoint {
    RatFunc x, y;
    PthClass cls = PthClass::not_pth_power;
    std::uint64_t height = 0;
};

struct SearchReport {
    std::vector<FoundPoint> points;          // sorted canonically, deduplicated
    std::uint64_t candidates_examined = 0;   // x values given the full y test
    std::uint64_t pruned_out = 0;            // (u,v) pairs dropped by the filters
    double wall_seconds = 0;
    bool complete = true;
};

// The pruned candidate x values in lowest terms with height <= delta_cap:
// v = v0^r (v0 monic), u = c * t^j * u0^r with c a unit, u0 monic and
// j in {0,...,r-1}, gcd(u, v) = 1.  This is a superset of the
// x-coordinates of all rational points (multiplicity constraints only;
// units deliberately unconstrained), which the oracle comparison checks.
std::vector<RatFunc> candidate_x_list(const SearchConfig& config);

// All y with y^r = h(x) h(t^d/x): the single y = 0 when the right side
// vanishes, else all gcd(r, q-1) roots, else empty.  Throws x_is_zero.
std::vector<RatFunc> y_solutions(const CurveParams& params, const RatFunc& x);

// Candidate-pair count for the budget check, exact.
std::uint64_t candidate_estimate(const SearchConfig& config);

// Full enumeration (pruned stream or brute-force oracle over all reduced
// u/v).  Deterministic output order independent of the job count.
// Throws cap_too_large when the estimate exceeds the budget.
SearchReport enumerate_points(const SearchConfig& config);

// The proof-extracted gcd identities for a candidate (u, v), a = t^d.
// All four results must hold; a false is a fatal signal.
struct GcdStructure {
    bool divides_a_s = false;        // gcd(u^s, u^s + a^s v^s) | a^s
    bool divides_a_s_minus_1 = false;  // gcd(u^s+v^s, u^s+a^s v^s) | a^s - 1
    bool pairwise_coprime = false;
    bool all_hold = false;
};

GcdStructure gcd_structure_check(const Poly& u, const Poly& v, std::uint64_t d,
                                 std::uint64_t s);

}  // namespace supell

#endif
