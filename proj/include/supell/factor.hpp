#ifndef SUPELL_FACTOR_HPP
#define SUPELL_FACTOR_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "supell/poly.hpp"

namespace supell {

// unit * product(factor^multiplicity) reproduces the input exactly.
// Factors are monic irreducible, pairwise distinct, sorted by canon_less.
struct Factorization {
    felem unit = 1;
    std::vector<std::pair<Poly, int>> factors;

    Poly reassemble(const FieldPtr& f) const;
};

// Seed for the equal-degree-splitting random stream; recorded in output
// headers.  Correctness is seed-independent by the Factorization invariant.
constexpr std::uint64_t kFactorSeed = 0x5eedf1e1dull;

// Complete factorization into monic irreducibles times a unit
// (squarefree decomposition, then distinct-degree + equal-degree splitting).
// Throws zero_input on 0.
Factorization factorize(const Poly& f);

// Pairwise-coprime monic squarefree parts with multiplicities:
// monic(f) = product part^mult.  Correct in characteristic p (p-th powers
// are peeled via the inverse Frobenius before recursing).
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

// Monic product of the distinct irreducible factors.  Throws zero_input.
Poly radical(const Poly& f);

// f in F_q[t^p]?  (Coefficients are automatically p-th powers: Frobenius
// is bijective on F_q.)
bool poly_is_pth_power(const Poly& f);
// g with g^p = f; throws not_a_pth_power.
Poly poly_pth_root(const Poly& f);

// f = g^r in F_q[t]: every multiplicity divisible by r and the leading
// unit an r-th power in F_q^*.
bool poly_is_rth_power(const Poly& f, std::uint64_t r);
// Canonical root: canonical unit root times the monic r-th root.
Poly poly_rth_root(const Poly& f, std::uint64_t r);

}  // namespace supell

#endif
