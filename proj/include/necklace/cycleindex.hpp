#pragma once

// Cycle indices of the rotation and dihedral groups, expanded term by term.
// This is deliberately the slow route: it never uses the closed forms, so it
// can serve as an independent check on them.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "necklace/closedform.hpp"
#include "necklace/errors.hpp"
#include "necklace/numtheory.hpp"

namespace necklace {

using ExponentVector = std::vector<std::uint32_t>;

/// Polynomial with integer coefficients over a common positive denominator:
/// value = (sum of coeff * x^exps) / scale.
class SparsePoly {
public:
    using Terms = std::map<ExponentVector, Count>;

    explicit SparsePoly(std::size_t variables, Count scale = 1);

    static SparsePoly constant(std::size_t variables, const Count& value);

    std::size_t variables() const { return variables_; }
    const Count& scale() const { return scale_; }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Zero when the monomial is absent.
    Count coefficient(const ExponentVector& exps) const;

    /// Merges into an existing term; drops the term if it cancels to zero.
    void add_term(const ExponentVector& exps, const Count& coeff);

    /// "scale=<k>" then one "coeff * x1^e1 ... xm^em" line per term, in
    /// ascending exponent-vector order.
    std::string debug_string() const;

private:
    std::size_t variables_;
    Count scale_;
    Terms terms_;
};

/// x1^g + ... + xm^g. Throws std::invalid_argument on g == 0 or m == 0.
SparsePoly power_sum(std::uint32_t g, std::size_t m);

/// Throw std::invalid_argument on a variable-count mismatch.
SparsePoly poly_mul(const SparsePoly& p, const SparsePoly& q);
SparsePoly poly_pow(const SparsePoly& p, std::uint64_t e);
/// p + c*q over the lcm of the two scales.
SparsePoly poly_add_scaled(const SparsePoly& p, const SparsePoly& q, const Count& c);
/// p / k, i.e. the same terms with the scale multiplied by k (k > 0).
SparsePoly poly_div_scalar(const SparsePoly& p, const Count& k);

struct ExpansionLimits {
    std::uint64_t max_terms = 10'000'000;
};

/// Number of monomials of total degree N in m variables; the size of a fully
/// expanded cycle index.
Count monomial_count(std::uint64_t total_degree, std::size_t m);

/// N * Z(C_N) in m variables, stored with scale N.
SparsePoly cycle_index_cyclic(std::uint64_t N, std::size_t m, const ExpansionLimits& limits = {});

/// 2N * Z(D_N) in m variables, stored with scale 2N.
SparsePoly cycle_index_dihedral(std::uint64_t N, std::size_t m, const ExpansionLimits& limits = {});

/// Coefficient of x^exps divided by the scale. Throws IntegralityError if the
/// division is not exact.
Count extract_count(const SparsePoly& p, const ExponentVector& exps);

/// Same, with each count placed at its original color position. Throws
/// std::invalid_argument if a color position is outside the polynomial.
Count extract_count(const SparsePoly& p, const ColorMultiplicities& n);

}  // namespace necklace
