#include "necklace/cycleindex.hpp"

#include <sstream>
#include <stdexcept>

namespace necklace {

namespace {

Count as_count(std::uint64_t v) { return Count(static_cast<unsigned long>(v)); }

void require_same_variables(const SparsePoly& p, const SparsePoly& q) {
    if (p.variables() != q.variables())
        throw std::invalid_argument("polynomials have different variable counts (" +
                                    std::to_string(p.variables()) + " vs " +
                                    std::to_string(q.variables()) + ")");
}

void check_expansion_size(std::uint64_t N, std::size_t m, const ExpansionLimits& limits) {
    const Count terms = monomial_count(N, m);
    if (terms > as_count(limits.max_terms))
        throw ResourceLimitError("cycle index for N=" + std::to_string(N) + ", m=" +
                                 std::to_string(m) + " would have " + to_decimal(terms) +
                                 " terms (limit " + std::to_string(limits.max_terms) + ")");
}

// Sum over g | N of phi(g) * X_g^(N/g), without any denominator.
SparsePoly rotation_sum(std::uint64_t N, std::size_t m) {
    SparsePoly sum(m);
    for (std::uint64_t g : divisors(N)) {
        const SparsePoly term = poly_pow(power_sum(static_cast<std::uint32_t>(g), m), N / g);
        sum = poly_add_scaled(sum, term, as_count(totient(g)));
    }
    return sum;
}

}  // namespace

SparsePoly::SparsePoly(std::size_t variables, Count scale)
    : variables_(variables), scale_(std::move(scale)) {
    if (scale_ <= 0) throw std::invalid_argument("polynomial scale must be positive");
}

SparsePoly SparsePoly::constant(std::size_t variables, const Count& value) {
    SparsePoly p(variables);
    p.add_term(ExponentVector(variables, 0), value);
    return p;
}

Count SparsePoly::coefficient(const ExponentVector& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Count(0) : it->second;
}

void SparsePoly::add_term(const ExponentVector& exps, const Count& coeff) {
    if (exps.size() != variables_)
        throw std::invalid_argument("exponent vector has the wrong length");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exps, coeff);
    if (inserted) return;
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

std::string SparsePoly::debug_string() const {
    std::ostringstream out;
    out << "scale=" << scale_.get_str() << '\n';
    for (const auto& [exps, coeff] : terms_) {
        out << coeff.get_str() << " *";
        for (std::size_t i = 0; i < exps.size(); ++i) out << " x" << (i + 1) << '^' << exps[i];
        out << '\n';
    }
    return out.str();
}

SparsePoly power_sum(std::uint32_t g, std::size_t m) {
    if (g == 0 || m == 0) throw std::invalid_argument("power_sum: g and m must be positive");
    SparsePoly p(m);
    for (std::size_t i = 0; i < m; ++i) {
        ExponentVector exps(m, 0);
        exps[i] = g;
        p.add_term(exps, 1);
    }
    return p;
}

SparsePoly poly_mul(const SparsePoly& p, const SparsePoly& q) {
    require_same_variables(p, q);
    SparsePoly product(p.variables(), p.scale() * q.scale());
    ExponentVector exps(p.variables());
    for (const auto& [pe, pc] : p.terms()) {
        for (const auto& [qe, qc] : q.terms()) {
            for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = pe[i] + qe[i];
            product.add_term(exps, pc * qc);
        }
    }
    return product;
}

SparsePoly poly_pow(const SparsePoly& p, std::uint64_t e) {
    SparsePoly result = SparsePoly::constant(p.variables(), 1);
    for (std::uint64_t i = 0; i < e; ++i) result = poly_mul(result, p);
    return result;
}

SparsePoly poly_add_scaled(const SparsePoly& p, const SparsePoly& q, const Count& c) {
    require_same_variables(p, q);
    Count common;
    mpz_lcm(common.get_mpz_t(), p.scale().get_mpz_t(), q.scale().get_mpz_t());
    const Count p_factor = common / p.scale();
    const Count q_factor = c * (common / q.scale());

    SparsePoly sum(p.variables(), common);
    for (const auto& [exps, coeff] : p.terms()) sum.add_term(exps, coeff * p_factor);
    for (const auto& [exps, coeff] : q.terms()) sum.add_term(exps, coeff * q_factor);
    return sum;
}

SparsePoly poly_div_scalar(const SparsePoly& p, const Count& k) {
    if (k <= 0) throw std::invalid_argument("poly_div_scalar: divisor must be positive");
    SparsePoly out(p.variables(), p.scale() * k);
    for (const auto& [exps, coeff] : p.terms()) out.add_term(exps, coeff);
    return out;
}

Count monomial_count(std::uint64_t total_degree, std::size_t m) {
    if (m == 0) return total_degree == 0 ? 1 : 0;
    Count c;
    mpz_bin_uiui(c.get_mpz_t(), total_degree + m - 1, m - 1);
    return c;
}

SparsePoly cycle_index_cyclic(std::uint64_t N, std::size_t m, const ExpansionLimits& limits) {
    if (N == 0 || m == 0) throw std::invalid_argument("cycle_index_cyclic: N and m must be positive");
    check_expansion_size(N, m, limits);
    return poly_div_scalar(rotation_sum(N, m), as_count(N));
}

SparsePoly cycle_index_dihedral(std::uint64_t N, std::size_t m, const ExpansionLimits& limits) {
    if (N == 0 || m == 0)
        throw std::invalid_argument("cycle_index_dihedral: N and m must be positive");
    check_expansion_size(N, m, limits);

    const std::uint64_t L = N / 2;
    const SparsePoly x1 = power_sum(1, m);
    const SparsePoly x2 = power_sum(2, m);

    SparsePoly reflections(m);
    if (N % 2 == 1) {
        // Every reflection fixes one bead and swaps the remaining pairs.
        reflections = poly_add_scaled(reflections, poly_mul(x1, poly_pow(x2, L)), as_count(N));
    } else {
        // N/2 reflections through two beads, N/2 through two edge midpoints.
        const SparsePoly through_beads = poly_mul(poly_pow(x1, 2), poly_pow(x2, L - 1));
        reflections = poly_add_scaled(reflections, through_beads, as_count(N / 2));
        reflections = poly_add_scaled(reflections, poly_pow(x2, L), as_count(N / 2));
    }

    const SparsePoly numerator = poly_add_scaled(rotation_sum(N, m), reflections, 1);
    return poly_div_scalar(numerator, as_count(2 * N));
}

Count extract_count(const SparsePoly& p, const ExponentVector& exps) {
    const Count coeff = p.coefficient(exps);
    if (!mpz_divisible_p(coeff.get_mpz_t(), p.scale().get_mpz_t()))
        throw IntegralityError("extract_count: coefficient " + coeff.get_str() +
                               " is not divisible by scale " + p.scale().get_str());
    Count q;
    mpz_divexact(q.get_mpz_t(), coeff.get_mpz_t(), p.scale().get_mpz_t());
    return q;
}

Count extract_count(const SparsePoly& p, const ColorMultiplicities& n) {
    ExponentVector exps(p.variables(), 0);
    const auto labels = n.color_labels();
    const auto counts = n.counts();
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (labels[i] >= exps.size())
            throw std::invalid_argument("extract_count: color " + std::to_string(labels[i] + 1) +
                                        " exceeds the polynomial's " +
                                        std::to_string(p.variables()) + " variables");
        exps[labels[i]] = static_cast<std::uint32_t>(counts[i]);
    }
    return extract_count(p, exps);
}

}  // namespace necklace
