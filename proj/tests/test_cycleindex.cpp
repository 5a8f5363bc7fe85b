#include "doctest.h"

#include "necklace/cycleindex.hpp"
#include "oracles.hpp"

using namespace necklace;

namespace {

std::uint64_t degree(const ExponentVector& e) {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
}

Count coefficient_sum(const SparsePoly& p) {
    Count s = 0;
    for (const auto& [e, c] : p.terms()) s += c;
    return s;
}

}  // namespace

TEST_CASE("power_sum") {
    CHECK(power_sum(1, 2).debug_string() == "scale=1\n1 * x1^0 x2^1\n1 * x1^1 x2^0\n");
    const auto p = power_sum(2, 3);
    CHECK(p.term_count() == 3);
    CHECK(p.coefficient({2, 0, 0}) == 1);
    CHECK(p.coefficient({0, 0, 2}) == 1);
    CHECK(power_sum(4, 1).coefficient({4}) == 1);
    CHECK_THROWS_AS(power_sum(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(power_sum(1, 0), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic") {
    const auto x = power_sum(1, 2);
    const auto one = poly_pow(x, 0);
    CHECK(one.term_count() == 1);
    CHECK(one.coefficient({0, 0}) == 1);

    const auto sq = poly_pow(x, 2);
    CHECK(sq.term_count() == 3);
    CHECK(sq.coefficient({2, 0}) == 1);
    CHECK(sq.coefficient({1, 1}) == 2);
    CHECK(sq.coefficient({0, 2}) == 1);

    CHECK(poly_pow(x, 9).coefficient({3, 6}) == oracle::factorial_multinomial({3, 6}));

    const auto diff = poly_add_scaled(sq, sq, -1);
    CHECK(diff.term_count() == 0);

    const auto half = poly_div_scalar(x, 2);
    const auto third = poly_div_scalar(x, 3);
    const auto sum = poly_add_scaled(half, third, 1);  // (1/2 + 1/3) x = 5x/6
    CHECK(sum.scale() == 6);
    CHECK(sum.coefficient({1, 0}) == 5);

    CHECK_THROWS_AS(poly_mul(power_sum(1, 2), power_sum(1, 3)), std::invalid_argument);
    CHECK_THROWS_AS(poly_add_scaled(power_sum(1, 2), power_sum(1, 3), 1), std::invalid_argument);
}

TEST_CASE("cycle_index_cyclic examples") {
    const auto c1 = cycle_index_cyclic(1, 2);
    CHECK(c1.scale() == 1);
    CHECK(c1.debug_string() == power_sum(1, 2).debug_string());

    const auto c4 = cycle_index_cyclic(4, 2);
    CHECK(c4.scale() == 4);
    CHECK(c4.coefficient({2, 2}) == 8);  // 6 + 2 + 0
    CHECK(extract_count(c4, ExponentVector{2, 2}) == 2);
    CHECK(extract_count(c4, ExponentVector{4, 0}) == 1);
    CHECK(extract_count(c4, ColorMultiplicities{4, 0}) == 1);
    CHECK(extract_count(c4, ColorMultiplicities{0, 4}) == 1);

    CHECK(cycle_index_cyclic(3, 3).coefficient({1, 1, 1}) == 6);
}

TEST_CASE("cycle_index_dihedral examples") {
    const auto d2 = cycle_index_dihedral(2, 2);
    CHECK(d2.scale() == 4);
    CHECK(d2.coefficient({1, 1}) == 4);
    CHECK(extract_count(d2, ExponentVector{1, 1}) == 1);

    CHECK(extract_count(cycle_index_dihedral(3, 2), ColorMultiplicities{1, 2}) == 1);
    CHECK(oracle::brute_orbits({3, 3}, true) == 3);
    CHECK(extract_count(cycle_index_dihedral(6, 2), ColorMultiplicities{3, 3}) == 3);
    CHECK(oracle::brute_orbits({1, 1, 2}, true) == 2);
    CHECK(extract_count(cycle_index_dihedral(4, 3), ColorMultiplicities{1, 1, 2}) == 2);
}

TEST_CASE("structure of the scaled cycle indices") {
    for (std::uint64_t N = 1; N <= 10; ++N) {
        for (std::size_t m = 1; m <= 3; ++m) {
            const auto c = cycle_index_cyclic(N, m);
            const auto d = cycle_index_dihedral(N, m);
            CHECK(c.scale() == N);
            CHECK(d.scale() == 2 * N);
            for (const auto& [e, coeff] : c.terms()) CHECK(degree(e) == N);
            for (const auto& [e, coeff] : d.terms()) CHECK(degree(e) == N);

            // x_i = 1: sum_{g|N} phi(g) m^(N/g)
            CHECK(coefficient_sum(c) == oracle::necklace_total(N, m) * N);
        }
    }
}

TEST_CASE("power-sum powers contribute only at multiples of g") {
    for (std::uint64_t N = 2; N <= 10; ++N) {
        for (std::uint64_t g : oracle::divisors_by_scan(N)) {
            const auto p = poly_pow(power_sum(static_cast<std::uint32_t>(g), 3), N / g);
            for (const auto& c : oracle::compositions(N, 3)) {
                ExponentVector e(c.begin(), c.end());
                const bool divisible = std::all_of(c.begin(), c.end(), [&](auto x) { return x % g == 0; });
                if (!divisible) {
                    CHECK(p.coefficient(e) == 0);
                } else {
                    std::vector<std::uint64_t> reduced;
                    for (auto x : c) reduced.push_back(x / g);
                    CHECK(p.coefficient(e) == oracle::factorial_multinomial(reduced));
                }
            }
        }
    }
}

TEST_CASE("extraction matches brute force") {
    for (std::uint64_t N = 1; N <= 8; ++N) {
        const auto c = cycle_index_cyclic(N, 3);
        const auto d = cycle_index_dihedral(N, 3);
        for (const auto& comp : oracle::compositions(N, 3)) {
            ColorMultiplicities n(comp);
            CHECK(extract_count(c, n) == oracle::brute_orbits(comp, false));
            CHECK(extract_count(d, n) == oracle::brute_orbits(comp, true));
        }
    }
}

TEST_CASE("resource guard and error paths") {
    CHECK(monomial_count(12, 4) == 455);
    ExpansionLimits tight{.max_terms = 100};
    CHECK_THROWS_AS(cycle_index_cyclic(12, 4, tight), ResourceLimitError);
    CHECK_THROWS_AS(cycle_index_dihedral(12, 4, tight), ResourceLimitError);
    CHECK_NOTHROW(cycle_index_cyclic(12, 2, tight));

    const auto c3 = cycle_index_cyclic(3, 2);
    CHECK_THROWS_AS(extract_count(c3, ColorMultiplicities{0, 0, 3}), std::invalid_argument);

    // A polynomial that is not a cycle index: x1/2 has no integral coefficient.
    CHECK_THROWS_AS(extract_count(poly_div_scalar(power_sum(1, 1), 2), ExponentVector{1}),
                    IntegralityError);
}
