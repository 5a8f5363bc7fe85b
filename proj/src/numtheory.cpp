#include "necklace/numtheory.hpp"

#include <numeric>
#include <stdexcept>

namespace necklace {

std::string to_decimal(const Count& c) { return c.get_str(10); }

std::string to_fraction_string(const Fraction& f) {
    Fraction canon(f);
    canon.canonicalize();
    if (canon.get_den() == 1) return canon.get_num().get_str(10);
    return canon.get_num().get_str(10) + "/" + canon.get_den().get_str(10);
}

namespace {

// Product of binomials C(k_1, k_1) C(k_1+k_2, k_2) ... keeps intermediates no
// larger than the final result, unlike (sum)! / prod(k!).
Count multinomial_nonnegative(std::span<const std::uint64_t> t) {
    Count result = 1;
    Count factor;
    std::uint64_t running = 0;
    for (std::uint64_t k : t) {
        if (k == 0) continue;
        running += k;
        mpz_bin_uiui(factor.get_mpz_t(), running, k);
        result *= factor;
    }
    return result;
}

}  // namespace

Count multinomial(std::span<const std::uint64_t> t) { return multinomial_nonnegative(t); }

Count multinomial(std::span<const std::int64_t> t) {
    std::vector<std::uint64_t> entries;
    entries.reserve(t.size());
    for (std::int64_t k : t) {
        if (k < 0) return 0;
        entries.push_back(static_cast<std::uint64_t>(k));
    }
    return multinomial_nonnegative(entries);
}

std::uint64_t totient(std::uint64_t g) {
    if (g == 0) throw std::invalid_argument("totient: argument must be positive");
    std::uint64_t result = g;
    std::uint64_t rest = g;
    for (std::uint64_t p = 2; p <= rest / p; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        result -= result / p;
    }
    if (rest > 1) result -= result / rest;
    return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("divisors: argument must be positive");
    std::vector<std::uint64_t> low;
    std::vector<std::uint64_t> high;
    for (std::uint64_t d = 1; d <= n / d; ++d) {
        if (n % d != 0) continue;
        low.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

std::uint64_t gcd_tuple(std::span<const std::uint64_t> n) {
    std::uint64_t g = 0;
    for (std::uint64_t x : n) g = std::gcd(g, x);
    if (g == 0) throw std::invalid_argument("gcd_tuple: tuple has no positive entry");
    return g;
}

}  // namespace necklace
