#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace necklace {

/// Exact nonnegative count. Necklace counts and multinomials overflow 64 bits
/// quickly, so everything countable is carried as a GMP integer.
using Count = mpz_class;

/// Exact rational, used only for diagnostic values that may be non-integral.
using Fraction = mpq_class;

std::string to_decimal(const Count& c);

/// "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string to_fraction_string(const Fraction& f);

/// (sum t)! / prod(t_j!). Any negative entry yields 0; the empty tuple yields 1.
Count multinomial(std::span<const std::int64_t> t);
Count multinomial(std::span<const std::uint64_t> t);

/// Euler's phi via trial-division factorization. Throws std::invalid_argument on 0.
std::uint64_t totient(std::uint64_t g);

/// Positive divisors of n in ascending order. Throws std::invalid_argument on 0.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// gcd of the positive entries; zero entries are ignored.
/// Throws std::invalid_argument if every entry is zero (or the tuple is empty).
std::uint64_t gcd_tuple(std::span<const std::uint64_t> n);

}  // namespace necklace
