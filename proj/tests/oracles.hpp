#pragma once

// Slow reference computations used only by the tests. None of these call into
// the library's counting paths.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include <gmpxx.h>

namespace necklace::oracle {

inline mpz_class factorial_multinomial(const std::vector<std::uint64_t>& t) {
    std::uint64_t total = 0;
    for (auto k : t) total += k;
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), total);
    for (auto k : t) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), k);
        num /= f;
    }
    return num;
}

inline std::uint64_t totient_by_scan(std::uint64_t g) {
    std::uint64_t c = 0;
    for (std::uint64_t i = 1; i <= g; ++i)
        if (std::gcd(i, g) == 1) ++c;
    return c;
}

inline std::vector<std::uint64_t> divisors_by_scan(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

using Word = std::vector<int>;

/// Minimum over every rotation (and reflection) built with std::rotate / std::reverse.
inline Word min_image(Word w, bool with_reflections) {
    Word best = w;
    for (int pass = 0; pass < (with_reflections ? 2 : 1); ++pass) {
        for (std::size_t r = 0; r < w.size(); ++r) {
            best = std::min(best, w);
            std::rotate(w.begin(), w.begin() + 1, w.end());
        }
        std::reverse(w.begin(), w.end());
    }
    return best;
}

/// Calls f on every word of length N over m colors (m^N words).
template <class F>
void for_each_word(std::size_t N, int m, F&& f) {
    Word w(N, 0);
    while (true) {
        f(const_cast<const Word&>(w));
        std::size_t i = 0;
        while (i < N && ++w[i] == m) w[i++] = 0;
        if (i == N) return;
    }
}

/// Orbit count of words with the given color tallies, by scanning all m^N
/// words and collecting distinct minimal images.
inline std::uint64_t brute_orbits(const std::vector<std::uint64_t>& counts, bool with_reflections) {
    std::size_t N = 0;
    for (auto c : counts) N += c;
    std::set<Word> classes;
    const int m = static_cast<int>(counts.size());
    for_each_word(N, m, [&](const Word& w) {
        std::vector<std::uint64_t> tally(counts.size(), 0);
        for (int b : w) ++tally[b];
        if (tally == counts) classes.insert(min_image(w, with_reflections));
    });
    return classes.size();
}

/// Number of orbits over all m^N words.
inline std::uint64_t brute_orbits_all(std::size_t N, int m, bool with_reflections) {
    std::set<Word> classes;
    for_each_word(N, m, [&](const Word& w) { classes.insert(min_image(w, with_reflections)); });
    return classes.size();
}

/// (1/N) sum_{d|N} phi(d) m^(N/d): total m-ary necklaces of length N.
inline mpz_class necklace_total(std::uint64_t N, std::uint64_t m) {
    mpz_class sum = 0;
    for (auto d : divisors_by_scan(N)) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), m, N / d);
        sum += totient_by_scan(d) * p;
    }
    return sum / N;
}

/// All ordered tuples of m nonnegative integers summing to N, in descending
/// lexicographic order.
inline std::vector<std::vector<std::uint64_t>> compositions(std::uint64_t N, std::size_t m) {
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> cur(m, 0);
    auto rec = [&](auto&& self, std::size_t i, std::uint64_t left) -> void {
        if (i + 1 == m) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (std::uint64_t v = left + 1; v-- > 0;) {
            cur[i] = v;
            self(self, i + 1, left - v);
        }
    };
    if (m > 0) rec(rec, 0, N);
    return out;
}

}  // namespace necklace::oracle
