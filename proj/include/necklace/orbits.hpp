#pragma once

// Brute-force orbit counting: enumerate every arrangement of the beads and
// keep the lexicographically smallest member of each orbit. Independent of
// both the closed forms and the cycle-index expansion.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "necklace/closedform.hpp"
#include "necklace/errors.hpp"
#include "necklace/numtheory.hpp"

namespace necklace {

struct NecklaceWord {
    std::vector<std::uint8_t> beads;

    std::size_t size() const { return beads.size(); }
    friend auto operator<=>(const NecklaceWord&, const NecklaceWord&) = default;
    friend bool operator==(const NecklaceWord&, const NecklaceWord&) = default;
};

/// Digits when palette <= 10 (e.g. "0112"), comma-separated otherwise.
std::string to_string(const NecklaceWord& w, std::size_t palette);

enum class SymmetryGroup { Cyclic, Dihedral };

std::string_view to_string(SymmetryGroup g);

struct EnumerationLimits {
    std::uint64_t max_words = 100'000'000;
};

/// Every arrangement of a bead multiset, in lexicographic order. Colors are
/// numbered 0..m-1 in the order of n.counts().
class MultisetWords {
public:
    /// Throws ResourceLimitError if multinomial(n) exceeds the limit.
    explicit MultisetWords(const ColorMultiplicities& n, const EnumerationLimits& limits = {});

    const NecklaceWord& current() const { return word_; }
    /// Steps to the lexicographic successor; false once the stream is exhausted.
    bool next();

private:
    NecklaceWord word_;
};

/// Lexicographically smallest word among the rotations (and, for Dihedral,
/// the rotations of the reversal) of w.
NecklaceWord canonical_form(const NecklaceWord& w, SymmetryGroup g);

/// canonical_form(w, g) == w, with an early exit on the first smaller image.
bool is_canonical(const NecklaceWord& w, SymmetryGroup g);

/// Number of distinct words in the orbit of w.
std::size_t orbit_size(const NecklaceWord& w, SymmetryGroup g);

struct OrbitScan {
    std::vector<NecklaceWord> representatives;  // sorted
    Count words_scanned = 0;
    Count orbit_size_total = 0;  // sum of orbit sizes; equals words_scanned
};

OrbitScan scan_orbits(const ColorMultiplicities& n, SymmetryGroup g,
                      const EnumerationLimits& limits = {});

Count count_orbits(const ColorMultiplicities& n, SymmetryGroup g,
                   const EnumerationLimits& limits = {});

std::vector<NecklaceWord> representatives(const ColorMultiplicities& n, SymmetryGroup g,
                                          const EnumerationLimits& limits = {});

}  // namespace necklace
