#include "necklace/orbits.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace necklace {

namespace {

// Compares the image of w under a transform against candidate, bead by bead:
// rotation by `shift`, optionally preceded by reversal.
std::strong_ordering compare_image(const NecklaceWord& w, std::size_t shift, bool reversed,
                                   const NecklaceWord& candidate) {
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t src = reversed ? (n - 1 - (i + shift) % n) : (i + shift) % n;
        if (auto c = w.beads[src] <=> candidate.beads[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

NecklaceWord image(const NecklaceWord& w, std::size_t shift, bool reversed) {
    const std::size_t n = w.size();
    NecklaceWord out;
    out.beads.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        out.beads[i] = w.beads[reversed ? (n - 1 - (i + shift) % n) : (i + shift) % n];
    return out;
}

}  // namespace

std::string to_string(const NecklaceWord& w, std::size_t palette) {
    std::string out;
    for (std::size_t i = 0; i < w.beads.size(); ++i) {
        if (palette <= 10) {
            out += static_cast<char>('0' + w.beads[i]);
        } else {
            if (i > 0) out += ',';
            out += std::to_string(w.beads[i]);
        }
    }
    return out;
}

std::string_view to_string(SymmetryGroup g) {
    return g == SymmetryGroup::Cyclic ? "cyclic" : "dihedral";
}

MultisetWords::MultisetWords(const ColorMultiplicities& n, const EnumerationLimits& limits) {
    if (n.colors() > 256) throw std::invalid_argument("at most 256 colors can be enumerated");
    const Count total = multinomial(n.counts());
    if (total > Count(static_cast<unsigned long>(limits.max_words)))
        throw ResourceLimitError("enumeration would visit " + to_decimal(total) +
                                 " words (limit " + std::to_string(limits.max_words) + ")");
    word_.beads.reserve(n.total());
    const auto counts = n.counts();
    for (std::size_t color = 0; color < counts.size(); ++color)
        word_.beads.insert(word_.beads.end(), counts[color], static_cast<std::uint8_t>(color));
}

bool MultisetWords::next() { return std::ranges::next_permutation(word_.beads).found; }

NecklaceWord canonical_form(const NecklaceWord& w, SymmetryGroup g) {
    NecklaceWord best = w;
    const std::size_t n = w.size();
    for (int reversed = 0; reversed <= (g == SymmetryGroup::Dihedral ? 1 : 0); ++reversed) {
        for (std::size_t shift = 0; shift < n; ++shift) {
            if (compare_image(w, shift, reversed != 0, best) < 0)
                best = image(w, shift, reversed != 0);
        }
    }
    return best;
}

bool is_canonical(const NecklaceWord& w, SymmetryGroup g) {
    const std::size_t n = w.size();
    for (std::size_t shift = 1; shift < n; ++shift)
        if (compare_image(w, shift, false, w) < 0) return false;
    if (g == SymmetryGroup::Dihedral) {
        for (std::size_t shift = 0; shift < n; ++shift)
            if (compare_image(w, shift, true, w) < 0) return false;
    }
    return true;
}

std::size_t orbit_size(const NecklaceWord& w, SymmetryGroup g) {
    std::set<NecklaceWord> images;
    for (int reversed = 0; reversed <= (g == SymmetryGroup::Dihedral ? 1 : 0); ++reversed)
        for (std::size_t shift = 0; shift < std::max<std::size_t>(w.size(), 1); ++shift)
            images.insert(image(w, shift, reversed != 0));
    return images.size();
}

OrbitScan scan_orbits(const ColorMultiplicities& n, SymmetryGroup g,
                      const EnumerationLimits& limits) {
    MultisetWords words(n, limits);
    std::set<NecklaceWord> canonical;
    std::uint64_t scanned = 0;
    std::uint64_t orbit_total = 0;
    do {
        ++scanned;
        const NecklaceWord& w = words.current();
        // Each orbit's minimum is itself one of the enumerated words, so
        // keeping only the self-minimal words collects every canonical form once.
        if (is_canonical(w, g)) {
            canonical.insert(w);
            orbit_total += orbit_size(w, g);
        }
    } while (words.next());

    OrbitScan scan;
    scan.representatives.assign(canonical.begin(), canonical.end());
    scan.words_scanned = Count(static_cast<unsigned long>(scanned));
    scan.orbit_size_total = Count(static_cast<unsigned long>(orbit_total));
    return scan;
}

Count count_orbits(const ColorMultiplicities& n, SymmetryGroup g, const EnumerationLimits& limits) {
    return Count(static_cast<unsigned long>(scan_orbits(n, g, limits).representatives.size()));
}

std::vector<NecklaceWord> representatives(const ColorMultiplicities& n, SymmetryGroup g,
                                          const EnumerationLimits& limits) {
    return scan_orbits(n, g, limits).representatives;
}

}  // namespace necklace
