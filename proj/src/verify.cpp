#include "necklace/verify.hpp"

#include <utility>

namespace necklace {

std::vector<std::vector<std::uint64_t>> compositions(std::uint64_t N, std::size_t m) {
    std::vector<std::vector<std::uint64_t>> out;
    if (m == 0) return out;
    std::vector<std::uint64_t> cur(m, 0);
    cur[0] = N;
    while (true) {
        out.push_back(cur);
        // Successor: take one unit from the rightmost nonzero entry that is not
        // last, and give it everything to its right.
        std::size_t i = m - 1;
        while (i > 0 && cur[i - 1] == 0) --i;
        if (i == 0) break;
        --i;
        std::uint64_t rest = 0;
        for (std::size_t j = i + 1; j < m; ++j) rest += std::exchange(cur[j], 0);
        --cur[i];
        cur[i + 1] = rest + 1;
    }
    return out;
}

Count composition_count(std::uint64_t N, std::size_t m) { return monomial_count(N, m); }

namespace {

std::string value_string(const Fraction& f) { return to_fraction_string(f); }

}  // namespace

VerifySummary run_verification(const VerifyOptions& options) {
    VerifySummary summary;
    for (SymmetryGroup g : options.groups) summary.tallies[g];

    for (const VerifyRange& range : options.ranges) {
        for (std::uint64_t N = 1; N <= range.max_n; ++N) {
            std::map<SymmetryGroup, SparsePoly> indices;
            for (SymmetryGroup g : options.groups) {
                indices.emplace(g, g == SymmetryGroup::Cyclic
                                       ? cycle_index_cyclic(N, range.colors, options.term_limits)
                                       : cycle_index_dihedral(N, range.colors, options.term_limits));
            }

            for (const auto& comp : compositions(N, range.colors)) {
                const ColorMultiplicities n(comp);
                for (SymmetryGroup g : options.groups) {
                    Fraction closed;
                    std::optional<DihedralCase> kase;
                    if (g == SymmetryGroup::Cyclic) {
                        closed = Fraction(count_cyclic(n));
                    } else {
                        kase = classify_dihedral_case(n);
                        ++summary.case_hits[*kase];
                        closed = count_dihedral(n, options.mode);
                    }
                    const Count extracted = extract_count(indices.at(g), n);
                    const Count brute = count_orbits(n, g, options.word_limits);

                    GroupTally& tally = summary.tallies[g];
                    ++tally.cases;
                    if (closed == Fraction(extracted) && extracted == brute) continue;
                    ++tally.mismatches;
                    summary.mismatches.push_back(Mismatch{
                        .counts = comp,
                        .group = g,
                        .dihedral_case = kase,
                        .closed_form = value_string(closed),
                        .cycle_index = to_decimal(extracted),
                        .brute_force = to_decimal(brute),
                    });
                }
            }
        }
    }
    return summary;
}

}  // namespace necklace
