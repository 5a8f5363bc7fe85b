#pragma once

// Three-way cross-check of the closed forms against cycle-index extraction and
// brute-force orbit counting, over every composition in a range.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "necklace/closedform.hpp"
#include "necklace/cycleindex.hpp"
#include "necklace/orbits.hpp"

namespace necklace {

/// Ordered m-tuples of nonnegative integers summing to N, in descending
/// lexicographic order: (N,0,...), (N-1,1,...), ..., (0,...,N).
std::vector<std::vector<std::uint64_t>> compositions(std::uint64_t N, std::size_t m);

/// C(N+m-1, m-1), the length of compositions(N, m).
Count composition_count(std::uint64_t N, std::size_t m);

struct VerifyRange {
    std::size_t colors = 1;
    std::uint64_t max_n = 1;
};

struct VerifyOptions {
    std::vector<VerifyRange> ranges;
    std::vector<SymmetryGroup> groups{SymmetryGroup::Cyclic, SymmetryGroup::Dihedral};
    DihedralMode mode = DihedralMode::Corrected;
    ExpansionLimits term_limits;
    EnumerationLimits word_limits;
};

struct Mismatch {
    std::vector<std::uint64_t> counts;
    SymmetryGroup group = SymmetryGroup::Cyclic;
    std::optional<DihedralCase> dihedral_case;
    std::string closed_form;
    std::string cycle_index;
    std::string brute_force;
};

struct GroupTally {
    std::uint64_t cases = 0;
    std::uint64_t mismatches = 0;
};

struct VerifySummary {
    std::map<SymmetryGroup, GroupTally> tallies;
    std::map<DihedralCase, std::uint64_t> case_hits;  // dihedral checks per branch
    std::vector<Mismatch> mismatches;

    bool ok() const { return mismatches.empty(); }
};

/// Throws ResourceLimitError when a cycle index or enumeration exceeds its limit.
VerifySummary run_verification(const VerifyOptions& options);

}  // namespace necklace
