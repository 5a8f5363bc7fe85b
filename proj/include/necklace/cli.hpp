#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "necklace/closedform.hpp"
#include "necklace/cycleindex.hpp"
#include "necklace/orbits.hpp"

namespace necklace::cli {

enum ExitCode : int {
    kSuccess = 0,
    kMismatch = 1,
    kUsage = 2,
    kResourceLimit = 3,
};

enum class Method { ClosedForm, CycleIndex, BruteForce };

std::string_view to_string(Method m);
std::string_view to_string(DihedralMode m);

struct Limits {
    ExpansionLimits terms;
    EnumerationLimits words;
};

/// One computed count, ready for any output format.
struct CountReport {
    std::vector<std::uint64_t> counts;  // as given, zeros included
    std::uint64_t total = 0;
    SymmetryGroup group = SymmetryGroup::Cyclic;
    DihedralMode mode = DihedralMode::Corrected;
    std::optional<DihedralCase> dihedral_case;
    Method method = Method::ClosedForm;
    Fraction value;

    /// Paper-literal values are never presented as plain counts.
    bool diagnostic() const { return mode == DihedralMode::PaperLiteral; }
    std::string value_string() const { return to_fraction_string(value); }
};

/// Throws std::invalid_argument for paper-literal with a method other than
/// the closed form, ResourceLimitError when an oracle would be too large.
CountReport compute_report(const std::vector<std::uint64_t>& counts, SymmetryGroup group,
                           DihedralMode mode, Method method, const Limits& limits);

inline constexpr std::string_view kCsvHeader = "counts,N,group,mode,case,method,value";

nlohmann::json to_json(const CountReport& r);
std::string to_csv_row(const CountReport& r);
std::string to_text(const CountReport& r);

/// "3,6" -> {3, 6}. Throws std::invalid_argument on malformed, negative or
/// all-zero input.
std::vector<std::uint64_t> parse_counts(std::string_view text);

/// Runs the command line (program name excluded) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace necklace::cli
