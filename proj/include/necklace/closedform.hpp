#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "necklace/errors.hpp"
#include "necklace/numtheory.hpp"

namespace necklace {

/// Per-color bead counts with zero-count colors removed.
class ColorMultiplicities {
public:
    /// Throws std::invalid_argument when every count is zero.
    explicit ColorMultiplicities(std::span<const std::uint64_t> counts);
    ColorMultiplicities(std::initializer_list<std::uint64_t> counts);

    std::span<const std::uint64_t> counts() const { return counts_; }
    /// Position of each retained count in the tuple given to the constructor.
    std::span<const std::size_t> color_labels() const { return labels_; }

    std::uint64_t total() const { return total_; }
    std::size_t colors() const { return counts_.size(); }
    std::uint64_t delta() const { return delta_; }

    friend bool operator==(const ColorMultiplicities&, const ColorMultiplicities&) = default;

private:
    std::vector<std::uint64_t> counts_;
    std::vector<std::size_t> labels_;
    std::uint64_t total_ = 0;
    std::uint64_t delta_ = 0;
};

/// Counts divided through by a common divisor: n_j = d * k_j.
struct ReducedTuple {
    std::vector<std::uint64_t> entries;
    std::uint64_t divisor = 1;

    std::uint64_t total() const;
};

enum class DihedralCase {
    OddOneOdd,
    OddManyOdd,
    EvenAllEven,
    EvenOnePair,
    EvenManyPairs,
};

inline constexpr DihedralCase kAllDihedralCases[] = {
    DihedralCase::OddOneOdd,   DihedralCase::OddManyOdd,    DihedralCase::EvenAllEven,
    DihedralCase::EvenOnePair, DihedralCase::EvenManyPairs,
};

/// snake_case name, e.g. "odd_one_odd".
std::string_view to_string(DihedralCase c);

enum class DihedralMode {
    /// Reflection-fixed term is added to the cyclic necklace count.
    Corrected,
    /// Reflection-fixed term is added to the raw multinomial P(n), as the
    /// one-odd and one-pair formulas are usually printed. Wrong for m >= 2.
    PaperLiteral,
};

/// Throws std::invalid_argument unless d divides every count.
ReducedTuple reduce_by_divisor(const ColorMultiplicities& n, std::uint64_t d);

/// Sum over d | delta of phi(d) * P(n/d). Always a multiple of N.
Count cyclic_orbit_weight(const ColorMultiplicities& n);

/// Number of necklaces with the given bead counts under rotation.
Count count_cyclic(const ColorMultiplicities& n);

DihedralCase classify_dihedral_case(const ColorMultiplicities& n);

/// Number of bracelets (rotation and reflection) with the given bead counts.
Count count_dihedral(const ColorMultiplicities& n);

/// Dihedral count under either mode. PaperLiteral may return a non-integer;
/// Corrected throws IntegralityError if it ever would.
Fraction count_dihedral(const ColorMultiplicities& n, DihedralMode mode);

}  // namespace necklace
