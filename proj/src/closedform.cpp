#include "necklace/closedform.hpp"

#include <algorithm>
#include <string>

namespace necklace {

ColorMultiplicities::ColorMultiplicities(std::span<const std::uint64_t> counts) {
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] == 0) continue;
        counts_.push_back(counts[i]);
        labels_.push_back(i);
        total_ += counts[i];
    }
    if (counts_.empty()) throw std::invalid_argument("color counts must include a positive entry");
    delta_ = gcd_tuple(counts_);
}

ColorMultiplicities::ColorMultiplicities(std::initializer_list<std::uint64_t> counts)
    : ColorMultiplicities(std::span<const std::uint64_t>(counts.begin(), counts.size())) {}

std::uint64_t ReducedTuple::total() const {
    std::uint64_t sum = 0;
    for (std::uint64_t k : entries) sum += k;
    return sum;
}

std::string_view to_string(DihedralCase c) {
    switch (c) {
        case DihedralCase::OddOneOdd: return "odd_one_odd";
        case DihedralCase::OddManyOdd: return "odd_many_odd";
        case DihedralCase::EvenAllEven: return "even_all_even";
        case DihedralCase::EvenOnePair: return "even_one_pair";
        case DihedralCase::EvenManyPairs: return "even_many_pairs";
    }
    return "unknown";
}

ReducedTuple reduce_by_divisor(const ColorMultiplicities& n, std::uint64_t d) {
    if (d == 0 || n.delta() % d != 0)
        throw std::invalid_argument("reduce_by_divisor: " + std::to_string(d) +
                                    " does not divide every color count");
    ReducedTuple r{.entries = {}, .divisor = d};
    r.entries.reserve(n.colors());
    for (std::uint64_t c : n.counts()) r.entries.push_back(c / d);
    return r;
}

Count cyclic_orbit_weight(const ColorMultiplicities& n) {
    Count sum = 0;
    for (std::uint64_t d : divisors(n.delta())) {
        sum += Count(static_cast<unsigned long>(totient(d))) *
               multinomial(std::span<const std::uint64_t>(reduce_by_divisor(n, d).entries));
    }
    return sum;
}

namespace {

Count exact_quotient(const Count& numerator, const Count& denominator, const char* what) {
    if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t()))
        throw IntegralityError(std::string(what) + ": " + to_decimal(numerator) +
                               " is not divisible by " + to_decimal(denominator));
    Count q;
    mpz_divexact(q.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
    return q;
}

Count as_count(std::uint64_t v) { return Count(static_cast<unsigned long>(v)); }

std::size_t odd_entries(const ColorMultiplicities& n) {
    return static_cast<std::size_t>(
        std::ranges::count_if(n.counts(), [](std::uint64_t c) { return c % 2 == 1; }));
}

// Floor-halves every count: n_j = 2 a_j (+1 for the odd ones).
std::vector<std::uint64_t> halved(const ColorMultiplicities& n) {
    std::vector<std::uint64_t> h;
    h.reserve(n.colors());
    for (std::uint64_t c : n.counts()) h.push_back(c / 2);
    return h;
}

// Half of (rotation orbits + reflection-fixed colorings). Rotation orbits are
// gamma(C_N), or P(n) in literal mode for the two branches where the printed
// formula uses it.
Fraction dihedral_value(const ColorMultiplicities& n, DihedralMode mode) {
    const Count cyclic = count_cyclic(n);
    const DihedralCase kase = classify_dihedral_case(n);
    const auto half = halved(n);

    auto one_term = [&](const Count& reflections) {
        Count rotations = cyclic;
        if (mode == DihedralMode::PaperLiteral) rotations = multinomial(n.counts());
        return Fraction(Count(rotations + reflections), Count(2));
    };

    switch (kase) {
        case DihedralCase::OddOneOdd:
        case DihedralCase::EvenOnePair:
            return one_term(multinomial(std::span<const std::uint64_t>(half)));
        case DihedralCase::OddManyOdd:
        case DihedralCase::EvenManyPairs:
            return Fraction(cyclic, Count(2));
        case DihedralCase::EvenAllEven: {
            Count fixed_with_beads = 0;
            std::vector<std::int64_t> b(half.begin(), half.end());
            for (std::size_t q = 0; q < b.size(); ++q) {
                --b[q];
                fixed_with_beads += multinomial(std::span<const std::int64_t>(b));
                ++b[q];
            }
            const Count fixed_no_beads = multinomial(std::span<const std::uint64_t>(half));
            return Fraction(Count(2 * cyclic + fixed_with_beads + fixed_no_beads), Count(4));
        }
    }
    throw std::logic_error("unreachable dihedral case");
}

}  // namespace

Count count_cyclic(const ColorMultiplicities& n) {
    return exact_quotient(cyclic_orbit_weight(n), as_count(n.total()), "count_cyclic");
}

DihedralCase classify_dihedral_case(const ColorMultiplicities& n) {
    const std::size_t odd = odd_entries(n);
    if (n.total() % 2 == 1) return odd == 1 ? DihedralCase::OddOneOdd : DihedralCase::OddManyOdd;
    if (odd == 0) return DihedralCase::EvenAllEven;
    return odd == 2 ? DihedralCase::EvenOnePair : DihedralCase::EvenManyPairs;
}

Count count_dihedral(const ColorMultiplicities& n) {
    Fraction v = dihedral_value(n, DihedralMode::Corrected);
    v.canonicalize();
    if (v.get_den() != 1)
        throw IntegralityError("count_dihedral: non-integral value " + to_fraction_string(v) +
                               " in case " + std::string(to_string(classify_dihedral_case(n))));
    return v.get_num();
}

Fraction count_dihedral(const ColorMultiplicities& n, DihedralMode mode) {
    if (mode == DihedralMode::Corrected) return Fraction(count_dihedral(n));
    Fraction v = dihedral_value(n, mode);
    v.canonicalize();
    return v;
}

}  // namespace necklace
