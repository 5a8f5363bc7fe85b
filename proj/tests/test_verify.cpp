#include "doctest.h"

#include "necklace/verify.hpp"
#include "oracles.hpp"

using namespace necklace;

TEST_CASE("compositions") {
    using V = std::vector<std::vector<std::uint64_t>>;
    CHECK(compositions(4, 2) == V{{4, 0}, {3, 1}, {2, 2}, {1, 3}, {0, 4}});
    CHECK(compositions(3, 1) == V{{3}});
    CHECK(compositions(2, 3) == V{{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}});
    CHECK(compositions(3, 0).empty());
    for (std::uint64_t N = 0; N <= 9; ++N)
        for (std::size_t m = 1; m <= 4; ++m) {
            CHECK(compositions(N, m) == oracle::compositions(N, m));
            CHECK(composition_count(N, m) == compositions(N, m).size());
        }
}

TEST_CASE("run_verification tallies and mismatches") {
    VerifyOptions o;
    o.ranges = {{.colors = 2, .max_n = 6}, {.colors = 4, .max_n = 6}};
    const auto ok = run_verification(o);
    CHECK(ok.ok());
    const std::uint64_t expected = 2 + 3 + 4 + 5 + 6 + 7 + 4 + 10 + 20 + 35 + 56 + 84;
    CHECK(ok.tallies.at(SymmetryGroup::Cyclic).cases == expected);
    CHECK(ok.tallies.at(SymmetryGroup::Dihedral).cases == expected);
    std::uint64_t hits = 0;
    for (const auto& [c, k] : ok.case_hits) hits += k;
    CHECK(hits == expected);

    o.mode = DihedralMode::PaperLiteral;
    o.groups = {SymmetryGroup::Dihedral};
    const auto bad = run_verification(o);
    CHECK_FALSE(bad.ok());
    CHECK(bad.tallies.count(SymmetryGroup::Cyclic) == 0);
    for (const auto& mm : bad.mismatches) {
        REQUIRE(mm.dihedral_case.has_value());
        CHECK((*mm.dihedral_case == DihedralCase::OddOneOdd || *mm.dihedral_case == DihedralCase::EvenOnePair));
        CHECK(mm.cycle_index == mm.brute_force);
    }

    VerifyOptions tight;
    tight.ranges = {{.colors = 3, .max_n = 10}};
    tight.word_limits.max_words = 50;
    CHECK_THROWS_AS(run_verification(tight), ResourceLimitError);
}
