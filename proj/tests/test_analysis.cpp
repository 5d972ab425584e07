#include <doctest.h>

#include <cmath>

#include "gridperim/analysis.hpp"

using namespace gridperim;

TEST_CASE("perimeter table") {
    const auto table = perimeter_table(1, 4);
    REQUIRE(table.size() == 4);
    CHECK(table[0].p == 3);
    CHECK(table[1].p == 6);
    CHECK(table[2].p == 7);
    CHECK(table[3].p == 9);
    CHECK(perimeter_table(11, 11)[0].p == 16);

    const auto longer = perimeter_table(1, 200);
    for (std::size_t i = 1; i < longer.size(); ++i) CHECK(longer[i].p >= longer[i - 1].p);
}

TEST_CASE("plateau extraction") {
    const auto everything = plateaus(1, 100, 1);
    i64 covered = 0, at = 1;
    bool has_pair = false;
    for (const auto& run : everything) {
        CHECK(run.start == at);  // min_len 1 partitions the range
        at += run.length;
        covered += run.length;
        if (run.length >= 2) has_pair = true;
    }
    CHECK(covered == 100);
    CHECK(has_pair);

    const auto table = perimeter_table(1, 100);
    for (const auto& run : plateaus(1, 100, 2)) {
        for (i64 n = run.start; n < run.start + run.length; ++n)
            CHECK(table[static_cast<std::size_t>(n - 1)].p == run.value);
        if (run.start > 1)
            CHECK(table[static_cast<std::size_t>(run.start - 2)].p < run.value);
        if (run.start + run.length <= 100)
            CHECK(table[static_cast<std::size_t>(run.start + run.length - 1)].p > run.value);
    }
}

TEST_CASE("asymptotic ratios stay inside the bound funnel") {
    const i64 samples[] = {50, 200, 1000, 5000};
    const double limit = 2.0 * std::sqrt(7.0);
    for (const auto& row : asymptotic_ratios(samples)) {
        CHECK(row.lower_over_sqrt < limit);
        CHECK(row.lower_over_sqrt <= row.p_over_sqrt);
        if (row.upper_over_sqrt) {
            CHECK(row.p_over_sqrt <= *row.upper_over_sqrt + 1e-9);
            CHECK(*row.upper_over_sqrt > limit);
        }
    }
}

TEST_CASE("bound ratios converge together at large volumes") {
    const i64 samples[] = {1000000};
    const auto rows = asymptotic_ratios(samples);
    REQUIRE(rows.size() == 1);
    REQUIRE(rows[0].upper_over_sqrt.has_value());
    // gap <= 17.5 squeezes the ratios within 17.5/sqrt(n) of each other
    CHECK(*rows[0].upper_over_sqrt - rows[0].lower_over_sqrt <= 0.02);
    CHECK(rows[0].lower_over_sqrt <= rows[0].p_over_sqrt);
    CHECK(rows[0].p_over_sqrt <= *rows[0].upper_over_sqrt);
}

TEST_CASE("staircase truncation study") {
    const auto cmp = simplex_comparison();
    CHECK(cmp.simplex.volume() == 105);
    CHECK(cmp.truncated.volume() == 105);
    CHECK(cmp.truncated_direct == cmp.simplex_direct - 1);
    CHECK(cmp.simplex_direct == cmp.simplex_formula);
    CHECK(cmp.truncated_direct == cmp.truncated_formula);
    CHECK(cmp.simplex_upper_objective ==
          doctest::Approx(cmp.simplex_formula + 1.0).epsilon(1e-9));
    CHECK(cmp.truncated_upper_objective ==
          doctest::Approx(cmp.truncated_formula + 1.0).epsilon(1e-9));
    CHECK(cmp.optimum.p == 53);
    CHECK(cmp.optimum.certified);
    CHECK(cmp.optimum.p <= cmp.truncated_direct);
}
