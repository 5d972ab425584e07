#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gridperim/optimizer.hpp"

namespace gridperim {

/// Minimum perimeter and witness for every volume in [lo, hi]; volumes
/// are solved independently across a thread pool, output stays ordered.
std::vector<PerimeterResult> perimeter_table(i64 lo, i64 hi);

/// Maximal run of consecutive volumes sharing one minimum perimeter.
struct PlateauRun {
    i64 start = 0;
    i64 length = 0;
    i64 value = 0;

    friend bool operator==(const PlateauRun&, const PlateauRun&) = default;
};

std::vector<PlateauRun> plateaus(i64 lo, i64 hi, i64 min_len);

/// Same over an already-computed table; p[i] is the perimeter at volume
/// lo + i. Runs are maximal within the given window.
std::vector<PlateauRun> plateaus_in(std::span<const i64> p, i64 lo, i64 min_len);

struct RatioRow {
    i64 n = 0;
    double p_over_sqrt = 0;
    double lower_over_sqrt = 0;
    std::optional<double> upper_over_sqrt;
};

/// p(n)/sqrt(n) against the bound ratios; both bound ratios tend to
/// 2*sqrt(7) from opposite sides.
std::vector<RatioRow> asymptotic_ratios(std::span<const i64> samples);

/// The two volume-105 profiles (full staircase 14..1 and truncated
/// staircase 15..6) scored three ways: direct cell count, the closed
/// form, and the relaxed upper objective, next to the true optimum.
struct SimplexComparison {
    ColumnProfile simplex, truncated;
    i64 simplex_direct = 0, truncated_direct = 0;
    i64 simplex_formula = 0, truncated_formula = 0;
    double simplex_upper_objective = 0, truncated_upper_objective = 0;
    PerimeterResult optimum;
};

SimplexComparison simplex_comparison();

}  // namespace gridperim
