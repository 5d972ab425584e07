#pragma once

#include <optional>

#include "gridperim/canonical.hpp"

namespace gridperim {

struct PerimeterResult {
    i64 n = 0;
    i64 p = 0;
    CanonicalShape witness;
    bool certified = false;  // p coincides with the analytic lower bound
};

/// Exact minimum edge boundary over all n-cell sets, found by integer
/// search over the shape family and re-scored by direct counting.
PerimeterResult min_perimeter(i64 n);

/// sqrt(7/2) * sqrt(8n - 1) - 2, the relaxation minimum; n >= 2.
double continuous_lower(i64 n);

/// ceil of continuous_lower for n >= 2; 3 for n = 1.
i64 lower_bound(i64 n);

struct ContinuousMinimizer {
    double a = 0;
    double c = 0;
};

/// Unconstrained minimiser of the relaxed objective; seeds the search.
ContinuousMinimizer continuous_minimizer(i64 n);

/// Relaxed objective at real parameters:
/// 4a + 3c - 3 - (1 + sqrt(1 + 8(a(a-1)/2 - n + ca))) / 2.
double relaxed_objective(double a, double c, i64 n);

/// Same with the rounding slack absorbed (constant -2 instead of -3);
/// an upper bound on the perimeter at feasible integer points.
double relaxed_upper_objective(double a, double c, i64 n);

/// Analytic upper bound on p(n); empty where its inner root turns
/// negative (probed numerically, see upper_bound_min_volume).
std::optional<double> upper_bound_real(i64 n);
std::optional<i64> upper_bound(i64 n);

/// Smallest volume at which upper_bound is defined.
i64 upper_bound_min_volume();

/// Simplified bound with the +1 dropped under the inner root; slightly
/// larger than upper_bound_real and defined a little later. Its gap to
/// the lower bound is monotone, which is what pins the 35/2 constant.
std::optional<double> weakened_upper_real(i64 n);
i64 weakened_upper_min_volume();

struct ConstructionPoint {
    i64 volume = 0;  // 7 m^2
    double bound = 0;  // 15m - sqrt(4m^2 - 12m + 1)/2 - 5/2
};

/// Feasible construction point at volume 7 m^2; requires m >= 3.
ConstructionPoint construction_value(i64 m);

struct GapReport {
    double real_gap = 0;
    i64 rounded_gap = 0;
};

/// Upper minus lower bound, both before and after integer rounding;
/// empty while the upper bound is undefined.
std::optional<GapReport> bound_gap(i64 n);

/// Witness for volume n+1 at unchanged perimeter: defined when the
/// optimal witness has last < h_{k-1} - 1, in which case topping up the
/// final column keeps the boundary count fixed.
std::optional<CanonicalShape> increment_witness(i64 n);
std::optional<CanonicalShape> increment_witness(const PerimeterResult& r);

struct BoundsPair {
    i64 n = 0;
    i64 lower = 0;
    std::optional<i64> upper;
    std::optional<double> gap;  // real-valued gap, when upper is defined
};

BoundsPair bounds_for(i64 n);

}  // namespace gridperim
