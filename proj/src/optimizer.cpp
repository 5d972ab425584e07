#include "gridperim/optimizer.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gridperim {

namespace {

// Bound evaluations run in double and are repeated in long double when
// the result lands within 1e-9 of an integer, so that a floor/ceil cliff
// is never decided by the last bit.
template <class F>
i64 careful_ceil(F f) {
    const double v = f(0.0);
    if (std::abs(v - std::nearbyint(v)) < 1e-9) {
        const long double w = f(0.0L);
        const long double r = nearbyintl(w);
        if (fabsl(w - r) < 1e-12L) return static_cast<i64>(r);
        return static_cast<i64>(ceill(w));
    }
    return static_cast<i64>(std::ceil(v));
}

template <class F>
i64 careful_floor(F f) {
    const double v = f(0.0);
    if (std::abs(v - std::nearbyint(v)) < 1e-9) {
        const long double w = f(0.0L);
        const long double r = nearbyintl(w);
        if (fabsl(w - r) < 1e-12L) return static_cast<i64>(r);
        return static_cast<i64>(floorl(w));
    }
    return static_cast<i64>(std::floor(v));
}

template <class T>
T lower_bound_value(i64 n) {
    return std::sqrt(T(3.5)) * std::sqrt(T(8 * n - 1)) - T(2);
}

// Inner pieces of the upper bound: s = n + 2 sqrt(7n) - 8 and the inner
// radicand (4/7)s - (12/sqrt 7) sqrt(s) + extra, where extra is 1 for the
// bound proper and 0 for its weakened variant.
template <class T>
struct UpperParts {
    T s, radicand;
    bool defined;
};

template <class T>
UpperParts<T> upper_parts(i64 n, T extra) {
    const T s = T(n) + 2 * std::sqrt(T(7) * T(n)) - T(8);
    if (s < 0) return {s, 0, false};
    const T r = T(4) / 7 * s - T(12) / std::sqrt(T(7)) * std::sqrt(s) + extra;
    if (r < 0) return {s, r, false};
    return {s, r, true};
}

template <class T>
T upper_value(i64 n, T extra) {
    const auto parts = upper_parts<T>(n, extra);
    return T(15) / std::sqrt(T(7)) * std::sqrt(parts.s) - std::sqrt(parts.radicand) / 2;
}

}  // namespace

double continuous_lower(i64 n) {
    if (n < 2) throw std::invalid_argument("continuous_lower: defined for n >= 2");
    return lower_bound_value<double>(n);
}

i64 lower_bound(i64 n) {
    if (n < 1) throw std::invalid_argument("lower_bound: volume must be positive");
    if (n == 1) return 3;  // corner cell, counted directly
    return careful_ceil([n](auto zero) { return lower_bound_value<decltype(zero)>(n); });
}

ContinuousMinimizer continuous_minimizer(i64 n) {
    if (n < 2) throw std::invalid_argument("continuous_minimizer: defined for n >= 2");
    const double root = std::sqrt(8.0 * static_cast<double>(n) - 1.0);
    return {3.0 * root / (2.0 * std::sqrt(14.0)),
            (14.0 + std::sqrt(14.0) * root) / 28.0};
}

double relaxed_objective(double a, double c, i64 n) {
    const double r = 1.0 + 8.0 * (a * (a - 1.0) / 2.0 - static_cast<double>(n) + c * a);
    return 4.0 * a + 3.0 * c - 3.0 - 0.5 * (1.0 + std::sqrt(r));
}

double relaxed_upper_objective(double a, double c, i64 n) {
    return relaxed_objective(a, c, n) + 1.0;
}

std::optional<double> upper_bound_real(i64 n) {
    if (n < 1) throw std::invalid_argument("upper_bound: volume must be positive");
    if (!upper_parts<double>(n, 1.0).defined) return std::nullopt;
    return upper_value<double>(n, 1.0);
}

std::optional<i64> upper_bound(i64 n) {
    if (!upper_bound_real(n)) return std::nullopt;
    return careful_floor([n](auto zero) {
        using T = decltype(zero);
        return upper_value<T>(n, T(1));
    });
}

i64 upper_bound_min_volume() {
    for (i64 n = 1;; ++n)
        if (upper_parts<double>(n, 1.0).defined) return n;
}

std::optional<double> weakened_upper_real(i64 n) {
    if (n < 1) throw std::invalid_argument("weakened_upper: volume must be positive");
    if (!upper_parts<double>(n, 0.0).defined) return std::nullopt;
    return upper_value<double>(n, 0.0);
}

i64 weakened_upper_min_volume() {
    for (i64 n = 1;; ++n)
        if (upper_parts<double>(n, 0.0).defined) return n;
}

ConstructionPoint construction_value(i64 m) {
    if (m < 3)
        throw std::invalid_argument("construction_value: radicand 4m^2 - 12m + 1 needs m >= 3");
    const double md = static_cast<double>(m);
    return {7 * m * m, 15.0 * md - 0.5 * std::sqrt(4.0 * md * md - 12.0 * md + 1.0) - 2.5};
}

std::optional<GapReport> bound_gap(i64 n) {
    const auto ur = upper_bound_real(n);
    if (!ur) return std::nullopt;
    return GapReport{*ur - lower_bound_value<double>(n), *upper_bound(n) - lower_bound(n)};
}

PerimeterResult min_perimeter(i64 n) {
    if (n < 1) throw std::invalid_argument("min_perimeter: volume must be positive");
    const i64 lb = lower_bound(n);
    i64 best = std::numeric_limits<i64>::max();
    CanonicalShape best_shape;

    // Returns true once the analytic lower bound is attained; nothing can
    // improve on that.
    auto consider = [&](i64 a, i64 c) {
        if (a < 1 || a > n || c < 1 || c > a) return false;
        if (c * a > n || n > c * a + a * (a - 1) / 2) return false;
        CanonicalShape s;
        try {
            s = build_shape(a, c, n);
        } catch (const std::invalid_argument&) {
            return false;
        }
        if (const i64 per = perimeter_formula(s); per < best) {
            best = per;
            best_shape = s;
        }
        return best == lb;
    };

    bool done = false;
    if (n >= 2) {
        const auto seed = continuous_minimizer(n);
        const i64 a0 = std::llround(seed.a), c0 = std::llround(seed.c);
        for (i64 a = a0 - 2; a <= a0 + 2 && !done; ++a)
            for (i64 c = c0 - 2; c <= c0 + 2 && !done; ++c) done = consider(a, c);
    } else {
        done = consider(1, 1);
    }

    // Full scan over the feasible region, pruned against the incumbent:
    // the perimeter is at least 3a + 3c - 3 because k >= c.
    for (i64 a = 1; a <= n && !done; ++a) {
        if (best != std::numeric_limits<i64>::max() && 3 * a >= best) break;
        const i64 tri = a * (a - 1) / 2;
        const i64 deficit = n - tri;
        const i64 cmin = deficit <= 0 ? 1 : (deficit + a - 1) / a;
        const i64 cmax = std::min(a, n / a);
        if (cmin > cmax) continue;
        if (3 * a + 3 * cmin - 3 >= best) continue;
        for (i64 c = cmin; c <= cmax; ++c) {
            if (3 * a + 3 * c - 3 >= best) break;
            if (consider(a, c)) {
                done = true;
                break;
            }
        }
    }

    if (best == std::numeric_limits<i64>::max())
        throw std::logic_error("min_perimeter: no feasible shape found");
    if (profile_edge_boundary(expand(best_shape)) != best)
        throw std::logic_error("min_perimeter: witness re-score mismatch");
    return {n, best, best_shape, best == lb};
}

std::optional<CanonicalShape> increment_witness(const PerimeterResult& r) {
    const CanonicalShape& w = r.witness;
    if (w.k < 2) return std::nullopt;
    const i64 h = w.k - 1 <= w.c ? w.a : w.a - (w.k - 1 - w.c);
    if (w.last >= h - 1) return std::nullopt;
    return CanonicalShape{w.a, w.c, w.k, w.last + 1};
}

std::optional<CanonicalShape> increment_witness(i64 n) {
    return increment_witness(min_perimeter(n));
}

BoundsPair bounds_for(i64 n) {
    BoundsPair out;
    out.n = n;
    out.lower = lower_bound(n);
    out.upper = upper_bound(n);
    if (out.upper) out.gap = *upper_bound_real(n) - lower_bound_value<double>(n);
    return out;
}

}  // namespace gridperim
