#include "gridperim/canonical.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gridperim {

namespace detail {

i64 isqrt(i64 v) {
    if (v < 0) throw std::invalid_argument("isqrt: negative input");
    i64 s = static_cast<i64>(std::sqrt(static_cast<double>(v)));
    while (s > 0 && s * s > v) --s;
    while ((s + 1) * (s + 1) <= v) ++s;
    return s;
}

}  // namespace detail

namespace {

// Height of the next-to-last column; only meaningful for k >= 2.
i64 second_to_last_height(const CanonicalShape& s) {
    return s.k - 1 <= s.c ? s.a : s.a - (s.k - 1 - s.c);
}

i64 radicand(i64 a, i64 c, i64 n) {
    return 1 + 8 * (a * (a - 1) / 2 - n + c * a);
}

}  // namespace

bool shape_is_valid(const CanonicalShape& s) {
    if (s.a < 1 || s.c < 1 || s.k < 1 || s.last < 1) return false;
    if (s.c > s.k || s.last > s.a) return false;
    if (s.k == s.c) return s.last == s.a;
    const i64 h = second_to_last_height(s);
    return h >= 1 && s.last <= h;
}

void validate_shape(const CanonicalShape& s) {
    if (!shape_is_valid(s))
        throw std::invalid_argument(
            "invalid shape parameters (a=" + std::to_string(s.a) +
            ", c=" + std::to_string(s.c) + ", k=" + std::to_string(s.k) +
            ", last=" + std::to_string(s.last) + ")");
}

i64 shape_height(const CanonicalShape& s, i64 t) {
    if (t < 1 || t > s.k) throw std::invalid_argument("shape_height: column out of range");
    if (t == s.k) return s.last;
    return t <= s.c ? s.a : s.a - (t - s.c);
}

ColumnProfile expand(const CanonicalShape& s) {
    validate_shape(s);
    std::vector<i64> heights;
    heights.reserve(static_cast<std::size_t>(s.k));
    for (i64 t = 1; t <= s.k; ++t) heights.push_back(shape_height(s, t));
    return ColumnProfile(std::move(heights));
}

i64 perimeter_formula(const CanonicalShape& s) {
    validate_shape(s);
    return 3 * s.a + 2 * s.c + s.k - 3;
}

i64 volume_formula(const CanonicalShape& s) {
    validate_shape(s);
    const i64 m = s.k - s.c;
    return (s.k - 1) * s.a + s.last - (m - 1) * m / 2;
}

bool in_closed_form_regime(const CanonicalShape& s) {
    if (!shape_is_valid(s)) return false;
    return s.k >= 2 && s.c <= s.k - 1 && s.last <= second_to_last_height(s) - 1;
}

i64 solve_k(i64 a, i64 c, i64 n) {
    if (a < 1 || c < 1 || n < 1)
        throw std::invalid_argument("solve_k: parameters must be positive");
    const i64 r = radicand(a, c, n);
    if (r < 0)
        throw std::invalid_argument("solve_k: staircase capacity below requested volume");
    return detail::ceil_half(2 * a - 1 - detail::isqrt(r)) + c;
}

CanonicalShape build_shape(i64 a, i64 c, i64 n) {
    if (n < 1 || a < 1 || a > n)
        throw std::invalid_argument("build_shape: need 1 <= a <= n");
    if (c < 1 || c > a)
        throw std::invalid_argument("build_shape: need 1 <= c <= a");
    const i64 k = solve_k(a, c, n);
    if (k < c)
        throw std::invalid_argument("build_shape: flat block does not fit the volume");
    const i64 m = k - c;
    const CanonicalShape s{a, c, k, n - (k - 1) * a + (m - 1) * m / 2};
    validate_shape(s);
    return s;
}

i64 objective(i64 a, i64 c, i64 n) {
    build_shape(a, c, n);  // shares the feasibility domain
    const i64 s = detail::isqrt(radicand(a, c, n));
    return 4 * a + 3 * c - 3 - (s + 1) / 2;
}

CanonicalShape reflect(const CanonicalShape& s) {
    validate_shape(s);
    const CanonicalShape t{s.k, s.a - s.k + s.c, s.a, s.last + s.k - s.a};
    return shape_is_valid(t) ? t : s;
}

}  // namespace gridperim
