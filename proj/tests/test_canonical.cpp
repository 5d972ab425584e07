#include <doctest.h>

#include <stdexcept>

#include <random>

#include "gridperim/canonical.hpp"

using namespace gridperim;

namespace {

// Bracketing definition of the column count, evaluated by summation:
// the unique k with sum_{i=1}^{k-c-1}(a-i) < n - c*a <= sum_{i=1}^{k-c}(a-i),
// with k = c when the flat block holds the volume exactly.
i64 bracket_k(i64 a, i64 c, i64 n) {
    const i64 target = n - c * a;
    if (target == 0) return c;
    if (target < 0) return -1;
    i64 below = 0;
    for (i64 m = 1; m <= a; ++m) {
        const i64 upto = below + (a - m);
        if (below < target && target <= upto) return c + m;
        below = upto;
    }
    return -1;
}

CanonicalShape random_valid_shape(std::mt19937_64& rng) {
    std::uniform_int_distribution<i64> pick_a(1, 12), pick_c(1, 15);
    for (;;) {
        const i64 a = pick_a(rng), c = pick_c(rng);
        std::uniform_int_distribution<i64> pick_k(c, c + a);
        const i64 k = pick_k(rng);
        const i64 hkm1 = k - 1 <= c ? a : a - (k - 1 - c);
        if (k > c && hkm1 < 1) continue;
        const i64 top = k == c ? a : std::min(hkm1, a);
        std::uniform_int_distribution<i64> pick_last(k == c ? a : 1, top);
        const CanonicalShape s{a, c, k, pick_last(rng)};
        if (shape_is_valid(s)) return s;
    }
}

}  // namespace

TEST_CASE("expanding family shapes") {
    CHECK(expand({3, 2, 4, 1}) == ColumnProfile({3, 3, 2, 1}));
    CHECK(expand({1, 1, 1, 1}) == ColumnProfile({1}));
    const ColumnProfile big = expand({12, 4, 12, 1});
    CHECK(big == ColumnProfile({12, 12, 12, 12, 11, 10, 9, 8, 7, 6, 5, 1}));
    CHECK(big.volume() == 105);
}

TEST_CASE("invalid parameter combinations are rejected") {
    CHECK_THROWS_AS(expand({3, 2, 7, 1}), std::invalid_argument);   // h_{k-1} < 1
    CHECK_THROWS_AS(expand({3, 1, 4, 2}), std::invalid_argument);   // last above h_{k-1}
    CHECK_THROWS_AS(expand({2, 2, 2, 1}), std::invalid_argument);   // flat block needs last == a
    CHECK_THROWS_AS(expand({3, 4, 3, 3}), std::invalid_argument);   // c > k
    CHECK_THROWS_AS(expand({3, 1, 1, 0}), std::invalid_argument);
}

TEST_CASE("closed forms on the worked shapes") {
    CHECK(perimeter_formula({1, 1, 1, 1}) == 3);
    CHECK(perimeter_formula({3, 2, 4, 1}) == 14);
    CHECK(perimeter_formula({12, 4, 12, 1}) == 53);

    CHECK(volume_formula({1, 1, 1, 1}) == 1);
    CHECK(volume_formula({3, 2, 4, 1}) == 9);
    CHECK(volume_formula({12, 4, 12, 1}) == 105);
}

TEST_CASE("column count from the closed form") {
    CHECK(solve_k(12, 4, 105) == 12);
    CHECK(solve_k(9, 3, 63) == 11);
    CHECK_THROWS_AS(solve_k(2, 1, 10), std::invalid_argument);
}

TEST_CASE("closed form equals the bracketing definition on a small grid") {
    for (i64 n = 1; n <= 120; ++n)
        for (i64 a = 1; a <= n; ++a)
            for (i64 c = 1; c <= a; ++c) {
                if (c * a > n || n > c * a + a * (a - 1) / 2) continue;
                CHECK(solve_k(a, c, n) == bracket_k(a, c, n));
            }
}

TEST_CASE("building the unique shape for (a, c, n)") {
    CHECK(build_shape(3, 2, 9) == CanonicalShape{3, 2, 4, 1});
    CHECK(build_shape(1, 1, 1) == CanonicalShape{1, 1, 1, 1});
    CHECK(build_shape(12, 4, 105) == CanonicalShape{12, 4, 12, 1});
    CHECK_THROWS_AS(build_shape(2, 1, 10), std::invalid_argument);
    CHECK_THROWS_AS(build_shape(3, 3, 5), std::invalid_argument);  // flat block larger than n
    CHECK_THROWS_AS(build_shape(3, 4, 12), std::invalid_argument);  // c > a
}

TEST_CASE("objective closed form") {
    CHECK(objective(12, 4, 105) == 53);
    CHECK(objective(1, 1, 1) == 3);
    CHECK(objective(9, 3, 63) == 41);
    CHECK_THROWS_AS(objective(2, 1, 10), std::invalid_argument);
}

TEST_CASE("reflection fixes shapes with square parameters") {
    const CanonicalShape square{4, 2, 4, 2};
    CHECK(reflect(square) == square);
    CHECK(reflect(CanonicalShape{1, 1, 1, 1}) == CanonicalShape{1, 1, 1, 1});
}

TEST_CASE("reflection preserves volume and the closed-form perimeter") {
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 500; ++i) {
        const CanonicalShape s = random_valid_shape(rng);
        const CanonicalShape t = reflect(s);
        CHECK(shape_is_valid(t));
        CHECK(volume_formula(t) == volume_formula(s));
        CHECK(perimeter_formula(t) <= perimeter_formula(s));
    }
}

TEST_CASE("reflection is the geometric transpose inside the strict regime") {
    for (i64 a = 1; a <= 5; ++a)
        for (i64 c = a + 1; c <= 9; ++c)
            for (i64 k = c; k <= c + a; ++k) {
                const i64 hkm1 = k - 1 <= c ? a : a - (k - 1 - c);
                if (k > c && hkm1 < 1) continue;
                const i64 top = k == c ? a : hkm1;
                for (i64 last = (k == c ? a : 1); last <= top; ++last) {
                    const CanonicalShape s{a, c, k, last};
                    if (!in_closed_form_regime(s) && k != c) continue;
                    const CanonicalShape t = reflect(s);
                    CHECK(volume_formula(t) == volume_formula(s));
                    CHECK(profile_edge_boundary(expand(t)) ==
                          profile_edge_boundary(expand(s)));
                }
            }
}

TEST_CASE("formula regime on a small exhaustive sweep") {
    for (i64 a = 1; a <= 14; ++a)
        for (i64 c = 1; c <= 16; ++c)
            for (i64 k = c; k <= c + a; ++k) {
                const i64 hkm1 = k - 1 <= c ? a : a - (k - 1 - c);
                if (k > c && hkm1 < 1) break;
                for (i64 last = (k == c ? a : 1); last <= (k == c ? a : hkm1); ++last) {
                    const CanonicalShape s{a, c, k, last};
                    const ColumnProfile p = expand(s);
                    CHECK(volume_formula(s) == p.volume());
                    const i64 diff = profile_edge_boundary(p) - perimeter_formula(s);
                    if (in_closed_form_regime(s) || k == 1 || c == k)
                        CHECK(diff == 0);
                    else
                        CHECK(diff == 2);  // flush tail: last == h_{k-1}, c < k
                }
            }
}
