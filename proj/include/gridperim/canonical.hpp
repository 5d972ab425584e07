#pragma once

#include "gridperim/grid.hpp"

namespace gridperim {

/// Four-parameter family of candidate optimal shapes: `c` flat columns of
/// height `a`, heights then stepping down by one per column, and a final
/// column of height `last`.
struct CanonicalShape {
    i64 a = 1;     // height of the flat block (= first column height)
    i64 c = 1;     // number of flat columns
    i64 k = 1;     // total number of columns
    i64 last = 1;  // height of the final column

    friend bool operator==(const CanonicalShape&, const CanonicalShape&) = default;
};

bool shape_is_valid(const CanonicalShape& s);
void validate_shape(const CanonicalShape& s);  // throws std::invalid_argument

/// Height of column t (1-based).
i64 shape_height(const CanonicalShape& s, i64 t);

ColumnProfile expand(const CanonicalShape& s);

/// Closed-form edge boundary 3a + 2c + k - 3. Exact whenever
/// in_closed_form_regime holds; the solver re-checks witnesses by direct
/// count rather than trusting the formula blindly.
i64 perimeter_formula(const CanonicalShape& s);

/// Closed-form volume (k-1)a + last - (k-c-1)(k-c)/2.
i64 volume_formula(const CanonicalShape& s);

/// Regime in which perimeter_formula provably matches direct counting:
/// k >= 2, c <= k-1 and last <= h_{k-1} - 1 (a strict final descent).
/// Flat rectangles (c == k) and single columns (k == 1) also match in
/// practice; shapes with last == h_{k-1} and c < k count two edges more
/// than the formula. The verification suite enumerates all three classes.
bool in_closed_form_regime(const CanonicalShape& s);

/// Column count for volume n given flat height a and flat width c:
/// ceil((-1 + 2a - sqrt(1 + 8(C(a,2) - n + ca))) / 2) + c, evaluated with
/// exact integer square roots. Throws when the radicand is negative
/// (the full staircase cannot hold n).
i64 solve_k(i64 a, i64 c, i64 n);

/// The unique family shape with parameters (a, c) and volume n.
/// Requires 1 <= a <= n and 1 <= c <= a; validates the derived final
/// column height and throws std::invalid_argument otherwise.
CanonicalShape build_shape(i64 a, i64 c, i64 n);

/// 4a + 3c - 3 - floor((1 + sqrt(1 + 8(C(a,2) - n + ca))) / 2); equals
/// perimeter_formula(build_shape(a, c, n)) on the feasible domain.
i64 objective(i64 a, i64 c, i64 n);

/// Transpose across y = x followed by re-stacking into family form:
/// (a, c, k, last) -> (k, a - k + c, a, last + k - a). Preserves volume
/// and the closed-form perimeter. For degenerate inputs where the mapped
/// parameters are not a valid shape the input is returned unchanged.
CanonicalShape reflect(const CanonicalShape& s);

namespace detail {

i64 isqrt(i64 v);
constexpr i64 ceil_half(i64 p) { return p >= 0 ? (p + 1) / 2 : -((-p) / 2); }

}  // namespace detail

}  // namespace gridperim
