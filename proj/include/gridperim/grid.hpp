#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <unordered_set>
#include <vector>

namespace gridperim {

using i64 = std::int64_t;

/// Lattice point in the closed quadrant; coordinates are 0-based.
struct Cell {
    i64 x = 0;
    i64 y = 0;

    friend constexpr bool operator==(const Cell&, const Cell&) = default;
    friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

/// Finite duplicate-free set of cells with O(1) membership.
class GridSet {
public:
    GridSet() = default;
    explicit GridSet(std::span<const Cell> cells);
    GridSet(std::initializer_list<Cell> cells);

    void insert(Cell p);
    bool contains(Cell p) const {
        return p.x >= 0 && p.y >= 0 && keys_.contains(key(p));
    }
    i64 volume() const { return static_cast<i64>(keys_.size()); }

    /// Cells in (x, y) lexicographic order.
    std::vector<Cell> cells() const;

private:
    static std::uint64_t key(Cell p) {
        return (static_cast<std::uint64_t>(p.x) << 32) |
               static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.y));
    }
    std::unordered_set<std::uint64_t> keys_;
};

GridSet translated(const GridSet& a, i64 dx, i64 dy);

/// King neighbours clipped to the quadrant: 3 at the corner, 5 on an
/// axis, 8 in the interior.
std::vector<Cell> neighbors(Cell p);

/// Number of graph edges with exactly one endpoint in `a`.
i64 edge_boundary_size(const GridSet& a);

/// Boundary edges split by geometric direction. `diagonal` is the
/// {(x,y),(x+1,y+1)} class, `antidiagonal` the {(x,y),(x+1,y-1)} class;
/// the latter covers both slanted classes one gets by orienting edges.
struct DirectionCounts {
    i64 horizontal = 0;
    i64 vertical = 0;
    i64 diagonal = 0;
    i64 antidiagonal = 0;

    i64 total() const { return horizontal + vertical + diagonal + antidiagonal; }
    friend bool operator==(const DirectionCounts&, const DirectionCounts&) = default;
};

DirectionCounts boundary_by_direction(const GridSet& a);

/// True iff some absent quadrant point lies strictly below a member of
/// `a` along either coordinate.
bool has_gaps(const GridSet& a);

/// Non-increasing positive column heights (a Young-diagram set).
class ColumnProfile {
public:
    ColumnProfile() = default;
    explicit ColumnProfile(std::vector<i64> heights);

    std::span<const i64> heights() const { return heights_; }
    i64 columns() const { return static_cast<i64>(heights_.size()); }
    i64 height(i64 column) const { return heights_[static_cast<std::size_t>(column)]; }
    i64 volume() const { return volume_; }

    friend bool operator==(const ColumnProfile&, const ColumnProfile&) = default;

private:
    std::vector<i64> heights_;
    i64 volume_ = 0;
};

/// Column t (1-based) becomes x = t-1 with cells y = 0 .. h_t - 1.
GridSet profile_to_set(const ColumnProfile& p);

/// Inverse of profile_to_set; rejects sets with gaps or increasing columns.
ColumnProfile set_to_profile(const GridSet& a);

/// Edge boundary straight from the column heights, O(columns). Counts the
/// same edges as edge_boundary_size(profile_to_set(p)).
i64 profile_edge_boundary(const ColumnProfile& p);
DirectionCounts profile_boundary_by_direction(const ColumnProfile& p);

}  // namespace gridperim
