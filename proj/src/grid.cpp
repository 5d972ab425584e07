#include "gridperim/grid.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace gridperim {

namespace {

constexpr int kKingDx[8] = {1, 1, 0, -1, -1, -1, 0, 1};
constexpr int kKingDy[8] = {0, 1, 1, 1, 0, -1, -1, -1};

}  // namespace

GridSet::GridSet(std::span<const Cell> cells) {
    keys_.reserve(cells.size() * 2);
    for (const Cell& p : cells) insert(p);
}

GridSet::GridSet(std::initializer_list<Cell> cells) {
    keys_.reserve(cells.size() * 2);
    for (const Cell& p : cells) insert(p);
}

void GridSet::insert(Cell p) {
    if (p.x < 0 || p.y < 0)
        throw std::invalid_argument("GridSet: cells must have non-negative coordinates");
    keys_.insert(key(p));
}

std::vector<Cell> GridSet::cells() const {
    std::vector<Cell> out;
    out.reserve(keys_.size());
    for (std::uint64_t k : keys_)
        out.push_back({static_cast<i64>(k >> 32),
                       static_cast<i64>(static_cast<std::uint32_t>(k))});
    std::sort(out.begin(), out.end());
    return out;
}

GridSet translated(const GridSet& a, i64 dx, i64 dy) {
    GridSet out;
    for (const Cell& p : a.cells()) out.insert({p.x + dx, p.y + dy});
    return out;
}

std::vector<Cell> neighbors(Cell p) {
    if (p.x < 0 || p.y < 0)
        throw std::invalid_argument("neighbors: cell outside the quadrant");
    std::vector<Cell> out;
    out.reserve(8);
    for (int d = 0; d < 8; ++d) {
        const Cell q{p.x + kKingDx[d], p.y + kKingDy[d]};
        if (q.x >= 0 && q.y >= 0) out.push_back(q);
    }
    return out;
}

i64 edge_boundary_size(const GridSet& a) {
    // Every boundary edge has exactly one endpoint inside, so walking the
    // inside endpoints counts each edge once.
    i64 count = 0;
    for (const Cell& p : a.cells()) {
        for (int d = 0; d < 8; ++d) {
            const Cell q{p.x + kKingDx[d], p.y + kKingDy[d]};
            if (q.x >= 0 && q.y >= 0 && !a.contains(q)) ++count;
        }
    }
    return count;
}

DirectionCounts boundary_by_direction(const GridSet& a) {
    DirectionCounts counts;
    for (const Cell& p : a.cells()) {
        for (int d = 0; d < 8; ++d) {
            const i64 dx = kKingDx[d], dy = kKingDy[d];
            const Cell q{p.x + dx, p.y + dy};
            if (q.x < 0 || q.y < 0 || a.contains(q)) continue;
            if (dy == 0)
                ++counts.horizontal;
            else if (dx == 0)
                ++counts.vertical;
            else if (dx == dy)
                ++counts.diagonal;
            else
                ++counts.antidiagonal;
        }
    }
    return counts;
}

bool has_gaps(const GridSet& a) {
    // A column (row) is gap-free iff its occupied positions are exactly
    // 0 .. max, i.e. the count equals max + 1.
    std::unordered_map<i64, std::pair<i64, i64>> cols, rows;  // count, max
    for (const Cell& p : a.cells()) {
        auto& c = cols.try_emplace(p.x, 0, -1).first->second;
        ++c.first;
        c.second = std::max(c.second, p.y);
        auto& r = rows.try_emplace(p.y, 0, -1).first->second;
        ++r.first;
        r.second = std::max(r.second, p.x);
    }
    for (const auto& [x, c] : cols)
        if (c.first != c.second + 1) return true;
    for (const auto& [y, r] : rows)
        if (r.first != r.second + 1) return true;
    return false;
}

ColumnProfile::ColumnProfile(std::vector<i64> heights) : heights_(std::move(heights)) {
    for (std::size_t t = 0; t < heights_.size(); ++t) {
        if (heights_[t] < 1)
            throw std::invalid_argument("ColumnProfile: heights must be positive");
        if (t > 0 && heights_[t] > heights_[t - 1])
            throw std::invalid_argument("ColumnProfile: heights must be non-increasing");
        volume_ += heights_[t];
    }
}

GridSet profile_to_set(const ColumnProfile& p) {
    GridSet out;
    for (i64 x = 0; x < p.columns(); ++x)
        for (i64 y = 0; y < p.height(x); ++y) out.insert({x, y});
    return out;
}

ColumnProfile set_to_profile(const GridSet& a) {
    if (a.volume() == 0) return ColumnProfile{};
    if (has_gaps(a))
        throw std::invalid_argument("set_to_profile: set has gaps");
    i64 max_x = 0;
    for (const Cell& p : a.cells()) max_x = std::max(max_x, p.x);
    std::vector<i64> heights(static_cast<std::size_t>(max_x) + 1, 0);
    for (const Cell& p : a.cells()) ++heights[static_cast<std::size_t>(p.x)];
    for (std::size_t t = 1; t < heights.size(); ++t)
        if (heights[t] > heights[t - 1])
            throw std::invalid_argument("set_to_profile: column heights increase");
    return ColumnProfile(std::move(heights));
}

DirectionCounts profile_boundary_by_direction(const ColumnProfile& p) {
    const i64 k = p.columns();
    DirectionCounts counts;
    if (k == 0) return counts;
    // One vertical edge tops each column, one horizontal edge ends each
    // row. Up-right diagonals telescope to h1 + k - 1. Anti-diagonals
    // come in two kinds: h(x) - h(x+1) - 1 leaving the descent at column
    // x, plus one crossing each pair of equal-height columns, plus
    // h(k-1) - 1 leaving the last column.
    counts.vertical = k;
    counts.horizontal = p.height(0);
    counts.diagonal = p.height(0) + k - 1;
    i64 anti = p.height(k - 1) - 1;
    for (i64 x = 0; x + 1 < k; ++x) {
        const i64 drop = p.height(x) - p.height(x + 1);
        anti += std::max<i64>(drop - 1, 0) + (drop == 0 ? 1 : 0);
    }
    counts.antidiagonal = anti;
    return counts;
}

i64 profile_edge_boundary(const ColumnProfile& p) {
    return profile_boundary_by_direction(p).total();
}

}  // namespace gridperim
