#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>

#include "gridperim/grid.hpp"

using namespace gridperim;

namespace {

// Independent edge counter: walk every candidate edge in the bounding
// box once (positive directions only) and keep those with exactly one
// endpoint inside.
i64 brute_edge_count(const GridSet& a) {
    const auto cells = a.cells();
    if (cells.empty()) return 0;
    auto member = [&](i64 x, i64 y) {
        return std::binary_search(cells.begin(), cells.end(), Cell{x, y});
    };
    i64 max_x = 0, max_y = 0;
    for (const Cell& p : cells) {
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }
    const i64 dirs[4][2] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
    i64 count = 0;
    for (i64 x = 0; x <= max_x + 1; ++x)
        for (i64 y = 0; y <= max_y + 1; ++y)
            for (const auto& d : dirs) {
                const i64 x2 = x + d[0], y2 = y + d[1];
                if (y2 < 0) continue;
                if (member(x, y) != member(x2, y2)) ++count;
            }
    return count;
}

GridSet random_set(std::mt19937_64& rng, i64 max_volume) {
    std::uniform_int_distribution<i64> coord(0, 8);
    std::uniform_int_distribution<i64> size(1, max_volume);
    GridSet s;
    const i64 target = size(rng);
    while (s.volume() < target) s.insert({coord(rng), coord(rng)});
    return s;
}

ColumnProfile random_profile(std::mt19937_64& rng) {
    std::uniform_int_distribution<i64> len(1, 9);
    std::uniform_int_distribution<i64> first(1, 9);
    std::vector<i64> h(static_cast<std::size_t>(len(rng)));
    i64 cur = first(rng);
    for (auto& v : h) {
        std::uniform_int_distribution<i64> next(1, cur);
        v = cur = next(rng);
    }
    return ColumnProfile(std::move(h));
}

}  // namespace

TEST_CASE("king neighbourhood clips at the axes") {
    const auto corner = neighbors({0, 0});
    CHECK(corner.size() == 3);
    CHECK(std::find(corner.begin(), corner.end(), Cell{1, 0}) != corner.end());
    CHECK(std::find(corner.begin(), corner.end(), Cell{0, 1}) != corner.end());
    CHECK(std::find(corner.begin(), corner.end(), Cell{1, 1}) != corner.end());
    CHECK(neighbors({5, 0}).size() == 5);
    CHECK(neighbors({0, 7}).size() == 5);
    CHECK(neighbors({3, 4}).size() == 8);
}

TEST_CASE("edge boundary of elementary sets") {
    CHECK(edge_boundary_size(GridSet{}) == 0);
    CHECK(edge_boundary_size(GridSet{{0, 0}}) == 3);
    CHECK(edge_boundary_size(profile_to_set(ColumnProfile({3, 3, 2, 1}))) == 14);
}

TEST_CASE("truncating the full staircase saves exactly one boundary edge") {
    std::vector<i64> simplex(14), truncated(10);
    for (i64 i = 0; i < 14; ++i) simplex[static_cast<std::size_t>(i)] = 14 - i;
    for (i64 i = 0; i < 10; ++i) truncated[static_cast<std::size_t>(i)] = 15 - i;
    const ColumnProfile s(std::move(simplex)), t(std::move(truncated));
    REQUIRE(s.volume() == 105);
    REQUIRE(t.volume() == 105);
    CHECK(edge_boundary_size(profile_to_set(t)) == edge_boundary_size(profile_to_set(s)) - 1);
}

TEST_CASE("direction split of the boundary") {
    const auto corner = boundary_by_direction(GridSet{{0, 0}});
    CHECK(corner.horizontal == 1);
    CHECK(corner.vertical == 1);
    CHECK(corner.diagonal == 1);
    CHECK(corner.antidiagonal == 0);

    const auto stair = boundary_by_direction(profile_to_set(ColumnProfile({3, 3, 2, 1})));
    CHECK(stair.horizontal == 3);
    CHECK(stair.vertical == 4);
    CHECK(stair.total() == 14);
    // a + k - 1 up-right diagonals on the family shape (a=3, c=2, k=4)
    CHECK(stair.diagonal == 6);
}

TEST_CASE("gap detection") {
    CHECK(has_gaps(GridSet{{0, 0}, {0, 2}}));
    CHECK(has_gaps(GridSet{{0, 0}, {2, 0}}));
    CHECK(has_gaps(GridSet{{5, 5}}));
    CHECK(!has_gaps(GridSet{{0, 0}}));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) CHECK(!has_gaps(profile_to_set(random_profile(rng))));
}

TEST_CASE("profile to set placement and back") {
    const GridSet s = profile_to_set(ColumnProfile({2, 1}));
    CHECK(s.volume() == 3);
    CHECK(s.contains({0, 0}));
    CHECK(s.contains({0, 1}));
    CHECK(s.contains({1, 0}));

    const ColumnProfile round(std::vector<i64>{5, 5, 3});
    CHECK(set_to_profile(profile_to_set(round)) == round);
    CHECK(set_to_profile(GridSet{}).columns() == 0);
    CHECK_THROWS_AS(set_to_profile(GridSet{{0, 0}, {0, 2}}), std::invalid_argument);
}

TEST_CASE("profile validation") {
    CHECK_THROWS_AS(ColumnProfile({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(ColumnProfile({2, 0}), std::invalid_argument);
    CHECK(ColumnProfile({4, 2, 2, 1}).volume() == 9);
}

TEST_CASE("two independent edge counters agree on random sets") {
    std::mt19937_64 rng(20240817);
    for (int i = 0; i < 1000; ++i) {
        const GridSet s = random_set(rng, 30);
        const i64 direct = edge_boundary_size(s);
        CHECK(direct == brute_edge_count(s));
        CHECK(direct == boundary_by_direction(s).total());
    }
}

TEST_CASE("column-walk counter matches the cell counter on profiles") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 300; ++i) {
        const ColumnProfile p = random_profile(rng);
        const GridSet s = profile_to_set(p);
        CHECK(profile_edge_boundary(p) == edge_boundary_size(s));
        CHECK(profile_boundary_by_direction(p) == boundary_by_direction(s));
    }
}

TEST_CASE("translating against the walls never helps") {
    std::mt19937_64 rng(31337);
    for (int i = 0; i < 200; ++i) {
        const GridSet s = random_set(rng, 20);
        const GridSet off_axis = translated(s, 1, 1);
        CHECK(edge_boundary_size(off_axis) >= edge_boundary_size(s));
        CHECK(edge_boundary_size(translated(off_axis, -1, 0)) <= edge_boundary_size(off_axis));
        CHECK(edge_boundary_size(translated(off_axis, 0, -1)) <= edge_boundary_size(off_axis));
    }
}
