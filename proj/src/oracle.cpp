#include "gridperim/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

namespace gridperim {

namespace {

constexpr int kKingDx[8] = {1, 1, 0, -1, -1, -1, 0, 1};
constexpr int kKingDy[8] = {0, 1, 1, 1, 0, -1, -1, -1};

i64 parse_budget_field(const std::string& text) {
    std::size_t pos = 0;
    const i64 v = std::stoll(text, &pos);
    if (pos != text.size() || v < 1) throw std::invalid_argument("bad budget value");
    return v;
}

void check_budget(i64 n, i64 limit, const char* what) {
    if (n > limit)
        throw BudgetExceeded(std::string(what) + " enumeration budget is " +
                             std::to_string(limit) + ", requested n=" + std::to_string(n));
}

// Cell-level boundary count for a column profile, walking every cell's
// king neighbourhood with membership read off the height array.
i64 boundary_of_heights(std::span<const i64> h) {
    const i64 k = static_cast<i64>(h.size());
    auto member = [&](i64 x, i64 y) {
        return x >= 0 && x < k && y >= 0 && y < h[static_cast<std::size_t>(x)];
    };
    i64 count = 0;
    for (i64 x = 0; x < k; ++x)
        for (i64 y = 0; y < h[static_cast<std::size_t>(x)]; ++y)
            for (int d = 0; d < 8; ++d) {
                const i64 qx = x + kKingDx[d], qy = y + kKingDy[d];
                if (qx < 0 || qy < 0) continue;
                if (!member(qx, qy)) ++count;
            }
    return count;
}

template <class F>
void for_each_partition(i64 n, F&& f) {
    std::vector<i64> parts;
    auto rec = [&](auto&& self, i64 rem, i64 max_part) -> void {
        if (rem == 0) {
            f(std::span<const i64>(parts));
            return;
        }
        for (i64 h = std::min(max_part, rem); h >= 1; --h) {
            parts.push_back(h);
            self(self, rem - h, h);
            parts.pop_back();
        }
    };
    rec(rec, n, n);
}

// Fixed king-connected polyforms by the untried-set method. Cells are
// ordered (y, x) lexicographically and the first cell of every polyform
// is pinned at the origin, so each translation class appears exactly
// once: row 0 left of the origin is off limits, and every recursion
// level works on a private slice of the shared worklist arena while
// `blocked` marks cells already offered higher up.
class PolypletEnumerator {
public:
    explicit PolypletEnumerator(i64 max_cells)
        : n_(max_cells), w_(static_cast<int>(2 * max_cells - 1)), off_(static_cast<int>(max_cells - 1)) {
        blocked_.assign(static_cast<std::size_t>(w_) * (n_ + 1), 0);
        cells_.resize(static_cast<std::size_t>(n_));
        stamp_.assign(static_cast<std::size_t>(w_) * (n_ + 1), 0);
    }

    // visit receives the current cells (origin-pinned coordinates, not
    // yet axis-normalised) once per fixed polyform of every size <= n.
    template <class Visit>
    void run(Visit&& visit) {
        std::vector<int> arena;
        arena.reserve(256);
        const int origin = encode(0, 0);
        blocked_[static_cast<std::size_t>(origin)] = 1;
        arena.push_back(origin);
        recurse(arena, 0, 1, 0, visit);
        blocked_[static_cast<std::size_t>(origin)] = 0;
    }

    // Boundary of the current cells inside the quadrant whose walls sit
    // at the set's own minima (equivalent to normalising first).
    i64 quadrant_boundary(std::span<const Cell> cells) {
        ++stamp_now_;
        i64 min_x = cells[0].x;
        for (const Cell& p : cells) min_x = std::min(min_x, p.x);
        for (const Cell& p : cells)
            stamp_[static_cast<std::size_t>(encode(static_cast<int>(p.x), static_cast<int>(p.y)))] =
                stamp_now_;
        i64 count = 0;
        for (const Cell& p : cells)
            for (int d = 0; d < 8; ++d) {
                const i64 qx = p.x + kKingDx[d], qy = p.y + kKingDy[d];
                if (qx < min_x || qy < 0) continue;
                if (qx > off_ || qy >= n_ ||
                    stamp_[static_cast<std::size_t>(encode(static_cast<int>(qx), static_cast<int>(qy)))] !=
                        stamp_now_)
                    ++count;
            }
        return count;
    }

    static std::vector<Cell> normalized(std::span<const Cell> cells) {
        i64 min_x = cells[0].x;
        for (const Cell& p : cells) min_x = std::min(min_x, p.x);
        std::vector<Cell> out(cells.begin(), cells.end());
        for (Cell& p : out) p.x -= min_x;
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    int encode(int x, int y) const { return y * w_ + x + off_; }

    bool admissible(int x, int y) const {
        if (y < 0 || y >= n_ || x < -off_ || x > off_) return false;
        return y > 0 || x >= 0;
    }

    template <class Visit>
    void recurse(std::vector<int>& arena, std::size_t begin, std::size_t end, int size,
                 Visit& visit) {
        for (std::size_t i = end; i-- > begin;) {
            const int u = arena[i];
            const int ux = u % w_ - off_, uy = u / w_;
            cells_[static_cast<std::size_t>(size)] = {ux, uy};
            visit(std::span<const Cell>(cells_.data(), static_cast<std::size_t>(size) + 1));
            if (size + 1 < n_) {
                const std::size_t child_begin = arena.size();
                for (std::size_t j = begin; j < i; ++j) arena.push_back(arena[j]);
                int added[8];
                int added_count = 0;
                for (int d = 0; d < 8; ++d) {
                    const int vx = ux + kKingDx[d], vy = uy + kKingDy[d];
                    if (!admissible(vx, vy)) continue;
                    const int e = encode(vx, vy);
                    if (blocked_[static_cast<std::size_t>(e)]) continue;
                    blocked_[static_cast<std::size_t>(e)] = 1;
                    arena.push_back(e);
                    added[added_count++] = e;
                }
                recurse(arena, child_begin, arena.size(), size + 1, visit);
                for (int t = 0; t < added_count; ++t)
                    blocked_[static_cast<std::size_t>(added[t])] = 0;
                arena.resize(child_begin);
            }
        }
    }

    i64 n_;
    int w_, off_;
    std::vector<std::uint8_t> blocked_;
    std::vector<Cell> cells_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t stamp_now_ = 0;
};

i64 set_boundary(const std::vector<Cell>& cells) {
    const GridSet s{std::span<const Cell>(cells)};
    return edge_boundary_size(s);
}

}  // namespace

OracleBudget oracle_budget() {
    OracleBudget b;
    const char* env = std::getenv("GRIDPERIM_ORACLE_BUDGET");
    if (!env || !*env) return b;
    try {
        const std::string text(env);
        if (text.find('=') == std::string::npos) {
            b.partitions = b.exhaustive = parse_budget_field(text);
            return b;
        }
        std::size_t at = 0;
        while (at < text.size()) {
            std::size_t stop = text.find(',', at);
            if (stop == std::string::npos) stop = text.size();
            const std::string field = text.substr(at, stop - at);
            const std::size_t eq = field.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("bad field");
            const std::string name = field.substr(0, eq);
            const i64 v = parse_budget_field(field.substr(eq + 1));
            if (name == "partitions")
                b.partitions = v;
            else if (name == "exhaustive")
                b.exhaustive = v;
            else
                throw std::invalid_argument("unknown field");
            at = stop + 1;
        }
    } catch (const std::exception&) {
        throw std::invalid_argument(
            "GRIDPERIM_ORACLE_BUDGET must be an integer or "
            "\"partitions=<int>,exhaustive=<int>\"");
    }
    return b;
}

OracleResult min_perimeter_partitions(i64 n, bool all_witnesses, std::optional<i64> budget) {
    if (n < 1) throw std::invalid_argument("min_perimeter_partitions: volume must be positive");
    check_budget(n, budget.value_or(oracle_budget().partitions), "partition");
    OracleResult out;
    out.n = n;
    out.mode = OracleMode::partitions;
    i64 best = std::numeric_limits<i64>::max();
    for_each_partition(n, [&](std::span<const i64> parts) {
        const i64 b = boundary_of_heights(parts);
        if (b < best) {
            best = b;
            out.profile_witnesses.clear();
        }
        if (b == best && (all_witnesses || out.profile_witnesses.empty()))
            out.profile_witnesses.emplace_back(std::vector<i64>(parts.begin(), parts.end()));
    });
    out.p = best;
    return out;
}

std::vector<VolumeOptima> exhaustive_optima_upto(i64 max_n, std::optional<i64> budget) {
    if (max_n < 1) throw std::invalid_argument("exhaustive_optima_upto: need max_n >= 1");
    check_budget(max_n, budget.value_or(oracle_budget().exhaustive), "exhaustive");
    std::vector<VolumeOptima> optima(static_cast<std::size_t>(max_n));
    for (auto& o : optima) o.p = std::numeric_limits<i64>::max();
    PolypletEnumerator en(max_n);
    en.run([&](std::span<const Cell> cells) {
        auto& slot = optima[cells.size() - 1];
        const i64 b = en.quadrant_boundary(cells);
        if (b > slot.p) return;
        if (b < slot.p) {
            slot.p = b;
            slot.sets.clear();
        }
        slot.sets.push_back(PolypletEnumerator::normalized(cells));
    });
    for (auto& o : optima) std::sort(o.sets.begin(), o.sets.end());
    return optima;
}

OracleResult min_perimeter_exhaustive(i64 n, bool all_witnesses, std::optional<i64> budget) {
    if (n < 1) throw std::invalid_argument("min_perimeter_exhaustive: volume must be positive");
    const auto optima = exhaustive_optima_upto(n, budget);
    const auto& slot = optima[static_cast<std::size_t>(n - 1)];
    OracleResult out;
    out.n = n;
    out.mode = OracleMode::exhaustive;
    out.p = slot.p;
    const std::size_t take = all_witnesses ? slot.sets.size() : 1;
    for (std::size_t i = 0; i < take && i < slot.sets.size(); ++i)
        out.set_witnesses.emplace_back(std::span<const Cell>(slot.sets[i]));
    return out;
}

std::vector<GridSet> enumerate_optimal_sets(i64 n, std::optional<i64> budget) {
    const auto optima = exhaustive_optima_upto(n, budget);
    std::vector<GridSet> out;
    for (const auto& cells : optima[static_cast<std::size_t>(n - 1)].sets)
        out.emplace_back(std::span<const Cell>(cells));
    return out;
}

std::vector<i64> polyplet_counts(i64 max_n) {
    if (max_n < 1) throw std::invalid_argument("polyplet_counts: need max_n >= 1");
    std::vector<i64> counts(static_cast<std::size_t>(max_n), 0);
    PolypletEnumerator en(max_n);
    en.run([&](std::span<const Cell> cells) { ++counts[cells.size() - 1]; });
    return counts;
}

NestedChainReport nested_chain_from_optima(const std::vector<VolumeOptima>& optima) {
    const i64 max_n = static_cast<i64>(optima.size());
    NestedChainReport report;
    report.max_n = max_n;
    report.best_chain_perimeters.assign(static_cast<std::size_t>(max_n), 0);

    // Reachability through the containment DAG, one volume at a time;
    // every chain starts at the unique optimal single cell.
    std::vector<std::uint64_t> ways(optima[0].sets.size(), 1);
    std::vector<std::vector<Cell>> frontier = optima[0].sets;
    report.best_chain_perimeters[0] = optima[0].p;
    report.chains_exist_to = 1;
    report.maximal_chain_count = ways.size();

    std::size_t level = 1;
    for (; level < optima.size(); ++level) {
        const auto& next = optima[level];
        std::vector<std::uint64_t> next_ways;
        std::vector<std::vector<Cell>> next_frontier;
        for (const auto& candidate : next.sets) {
            std::uint64_t total = 0;
            for (std::size_t i = 0; i < frontier.size(); ++i)
                if (std::includes(candidate.begin(), candidate.end(), frontier[i].begin(),
                                  frontier[i].end()))
                    total += ways[i];
            if (total > 0) {
                next_ways.push_back(total);
                next_frontier.push_back(candidate);
            }
        }
        if (next_frontier.empty()) break;
        frontier = std::move(next_frontier);
        ways = std::move(next_ways);
        report.best_chain_perimeters[level] = next.p;
        report.chains_exist_to = static_cast<i64>(level) + 1;
        report.maximal_chain_count = 0;
        for (std::uint64_t w : ways) report.maximal_chain_count += w;
    }

    // Past the all-optimal prefix, grow one cell at a time, keeping the
    // addition with the smallest resulting boundary; ties resolve to the
    // lexicographically smallest cell, then smallest carrier set.
    for (; level < optima.size(); ++level) {
        i64 best = std::numeric_limits<i64>::max();
        Cell best_cell{};
        std::vector<Cell> best_set;
        for (const auto& carrier : frontier) {
            GridSet s{std::span<const Cell>(carrier)};
            std::vector<Cell> candidates;
            for (const Cell& p : carrier)
                for (const Cell& q : neighbors(p))
                    if (!s.contains(q)) candidates.push_back(q);
            std::sort(candidates.begin(), candidates.end());
            candidates.erase(std::unique(candidates.begin(), candidates.end()),
                             candidates.end());
            for (const Cell& q : candidates) {
                std::vector<Cell> grown = carrier;
                grown.push_back(q);
                std::sort(grown.begin(), grown.end());
                const i64 b = set_boundary(grown);
                if (b < best || (b == best && (q < best_cell ||
                                               (q == best_cell && grown < best_set)))) {
                    best = b;
                    best_cell = q;
                    best_set = std::move(grown);
                }
            }
        }
        if (best == std::numeric_limits<i64>::max())
            throw std::logic_error("nested chain: no growth candidate");
        report.best_chain_perimeters[level] = best;
        frontier.assign(1, std::move(best_set));
    }
    return report;
}

NestedChainReport nested_chain_analysis(i64 max_n, std::optional<i64> budget) {
    return nested_chain_from_optima(exhaustive_optima_upto(max_n, budget));
}

}  // namespace gridperim
