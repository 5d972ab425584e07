#include "gridperim/analysis.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace gridperim {

std::vector<PerimeterResult> perimeter_table(i64 lo, i64 hi) {
    if (lo < 1 || hi < lo) throw std::invalid_argument("perimeter_table: need 1 <= lo <= hi");
    const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
    std::vector<PerimeterResult> table(count);
    const unsigned workers =
        std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                           static_cast<unsigned>(std::min<std::size_t>(count, 64)));
    if (workers <= 1 || count < 128) {
        for (std::size_t i = 0; i < count; ++i) table[i] = min_perimeter(lo + static_cast<i64>(i));
        return table;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers)
                table[i] = min_perimeter(lo + static_cast<i64>(i));
        });
    for (auto& t : pool) t.join();
    return table;
}

std::vector<PlateauRun> plateaus_in(std::span<const i64> p, i64 lo, i64 min_len) {
    std::vector<PlateauRun> runs;
    std::size_t at = 0;
    while (at < p.size()) {
        std::size_t end = at + 1;
        while (end < p.size() && p[end] == p[at]) ++end;
        const i64 length = static_cast<i64>(end - at);
        if (length >= min_len) runs.push_back({lo + static_cast<i64>(at), length, p[at]});
        at = end;
    }
    return runs;
}

std::vector<PlateauRun> plateaus(i64 lo, i64 hi, i64 min_len) {
    const auto table = perimeter_table(lo, hi);
    std::vector<i64> p(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) p[i] = table[i].p;
    return plateaus_in(p, lo, min_len);
}

std::vector<RatioRow> asymptotic_ratios(std::span<const i64> samples) {
    std::vector<RatioRow> rows;
    rows.reserve(samples.size());
    for (const i64 n : samples) {
        const double root = std::sqrt(static_cast<double>(n));
        RatioRow row;
        row.n = n;
        row.p_over_sqrt = static_cast<double>(min_perimeter(n).p) / root;
        row.lower_over_sqrt = (n >= 2 ? continuous_lower(n) : 3.0) / root;
        if (const auto u = upper_bound_real(n)) row.upper_over_sqrt = *u / root;
        rows.push_back(row);
    }
    return rows;
}

SimplexComparison simplex_comparison() {
    std::vector<i64> simplex_heights(14), truncated_heights(10);
    std::iota(simplex_heights.rbegin(), simplex_heights.rend(), 1);    // 14, 13, ..., 1
    std::iota(truncated_heights.rbegin(), truncated_heights.rend(), 6);  // 15, 14, ..., 6

    SimplexComparison out{ColumnProfile(std::move(simplex_heights)),
                          ColumnProfile(std::move(truncated_heights)),
                          0, 0, 0, 0, 0, 0, {}};
    out.simplex_direct = edge_boundary_size(profile_to_set(out.simplex));
    out.truncated_direct = edge_boundary_size(profile_to_set(out.truncated));
    out.simplex_formula = perimeter_formula({14, 1, 14, 1});
    out.truncated_formula = perimeter_formula({15, 1, 10, 6});
    out.simplex_upper_objective = relaxed_upper_objective(14, 1, 105);
    out.truncated_upper_objective = relaxed_upper_objective(15, 1, 105);
    out.optimum = min_perimeter(105);
    return out;
}

}  // namespace gridperim
