#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "gridperim/grid.hpp"

namespace gridperim {

/// Thrown when an enumeration is asked to exceed its configured limit.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleBudget {
    i64 partitions = 70;
    i64 exhaustive = 11;
};

/// Budgets in effect, honouring GRIDPERIM_ORACLE_BUDGET when set. The
/// variable accepts a single integer (applied to both limits) or the
/// named form "partitions=<int>,exhaustive=<int>".
OracleBudget oracle_budget();

enum class OracleMode { partitions, exhaustive };

struct OracleResult {
    i64 n = 0;
    i64 p = 0;
    OracleMode mode = OracleMode::partitions;
    std::vector<ColumnProfile> profile_witnesses;  // partitions mode
    std::vector<GridSet> set_witnesses;            // exhaustive mode
};

/// Ground-truth minimum by scoring every partition of n as a column
/// profile. `budget` overrides the configured limit when given.
OracleResult min_perimeter_partitions(i64 n, bool all_witnesses = false,
                                      std::optional<i64> budget = std::nullopt);

/// Ground-truth minimum over every king-connected n-cell set, normalised
/// to touch both axes.
OracleResult min_perimeter_exhaustive(i64 n, bool all_witnesses = false,
                                      std::optional<i64> budget = std::nullopt);

/// All connected normalised sets of volume n attaining the minimum.
std::vector<GridSet> enumerate_optimal_sets(i64 n,
                                            std::optional<i64> budget = std::nullopt);

/// Per-volume optima for every volume 1..max_n, gathered in a single
/// enumeration pass. Witness cell lists are sorted.
struct VolumeOptima {
    i64 p = 0;
    std::vector<std::vector<Cell>> sets;
};

std::vector<VolumeOptima> exhaustive_optima_upto(i64 max_n,
                                                 std::optional<i64> budget = std::nullopt);

/// Number of fixed king-connected polyforms of each size 1..max_n
/// (enumeration cross-check; OEIS A006770).
std::vector<i64> polyplet_counts(i64 max_n);

struct NestedChainReport {
    i64 max_n = 0;
    /// Index i holds the best perimeter reachable at volume i+1 by a
    /// nested chain (optimal at every volume while possible, then grown
    /// greedily one cell at a time).
    std::vector<i64> best_chain_perimeters;
    /// Largest volume reachable with every chain member optimal.
    i64 chains_exist_to = 0;
    /// Number of maximal all-optimal chains.
    std::uint64_t maximal_chain_count = 0;
};

NestedChainReport nested_chain_analysis(i64 max_n,
                                        std::optional<i64> budget = std::nullopt);

/// Same analysis over already-computed per-volume optima.
NestedChainReport nested_chain_from_optima(const std::vector<VolumeOptima>& optima);

}  // namespace gridperim
