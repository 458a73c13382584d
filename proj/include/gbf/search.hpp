#pragma once

// Exhaustive search for (m, n)-GBFs over the normalized space f(0) = 0.

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "gbf/gbf.hpp"

namespace gbf {

enum class SearchStatus { WitnessFound, ExhaustedNone, BudgetExhausted };
std::string_view to_string(SearchStatus s);

struct ProgressEvent {
    std::vector<std::int64_t> prefix;  ///< values of f(1), f(2), ... fixed by the finished task
    std::uint64_t examined = 0;
    std::uint64_t pruned = 0;
};

struct SearchOptions {
    /// Cap on covered candidates; nullopt means unlimited.
    std::optional<std::uint64_t> budget;
    bool prune = true;
    /// OpenMP worker count; 0 keeps the runtime default.
    int threads = 0;
    /// Called once per finished task, under a lock.
    std::function<void(const ProgressEvent&)> progress;
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::ExhaustedNone;
    std::optional<GbfFunction> witness;
    std::int64_t m = 0;
    int n = 0;
    std::uint64_t normalized_space = 0;
    /// Candidates covered: evaluated leaves plus leaves eliminated by pruning.
    std::uint64_t examined = 0;
    /// Part of examined that was eliminated by the Walsh bound.
    std::uint64_t pruned = 0;
    double wall_seconds = 0.0;
};

/// m^(2^n - 1); throws std::overflow_error if it does not fit in 64 bits.
std::uint64_t normalized_space_size(std::int64_t m, int n);

/// Parallel search. Work is split on f(1), f(2); the reported witness is the
/// lexicographically first one, so the outcome matches the serial search.
SearchOutcome brute_force(std::int64_t m, int n, const SearchOptions& options = {});

/// Single-threaded reference search over the same DFS order.
SearchOutcome brute_force_serial(std::int64_t m, int n, const SearchOptions& options = {});

}  // namespace gbf
