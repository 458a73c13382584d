#include "gbf/search.hpp"

#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gbf {

std::string_view to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::WitnessFound: return "WitnessFound";
        case SearchStatus::ExhaustedNone: return "ExhaustedNone";
        case SearchStatus::BudgetExhausted: return "BudgetExhausted";
    }
    return "ExhaustedNone";
}

std::uint64_t normalized_space_size(std::int64_t m, int n) {
    if (m < 1) throw std::invalid_argument("search: m must be positive");
    if (n < 1 || n > 6) throw std::invalid_argument("search: n must lie in [1, 6]");
    const std::uint64_t free_points = (std::uint64_t{1} << n) - 1;
    std::uint64_t s = 1;
    for (std::uint64_t i = 0; i < free_points; ++i)
        if (__builtin_mul_overflow(s, static_cast<std::uint64_t>(m), &s))
            throw std::overflow_error("search space m^(2^n - 1) exceeds 64 bits");
    return s;
}

namespace {

using Clock = std::chrono::steady_clock;
using Complex = std::complex<double>;

/// DFS over f(1), f(2), ... with partial Walsh accumulators.
class SearchKernel {
public:
    struct Result {
        bool found = false;
        bool aborted = false;
        std::vector<std::int64_t> values;
        std::uint64_t covered = 0;
        std::uint64_t pruned = 0;
    };

    SearchKernel(std::int64_t m, int n, bool prune)
        : m_(m), n_(n), size_(std::size_t{1} << n), prune_(prune) {
        roots_.reserve(static_cast<std::size_t>(m));
        for (std::int64_t v = 0; v < m; ++v)
            roots_.push_back(std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(v) / static_cast<double>(m)));
        sign_.resize(size_ * size_);
        for (std::size_t x = 0; x < size_; ++x)
            for (std::size_t y = 0; y < size_; ++y) sign_[x * size_ + y] = (std::popcount(x & y) % 2) ? -1.0 : 1.0;
        subtree_.assign(size_, 1);
        for (std::size_t k = 1; k < size_; ++k) subtree_[k] = subtree_[k - 1] * static_cast<std::uint64_t>(m);
        const double root_size = std::sqrt(static_cast<double>(size_));
        limit_sq_.resize(size_);
        for (std::size_t u = 0; u < size_; ++u) {
            const double lim = root_size + static_cast<double>(u) + 1e-9;
            limit_sq_[u] = lim * lim;
        }
    }

    template <class Stop>
    Result run(std::span<const std::int64_t> prefix, Stop&& stop) const {
        Result r;
        std::vector<Complex> acc((size_ + 1) * size_, Complex(0.0, 0.0));
        std::vector<std::int64_t> values(size_, 0);
        for (std::size_t y = 0; y < size_; ++y) acc[size_ + y] = 1.0;  // level 1: f(0) = 0 assigned

        const std::size_t fixed = prefix.size();
        for (std::size_t k = 0; k < fixed; ++k) {
            values[k + 1] = prefix[k];
            if (!assign(acc, k + 1, prefix[k])) {
                r.covered = r.pruned = subtree_[size_ - 1 - fixed];
                return r;
            }
        }

        auto dfs = [&](auto& self, std::size_t x) -> void {
            if (x == size_) {
                ++r.covered;
                if (is_witness(acc, values)) {
                    r.found = true;
                    r.values = values;
                }
                return;
            }
            for (std::int64_t v = 0; v < m_; ++v) {
                if (stop(r.covered)) {
                    r.aborted = true;
                    return;
                }
                values[x] = v;
                if (!assign(acc, x, v)) {
                    const std::uint64_t sub = subtree_[size_ - 1 - x];
                    r.covered += sub;
                    r.pruned += sub;
                    continue;
                }
                self(self, x + 1);
                if (r.found || r.aborted) return;
            }
            values[x] = 0;
        };
        dfs(dfs, fixed + 1);
        return r;
    }

private:
    /// Fills level x + 1 from level x with f(x) = v; false if pruned.
    bool assign(std::vector<Complex>& acc, std::size_t x, std::int64_t v) const {
        const Complex z = roots_[static_cast<std::size_t>(v)];
        const Complex* src = acc.data() + x * size_;
        Complex* dst = acc.data() + (x + 1) * size_;
        const double* sg = sign_.data() + x * size_;
        bool ok = true;
        const double lim = limit_sq_[size_ - 1 - x];
        for (std::size_t y = 0; y < size_; ++y) {
            dst[y] = src[y] + z * sg[y];
            if (prune_ && std::norm(dst[y]) > lim) ok = false;
        }
        return ok;
    }

    bool is_witness(const std::vector<Complex>& acc, const std::vector<std::int64_t>& values) const {
        const Complex* f = acc.data() + size_ * size_;
        const auto target = static_cast<double>(size_);
        for (std::size_t y = 0; y < size_; ++y)
            if (std::abs(std::norm(f[y]) - target) > 1e-6) return false;
        return is_gbf_exact(GbfFunction(m_, n_, values));
    }

    std::int64_t m_;
    int n_;
    std::size_t size_;
    bool prune_;
    std::vector<Complex> roots_;
    std::vector<double> sign_;
    std::vector<std::uint64_t> subtree_;
    std::vector<double> limit_sq_;
};

SearchOutcome make_outcome(std::int64_t m, int n, std::uint64_t space) {
    SearchOutcome o;
    o.m = m;
    o.n = n;
    o.normalized_space = space;
    return o;
}

}  // namespace

SearchOutcome brute_force_serial(std::int64_t m, int n, const SearchOptions& options) {
    const auto start = Clock::now();
    SearchOutcome out = make_outcome(m, n, normalized_space_size(m, n));
    const SearchKernel kernel(m, n, options.prune);
    const auto budget = options.budget;
    auto res = kernel.run({}, [&](std::uint64_t covered) { return budget && covered > *budget; });
    out.examined = res.covered;
    out.pruned = res.pruned;
    if (res.found) {
        out.status = SearchStatus::WitnessFound;
        out.witness = GbfFunction(m, n, std::move(res.values));
    } else if (res.aborted) {
        out.status = SearchStatus::BudgetExhausted;
    } else {
        out.status = SearchStatus::ExhaustedNone;
    }
    if (options.progress) options.progress({{}, out.examined, out.pruned});
    out.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return out;
}

SearchOutcome brute_force(std::int64_t m, int n, const SearchOptions& options) {
    const auto start = Clock::now();
    SearchOutcome out = make_outcome(m, n, normalized_space_size(m, n));
    const SearchKernel kernel(m, n, options.prune);

    const std::size_t free_points = (std::size_t{1} << n) - 1;
    const std::size_t split = std::min<std::size_t>(2, free_points);
    std::int64_t tasks = 1;
    for (std::size_t i = 0; i < split; ++i) tasks *= m;

    std::vector<SearchKernel::Result> results(static_cast<std::size_t>(tasks));
    std::atomic<std::int64_t> best{tasks};
    std::atomic<std::uint64_t> global_covered{0};
    std::atomic<bool> budget_hit{false};
    std::mutex progress_mu;
    const auto budget = options.budget;

#ifdef _OPENMP
    const int workers = options.threads > 0 ? options.threads : omp_get_max_threads();
#else
    const int workers = 1;
#endif
    (void)workers;

#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (std::int64_t t = 0; t < tasks; ++t) {
        auto& slot = results[static_cast<std::size_t>(t)];
        if (t > best.load(std::memory_order_relaxed) || budget_hit.load(std::memory_order_relaxed)) {
            slot.aborted = true;
            continue;
        }
        std::vector<std::int64_t> prefix(split);
        for (std::size_t k = split, rest = static_cast<std::size_t>(t); k-- > 0; rest /= static_cast<std::size_t>(m))
            prefix[k] = static_cast<std::int64_t>(rest % static_cast<std::size_t>(m));

        std::uint64_t flushed = 0;
        auto stop = [&](std::uint64_t covered) {
            if (best.load(std::memory_order_relaxed) < t) return true;
            if (!budget) return false;
            if (covered - flushed >= (1u << 16)) {
                global_covered.fetch_add(covered - flushed, std::memory_order_relaxed);
                flushed = covered;
            }
            if (global_covered.load(std::memory_order_relaxed) + (covered - flushed) > *budget)
                budget_hit.store(true, std::memory_order_relaxed);
            return budget_hit.load(std::memory_order_relaxed);
        };
        slot = kernel.run(prefix, stop);
        global_covered.fetch_add(slot.covered - flushed, std::memory_order_relaxed);
        if (budget && global_covered.load(std::memory_order_relaxed) > *budget && !slot.found)
            budget_hit.store(true, std::memory_order_relaxed);
        if (slot.found) {
            std::int64_t cur = best.load();
            while (t < cur && !best.compare_exchange_weak(cur, t)) {
            }
        }
        if (options.progress && !slot.aborted) {
            std::lock_guard lock(progress_mu);
            options.progress({prefix, slot.covered, slot.pruned});
        }
    }

    const std::int64_t winner = best.load();
    const std::int64_t counted = winner < tasks ? winner + 1 : tasks;
    for (std::int64_t t = 0; t < counted; ++t) {
        out.examined += results[static_cast<std::size_t>(t)].covered;
        out.pruned += results[static_cast<std::size_t>(t)].pruned;
    }
    if (budget_hit.load()) {
        out.status = SearchStatus::BudgetExhausted;
    } else if (winner < tasks) {
        out.status = SearchStatus::WitnessFound;
        out.witness = GbfFunction(m, n, results[static_cast<std::size_t>(winner)].values);
    } else {
        out.status = SearchStatus::ExhaustedNone;
    }
    out.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return out;
}

}  // namespace gbf
