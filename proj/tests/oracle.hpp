#pragma once

// Independent reference computations for tests. Everything here works from
// first principles (floating point or naive enumeration) and shares no code
// with the library beyond the plain data types.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using cd = std::complex<double>;

inline cd root(std::int64_t num, std::int64_t den) {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(num % den) / static_cast<double>(den);
    return {std::cos(a), std::sin(a)};
}

/// sum_i c_i zeta_d^{t i}
inline cd char_eval(const std::vector<std::int64_t>& c, std::int64_t d, std::int64_t t = 1) {
    cd s = 0;
    for (std::size_t i = 0; i < c.size(); ++i) s += static_cast<double>(c[i]) * root(static_cast<std::int64_t>(i) * t, d);
    return s;
}

inline bool vanishes(const std::vector<std::int64_t>& c, std::int64_t d) { return std::abs(char_eval(c, d)) < 1e-8; }

/// Nonzero nonnegative vanishing vector with no nonzero proper vanishing sub-vector.
inline bool minimal_vsum(const std::vector<std::int64_t>& c) {
    const auto m = static_cast<std::int64_t>(c.size());
    if (!vanishes(c, m)) return false;
    bool nonzero = false;
    for (auto v : c) nonzero = nonzero || v != 0;
    if (!nonzero) return false;
    std::vector<std::int64_t> sub(c.size(), 0);
    // odometer over 0 <= sub <= c, skipping 0 and c itself
    while (true) {
        std::size_t i = 0;
        while (i < sub.size() && sub[i] == c[i]) sub[i++] = 0;
        if (i == sub.size()) return true;
        ++sub[i];
        if (sub == c) continue;
        if (vanishes(sub, m)) return false;
    }
}

inline std::int64_t order_of(std::int64_t i, std::int64_t m) { return m / std::gcd(((i % m) + m) % m, m); }

/// Smallest k such that some translate of the support lies in the order-k subgroup.
inline std::int64_t reduced_exponent(const std::vector<std::int64_t>& c) {
    const auto m = static_cast<std::int64_t>(c.size());
    for (std::int64_t k = 1; k <= m; ++k) {
        if (m % k != 0) continue;
        for (std::int64_t j = 0; j < m; ++j) {
            if (c[static_cast<std::size_t>(j)] == 0) continue;
            bool ok = true;
            for (std::int64_t i = 0; i < m && ok; ++i)
                if (c[static_cast<std::size_t>(i)] != 0 && ((i - j + m) * k) % m != 0) ok = false;
            if (ok) return k;
        }
    }
    return m;
}

/// F(y) = sum_x zeta_m^{f(x)} (-1)^{<x,y>}, computed directly.
inline std::vector<cd> walsh(std::int64_t m, const std::vector<std::int64_t>& f) {
    const std::size_t size = f.size();
    std::vector<cd> out(size);
    for (std::size_t y = 0; y < size; ++y) {
        cd s = 0;
        for (std::size_t x = 0; x < size; ++x) {
            const double sign = (__builtin_popcountll(x & y) & 1) ? -1.0 : 1.0;
            s += sign * root(f[x], m);
        }
        out[y] = s;
    }
    return out;
}

inline bool bent(std::int64_t m, const std::vector<std::int64_t>& f) {
    for (const auto& v : walsh(m, f))
        if (std::abs(std::norm(v) - static_cast<double>(f.size())) > 1e-6) return false;
    return true;
}

/// First bent function with f(0) = 0 in lexicographic order of (f(1), f(2), ...).
inline std::optional<std::vector<std::int64_t>> first_bent(std::int64_t m, int n) {
    const std::size_t size = std::size_t{1} << n;
    std::vector<std::int64_t> f(size, 0);
    while (true) {
        if (bent(m, f)) return f;
        std::size_t i = size - 1;
        while (i >= 1 && f[i] == m - 1) f[i--] = 0;
        if (i == 0) return std::nullopt;
        ++f[i];
    }
}

/// Every nonnegative vector in N^m with 1 <= norm <= max_norm.
template <class F>
void for_each_vector(std::int64_t m, std::int64_t max_norm, F&& visit) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(m), 0);
    auto rec = [&](auto& self, std::size_t i, std::int64_t left) -> void {
        if (i == c.size()) {
            if (left < max_norm) visit(c);
            return;
        }
        for (std::int64_t v = 0; v <= left; ++v) {
            c[i] = v;
            self(self, i + 1, left - v);
        }
        c[i] = 0;
    };
    rec(rec, 0, max_norm);
}

inline std::vector<std::int64_t> random_values(std::mt19937_64& rng, std::int64_t m, int n) {
    std::uniform_int_distribution<std::int64_t> dist(0, m - 1);
    std::vector<std::int64_t> v(std::size_t{1} << n);
    for (auto& x : v) x = dist(rng);
    return v;
}

}  // namespace oracle
