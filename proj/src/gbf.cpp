#include "gbf/gbf.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gbf {

GbfFunction::GbfFunction(std::int64_t m, int n, std::vector<std::int64_t> values)
    : m_(m), n_(n), values_(std::move(values)) {
    if (m < 1) throw std::invalid_argument("function modulus must be positive, got " + std::to_string(m));
    if (n < 0 || n > kMaxN)
        throw std::invalid_argument("n must lie in [0, " + std::to_string(kMaxN) + "], got " + std::to_string(n));
    const std::size_t size = std::size_t{1} << n;
    if (values_.size() != size)
        throw std::invalid_argument("expected " + std::to_string(size) + " values for n = " + std::to_string(n) +
                                    ", got " + std::to_string(values_.size()));
    for (std::size_t x = 0; x < size; ++x)
        if (values_[x] < 0 || values_[x] >= m)
            throw std::out_of_range("value " + std::to_string(values_[x]) + " at x = " + std::to_string(x) +
                                    " outside [0, " + std::to_string(m) + ")");
}

AutocorrTable compute_autocorr(const GbfFunction& f) {
    const std::int64_t m = f.modulus();
    const std::size_t size = f.domain_size();
    AutocorrTable t{f, {}};
    t.table.reserve(size);
    for (std::size_t x = 0; x < size; ++x) {
        std::vector<Coeff> c(static_cast<std::size_t>(m), 0);
        for (std::size_t y = 0; y < size; ++y) ++c[static_cast<std::size_t>(((f(y ^ x) - f(y)) % m + m) % m)];
        t.table.emplace_back(m, std::move(c));
    }
    return t;
}

AutocorrReport check_autocorr(const AutocorrTable& t) {
    AutocorrReport r;
    const std::int64_t m = t.base.modulus();
    const auto size = static_cast<Coeff>(t.base.domain_size());
    const CharacterSpec chi(m, m);
    r.identity_term = t.at(0) == CyclicRingElt::monomial(m, 0, size);
    for (std::size_t x = 0; x < t.table.size(); ++x) {
        const CyclicRingElt& e = t.at(x);
        r.inversion_symmetric = r.inversion_symmetric && conj_inverse(e) == e;
        r.norm_is_domain_size = r.norm_is_domain_size && e.norm() == size;
        if (x == 0) continue;
        r.even_identity_coeff = r.even_identity_coeff && e[0] % 2 == 0;
        r.vanishes = r.vanishes && character_value_is_zero(e, chi);
    }
    return r;
}

bool is_gbf_exact(const AutocorrTable& t) {
    const std::int64_t m = t.base.modulus();
    const CharacterSpec chi(m, m);
    for (std::size_t x = 1; x < t.table.size(); ++x)
        if (!character_value_is_zero(t.at(x), chi)) return false;
    // For n = 0 the transform is the single value zeta^{f(0)}, of modulus 1 = 2^0.
    return true;
}

bool is_gbf_exact(const GbfFunction& f) { return is_gbf_exact(compute_autocorr(f)); }

std::vector<double> walsh_spectrum_numeric(const GbfFunction& f) {
    const std::size_t size = f.domain_size();
    const double step = 2.0 * std::numbers::pi / static_cast<double>(f.modulus());
    std::vector<std::complex<double>> a(size);
    for (std::size_t x = 0; x < size; ++x) a[x] = std::polar(1.0, step * static_cast<double>(f(x)));
    for (std::size_t h = 1; h < size; h <<= 1)
        for (std::size_t i = 0; i < size; i += h << 1)
            for (std::size_t j = i; j < i + h; ++j) {
                const auto u = a[j];
                const auto v = a[j + h];
                a[j] = u + v;
                a[j + h] = u - v;
            }
    std::vector<double> out(size);
    for (std::size_t y = 0; y < size; ++y) out[y] = std::norm(a[y]);
    return out;
}

bool is_gbf_numeric(const GbfFunction& f, double tol) {
    const auto target = static_cast<double>(f.domain_size());
    for (double v : walsh_spectrum_numeric(f))
        if (std::abs(v - target) > tol) return false;
    return true;
}

GbfFunction normalize_modulus(const GbfFunction& f) {
    const std::int64_t m = f.modulus();
    std::vector<std::int64_t> v(f.values());
    const std::int64_t f0 = v.empty() ? 0 : v[0];
    std::int64_t g = m;
    for (auto& x : v) {
        x = ((x - f0) % m + m) % m;
        g = std::gcd(g, x);
    }
    for (auto& x : v) x /= g;
    return GbfFunction(m / g, f.n(), std::move(v));
}

GfData gf_data(const AutocorrTable& t) {
    const GbfFunction& f = t.base;
    if (f.modulus() % 2 != 0)
        throw std::invalid_argument("gf_data: modulus " + std::to_string(f.modulus()) + " is odd");
    const std::size_t size = f.domain_size();
    GfData d;
    for (std::size_t x = 0; x < size; ++x)
        if (f(x) % 2 != 0) d.support.push_back(x);
    std::vector<Coeff> square(size, 0);
    for (std::size_t u : d.support)
        for (std::size_t v : d.support) ++square[u ^ v];
    d.b.assign(size, 0);
    d.a.assign(size, 0);
    for (std::size_t x = 1; x < size; ++x) {
        if (square[x] % 2 != 0) throw std::logic_error("odd off-identity coefficient in G_f^2");
        d.b[x] = square[x] / 2;
        d.a[x] = psi_projection(t.at(x));
    }
    return d;
}

GfData gf_data(const GbfFunction& f) {
    if (f.modulus() % 2 != 0)
        throw std::invalid_argument("gf_data: modulus " + std::to_string(f.modulus()) + " is odd");
    return gf_data(compute_autocorr(f));
}

bool gf_identity_holds(const GfData& d, int n) {
    const Coeff size = Coeff{1} << n;
    const auto gf = static_cast<Coeff>(d.support.size());
    for (std::size_t x = 1; x < d.a.size(); ++x)
        if (d.a[x] != size - 4 * gf + 8 * d.b[x]) return false;
    return true;
}

bool has_mixed_order_support(const AutocorrTable& t, std::int64_t p, std::int64_t q) {
    const std::int64_t m = t.base.modulus();
    const std::int64_t pq = p * q;
    for (std::size_t y = 1; y < t.table.size(); ++y)
        for (std::int64_t i : t.at(y).support())
            if ((m / std::gcd(i, m)) % pq == 0) return true;
    return false;
}

}  // namespace gbf
