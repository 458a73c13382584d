#include "gbf/ring.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gbf {

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

void require_same_modulus(const CyclicRingElt& a, const CyclicRingElt& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("modulus mismatch: " + std::to_string(a.modulus()) + " vs " +
                                    std::to_string(b.modulus()));
}

void require_divisor(std::int64_t m, std::int64_t s, const char* what) {
    if (m < 1) throw std::invalid_argument(std::string(what) + ": modulus must be positive");
    if (s <= 0 || m % s != 0)
        throw std::invalid_argument(std::string(what) + ": " + std::to_string(s) + " does not divide " +
                                    std::to_string(m));
}

}  // namespace

Coeff checked_add(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in addition");
    return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in multiplication");
    return r;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / std::gcd(a, b), b);
}

PrimeFactorization factorize(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("factorize: m must be positive, got " + std::to_string(m));
    PrimeFactorization out;
    out.m = m;
    std::int64_t rest = m;
    for (std::int64_t p = 2; p <= rest / p; p += (p == 2 ? 1 : 2)) {
        if (rest % p != 0) continue;
        int a = 0;
        while (rest % p == 0) {
            rest /= p;
            ++a;
        }
        out.factors.push_back({p, a});
    }
    if (rest > 1) out.factors.push_back({rest, 1});
    return out;
}

std::vector<std::int64_t> PrimeFactorization::primes() const {
    std::vector<std::int64_t> ps;
    ps.reserve(factors.size());
    for (const auto& f : factors) ps.push_back(f.prime);
    return ps;
}

std::int64_t PrimeFactorization::radical() const {
    std::int64_t r = 1;
    for (const auto& f : factors) r *= f.prime;
    return r;
}

bool PrimeFactorization::is_square_free() const {
    return std::all_of(factors.begin(), factors.end(), [](const PrimePower& f) { return f.multiplicity == 1; });
}

std::int64_t PrimeFactorization::product() const {
    std::int64_t r = 1;
    for (const auto& f : factors)
        for (int i = 0; i < f.multiplicity; ++i) r = checked_mul(r, f.prime);
    return r;
}

// ---------------------------------------------------------------------------
// CyclicRingElt

CyclicRingElt::CyclicRingElt(std::int64_t m) : m_(m) {
    if (m < 1) throw std::invalid_argument("CyclicRingElt: modulus must be positive");
    coeffs_.assign(static_cast<std::size_t>(m), 0);
}

CyclicRingElt::CyclicRingElt(std::int64_t m, std::vector<Coeff> coeffs) : m_(m), coeffs_(std::move(coeffs)) {
    if (m < 1) throw std::invalid_argument("CyclicRingElt: modulus must be positive");
    if (static_cast<std::int64_t>(coeffs_.size()) != m)
        throw std::invalid_argument("CyclicRingElt: expected " + std::to_string(m) + " coefficients, got " +
                                    std::to_string(coeffs_.size()));
}

CyclicRingElt CyclicRingElt::monomial(std::int64_t m, std::int64_t i, Coeff c) {
    CyclicRingElt e(m);
    e.coeffs_[static_cast<std::size_t>(mod_floor(i, m))] = c;
    return e;
}

Coeff CyclicRingElt::norm() const {
    Coeff s = 0;
    for (Coeff c : coeffs_) s = checked_add(s, c < 0 ? -c : c);
    return s;
}

Coeff CyclicRingElt::mass() const {
    Coeff s = 0;
    for (Coeff c : coeffs_) s = checked_add(s, c);
    return s;
}

std::vector<std::int64_t> CyclicRingElt::support() const {
    std::vector<std::int64_t> s;
    for (std::int64_t i = 0; i < m_; ++i)
        if (coeffs_[static_cast<std::size_t>(i)] != 0) s.push_back(i);
    return s;
}

bool CyclicRingElt::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c == 0; });
}

bool CyclicRingElt::is_nonnegative() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c >= 0; });
}

CyclicRingElt CyclicRingElt::operator+(const CyclicRingElt& o) const {
    require_same_modulus(*this, o);
    CyclicRingElt r(m_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
    return r;
}

CyclicRingElt CyclicRingElt::operator-(const CyclicRingElt& o) const { return *this + (-o); }

CyclicRingElt CyclicRingElt::operator-() const { return scaled(-1); }

CyclicRingElt CyclicRingElt::scaled(Coeff c) const {
    CyclicRingElt r(m_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = checked_mul(coeffs_[i], c);
    return r;
}

CyclicRingElt CyclicRingElt::shifted(std::int64_t k) const {
    CyclicRingElt r(m_);
    for (std::int64_t i = 0; i < m_; ++i)
        r.coeffs_[static_cast<std::size_t>(mod_floor(i + k, m_))] = coeffs_[static_cast<std::size_t>(i)];
    return r;
}

CharacterSpec::CharacterSpec(std::int64_t modulus, std::int64_t d, std::int64_t t) : m(modulus), order(d) {
    require_divisor(modulus, d, "character order");
    image = mod_floor(t, d);
    if (std::gcd(image, d) != 1)
        throw std::invalid_argument("character image index " + std::to_string(t) + " not coprime to order " +
                                    std::to_string(d));
}

// ---------------------------------------------------------------------------
// Ring operations

CyclicRingElt subgroup_sum(std::int64_t m, std::int64_t s) {
    require_divisor(m, s, "subgroup_sum");
    std::vector<Coeff> c(static_cast<std::size_t>(m), 0);
    for (std::int64_t i = 0; i < s; ++i) c[static_cast<std::size_t>(i * (m / s))] = 1;
    return CyclicRingElt(m, std::move(c));
}

CyclicRingElt subgroup_sum_star(std::int64_t m, std::int64_t s) {
    return subgroup_sum(m, s) - CyclicRingElt::monomial(m, 0);
}

CyclicRingElt subgroup_generator(std::int64_t m, std::int64_t d) {
    require_divisor(m, d, "subgroup_generator");
    return CyclicRingElt::monomial(m, m / d);
}

CyclicRingElt multiply(const CyclicRingElt& a, const CyclicRingElt& b) {
    require_same_modulus(a, b);
    const std::int64_t m = a.modulus();
    std::vector<Coeff> out(static_cast<std::size_t>(m), 0);
    const auto sa = a.support();
    const auto sb = b.support();
    for (std::int64_t i : sa)
        for (std::int64_t j : sb) {
            auto& slot = out[static_cast<std::size_t>((i + j) % m)];
            slot = checked_add(slot, checked_mul(a[i], b[j]));
        }
    return CyclicRingElt(m, std::move(out));
}

CyclicRingElt conj_inverse(const CyclicRingElt& d) {
    const std::int64_t m = d.modulus();
    std::vector<Coeff> out(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < m; ++i) out[static_cast<std::size_t>(i)] = d[(m - i) % m];
    return CyclicRingElt(m, std::move(out));
}

CyclicRingElt galois_twist(const CyclicRingElt& d, std::int64_t t) {
    const std::int64_t m = d.modulus();
    const std::int64_t tt = mod_floor(t, m);
    if (std::gcd(tt, m) != 1 && m != 1)
        throw std::invalid_argument("galois_twist: " + std::to_string(t) + " is not coprime to " + std::to_string(m));
    std::vector<Coeff> out(static_cast<std::size_t>(m), 0);
    for (std::int64_t i = 0; i < m; ++i)
        out[static_cast<std::size_t>(static_cast<std::int64_t>((static_cast<__int128>(i) * tt) % m))] = d[i];
    return CyclicRingElt(m, std::move(out));
}

CyclicRingElt natural_projection(const CyclicRingElt& d, std::int64_t divisor) {
    require_divisor(d.modulus(), divisor, "natural_projection");
    std::vector<Coeff> out(static_cast<std::size_t>(divisor), 0);
    for (std::int64_t i = 0; i < d.modulus(); ++i) {
        auto& slot = out[static_cast<std::size_t>(i % divisor)];
        slot = checked_add(slot, d[i]);
    }
    return CyclicRingElt(divisor, std::move(out));
}

Coeff psi_projection(const CyclicRingElt& d) {
    if (d.modulus() % 2 != 0)
        throw std::invalid_argument("psi_projection: modulus " + std::to_string(d.modulus()) + " is odd");
    Coeff s = 0;
    for (std::int64_t i = 0; i < d.modulus(); ++i) s = checked_add(s, (i % 2 == 0) ? d[i] : -d[i]);
    return s;
}

// ---------------------------------------------------------------------------
// Integer polynomials and cyclotomic polynomials

namespace {

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

IntPoly poly_mod_monic(IntPoly a, const IntPoly& b) {
    if (b.empty() || b.back() != 1) throw std::invalid_argument("poly_mod_monic: divisor must be monic");
    const std::size_t db = b.size() - 1;
    trim(a);
    while (a.size() > db) {
        const Coeff lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        if (lead != 0)
            for (std::size_t i = 0; i <= db; ++i)
                a[shift + i] = checked_add(a[shift + i], -checked_mul(lead, b[i]));
        a.pop_back();
        trim(a);
    }
    return a;
}

IntPoly poly_div_exact(const IntPoly& a_in, const IntPoly& b) {
    if (b.empty() || b.back() != 1) throw std::invalid_argument("poly_div_exact: divisor must be monic");
    IntPoly a = a_in;
    trim(a);
    const std::size_t db = b.size() - 1;
    if (a.size() <= db) {
        if (!a.empty()) throw std::domain_error("poly_div_exact: inexact division");
        return {};
    }
    IntPoly q(a.size() - db, 0);
    for (std::size_t k = a.size(); k-- > db;) {
        const Coeff lead = a[k];
        const std::size_t shift = k - db;
        q[shift] = lead;
        if (lead != 0)
            for (std::size_t i = 0; i <= db; ++i) a[shift + i] = checked_add(a[shift + i], -checked_mul(lead, b[i]));
    }
    trim(a);
    if (!a.empty()) throw std::domain_error("poly_div_exact: inexact division");
    return q;
}

const IntPoly& cyclotomic(std::int64_t d) {
    static std::recursive_mutex mu;
    static std::map<std::int64_t, IntPoly> cache;
    if (d < 1) throw std::invalid_argument("cyclotomic: order must be positive");
    std::lock_guard lock(mu);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
    IntPoly p(static_cast<std::size_t>(d) + 1, 0);
    p[0] = -1;
    p.back() = 1;
    for (std::int64_t e = 1; e < d; ++e)
        if (d % e == 0) p = poly_div_exact(p, cyclotomic(e));
    return cache.emplace(d, std::move(p)).first->second;
}

bool character_value_is_zero(const CyclicRingElt& d, const CharacterSpec& chi) {
    if (chi.m != d.modulus()) throw std::invalid_argument("character modulus does not match element modulus");
    const std::int64_t ord = chi.order;
    IntPoly folded(static_cast<std::size_t>(ord), 0);
    for (std::int64_t i : d.support()) {
        const auto k = static_cast<std::size_t>((static_cast<__int128>(i) * chi.image) % ord);
        folded[k] = checked_add(folded[k], d[i]);
    }
    return poly_mod_monic(std::move(folded), cyclotomic(ord)).empty();
}

std::complex<double> character_value(const CyclicRingElt& d, const CharacterSpec& chi) {
    std::complex<double> s = 0.0;
    for (std::int64_t i : d.support()) {
        const auto k = static_cast<double>((static_cast<__int128>(i) * chi.image) % chi.order);
        s += static_cast<double>(d[i]) * std::polar(1.0, 2.0 * std::numbers::pi * k / static_cast<double>(chi.order));
    }
    return s;
}

CyclotomicResidues::CyclotomicResidues(std::int64_t m, std::int64_t d) {
    require_divisor(m, d, "CyclotomicResidues");
    const IntPoly& phi = cyclotomic(d);
    degree_ = static_cast<std::int64_t>(phi.size()) - 1;
    const auto deg = static_cast<std::size_t>(degree_);
    std::vector<IntPoly> powers;
    powers.reserve(static_cast<std::size_t>(d));
    IntPoly cur(deg, 0);
    if (deg > 0) cur[0] = 1;
    for (std::int64_t k = 0; k < d; ++k) {
        powers.push_back(cur);
        // cur <- x * cur mod phi
        if (deg == 0) continue;
        const Coeff top = cur[deg - 1];
        for (std::size_t i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        for (std::size_t i = 0; i < deg; ++i) cur[i] = checked_add(cur[i], -checked_mul(top, phi[i]));
    }
    table_.resize(static_cast<std::size_t>(m) * deg);
    for (std::int64_t i = 0; i < m; ++i)
        std::copy(powers[static_cast<std::size_t>(i % d)].begin(), powers[static_cast<std::size_t>(i % d)].end(),
                  table_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(i) * deg));
}

}  // namespace gbf
