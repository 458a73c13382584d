#include "gbf/criteria.hpp"

#include <algorithm>
#include <stdexcept>

namespace gbf {

namespace criterion {

const std::vector<std::string_view>& catalog() {
    static const std::vector<std::string_view> ids = {
        kExists4Divides,      kExistsBothEven, kExistsBooleanEvenN,         kNonexistN3,
        kNonexistS1Odd,       kNonexist3p1p2,  kStripOdd,                   kStripEven,
        kNonexist2pAlphaLarge, kNonexist2pAlphaNonMersenne, kNonexist2pAlphaMod8,
    };
    return ids;
}

bool is_terminal(std::string_view id) { return id != kStripOdd && id != kStripEven; }

}  // namespace criterion

namespace {

using Wide = __int128;

Wide pow2(int e) { return Wide{1} << std::min(e, 120); }

std::string join(const std::vector<std::int64_t>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(xs[i]);
    }
    return s;
}

CriterionStep step(std::string_view id, std::string cite, std::vector<std::int64_t> params = {}) {
    return {std::string(id), std::move(cite), std::move(params)};
}

Verdict finish(Verdict v, Outcome o, CriterionStep s) {
    v.outcome = o;
    v.trace.push_back(std::move(s));
    v.residual.reset();
    return v;
}

std::int64_t prime_power(const PrimePower& f) {
    std::int64_t r = 1;
    for (int i = 0; i < f.multiplicity; ++i) r = checked_mul(r, f.prime);
    return r;
}

}  // namespace

std::string_view to_string(Outcome o) {
    switch (o) {
        case Outcome::Exists: return "Exists";
        case Outcome::Nonexistent: return "Nonexistent";
        case Outcome::Unknown: return "Unknown";
    }
    return "Unknown";
}

Outcome outcome_from_string(std::string_view s) {
    if (s == "Exists") return Outcome::Exists;
    if (s == "Nonexistent") return Outcome::Nonexistent;
    if (s == "Unknown") return Outcome::Unknown;
    throw std::invalid_argument("unknown outcome '" + std::string(s) + "'");
}

bool is_mersenne_for(int n, std::int64_t p) {
    if (n < 3 || n - 2 >= 63) return false;
    return p == (std::int64_t{1} << (n - 2)) - 1 && is_prime(p);
}

StripResult strip_primes(const PrimeFactorization& odd_part, int n, StripParity parity) {
    if (odd_part.factors.empty()) throw std::invalid_argument("strip_primes: no odd prime factors");
    if (odd_part.factors.front().prime == 2) throw std::invalid_argument("strip_primes: factor 2 must be removed");
    const Wide threshold = pow2(n) + (parity == StripParity::EvenTimesOdd ? 2 : 0);
    const std::int64_t p1 = odd_part.factors.front().prime;
    StripResult out;
    out.kept.factors.push_back(odd_part.factors.front());
    for (std::size_t i = 1; i < odd_part.factors.size(); ++i) {
        const auto& f = odd_part.factors[i];
        if (Wide{p1} + f.prime > threshold)
            out.stripped.push_back(f.prime);
        else if (out.stripped.empty())
            out.kept.factors.push_back(f);
        else
            out.stripped.push_back(f.prime);  // primes are increasing, so the cut is a prefix
    }
    out.kept.m = out.kept.product();
    return out;
}

Verdict decide(std::int64_t m, int n) {
    if (m < 2) throw std::invalid_argument("decide: m must be at least 2");
    if (n < 1) throw std::invalid_argument("decide: n must be at least 1");
    Verdict v;
    v.m = m;
    v.n = n;
    v.outcome = Outcome::Unknown;

    if (m % 4 == 0) return finish(v, Outcome::Exists, step(criterion::kExists4Divides, "GBFs exist whenever 4 divides m"));
    if (m == 2)
        return finish(v, n % 2 == 0 ? Outcome::Exists : Outcome::Nonexistent,
                      step(criterion::kExistsBooleanEvenN, "boolean bent functions exist if and only if n is even"));
    if (m % 2 == 0 && n % 2 == 0)
        return finish(v, Outcome::Exists,
                      step(criterion::kExistsBothEven, "GBFs exist whenever m and n are both even"));
    if (n == 3)
        return finish(v, Outcome::Nonexistent,
                      step(criterion::kNonexistN3, "no (m,3)-GBF exists for m odd or m = 2 (mod 4)"));

    if (m % 2 != 0) {
        const StripResult sr = strip_primes(factorize(m), n, StripParity::Odd);
        if (!sr.stripped.empty())
            v.trace.push_back(step(criterion::kStripOdd,
                                   "primes p with p1 + p > 2^n divide no c-exponent; removed " + join(sr.stripped),
                                   sr.stripped));
        const auto& f = sr.kept.factors;
        if (f.size() == 1)
            return finish(v, Outcome::Nonexistent,
                          step(criterion::kNonexistS1Odd, "no GBF when odd m is a prime power (p = " +
                                                              std::to_string(f[0].prime) + ")",
                               {f[0].prime}));
        const Wide lhs = Wide{3} * f[0].prime + f[1].prime;
        if (lhs > pow2(n))
            return finish(v, Outcome::Nonexistent,
                          step(criterion::kNonexist3p1p2,
                               "odd m with at least two primes needs 3*p1 + p2 <= 2^n; 3*" + std::to_string(f[0].prime) +
                                   " + " + std::to_string(f[1].prime) + " > 2^" + std::to_string(n),
                               {f[0].prime, f[1].prime}));
        v.residual = Residual{sr.kept.m, n};
        return v;
    }

    // m = 2m' with m' odd > 1 and n odd.
    const StripResult sr = strip_primes(factorize(m / 2), n, StripParity::EvenTimesOdd);
    if (!sr.stripped.empty())
        v.trace.push_back(step(criterion::kStripEven,
                               "primes p with p1 + p > 2^n + 2 divide no c-exponent; removed " + join(sr.stripped),
                               sr.stripped));
    if (sr.kept.factors.size() == 1) {
        const std::int64_t p = sr.kept.factors.front().prime;
        if (Wide{4} * p > pow2(n))
            return finish(v, Outcome::Nonexistent,
                          step(criterion::kNonexist2pAlphaLarge,
                               "m = 2p^a, n odd: no GBF when p > 2^(n-2) (p = " + std::to_string(p) + ")", {p}));
        if (!is_mersenne_for(n, p) && Wide{8} * p > pow2(n))
            return finish(v, Outcome::Nonexistent,
                          step(criterion::kNonexist2pAlphaNonMersenne,
                               "m = 2p^a, n odd: no GBF when p > 2^(n-3) unless p = 2^(n-2) - 1 is a Mersenne prime "
                               "(p = " + std::to_string(p) + ")",
                               {p}));
        if (p % 8 == 3 || p % 8 == 5)
            return finish(v, Outcome::Nonexistent,
                          step(criterion::kNonexist2pAlphaMod8,
                               "m = 2p^a, n odd: no GBF when p = 3 or 5 (mod 8) [externally sourced result] (p = " +
                                   std::to_string(p) + ")",
                               {p}));
    }
    v.residual = Residual{checked_mul(2, sr.kept.m), n};
    return v;
}

namespace {

std::vector<std::int64_t> table_moduli(std::int64_t m_max) {
    std::vector<std::int64_t> ms;
    for (std::int64_t m = 2; m <= m_max; ++m)
        if (m % 2 != 0 || m % 4 == 2) ms.push_back(m);
    return ms;
}

void check_table_range(std::int64_t m_max, int n_max) {
    if (m_max < 2 || m_max > 10000) throw std::invalid_argument("table: m-max must lie in [2, 10000]");
    if (n_max < 1 || n_max > 16) throw std::invalid_argument("table: n-max must lie in [1, 16]");
}

}  // namespace

std::vector<Verdict> verdict_table_serial(std::int64_t m_max, int n_max) {
    check_table_range(m_max, n_max);
    std::vector<Verdict> out;
    for (std::int64_t m : table_moduli(m_max))
        for (int n = 1; n <= n_max; ++n) out.push_back(decide(m, n));
    return out;
}

std::vector<Verdict> verdict_table(std::int64_t m_max, int n_max) {
    check_table_range(m_max, n_max);
    const auto ms = table_moduli(m_max);
    const auto rows = static_cast<std::ptrdiff_t>(ms.size());
    const auto cols = static_cast<std::size_t>(n_max);
    std::vector<Verdict> out(ms.size() * cols);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            out[static_cast<std::size_t>(r) * cols + c] = decide(ms[static_cast<std::size_t>(r)], static_cast<int>(c) + 1);
    return out;
}

ReductionDiagnostic reduction_diagnostic(const AutocorrTable& t, const VsumLimits& limits) {
    const std::int64_t m = t.base.modulus();
    ReductionDiagnostic d;
    for (std::size_t x = 1; x < t.table.size(); ++x) d.c_exponents.push_back(c_exponent(t.at(x), limits).k);
    d.reduced_m = 1;
    for (const auto& f : factorize(m).factors) {
        const bool divides_some = std::any_of(d.c_exponents.begin(), d.c_exponents.end(),
                                              [&](std::int64_t k) { return k % f.prime == 0; });
        if (divides_some)
            d.reduced_m = checked_mul(d.reduced_m, prime_power(f));
        else
            d.removable_primes.push_back(f.prime);
    }
    return d;
}

}  // namespace gbf
