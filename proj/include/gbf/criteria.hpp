#pragma once

// (m, n) -> existence verdict with a trace of the criteria applied.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gbf/gbf.hpp"
#include "gbf/ring.hpp"
#include "gbf/vsum.hpp"

namespace gbf {

namespace criterion {
inline constexpr std::string_view kExists4Divides = "exists-4-divides";
inline constexpr std::string_view kExistsBothEven = "exists-both-even";
inline constexpr std::string_view kExistsBooleanEvenN = "exists-boolean-even-n";
inline constexpr std::string_view kNonexistN3 = "nonexist-n3";
inline constexpr std::string_view kNonexistS1Odd = "nonexist-s1-odd";
inline constexpr std::string_view kNonexist3p1p2 = "nonexist-3p1p2";
inline constexpr std::string_view kStripOdd = "strip-odd";
inline constexpr std::string_view kStripEven = "strip-even";
inline constexpr std::string_view kNonexist2pAlphaLarge = "nonexist-2p-alpha-large";
inline constexpr std::string_view kNonexist2pAlphaNonMersenne = "nonexist-2p-alpha-non-mersenne";
inline constexpr std::string_view kNonexist2pAlphaMod8 = "nonexist-2p-alpha-mod8";

/// The closed catalog, in a fixed order.
const std::vector<std::string_view>& catalog();
bool is_terminal(std::string_view id);
}  // namespace criterion

enum class Outcome { Exists, Nonexistent, Unknown };
std::string_view to_string(Outcome o);
Outcome outcome_from_string(std::string_view s);

struct CriterionStep {
    std::string id;
    std::string cite;
    std::vector<std::int64_t> params;
    bool operator==(const CriterionStep&) const = default;
};

struct Residual {
    std::int64_t m = 0;
    int n = 0;
    bool operator==(const Residual&) const = default;
};

struct Verdict {
    std::int64_t m = 0;
    int n = 0;
    Outcome outcome = Outcome::Unknown;
    std::vector<CriterionStep> trace;
    std::optional<Residual> residual;
    bool operator==(const Verdict&) const = default;
};

enum class StripParity { Odd, EvenTimesOdd };

struct StripResult {
    PrimeFactorization kept;
    std::vector<std::int64_t> stripped;
};

/// Keeps p_1 and every further prime p with p_1 + p under the threshold
/// (2^n for odd m, 2^n + 2 for m = 2m'). `odd_part` must have no factor 2.
StripResult strip_primes(const PrimeFactorization& odd_part, int n, StripParity parity);

/// p == 2^{n-2} - 1 and p is prime.
bool is_mersenne_for(int n, std::int64_t p);

Verdict decide(std::int64_t m, int n);

/// Verdicts for every m in [2, m_max] that is odd or 2 mod 4, n in [1, n_max],
/// ordered by (m, n). Parallel over m.
std::vector<Verdict> verdict_table(std::int64_t m_max, int n_max);
std::vector<Verdict> verdict_table_serial(std::int64_t m_max, int n_max);

/// Diagnostic on a concrete GBF: the c-exponent of every E_x, the primes of m
/// dividing none of them, and the modulus left after removing those primes.
struct ReductionDiagnostic {
    std::vector<std::int64_t> c_exponents;  ///< index x - 1 for x = 1 .. 2^n - 1
    std::vector<std::int64_t> removable_primes;
    std::int64_t reduced_m = 1;
};
ReductionDiagnostic reduction_diagnostic(const AutocorrTable& t, const VsumLimits& limits = {});

}  // namespace gbf
