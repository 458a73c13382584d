#pragma once

// Candidate functions Z_2^n -> Z_m, their autocorrelation elements E_x, and
// exact/numeric bentness tests.

#include <cstdint>
#include <vector>

#include "gbf/ring.hpp"

namespace gbf {

/// f: Z_2^n -> Z_m as a value table indexed by x read as an n-bit integer.
class GbfFunction {
public:
    static constexpr int kMaxN = 20;

    GbfFunction() = default;
    GbfFunction(std::int64_t m, int n, std::vector<std::int64_t> values);

    std::int64_t modulus() const { return m_; }
    int n() const { return n_; }
    std::size_t domain_size() const { return values_.size(); }
    const std::vector<std::int64_t>& values() const { return values_; }
    std::int64_t operator()(std::size_t x) const { return values_[x]; }

    bool operator==(const GbfFunction&) const = default;

private:
    std::int64_t m_ = 2;
    int n_ = 0;
    std::vector<std::int64_t> values_ = {0};
};

/// E_x = sum_y g^{f(y xor x) - f(y)} for every x.
struct AutocorrTable {
    GbfFunction base;
    std::vector<CyclicRingElt> table;

    const CyclicRingElt& at(std::size_t x) const { return table[x]; }
};

struct GfData {
    std::vector<std::size_t> support;  ///< x with f(x) odd
    std::vector<Coeff> b;              ///< half the x-coefficient of G_f^2; b[0] unused
    std::vector<Coeff> a;              ///< psi(E_x); a[0] unused
};

/// Pass/fail of each structural property of an autocorrelation table.
struct AutocorrReport {
    bool identity_term = true;      ///< E_0 = 2^n g^0
    bool inversion_symmetric = true;
    bool even_identity_coeff = true;  ///< x != 0
    bool norm_is_domain_size = true;
    bool vanishes = true;  ///< order-m character kills E_x, x != 0

    bool structural() const {
        return identity_term && inversion_symmetric && even_identity_coeff && norm_is_domain_size;
    }
};

AutocorrTable compute_autocorr(const GbfFunction& f);
AutocorrReport check_autocorr(const AutocorrTable& t);

/// Exact: every E_x with x != 0 is annihilated by the order-m character.
bool is_gbf_exact(const GbfFunction& f);
bool is_gbf_exact(const AutocorrTable& t);

/// |F(y)|^2 for all y, by a fast Walsh-Hadamard pass on complex phases.
std::vector<double> walsh_spectrum_numeric(const GbfFunction& f);
/// Every |F(y)|^2 within tol of 2^n.
bool is_gbf_numeric(const GbfFunction& f, double tol = 1e-6);

/// Shift so f(0) = 0, then divide out gcd(m, values).
GbfFunction normalize_modulus(const GbfFunction& f);

GfData gf_data(const GbfFunction& f);
GfData gf_data(const AutocorrTable& t);
/// a_x == 2^n - 4|G_f| + 8 b_x at every x != 0.
bool gf_identity_holds(const GfData& d, int n);

/// Some E_y (y != 0) has a support element whose order is divisible by p*q.
bool has_mixed_order_support(const AutocorrTable& t, std::int64_t p, std::int64_t q);

}  // namespace gbf
