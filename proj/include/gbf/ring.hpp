#pragma once

// Exact arithmetic in the group ring Z[C_m] and cyclotomic zero tests.

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace gbf {

using Coeff = std::int64_t;
using IntPoly = std::vector<Coeff>;  // coefficient of x^i at index i

struct PrimePower {
    std::int64_t prime = 0;
    int multiplicity = 0;
    bool operator==(const PrimePower&) const = default;
};

/// Canonical factorization m = prod p_i^{a_i}, primes strictly increasing.
struct PrimeFactorization {
    std::int64_t m = 1;
    std::vector<PrimePower> factors;

    std::size_t distinct_primes() const { return factors.size(); }
    std::vector<std::int64_t> primes() const;
    std::int64_t radical() const;
    bool is_square_free() const;
    /// Recomputes the product of the stored prime powers.
    std::int64_t product() const;
    bool operator==(const PrimeFactorization&) const = default;
};

PrimeFactorization factorize(std::int64_t m);
bool is_prime(std::int64_t n);
std::int64_t lcm_checked(std::int64_t a, std::int64_t b);

/// Checked 64-bit helpers; throw std::overflow_error on overflow.
Coeff checked_add(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

/// Element of Z[C_m]; coeffs[i] is the coefficient of g^i.
class CyclicRingElt {
public:
    CyclicRingElt() = default;
    explicit CyclicRingElt(std::int64_t m);
    CyclicRingElt(std::int64_t m, std::vector<Coeff> coeffs);

    static CyclicRingElt zero(std::int64_t m) { return CyclicRingElt(m); }
    /// c * g^i (exponent reduced mod m)
    static CyclicRingElt monomial(std::int64_t m, std::int64_t i, Coeff c = 1);

    std::int64_t modulus() const { return m_; }
    std::span<const Coeff> coeffs() const { return coeffs_; }
    const std::vector<Coeff>& coeff_vector() const { return coeffs_; }
    Coeff operator[](std::int64_t i) const { return coeffs_[static_cast<std::size_t>(i)]; }

    /// Sum of |coeff|.
    Coeff norm() const;
    /// Sum of coefficients.
    Coeff mass() const;
    std::vector<std::int64_t> support() const;
    bool is_zero() const;
    bool is_nonnegative() const;

    CyclicRingElt operator+(const CyclicRingElt& o) const;
    CyclicRingElt operator-(const CyclicRingElt& o) const;
    CyclicRingElt operator-() const;
    CyclicRingElt scaled(Coeff c) const;
    /// Multiply by g^k.
    CyclicRingElt shifted(std::int64_t k) const;

    bool operator==(const CyclicRingElt&) const = default;
    auto operator<=>(const CyclicRingElt& o) const {
        if (auto c = m_ <=> o.m_; c != 0) return c;
        return coeffs_ <=> o.coeffs_;
    }

private:
    std::int64_t m_ = 1;
    std::vector<Coeff> coeffs_ = std::vector<Coeff>(1, 0);
};

/// Character of C_m sending g to exp(2 pi i t / d).
struct CharacterSpec {
    std::int64_t m = 1;
    std::int64_t order = 1;
    std::int64_t image = 1;

    CharacterSpec() = default;
    CharacterSpec(std::int64_t modulus, std::int64_t d, std::int64_t t = 1);
};

/// P_s = sum of the order-s subgroup of C_m.
CyclicRingElt subgroup_sum(std::int64_t m, std::int64_t s);
/// P_s with the identity removed.
CyclicRingElt subgroup_sum_star(std::int64_t m, std::int64_t s);
/// Element of order exactly d with the canonical exponent m/d.
CyclicRingElt subgroup_generator(std::int64_t m, std::int64_t d);

CyclicRingElt multiply(const CyclicRingElt& a, const CyclicRingElt& b);
CyclicRingElt conj_inverse(const CyclicRingElt& d);
CyclicRingElt galois_twist(const CyclicRingElt& d, std::int64_t t);
CyclicRingElt natural_projection(const CyclicRingElt& d, std::int64_t divisor);
Coeff psi_projection(const CyclicRingElt& d);

/// The d-th cyclotomic polynomial. Cached; safe to call concurrently.
const IntPoly& cyclotomic(std::int64_t d);

/// Remainder of a modulo the monic polynomial b (exact over Z).
IntPoly poly_mod_monic(IntPoly a, const IntPoly& b);
/// Quotient of a by b; throws if the division is not exact over Z.
IntPoly poly_div_exact(const IntPoly& a, const IntPoly& b);

/// True iff chi(D) == 0, decided by Phi_d divisibility.
bool character_value_is_zero(const CyclicRingElt& d, const CharacterSpec& chi);

/// Floating evaluation, for cross-checks only.
std::complex<double> character_value(const CyclicRingElt& d, const CharacterSpec& chi);

/// Reduction of every g^i modulo Phi_d, as vectors of length phi(d).
/// residues()[i] is the image of g^i under the order-d character with t = 1,
/// written in the power basis of Z[x]/Phi_d.
class CyclotomicResidues {
public:
    CyclotomicResidues(std::int64_t m, std::int64_t d);
    std::int64_t degree() const { return degree_; }
    std::span<const Coeff> row(std::int64_t i) const {
        return {table_.data() + static_cast<std::size_t>(i * degree_), static_cast<std::size_t>(degree_)};
    }

private:
    std::int64_t degree_ = 0;
    std::vector<Coeff> table_;
};

}  // namespace gbf
