#pragma once

// Vanishing sums of roots of unity in N[C_m]: minimality, exponents,
// c-exponents and the coset structure of minimal v-sums.

#include <cstdint>
#include <vector>

#include "gbf/ring.hpp"

namespace gbf {

struct MinimalVsum {
    CyclicRingElt elt;
    std::int64_t reduced_exponent = 1;
    bool operator==(const MinimalVsum&) const = default;
};

struct MinimalDecomposition {
    std::vector<MinimalVsum> parts;
    std::int64_t lcm_exponent = 1;

    CyclicRingElt sum() const;
    bool operator==(const MinimalDecomposition&) const = default;
};

struct CExponent {
    std::int64_t k = 1;
    MinimalDecomposition decomposition;
};

/// D = sum_p P_p * weights, one entry per prime.
struct CosetPart {
    std::int64_t prime = 0;
    CyclicRingElt weights;
};

struct VsumLimits {
    Coeff c_exponent_norm = 16;
    std::int64_t enumerate_modulus = 60;
    Coeff enumerate_norm = 8;
    /// Cap on the number of sub-elements a minimality check may visit.
    std::uint64_t subelement_cap = std::uint64_t{1} << 28;
};

/// Order-m character annihilates D. D must have nonnegative coefficients.
bool is_vsum(const CyclicRingElt& d);

/// No nonzero proper sub-element (componentwise <=) is a v-sum.
bool is_minimal_vsum(const CyclicRingElt& d, const VsumLimits& limits = {});

/// lcm over the support of the order of g^i.
std::int64_t exponent(const CyclicRingElt& d);

struct AnchoredExponent {
    std::int64_t k = 1;
    std::int64_t anchor = 0;  ///< smallest support index attaining k
};

/// min over anchors j in the support of lcm_i ord(g^{i-j}).
AnchoredExponent reduced_exponent_anchored(const CyclicRingElt& d);
inline std::int64_t reduced_exponent(const CyclicRingElt& d) { return reduced_exponent_anchored(d).k; }

/// Exhaustive search over decompositions into minimal v-sums minimizing the
/// lcm of reduced exponents. Ties go to the lexicographically smallest part
/// sequence, parts ordered by ascending coefficient vectors.
CExponent c_exponent(const CyclicRingElt& d, const VsumLimits& limits = {});

/// Lower bound on the norm of a minimal v-sum with square-free reduced exponent k.
std::int64_t minimal_norm_lower_bound(std::int64_t k);

/// Writes an integer element annihilated by the order-m character as
/// sum_p P_p E_p, peeling primes smallest first. Zero weights are omitted.
std::vector<CosetPart> decompose_vanishing(const CyclicRingElt& w);

/// Structure decomposition of a v-sum through its c-exponent decomposition:
/// only primes dividing the c-exponent occur.
std::vector<CosetPart> structure_decompose(const CyclicRingElt& d, const VsumLimits& limits = {});

/// Recombines sum_p P_p * weights.
CyclicRingElt recombine(std::int64_t m, const std::vector<CosetPart>& parts);

/// Every minimal v-sum in N[C_m] with norm <= max_norm, each once, sorted by
/// ascending coefficient vector.
std::vector<MinimalVsum> enumerate_minimal_vsums(std::int64_t m, Coeff max_norm, const VsumLimits& limits = {});

}  // namespace gbf
