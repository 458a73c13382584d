#pragma once

// Shapes an autocorrelation element E_x can take for an (m, 3)-GBF, and the
// enumeration experiment that checks them in N[C_30].

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "gbf/ring.hpp"

namespace gbf {

enum class ExFormTag {
    FormA,  ///< P_2 W with W >= 0
    FormB,  ///< (P_3 + P_5) g_2^a
    FormC,  ///< the two norm-8 minimal shapes with psi = +-4
    Form7,  ///< g_2^a (P_7^* + g_2 P_3^*)
};
std::string_view to_string(ExFormTag t);

/// First matching shape, checked in the order Form7, FormB, FormC, FormA.
/// Shapes whose primes do not divide the modulus are skipped.
std::optional<ExFormTag> match_n3_form(const CyclicRingElt& e);

std::vector<CyclicRingElt> form_b_elements(std::int64_t m);
std::vector<CyclicRingElt> form_c_elements(std::int64_t m);
std::vector<CyclicRingElt> form7_elements(std::int64_t m);

/// Norm 8, inversion symmetric, even g^0 coefficient, vanishing under the
/// order-30 character, psi divisible by 4. Modulus must be 30.
bool satisfies_n3_hypotheses(const CyclicRingElt& d);

/// All elements of N[C_30] meeting satisfies_n3_hypotheses, ascending.
std::vector<CyclicRingElt> enumerate_lemma43_candidates();

struct CatalogReport {
    std::size_t total = 0;
    std::map<ExFormTag, std::size_t> counts;
    std::vector<CyclicRingElt> mismatches;
    /// Every FormB / FormC element of C_30 appears in the enumeration.
    bool forms_contained = true;
    /// FormC elements all have psi = +-4.
    bool form_c_psi = true;
    /// Form7 elements of C_42: norm 8, symmetric, order-42 vanishing, psi = +-4.
    bool form7_valid = true;

    bool passed() const { return mismatches.empty() && forms_contained && form_c_psi && form7_valid; }
};

CatalogReport n3_catalog_check();

}  // namespace gbf
