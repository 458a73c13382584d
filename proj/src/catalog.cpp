#include "gbf/catalog.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gbf {

std::string_view to_string(ExFormTag t) {
    switch (t) {
        case ExFormTag::FormA: return "FormA";
        case ExFormTag::FormB: return "FormB";
        case ExFormTag::FormC: return "FormC";
        case ExFormTag::Form7: return "Form7";
    }
    return "FormA";
}

namespace {

constexpr std::int64_t kModulus = 30;
constexpr Coeff kNorm = 8;

/// g_k^e, where g_k = g^{m/k} has order k.
CyclicRingElt gk(std::int64_t m, std::int64_t k, std::int64_t e = 1) {
    return CyclicRingElt::monomial(m, (m / k) * e);
}

CyclicRingElt sum_of(std::int64_t m, std::int64_t k, std::initializer_list<std::int64_t> exps) {
    CyclicRingElt s = CyclicRingElt::zero(m);
    for (std::int64_t e : exps) s = s + gk(m, k, e);
    return s;
}

bool p2_divisible(const CyclicRingElt& e) {
    const std::int64_t m = e.modulus();
    if (m % 2 != 0) return false;
    for (std::int64_t i = 0; i < m / 2; ++i)
        if (e[i] != e[i + m / 2]) return false;
    return e.is_nonnegative();
}

bool contains(const std::vector<CyclicRingElt>& xs, const CyclicRingElt& e) {
    return std::find(xs.begin(), xs.end(), e) != xs.end();
}

}  // namespace

std::vector<CyclicRingElt> form_b_elements(std::int64_t m) {
    if (m % 30 != 0) return {};
    const CyclicRingElt base = subgroup_sum(m, 3) + subgroup_sum(m, 5);
    return {base, multiply(base, gk(m, 2))};
}

std::vector<CyclicRingElt> form_c_elements(std::int64_t m) {
    if (m % 30 != 0) return {};
    const CyclicRingElt p3star = subgroup_sum_star(m, 3);
    const CyclicRingElt g2 = gk(m, 2);
    const CyclicRingElt shapes[] = {
        multiply(multiply(g2, sum_of(m, 5, {0, 1, 4})), p3star) + sum_of(m, 5, {2, 3}),
        multiply(multiply(g2, sum_of(m, 5, {0, 2, 3})), p3star) + sum_of(m, 5, {1, 4}),
    };
    std::vector<CyclicRingElt> out;
    for (const auto& s : shapes) {
        out.push_back(s);
        out.push_back(multiply(s, g2));
    }
    return out;
}

std::vector<CyclicRingElt> form7_elements(std::int64_t m) {
    if (m % 42 != 0) return {};
    const CyclicRingElt g2 = gk(m, 2);
    const CyclicRingElt base = subgroup_sum_star(m, 7) + multiply(g2, subgroup_sum_star(m, 3));
    return {base, multiply(base, g2)};
}

std::optional<ExFormTag> match_n3_form(const CyclicRingElt& e) {
    const std::int64_t m = e.modulus();
    if (contains(form7_elements(m), e)) return ExFormTag::Form7;
    if (contains(form_b_elements(m), e)) return ExFormTag::FormB;
    if (contains(form_c_elements(m), e)) return ExFormTag::FormC;
    if (p2_divisible(e)) return ExFormTag::FormA;
    return std::nullopt;
}

bool satisfies_n3_hypotheses(const CyclicRingElt& d) {
    if (d.modulus() != kModulus) throw std::invalid_argument("satisfies_n3_hypotheses: modulus must be 30");
    return d.is_nonnegative() && d.norm() == kNorm && conj_inverse(d) == d && d[0] % 2 == 0 &&
           character_value_is_zero(d, CharacterSpec(kModulus, kModulus)) && psi_projection(d) % 4 == 0;
}

std::vector<CyclicRingElt> enumerate_lemma43_candidates() {
    // Inversion orbits of Z_30: {0}, {15}, {i, 30 - i} for 1 <= i <= 14.
    std::vector<std::vector<std::int64_t>> orbits = {{0}, {15}};
    for (std::int64_t i = 1; i < kModulus / 2; ++i) orbits.push_back({i, kModulus - i});

    const CyclotomicResidues res(kModulus, kModulus);
    const auto deg = static_cast<std::size_t>(res.degree());
    std::vector<std::vector<Coeff>> residue(orbits.size() + 1, std::vector<Coeff>(deg, 0));
    std::vector<Coeff> coeffs(kModulus, 0);
    std::vector<CyclicRingElt> out;

    auto rec = [&](auto& self, std::size_t o, Coeff norm_left) -> void {
        if (norm_left == 0) {
            const auto& r = residue[o];
            if (std::any_of(r.begin(), r.end(), [](Coeff c) { return c != 0; })) return;
            CyclicRingElt d(kModulus, coeffs);
            if (psi_projection(d) % 4 == 0) out.push_back(std::move(d));
            return;
        }
        if (o == orbits.size()) return;
        const auto& orbit = orbits[o];
        const auto width = static_cast<Coeff>(orbit.size());
        // the identity coefficient must be even
        const Coeff step = (o == 0) ? 2 : 1;
        residue[o + 1] = residue[o];
        for (Coeff c = 0; c * width <= norm_left; c += step) {
            for (std::int64_t i : orbit) coeffs[static_cast<std::size_t>(i)] = c;
            self(self, o + 1, norm_left - c * width);
            for (Coeff s = 0; s < step; ++s)
                for (std::int64_t i : orbit) {
                    const auto row = res.row(i);
                    for (std::size_t t = 0; t < deg; ++t) residue[o + 1][t] += row[t];
                }
        }
        for (std::int64_t i : orbit) coeffs[static_cast<std::size_t>(i)] = 0;
    };
    rec(rec, 0, kNorm);
    std::sort(out.begin(), out.end());
    return out;
}

CatalogReport n3_catalog_check() {
    CatalogReport report;
    const auto candidates = enumerate_lemma43_candidates();
    report.total = candidates.size();
    for (const auto& d : candidates) {
        if (auto tag = match_n3_form(d))
            ++report.counts[*tag];
        else
            report.mismatches.push_back(d);
    }

    const std::set<CyclicRingElt> present(candidates.begin(), candidates.end());
    for (const auto& e : form_b_elements(kModulus)) report.forms_contained = report.forms_contained && present.count(e);
    for (const auto& e : form_c_elements(kModulus)) {
        report.forms_contained = report.forms_contained && present.count(e);
        const Coeff psi = psi_projection(e);
        report.form_c_psi = report.form_c_psi && (psi == 4 || psi == -4);
    }

    for (const auto& e : form7_elements(42)) {
        const Coeff psi = psi_projection(e);
        report.form7_valid = report.form7_valid && e.is_nonnegative() && e.norm() == kNorm && conj_inverse(e) == e &&
                             e[0] % 2 == 0 && character_value_is_zero(e, CharacterSpec(42, 42)) &&
                             (psi == 4 || psi == -4);
    }
    return report;
}

}  // namespace gbf
