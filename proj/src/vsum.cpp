#include "gbf/vsum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gbf {

namespace {

using Vec = std::vector<Coeff>;

void require_nonnegative(const CyclicRingElt& d, const char* what) {
    if (!d.is_nonnegative()) throw std::invalid_argument(std::string(what) + ": element has a negative coefficient");
}

void require_nonzero(const CyclicRingElt& d, const char* what) {
    if (d.is_zero()) throw std::invalid_argument(std::string(what) + ": zero element");
}

std::int64_t element_order(std::int64_t i, std::int64_t m) {
    const std::int64_t r = ((i % m) + m) % m;
    return m / std::gcd(r, m);
}

bool leq(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::uint64_t subelement_count(const CyclicRingElt& a, std::uint64_t cap) {
    std::uint64_t n = 1;
    for (Coeff c : a.coeffs()) {
        if (c == 0) continue;
        const auto f = static_cast<std::uint64_t>(c) + 1;
        if (n > cap / f) return cap + 1;
        n *= f;
    }
    return n;
}

/// Depth-first walk over all b with 0 <= b <= a, tracking the image of b in
/// Z[x]/Phi_m. leaf(b, vanishes) returns true to stop the walk.
template <class Leaf>
bool walk_subelements(const CyclicRingElt& a, const CyclotomicResidues& res, Leaf&& leaf) {
    const auto supp = a.support();
    const auto deg = static_cast<std::size_t>(res.degree());
    std::vector<Vec> stack(supp.size() + 1, Vec(deg, 0));
    Vec b(static_cast<std::size_t>(a.modulus()), 0);

    auto rec = [&](auto& self, std::size_t pos) -> bool {
        if (pos == supp.size()) {
            const Vec& r = stack[pos];
            const bool vanishes = std::all_of(r.begin(), r.end(), [](Coeff c) { return c == 0; });
            return leaf(b, vanishes);
        }
        const std::int64_t idx = supp[pos];
        const auto row = res.row(idx);
        stack[pos + 1] = stack[pos];
        for (Coeff c = 0;; ++c) {
            b[static_cast<std::size_t>(idx)] = c;
            if (self(self, pos + 1)) return true;
            if (c == a[idx]) break;
            for (std::size_t t = 0; t < deg; ++t) stack[pos + 1][t] += row[t];
        }
        b[static_cast<std::size_t>(idx)] = 0;
        return false;
    };
    return rec(rec, 0);
}

void check_subelement_cap(const CyclicRingElt& a, const VsumLimits& limits) {
    if (subelement_count(a, limits.subelement_cap) > limits.subelement_cap)
        throw std::length_error("too many sub-elements to examine (norm " + std::to_string(a.norm()) + ")");
}

using PrimeWeights = std::map<std::int64_t, Vec>;

void add_into(PrimeWeights& out, std::int64_t p, std::size_t n, std::size_t idx, Coeff v) {
    auto& slot = out.try_emplace(p, Vec(n, 0)).first->second;
    slot[idx] = checked_add(slot[idx], v);
}

/// Smallest-prime-first peeling of an element of ker(chi_n) in Z[C_n].
PrimeWeights peel(std::int64_t n, const Vec& w) {
    if (n == 1) {
        if (w[0] != 0) throw std::domain_error("element is not annihilated by the order-m character");
        return {};
    }
    const auto fac = factorize(n);
    const std::int64_t p = fac.factors.front().prime;
    std::int64_t pa = 1;
    for (int i = 0; i < fac.factors.front().multiplicity; ++i) pa *= p;
    const std::int64_t rest = n / pa;
    const std::int64_t step = pa / p;

    // CRT table: crt[a * rest + b] is the index congruent to a mod p^alpha and b mod rest.
    std::vector<std::int64_t> crt(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) crt[static_cast<std::size_t>((i % pa) * rest + (i % rest))] = i;
    auto at = [&](std::int64_t a, std::int64_t b) { return crt[static_cast<std::size_t>(a * rest + b)]; };

    PrimeWeights out;
    const auto un = static_cast<std::size_t>(n);
    for (std::int64_t j = 0; j < step; ++j)
        for (std::int64_t b = 0; b < rest; ++b) {
            const Coeff ref = w[static_cast<std::size_t>(at(j, b))];
            if (ref != 0) add_into(out, p, un, static_cast<std::size_t>(at(j, b)), ref);
        }
    for (std::int64_t a = step; a < pa; ++a) {
        Vec r(static_cast<std::size_t>(rest));
        bool nonzero = false;
        for (std::int64_t b = 0; b < rest; ++b) {
            r[static_cast<std::size_t>(b)] =
                checked_add(w[static_cast<std::size_t>(at(a, b))], -w[static_cast<std::size_t>(at(a % step, b))]);
            nonzero = nonzero || r[static_cast<std::size_t>(b)] != 0;
        }
        if (!nonzero) continue;
        for (const auto& [q, f] : peel(rest, r))
            for (std::int64_t b = 0; b < rest; ++b)
                if (f[static_cast<std::size_t>(b)] != 0)
                    add_into(out, q, un, static_cast<std::size_t>(at(a, b)), f[static_cast<std::size_t>(b)]);
    }
    return out;
}

std::vector<CosetPart> to_parts(std::int64_t m, const PrimeWeights& w) {
    std::vector<CosetPart> parts;
    for (const auto& [p, v] : w) {
        CyclicRingElt e(m, v);
        if (!e.is_zero()) parts.push_back({p, std::move(e)});
    }
    return parts;
}

}  // namespace

CyclicRingElt MinimalDecomposition::sum() const {
    if (parts.empty()) throw std::logic_error("empty decomposition");
    CyclicRingElt s = CyclicRingElt::zero(parts.front().elt.modulus());
    for (const auto& p : parts) s = s + p.elt;
    return s;
}

bool is_vsum(const CyclicRingElt& d) {
    require_nonnegative(d, "is_vsum");
    return character_value_is_zero(d, CharacterSpec(d.modulus(), d.modulus()));
}

bool is_minimal_vsum(const CyclicRingElt& d, const VsumLimits& limits) {
    require_nonzero(d, "is_minimal_vsum");
    if (!is_vsum(d)) throw std::invalid_argument("is_minimal_vsum: element is not a v-sum");
    check_subelement_cap(d, limits);
    const CyclotomicResidues res(d.modulus(), d.modulus());
    const Vec& full = d.coeff_vector();
    const bool found = walk_subelements(d, res, [&](const Vec& b, bool vanishes) {
        if (!vanishes) return false;
        const bool zero = std::all_of(b.begin(), b.end(), [](Coeff c) { return c == 0; });
        return !zero && b != full;
    });
    return !found;
}

std::int64_t exponent(const CyclicRingElt& d) {
    require_nonzero(d, "exponent");
    std::int64_t u = 1;
    for (std::int64_t i : d.support()) u = lcm_checked(u, element_order(i, d.modulus()));
    return u;
}

AnchoredExponent reduced_exponent_anchored(const CyclicRingElt& d) {
    require_nonzero(d, "reduced_exponent");
    const auto supp = d.support();
    AnchoredExponent best{0, 0};
    for (std::int64_t j : supp) {
        std::int64_t k = 1;
        for (std::int64_t i : supp) k = lcm_checked(k, element_order(i - j, d.modulus()));
        if (best.k == 0 || k < best.k) best = {k, j};
    }
    return best;
}

CExponent c_exponent(const CyclicRingElt& d, const VsumLimits& limits) {
    require_nonnegative(d, "c_exponent");
    require_nonzero(d, "c_exponent");
    if (d.norm() > limits.c_exponent_norm)
        throw std::length_error("c_exponent: norm " + std::to_string(d.norm()) + " exceeds bound " +
                                std::to_string(limits.c_exponent_norm));
    if (!is_vsum(d)) throw std::invalid_argument("c_exponent: element is not a v-sum");
    check_subelement_cap(d, limits);

    const std::int64_t m = d.modulus();
    const CyclotomicResidues res(m, m);
    std::vector<Vec> vanishing;
    walk_subelements(d, res, [&](const Vec& b, bool vanishes) {
        if (vanishes && std::any_of(b.begin(), b.end(), [](Coeff c) { return c != 0; })) vanishing.push_back(b);
        return false;
    });

    // Minimal elements of the vanishing sub-element poset.
    auto norm_of = [](const Vec& v) { return std::accumulate(v.begin(), v.end(), Coeff{0}); };
    std::stable_sort(vanishing.begin(), vanishing.end(),
                     [&](const Vec& a, const Vec& b) { return norm_of(a) < norm_of(b); });
    std::vector<Vec> minimal;
    for (const auto& v : vanishing) {
        const bool dominated = std::any_of(minimal.begin(), minimal.end(), [&](const Vec& w) { return leq(w, v); });
        if (!dominated) minimal.push_back(v);
    }
    std::sort(minimal.begin(), minimal.end());
    std::vector<std::int64_t> kexp;
    kexp.reserve(minimal.size());
    for (const auto& v : minimal) kexp.push_back(reduced_exponent(CyclicRingElt(m, v)));

    using Best = std::map<std::int64_t, std::vector<int>>;
    std::map<Vec, Best> memo;
    auto solve = [&](auto& self, const Vec& r) -> const Best& {
        if (auto it = memo.find(r); it != memo.end()) return it->second;
        Best out;
        const auto first = std::find_if(r.begin(), r.end(), [](Coeff c) { return c > 0; });
        if (first == r.end()) {
            out[1] = {};
        } else {
            const auto lead = static_cast<std::size_t>(first - r.begin());
            for (std::size_t pi = 0; pi < minimal.size(); ++pi) {
                const Vec& part = minimal[pi];
                if (part[lead] == 0 || !leq(part, r)) continue;
                Vec rest = r;
                for (std::size_t t = 0; t < rest.size(); ++t) rest[t] -= part[t];
                const Best sub = self(self, rest);
                for (const auto& [lk, seq] : sub) {
                    const std::int64_t k = std::lcm(kexp[pi], lk);
                    std::vector<int> cand;
                    cand.reserve(seq.size() + 1);
                    cand.push_back(static_cast<int>(pi));
                    cand.insert(cand.end(), seq.begin(), seq.end());
                    auto [it, inserted] = out.try_emplace(k, cand);
                    if (!inserted && cand < it->second) it->second = std::move(cand);
                }
            }
        }
        return memo.emplace(r, std::move(out)).first->second;
    };
    const Best& top = solve(solve, d.coeff_vector());
    if (top.empty()) throw std::logic_error("c_exponent: v-sum without a minimal decomposition");

    CExponent out;
    out.k = top.begin()->first;
    out.decomposition.lcm_exponent = out.k;
    for (int pi : top.begin()->second)
        out.decomposition.parts.push_back({CyclicRingElt(m, minimal[static_cast<std::size_t>(pi)]),
                                           kexp[static_cast<std::size_t>(pi)]});
    return out;
}

std::int64_t minimal_norm_lower_bound(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("minimal_norm_lower_bound: k must be positive");
    const auto fac = factorize(k);
    if (!fac.is_square_free())
        throw std::invalid_argument("minimal_norm_lower_bound: " + std::to_string(k) + " is not square-free");
    std::int64_t bound = 2;
    for (const auto& f : fac.factors) bound += f.prime - 2;
    if (fac.distinct_primes() >= 3) {
        const auto& p = fac.factors;
        bound = std::max(bound, (p[0].prime - 1) * (p[1].prime - 1) + (p[2].prime - 1));
    }
    return bound;
}

std::vector<CosetPart> decompose_vanishing(const CyclicRingElt& w) {
    return to_parts(w.modulus(), peel(w.modulus(), w.coeff_vector()));
}

std::vector<CosetPart> structure_decompose(const CyclicRingElt& d, const VsumLimits& limits) {
    const std::int64_t m = d.modulus();
    const CExponent ce = c_exponent(d, limits);
    PrimeWeights total;
    for (const auto& part : ce.decomposition.parts) {
        const auto [k, anchor] = reduced_exponent_anchored(part.elt);
        const std::int64_t stride = m / k;
        const CyclicRingElt local = part.elt.shifted(-anchor);
        Vec inner(static_cast<std::size_t>(k), 0);
        for (std::int64_t i : local.support()) {
            if (i % stride != 0) throw std::logic_error("minimal part not contained in a coset of C_k");
            inner[static_cast<std::size_t>(i / stride)] = local[i];
        }
        for (const auto& [p, f] : peel(k, inner))
            for (std::int64_t b = 0; b < k; ++b)
                if (f[static_cast<std::size_t>(b)] != 0)
                    add_into(total, p, static_cast<std::size_t>(m), static_cast<std::size_t>((b * stride + anchor) % m),
                             f[static_cast<std::size_t>(b)]);
    }
    auto parts = to_parts(m, total);
    if (recombine(m, parts) != d) throw std::logic_error("structure_decompose: recombination mismatch");
    return parts;
}

CyclicRingElt recombine(std::int64_t m, const std::vector<CosetPart>& parts) {
    CyclicRingElt s = CyclicRingElt::zero(m);
    for (const auto& part : parts) s = s + multiply(subgroup_sum(m, part.prime), part.weights);
    return s;
}

std::vector<MinimalVsum> enumerate_minimal_vsums(std::int64_t m, Coeff max_norm, const VsumLimits& limits) {
    if (m < 1 || m > limits.enumerate_modulus)
        throw std::invalid_argument("enumerate_minimal_vsums: modulus " + std::to_string(m) + " outside [1, " +
                                    std::to_string(limits.enumerate_modulus) + "]");
    if (max_norm < 1 || max_norm > limits.enumerate_norm)
        throw std::invalid_argument("enumerate_minimal_vsums: norm bound " + std::to_string(max_norm) +
                                    " outside [1, " + std::to_string(limits.enumerate_norm) + "]");

    const CyclotomicResidues res(m, m);
    const auto deg = static_cast<std::size_t>(res.degree());
    const auto depth = static_cast<std::size_t>(max_norm);

    // Canonical representatives contain g^0; the multiset of exponents is
    // built in nondecreasing order and never extended past a vanishing prefix.
    std::vector<Vec> canonical;
    auto emit = [&](std::vector<Vec>& sink, const std::vector<std::int64_t>& ms) {
        Vec c(static_cast<std::size_t>(m), 0);
        for (std::int64_t i : ms) ++c[static_cast<std::size_t>(i)];
        if (is_minimal_vsum(CyclicRingElt(m, c), limits)) sink.push_back(std::move(c));
    };

    Vec root(res.row(0).begin(), res.row(0).end());
    const bool root_vanishes = std::all_of(root.begin(), root.end(), [](Coeff c) { return c == 0; });
    if (root_vanishes) emit(canonical, {0});

    if (!root_vanishes && depth >= 2) {
#pragma omp parallel
        {
            std::vector<Vec> local;
            std::vector<Vec> stack(depth + 1, Vec(deg, 0));
            std::vector<std::int64_t> ms;
            auto rec = [&](auto& self, std::int64_t start, std::size_t size) -> void {
                for (std::int64_t idx = start; idx < m; ++idx) {
                    const auto row = res.row(idx);
                    Vec& next = stack[size + 1];
                    bool zero = true;
                    for (std::size_t t = 0; t < deg; ++t) {
                        next[t] = stack[size][t] + row[t];
                        zero = zero && next[t] == 0;
                    }
                    ms.push_back(idx);
                    if (zero)
                        emit(local, ms);
                    else if (size + 1 < depth)
                        self(self, idx, size + 1);
                    ms.pop_back();
                }
            };
#pragma omp for schedule(dynamic)
            for (std::int64_t second = 0; second < m; ++second) {
                stack[1] = root;
                ms.assign({0});
                const auto row = res.row(second);
                bool zero = true;
                for (std::size_t t = 0; t < deg; ++t) {
                    stack[2][t] = stack[1][t] + row[t];
                    zero = zero && stack[2][t] == 0;
                }
                ms.push_back(second);
                if (zero)
                    emit(local, ms);
                else if (depth > 2)
                    rec(rec, second, 2);
            }
#pragma omp critical(gbf_enumerate_merge)
            canonical.insert(canonical.end(), std::make_move_iterator(local.begin()),
                             std::make_move_iterator(local.end()));
        }
    }

    std::set<Vec> all;
    for (const auto& c : canonical) {
        const CyclicRingElt e(m, c);
        for (std::int64_t s = 0; s < m; ++s) all.insert(e.shifted(s).coeff_vector());
    }
    std::vector<MinimalVsum> out;
    out.reserve(all.size());
    for (const auto& v : all) {
        CyclicRingElt e(m, v);
        const std::int64_t k = reduced_exponent(e);
        out.push_back({std::move(e), k});
    }
    return out;
}

}  // namespace gbf
