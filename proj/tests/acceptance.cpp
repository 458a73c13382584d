// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "gbf/catalog.hpp"
#include "gbf/criteria.hpp"
#include "gbf/gbf.hpp"
#include "gbf/io.hpp"
#include "gbf/search.hpp"
#include "gbf/vsum.hpp"

using namespace gbf;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << " [failed: " << what << "]";
        }
    }
};

int failures = 0;

void run(int id, const std::string& name, const std::function<void(Check&)>& body) {
    Check c;
    const auto t0 = Clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.detail << " [exception: " << e.what() << "]";
    }
    std::printf("%s %d %s (%.2f s)%s\n", c.ok ? "PASS" : "FAIL", id, name.c_str(), seconds_since(t0),
                c.detail.str().c_str());
    std::fflush(stdout);
    if (!c.ok) ++failures;
}

bool witness_sound(const GbfFunction& w) {
    const auto t = compute_autocorr(w);
    const auto r = check_autocorr(t);
    return is_gbf_exact(t) && r.structural() && r.vanishes && is_gbf_numeric(w, 1e-6);
}

std::string key(std::int64_t m, int n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

}  // namespace

int main() {
    run(1, "no (m,3)-GBF for m in {3,5,6,7,9,10,11,13,15}: exhaustive search agrees with decide", [](Check& c) {
        for (std::int64_t m : {3, 5, 6, 7, 9, 10, 11, 13, 15}) {
            SearchOptions opt;
            opt.threads = 8;
            const auto t0 = Clock::now();
            const auto s = brute_force(m, 3, opt);
            const double dt = seconds_since(t0);
            c.require(s.status == SearchStatus::ExhaustedNone, "search " + key(m, 3) + " status");
            c.require(s.examined == s.normalized_space, "search " + key(m, 3) + " coverage");
            c.require(dt < 600.0, "search " + key(m, 3) + " time");
            c.require(decide(m, 3).outcome == Outcome::Nonexistent, "decide " + key(m, 3));
            c.detail << ' ' << m << ':' << s.normalized_space;
        }
    });

    run(2, "positive controls (4,1), (4,2), (4,3), (8,3) find sound witnesses", [](Check& c) {
        for (auto [m, n] : std::vector<std::pair<std::int64_t, int>>{{4, 1}, {4, 2}, {4, 3}, {8, 3}}) {
            const auto t0 = Clock::now();
            const auto s = brute_force(m, n);
            c.require(seconds_since(t0) < 60.0, "time " + key(m, n));
            c.require(s.status == SearchStatus::WitnessFound && s.witness, "witness " + key(m, n));
            if (s.witness) c.require(witness_sound(*s.witness), "invariants " + key(m, n));
        }
    });

    run(3, "boolean baseline: m = 2 bent iff n even", [](Check& c) {
        for (int n = 1; n <= 4; ++n) {
            const auto t0 = Clock::now();
            const auto s = brute_force(2, n);
            c.require(seconds_since(t0) < 1.0, "time " + key(2, n));
            if (n % 2 == 0) {
                c.require(s.status == SearchStatus::WitnessFound && s.witness && witness_sound(*s.witness),
                          "witness " + key(2, n));
            } else {
                c.require(s.status == SearchStatus::ExhaustedNone && s.examined == s.normalized_space,
                          "exhaustion " + key(2, n));
            }
        }
    });

    run(4, "a_x = 2^n - 4|G_f| + 8 b_x on 1000 random functions each at (4,2), (6,3), (10,3)", [](Check& c) {
        std::mt19937_64 rng(20240601);
        for (auto [m, n] : std::vector<std::pair<std::int64_t, int>>{{4, 2}, {6, 3}, {10, 3}}) {
            std::uniform_int_distribution<std::int64_t> dist(0, m - 1);
            int bad = 0;
            for (int i = 0; i < 1000; ++i) {
                std::vector<std::int64_t> v(std::size_t{1} << n);
                for (auto& x : v) x = dist(rng);
                if (!gf_identity_holds(gf_data(GbfFunction(m, n, v)), n)) ++bad;
            }
            c.require(bad == 0, std::to_string(bad) + " violations at " + key(m, n));
        }
    });

    run(5, "worked examples: c-exponent, reduced exponent, norm bound", [](Check& c) {
        c.require(c_exponent(subgroup_sum(10, 10)).k == 2, "c_exponent of the C_10 group sum");
        const auto e = multiply(CyclicRingElt::monomial(15, 5), subgroup_sum(15, 5));
        c.require(reduced_exponent(e) == 5, "reduced exponent of g^5 P_5");
        c.require(exponent(e) == 15, "exponent of g^5 P_5");
        c.require(minimal_norm_lower_bound(30) == 6, "norm bound for k = 30");
    });

    run(6, "minimal v-sums of norm <= 6 in C_30 are prime cosets or shifts of P_2*P_3* + P_5*", [](Check& c) {
        const auto t0 = Clock::now();
        const auto found = enumerate_minimal_vsums(30, 6);
        c.require(seconds_since(t0) < 300.0, "time");
        std::set<CyclicRingElt> expect;
        const auto composite = multiply(subgroup_sum_star(30, 2), subgroup_sum_star(30, 3)) + subgroup_sum_star(30, 5);
        for (std::int64_t h = 0; h < 30; ++h) {
            for (std::int64_t p : {2, 3, 5}) expect.insert(subgroup_sum(30, p).shifted(h));
            expect.insert(composite.shifted(h));
        }
        std::set<CyclicRingElt> got;
        for (const auto& v : found) {
            got.insert(v.elt);
            c.require(expect.count(v.elt) == 1, "unexpected " + to_json(v.elt).dump());
            c.require(is_minimal_vsum(v.elt), "minimality " + to_json(v.elt).dump());
            c.require(v.elt.norm() >= minimal_norm_lower_bound(v.reduced_exponent), "norm bound");
        }
        c.require(got == expect, "coverage of the expected family");
        c.detail << ' ' << found.size() << " elements";
    });

    run(7, "n = 3 autocorrelation catalog over norm-8 elements of N[C_30] has no mismatches", [](Check& c) {
        const auto t0 = Clock::now();
        const auto r = n3_catalog_check();
        c.require(seconds_since(t0) < 600.0, "time");
        c.require(r.mismatches.empty(), "mismatches " + to_json(r).at("mismatches").dump());
        c.require(r.forms_contained && r.form_c_psi && r.form7_valid, "form checks");
        c.detail << ' ' << r.total << " candidates";
    });

    run(8, "criteria spot checks and the 1000 x 9 verdict table", [](Check& c) {
        c.require(decide(27, 5).outcome == Outcome::Nonexistent, "decide (27,5)");
        const auto v45 = decide(45, 5);
        c.require(v45.outcome == Outcome::Unknown && v45.residual && v45.residual->m == 45, "decide (45,5)");
        c.require(decide(10, 5).outcome == Outcome::Nonexistent, "decide (10,5)");
        c.require(decide(14, 5).outcome == Outcome::Unknown, "decide (14,5)");
        for (std::int64_t m = 2; m <= 1000; ++m)
            if (m % 4 != 0) c.require(decide(m, 3).outcome == Outcome::Nonexistent, "decide " + key(m, 3));
        const auto t0 = Clock::now();
        const auto table = verdict_table(1000, 9);
        const double dt = seconds_since(t0);
        c.require(dt < 10.0, "table time");
        c.require(table.size() == 749 * 9, "table size");
        c.detail << " table " << dt << " s";
    });

    run(9, "exact and numeric tests agree on 10^4 random functions, m <= 12, n <= 3", [](Check& c) {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<std::int64_t> md(2, 12);
        std::uniform_int_distribution<int> nd(1, 3);
        int disagreements = 0, bent = 0;
        for (int i = 0; i < 10000; ++i) {
            const std::int64_t m = md(rng);
            const int n = nd(rng);
            std::uniform_int_distribution<std::int64_t> vd(0, m - 1);
            std::vector<std::int64_t> v(std::size_t{1} << n);
            for (auto& x : v) x = vd(rng);
            const GbfFunction f(m, n, v);
            const bool exact = is_gbf_exact(f);
            bent += exact;
            if (exact != is_gbf_numeric(f, 1e-6)) ++disagreements;
        }
        c.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
        c.detail << ' ' << bent << " bent";
    });

    std::printf("%s: %d failing\n", failures ? "FAILED" : "ALL PASSED", failures);
    return failures ? 1 : 0;
}
