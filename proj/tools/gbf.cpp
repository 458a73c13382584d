// gbf: command-line front end for the GBF toolkit.
//
// Exit codes: decide 0/1/2 = Exists/Nonexistent/Unknown; search 0/1/3 =
// witness/exhausted/budget; verify 0/1 = all GBF / some not; catalog 0/1 =
// pass/fail; 64 = usage error; 65 = bad input data.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gbf/catalog.hpp"
#include "gbf/criteria.hpp"
#include "gbf/gbf.hpp"
#include "gbf/io.hpp"
#include "gbf/search.hpp"
#include "gbf/vsum.hpp"

namespace {

using gbf::json;

constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

struct Common {
    bool json_out = false;
    std::string store;
};

std::string store_path(const Common& c) {
    if (!c.store.empty()) return c.store;
    if (const char* env = std::getenv("GBF_STORE"); env && *env) return env;
    return {};
}

void emit(const Common& c, const gbf::ResultRecord& rec, const std::string& text) {
    if (c.json_out)
        std::cout << gbf::to_json(rec).dump() << '\n';
    else
        std::cout << text;
    if (const auto path = store_path(c); !path.empty()) gbf::append_to_store(path, rec);
}

std::string describe(const gbf::Verdict& v) {
    std::ostringstream os;
    os << "(" << v.m << ", " << v.n << "): " << gbf::to_string(v.outcome) << '\n';
    for (const auto& s : v.trace) os << "  " << s.id << ": " << s.cite << '\n';
    if (v.residual) os << "  residual: (" << v.residual->m << ", " << v.residual->n << ")\n";
    return os.str();
}

int exit_for(gbf::Outcome o) {
    switch (o) {
        case gbf::Outcome::Exists: return 0;
        case gbf::Outcome::Nonexistent: return 1;
        case gbf::Outcome::Unknown: return 2;
    }
    return 2;
}

// ---------------------------------------------------------------------------

int cmd_decide(const Common& c, std::int64_t m, int n) {
    const auto v = gbf::decide(m, n);
    emit(c, gbf::make_record("decide", {{"m", m}, {"n", n}}, gbf::to_json(v)), describe(v));
    return exit_for(v.outcome);
}

std::string read_all(std::istream& in) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int cmd_verify(const Common& c, const std::vector<std::string>& args) {
    std::string text;
    std::string source = "inline";
    if (args.size() == 1 && args[0] == "-") {
        text = read_all(std::cin);
        source = "stdin";
    } else if (args.size() == 1 && std::filesystem::is_regular_file(args[0])) {
        std::ifstream in(args[0]);
        text = read_all(in);
        source = args[0];
    } else {
        for (const auto& a : args) text += (text.empty() ? "" : " ") + a;
    }

    const auto functions = gbf::parse_function_lines(text);
    json results = json::array();
    std::ostringstream os;
    bool all_gbf = !functions.empty();
    for (const auto& f : functions) {
        const auto norm = gbf::normalize_modulus(f);
        const auto table = gbf::compute_autocorr(f);
        const auto report = gbf::check_autocorr(table);
        const bool exact = gbf::is_gbf_exact(table);
        const bool numeric = gbf::is_gbf_numeric(f);
        all_gbf = all_gbf && exact;
        json r{{"input", gbf::to_json(f)},
               {"normalized", gbf::to_json(norm)},
               {"gbf", exact},
               {"numeric_agrees", numeric == exact},
               {"invariants",
                {{"identity_term", report.identity_term},
                 {"inversion_symmetric", report.inversion_symmetric},
                 {"even_identity_coeff", report.even_identity_coeff},
                 {"norm_is_domain_size", report.norm_is_domain_size},
                 {"vanishes", report.vanishes}}}};
        os << "m = " << f.modulus() << ", n = " << f.n() << '\n';
        if (norm.modulus() != f.modulus())
            os << "  normalized to m' = " << norm.modulus() << " (value set generates a proper subgroup)\n";
        if (f.modulus() % 2 == 0) {
            const bool eq = gbf::gf_identity_holds(gbf::gf_data(table), f.n());
            r["psi_identity"] = eq;
            os << "  a_x = 2^n - 4|G_f| + 8 b_x: " << (eq ? "holds" : "FAILS") << '\n';
        }
        os << "  autocorrelation invariants: " << (report.structural() ? "ok" : "VIOLATED") << '\n';
        os << "  GBF: " << (exact ? "true" : "false") << '\n';
        results.push_back(std::move(r));
    }
    emit(c, gbf::make_record("verify", {{"source", source}}, results), os.str());
    return all_gbf ? 0 : 1;
}

struct SearchArgs {
    std::int64_t m = 0;
    int n = 0;
    int threads = 0;
    std::uint64_t budget = 0;
    bool no_prune = false;
    bool serial = false;
    bool progress = false;
};

int cmd_search(const Common& c, const SearchArgs& a) {
    gbf::SearchOptions opt;
    opt.prune = !a.no_prune;
    opt.threads = a.threads;
    if (a.budget > 0) opt.budget = a.budget;
    if (a.progress) opt.progress = [](const gbf::ProgressEvent& e) { std::cerr << gbf::to_json(e).dump() << '\n'; };
    const auto out = a.serial ? gbf::brute_force_serial(a.m, a.n, opt) : gbf::brute_force(a.m, a.n, opt);

    std::ostringstream os;
    os << "(" << a.m << ", " << a.n << "): " << gbf::to_string(out.status) << '\n';
    os << "  normalized space: " << out.normalized_space << ", examined: " << out.examined
       << ", pruned: " << out.pruned << ", wall: " << out.wall_seconds << " s\n";
    json payload = gbf::to_json(out);
    if (out.witness) {
        const bool ok = gbf::is_gbf_exact(*out.witness);
        payload["witness_verified"] = ok;
        os << "  witness:";
        for (auto v : out.witness->values()) os << ' ' << v;
        os << "\n  verified: " << (ok ? "true" : "false") << '\n';
    }
    json params{{"m", a.m}, {"n", a.n}, {"prune", !a.no_prune}, {"serial", a.serial}};
    if (a.budget > 0) params["budget"] = a.budget;
    emit(c, gbf::make_record("search", params, payload), os.str());

    switch (out.status) {
        case gbf::SearchStatus::WitnessFound: return 0;
        case gbf::SearchStatus::ExhaustedNone: return 1;
        case gbf::SearchStatus::BudgetExhausted: return 3;
    }
    return 3;
}

int cmd_decompose(const Common& c, const std::string& elt_json, const std::string& mode, gbf::Coeff bound) {
    const auto d = gbf::ring_elt_from_json(json::parse(elt_json));
    if (!d.is_nonnegative()) throw std::invalid_argument("element has a negative coefficient");
    gbf::VsumLimits limits;
    limits.c_exponent_norm = bound;
    json payload;
    std::ostringstream os;
    if (mode == "minimal") {
        const bool vs = gbf::is_vsum(d);
        payload = {{"is_vsum", vs}};
        os << "v-sum: " << (vs ? "true" : "false") << '\n';
        if (vs && !d.is_zero()) {
            const bool minimal = gbf::is_minimal_vsum(d, limits);
            const auto k = gbf::reduced_exponent(d);
            payload["minimal"] = minimal;
            payload["k"] = k;
            payload["exponent"] = gbf::exponent(d);
            os << "minimal: " << (minimal ? "true" : "false") << "\nreduced exponent: " << k << '\n';
        }
    } else if (mode == "structure") {
        const auto parts = gbf::structure_decompose(d, limits);
        payload = {{"parts", gbf::to_json(parts)}, {"recombines", gbf::recombine(d.modulus(), parts) == d}};
        for (const auto& p : parts) {
            os << "P_" << p.prime << " *";
            for (auto i : p.weights.support()) os << ' ' << p.weights[i] << "*g^" << i;
            os << '\n';
        }
    } else {
        const auto ce = gbf::c_exponent(d, limits);
        payload = {{"c_exponent", ce.k}, {"decomposition", gbf::to_json(ce.decomposition)}};
        os << "c-exponent: " << ce.k << '\n';
        for (const auto& p : ce.decomposition.parts) {
            os << "  k = " << p.reduced_exponent << ":";
            for (auto i : p.elt.support()) os << ' ' << p.elt[i] << "*g^" << i;
            os << '\n';
        }
    }
    emit(c, gbf::make_record("decompose", {{"elt", gbf::to_json(d)}, {"mode", mode}}, payload), os.str());
    return 0;
}

int cmd_catalog(const Common& c) {
    const auto r = gbf::n3_catalog_check();
    std::ostringstream os;
    os << "candidates: " << r.total << '\n';
    for (const auto& [tag, count] : r.counts) os << "  " << gbf::to_string(tag) << ": " << count << '\n';
    os << "mismatches: " << r.mismatches.size() << '\n';
    for (const auto& e : r.mismatches) os << "  " << gbf::to_json(e).dump() << '\n';
    os << "forms contained: " << r.forms_contained << ", FormC psi: " << r.form_c_psi
       << ", Form7 valid: " << r.form7_valid << '\n';
    emit(c, gbf::make_record("catalog", json::object(), gbf::to_json(r)), os.str());
    return r.passed() ? 0 : 1;
}

int cmd_table(const Common& c, std::int64_t m_max, int n_max, const std::string& format) {
    const auto verdicts = gbf::verdict_table(m_max, n_max);
    json cells = json::array();
    std::ostringstream os;
    if (format == "csv") os << "m,n,outcome,terminal,residual_m\n";
    for (const auto& v : verdicts) {
        cells.push_back(gbf::to_json(v));
        if (format == "csv")
            os << v.m << ',' << v.n << ',' << gbf::to_string(v.outcome) << ','
               << (v.trace.empty() ? "" : v.trace.back().id) << ',' << (v.residual ? std::to_string(v.residual->m) : "")
               << '\n';
    }
    if (format == "json") os << cells.dump() << '\n';
    emit(c, gbf::make_record("table", {{"m_max", m_max}, {"n_max", n_max}}, cells), os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized bent function toolkit"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--store", common.store, "append results to this JSON-lines file (default: $GBF_STORE)");

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", common.json_out, "print the result record as JSON"); };

    std::int64_t m = 0;
    int n = 0;
    auto* decide = app.add_subcommand("decide", "existence verdict for (m, n) with criterion trace");
    decide->add_option("m", m)->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 62));
    decide->add_option("n", n)->required()->check(CLI::Range(1, 1 << 20));
    add_json(decide);

    std::vector<std::string> verify_args;
    auto* verify = app.add_subcommand("verify", "check candidate functions (file, '-' for stdin, or inline 'm n v0,...')");
    verify->add_option("input", verify_args)->required();
    add_json(verify);

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "exhaustive search for an (m, n)-GBF with f(0) = 0");
    search->add_option("m", sa.m)->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 31));
    search->add_option("n", sa.n)->required()->check(CLI::Range(1, 6));
    search->add_option("--threads", sa.threads, "worker threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
    search->add_option("--budget", sa.budget, "abort after covering this many candidates");
    search->add_flag("--no-prune", sa.no_prune, "disable Walsh-bound pruning");
    search->add_flag("--serial", sa.serial, "use the single-threaded reference search");
    search->add_flag("--progress", sa.progress, "emit per-task progress events on stderr");
    add_json(search);

    std::string elt_json;
    bool want_c = false, want_structure = false, want_minimal = false;
    gbf::Coeff bound = 16;
    auto* decompose = app.add_subcommand("decompose", "v-sum analysis of a ring element given as JSON");
    decompose->add_option("elt", elt_json, "{\"m\": int, \"coeffs\": [...]}")->required();
    auto* opt_c = decompose->add_flag("--c-exponent", want_c, "c-exponent and optimal decomposition");
    auto* opt_s = decompose->add_flag("--structure", want_structure, "write the element as sum_p P_p E_p");
    auto* opt_m = decompose->add_flag("--minimal", want_minimal, "v-sum and minimality predicates");
    opt_c->excludes(opt_s)->excludes(opt_m);
    opt_s->excludes(opt_m);
    decompose->add_option("--norm-bound", bound, "largest norm accepted by the c-exponent search")
        ->check(CLI::Range(1, 64));
    add_json(decompose);

    auto* catalog = app.add_subcommand("catalog", "enumerate norm-8 candidates in N[C_30] and match the n = 3 forms");
    add_json(catalog);

    std::int64_t m_max = 0;
    int n_max = 0;
    std::string format = "csv";
    auto* table = app.add_subcommand("table", "verdict matrix for m odd or 2 mod 4");
    table->add_option("--m-max", m_max)->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{10000}));
    table->add_option("--n-max", n_max)->required()->check(CLI::Range(1, 16));
    table->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    add_json(table);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*decide) return cmd_decide(common, m, n);
        if (*verify) return cmd_verify(common, verify_args);
        if (*search) return cmd_search(common, sa);
        if (*decompose)
            return cmd_decompose(common, elt_json, want_structure ? "structure" : want_minimal ? "minimal" : "c-exponent",
                                 bound);
        if (*catalog) return cmd_catalog(common);
        if (*table) return cmd_table(common, m_max, n_max, format);
    } catch (const gbf::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}
