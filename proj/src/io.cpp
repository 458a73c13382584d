#include "gbf/io.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

namespace gbf {

json to_json(const CyclicRingElt& e) { return json{{"m", e.modulus()}, {"coeffs", e.coeff_vector()}}; }

CyclicRingElt ring_elt_from_json(const json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("coeffs"))
        throw std::invalid_argument("ring element JSON needs \"m\" and \"coeffs\"");
    return CyclicRingElt(j.at("m").get<std::int64_t>(), j.at("coeffs").get<std::vector<Coeff>>());
}

json to_json(const MinimalDecomposition& d) {
    json parts = json::array();
    for (const auto& p : d.parts) parts.push_back({{"elt", to_json(p.elt)}, {"k", p.reduced_exponent}});
    return json{{"parts", parts}, {"lcm", d.lcm_exponent}};
}

json to_json(const std::vector<CosetPart>& parts) {
    json out = json::array();
    for (const auto& p : parts) out.push_back({{"prime", p.prime}, {"weights", to_json(p.weights)}});
    return out;
}

json to_json(const GbfFunction& f) { return json{{"m", f.modulus()}, {"n", f.n()}, {"values", f.values()}}; }

GbfFunction function_from_json(const json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("n") || !j.contains("values"))
        throw std::invalid_argument("function JSON needs \"m\", \"n\" and \"values\"");
    return GbfFunction(j.at("m").get<std::int64_t>(), j.at("n").get<int>(),
                       j.at("values").get<std::vector<std::int64_t>>());
}

json to_json(const Verdict& v) {
    json trace = json::array();
    for (const auto& s : v.trace) trace.push_back({{"id", s.id}, {"cite", s.cite}, {"params", s.params}});
    json residual = nullptr;
    if (v.residual) residual = {{"m", v.residual->m}, {"n", v.residual->n}};
    return json{{"m", v.m},
                {"n", v.n},
                {"outcome", std::string(to_string(v.outcome))},
                {"trace", trace},
                {"residual", residual}};
}

Verdict verdict_from_json(const json& j) {
    Verdict v;
    v.m = j.at("m").get<std::int64_t>();
    v.n = j.at("n").get<int>();
    v.outcome = outcome_from_string(j.at("outcome").get<std::string>());
    for (const auto& s : j.at("trace")) {
        CriterionStep step{s.at("id").get<std::string>(), s.at("cite").get<std::string>(), {}};
        if (s.contains("params")) step.params = s.at("params").get<std::vector<std::int64_t>>();
        v.trace.push_back(std::move(step));
    }
    if (const auto& r = j.at("residual"); !r.is_null()) v.residual = Residual{r.at("m").get<std::int64_t>(), r.at("n").get<int>()};
    return v;
}

json certificate_json(const SearchOutcome& o) {
    json witness = nullptr;
    if (o.witness) witness = o.witness->values();
    return json{{"m", o.m},
                {"n", o.n},
                {"normalized_space", o.normalized_space},
                {"examined", o.examined},
                {"witness", witness}};
}

json to_json(const SearchOutcome& o) {
    json j = certificate_json(o);
    j["status"] = std::string(to_string(o.status));
    j["pruned"] = o.pruned;
    j["wall_time"] = o.wall_seconds;
    return j;
}

json to_json(const ProgressEvent& e) {
    return json{{"prefix", e.prefix}, {"examined", e.examined}, {"pruned", e.pruned}};
}

json to_json(const CatalogReport& r) {
    json counts = json::object();
    for (const auto& [tag, c] : r.counts) counts[std::string(to_string(tag))] = c;
    json mismatches = json::array();
    for (const auto& e : r.mismatches) mismatches.push_back(to_json(e));
    return json{{"total", r.total},
                {"counts", counts},
                {"mismatches", mismatches},
                {"forms_contained", r.forms_contained},
                {"form_c_psi", r.form_c_psi},
                {"form7_valid", r.form7_valid},
                {"passed", r.passed()}};
}

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view tok, std::size_t line_no, const char* what) {
    tok = strip(tok);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
        throw ParseError(line_no, std::string("malformed ") + what + " '" + std::string(tok) + "'");
    return v;
}

}  // namespace

GbfFunction parse_function_line(std::string_view raw, std::size_t line_no) {
    const std::string_view line = strip(raw);
    try {
        if (!line.empty() && line.front() == '{') return function_from_json(json::parse(line));
        std::istringstream in{std::string(line)};
        std::string m_tok, n_tok, v_tok, extra;
        if (!(in >> m_tok >> n_tok >> v_tok)) throw ParseError(line_no, "expected 'm n v0,v1,...'");
        if (in >> extra) throw ParseError(line_no, "unexpected trailing token '" + extra + "'");
        const std::int64_t m = parse_int(m_tok, line_no, "modulus");
        const std::int64_t n = parse_int(n_tok, line_no, "n");
        std::vector<std::int64_t> values;
        std::string_view rest = v_tok;
        while (true) {
            const auto comma = rest.find(',');
            values.push_back(parse_int(rest.substr(0, comma), line_no, "value"));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        if (n < 0 || n > GbfFunction::kMaxN) throw ParseError(line_no, "n out of range");
        return GbfFunction(m, static_cast<int>(n), std::move(values));
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(line_no, e.what());
    }
}

std::vector<GbfFunction> parse_function_lines(std::string_view text) {
    std::vector<GbfFunction> out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        const std::string_view line = strip(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (line.empty() || line.front() == '#') continue;
        out.push_back(parse_function_line(line, line_no));
    }
    return out;
}

json to_json(const ResultRecord& r) {
    return json{{"command", r.command},
                {"params", r.params},
                {"payload", r.payload},
                {"timestamp", r.timestamp},
                {"version", r.version}};
}

ResultRecord record_from_json(const json& j) {
    return ResultRecord{j.at("command").get<std::string>(), j.at("params"), j.at("payload"),
                        j.at("timestamp").get<std::string>(), j.at("version").get<std::string>()};
}

ResultRecord make_record(std::string command, json params, json payload) {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return ResultRecord{std::move(command), std::move(params), std::move(payload), buf, std::string(kToolVersion)};
}

void append_to_store(const std::filesystem::path& store, const ResultRecord& r) {
    std::ofstream out(store, std::ios::app);
    if (!out) throw std::runtime_error("cannot open results store " + store.string());
    out << to_json(r).dump() << '\n';
}

std::vector<ResultRecord> read_store(const std::filesystem::path& store) {
    std::ifstream in(store);
    if (!in) throw std::runtime_error("cannot open results store " + store.string());
    std::vector<ResultRecord> out;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(record_from_json(json::parse(line)));
    return out;
}

}  // namespace gbf
