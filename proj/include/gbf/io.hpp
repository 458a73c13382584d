#pragma once

// JSON schemas, the function file format and the JSON-lines results store.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gbf/catalog.hpp"
#include "gbf/criteria.hpp"
#include "gbf/gbf.hpp"
#include "gbf/ring.hpp"
#include "gbf/search.hpp"
#include "gbf/vsum.hpp"

namespace gbf {

using json = nlohmann::json;

inline constexpr std::string_view kToolVersion = "1.0.0";

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

json to_json(const CyclicRingElt& e);
CyclicRingElt ring_elt_from_json(const json& j);

json to_json(const MinimalDecomposition& d);
json to_json(const std::vector<CosetPart>& parts);

json to_json(const GbfFunction& f);
GbfFunction function_from_json(const json& j);

json to_json(const Verdict& v);
Verdict verdict_from_json(const json& j);

/// {"m", "n", "normalized_space", "examined", "witness"}
json certificate_json(const SearchOutcome& o);
/// Full outcome including status, pruned count and wall time.
json to_json(const SearchOutcome& o);
json to_json(const ProgressEvent& e);

json to_json(const CatalogReport& r);

/// `m n v0,v1,...` per line; blank lines and lines starting with '#' are skipped.
/// A line starting with '{' is read as the JSON form.
std::vector<GbfFunction> parse_function_lines(std::string_view text);
GbfFunction parse_function_line(std::string_view line, std::size_t line_no = 1);

struct ResultRecord {
    std::string command;
    json params;
    json payload;
    std::string timestamp;
    std::string version;
    bool operator==(const ResultRecord&) const = default;
};

json to_json(const ResultRecord& r);
ResultRecord record_from_json(const json& j);
ResultRecord make_record(std::string command, json params, json payload);

/// Appends one JSON line; creates the file when missing.
void append_to_store(const std::filesystem::path& store, const ResultRecord& r);
std::vector<ResultRecord> read_store(const std::filesystem::path& store);

}  // namespace gbf
