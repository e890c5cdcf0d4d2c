#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "opstar/numeric.hpp"
#include "opstar/seqspace.hpp"
#include "opstar/staralg.hpp"

/// JSON/CSV plumbing: spec loading with line-precise errors, operator and
/// weight-sequence records, and self-describing reports.
namespace opstar::io {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchema = "opstar-report/1";

/// Malformed input. what() reads "<source>:<line>: <message>".
class InputError : public std::runtime_error {
public:
    InputError(const std::string& source, int line, const std::string& message);
    [[nodiscard]] int line() const { return line_; }

private:
    int line_;
};

/// One step of a JSON path: an object key or an array index.
struct PathStep {
    std::string key;
    long index = -1;
};

/// 1-based line of the value at `path` inside the JSON text, or of the
/// deepest prefix that exists.
int locate_line(std::string_view text, const std::vector<PathStep>& path);

/// Parse and validate a StarAlgebraSpec record
///   {dim, unit: [re,im]-list | null, structure: d×d×d of [re,im], involution: d×d of [re,im]}.
/// Shape errors and failed invariants raise InputError pointing at the line
/// of the offending entry; invariant messages name the basis tuple.
staralg::StarAlgebraSpec parse_algebra_spec(std::string_view text, const std::string& source);
staralg::StarAlgebraSpec load_algebra_spec(const std::filesystem::path& path);

Json algebra_to_json(const staralg::StarAlgebraSpec& alg);

/// {kind, params, dim}; params holds scale/power for closed forms and
/// values for explicit lists.
Json weights_to_json(const seqspace::WeightSequence& w);
seqspace::WeightSequence weights_from_json(const Json& j);

/// {rows, cols, data}: row-major list of [re, im] pairs.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json complex_to_json(Complex z);

struct Check {
    std::string name;
    bool pass = false;
    Json detail;
};

struct Csv {
    std::string name;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    [[nodiscard]] std::string render() const;
};

/// A versioned run report. Key order is fixed, so equal content gives equal
/// bytes; only the timestamp varies between runs.
class Report {
public:
    explicit Report(std::string command);

    void set_seed(std::uint64_t seed);
    void tolerance(const std::string& name, double value);
    void probe_count(const std::string& name, std::size_t count);
    void check(const std::string& name, bool pass, Json detail = Json::object());
    Json& results() { return results_; }
    void add_csv(Csv csv) { csvs_.push_back(std::move(csv)); }
    void mark_overflow(const std::string& message);

    [[nodiscard]] bool all_passed() const;
    [[nodiscard]] bool overflowed() const { return overflow_; }
    [[nodiscard]] const std::vector<Check>& checks() const { return checks_; }
    [[nodiscard]] const std::vector<Csv>& csvs() const { return csvs_; }
    [[nodiscard]] const std::string& command() const { return command_; }

    [[nodiscard]] Json to_json(bool with_timestamp = true) const;
    [[nodiscard]] std::string dump(bool with_timestamp = true) const;

    /// Writes <slug>.json and <slug>-<csv name>.csv under `dir`.
    void write(const std::filesystem::path& dir) const;
    [[nodiscard]] std::string slug() const;

private:
    std::string command_;
    std::string timestamp_;
    std::optional<std::uint64_t> seed_;
    Json tolerances_ = Json::object();
    Json probes_ = Json::object();
    std::vector<Check> checks_;
    Json results_ = Json::object();
    std::vector<Csv> csvs_;
    bool overflow_ = false;
    std::string overflow_message_;
};

/// Shortest round-trip decimal form, for CSV cells.
std::string format_double(double v);

}  // namespace opstar::io
