#include "opstar/io.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

namespace opstar::io {

using Eigen::Index;

InputError::InputError(const std::string& source, int line, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message), line_(line) {}

namespace {

int line_of(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    int line = 1;
    for (std::size_t i = 0; i < offset; ++i) line += text[i] == '\n';
    return line;
}

class Scanner {
public:
    explicit Scanner(std::string_view t) : t_(t) {}

    std::size_t pos() const { return pos_; }
    bool at(char c) {
        ws();
        return pos_ < t_.size() && t_[pos_] == c;
    }
    bool eat(char c) {
        if (!at(c)) return false;
        ++pos_;
        return true;
    }
    void ws() {
        while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    }
    std::string string() {
        ws();
        std::string out;
        if (pos_ >= t_.size() || t_[pos_] != '"') throw std::runtime_error("expected string");
        ++pos_;
        while (pos_ < t_.size() && t_[pos_] != '"') {
            if (t_[pos_] == '\\') ++pos_;
            if (pos_ < t_.size()) out.push_back(t_[pos_++]);
        }
        ++pos_;
        return out;
    }
    void skip_value() {
        ws();
        if (pos_ >= t_.size()) throw std::runtime_error("unexpected end");
        const char c = t_[pos_];
        if (c == '"') {
            string();
        } else if (c == '[' || c == '{') {
            const char close = c == '[' ? ']' : '}';
            ++pos_;
            if (eat(close)) return;
            for (;;) {
                if (c == '{') {
                    string();
                    if (!eat(':')) throw std::runtime_error("expected ':'");
                }
                skip_value();
                if (eat(',')) continue;
                if (eat(close)) return;
                throw std::runtime_error("bad container");
            }
        } else {
            while (pos_ < t_.size() && t_[pos_] != ',' && t_[pos_] != ']' && t_[pos_] != '}' &&
                   !std::isspace(static_cast<unsigned char>(t_[pos_]))) {
                ++pos_;
            }
        }
    }

private:
    std::string_view t_;
    std::size_t pos_ = 0;
};

}  // namespace

int locate_line(std::string_view text, const std::vector<PathStep>& path) {
    Scanner s(text);
    s.ws();
    std::size_t best = s.pos();
    try {
        for (const auto& step : path) {
            bool found = false;
            if (step.index >= 0) {
                if (!s.eat('[')) break;
                for (long i = 0; !s.at(']'); ++i) {
                    if (i == step.index) {
                        s.ws();
                        found = true;
                        break;
                    }
                    s.skip_value();
                    if (!s.eat(',')) break;
                }
            } else {
                if (!s.eat('{')) break;
                while (!s.at('}')) {
                    const std::string key = s.string();
                    if (!s.eat(':')) break;
                    if (key == step.key) {
                        s.ws();
                        found = true;
                        break;
                    }
                    s.skip_value();
                    if (!s.eat(',')) break;
                }
            }
            if (!found) break;
            best = s.pos();
        }
    } catch (const std::exception&) {
        // Malformed text: report the deepest position reached.
    }
    return line_of(text, best);
}

namespace {

struct SpecReader {
    std::string_view text;
    const std::string& source;

    [[noreturn]] void fail(const std::vector<PathStep>& path, const std::string& msg) const {
        throw InputError(source, locate_line(text, path), msg);
    }

    static std::string render(const std::vector<PathStep>& path) {
        std::string out;
        for (const auto& s : path) out += s.index >= 0 ? "[" + std::to_string(s.index) + "]" : (out.empty() ? "" : ".") + s.key;
        return out;
    }

    Complex number(const Json& j, const std::vector<PathStep>& path) const {
        if (j.is_number()) return {j.get<double>(), 0.0};
        if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
            return {j[0].get<double>(), j[1].get<double>()};
        }
        fail(path, render(path) + " must be a [re, im] pair");
    }

    const Json& array(const Json& j, std::size_t len, const std::vector<PathStep>& path) const {
        if (!j.is_array() || j.size() != len) {
            fail(path, render(path) + " must be an array of length " + std::to_string(len));
        }
        return j;
    }
};

}  // namespace

staralg::StarAlgebraSpec parse_algebra_spec(std::string_view text, const std::string& source) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const int line = line_of(text, e.byte > 0 ? e.byte - 1 : 0);
        std::string msg = e.what();
        const auto cut = msg.find(": ", msg.find("parse error"));
        throw InputError(source, line, "invalid JSON" + (cut == std::string::npos ? "" : msg.substr(cut)));
    }
    SpecReader r{text, source};
    if (!doc.is_object()) r.fail({}, "algebra spec must be a JSON object");
    for (const char* key : {"dim", "structure", "involution", "unit"}) {
        if (!doc.contains(key)) r.fail({}, std::string("missing field '") + key + "'");
    }
    if (!doc["dim"].is_number_integer() || doc["dim"].get<long>() < 1) {
        r.fail({{"dim"}}, "dim must be a positive integer");
    }
    const auto d = doc["dim"].get<Index>();
    const auto du = static_cast<std::size_t>(d);

    std::vector<Matrix> left(du, Matrix::Zero(d, d));
    const Json& st = r.array(doc["structure"], du, {{"structure"}});
    for (Index i = 0; i < d; ++i) {
        const Json& si = r.array(st[static_cast<std::size_t>(i)], du, {{"structure"}, {"", i}});
        for (Index j = 0; j < d; ++j) {
            const Json& sij = r.array(si[static_cast<std::size_t>(j)], du, {{"structure"}, {"", i}, {"", j}});
            for (Index k = 0; k < d; ++k) {
                left[static_cast<std::size_t>(i)](k, j) =
                    r.number(sij[static_cast<std::size_t>(k)], {{"structure"}, {"", i}, {"", j}, {"", k}});
            }
        }
    }
    Matrix s(d, d);
    const Json& inv = r.array(doc["involution"], du, {{"involution"}});
    for (Index i = 0; i < d; ++i) {
        const Json& row = r.array(inv[static_cast<std::size_t>(i)], du, {{"involution"}, {"", i}});
        for (Index j = 0; j < d; ++j) s(i, j) = r.number(row[static_cast<std::size_t>(j)], {{"involution"}, {"", i}, {"", j}});
    }
    std::optional<Vector> unit;
    if (!doc["unit"].is_null()) {
        const Json& u = r.array(doc["unit"], du, {{"unit"}});
        Vector v(d);
        for (Index i = 0; i < d; ++i) v(i) = r.number(u[static_cast<std::size_t>(i)], {{"unit"}, {"", i}});
        unit = std::move(v);
    }

    staralg::StarAlgebraSpec alg(std::move(left), std::move(s), std::move(unit));
    const auto issues = alg.validate();
    if (!issues.empty()) {
        const auto& first = issues.front();
        std::vector<PathStep> where;
        const auto idx = [&](std::size_t n) { return static_cast<long>(first.basis[n] - 1); };
        if (first.invariant == "associativity" || first.invariant == "anti-multiplicativity") {
            where = {{"structure"}, {"", idx(0)}, {"", idx(1)}};
        } else if (first.invariant == "involutivity") {
            where = {{"involution"}, {"", idx(0)}};
        } else {
            where = {{"unit"}};
        }
        std::string msg = first.describe();
        if (issues.size() > 1) msg += " (" + std::to_string(issues.size() - 1) + " further failures)";
        r.fail(where, msg);
    }
    return alg;
}

staralg::StarAlgebraSpec load_algebra_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path.string(), 0, "cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_algebra_spec(buf.str(), path.string());
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json algebra_to_json(const staralg::StarAlgebraSpec& alg) {
    const Index d = alg.dim();
    Json st = Json::array();
    for (Index i = 0; i < d; ++i) {
        Json si = Json::array();
        for (Index j = 0; j < d; ++j) {
            Json sij = Json::array();
            for (Index k = 0; k < d; ++k) sij.push_back(complex_to_json(alg.structure(i, j, k)));
            si.push_back(std::move(sij));
        }
        st.push_back(std::move(si));
    }
    Json inv = Json::array();
    for (Index i = 0; i < d; ++i) {
        Json row = Json::array();
        for (Index j = 0; j < d; ++j) row.push_back(complex_to_json(alg.involution()(i, j)));
        inv.push_back(std::move(row));
    }
    Json unit = nullptr;
    if (alg.has_unit()) {
        unit = Json::array();
        for (Index i = 0; i < d; ++i) unit.push_back(complex_to_json(alg.unit()(i)));
    }
    return Json{{"dim", d}, {"unit", unit}, {"structure", st}, {"involution", inv}};
}

Json weights_to_json(const seqspace::WeightSequence& w) {
    Json params = Json::object();
    switch (w.kind()) {
        case seqspace::WeightKind::Linear: params["scale"] = w.scale(); break;
        case seqspace::WeightKind::Log1p:
            params["scale"] = w.scale();
            params["power"] = w.power();
            break;
        case seqspace::WeightKind::LogJ: break;
        case seqspace::WeightKind::Explicit:
            params["values"] = std::vector<double>(w.values().begin(), w.values().end());
            break;
    }
    return Json{{"kind", std::string(seqspace::to_string(w.kind()))}, {"params", params}, {"dim", w.dim()}};
}

seqspace::WeightSequence weights_from_json(const Json& j) {
    const auto kind = seqspace::weight_kind_from_string(j.at("kind").get<std::string>());
    const Json params = j.value("params", Json::object());
    if (kind == seqspace::WeightKind::Explicit) {
        auto values = params.at("values").get<std::vector<double>>();
        auto w = seqspace::WeightSequence::explicit_list(std::move(values));
        if (j.contains("dim")) return w.extended(j.at("dim").get<Index>());
        return w;
    }
    const auto dim = j.at("dim").get<Index>();
    switch (kind) {
        case seqspace::WeightKind::Linear:
            return seqspace::WeightSequence::linear(dim, params.value("scale", 1.0));
        case seqspace::WeightKind::Log1p:
            return seqspace::WeightSequence::log1p(dim, params.value("scale", 1.0), params.value("power", 1.0));
        default: return seqspace::WeightSequence::logj(dim);
    }
}

Json matrix_to_json(const Matrix& m) {
    Json data = Json::array();
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) data.push_back(complex_to_json(m(i, j)));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

Matrix matrix_from_json(const Json& j) {
    const auto rows = j.at("rows").get<Index>();
    const auto cols = j.at("cols").get<Index>();
    const Json& data = j.at("data");
    if (data.size() != static_cast<std::size_t>(rows * cols)) {
        throw std::invalid_argument("matrix data length does not match rows * cols");
    }
    Matrix m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        for (Index c = 0; c < cols; ++c) {
            const Json& e = data[static_cast<std::size_t>(i * cols + c)];
            m(i, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
        }
    }
    return m;
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string Csv::render() const {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + header[i];
    out += "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + row[i];
        out += "\n";
    }
    return out;
}

namespace {

std::string utc_now() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

Report::Report(std::string command) : command_(std::move(command)), timestamp_(utc_now()) {}

void Report::set_seed(std::uint64_t seed) { seed_ = seed; }

void Report::tolerance(const std::string& name, double value) { tolerances_[name] = value; }

void Report::probe_count(const std::string& name, std::size_t count) { probes_[name] = count; }

void Report::check(const std::string& name, bool pass, Json detail) {
    checks_.push_back({name, pass, std::move(detail)});
}

void Report::mark_overflow(const std::string& message) {
    overflow_ = true;
    overflow_message_ = message;
}

bool Report::all_passed() const {
    if (overflow_) return false;
    for (const auto& c : checks_) {
        if (!c.pass) return false;
    }
    return true;
}

Json Report::to_json(bool with_timestamp) const {
    Json j;
    j["schema"] = kSchema;
    j["command"] = command_;
    if (with_timestamp) j["timestamp"] = timestamp_;
    j["status"] = overflow_ ? "overflow" : (all_passed() ? "pass" : "fail");
    j["partial"] = overflow_;
    if (overflow_) j["overflow"] = overflow_message_;
    if (seed_) {
        j["seed"] = *seed_;
        j["rng"] = ProbeRng::kAlgorithm;
    }
    j["tolerances"] = tolerances_;
    j["probe_counts"] = probes_;
    Json checks = Json::array();
    for (const auto& c : checks_) {
        Json e{{"name", c.name}, {"pass", c.pass}};
        if (c.detail.is_object()) {
            for (const auto& [k, v] : c.detail.items()) e[k] = v;
        }
        checks.push_back(std::move(e));
    }
    j["checks"] = checks;
    j["results"] = results_;
    return j;
}

std::string Report::dump(bool with_timestamp) const { return to_json(with_timestamp).dump(2) + "\n"; }

std::string Report::slug() const {
    std::string s;
    for (char c : command_) s.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '-');
    return s;
}

void Report::write(const std::filesystem::path& dir) const {
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(dir / (slug() + ".json"));
        out << dump();
        if (!out) throw std::runtime_error("cannot write report under " + dir.string());
    }
    for (const auto& csv : csvs_) {
        std::ofstream out(dir / (slug() + "-" + csv.name + ".csv"));
        out << csv.render();
        if (!out) throw std::runtime_error("cannot write CSV under " + dir.string());
    }
}

}  // namespace opstar::io
