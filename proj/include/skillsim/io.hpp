#ifndef SKILLSIM_IO_HPP
#define SKILLSIM_IO_HPP

#include "skillsim/analytics.hpp"
#include "skillsim/design.hpp"
#include "skillsim/engine.hpp"
#include "skillsim/types.hpp"

#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace skillsim::io {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Numbers and CSV fields

/// Shortest "%.9g" rendering used for every real in CSV output.
inline std::string format_real(double x) {
    if (x == 0.0) x = 0.0;  // drop negative zero
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

inline double parse_real(std::string_view s, std::string_view what) {
    double x = 0.0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, x);
    if (ec != std::errc() || ptr != end) throw ConfigError(std::string(what) + ": not a number: '" + std::string(s) + "'");
    return x;
}

inline long parse_integer(std::string_view s, std::string_view what) {
    long x = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, x);
    if (ec != std::errc() || ptr != end) throw ConfigError(std::string(what) + ": not an integer: '" + std::string(s) + "'");
    return x;
}

inline std::vector<std::string_view> split_fields(std::string_view line, char sep = ',') {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = line.find(sep, start);
        out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

inline bool getline_trimmed(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

/// Config ids end up in file names and unquoted CSV fields.
inline bool valid_config_id(std::string_view id) {
    for (char ch : id) {
        const bool ok = std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-' || ch == '.';
        if (!ok) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Config documents (JSON)

namespace detail {

/// Typed accessors that report the JSON key path of the offending value.
class Reader {
public:
    Reader(const json& node, std::string path) : node_(node), path_(std::move(path)) {}

    const json& node() const { return node_; }
    const std::string& path() const { return path_; }

    std::string child_path(std::string_view key) const { return path_.empty() ? std::string(key) : path_ + "." + std::string(key); }

    Reader object(std::string_view key) const {
        const json& v = require(key);
        if (!v.is_object()) fail(child_path(key), "expected an object");
        return {v, child_path(key)};
    }

    const json& require(std::string_view key) const {
        if (!node_.is_object()) fail(path_.empty() ? "<root>" : path_, "expected an object");
        auto it = node_.find(std::string(key));
        if (it == node_.end()) fail(child_path(key), "missing");
        return *it;
    }

    bool has(std::string_view key) const { return node_.is_object() && node_.contains(std::string(key)); }

    double number(std::string_view key) const {
        const json& v = require(key);
        if (!v.is_number()) fail(child_path(key), "expected a number");
        return v.get<double>();
    }

    long integer(std::string_view key) const {
        const json& v = require(key);
        if (!v.is_number_integer()) fail(child_path(key), "expected an integer");
        return v.get<long>();
    }

    std::string string(std::string_view key) const {
        const json& v = require(key);
        if (!v.is_string()) fail(child_path(key), "expected a string");
        return v.get<std::string>();
    }

    void only_keys(std::initializer_list<std::string_view> allowed) const {
        for (auto it = node_.begin(); it != node_.end(); ++it) {
            if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
                fail(child_path(it.key()), "unknown key");
        }
    }

    [[noreturn]] static void fail(const std::string& path, const std::string& msg) { throw ConfigError(path + ": " + msg); }

private:
    const json& node_;
    std::string path_;
};

inline BetaParams read_beta_pair(const json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        Reader::fail(path, "expected [alpha, beta]");
    BetaParams p{v[0].get<double>(), v[1].get<double>()};
    if (!p.valid()) Reader::fail(path, "beta shapes must be > 0");
    return p;
}

} // namespace detail

inline json curve_to_json(const OutputCurve& curve) {
    json params = std::visit(skillsim::detail::overloaded{
                                 [](const LinearCurve& c) { return json{{"slope", c.slope}, {"intercept", c.intercept}}; },
                                 [](const LogisticCurve& c) { return json{{"k", c.k}}; },
                                 [](const InverseLogisticCurve& c) { return json{{"k", c.k}}; },
                                 [](const ExponentialCurve& c) { return json{{"base", c.base}}; },
                                 [](const PowerCurve& c) { return json{{"exponent", c.exponent}}; },
                                 [](const LogarithmicCurve& c) { return json{{"log_base", c.log_base}}; },
                             },
                             curve);
    return json{{"kind", std::string(curve_name(curve))}, {"params", params}};
}

inline OutputCurve curve_from_json(const detail::Reader& r) {
    r.only_keys({"kind", "params"});
    const std::string kind = r.string("kind");
    const detail::Reader p = r.has("params") ? r.object("params") : detail::Reader(json::object(), r.child_path("params"));
    auto opt = [&](std::string_view key, double fallback) { return p.has(key) ? p.number(key) : fallback; };
    OutputCurve curve;
    if (kind == "linear") {
        p.only_keys({"slope", "intercept"});
        curve = LinearCurve{opt("slope", 1.0), opt("intercept", 0.0)};
    } else if (kind == "logistic") {
        p.only_keys({"k"});
        curve = LogisticCurve{opt("k", 5.0)};
    } else if (kind == "inverse_logistic") {
        p.only_keys({"k"});
        curve = InverseLogisticCurve{opt("k", 5.0)};
    } else if (kind == "exponential") {
        p.only_keys({"base"});
        curve = ExponentialCurve{p.number("base")};
    } else if (kind == "power") {
        p.only_keys({"exponent"});
        curve = PowerCurve{p.number("exponent")};
    } else if (kind == "logarithmic") {
        p.only_keys({"log_base"});
        curve = LogarithmicCurve{p.number("log_base")};
    } else {
        detail::Reader::fail(r.child_path("kind"), "unknown curve kind '" + kind + "'");
    }
    try {
        validate_curve(curve);
    } catch (const ConfigError& ex) {
        detail::Reader::fail(r.path(), ex.what());
    }
    return curve;
}

inline json config_to_json(const SimulationConfig& cfg) {
    auto per_policy = [](const PerPolicy<double>& v) {
        return json{{"H", v[PolicyKind::H]}, {"HM", v[PolicyKind::HM]}, {"M", v[PolicyKind::M]}};
    };
    json schedule = json::object();
    for (PolicyKind c : {PolicyKind::H, PolicyKind::M}) {
        json row = json::object();
        for (Difficulty d : kDifficulties) {
            const BetaRamp& r = cfg.schedule.at(c, d);
            row[std::string(to_string(d))] = {{"start", {r.start.alpha, r.start.beta}}, {"end", {r.end.alpha, r.end.beta}}};
        }
        schedule[std::string(to_string(c))] = row;
    }
    return json{
        {"config_id", cfg.config_id},
        {"n_firms", cfg.n_firms},
        {"n_epochs", cfg.n_epochs},
        {"n_runs", cfg.n_runs},
        {"p_policy", per_policy(cfg.p_policy)},
        {"p_difficulty",
         {{"Low", cfg.p_difficulty[Difficulty::Low]},
          {"Med", cfg.p_difficulty[Difficulty::Med]},
          {"High", cfg.p_difficulty[Difficulty::High]}}},
        {"schedule", schedule},
        {"interaction", std::string(to_string(cfg.interaction))},
        {"gamma_hm", cfg.gamma_hm},
        {"curve", curve_to_json(cfg.curve)},
        {"econ",
         {{"mc", per_policy(cfg.econ.mc)},
          {"delta", per_policy(cfg.econ.delta)},
          {"t_err", cfg.econ.t_err},
          {"c_err", cfg.econ.c_err}}},
        {"seed", cfg.seed},
    };
}

/// Parses and validates a config document. Errors name the key path.
inline SimulationConfig config_from_json(const json& doc, const std::string& root_path = "") {
    using detail::Reader;
    const Reader r(doc, root_path);
    if (!doc.is_object()) Reader::fail(root_path.empty() ? "<root>" : root_path, "expected an object");
    r.only_keys({"config_id", "n_firms", "n_epochs", "n_runs", "p_policy", "p_difficulty", "schedule", "interaction",
                 "gamma_hm", "curve", "econ", "seed"});

    auto positive_int = [&](std::string_view key) {
        const long v = r.integer(key);
        if (v < 1 || v > std::numeric_limits<int>::max()) Reader::fail(r.child_path(key), "must be a positive integer");
        return static_cast<int>(v);
    };
    auto per_policy = [](const Reader& node) {
        node.only_keys({"H", "HM", "M"});
        PerPolicy<double> v;
        for (PolicyKind c : kPolicies) v[c] = node.number(to_string(c));
        return v;
    };

    SimulationConfig cfg;
    cfg.config_id = r.has("config_id") ? r.string("config_id") : std::string();
    if (!valid_config_id(cfg.config_id))
        Reader::fail(r.child_path("config_id"), "only letters, digits, '_', '-' and '.' are allowed");
    cfg.n_firms = positive_int("n_firms");
    cfg.n_epochs = positive_int("n_epochs");
    cfg.n_runs = positive_int("n_runs");

    cfg.p_policy = per_policy(r.object("p_policy"));
    validate_probabilities(cfg.p_policy.values, r.child_path("p_policy"));
    const Reader pd = r.object("p_difficulty");
    pd.only_keys({"Low", "Med", "High"});
    for (Difficulty d : kDifficulties) cfg.p_difficulty[d] = pd.number(to_string(d));
    validate_probabilities(cfg.p_difficulty.values, r.child_path("p_difficulty"));

    const Reader sched = r.object("schedule");
    sched.only_keys({"H", "M"});
    for (PolicyKind c : {PolicyKind::H, PolicyKind::M}) {
        const Reader row = sched.object(to_string(c));
        row.only_keys({"Low", "Med", "High"});
        for (Difficulty d : kDifficulties) {
            const Reader cell = row.object(to_string(d));
            cell.only_keys({"start", "end"});
            BetaRamp& ramp = cfg.schedule.at(c, d);
            ramp.start = detail::read_beta_pair(cell.require("start"), cell.child_path("start"));
            ramp.end = detail::read_beta_pair(cell.require("end"), cell.child_path("end"));
        }
    }

    const std::string a = r.string("interaction");
    const auto kind = parse_interaction(a);
    if (!kind || *kind == InteractionKind::Individual)
        Reader::fail(r.child_path("interaction"), "expected Min, Max, Mean, Collaborate or Superpower, got '" + a + "'");
    cfg.interaction = *kind;
    cfg.gamma_hm = r.number("gamma_hm");
    if (!(cfg.gamma_hm >= 1.0)) Reader::fail(r.child_path("gamma_hm"), "must be >= 1");
    cfg.curve = curve_from_json(r.object("curve"));

    const Reader econ = r.object("econ");
    econ.only_keys({"mc", "delta", "t_err", "c_err"});
    cfg.econ.mc = per_policy(econ.object("mc"));
    cfg.econ.delta = per_policy(econ.object("delta"));
    cfg.econ.t_err = econ.number("t_err");
    cfg.econ.c_err = econ.number("c_err");

    const json& seed = r.require("seed");
    if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<long long>() >= 0))
        Reader::fail(r.child_path("seed"), "expected a nonnegative integer");
    cfg.seed = seed.get<std::uint64_t>();

    try {
        validate(cfg);
    } catch (const ConfigError& ex) {
        // validate() already reports field paths relative to the document root
        throw ConfigError(root_path.empty() ? ex.what() : root_path + "." + ex.what());
    }
    return cfg;
}

inline json parse_json_text(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& ex) {
        throw ConfigError(source + ": malformed JSON: " + ex.what());
    }
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline SimulationConfig read_config_file(const std::string& path) {
    const json doc = parse_json_text(read_text_file(path), path);
    try {
        return config_from_json(doc);
    } catch (const ConfigError& ex) {
        throw ConfigError(path + ": " + ex.what());
    }
}

/// Pretty-printed with a trailing newline; stable key order.
inline std::string config_to_text(const SimulationConfig& cfg) { return config_to_json(cfg).dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Design space documents (JSON)

struct SpaceDocument {
    DesignSpace space;
    SimulationConfig base;
};

/// {"numeric": [{name, lo, hi}...], "interactions": [...], "curves": [...], "template": <config>}
/// Missing numeric/interactions/curves fall back to DesignSpace::defaults().
inline SpaceDocument space_from_json(const json& doc) {
    using detail::Reader;
    const Reader r(doc, "");
    if (!doc.is_object()) Reader::fail("<root>", "expected an object");
    r.only_keys({"numeric", "interactions", "curves", "template"});
    SpaceDocument out;
    out.space = DesignSpace::defaults();
    if (r.has("numeric")) {
        const json& arr = r.require("numeric");
        if (!arr.is_array()) Reader::fail("numeric", "expected an array");
        out.space.numeric.clear();
        for (std::size_t j = 0; j < arr.size(); ++j) {
            const Reader item(arr[j], "numeric[" + std::to_string(j) + "]");
            item.only_keys({"name", "lo", "hi"});
            out.space.numeric.push_back({item.string("name"), item.number("lo"), item.number("hi")});
        }
    }
    if (r.has("interactions")) {
        const json& arr = r.require("interactions");
        if (!arr.is_array()) Reader::fail("interactions", "expected an array");
        out.space.interactions.clear();
        for (std::size_t j = 0; j < arr.size(); ++j) {
            const std::string path = "interactions[" + std::to_string(j) + "]";
            if (!arr[j].is_string()) Reader::fail(path, "expected a string");
            auto a = parse_interaction(arr[j].get<std::string>());
            if (!a || *a == InteractionKind::Individual) Reader::fail(path, "not a combination rule");
            out.space.interactions.push_back(*a);
        }
    }
    if (r.has("curves")) {
        const json& arr = r.require("curves");
        if (!arr.is_array()) Reader::fail("curves", "expected an array");
        out.space.curves.clear();
        for (std::size_t j = 0; j < arr.size(); ++j)
            out.space.curves.push_back(curve_from_json(Reader(arr[j], "curves[" + std::to_string(j) + "]")));
    }
    out.base = config_from_json(r.require("template"), "template");
    out.space.validate();
    return out;
}

inline SpaceDocument read_space_file(const std::string& path) {
    const json doc = parse_json_text(read_text_file(path), path);
    try {
        return space_from_json(doc);
    } catch (const ConfigError& ex) {
        throw ConfigError(path + ": " + ex.what());
    }
}

// ---------------------------------------------------------------------------
// Runs files (CSV)

inline constexpr std::string_view kRunsHeader = "config_id,k,e,i,c,a,d,theta,y,v,err,u";
inline constexpr std::string_view kRunsDebugColumns = ",theta_h,theta_m";

/// One row per record in frame order; debug frames append theta_h,theta_m.
inline void write_runs_csv(std::ostream& out, const MetricFrame& frame) {
    const bool debug = !frame.draws.empty();
    out << kRunsHeader << (debug ? kRunsDebugColumns : "") << '\n';
    std::string line;
    for (std::size_t j = 0; j < frame.records.size(); ++j) {
        const MetricRecord& r = frame.records[j];
        line.clear();
        line += frame.config_id;
        line += ',' + std::to_string(r.run) + ',' + std::to_string(r.epoch) + ',' + std::to_string(r.firm);
        line += ',';
        line += to_string(r.policy);
        line += ',';
        line += to_string(r.interaction);
        line += ',';
        line += to_string(r.difficulty);
        for (double x : {r.theta, r.y, r.v, r.err, r.u}) line += ',' + format_real(x);
        if (debug) line += ',' + format_real(frame.draws[j].theta_h) + ',' + format_real(frame.draws[j].theta_m);
        line += '\n';
        out << line;
    }
}

inline MetricFrame read_runs_csv(std::istream& in, const std::string& source = "runs file") {
    std::string line;
    if (!getline_trimmed(in, line)) throw ConfigError(source + ": empty file");
    bool debug = false;
    if (line == std::string(kRunsHeader) + std::string(kRunsDebugColumns)) debug = true;
    else if (line != kRunsHeader) throw ConfigError(source + ": unexpected header '" + line + "'");

    MetricFrame frame;
    const std::size_t expected = debug ? 14 : 12;
    std::size_t line_no = 1;
    while (getline_trimmed(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto f = split_fields(line);
        const std::string where = source + ":" + std::to_string(line_no);
        if (f.size() != expected) throw ConfigError(where + ": expected " + std::to_string(expected) + " fields");
        if (frame.records.empty()) frame.config_id = std::string(f[0]);
        else if (f[0] != frame.config_id) throw ConfigError(where + ": mixed config_id values");

        MetricRecord r;
        r.run = static_cast<int>(parse_integer(f[1], where + " k"));
        r.epoch = static_cast<int>(parse_integer(f[2], where + " e"));
        r.firm = static_cast<int>(parse_integer(f[3], where + " i"));
        auto c = parse_policy(f[4]);
        auto a = parse_interaction(f[5]);
        auto d = parse_difficulty(f[6]);
        if (!c || !a || !d) throw ConfigError(where + ": bad c/a/d label");
        r.policy = *c;
        r.interaction = *a;
        r.difficulty = *d;
        r.theta = parse_real(f[7], where + " theta");
        r.y = parse_real(f[8], where + " y");
        r.v = parse_real(f[9], where + " v");
        r.err = parse_real(f[10], where + " err");
        r.u = parse_real(f[11], where + " u");
        frame.records.push_back(r);
        if (debug) frame.draws.push_back({parse_real(f[12], where + " theta_h"), parse_real(f[13], where + " theta_m")});
    }
    return frame;
}

// ---------------------------------------------------------------------------
// Summary tables (CSV)

inline constexpr std::string_view kSummaryHeader =
    "level,config_id,metric,c,d,a,stat,value,n,gamma_hm,curve_kind,mc_H,mc_HM,mc_M,delta_H,delta_HM,delta_M,t_err,c_err";

struct SummaryDocument {
    std::vector<SimulationCell> cells;
    std::vector<AggregateCell> aggregates;
    std::vector<Omega> stats;  ///< descriptors present in the file, in first-seen order
};

namespace detail {

inline std::string key_columns(const SubsetKey& key) {
    std::string s(to_string(key.metric));
    s += ',';
    s += key.policy ? to_string(*key.policy) : "all";
    s += ',';
    s += key.difficulty ? to_string(*key.difficulty) : "all";
    s += ',';
    s += key.interaction ? to_string(*key.interaction) : "all";
    return s;
}

inline std::string feature_columns(const std::optional<DesignFeatures>& f) {
    if (!f) return ",,,,,,,,,";
    std::string s = format_real(f->gamma_hm) + ',' + f->curve_kind;
    for (PolicyKind c : kPolicies) s += ',' + format_real(f->mc[c]);
    for (PolicyKind c : kPolicies) s += ',' + format_real(f->delta[c]);
    s += ',' + format_real(f->t_err) + ',' + format_real(f->c_err);
    return s;
}

inline std::string optional_real(const std::optional<double>& v) { return v ? format_real(*v) : std::string("NA"); }

} // namespace detail

/// Per-simulation rows ("sim") followed by cross-simulation means ("agg").
inline void write_summary_csv(std::ostream& out, std::span<const SimulationCell> cells,
                              std::span<const AggregateCell> aggregates, std::span<const Omega> omegas) {
    out << kSummaryHeader << '\n';
    for (const auto& c : cells) {
        for (Omega w : omegas) {
            out << "sim," << c.config_id << ',' << detail::key_columns(c.key) << ',' << to_string(w) << ','
                << detail::optional_real(c.get(w)) << ',' << c.n << ',' << detail::feature_columns(c.features) << '\n';
        }
    }
    for (const auto& a : aggregates) {
        out << "agg,*," << detail::key_columns(a.key) << ',' << to_string(a.omega) << ','
            << detail::optional_real(a.central.value) << ',' << a.central.used << ','
            << detail::feature_columns(std::nullopt) << '\n';
    }
}

inline SummaryDocument read_summary_csv(std::istream& in, const std::string& source = "summary file") {
    std::string line;
    if (!getline_trimmed(in, line) || line != kSummaryHeader)
        throw ConfigError(source + ": missing or unexpected summary header");

    SummaryDocument doc;
    std::map<std::pair<std::string, SubsetKey>, std::size_t> cell_index;
    std::size_t line_no = 1;
    while (getline_trimmed(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const std::string where = source + ":" + std::to_string(line_no);
        const auto f = split_fields(line);
        if (f.size() != 19) throw ConfigError(where + ": expected 19 fields");

        SubsetKey key;
        auto m = parse_metric(f[2]);
        if (!m) throw ConfigError(where + ": unknown metric '" + std::string(f[2]) + "'");
        key.metric = *m;
        if (f[3] != "all") {
            key.policy = parse_policy(f[3]);
            if (!key.policy) throw ConfigError(where + ": bad policy");
        }
        if (f[4] != "all") {
            key.difficulty = parse_difficulty(f[4]);
            if (!key.difficulty) throw ConfigError(where + ": bad difficulty");
        }
        if (f[5] != "all") {
            key.interaction = parse_interaction(f[5]);
            if (!key.interaction) throw ConfigError(where + ": bad interaction");
        }
        auto w = parse_omega(f[6]);
        if (!w) throw ConfigError(where + ": unknown stat '" + std::string(f[6]) + "'");
        if (std::find(doc.stats.begin(), doc.stats.end(), *w) == doc.stats.end()) doc.stats.push_back(*w);
        std::optional<double> value;
        if (f[7] != "NA") value = parse_real(f[7], where + " value");
        const auto n = static_cast<std::size_t>(parse_integer(f[8], where + " n"));

        if (f[0] == "agg") {
            AggregateCell a{key, *w, {value, value ? n : 0, 0}};
            doc.aggregates.push_back(a);
            continue;
        }
        if (f[0] != "sim") throw ConfigError(where + ": level must be sim or agg");

        const std::pair<std::string, SubsetKey> id{std::string(f[1]), key};
        auto it = cell_index.find(id);
        if (it == cell_index.end()) {
            SimulationCell cell;
            cell.config_id = id.first;
            cell.key = key;
            cell.n = n;
            if (!f[9].empty()) {
                DesignFeatures feat;
                feat.gamma_hm = parse_real(f[9], where + " gamma_hm");
                feat.curve_kind = std::string(f[10]);
                for (std::size_t c = 0; c < 3; ++c) {
                    feat.mc.values[c] = parse_real(f[11 + c], where + " mc");
                    feat.delta.values[c] = parse_real(f[14 + c], where + " delta");
                }
                feat.t_err = parse_real(f[17], where + " t_err");
                feat.c_err = parse_real(f[18], where + " c_err");
                cell.features = feat;
            }
            it = cell_index.emplace(id, doc.cells.size()).first;
            doc.cells.push_back(std::move(cell));
        }
        doc.cells[it->second].omega[static_cast<std::size_t>(*w)] = value;
    }
    return doc;
}

// ---------------------------------------------------------------------------
// HMG tables (CSV)

inline constexpr std::string_view kHmgHeader = "bin,omega,metric,c0,d,a0,hm_bar,baseline_bar,hmg_pct";

/// "+100.0" style, or "ND" when the baseline central value is zero.
inline std::string format_gain(const std::optional<double>& gain) {
    if (!gain) return "ND";
    double g = *gain;
    char buf[48];
    std::snprintf(buf, sizeof buf, "%+.1f", g);
    std::string s(buf);
    if (s == "-0.0") s = "+0.0";
    return s;
}

inline std::string bin_label(const HmgBin& b) {
    return "[" + format_real(b.lo) + ";" + format_real(b.hi) + (b.closed_right ? "]" : ")");
}

inline void write_hmg_rows(std::ostream& out, std::string_view bin, const HmgTable& table) {
    for (const auto& e : table.entries) {
        out << bin << ',' << to_string(e.omega) << ',' << to_string(e.metric) << ',' << to_string(e.baseline) << ','
            << (e.difficulty ? to_string(*e.difficulty) : "all") << ',' << to_string(e.a0) << ','
            << format_real(e.hm_bar) << ',' << format_real(e.baseline_bar) << ',' << format_gain(e.gain_pct) << '\n';
    }
}

} // namespace skillsim::io

#endif // SKILLSIM_IO_HPP
