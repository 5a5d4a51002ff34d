// skillsim: design -> simulate -> analyze -> hmg pipeline, plus the cost calculator.
//
// Exit codes: 0 success, 1 runtime / I-O failure, 2 usage or validation error.

#include "skillsim/skillsim.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace fs = std::filesystem;
using namespace skillsim;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

/// Thrown for I/O failures so they map to exit code 1.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    out << content;
    if (!out.flush()) throw IoError("write failed for '" + path.string() + "'");
}

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory '" + dir.string() + "': " + ec.message());
}

std::vector<fs::path> list_files(const fs::path& dir, std::string_view extension) {
    if (!fs::is_directory(dir)) throw IoError("not a directory: '" + dir.string() + "'");
    std::vector<fs::path> out;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == extension) out.push_back(entry.path());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

unsigned default_threads() {
    if (const char* env = std::getenv("SKILLSIM_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

// ---------------------------------------------------------------------------

struct DesignArgs {
    std::string space_file;
    std::size_t n = kDefaultNumericPoints;
    std::string method = "lhs";
    std::optional<std::uint64_t> seed;
    std::size_t pool = 0;
    std::string out_dir;
};

int cmd_design(const DesignArgs& args) {
    io::SpaceDocument doc = io::read_space_file(args.space_file);
    DesignOptions opts;
    opts.method = args.method == "maximin" ? DesignMethod::Maximin : DesignMethod::Lhs;
    opts.pool_size = args.pool;
    if (args.seed) doc.base.seed = *args.seed;
    RandomStream rng(doc.base.seed);
    const auto configs = build_designs(doc.space, args.n, opts, doc.base, rng);

    ensure_dir(args.out_dir);
    for (const auto& cfg : configs) write_file(fs::path(args.out_dir) / (cfg.config_id + ".json"), io::config_to_text(cfg));
    std::cout << configs.size() << " configs written to " << args.out_dir << '\n';
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct SimulateArgs {
    std::string config_file;
    std::string configs_dir;
    std::string out_dir;
    unsigned parallel = 0;
    bool debug = false;
};

int cmd_simulate(const SimulateArgs& args) {
    std::vector<fs::path> files;
    if (!args.config_file.empty()) files.emplace_back(args.config_file);
    else files = list_files(args.configs_dir, ".json");

    std::vector<SimulationConfig> configs;
    std::set<std::string> ids;
    for (const auto& f : files) {
        SimulationConfig cfg = io::read_config_file(f.string());
        if (cfg.config_id.empty()) cfg.config_id = f.stem().string();
        if (!ids.insert(cfg.config_id).second) throw ConfigError(f.string() + ": duplicate config_id '" + cfg.config_id + "'");
        configs.push_back(std::move(cfg));
    }
    ensure_dir(args.out_dir);

    const unsigned threads = args.parallel > 0 ? args.parallel : default_threads();
    std::vector<double> millis(configs.size(), 0.0);
    std::vector<std::size_t> rows(configs.size(), 0);
    skillsim::detail::parallel_for(configs.size(), threads, [&](std::size_t j) {
        const auto t0 = std::chrono::steady_clock::now();
        const MetricFrame frame = run_simulation(configs[j], RunOptions{args.debug, 1});
        millis[j] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        rows[j] = frame.records.size();
        std::ostringstream csv;
        io::write_runs_csv(csv, frame);
        write_file(fs::path(args.out_dir) / (frame.config_id + ".csv"), csv.str());
        write_file(fs::path(args.out_dir) / (frame.config_id + ".json"), io::config_to_text(configs[j]));
    });
    for (std::size_t j = 0; j < configs.size(); ++j) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.1f ms", millis[j]);
        std::cout << configs[j].config_id << ": " << rows[j] << " records in " << buf << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct AnalyzeArgs {
    std::string runs_dir;
    std::string group = "policy";
    std::string stats = "mu,sigma,rho,iqr,sk";
    std::string metrics = "theta,y,v,err,u";
    std::string out_file;
};

int cmd_analyze(const AnalyzeArgs& args) {
    Grouping grouping;
    bool has_policy = false;
    for (const auto& g : split_list(args.group)) {
        if (g == "policy") has_policy = true;
        else if (g == "difficulty") grouping.difficulty = true;
        else if (g == "a") grouping.interaction = true;
        else throw UsageError("--group: unknown grouping '" + g + "' (expected policy, difficulty, a)");
    }
    if (!has_policy) throw UsageError("--group must include 'policy'");

    std::vector<Omega> omegas;
    for (const auto& s : split_list(args.stats)) {
        auto w = parse_omega(s);
        if (!w) throw UsageError("--stats: unknown stat '" + s + "' (expected mu, sigma, rho, iqr, sk)");
        omegas.push_back(*w);
    }
    std::vector<Metric> metrics;
    for (const auto& s : split_list(args.metrics)) {
        auto m = parse_metric(s);
        if (!m) throw UsageError("--metrics: unknown metric '" + s + "'");
        metrics.push_back(*m);
    }
    if (omegas.empty() || metrics.empty()) throw UsageError("--stats and --metrics must not be empty");

    std::vector<MetricFrame> frames;
    for (const auto& path : list_files(args.runs_dir, ".csv")) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw IoError("cannot open '" + path.string() + "'");
        MetricFrame frame = io::read_runs_csv(in, path.string());
        if (frame.config_id.empty()) frame.config_id = path.stem().string();
        fs::path sidecar = path;
        sidecar.replace_extension(".json");
        if (fs::exists(sidecar)) frame.config = io::read_config_file(sidecar.string());
        frames.push_back(std::move(frame));
    }
    if (frames.empty()) throw UsageError("no runs files in '" + args.runs_dir + "'");

    const auto cells = summarize_frames(frames, grouping, metrics);
    const auto aggregates = aggregate(cells, omegas);
    std::ostringstream csv;
    io::write_summary_csv(csv, cells, aggregates, omegas);
    write_file(args.out_file, csv.str());
    std::cout << frames.size() << " simulations, " << cells.size() << " cells, " << aggregates.size()
              << " aggregate rows -> " << args.out_file << '\n';
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct HmgArgs {
    std::string summary_file;
    std::string omega = "mu";
    std::string metric = "u";
    std::string delta_bins;
    std::string out_file;
};

int cmd_hmg(const HmgArgs& args) {
    const auto omega = parse_omega(args.omega);
    if (!omega) throw UsageError("--omega: unknown stat '" + args.omega + "'");
    const auto metric = parse_metric(args.metric);
    if (!metric) throw UsageError("--metric: unknown metric '" + args.metric + "'");

    std::ifstream in(args.summary_file, std::ios::binary);
    if (!in) throw IoError("cannot open '" + args.summary_file + "'");
    const io::SummaryDocument doc = io::read_summary_csv(in, args.summary_file);
    if (std::find(doc.stats.begin(), doc.stats.end(), *omega) == doc.stats.end())
        throw UsageError("summary has no '" + args.omega + "' rows");

    std::ostringstream csv;
    csv << io::kHmgHeader << '\n';
    std::size_t written = 0;
    auto report = [&](std::string_view label, const HmgTable& table) {
        for (const auto& d : table.diagnostics) std::cerr << label << ": " << d << '\n';
        io::write_hmg_rows(csv, label, table);
        written += table.entries.size();
    };

    if (args.delta_bins.empty()) {
        report("all", hmg_from_cells(doc.cells, *omega, *metric));
    } else {
        std::vector<double> edges;
        for (const auto& e : split_list(args.delta_bins)) edges.push_back(io::parse_real(e, "--delta-bins"));
        for (const auto& bin : hmg_by_delta(doc.cells, *omega, *metric, edges)) report(io::bin_label(bin), bin.table);
    }
    if (written == 0)
        throw UsageError("no HMG entries: the summary lacks HM or baseline (H/M, a=Individual) rows; analyze with --group policy,a");
    write_file(args.out_file, csv.str());
    std::cout << written << " HMG entries -> " << args.out_file << '\n';
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct CostArgs {
    double avg_price = 0.0;
    double n_sales = 0.0;
    double cost_fraction = 0.0;
    double mape = 0.0;
    double dev = 0.0;
    double ops = 0.0;
    double periods = 1.0;
};

int cmd_costs(const CostArgs& a) {
    for (double x : {a.avg_price, a.n_sales, a.cost_fraction, a.mape, a.dev, a.ops, a.periods})
        if (!(x >= 0.0)) throw UsageError("cost inputs must be nonnegative");
    const double err = expected_error_cost(a.avg_price, a.n_sales, a.cost_fraction, a.mape);
    const double total = skill_cost_total(err, a.dev, a.ops, a.periods);
    std::cout << "error_cost_per_period: " << io::format_real(err) << '\n'
              << "total_cost: " << io::format_real(total) << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"skillsim: Monte Carlo economics of human, machine and human-machine skill policies"};
    app.require_subcommand(1);

    DesignArgs design;
    auto* design_cmd = app.add_subcommand("design", "Sample a design space into config files");
    design_cmd->add_option("space", design.space_file, "Design space JSON")->required();
    design_cmd->add_option("--n", design.n, "Numeric design points")->check(CLI::PositiveNumber);
    design_cmd->add_option("--method", design.method, "lhs or maximin")->check(CLI::IsMember({"lhs", "maximin"}));
    design_cmd->add_option("--seed", design.seed, "Seed (defaults to the template seed)");
    design_cmd->add_option("--pool", design.pool, "Maximin candidate pool size (default 20 * n)");
    design_cmd->add_option("--out", design.out_dir, "Output directory")->required();

    SimulateArgs sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Run configs and write runs files");
    auto* one = sim_cmd->add_option("--config", sim.config_file, "Single config JSON");
    auto* many = sim_cmd->add_option("--configs", sim.configs_dir, "Directory of config JSON files");
    one->excludes(many);
    sim_cmd->add_option("--out", sim.out_dir, "Output directory")->required();
    sim_cmd->add_option("--parallel", sim.parallel, "Worker threads (default: $SKILLSIM_THREADS or all cores)")
        ->check(CLI::PositiveNumber);
    sim_cmd->add_flag("--debug", sim.debug, "Append theta_h,theta_m columns");

    AnalyzeArgs analyze;
    auto* analyze_cmd = app.add_subcommand("analyze", "Summary statistics per simulation and across simulations");
    analyze_cmd->add_option("--runs", analyze.runs_dir, "Directory of runs files")->required();
    analyze_cmd->add_option("--group", analyze.group, "policy[,difficulty][,a]");
    analyze_cmd->add_option("--stats", analyze.stats, "Comma list of mu,sigma,rho,iqr,sk");
    analyze_cmd->add_option("--metrics", analyze.metrics, "Comma list of theta,y,v,err,u");
    analyze_cmd->add_option("--out", analyze.out_file, "Summary CSV")->required();

    HmgArgs hmg_args;
    auto* hmg_cmd = app.add_subcommand("hmg", "HM gain table from a summary file");
    hmg_cmd->add_option("--summary", hmg_args.summary_file, "Summary CSV from analyze")->required();
    hmg_cmd->add_option("--omega", hmg_args.omega, "Descriptor (mu, sigma, rho, iqr, sk)");
    hmg_cmd->add_option("--metric", hmg_args.metric, "Metric (theta, y, v, err, u)");
    hmg_cmd->add_option("--delta-bins", hmg_args.delta_bins, "Comma-separated delta_HM bin edges");
    hmg_cmd->add_option("--out", hmg_args.out_file, "HMG CSV")->required();

    CostArgs costs;
    auto* costs_cmd = app.add_subcommand("costs", "Expected error cost and total skill cost");
    costs_cmd->add_option("--avg-price", costs.avg_price)->required();
    costs_cmd->add_option("--n-sales", costs.n_sales)->required();
    costs_cmd->add_option("--cost-fraction", costs.cost_fraction)->required();
    costs_cmd->add_option("--mape", costs.mape)->required();
    costs_cmd->add_option("--dev", costs.dev, "One-off development cost");
    costs_cmd->add_option("--ops", costs.ops, "Operating cost per period");
    costs_cmd->add_option("--periods", costs.periods, "Number of periods");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*design_cmd) return cmd_design(design);
        if (*sim_cmd) {
            if (sim.config_file.empty() && sim.configs_dir.empty()) throw UsageError("one of --config or --configs is required");
            return cmd_simulate(sim);
        }
        if (*analyze_cmd) return cmd_analyze(analyze);
        if (*hmg_cmd) return cmd_hmg(hmg_args);
        if (*costs_cmd) return cmd_costs(costs);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitUsage;
}
