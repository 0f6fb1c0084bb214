// Command line front end: run one scenario, compare strategies on a shared
// topology, or sweep hotspot/station counts across seeds.
//
// Exit codes: 0 success, 1 bad usage or bad config, 2 runtime failure.

#include "CLI11.hpp"

#include <maecsim/config.hpp>
#include <maecsim/metrics.hpp>
#include <maecsim/netsim.hpp>

#include <atomic>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace fs = std::filesystem;
using namespace maecsim;

namespace {

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("cannot write " + path.string());
}

ScenarioConfig load_config(const fs::path& path, std::optional<std::uint64_t> seed) {
    ScenarioConfig cfg = parse_config(slurp(path));
    if (seed) cfg.seed = *seed;
    return cfg;
}

void write_rows(const fs::path& path, const std::vector<SummaryRow>& rows) {
    std::ostringstream os;
    write_summary_csv(rows, os);
    spill(path, os.str());
}

void write_per_node(const fs::path& path, const SimulationReport& rep) {
    std::ostringstream os;
    write_per_node_csv(per_node_rows(rep), os);
    spill(path, os.str());
}

std::string comparison_table(const std::vector<SummaryRow>& rows) {
    std::ostringstream os;
    os << std::left << std::setw(10) << "strategy" << std::right << std::setw(12) << "avg"
       << std::setw(12) << "max" << std::setw(12) << "min" << std::setw(13) << "total"
       << std::setw(10) << "avg%" << std::setw(11) << "delivered" << std::setw(9) << "dropped"
       << '\n';
    os << std::fixed << std::setprecision(4);
    for (const SummaryRow& r : rows) {
        os << std::left << std::setw(10) << r.strategy << std::right << std::setw(12)
           << r.summary.avg << std::setw(12) << r.summary.max << std::setw(12) << r.summary.min
           << std::setw(13) << r.summary.total << std::setw(10) << r.summary.avg_percent * 100.0
           << std::setw(11) << r.summary.delivered << std::setw(9) << r.summary.dropped << '\n';
    }
    return os.str();
}

int cmd_run(const fs::path& config_path, const fs::path& out_dir,
            std::optional<std::uint64_t> seed) {
    const ScenarioConfig cfg = load_config(config_path, seed);
    const SimulationReport rep = run_scenario(cfg);

    fs::create_directories(out_dir);
    write_per_node(out_dir / "per_node.csv", rep);
    write_rows(out_dir / "summary.csv", {summary_row(rep)});

    const Summary s = summarize(rep.ledger, cfg.initial_energy);
    std::cout << "strategy=" << strategy_name(cfg.strategy) << " n_h=" << cfg.n_h
              << " n_b=" << cfg.n_b << " seed=" << cfg.seed << '\n';
    std::cout << "nodes=" << rep.nodes.size() << " sources=" << rep.source_ids.size()
              << " ticks=" << rep.ticks << " rounds=" << rep.rounds << '\n';
    std::cout << "generated=" << rep.generated << " delivered=" << rep.delivered
              << " dropped=" << rep.dropped << '\n';
    std::cout << std::fixed << std::setprecision(4);
    std::cout << "energy avg=" << s.avg << " max=" << s.max << " min=" << s.min
              << " total=" << s.total << " consumed=" << s.avg_percent * 100.0 << "%\n";
    std::cout << "wrote " << (out_dir / "per_node.csv").string() << " and "
              << (out_dir / "summary.csv").string() << '\n';
    return 0;
}

int cmd_compare(const fs::path& config_path, const fs::path& out_dir,
                std::optional<std::uint64_t> seed) {
    const ScenarioConfig base = load_config(config_path, seed);

    std::vector<Strategy> strategies{Strategy::Static, Strategy::Random, Strategy::Periphery,
                                     Strategy::Maec};
    if (base.n_b > 1) strategies.push_back(Strategy::Comaec);

    fs::create_directories(out_dir);
    std::vector<SummaryRow> rows;
    for (Strategy s : strategies) {
        ScenarioConfig cfg = base;
        cfg.strategy = s;
        const SimulationReport rep = run_scenario(cfg);
        rows.push_back(summary_row(rep));
        write_per_node(out_dir / (std::string("per_node_") + strategy_name(s) + ".csv"), rep);
    }
    write_rows(out_dir / "summary.csv", rows);

    const std::string table = comparison_table(rows);
    spill(out_dir / "comparison.txt", table);
    std::cout << "n_h=" << base.n_h << " n_b=" << base.n_b << " seed=" << base.seed << '\n'
              << table;
    std::cout << "wrote " << (out_dir / "summary.csv").string() << " and "
              << (out_dir / "comparison.txt").string() << '\n';
    return 0;
}

// One sweep cell: a fully resolved config whose result lands in `slot`.
struct SweepJob {
    ScenarioConfig cfg;
    std::size_t slot = 0;
};

void run_jobs(std::vector<SweepJob> jobs, std::vector<SummaryRow>& results, unsigned jobs_n) {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mu;

    auto worker = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= jobs.size()) return;
            try {
                results[jobs[i].slot] = summary_row(run_scenario(jobs[i].cfg));
            } catch (...) {
                std::scoped_lock lock(error_mu);
                if (!first_error) first_error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };

    const unsigned n =
        std::max<unsigned>(1, static_cast<unsigned>(std::min<std::size_t>(jobs_n, jobs.size())));
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

// Hotspot sweep pairs every strategy with the same seed per (n_h, rep) cell so
// they see identical topologies; the station sweep does the same per (n_b, rep).
// Explicit hotspot/station lists from the config are dropped because the swept
// counts change; placements come from the per-cell seed instead.
int cmd_sweep(const fs::path& config_path, const fs::path& out_dir,
              std::optional<std::uint64_t> seed, int reps, unsigned jobs_n) {
    ScenarioConfig base = load_config(config_path, seed);
    base.hotspots.clear();
    base.stations.clear();
    validate(base);

    const std::uint64_t seed_base = base.seed;
    fs::create_directories(out_dir);

    const std::vector<Strategy> nh_strategies{Strategy::Static, Strategy::Random,
                                              Strategy::Periphery, Strategy::Maec};
    std::vector<SweepJob> nh_jobs;
    std::size_t run_index = 0;
    for (int n_h = 1; n_h <= 7; ++n_h) {
        for (int rep = 0; rep < reps; ++rep) {
            const std::uint64_t cell_seed = seed_base + run_index++;
            for (Strategy s : nh_strategies) {
                ScenarioConfig cfg = base;
                cfg.n_h = n_h;
                cfg.n_b = 1;
                cfg.strategy = s;
                cfg.seed = cell_seed;
                nh_jobs.push_back({std::move(cfg), nh_jobs.size()});
            }
        }
    }

    const std::vector<Strategy> nb_strategies{Strategy::Comaec, Strategy::Static};
    std::vector<SweepJob> nb_jobs;
    for (int n_b = 1; n_b <= 4; ++n_b) {
        for (int rep = 0; rep < reps; ++rep) {
            const std::uint64_t cell_seed = seed_base + run_index++;
            for (Strategy s : nb_strategies) {
                ScenarioConfig cfg = base;
                cfg.n_h = n_b;  // one hotspot per station
                cfg.n_b = n_b;
                cfg.strategy = s;
                cfg.seed = cell_seed;
                nb_jobs.push_back({std::move(cfg), nb_jobs.size()});
            }
        }
    }

    std::vector<SummaryRow> nh_rows(nh_jobs.size());
    run_jobs(std::move(nh_jobs), nh_rows, jobs_n);
    write_rows(out_dir / "sweep_nh.csv", nh_rows);

    std::vector<SummaryRow> nb_rows(nb_jobs.size());
    run_jobs(std::move(nb_jobs), nb_rows, jobs_n);
    write_rows(out_dir / "sweep_nb.csv", nb_rows);

    std::cout << "hotspot sweep: " << nh_rows.size() << " runs -> "
              << (out_dir / "sweep_nh.csv").string() << '\n';
    std::cout << "station sweep: " << nb_rows.size() << " runs -> "
              << (out_dir / "sweep_nb.csv").string() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Base station mobility simulator for event driven sensor networks"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    std::optional<std::uint64_t> seed;
    int reps = 3;
    unsigned jobs_n = std::max(1u, std::thread::hardware_concurrency());

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "scenario config file")->required();
        sub->add_option("--out", out_dir, "output directory (default: out)");
        sub->add_option("--seed", seed, "override the config seed");
    };

    CLI::App* run = app.add_subcommand("run", "run one scenario and write per-node results");
    add_common(run);
    CLI::App* compare =
        app.add_subcommand("compare", "run every strategy on one topology and tabulate");
    add_common(compare);
    CLI::App* sweep =
        app.add_subcommand("sweep", "sweep hotspot and station counts across seeds");
    add_common(sweep);
    sweep->add_option("--reps", reps, "repetitions per sweep cell (default: 3)")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--jobs", jobs_n, "parallel workers (default: hardware threads)")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (run->parsed()) return cmd_run(config_path, out_dir, seed);
        if (compare->parsed()) return cmd_compare(config_path, out_dir, seed);
        return cmd_sweep(config_path, out_dir, seed, reps, jobs_n);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
