// Command-line front end: reproduces each figure/table as CSV or JSON data
// files, plus a machine-readable acceptance report.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "timeflip/acceptance.hpp"
#include "timeflip/figures.hpp"
#include "timeflip/io.hpp"
#include "timeflip/parallel.hpp"

namespace {

using namespace timeflip;

constexpr double pi = std::numbers::pi;

struct GlobalOptions {
    std::string out = "out";
    std::string format = "csv";
    std::uint64_t seed = 12345;
    int threads = 0;
    std::size_t grid = 0;  // 0: per-command default
    bool degrees = false;

    OutputFormat fmt() const {
        return format == "json" ? OutputFormat::json : OutputFormat::csv;
    }
    double angle(double value) const { return degrees ? value * pi / 180.0 : value; }
    std::size_t grid_or(std::size_t fallback) const { return grid ? grid : fallback; }
};

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

int run_acceptance(const GlobalOptions& g, int criterion, const std::string& command) {
    std::vector<CriterionResult> results;
    if (criterion == 0)
        results = run_all_criteria(g.seed);
    else
        results.push_back(run_criterion(criterion, g.seed));

    nlohmann::ordered_json report;
    report["provenance"] = {{"command", command},
                            {"seed", g.seed},
                            {"version", kToolkitVersion}};
    bool all_passed = true;
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (const CriterionResult& r : results) {
        std::printf("criterion %2d [%s] %s (%.2fs)\n", r.id,
                    r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds);
        for (const std::string& d : r.details) std::printf("%s\n", d.c_str());
        all_passed = all_passed && r.passed;
        items.push_back({{"id", r.id},
                         {"name", r.name},
                         {"passed", r.passed},
                         {"details", r.details},
                         {"seconds", r.seconds}});
    }
    report["criteria"] = std::move(items);
    report["all_passed"] = all_passed;
    std::filesystem::create_directories(g.out);
    const std::string path = g.out + "/acceptance.json";
    std::ofstream os(path, std::ios::binary);
    os << report.dump(2) << "\n";
    std::printf("report written to %s\n", path.c_str());
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fisher-information toolkit for time-flip quantum metrology"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--out", g.out, "Output directory");
    app.add_option("--format", g.format, "Output format (csv|json)")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--seed", g.seed, "Random seed");
    app.add_option("--threads", g.threads, "Worker threads (0 = auto)");
    app.add_option("--grid", g.grid, "Grid resolution override");
    app.add_flag("--degrees", g.degrees, "Interpret angle options in degrees");

    // fig2
    std::size_t fig2_n = 3;
    CLI::App* fig2 = app.add_subcommand("fig2", "QFI maps over the encoding axis");
    fig2->add_option("--N", fig2_n, "Probe qubits");

    // fig3
    double fig3_theta = pi / 4.0;
    std::vector<double> fig3_s = {0.8, 0.6, 0.0};
    CLI::App* fig3 = app.add_subcommand("fig3", "Single-qubit noisy comparison");
    fig3->add_option("--theta", fig3_theta, "Encoding angle");
    fig3->add_option("--s", fig3_s, "Regular-strategy probe Bloch vector")
        ->expected(3)->delimiter(',');

    // fig4
    std::vector<double> fig4_q = {0.95, 0.99};
    double fig4_theta = pi / 4.0;
    std::size_t fig4_nmax = 250;
    bool fig4_per_qubit = false;
    CLI::App* fig4 = app.add_subcommand("fig4", "Multiqubit noisy FI against N");
    fig4->add_option("--q", fig4_q, "Noise parameters");
    fig4->add_option("--theta", fig4_theta, "Encoding angle");
    fig4->add_option("--n-max", fig4_nmax, "Largest probe count");
    fig4->add_flag("--per-qubit", fig4_per_qubit, "Emit FI per qubit");

    // fig5
    CLI::App* fig5 = app.add_subcommand(
        "fig5", "Averaged flip-switch heatmap, threshold curve and fit");

    // fig6
    CLI::App* fig6 = app.add_subcommand("fig6", "x+y surface certificate");

    // fig7
    std::vector<double> fig7_q = {0.95, 0.99};
    std::size_t fig7_nmax = 60, fig7_res = 4096;
    CLI::App* fig7 = app.add_subcommand("fig7", "Theta-averaged multiqubit curves");
    fig7->add_option("--q", fig7_q, "Noise parameters");
    fig7->add_option("--n-max", fig7_nmax, "Largest probe count");
    fig7->add_option("--resolution", fig7_res, "Quadrature resolution");

    // table1
    std::vector<double> t1_q = {0.95, 0.99};
    std::size_t t1_cap = 512, t1_res = 4096;
    CLI::App* table1 = app.add_subcommand("table1", "Theta-averaged maxima table");
    table1->add_option("--q", t1_q, "Noise parameters");
    table1->add_option("--n-cap", t1_cap, "Scan cap on probe count");
    table1->add_option("--resolution", t1_res, "Quadrature resolution");

    // phase-opt
    std::size_t po_axes = 20;
    std::vector<std::size_t> po_n = {1, 3, 5};
    CLI::App* phase_opt =
        app.add_subcommand("phase-opt", "Optimizer vs closed-form optimum scan");
    phase_opt->add_option("--axes", po_axes, "Number of random axes");
    phase_opt->add_option("--N", po_n, "Probe counts");

    // axis-qfi
    CLI::App* axis = app.add_subcommand("axis-qfi", "Axis-estimation QFI scan");

    // spectrum
    double sp_n2 = 1.0;
    CLI::App* spectrum = app.add_subcommand("spectrum", "Branch-overlap eigenphases");
    spectrum->add_option("--n2", sp_n2, "Axis component n2");

    // small-theta
    CLI::App* small = app.add_subcommand("small-theta", "Small-angle FI scan");

    // repetition-plan
    std::vector<double> rp_q = {0.95, 0.99};
    std::size_t rp_total = 1000;
    double rp_theta = pi / 4.0;
    CLI::App* rep = app.add_subcommand("repetition-plan", "Qubit-budget repetition plans");
    rep->add_option("--q", rp_q, "Noise parameters");
    rep->add_option("--n-total", rp_total, "Total qubit budget");
    rep->add_option("--theta", rp_theta, "Encoding angle");

    // acceptance
    int acc_criterion = 0;
    CLI::App* acc = app.add_subcommand("acceptance", "Run the acceptance suite");
    acc->add_option("--criterion", acc_criterion, "Single criterion (1..10), 0 = all")
        ->check(CLI::Range(0, 10));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors exit 2
    }

    set_parallel_threads(g.threads);
    const std::string command = join_args(argc, argv);
    const Provenance prov{command, g.seed, kToolkitVersion};

    try {
        std::vector<Table> tables;
        if (fig2->parsed()) {
            tables = figures::qfi_maps(fig2_n, g.grid_or(41), g.seed);
        } else if (fig3->parsed()) {
            tables = figures::noisy_comparison(
                g.angle(fig3_theta), BlochVector(fig3_s[0], fig3_s[1], fig3_s[2]),
                g.grid_or(201));
        } else if (fig4->parsed()) {
            tables = figures::multiqubit_scan(fig4_q, g.angle(fig4_theta), fig4_nmax,
                                              fig4_per_qubit);
        } else if (fig5->parsed()) {
            tables = figures::threshold_maps(g.grid_or(100), g.seed);
        } else if (fig6->parsed()) {
            tables = figures::xy_surface(g.grid_or(200));
        } else if (fig7->parsed()) {
            tables = figures::averaged_multiqubit(fig7_q, fig7_nmax, fig7_res);
        } else if (table1->parsed()) {
            tables = figures::averaged_maxima(t1_q, t1_cap, t1_res);
        } else if (phase_opt->parsed()) {
            tables = figures::phase_optimum_scan(po_axes, po_n, g.seed);
        } else if (axis->parsed()) {
            tables = figures::axis_scan(g.grid_or(50));
        } else if (spectrum->parsed()) {
            tables = figures::spectrum_scan(sp_n2, g.grid_or(201));
        } else if (small->parsed()) {
            tables = figures::small_theta_scan(g.grid_or(101));
        } else if (rep->parsed()) {
            tables = figures::repetition_cases(rp_q, rp_total, g.angle(rp_theta));
        } else if (acc->parsed()) {
            return run_acceptance(g, acc_criterion, command);
        }
        for (const std::string& path : write_tables(tables, g.out, g.fmt(), prov))
            std::printf("wrote %s\n", path.c_str());
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
