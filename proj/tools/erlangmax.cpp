// erlangmax -- command line front end: exact/asymptotic values, parameter
// sweeps, the identity-check suite, and seeded Monte Carlo cross-checks.
//
// Exit codes: 0 success, 1 verification or statistical failure, 2 usage error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "erlangmax/erlangmax.hpp"

namespace {

using namespace erlangmax;
using output::OutputRow;

struct GridSpec {
    std::vector<double> values;
};

// "lo:hi:logN" or "lo:hi:linN" -> N inclusive points, geometric or arithmetic.
GridSpec parse_grid(const std::string& text) {
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw CLI::ValidationError("grid", "expected lo:hi:logN or lo:hi:linN");
    const double lo = std::stod(text.substr(0, c1));
    const double hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    const std::string tail = text.substr(c2 + 1);
    bool logscale;
    if (tail.rfind("log", 0) == 0)
        logscale = true;
    else if (tail.rfind("lin", 0) == 0)
        logscale = false;
    else
        throw CLI::ValidationError("grid", "spacing must be logN or linN");
    const int n = std::stoi(tail.substr(3));
    if (n < 1 || lo <= 0.0 || hi < lo)
        throw CLI::ValidationError("grid", "need 0 < lo <= hi and N >= 1");
    GridSpec g;
    for (int i = 0; i < n; ++i) {
        const double f = (n == 1) ? 0.0 : static_cast<double>(i) / (n - 1);
        g.values.push_back(logscale ? lo * std::pow(hi / lo, f) : lo + (hi - lo) * f);
    }
    return g;
}

OutputRow make_row(double beta, double omega, int k, const std::optional<mc::McConfig>& mc_cfg) {
    const SamplingParams p{beta, omega, k};
    const DerivedParams d = derive(p);
    OutputRow row;
    row.beta = beta;
    row.omega = omega;
    row.k = k;
    row.rho = d.rho;
    row.exact = expected_max(p);
    row.asym = expected_max_asym(p);
    row.sampling_error = 0.5 / beta - row.exact;
    row.d_k = discretization_constant(k).value;
    if (mc_cfg) {
        const auto est = mc::estimate_max(p, *mc_cfg);
        row.mc_mean = est.mean;
        row.mc_stderr = est.std_error;
    }
    return row;
}

// Honors the --out contract: tables land in the file, stdout keeps a summary.
int emit(const std::string& body, std::size_t rows, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << body;
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return 1;
    }
    f << body;
    std::cout << "wrote " << rows << " row(s) to " << out_path << "\n";
    return 0;
}

std::string render(const std::vector<OutputRow>& rows, const std::string& format) {
    return format == "json" ? output::render_json(rows) : output::render_csv(rows);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"expected all-time maximum of a negative-drift Brownian motion "
                 "under Erlang sampling: exact series, asymptotics, Monte Carlo"};
    app.require_subcommand(1);

    // common option storage
    double beta = 1.0;
    int k = 1;
    double omega = 0.0;
    double rho = 0.0;
    std::string format = "csv";
    std::string out_path;

    // one of --omega / --rho must be present; enforced after parse
    auto add_point_options = [&](CLI::App* cmd) {
        cmd->add_option("--beta", beta, "drift magnitude")->required();
        cmd->add_option("--k", k, "Erlang phase count")->required();
        auto* om = cmd->add_option("--omega", omega, "sampling frequency");
        auto* rh = cmd->add_option("--rho", rho, "load parameter in (0,1), converted to omega");
        om->excludes(rh);
        cmd->add_option("--format", format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", out_path, "write the table to a file");
        return std::pair{om, rh};
    };

    // exact -------------------------------------------------------------
    auto* cmd_exact = app.add_subcommand("exact", "exact expected maximum at one point");
    auto [exact_om, exact_rh] = add_point_options(cmd_exact);

    // sweep -------------------------------------------------------------
    auto* cmd_sweep = app.add_subcommand("sweep", "table over an omega or rho grid");
    double sweep_beta = 1.0;
    std::string omega_grid, rho_grid, k_list;
    bool with_mc = false;
    std::int64_t sweep_paths = 100000;
    std::uint64_t sweep_seed = 0;
    std::string sweep_format = "csv", sweep_out;
    cmd_sweep->add_option("--beta", sweep_beta, "drift magnitude")->required();
    auto* og = cmd_sweep->add_option("--omega-grid", omega_grid, "lo:hi:logN or lo:hi:linN");
    auto* rg = cmd_sweep->add_option("--rho-grid", rho_grid, "lo:hi:logN or lo:hi:linN");
    og->excludes(rg);
    cmd_sweep->add_option("--k-list", k_list, "comma-separated k values")->required();
    cmd_sweep->add_flag("--with-mc", with_mc, "append Monte Carlo columns");
    cmd_sweep->add_option("--paths", sweep_paths, "Monte Carlo paths per row");
    cmd_sweep->add_option("--seed", sweep_seed, "Monte Carlo seed");
    cmd_sweep->add_option("--format", sweep_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd_sweep->add_option("--out", sweep_out, "write the table to a file");

    // verify ------------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "run the identity/bound check suite");
    bool quick = false;
    bool inject_fault = false;
    cmd_verify->add_flag("--quick", quick, "reduced grids");
    cmd_verify->add_flag("--inject-fault", inject_fault)->group("");  // negative control, hidden

    // simulate ----------------------------------------------------------
    auto* cmd_sim = app.add_subcommand("simulate", "Monte Carlo estimate with z-score vs exact");
    std::int64_t sim_paths = 100000;
    std::uint64_t sim_seed = 0;
    double sim_margin_eps = 1e-9;
    std::int64_t sim_max_steps = 10000000;
    auto [sim_om, sim_rh] = add_point_options(cmd_sim);
    cmd_sim->add_option("--paths", sim_paths, "number of paths");
    cmd_sim->add_option("--seed", sim_seed, "RNG seed (default 0, never wall-clock)");
    cmd_sim->add_option("--margin-eps", sim_margin_eps, "per-path truncation-bias target");
    cmd_sim->add_option("--max-steps", sim_max_steps, "per-path step cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*cmd_exact) {
            if (exact_om->count() == 0 && exact_rh->count() == 0) {
                std::cerr << "error: one of --omega / --rho is required\n";
                return 2;
            }
            const double w = exact_om->count() ? omega : omega_from_rho(rho, k, beta);
            const std::vector<OutputRow> rows{make_row(beta, w, k, std::nullopt)};
            return emit(render(rows, format), rows.size(), out_path);
        }

        if (*cmd_sweep) {
            if (og->count() == 0 && rg->count() == 0) {
                std::cerr << "error: one of --omega-grid / --rho-grid is required\n";
                return 2;
            }
            std::vector<int> ks;
            {
                std::string item;
                std::istringstream in(k_list);
                while (std::getline(in, item, ',')) ks.push_back(std::stoi(item));
                if (ks.empty()) throw CLI::ValidationError("--k-list", "no k values");
                std::sort(ks.begin(), ks.end());
            }
            std::vector<OutputRow> rows;
            std::size_t row_index = 0;
            if (og->count()) {
                auto grid = parse_grid(omega_grid);
                for (double w : grid.values)
                    for (int kk : ks) {
                        std::optional<mc::McConfig> cfg;
                        if (with_mc)
                            cfg = mc::McConfig{sweep_paths, sweep_seed + row_index, 1e-9, 10000000};
                        rows.push_back(make_row(sweep_beta, w, kk, cfg));
                        ++row_index;
                    }
            } else {
                auto grid = parse_grid(rho_grid);
                // rho grid maps to a per-k omega; keep (omega, k) ordering inside each rho
                for (double r : grid.values)
                    for (int kk : ks) {
                        std::optional<mc::McConfig> cfg;
                        if (with_mc)
                            cfg = mc::McConfig{sweep_paths, sweep_seed + row_index, 1e-9, 10000000};
                        rows.push_back(make_row(sweep_beta, omega_from_rho(r, kk, sweep_beta), kk, cfg));
                        ++row_index;
                    }
            }
            return emit(render(rows, sweep_format), rows.size(), sweep_out);
        }

        if (*cmd_verify) {
            verify::VerifyOptions opt;
            opt.quick = quick;
            opt.rho_perturb = inject_fault ? 1e-3 : 0.0;
            const auto results = verify::run_verification(opt);
            bool all_pass = true;
            for (const auto& r : results) {
                std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " -- " << r.detail << "\n";
                all_pass = all_pass && r.pass;
            }
            std::cout << (all_pass ? "all checks passed\n" : "CHECKS FAILED\n");
            return all_pass ? 0 : 1;
        }

        if (*cmd_sim) {
            if (sim_om->count() == 0 && sim_rh->count() == 0) {
                std::cerr << "error: one of --omega / --rho is required\n";
                return 2;
            }
            const double w = sim_om->count() ? omega : omega_from_rho(rho, k, beta);
            const SamplingParams p{beta, w, k};
            const mc::McConfig cfg{sim_paths, sim_seed, sim_margin_eps, sim_max_steps};
            mc::McEstimate est;
            try {
                est = mc::estimate_max(p, cfg);
            } catch (const TruncationExcess& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 1;
            }
            const double exact_value = expected_max(p);
            const double z = (est.std_error > 0.0)
                                 ? (exact_value - est.mean) / est.std_error
                                 : 0.0;
            std::string body;
            if (format == "json") {
                body = "[\n  {\"beta\":" + output::fmt17(beta) + ",\"omega\":" + output::fmt17(w) +
                       ",\"k\":" + std::to_string(k) + ",\"exact\":" + output::fmt17(exact_value) +
                       ",\"mc_mean\":" + output::fmt17(est.mean) +
                       ",\"mc_stderr\":" + output::fmt17(est.std_error) +
                       ",\"paths\":" + std::to_string(est.paths) +
                       ",\"truncated_paths\":" + std::to_string(est.truncated_paths) +
                       ",\"bias_bound\":" + output::fmt17(est.bias_bound) +
                       ",\"z\":" + output::fmt17(z) + "}\n]\n";
            } else {
                body = "beta,omega,k,exact,mc_mean,mc_stderr,paths,truncated_paths,bias_bound,z\n";
                body += output::fmt17(beta) + "," + output::fmt17(w) + "," + std::to_string(k) +
                        "," + output::fmt17(exact_value) + "," + output::fmt17(est.mean) + "," +
                        output::fmt17(est.std_error) + "," + std::to_string(est.paths) + "," +
                        std::to_string(est.truncated_paths) + "," + output::fmt17(est.bias_bound) +
                        "," + output::fmt17(z) + "\n";
            }
            return emit(body, 1, out_path);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
