// cli_e2e.cpp -- end-to-end checks of the erlangmax binary: exit codes,
// table shapes, byte-level reproducibility, and the --out contract.

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "erlangmax/output.hpp"

namespace {

int failures = 0;

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(ERLANGMAX_BIN) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAIL: " << what << "\n";
    }
}

}  // namespace

int main() {
    using erlangmax::output::parse_csv;

    // exact: closed-form point, CSV
    {
        const auto r = run("exact --beta 1 --k 1 --omega 2");
        expect(r.code == 0, "exact exits 0");
        const auto rows = parse_csv(r.out);
        expect(rows.size() == 1, "exact emits one row");
        expect(std::abs(rows[0].exact - 0.1909830056250525) < 1e-9, "exact value");
        expect(!rows[0].mc_mean.has_value(), "no MC columns without --with-mc");
        expect(std::abs(rows[0].sampling_error - (0.5 - rows[0].exact)) < 1e-15,
               "sampling_error column");
    }
    // exact: JSON carries the same value
    {
        const auto r = run("exact --beta 1 --k 1 --omega 2 --format json");
        expect(r.code == 0, "exact json exits 0");
        expect(r.out.find("\"exact\":0.19098300562505") != std::string::npos, "json exact value");
        expect(r.out.find("\"D_k\":") != std::string::npos, "json D_k field");
    }
    // rho flag converts to omega
    {
        const auto r = run("exact --beta 1 --k 1 --rho 0.38196601125010515");
        expect(r.code == 0, "exact --rho exits 0");
        const auto rows = parse_csv(r.out);
        expect(std::abs(rows[0].omega - 2.0) < 1e-9, "rho -> omega conversion");
    }
    // usage errors exit 2
    expect(run("exact --k 1 --omega 2").code == 2, "missing --beta exits 2");
    expect(run("exact --beta 1 --k 1").code == 2, "missing point exits 2");
    expect(run("exact --beta 1 --k 1 --omega 2 --format yaml").code == 2, "bad format exits 2");
    expect(run("sweep --beta 1 --omega-grid nonsense --k-list 1").code == 2, "bad grid exits 2");
    expect(run("frobnicate").code == 2, "unknown subcommand exits 2");

    // sweep: 3x3 grid in lexicographic order, reproducible bytes
    {
        const auto r = run("sweep --beta 1 --omega-grid 1e2:1e4:log3 --k-list 16,1,4");
        expect(r.code == 0, "sweep exits 0");
        const auto rows = parse_csv(r.out);
        expect(rows.size() == 9, "sweep emits 9 rows");
        bool sorted = true, below = true;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i > 0 && (rows[i].omega < rows[i - 1].omega ||
                          (rows[i].omega == rows[i - 1].omega && rows[i].k <= rows[i - 1].k)))
                sorted = false;
            if (!(rows[i].exact < 0.5)) below = false;
        }
        expect(sorted, "sweep rows in (omega, k) order");
        expect(below, "sweep rows stay below 1/(2 beta)");
        const auto again = run("sweep --beta 1 --omega-grid 1e2:1e4:log3 --k-list 16,1,4");
        expect(r.out == again.out, "sweep reruns byte-identical");
    }
    // sweep with Monte Carlo columns: seeded reproducibility
    {
        const std::string cmd =
            "sweep --beta 1 --omega-grid 2:4:lin2 --k-list 1 --with-mc --paths 20000 --seed 7";
        const auto a = run(cmd);
        const auto b = run(cmd);
        expect(a.code == 0, "sweep --with-mc exits 0");
        expect(a.out == b.out, "mc columns byte-identical across reruns");
        const auto rows = parse_csv(a.out);
        expect(rows.size() == 2 && rows[0].mc_mean.has_value() && rows[0].mc_stderr.has_value(),
               "mc columns populated");
    }
    // simulate: deterministic bytes, sane z-score, small paths still exit 0
    {
        const std::string cmd = "simulate --beta 1 --k 4 --omega 10 --paths 200000 --seed 1";
        const auto a = run(cmd);
        const auto b = run(cmd);
        expect(a.code == 0, "simulate exits 0");
        expect(a.out == b.out, "simulate reruns byte-identical");
        std::istringstream in(a.out);
        std::string header, data;
        std::getline(in, header);
        std::getline(in, data);
        expect(header ==
                   "beta,omega,k,exact,mc_mean,mc_stderr,paths,truncated_paths,bias_bound,z",
               "simulate header");
        const auto zpos = data.rfind(',');
        const double z = std::stod(data.substr(zpos + 1));
        expect(std::abs(z) < 4.0, "simulate z-score within 4");
        expect(run("simulate --beta 1 --k 1 --omega 2 --paths 100 --seed 3").code == 0,
               "tiny path count still exits 0");
    }
    // simulate at a million paths: the z-score must sit inside 3
    {
        const auto r = run("simulate --beta 1 --k 4 --omega 10 --paths 1000000 --seed 1");
        expect(r.code == 0, "million-path simulate exits 0");
        std::istringstream in(r.out);
        std::string header, data;
        std::getline(in, header);
        std::getline(in, data);
        const double z = std::stod(data.substr(data.rfind(',') + 1));
        expect(std::abs(z) < 3.0, "million-path z-score within 3");
    }
    // an unreachable margin means every path truncates: exit 1
    expect(run("simulate --beta 1 --k 1 --omega 2 --paths 1000 --seed 1 --max-steps 1").code == 1,
           "truncation excess exits 1");
    // worker count must not change the bytes
    {
        const std::string cmd = "simulate --beta 1 --k 2 --omega 5 --paths 50000 --seed 9";
        const auto a = run(cmd);
        setenv("ERLANGMAX_THREADS", "3", 1);
        const auto b = run(cmd);
        unsetenv("ERLANGMAX_THREADS");
        expect(a.out == b.out, "thread count does not change output bytes");
    }
    // --out: file carries the table, stdout only a summary
    {
        const std::string path = "cli_e2e_out.csv";
        const auto r = run("exact --beta 1 --k 2 --omega 5 --out " + path);
        expect(r.code == 0, "--out exits 0");
        expect(r.out.find("wrote 1 row(s) to") != std::string::npos, "--out prints summary");
        expect(r.out.find("beta,omega") == std::string::npos, "--out keeps table off stdout");
        std::ifstream f(path);
        std::stringstream body;
        body << f.rdbuf();
        const auto rows = parse_csv(body.str());
        expect(rows.size() == 1 && rows[0].k == 2, "--out file parses");
        std::remove(path.c_str());
    }
    // verify: negative control must fail with exit 1
    {
        const auto r = run("verify --quick --inject-fault");
        expect(r.code == 1, "fault injection exits 1");
        expect(r.out.find("FAIL") != std::string::npos, "fault injection reports FAIL lines");
    }

    if (failures == 0) std::puts("cli_e2e: all checks passed");
    return failures;
}
