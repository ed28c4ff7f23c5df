#include <doctest.h>

#include <string>

#include "erlangmax/output.hpp"

using namespace erlangmax::output;

namespace {

OutputRow sample_row(bool with_mc) {
    OutputRow r;
    r.beta = 1.0;
    r.omega = 2.0;
    r.k = 1;
    r.rho = 1.0 / 3.0;
    r.exact = 0.1909830056250525;
    r.asym = 0.2071067811865475;
    if (with_mc) {
        r.mc_mean = 0.19101;
        r.mc_stderr = 0.00021;
    }
    r.sampling_error = 0.5 - r.exact;
    r.d_k = 0.7071067811865475;
    return r;
}

}  // namespace

TEST_CASE("CSV header and 17-significant-digit rendering") {
    CHECK(std::string(csv_header()) ==
          "beta,omega,k,rho,exact,asym,mc_mean,mc_stderr,sampling_error,D_k");
    CHECK(fmt17(1.0 / 3.0) == "0.33333333333333331");
    CHECK(fmt17(2.0) == "2");
    const std::string line = to_csv(sample_row(false));
    CHECK(line.find("0.33333333333333331") != std::string::npos);
    // absent Monte Carlo columns stay as empty cells
    CHECK(line.find(",,") != std::string::npos);
}

TEST_CASE("CSV parse/render round trip is byte-identical") {
    for (bool with_mc : {false, true}) {
        const std::vector<OutputRow> rows{sample_row(with_mc), sample_row(!with_mc)};
        const std::string text = render_csv(rows);
        const std::string again = render_csv(parse_csv(text));
        CHECK(text == again);
    }
    CHECK_THROWS(parse_csv("not,a,header\n1,2,3\n"));
}

TEST_CASE("JSON rendering carries the same field names") {
    const std::string body = render_json({sample_row(true)});
    for (const char* key : {"\"beta\":", "\"omega\":", "\"k\":", "\"rho\":", "\"exact\":",
                            "\"asym\":", "\"mc_mean\":", "\"mc_stderr\":", "\"sampling_error\":",
                            "\"D_k\":"})
        CHECK(body.find(key) != std::string::npos);
    const std::string no_mc = render_json({sample_row(false)});
    CHECK(no_mc.find("mc_mean") == std::string::npos);
}
