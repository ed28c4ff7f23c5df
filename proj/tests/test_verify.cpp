#include <doctest.h>

#include "erlangmax/verify.hpp"

using namespace erlangmax::verify;

TEST_CASE("quick verification suite passes clean") {
    VerifyOptions opt;
    opt.quick = true;
    const auto results = run_verification(opt);
    CHECK(results.size() >= 20);
    for (const auto& r : results) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("a perturbed rho trips the suite") {
    VerifyOptions opt;
    opt.quick = true;
    opt.rho_perturb = 1e-3;
    const auto results = run_verification(opt);
    int failed = 0;
    for (const auto& r : results) failed += r.pass ? 0 : 1;
    CHECK(failed >= 1);
}
