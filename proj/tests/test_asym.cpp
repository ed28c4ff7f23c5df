#include <doctest.h>

#include <cmath>

#include "erlangmax/asym.hpp"

using namespace erlangmax;

TEST_CASE("s_k_exact: empty sum and integer identities") {
    CHECK(s_k_exact(1, 0.5) == 0.0);
    CHECK(s_k_exact(1, -3.0) == 0.0);
    CHECK(s_k_exact(7, 1.0) == doctest::Approx(3.0).epsilon(1e-14));
    for (int k : {2, 3, 10, 129, 2048})
        CHECK(std::abs(s_k_exact(k, 1.0) - 0.5 * (k - 1)) <= 1e-10 * std::max(1.0, 0.5 * k));
}

TEST_CASE("s_k_asym: integer s is exact, including the skipped pole term") {
    for (int k : {2, 5, 16, 64, 512, 2048})
        for (double s : {1.0, 2.0}) {
            const auto ze = s_k_asym(k, s, 1);
            CHECK(std::abs(s_k_exact(k, s) - ze.value) <= 1e-10 * std::max(1.0, std::abs(ze.value)));
            CHECK(ze.leading == 0.5 * k);
            double acc = ze.leading;
            for (double t : ze.terms) acc += t;
            CHECK(acc == ze.value);
        }
}

TEST_CASE("s_k_asym: expansion metadata and validity region") {
    const auto ze = s_k_asym(100, 0.5, 2);
    CHECK(ze.remainder_order == doctest::Approx(0.5 - 5.0));
    CHECK(ze.leading == 100.0);
    CHECK(ze.terms.size() == 5);
    CHECK_THROWS_AS(s_k_asym(10, -2.0, 1), DomainError);
    CHECK_THROWS_AS(s_k_asym(0, 0.5, 1), std::invalid_argument);
    CHECK(default_expansion_p(0.5) == 2);
    CHECK(s_k_asym(64, 0.5).p == 2);
    CHECK(default_expansion_p(-6.0) >= 4);
}

TEST_CASE("s_k_asym approximates s_k_exact at the stated order") {
    // s = 1/2, p = 2: |err| <= C k^{-9/2} with a modest constant
    for (int k : {64, 100, 256}) {
        const double err = std::abs(s_k_exact(k, 0.5) - s_k_asym(k, 0.5, 2).value);
        CHECK(err <= 10.0 * std::pow(static_cast<double>(k), 0.5 - 5.0));
    }
}

TEST_CASE("doubling ratios match the remainder order") {
    struct Probe {
        double s;
        int p;
        std::vector<int> starts;
    };
    const std::vector<Probe> probes = {
        {0.5, 1, {64, 128, 256}},  {1.5, 1, {64, 128, 256}},  {-0.5, 1, {64, 128, 256}},
        {0.5, 2, {16, 32, 64}},    {1.5, 2, {16, 32, 64}},    {-0.5, 2, {16, 32}},
    };
    for (const auto& pr : probes) {
        const double target = std::pow(2.0, 2.0 * pr.p + 1.0 - pr.s);
        for (int k : pr.starts) {
            const double e1 = std::abs(s_k_exact(k, pr.s) - s_k_asym(k, pr.s, pr.p).value);
            const double e2 = std::abs(s_k_exact(2 * k, pr.s) - s_k_asym(2 * k, pr.s, pr.p).value);
            const double ratio = e1 / e2;
            CHECK(ratio >= 0.5 * target);
            CHECK(ratio <= 2.0 * target);
        }
    }
}

TEST_CASE("discretization constant: endpoints and k-expansion") {
    const auto d1 = discretization_constant(1);
    CHECK(d1.value == 1.0 / std::sqrt(2.0));
    const auto d = discretization_constant(4096);
    CHECK(std::abs(d.value - 0.5826) <= 1e-3);
    CHECK(d.limit == doctest::Approx(0.58259715793901076).epsilon(1e-12));
    CHECK(d.first_order_coeff == doctest::Approx(0.13027337235863461).epsilon(1e-10));
    // |D_k - limit| k converges to the first-order coefficient
    const auto d1024 = discretization_constant(1024);
    CHECK(std::abs((d1024.value - d1024.limit) * 1024.0) ==
          doctest::Approx(std::abs(d1024.first_order_coeff)).epsilon(0.05));
    for (int k = 1; k <= (1 << 16); k *= 4) {
        const double v = discretization_constant(k).value;
        CHECK(v > 0.5);
        CHECK(v < 0.75);
    }
}

TEST_CASE("large-omega expansion of the expected maximum") {
    // k = 1 collapses to 1/(2 beta) - 1/sqrt(2 omega)
    for (double omega : {10.0, 1e3, 1e6})
        CHECK(expected_max_asym(SamplingParams{1.0, omega, 1}) ==
              doctest::Approx(0.5 - 1.0 / std::sqrt(2.0 * omega)).epsilon(1e-13));
    CHECK(expected_max_asym(SamplingParams{2.0, 1e12, 8}) == doctest::Approx(0.25).epsilon(1e-5));
    // remainder |exact - asym| omega stays bounded as omega grows
    double prev = 1e300;
    for (double omega : {1e2, 1e3, 1e4}) {
        const SamplingParams p{1.0, omega, 4};
        const double r = std::abs(expected_max(p) - expected_max_asym(p)) * omega;
        CHECK(r < 1.0);
        CHECK(r < prev * 1.5);
        prev = r;
    }
}

TEST_CASE("Gaussian random walk series: convergence and guard") {
    const double base = gaussian_rw_expansion(1.0, 100.0, 30);
    CHECK(std::abs(gaussian_rw_expansion(1.0, 100.0, 10) - base) < 1e-15);
    // large omega: sampling error constant -zeta(1/2)/sqrt(2 pi) = 0.5826...
    const double omega = 1e8;
    const double err = 0.5 - gaussian_rw_expansion(1.0, omega, 30);
    CHECK(err * std::sqrt(omega) == doctest::Approx(0.58259715793901076).epsilon(1e-3));
    CHECK_THROWS_AS(gaussian_rw_expansion(1.0, 0.2, 30), ConvergenceGuard);
    CHECK_THROWS_AS(gaussian_rw_expansion(1.0, 100.0, 31), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_rw_expansion(-1.0, 100.0, 30), std::invalid_argument);
}

TEST_CASE("exact values approach the Gaussian series as k grows") {
    const double g = gaussian_rw_expansion(1.0, 10.0, 30);
    const double d16 = std::abs(expected_max(SamplingParams{1.0, 10.0, 16}) - g);
    const double d4096 = std::abs(expected_max(SamplingParams{1.0, 10.0, 4096}) - g);
    CHECK(d4096 < d16);
}

TEST_CASE("small-omega bound and the direct residual sum") {
    // single-term algebra at k = 1
    for (double rho : {0.3, 0.7}) {
        const double omega = omega_from_rho(rho, 1, 1.0);
        const auto d = derive(SamplingParams{1.0, omega, 1});
        const auto sp = compute_roots(d);
        CHECK(r_k_direct(sp, d) ==
              doctest::Approx(rho / (2.0 * (1.0 - rho) * (1.0 - rho))).epsilon(1e-12));
    }
    // tau^k <= exp(-k (1-rho)^2/(1+rho)^2)
    for (double rho : {0.8, 0.9})
        for (int k : {50, 400}) {
            const auto d = derive(SamplingParams{1.0, omega_from_rho(rho, k, 1.0), k});
            const double q = d.one_minus_rho / (1.0 + d.rho);
            const double tau_k = std::exp(k * std::log1p(-q * q));
            CHECK(tau_k <= std::exp(-static_cast<double>(k) * q * q) * (1.0 + 1e-12));
        }
    // 0 <= R_k <= bound, and R_k decreases along rho = 0.9
    double prev = 1e300;
    for (int k : {200, 400, 800}) {
        const SamplingParams p{1.0, omega_from_rho(0.9, k, 1.0), k};
        const auto d = derive(p);
        const auto sp = compute_roots(d);
        const double rk = r_k_direct(sp, d);
        const auto b = small_omega_bound(p);
        CHECK(rk >= 0.0);
        CHECK(rk <= b.rk_bound * (1.0 + 1e-10));
        CHECK(rk < prev);
        prev = rk;
    }
}

TEST_CASE("inner-root approximation: residual envelope and limits") {
    // second-order residual: (1-rho)^2 (1/sqrt(1-u_j) - 1)/8, so the fitted
    // constant against that envelope stays near 1/8
    for (auto [k, rho] : std::vector<std::pair<int, double>>{{64, 0.99}, {256, 0.995}}) {
        const auto sp = compute_roots(k, rho);
        const double omr = 1.0 - rho;
        double c_fit = 0.0;
        double res_first = 0.0, res_mid = 0.0;
        for (int j = 1; j < k; ++j) {
            const auto jj = static_cast<std::size_t>(j);
            const double res = std::abs(one_minus_sigma_approx(j, k, rho) - sp.one_minus_sigma(j));
            const cplx root = std::sqrt(sp.one_minus_unit[jj]);
            c_fit = std::max(c_fit, res / (omr * omr * std::abs(1.0 / root - 1.0)));
            if (j == 1) res_first = res;
            if (j == k / 2) res_mid = res;
        }
        CHECK(c_fit <= 0.2);
        CHECK(res_mid <= res_first);
    }
    // eps -> 0 as rho -> 1: the approximation collapses to sqrt(1 - u_j)
    {
        const int k = 16, j = 3;
        const auto sp = compute_roots(k, 0.5);  // only for 1 - u_j
        const cplx root = std::sqrt(sp.one_minus_unit[static_cast<std::size_t>(j)]);
        CHECK(std::abs(one_minus_sigma_approx(j, k, 1.0 - 1e-9) - root) < 1e-8);
    }
    CHECK_THROWS_AS(one_minus_sigma_approx(1, 16, 0.5), ConditionViolated);
    CHECK_THROWS_AS(one_minus_sigma_approx(1, 1 << 20, 0.9), ConditionViolated);
    CHECK_THROWS_AS(one_minus_sigma_approx(0, 16, 0.99), std::invalid_argument);
}

TEST_CASE("auxiliary unit-root sums") {
    for (int k : {4, 64, 1024, 16384}) {
        // sum (1 - 1/sqrt(1-u_j)) = (k-1) - S_k(1/2) grows like sqrt(k)
        const double ratio = (k - 1.0 - s_k_exact(k, 0.5)) / std::sqrt(static_cast<double>(k));
        CHECK(ratio > 0.0);
        CHECK(ratio <= 2.0);
        // sum 1/(1-u_j) = (k-1)/2
        CHECK(std::abs(s_k_exact(k, 1.0) - 0.5 * (k - 1)) <= 1e-10 * k);
    }
}
