// asym.hpp -- asymptotic machinery: the unit-root power sum S_k(s) and its
// zeta expansion, the discretization constant D_k, the large-omega and
// small-omega expansions of the expected maximum, and the appendix
// approximation of 1 - sigma_j.

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "erlangmax/errors.hpp"
#include "erlangmax/exact.hpp"
#include "erlangmax/params.hpp"
#include "erlangmax/specfun.hpp"
#include "erlangmax/spectral.hpp"

namespace erlangmax {

// S_k(s) = sum_{j=1}^{k-1} (1 - u_j)^{-s}, evaluated through the real form
// (2 sin(pi j/k))^{-s} cos(s (pi/2 - pi j/k)) with compensated summation and
// conjugate pairing. S_1(s) = 0 (empty sum).
inline double s_k_exact(int k, double s) {
    if (k < 1) throw std::invalid_argument("s_k_exact: k must be >= 1");
    double sum = 0.0, comp = 0.0;
    auto add = [&](double x) {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    };
    for (int j = 1; 2 * j < k; ++j) {
        const double t = M_PI * static_cast<double>(j) / static_cast<double>(k);
        const double term = std::pow(2.0 * std::sin(t), -s) * std::cos(s * (0.5 * M_PI - t));
        add(2.0 * term);
    }
    if (k % 2 == 0) add(std::pow(2.0, -s));
    return sum;
}

// An evaluated truncation of the zeta expansion of S_k(s) together with its
// remainder-order metadata.
struct ZetaExpansion {
    double s = 0.0;
    int p = 0;
    int k = 0;
    double leading = 0.0;             // k (non-integer s) or k/2 (positive integer s)
    std::vector<double> terms;        // 2 beta_l(s) zeta(s-l) k^{s-l}
    double value = 0.0;               // leading + sum of terms
    double remainder_order = 0.0;     // exponent s - 2p - 1
};

// Smallest p with s - 2p - 1 <= -3, bumped when needed to keep s + 2p > 0.
inline int default_expansion_p(double s) {
    int p = static_cast<int>(std::ceil(0.5 * (s + 2.0)));
    if (p < 0) p = 0;
    while (s + 2.0 * p <= 0.0) ++p;
    return p;
}

// Truncated expansion of S_k(s):
//   s not a positive integer:  k   + sum_{l=0}^{2p} 2 beta_l(s) zeta(s-l) k^{s-l}
//   s = 1, 2, ...           :  k/2 + sum_{r=0}^{[s/2]} 2 beta_{s-2r}(s) zeta(2r) k^{2r}
// The integer-s sum terminates (beta_l(s) = 0 for odd l+s, zeta at negative
// even integers = 0) and the truncated form holds exactly; the term l = s-1
// is skipped, which is where zeta would hit its pole.
inline ZetaExpansion s_k_asym(int k, double s, int p) {
    if (k < 1) throw std::invalid_argument("s_k_asym: k must be >= 1");
    if (p < 0) throw std::invalid_argument("s_k_asym: p must be >= 0");
    if (!(s + 2.0 * p > 0.0)) throw DomainError("s_k_asym: requires s + 2p > 0");

    ZetaExpansion ze;
    ze.s = s;
    ze.p = p;
    ze.k = k;
    ze.remainder_order = s - 2.0 * p - 1.0;
    const double kd = static_cast<double>(k);
    const bool positive_integer_s = (s >= 1.0) && (s == std::floor(s));
    if (positive_integer_s) {
        const int si = static_cast<int>(s);
        ze.leading = 0.5 * kd;
        for (int r = 0; 2 * r <= si; ++r) {
            const int l = si - 2 * r;
            ze.terms.push_back(2.0 * specfun::beta_l(s, l) * specfun::zeta(2.0 * r) *
                               std::pow(kd, 2.0 * r));
        }
    } else {
        ze.leading = kd;
        for (int l = 0; l <= 2 * p; ++l)
            ze.terms.push_back(2.0 * specfun::beta_l(s, l) * specfun::zeta(s - l) *
                               std::pow(kd, s - l));
    }
    double acc = ze.leading;
    for (double t : ze.terms) acc += t;
    ze.value = acc;
    return ze;
}

inline ZetaExpansion s_k_asym(int k, double s) { return s_k_asym(k, s, default_expansion_p(s)); }

// D_k = (k - S_k(1/2)) / sqrt(2k). Interpolates between 1/sqrt(2) at k = 1
// (exponential sampling) and -zeta(1/2)/sqrt(2 pi) ~ 0.5826 as k -> infinity
// (deterministic sampling); the 1/k coefficient is -sqrt(pi) zeta(-1/2)/(2 sqrt(2)).
struct DiscretizationConstant {
    int k = 0;
    double value = 0.0;
    double limit = 0.0;
    double first_order_coeff = 0.0;
};

inline DiscretizationConstant discretization_constant(int k) {
    if (k < 1) throw std::invalid_argument("discretization_constant: k must be >= 1");
    DiscretizationConstant d;
    d.k = k;
    d.value = (k - s_k_exact(k, 0.5)) / std::sqrt(2.0 * k);
    d.limit = -specfun::zeta(0.5) / std::sqrt(2.0 * M_PI);
    d.first_order_coeff = -std::sqrt(M_PI) * specfun::zeta(-0.5) / (2.0 * std::sqrt(2.0));
    return d;
}

// Large-omega expansion E M = 1/(2 beta) - D_k / sqrt(omega) + O(1/omega),
// uniform in k.
inline double expected_max_asym(const SamplingParams& p) {
    validate(p);
    return 0.5 / p.beta - discretization_constant(p.k).value / std::sqrt(p.omega);
}

// Expected maximum of the Gaussian random walk (deterministic sampling):
//   1/(2 beta) + zeta(1/2)/sqrt(2 pi omega) + beta/(4 omega)
//   + beta^2/(omega sqrt(2 pi omega)) sum_r zeta(-1/2-r)/(r! (2r+1)(2r+2)) (-beta^2/(2 omega))^r,
// valid for omega > beta/(2 sqrt(pi)).
inline double gaussian_rw_expansion(double beta, double omega, int terms = 30) {
    if (!(std::isfinite(beta) && beta > 0.0 && std::isfinite(omega) && omega > 0.0))
        throw std::invalid_argument("gaussian_rw_expansion: beta, omega must be positive");
    if (terms < 1 || terms > 30)
        throw std::invalid_argument("gaussian_rw_expansion: terms must lie in [1, 30]");
    if (!(omega > beta / (2.0 * std::sqrt(M_PI))))
        throw ConvergenceGuard("gaussian_rw_expansion: requires omega > beta/(2 sqrt(pi))");
    double value = 0.5 / beta + specfun::zeta(0.5) / std::sqrt(2.0 * M_PI * omega) +
                   beta / (4.0 * omega);
    const double pref = beta * beta / (omega * std::sqrt(2.0 * M_PI * omega));
    const double x = -beta * beta / (2.0 * omega);
    double xp = 1.0;       // x^r
    double rfact = 1.0;    // r!
    for (int r = 0; r < terms; ++r) {
        if (r > 0) {
            xp *= x;
            rfact *= r;
        }
        const double term =
            pref * specfun::zeta(-0.5 - r) / (rfact * (2.0 * r + 1.0) * (2.0 * r + 2.0)) * xp;
        value += term;
        if (std::abs(term) < 1e-16) break;
    }
    return value;
}

// Small-omega regime: the bound on R_k,
//   0 <= R_k <= (1+rho)/(2 beta (1-rho)) (pi (k - 3/4))^{-1/2} tau^k/(1 - tau^k),
// and the order envelope tau^k (-ln tau^k)^{1/2} for E M itself.
struct SmallOmegaBound {
    double rk_bound = 0.0;
    double order_estimate = 0.0;
};

inline SmallOmegaBound small_omega_bound(const SamplingParams& p) {
    const DerivedParams d = derive(p);
    const double q = d.one_minus_rho / (1.0 + d.rho);
    const double log_tau_k = p.k * std::log1p(-q * q);
    const double tau_k = std::exp(log_tau_k);
    const double one_minus_tau_k = -std::expm1(log_tau_k);
    SmallOmegaBound b;
    b.rk_bound = (1.0 + d.rho) / (2.0 * p.beta * d.one_minus_rho) /
                 std::sqrt(M_PI * (p.k - 0.75)) * (tau_k / one_minus_tau_k);
    b.order_estimate = (tau_k > 0.0) ? tau_k * std::sqrt(-log_tau_k) : 0.0;
    return b;
}

// R_k = (1-rho)/(2 beta k) sum_j (1+rho-sigma_j) sigma_j / ((1-sigma_j)^2 (1+rho-2 sigma_j)),
// symmetrized over conjugate pairs.
inline double r_k_direct(const SpectralData& sp, const DerivedParams& d) {
    const int k = sp.k;
    cplx acc(0.0, 0.0);
    for (int j = 0; 2 * j <= k; ++j) {
        const auto jj = static_cast<std::size_t>(j);
        const cplx oms = sp.one_minus_sigma(j);
        const cplx term = sp.sigma_plus[jj] * sp.sigma_minus[jj] /
                          (oms * oms * 2.0 * sp.sqrt_disc[jj]);
        acc += (j == 0 || 2 * j == k) ? term : term + std::conj(term);
    }
    detail::check_real(acc, "r_k_direct");
    return d.one_minus_rho / (2.0 * d.beta * k) * acc.real();
}

// Appendix approximation, valid when 1-rho < 1/3 and (1-rho)^2 sqrt(k)/8 < 1/3:
//   1 - sigma_j ~ sqrt(1-u_j) (1 - eps (1 - 1/sqrt(1-u_j))),
// eps = (1-rho)/2 + (1-rho)^2/8, with residual O((1-rho)^3 / sqrt(1-u_j)).
inline cplx one_minus_sigma_approx(int j, int k, double rho) {
    if (k < 1 || j < 1 || j > k - 1)
        throw std::invalid_argument("one_minus_sigma_approx: need 1 <= j <= k-1");
    const double omr = 1.0 - rho;
    if (!(omr < 1.0 / 3.0 && 0.125 * omr * omr * std::sqrt(static_cast<double>(k)) < 1.0 / 3.0))
        throw ConditionViolated("one_minus_sigma_approx: smallness conditions fail");
    double sn, cs;
    detail::half_angle(j, k, sn, cs);
    const cplx root_omu = std::sqrt(2.0 * sn * cplx(sn, -cs));  // sqrt(1 - u_j)
    const double eps = 0.5 * omr + 0.125 * omr * omr;
    return root_omu * (1.0 - eps * (1.0 - 1.0 / root_omu));
}

}  // namespace erlangmax
