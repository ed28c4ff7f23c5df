// exact.hpp -- coefficients c_j, the exact expected maximum, and the tail law
// of the Erlang-sampled maximum.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "erlangmax/errors.hpp"
#include "erlangmax/params.hpp"
#include "erlangmax/spectral.hpp"

namespace erlangmax {

enum class CoeffRepresentation { Direct, OuterZero };

// The k coefficients of the exponential mixture P(M > t) = sum c_j sigma_j
// e^{-gamma2 (1-sigma_j) t}. For the outer-zero representation, g[j] holds
// the exponent g_j = sum_l log(1 - sigma_l / sigma_j^+), which obeys
// Re g_j < 0 and |g_j| < -log(1 - tau^k)/2.
struct CoefficientSet {
    std::vector<cplx> c;
    CoeffRepresentation representation = CoeffRepresentation::OuterZero;
    std::vector<cplx> g;  // populated for OuterZero only
};

inline constexpr int kDirectRepresentationCap = 64;

// c_j = prod_{l != j} (sigma_l - 1) / prod_{l != j} (sigma_l/sigma_j - 1).
// The denominators can become arbitrarily small as k grows, so this
// representation is gated; it serves as a cross-check for the outer-zero one.
inline CoefficientSet coeffs_direct(const SpectralData& sp, int cap = kDirectRepresentationCap) {
    if (sp.k > cap)
        throw RepresentationUnstable("coeffs_direct: k exceeds the conditioning cap");
    const int k = sp.k;
    CoefficientSet out;
    out.representation = CoeffRepresentation::Direct;
    out.c.resize(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        cplx num(1.0, 0.0), den(1.0, 0.0);
        for (int l = 0; l < k; ++l) {
            if (l == j) continue;
            num *= sp.sigma_minus[static_cast<std::size_t>(l)] - 1.0;
            den *= sp.sigma_minus[static_cast<std::size_t>(l)] /
                       sp.sigma_minus[static_cast<std::size_t>(j)] -
                   1.0;
        }
        out.c[static_cast<std::size_t>(j)] = num / den;
    }
    return out;
}

// c_j = (1/k) (1+rho-sigma_j) / ((1-sigma_j)(1+rho-2 sigma_j))
//       * prod_l (1-sigma_l) * prod_l (1 - sigma_l/sigma_j^+),
// evaluated as a single exponential of summed principal logarithms. Every
// factor has positive real part, so the logs never wind. Entries for j and
// k-j are mirrored as exact conjugates.
inline CoefficientSet coeffs_outer(const SpectralData& sp) {
    const int k = sp.k;
    CoefficientSet out;
    out.representation = CoeffRepresentation::OuterZero;
    out.c.resize(static_cast<std::size_t>(k));
    out.g.resize(static_cast<std::size_t>(k));

    // log prod_l (1 - sigma_l): real, since the factors pair conjugately.
    double log_prod = 0.0;
    for (int l = 0; l < k; ++l) log_prod += std::log(std::abs(sp.one_minus_sigma(l)));

    const double log_k = std::log(static_cast<double>(k));
    for (int j = 0; 2 * j <= k; ++j) {
        const auto jj = static_cast<std::size_t>(j);
        cplx gj(0.0, 0.0);
        for (int l = 0; l < k; ++l) {
            // 1 - sigma_l/sigma_j^+ = (sqrt_disc_j + sqrt_disc_l) / sigma_j^+
            gj += std::log((sp.sqrt_disc[jj] + sp.sqrt_disc[static_cast<std::size_t>(l)]) /
                           sp.sigma_plus[jj]);
        }
        const bool self_conjugate = (j == 0 || 2 * j == k);
        if (self_conjugate) gj = cplx(gj.real(), 0.0);  // provably real

        const cplx log_c = std::log(sp.sigma_plus[jj]) - std::log(sp.one_minus_sigma(j)) -
                           std::log(2.0 * sp.sqrt_disc[jj]) - log_k + log_prod + gj;
        cplx cj = std::exp(log_c);
        if (self_conjugate) cj = cplx(cj.real(), 0.0);

        out.g[jj] = gj;
        out.c[jj] = cj;
        if (j >= 1 && 2 * j != k) {
            out.g[static_cast<std::size_t>(k - j)] = std::conj(gj);
            out.c[static_cast<std::size_t>(k - j)] = std::conj(cj);
        }
    }
    return out;
}

// Everything needed to evaluate the law of the sampled maximum.
struct MaxLaw {
    SamplingParams params;
    DerivedParams derived;
    SpectralData spectral;
    CoefficientSet coeffs;
};

inline MaxLaw make_max_law(const SamplingParams& p) {
    MaxLaw law;
    law.params = p;
    law.derived = derive(p);
    law.spectral = compute_roots(law.derived);
    law.coeffs = coeffs_outer(law.spectral);
    return law;
}

namespace detail {

inline void check_real(const cplx& total, const char* where) {
    if (!(std::abs(total.imag()) <= 1e-10 * std::max(1e-300, std::abs(total.real()))))
        throw std::runtime_error(std::string(where) + ": imaginary residue above tolerance");
}

}  // namespace detail

// E M = sum_j c_j sigma_j / (gamma2 (1 - sigma_j)). The sum is symmetrized by
// pairing j with k-j; the j = 0 denominator gamma2 (1-rho) equals 2 beta
// exactly, which sidesteps the tiny 1-sigma_0 at large omega.
inline double expected_max(const MaxLaw& law) {
    const auto& sp = law.spectral;
    const auto& c = law.coeffs.c;
    const int k = sp.k;
    cplx total = c[0] * sp.rho / (2.0 * law.params.beta);
    for (int j = 1; 2 * j <= k; ++j) {
        const auto jj = static_cast<std::size_t>(j);
        const cplx term =
            c[jj] * sp.sigma_minus[jj] / (law.derived.gamma2 * sp.one_minus_sigma(j));
        total += (2 * j == k) ? term : term + std::conj(term);
    }
    detail::check_real(total, "expected_max");
    const double value = total.real();
    if (!(value > 0.0 && value < 0.5 / law.params.beta))
        throw std::runtime_error("expected_max: value escaped (0, 1/(2 beta))");
    return value;
}

inline double expected_max(const SamplingParams& p) { return expected_max(make_max_law(p)); }

// Closed form for k = 1: E M = (gamma1/gamma2) / (gamma2 - gamma1) = rho/(2 beta).
inline double expected_max_k1(double beta, double omega) {
    const DerivedParams d = derive(SamplingParams{beta, omega, 1});
    return d.gamma1 / (d.gamma2 * 2.0 * beta);
}

// P(M > t) = sum_j c_j sigma_j e^{-gamma2 (1-sigma_j) t}.
inline double tail_prob(double t, const MaxLaw& law) {
    if (!(t >= 0.0)) throw std::invalid_argument("tail_prob: t must be >= 0");
    const auto& sp = law.spectral;
    const auto& c = law.coeffs.c;
    const int k = sp.k;
    // j = 0 decay rate gamma2 (1 - rho) = 2 beta exactly
    cplx total = c[0] * sp.rho * std::exp(-2.0 * law.params.beta * t);
    for (int j = 1; 2 * j <= k; ++j) {
        const auto jj = static_cast<std::size_t>(j);
        const cplx term = c[jj] * sp.sigma_minus[jj] *
                          std::exp(-law.derived.gamma2 * sp.one_minus_sigma(j) * t);
        total += (2 * j == k) ? term : term + std::conj(term);
    }
    detail::check_real(total, "tail_prob");
    return total.real();
}

}  // namespace erlangmax
