// params.hpp -- coordinate system relating (beta, omega, k) to (rho, gamma1, gamma2, tau).

#pragma once

#include <cmath>
#include <stdexcept>

#include "erlangmax/errors.hpp"

namespace erlangmax {

// Sampling model: Brownian motion with drift -beta observed at epochs whose
// spacings are Erlang(k, k*omega), so the mean spacing is 1/omega.
struct SamplingParams {
    double beta = 1.0;   // drift magnitude, > 0
    double omega = 1.0;  // sampling frequency, > 0
    int k = 1;           // Erlang phase count, >= 1
};

// Derived coordinates:
//   gamma1 = -beta + sqrt(beta^2 + 2 k omega),  gamma2 = beta + sqrt(beta^2 + 2 k omega)
//   rho    = 1 - 2 beta / gamma2, equivalently the root in (0,1) of
//            k (1-rho)^2 omega = 2 beta^2 rho
//   tau    = 4 rho / (1+rho)^2
//   eps    = (1-rho)/2 + (1-rho)^2/8
// one_minus_rho carries 1-rho without cancellation; use it instead of
// 1.0 - rho wherever omega can be large.
struct DerivedParams {
    double rho = 0.0;
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double tau = 0.0;
    double eps = 0.0;
    double one_minus_rho = 1.0;
    // inputs echoed for downstream consumers
    double beta = 0.0;
    double omega = 0.0;
    int k = 0;
};

inline void validate(const SamplingParams& p) {
    if (!(std::isfinite(p.beta) && p.beta > 0.0))
        throw std::invalid_argument("SamplingParams: beta must be finite and positive");
    if (!(std::isfinite(p.omega) && p.omega > 0.0))
        throw std::invalid_argument("SamplingParams: omega must be finite and positive");
    if (p.k < 1)
        throw std::invalid_argument("SamplingParams: k must be >= 1");
}

inline DerivedParams derive(const SamplingParams& p) {
    validate(p);
    const double root = std::sqrt(p.beta * p.beta + 2.0 * p.k * p.omega);
    const double gamma2 = p.beta + root;
    const double gamma1 = 2.0 * p.k * p.omega / gamma2;  // = -beta + root, stable as omega -> 0

    // rho = (2 + c - sqrt(c^2 + 4c)) / 2 with c = 2 beta^2 / (k omega); the
    // minus branch is the unique root in (0,1). Both rho and 1-rho are formed
    // through the rationalized twins 2/denom and (c + sqrt(c^2+4c))/denom, so
    // neither end of the omega range sees a near-equal subtraction.
    const double c = 2.0 * p.beta * p.beta / (p.k * p.omega);
    const double disc = std::sqrt(c * (c + 4.0));
    const double denom = 2.0 + c + disc;
    const double rho = 2.0 / denom;
    const double omr = (c + disc) / denom;

    DerivedParams d;
    d.rho = rho;
    d.gamma1 = gamma1;
    d.gamma2 = gamma2;
    d.tau = 4.0 * rho / ((1.0 + rho) * (1.0 + rho));
    d.eps = 0.5 * omr + 0.125 * omr * omr;
    d.one_minus_rho = omr;
    d.beta = p.beta;
    d.omega = p.omega;
    d.k = p.k;
    return d;
}

// Inverse of derive() in the rho coordinate: omega = 2 beta^2 rho / (k (1-rho)^2).
inline double omega_from_rho(double rho, int k, double beta) {
    if (!(std::isfinite(rho) && rho > 0.0 && rho < 1.0))
        throw std::invalid_argument("omega_from_rho: rho must lie in (0,1)");
    if (k < 1) throw std::invalid_argument("omega_from_rho: k must be >= 1");
    if (!(std::isfinite(beta) && beta > 0.0))
        throw std::invalid_argument("omega_from_rho: beta must be positive");
    const double omr = 1.0 - rho;
    return 2.0 * beta * beta * rho / (k * omr * omr);
}

// Twin of omega_from_rho for callers that track 1-rho directly. Near rho = 1
// the scalar rho cannot resolve omega to full precision; this one can.
inline double omega_from_one_minus_rho(double one_minus_rho, int k, double beta) {
    if (!(std::isfinite(one_minus_rho) && one_minus_rho > 0.0 && one_minus_rho < 1.0))
        throw std::invalid_argument("omega_from_one_minus_rho: argument must lie in (0,1)");
    if (k < 1) throw std::invalid_argument("omega_from_one_minus_rho: k must be >= 1");
    if (!(std::isfinite(beta) && beta > 0.0))
        throw std::invalid_argument("omega_from_one_minus_rho: beta must be positive");
    return 2.0 * beta * beta * (1.0 - one_minus_rho) / (k * one_minus_rho * one_minus_rho);
}

}  // namespace erlangmax
