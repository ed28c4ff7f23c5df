// specfun.hpp -- self-contained special functions: real-argument Riemann zeta,
// gamma, and the power-series coefficients of (z/(e^z-1))^s (generalized
// Bernoulli numbers over factorials).

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "erlangmax/errors.hpp"

namespace erlangmax::specfun {

// sin(pi x) with exact zeros at integer x. IEEE remainder keeps the argument
// reduction exact, so no 1e-16 residue leaks out of the trivial zeros.
inline double sin_pi(double x) {
    double r = std::remainder(x, 2.0);  // r in [-1, 1]
    if (r > 0.5)
        r = 1.0 - r;
    else if (r < -0.5)
        r = -1.0 - r;
    return std::sin(M_PI * r);
}

// cos(x pi / 2) with exact zeros at odd integer x.
inline double cos_pi_half(double x) { return sin_pi(0.5 * (x + 1.0)); }

namespace detail {

// Lanczos rational approximation, g = 6.02468..., N = 13 (the double-precision
// set of Godfrey/Pugh used throughout production math libraries).
inline double lanczos_sum(double z) {
    static const double num[13] = {
        23531376880.410759688572007674451636754734846804940,
        42919803642.649098768957899047001988850926355848959,
        35711959237.355668049440185451547166705960488635843,
        17921034426.037209699919755754458931112671403265390,
        6039542586.3520280050642916443072979210699388420708,
        1439720407.3117216736632230727949123939715485786772,
        248874557.86205415651146038641322942321632125127801,
        31426415.585400194380614231628318205362874684987640,
        2876370.6289353724412254090516208496135991145378768,
        186056.26539522349504029498971604569928220784236328,
        8071.6720023658162106380029022722506138218516325024,
        210.82427775157934587250973392071336271166969580291,
        2.5066282746310002701649081771338373386264310793408};
    static const double den[13] = {0.0,       39916800.0, 120543840.0, 150917976.0,
                                   105258076.0, 45995730.0, 13339535.0,  2637558.0,
                                   357423.0,  32670.0,    1925.0,      66.0,
                                   1.0};
    double pn = num[12];
    double pd = den[12];
    for (int i = 11; i >= 0; --i) {
        pn = pn * z + num[i];
        pd = pd * z + den[i];
    }
    return pn / pd;
}

constexpr double kLanczosG = 6.024680040776729583740234375;

}  // namespace detail

// Gamma function for real x, poles at non-positive integers.
inline double gamma_fn(double x) {
    if (x >= 0.5) {
        const double zgh = x + detail::kLanczosG - 0.5;
        return detail::lanczos_sum(x) * std::pow(zgh, x - 0.5) / std::exp(zgh);
    }
    // reflection; sin_pi is exactly zero at the poles, so they divide to inf
    const double s = sin_pi(x);
    if (s == 0.0) throw DomainError("gamma_fn: pole at non-positive integer");
    return M_PI / (s * gamma_fn(1.0 - x));
}

namespace detail {

// Borwein (1991) accelerated alternating series for eta/zeta, fixed depth.
// The d_k do not depend on s; error ~ (3+sqrt(8))^-n ~ 1e-43 at n = 56.
inline const std::array<double, 57>& borwein_d() {
    static const std::array<double, 57> d = [] {
        constexpr int n = 56;
        std::array<double, 57> out{};
        double term = 1.0 / n;  // (n+i-1)! 4^i / ((n-i)! (2i)!) at i = 0
        double acc = term;
        out[0] = n * acc;
        for (int i = 1; i <= n; ++i) {
            term *= 4.0 * (n + i - 1.0) * (n - i + 1.0) / ((2.0 * i) * (2.0 * i - 1.0));
            acc += term;
            out[static_cast<std::size_t>(i)] = n * acc;
        }
        return out;
    }();
    return d;
}

inline double zeta_borwein(double s) {
    const auto& d = borwein_d();
    constexpr int n = 56;
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 0; k < n; ++k) {
        sum += sign * (d[static_cast<std::size_t>(k)] - d[n]) / std::pow(k + 1.0, s);
        sign = -sign;
    }
    const double one_minus_two_pow = -std::expm1((1.0 - s) * M_LN2);  // 1 - 2^(1-s)
    return -sum / (d[n] * one_minus_two_pow);
}

}  // namespace detail

// Riemann zeta for real s != 1 (documented domain |s| <= 60). Values for
// s < 1/2 come from the functional equation
//   zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s).
inline double zeta(double s) {
    if (!std::isfinite(s)) throw std::invalid_argument("zeta: non-finite argument");
    if (s == 1.0) throw PoleAtOne("zeta: pole at s = 1");
    if (s == 0.0) return -0.5;
    if (s >= 0.5) return detail::zeta_borwein(s);
    const double sp = sin_pi(0.5 * s);
    if (sp == 0.0) return 0.0;  // trivial zeros at s = -2, -4, ...
    return std::pow(2.0, s) * std::pow(M_PI, s - 1.0) * sp * gamma_fn(1.0 - s) *
           detail::zeta_borwein(1.0 - s);
}

namespace detail {

// b_n = B_n / n! : coefficients of z/(e^z - 1). From z = (e^z - 1) f(z),
// sum_{j<=n} b_j / (n+1-j)! = [n == 0].
inline const std::array<double, 67>& bernoulli_over_factorial() {
    static const std::array<double, 67> table = [] {
        std::array<double, 69> inv_fact{};
        inv_fact[0] = 1.0;
        for (int n = 1; n <= 68; ++n)
            inv_fact[static_cast<std::size_t>(n)] = inv_fact[static_cast<std::size_t>(n - 1)] / n;
        std::array<double, 67> b{};
        b[0] = 1.0;
        for (int n = 1; n <= 66; ++n) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j)
                acc += b[static_cast<std::size_t>(j)] * inv_fact[static_cast<std::size_t>(n + 1 - j)];
            b[static_cast<std::size_t>(n)] = -acc;
        }
        return b;
    }();
    return table;
}

}  // namespace detail

// Power series of (z/(e^z - 1))^s; coeffs[l] = B_l^(s)(0) / l!.
struct PowerSeries {
    std::vector<double> coeffs;
};

// From g = f^s and g' f = s f' g: the standard power-of-a-power-series
// recurrence, O(L^2) and benign for L <= 64.
inline PowerSeries gen_bernoulli(double s, int L) {
    if (L < 0 || L > 64) throw std::invalid_argument("gen_bernoulli: need 0 <= L <= 64");
    const auto& b = detail::bernoulli_over_factorial();
    PowerSeries ps;
    ps.coeffs.assign(static_cast<std::size_t>(L) + 1, 0.0);
    ps.coeffs[0] = 1.0;
    for (int n = 0; n < L; ++n) {
        double acc = 0.0;
        for (int i = 0; i <= n; ++i)
            acc += (s * (n + 1 - i) - i) * b[static_cast<std::size_t>(n + 1 - i)] *
                   ps.coeffs[static_cast<std::size_t>(i)];
        ps.coeffs[static_cast<std::size_t>(n + 1)] = acc / (n + 1);
    }
    return ps;
}

// beta_l(s) = (2 pi)^(l-s) (B_l^(s)(0)/l!) cos((l+s) pi/2).
// For s within 1e-8 of a positive integer K and l = K-1 the linearized value
// (s-K)(-1/4) is returned; the factor cos((l+s) pi/2) vanishes at s = K and
// the slope of beta_{K-1} there is exactly -1/4.
inline double beta_l(double s, int l) {
    if (l < 0 || l > 64) throw std::invalid_argument("beta_l: need 0 <= l <= 64");
    const double K = std::round(s);
    if (K >= 1.0 && l == static_cast<int>(K) - 1 && std::abs(s - K) < 1e-8)
        return (s - K) * (-0.25);
    const double a_l = gen_bernoulli(s, l).coeffs[static_cast<std::size_t>(l)];
    return std::pow(2.0 * M_PI, l - s) * a_l * cos_pi_half(l + s);
}

// lim_{s->K} beta_{K-1}(s)/(s-K) = -1/4 for every positive integer K.
inline double beta_l_limit_slope(int K) {
    if (K < 1) throw std::invalid_argument("beta_l_limit_slope: K must be >= 1");
    return -0.25;
}

}  // namespace erlangmax::specfun
