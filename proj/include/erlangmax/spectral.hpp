// spectral.hpp -- unit roots and the zeros of P(sigma) = [sigma(1+rho-sigma)]^k - rho^k.

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "erlangmax/params.hpp"

namespace erlangmax {

using cplx = std::complex<double>;

// Root families of the characteristic polynomial. For each unit root u_j,
//   sigma_j^-+ = a -+ sqrt(a^2 - rho u_j),  a = (1+rho)/2,
// with the principal square root (positive real part; the radicand
// ((1-rho)/2)^2 + rho (1-u_j) never touches the branch cut).
//
// sqrt_disc keeps sqrt(a^2 - rho u_j) itself; several downstream formulas
// want it directly:
//   1 - sigma_j^-        = (1-rho)/2 + sqrt_disc[j]   (no cancellation)
//   1 + rho - 2 sigma_j^- = 2 sqrt_disc[j]
//   1 + rho - sigma_j^-   = sigma_plus[j]
// Entries for j and k-j are exact conjugates by construction.
struct SpectralData {
    int k = 0;
    double rho = 0.0;
    double one_minus_rho = 1.0;
    std::vector<cplx> unit_roots;      // u_j = e^(2 pi i j / k)
    std::vector<cplx> one_minus_unit;  // 1 - u_j = 2 sin(pi j/k) (sin - i cos)
    std::vector<cplx> sigma_minus;
    std::vector<cplx> sigma_plus;
    std::vector<cplx> sqrt_disc;

    cplx one_minus_sigma(int j) const {
        return 0.5 * one_minus_rho + sqrt_disc[static_cast<std::size_t>(j)];
    }
};

namespace detail {

// sin/cos of pi j / k, exact at the axis points.
inline void half_angle(int j, int k, double& sn, double& cs) {
    if (2 * j == k) {
        sn = 1.0;
        cs = 0.0;
        return;
    }
    const double t = M_PI * static_cast<double>(j) / static_cast<double>(k);
    sn = std::sin(t);
    cs = std::cos(t);
}

}  // namespace detail

// k-th roots of unity, conjugate-symmetric by construction (u_{k-j} = conj u_j).
inline std::vector<cplx> unit_roots(int k) {
    if (k < 1) throw std::invalid_argument("unit_roots: k must be >= 1");
    std::vector<cplx> u(static_cast<std::size_t>(k));
    u[0] = cplx(1.0, 0.0);
    for (int j = 1; 2 * j <= k; ++j) {
        double sn, cs;
        detail::half_angle(j, k, sn, cs);
        // double angle: u_j = cos(2t) + i sin(2t)
        const cplx uj(1.0 - 2.0 * sn * sn, 2.0 * sn * cs);
        u[static_cast<std::size_t>(j)] = uj;
        if (2 * j != k) u[static_cast<std::size_t>(k - j)] = std::conj(uj);
    }
    return u;
}

inline SpectralData compute_roots(int k, double rho, double one_minus_rho) {
    if (k < 1) throw std::invalid_argument("compute_roots: k must be >= 1");
    if (!(rho > 0.0 && rho < 1.0))
        throw std::invalid_argument("compute_roots: rho must lie in (0,1)");

    SpectralData s;
    s.k = k;
    s.rho = rho;
    s.one_minus_rho = one_minus_rho;
    const auto n = static_cast<std::size_t>(k);
    s.unit_roots.resize(n);
    s.one_minus_unit.resize(n);
    s.sigma_minus.resize(n);
    s.sigma_plus.resize(n);
    s.sqrt_disc.resize(n);

    const double a = 0.5 * (1.0 + rho);
    const double half_omr = 0.5 * one_minus_rho;

    // j = 0: the radicand collapses to ((1-rho)/2)^2, so sigma_0^- = rho,
    // sigma_0^+ = 1 exactly.
    s.unit_roots[0] = cplx(1.0, 0.0);
    s.one_minus_unit[0] = cplx(0.0, 0.0);
    s.sqrt_disc[0] = cplx(half_omr, 0.0);
    s.sigma_minus[0] = cplx(rho, 0.0);
    s.sigma_plus[0] = cplx(1.0, 0.0);

    for (int j = 1; 2 * j <= k; ++j) {
        double sn, cs;
        detail::half_angle(j, k, sn, cs);
        const cplx omu = 2.0 * sn * cplx(sn, -cs);  // 1 - u_j
        const cplx u(1.0 - 2.0 * sn * sn, 2.0 * sn * cs);
        const cplx disc = half_omr * half_omr + rho * omu;  // a^2 - rho u_j
        const cplx root = std::sqrt(disc);
        const auto jj = static_cast<std::size_t>(j);
        s.unit_roots[jj] = u;
        s.one_minus_unit[jj] = omu;
        s.sqrt_disc[jj] = root;
        s.sigma_minus[jj] = a - root;
        s.sigma_plus[jj] = a + root;
        if (2 * j != k) {
            const auto mj = static_cast<std::size_t>(k - j);
            s.unit_roots[mj] = std::conj(u);
            s.one_minus_unit[mj] = std::conj(omu);
            s.sqrt_disc[mj] = std::conj(root);
            s.sigma_minus[mj] = std::conj(s.sigma_minus[jj]);
            s.sigma_plus[mj] = std::conj(s.sigma_plus[jj]);
        }
    }
    return s;
}

inline SpectralData compute_roots(int k, double rho) { return compute_roots(k, rho, 1.0 - rho); }

inline SpectralData compute_roots(const DerivedParams& d) {
    return compute_roots(d.k, d.rho, d.one_minus_rho);
}

// P(sigma) = [sigma(1+rho-sigma)]^k - rho^k, powers by squaring.
inline cplx char_poly(cplx sigma, int k, double rho) {
    if (k < 1) throw std::invalid_argument("char_poly: k must be >= 1");
    auto powi = [](auto base, int e) {
        decltype(base) acc(1.0);
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    };
    return powi(sigma * (1.0 + rho - sigma), k) - powi(cplx(rho, 0.0), k);
}

}  // namespace erlangmax
