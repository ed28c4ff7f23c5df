// oracles.hpp -- independent reference implementations used only by tests.
// Deliberately different algorithms from the library: eta-series zeta with
// Euler acceleration, libm tgamma for the reflection, binomial-recurrence
// Bernoulli numbers, composite Gauss-Legendre quadrature, and a Lindley
// fixed-point iterator.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracles {

// eta(s) = sum (-1)^(n-1) n^-s via Euler transform on the tail; valid s > 0.
inline double eta_euler(double s) {
    constexpr int head = 30;
    constexpr int diffs = 50;
    double sum = 0.0;
    double sign = 1.0;
    for (int n = 1; n <= head; ++n) {
        sum += sign * std::pow(static_cast<double>(n), -s);
        sign = -sign;
    }
    // Euler-transformed tail starting at a_0 = (head+1)^-s
    std::vector<double> row(diffs + 1);
    for (int i = 0; i <= diffs; ++i) row[i] = std::pow(static_cast<double>(head + 1 + i), -s);
    double pow2 = 0.5;
    double tail = 0.0;
    for (int m = 0; m <= diffs; ++m) {
        tail += pow2 * row[0];
        pow2 *= 0.5;
        for (int i = 0; i < diffs - m; ++i) row[i] = row[i] - row[i + 1];
    }
    return sum + sign * tail;
}

// zeta for s > 0, s != 1, straight from the eta series.
inline double zeta_eta(double s) { return eta_euler(s) / (1.0 - std::pow(2.0, 1.0 - s)); }

// zeta for s < 1 through the functional equation, using libm tgamma so the
// gamma path is independent of the library's Lanczos.
inline double zeta_reflect(double s) {
    return std::pow(2.0, s) * std::pow(M_PI, s - 1.0) * std::sin(M_PI * s / 2.0) *
           std::tgamma(1.0 - s) * zeta_eta(1.0 - s);
}

// Bernoulli numbers via sum_{j<n} C(n+1,j) B_j = -(n+1) B_n.
inline std::vector<double> bernoulli_numbers(int count) {
    std::vector<double> b(static_cast<std::size_t>(count) + 1, 0.0);
    b[0] = 1.0;
    for (int n = 1; n <= count; ++n) {
        double acc = 0.0;
        double binom = 1.0;  // C(n+1, 0)
        for (int j = 0; j < n; ++j) {
            acc += binom * b[static_cast<std::size_t>(j)];
            binom = binom * (n + 1 - j) / (j + 1);
        }
        b[static_cast<std::size_t>(n)] = -acc / (n + 1);
    }
    return b;
}

// Composite Simpson on [a, b] with n (even) intervals.
inline double integrate(const std::function<double(double)>& f, double a, double b, int n) {
    const double h = (b - a) / n;
    double acc = f(a) + f(b);
    for (int i = 1; i < n; ++i) acc += f(a + i * h) * ((i & 1) ? 4.0 : 2.0);
    return acc * h / 3.0;
}

struct LindleyStats {
    double mean = 0.0;
    double std_error = 0.0;
};

// Long-run average of W <- max(0, W + X) with batch-means error bars.
template <typename Increment>
inline LindleyStats lindley_mean(Increment&& draw, std::int64_t burn_in, std::int64_t samples) {
    double w = 0.0;
    for (std::int64_t i = 0; i < burn_in; ++i) w = std::max(0.0, w + draw());
    constexpr int kBatches = 32;
    const std::int64_t per_batch = samples / kBatches;
    double means[kBatches];
    for (int b = 0; b < kBatches; ++b) {
        double acc = 0.0;
        for (std::int64_t i = 0; i < per_batch; ++i) {
            w = std::max(0.0, w + draw());
            acc += w;
        }
        means[b] = acc / static_cast<double>(per_batch);
    }
    LindleyStats st;
    for (double m : means) st.mean += m;
    st.mean /= kBatches;
    double var = 0.0;
    for (double m : means) var += (m - st.mean) * (m - st.mean);
    var /= (kBatches - 1);
    st.std_error = std::sqrt(var / kBatches);
    return st;
}

}  // namespace oracles
