#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace spdelab {

// Two-sided Kolmogorov-Smirnov statistic against a continuous cdf.
inline double ks_statistic(std::vector<double> samples,
                           const std::function<double(double)>& cdf) {
    if (samples.empty()) throw std::invalid_argument("ks_statistic: no samples");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max(d, std::abs((i + 1) / n - f));
        d = std::max(d, std::abs(f - i / n));
    }
    return d;
}

// Asymptotic Kolmogorov survival function Q(lambda) = P(sqrt(n) D > lambda).
inline double kolmogorov_q(double lambda) {
    if (lambda <= 0.0) return 1.0;
    double sum = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += (k % 2 == 1) ? term : -term;
        if (term < 1e-18) break;
    }
    return std::min(1.0, std::max(0.0, 2.0 * sum));
}

inline double ks_pvalue(double d, std::size_t n) {
    return kolmogorov_q(std::sqrt(static_cast<double>(n)) * d);
}

// Empirical characteristic function at frequency s.
inline std::complex<double> empirical_cf(std::span<const double> samples, double s) {
    double re = 0.0, im = 0.0;
    for (double x : samples) {
        re += std::cos(s * x);
        im += std::sin(s * x);
    }
    const double n = static_cast<double>(samples.size());
    return {re / n, im / n};
}

struct MeanStderr {
    double mean;
    double stderr_;
    std::size_t n;
};

inline MeanStderr mean_stderr(std::span<const double> xs) {
    if (xs.empty()) throw std::invalid_argument("mean_stderr: empty");
    double m = 0.0;
    for (double x : xs) m += x;
    m /= static_cast<double>(xs.size());
    double v = 0.0;
    for (double x : xs) v += (x - m) * (x - m);
    if (xs.size() > 1) v /= static_cast<double>(xs.size() - 1);
    return {m, std::sqrt(v / static_cast<double>(xs.size())), xs.size()};
}

struct LineFit {
    double slope;
    double intercept;
};

// Ordinary least squares y = slope * x + intercept.
inline LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_line: need matching inputs, size >= 2");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw std::invalid_argument("fit_line: degenerate abscissae");
    const double slope = (n * sxy - sx * sy) / denom;
    return {slope, (sy - slope * sx) / n};
}

// Khintchine-type constant c_p with (sum c_k^2)^{1/2} <= c_p E|sum r_k c_k|^p)^{1/p}
// for Rademacher signs r. Estimated as the sup of the ratio over a family of
// candidate coefficient vectors with the sign expectation enumerated exactly.
double khintchine_constant(double p);

}  // namespace spdelab
