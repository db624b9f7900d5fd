#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace spdelab {

// Gauss-Legendre rule on [-1,1]. Nodes/weights are computed once by Newton
// iteration on the Legendre polynomial, to machine precision.
template <int N>
struct GaussLegendre {
    std::array<double, N> node;
    std::array<double, N> weight;

    GaussLegendre() {
        for (int i = 0; i < N; ++i) {
            // Chebyshev-like initial guess.
            double x = std::cos(M_PI * (i + 0.75) / (N + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= N; ++k) {
                    const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = N * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            node[i] = x;
            weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
};

inline const GaussLegendre<15>& gauss15() {
    static const GaussLegendre<15> rule;
    return rule;
}

// Compensated accumulator for long panel sums.
class KahanSum {
  public:
    void add(double v) {
        const double y = v - comp_;
        const double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// 15-point Gauss-Legendre on [a,b].
template <typename F>
double gl15(const F& f, double a, double b) {
    const auto& rule = gauss15();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 15; ++i) s += rule.weight[i] * f(mid + half * rule.node[i]);
    return s * half;
}

// Fixed panel partition of [a,b] integrated panel-by-panel with GL-15.
template <typename F>
double gl15_panels(const F& f, double a, double b, int panels) {
    KahanSum acc;
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) acc.add(gl15(f, a + p * h, a + (p + 1) * h));
    return acc.value();
}

// Integrates f over [a,b] splitting dyadically toward the left endpoint,
// for integrands with an endpoint derivative singularity at a.
template <typename F>
double gl15_graded_left(const F& f, double a, double b, int levels) {
    KahanSum acc;
    double right = b;
    for (int j = 0; j < levels; ++j) {
        const double left = a + (right - a) * 0.5;
        acc.add(gl15(f, left, right));
        right = left;
    }
    acc.add(gl15(f, a, right));
    return acc.value();
}

}  // namespace spdelab
