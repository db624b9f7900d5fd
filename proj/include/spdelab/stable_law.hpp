#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "spdelab/piecewise_chebyshev.hpp"
#include "spdelab/rng.hpp"

namespace spdelab {

// Accuracy knobs of the density inversion integral.
struct QuadratureConfig {
    double abs_tol = 1e-13;        // absolute tolerance of the integral
    double truncation_radius = 0;  // 0 = derived from abs_tol
    double tail_switch = 0;        // 0 = seam chosen automatically
};

// Symmetric alpha-stable law with characteristic function exp(-|s|^alpha),
// alpha in (0,2]. The density is evaluated by cosine-transform inversion
// below the tail switch and by the convergent/asymptotic power-tail series
// beyond it; alpha = 2 uses the N(0,2) closed forms. Instances are immutable
// after construction and safe to share across threads (internal caches are
// built under std::call_once).
class StableLaw {
  public:
    explicit StableLaw(double alpha, QuadratureConfig config = {});

    double alpha() const { return alpha_; }
    const QuadratureConfig& config() const { return cfg_; }
    double tail_switch() const { return seam_; }
    double truncation_radius() const { return radius_; }

    // Density p(x); even, strictly positive.
    double density(double x) const;

    // Derivative p'(x); odd (evaluated at |x| and reflected).
    double density_derivative(double x) const;

    // C_alpha with p(x) ~ C_alpha/x^(alpha+1); rejects alpha == 2.
    double tail_constant() const;

    // g(x) = 1 - integral of sqrt(p(z) p(z-x)); in [0,1], even, g(0)=0.
    double hellinger_gap(double x) const;

    // c_alpha = (1/8) * integral of p'^2/p.
    double fisher_constant() const;

    // Distribution function, accurate to ~1e-9.
    double cdf(double x) const;

    // One draw via the Chambers-Mallows-Stuck transform.
    double sample(RngStream& rng) const;
    static double sample_standard(double alpha, double u1, double u2);

    // |central mass + 2 * analytic tail mass - 1| at the seam.
    double normalization_defect() const;

    // Diagnostics: the two evaluation branches in isolation.
    double density_by_inversion(double x) const;
    double derivative_by_inversion(double x) const;
    double density_tail_series(double x, double* err_estimate = nullptr) const;
    double derivative_tail_series(double x, double* err_estimate = nullptr) const;
    // Mass of the series tail beyond y > 0, i.e. P(X > y) for y >= seam.
    double tail_cdf_series(double y) const;

    // E|X|^p for 0 < p < alpha, by quadrature against this density.
    double absolute_moment(double p) const;

  private:
    void ensure_cache() const;
    void ensure_cdf() const;

    double alpha_;
    QuadratureConfig cfg_;
    double seam_ = 0.0;
    double radius_ = 0.0;

    mutable std::once_flag cache_once_;
    mutable std::unique_ptr<PiecewiseChebyshev> cache_;  // comp 0: p, comp 1: p'

    mutable std::once_flag cdf_once_;
    mutable std::vector<double> cdf_grid_;
    mutable std::vector<double> cdf_val_;

    mutable std::once_flag fisher_once_;
    mutable double fisher_ = 0.0;
};

}  // namespace spdelab
