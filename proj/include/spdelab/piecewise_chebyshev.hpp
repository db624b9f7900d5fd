#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace spdelab {

// Adaptive piecewise Chebyshev interpolant for a batch-evaluated vector
// function on [a,b]. Pieces are bisected until the trailing Chebyshev
// coefficients of every component fall below the tolerance; the batch
// evaluator lets callers amortize expensive evaluations over all nodes of a
// candidate piece.
class PiecewiseChebyshev {
  public:
    // Fills values[c * xs.size() + i] with component c at xs[i].
    using BatchFn =
        std::function<void(const std::vector<double>&, std::size_t components,
                           std::vector<double>&)>;

    static PiecewiseChebyshev build(double a, double b, std::size_t components,
                                    const BatchFn& f, double abs_tol,
                                    int degree = 24, int max_depth = 38);

    // Evaluates one component; x is clamped to [a,b].
    double eval(std::size_t component, double x) const;

    double lower() const { return a_; }
    double upper() const { return b_; }
    std::size_t piece_count() const { return pieces_.size(); }

  private:
    struct Piece {
        double a;
        double b;
        // coeff[c][k], Chebyshev coefficients per component
        std::vector<std::vector<double>> coeff;
    };

    double a_ = 0.0;
    double b_ = 0.0;
    std::size_t components_ = 0;
    std::vector<Piece> pieces_;       // sorted by left endpoint
    std::vector<double> piece_lo_;    // left endpoints for binary search
};

inline double chebyshev_clenshaw(const std::vector<double>& c, double t) {
    // t in [-1,1]
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t k = c.size(); k-- > 1;) {
        const double b0 = 2.0 * t * b1 - b2 + c[k];
        b2 = b1;
        b1 = b0;
    }
    return t * b1 - b2 + c[0];
}

}  // namespace spdelab
