#include "spdelab/piecewise_chebyshev.hpp"

#include <algorithm>
#include <cmath>

namespace spdelab {

namespace {

// Chebyshev points of the second kind on [a,b], ordered left to right.
std::vector<double> cheb_nodes(double a, double b, int degree) {
    std::vector<double> xs(degree + 1);
    for (int j = 0; j <= degree; ++j) {
        const double t = std::cos(M_PI * (degree - j) / degree);
        xs[j] = 0.5 * (a + b) + 0.5 * (b - a) * t;
    }
    return xs;
}

// Coefficients from values at second-kind points (direct O(n^2) transform;
// degrees here are small).
std::vector<double> cheb_coeffs(const std::vector<double>& values) {
    const int n = static_cast<int>(values.size()) - 1;
    std::vector<double> c(n + 1, 0.0);
    for (int k = 0; k <= n; ++k) {
        double s = 0.0;
        for (int j = 0; j <= n; ++j) {
            const double w = (j == 0 || j == n) ? 0.5 : 1.0;
            // values[j] sits at t_j = cos(pi*(n-j)/n)
            s += w * values[j] * std::cos(M_PI * k * (n - j) / n);
        }
        c[k] = 2.0 * s / n;
    }
    c[0] *= 0.5;
    c[n] *= 0.5;
    return c;
}

double tail_magnitude(const std::vector<double>& c) {
    double m = 0.0;
    const std::size_t n = c.size();
    for (std::size_t k = (n >= 3 ? n - 3 : 0); k < n; ++k)
        m = std::max(m, std::abs(c[k]));
    return m;
}

}  // namespace

PiecewiseChebyshev PiecewiseChebyshev::build(double a, double b,
                                             std::size_t components,
                                             const BatchFn& f, double abs_tol,
                                             int degree, int max_depth) {
    if (!(b > a)) throw std::invalid_argument("PiecewiseChebyshev: empty interval");
    if (components == 0) throw std::invalid_argument("PiecewiseChebyshev: no components");

    PiecewiseChebyshev out;
    out.a_ = a;
    out.b_ = b;
    out.components_ = components;

    struct Task {
        double a, b;
        int depth;
    };
    std::vector<Task> stack{{a, b, 0}};
    std::vector<double> values;

    while (!stack.empty()) {
        const Task task = stack.back();
        stack.pop_back();
        const std::vector<double> xs = cheb_nodes(task.a, task.b, degree);
        f(xs, components, values);

        Piece piece{task.a, task.b, {}};
        piece.coeff.resize(components);
        bool converged = true;
        for (std::size_t c = 0; c < components; ++c) {
            std::vector<double> comp(xs.size());
            for (std::size_t i = 0; i < xs.size(); ++i)
                comp[i] = values[c * xs.size() + i];
            piece.coeff[c] = cheb_coeffs(comp);
            if (tail_magnitude(piece.coeff[c]) > abs_tol) converged = false;
        }
        if (!converged && task.depth < max_depth) {
            const double mid = 0.5 * (task.a + task.b);
            stack.push_back({mid, task.b, task.depth + 1});
            stack.push_back({task.a, mid, task.depth + 1});
            continue;
        }
        out.pieces_.push_back(std::move(piece));
    }

    std::sort(out.pieces_.begin(), out.pieces_.end(),
              [](const Piece& l, const Piece& r) { return l.a < r.a; });
    out.piece_lo_.reserve(out.pieces_.size());
    for (const Piece& p : out.pieces_) out.piece_lo_.push_back(p.a);
    return out;
}

double PiecewiseChebyshev::eval(std::size_t component, double x) const {
    const double xc = std::min(std::max(x, a_), b_);
    auto it = std::upper_bound(piece_lo_.begin(), piece_lo_.end(), xc);
    const std::size_t idx = (it == piece_lo_.begin())
                                ? 0
                                : static_cast<std::size_t>(it - piece_lo_.begin()) - 1;
    const Piece& p = pieces_[idx];
    const double t = (2.0 * xc - (p.a + p.b)) / (p.b - p.a);
    return chebyshev_clenshaw(p.coeff[component], t);
}

}  // namespace spdelab
