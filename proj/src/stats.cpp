#include "spdelab/stats.hpp"

#include <cstdint>

#include "spdelab/rng.hpp"

namespace spdelab {

namespace {

// Exact E|sum r_k c_k|^p over all 2^n sign patterns.
double rademacher_abs_moment(const std::vector<double>& c, double p) {
    const std::size_t n = c.size();
    const std::uint64_t total = 1ULL << n;
    double acc = 0.0;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k)
            s += (mask >> k) & 1 ? c[k] : -c[k];
        acc += std::pow(std::abs(s), p);
    }
    return acc / static_cast<double>(total);
}

double ratio_for(const std::vector<double>& c, double p) {
    double norm2 = 0.0;
    for (double v : c) norm2 += v * v;
    const double m = rademacher_abs_moment(c, p);
    if (m <= 0.0) return 0.0;
    return std::sqrt(norm2) / std::pow(m, 1.0 / p);
}

}  // namespace

double khintchine_constant(double p) {
    if (!(p > 0.0)) throw std::invalid_argument("khintchine_constant: p must be positive");
    std::vector<std::vector<double>> candidates;
    candidates.push_back({1.0});
    for (int n : {2, 3, 4, 6, 8, 10, 12, 14})
        candidates.emplace_back(n, 1.0);
    // geometric profiles
    for (double q : {0.5, 0.7, 0.9}) {
        std::vector<double> c(12);
        for (int k = 0; k < 12; ++k) c[k] = std::pow(q, k);
        candidates.push_back(std::move(c));
    }
    // a few fixed random profiles
    RngStream rng(0x5eedallu, 0);
    for (int t = 0; t < 16; ++t) {
        const int n = 2 + t % 11;
        std::vector<double> c(n);
        for (int k = 0; k < n; ++k) c[k] = rng.uniform01();
        candidates.push_back(std::move(c));
    }
    double best = 1.0;
    for (const auto& c : candidates) best = std::max(best, ratio_for(c, p));
    return best;
}

}  // namespace spdelab
