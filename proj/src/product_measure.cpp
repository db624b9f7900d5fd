#include "spdelab/product_measure.hpp"

#include <cmath>
#include <stdexcept>

namespace spdelab {

const char* to_string(Decision d) {
    switch (d) {
        case Decision::kHolds: return "holds";
        case Decision::kFails: return "fails";
        default: return "inconclusive";
    }
}

ProductMeasureSpec::ProductMeasureSpec(std::shared_ptr<const StableLaw> l,
                                       std::vector<double> scales,
                                       std::optional<PowerTail> tail_rule)
    : law(std::move(l)), q(std::move(scales)), tail(tail_rule) {
    if (!law) throw std::invalid_argument("ProductMeasureSpec: null law");
    if (q.empty()) throw std::invalid_argument("ProductMeasureSpec: empty scale sequence");
    for (double v : q)
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument("ProductMeasureSpec: scales must be positive");
    if (tail && (!(tail->c > 0.0) || !(tail->rate > 0.0)))
        throw std::invalid_argument("ProductMeasureSpec: tail rule needs positive c, rate");
}

ShiftPair::ShiftPair(std::vector<double> shift_u, std::vector<double> shift_v,
                     std::optional<ShiftTail> tail_rule)
    : u(std::move(shift_u)), v(std::move(shift_v)), diff_tail(tail_rule) {
    if (u.size() != v.size())
        throw std::invalid_argument("ShiftPair: shift vectors must have equal length");
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!std::isfinite(u[i]) || !std::isfinite(v[i]))
            throw std::invalid_argument("ShiftPair: shifts must be finite");
}

DecisionReport membership_check(const ProductMeasureSpec& spec) {
    DecisionReport r;
    const double a = spec.law->alpha();
    for (double qn : spec.q) r.partial_sum += std::pow(qn, a);
    if (spec.tail) {
        r.analytic = true;
        // sum n^{-rate*alpha} converges iff rate*alpha > 1
        r.decision = (spec.tail->rate * a > 1.0) ? Decision::kHolds : Decision::kFails;
    }
    return r;
}

DecisionReport equivalence_check(const ProductMeasureSpec& spec,
                                 const ShiftPair& shifts) {
    if (shifts.u.size() != spec.q.size())
        throw std::invalid_argument("equivalence_check: shift length mismatch");
    DecisionReport r;
    for (std::size_t k = 0; k < spec.q.size(); ++k) {
        const double d = (shifts.u[k] - shifts.v[k]) / spec.q[k];
        r.partial_sum += d * d;
    }
    if (shifts.diff_tail) {
        r.analytic = true;
        if (shifts.diff_tail->kind == ShiftTail::Kind::kZero ||
            shifts.diff_tail->power.c == 0.0) {
            r.decision = Decision::kHolds;
        } else if (spec.tail) {
            // sum (c_d n^{-r_d} / (c_q n^{-r_q}))^2 converges iff 2(r_d - r_q) > 1
            r.decision = (2.0 * (shifts.diff_tail->power.rate - spec.tail->rate) > 1.0)
                             ? Decision::kHolds
                             : Decision::kFails;
        } else {
            r.analytic = false;
            r.decision = Decision::kInconclusive;
        }
    }
    return r;
}

DecisionReport zinn_check(const ProductMeasureSpec& spec, std::span<const double> u,
                          std::optional<ShiftTail> tail) {
    std::vector<double> uu(u.begin(), u.end());
    const ShiftPair pair(std::move(uu), std::vector<double>(u.size(), 0.0), tail);
    return equivalence_check(spec, pair);
}

HellingerResult hellinger_integral(const ProductMeasureSpec& spec,
                                   const ShiftPair& shifts, std::size_t K) {
    if (K > spec.q.size())
        throw std::invalid_argument("hellinger_integral: K exceeds mode count");
    if (shifts.u.size() < K)
        throw std::invalid_argument("hellinger_integral: shifts shorter than K");
    double log_acc = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
        const double delta = (shifts.v[k] - shifts.u[k]) / spec.q[k];
        const double gap = spec.law->hellinger_gap(delta);
        log_acc += std::log1p(-std::min(gap, 1.0));
    }
    return {std::exp(log_acc), log_acc};
}

double density_ratio(std::span<const double> z, const ProductMeasureSpec& spec,
                     const ShiftPair& shifts, std::size_t K) {
    if (K > spec.q.size() || z.size() < K || shifts.u.size() < K)
        throw std::invalid_argument("density_ratio: inconsistent truncation level");
    double log_acc = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
        const double num = spec.law->density((z[k] - shifts.u[k]) / spec.q[k]);
        const double den = spec.law->density((z[k] - shifts.v[k]) / spec.q[k]);
        log_acc += std::log(num) - std::log(den);
    }
    return std::exp(log_acc);
}

}  // namespace spdelab
