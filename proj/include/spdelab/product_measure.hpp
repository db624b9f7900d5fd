#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "spdelab/stable_law.hpp"

namespace spdelab {

// Three-valued outcome of a truncated series criterion. Analytic tail rules
// recover the sharp statements; otherwise only the finite prefix is known.
enum class Decision { kHolds, kFails, kInconclusive };

const char* to_string(Decision d);

struct DecisionReport {
    Decision decision = Decision::kInconclusive;
    double partial_sum = 0.0;  // over the explicit modes
    bool analytic = false;     // whether a tail rule decided it
};

// Power-law tail rule value ~ c * n^(-rate) beyond the explicit prefix.
struct PowerTail {
    double c;
    double rate;
};

// Tail description of a shift sequence: exactly zero beyond the prefix, or a
// power decay of |u_k - v_k|.
struct ShiftTail {
    enum class Kind { kZero, kPower } kind = Kind::kZero;
    PowerTail power{0.0, 0.0};
};

// Infinite product of scaled one-dimensional stable laws, represented by an
// explicit positive prefix q_1..q_N plus an optional analytic tail rule.
struct ProductMeasureSpec {
    std::shared_ptr<const StableLaw> law;
    std::vector<double> q;
    std::optional<PowerTail> tail;

    ProductMeasureSpec(std::shared_ptr<const StableLaw> l, std::vector<double> scales,
                       std::optional<PowerTail> tail_rule = std::nullopt);

    std::size_t modes() const { return q.size(); }
};

struct ShiftPair {
    std::vector<double> u;
    std::vector<double> v;
    std::optional<ShiftTail> diff_tail;  // tail info on u - v

    ShiftPair(std::vector<double> shift_u, std::vector<double> shift_v,
              std::optional<ShiftTail> tail_rule = std::nullopt);
};

// Membership criterion: sum q_n^alpha < infinity.
DecisionReport membership_check(const ProductMeasureSpec& spec);

// Equivalence of the u- and v-shifted products: sum (u_k-v_k)^2/q_k^2 < inf.
DecisionReport equivalence_check(const ProductMeasureSpec& spec,
                                 const ShiftPair& shifts);

// Absolute continuity of the u-shift against the unshifted law.
DecisionReport zinn_check(const ProductMeasureSpec& spec,
                          std::span<const double> u,
                          std::optional<ShiftTail> tail = std::nullopt);

struct HellingerResult {
    double value;      // product of per-mode overlaps, in [0,1]
    double log_value;  // log-space accumulation used to form `value`
};

// Truncated Hellinger integral over the first K modes.
HellingerResult hellinger_integral(const ProductMeasureSpec& spec,
                                   const ShiftPair& shifts, std::size_t K);

// Truncated density ratio d(mu)/d(nu) at a sample point z (length >= K).
double density_ratio(std::span<const double> z, const ProductMeasureSpec& spec,
                     const ShiftPair& shifts, std::size_t K);

}  // namespace spdelab
