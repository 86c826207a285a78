#pragma once

#include <cstddef>
#include <cstdint>

#include "mnm/rational.hpp"

namespace mnm {

/// A truncated series sum. `error_bound` bounds the truncation error only;
/// floating-point rounding adds roughly terms_used * 2^-52 relative on top.
struct SeriesValue {
    double value = 0.0;
    double error_bound = 0.0;
    std::size_t terms_used = 0;
};

/// Parameters of the Gauss series 2F1(a, b; c; x), |x| < 1, c not in {0, -1, -2, ...}.
struct Hyp2F1Params {
    double a = 0.0;
    double b = 0.0;
    double c = 1.0;
    double x = 0.0;

    void validate() const;
};

inline constexpr std::size_t kMaxSeriesTerms = 1'000'000;

/// P(k,k) as the sum over the final round n >= k of C(n-1,k-1)^2 4^-n.
SeriesValue tie_prob_series(unsigned k, double tol);

/// Probability that a two-player fair game with k each ends in a tie at exactly round n.
ExactRational round_pmf(unsigned k, std::int64_t n);

/// Rising factorial a (a+1) ... (a+n-1).
double pochhammer(double a, unsigned n);

SeriesValue hyp2f1(const Hyp2F1Params& params, double tol);

/// P(k,k) = 2F1(k, k; 1; 1/4) 4^-k.
SeriesValue tie_prob_hypergeometric(unsigned k, double tol);

}  // namespace mnm
