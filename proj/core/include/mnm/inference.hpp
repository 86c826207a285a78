#pragma once

#include <map>

namespace mnm {

/// Least-squares line ln P(k) = intercept + slope * ln k.
struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    unsigned kmin = 1;
    unsigned kmax = 2;
    double residual_sum_squares = 0.0;
    double amplitude = 1.0;  // exp(intercept)
};

/// Ordinary least squares of ln P on ln k (natural logs) over kmin..kmax.
/// Every k in the range must be present with 0 < P < 1.
FitResult loglog_fit(const std::map<unsigned, double>& probabilities, unsigned kmin, unsigned kmax);

/// amplitude * k^slope.
double predict(const FitResult& fit, unsigned k);

}  // namespace mnm
