#include "mnm/inference.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "mnm/error.hpp"

namespace mnm {

namespace {

class CompensatedSum {
public:
    void add(double t) {
        const double s = sum_ + t;
        compensation_ += std::abs(sum_) >= std::abs(t) ? (sum_ - s) + t : (t - s) + sum_;
        sum_ = s;
    }
    [[nodiscard]] double value() const { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

}  // namespace

FitResult loglog_fit(const std::map<unsigned, double>& probabilities, unsigned kmin, unsigned kmax) {
    if (kmin == 0) {
        throw DomainError("log-log fit needs kmin >= 1");
    }
    if (kmax <= kmin) {
        throw DomainError("log-log fit needs at least two points (kmax > kmin)");
    }
    std::vector<double> xs;
    std::vector<double> ys;
    xs.reserve(kmax - kmin + 1);
    ys.reserve(kmax - kmin + 1);
    for (unsigned k = kmin; k <= kmax; ++k) {
        const auto it = probabilities.find(k);
        if (it == probabilities.end()) {
            throw DomainError("missing probability for k = " + std::to_string(k));
        }
        if (!(it->second > 0.0 && it->second < 1.0)) {
            throw DomainError("probability for k = " + std::to_string(k) + " is outside (0,1)");
        }
        xs.push_back(std::log(static_cast<double>(k)));
        ys.push_back(std::log(it->second));
    }

    const double n = static_cast<double>(xs.size());
    CompensatedSum sx;
    CompensatedSum sy;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx.add(xs[i]);
        sy.add(ys[i]);
    }
    const double mean_x = sx.value() / n;
    const double mean_y = sy.value() / n;
    CompensatedSum sxx;
    CompensatedSum sxy;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mean_x;
        sxx.add(dx * dx);
        sxy.add(dx * (ys[i] - mean_y));
    }

    FitResult fit;
    fit.kmin = kmin;
    fit.kmax = kmax;
    fit.slope = sxy.value() / sxx.value();
    fit.intercept = mean_y - fit.slope * mean_x;
    fit.amplitude = std::exp(fit.intercept);
    CompensatedSum rss;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
        rss.add(r * r);
    }
    fit.residual_sum_squares = rss.value();
    return fit;
}

double predict(const FitResult& fit, unsigned k) {
    if (k == 0) {
        throw DomainError("prediction needs k >= 1");
    }
    return fit.amplitude * std::pow(static_cast<double>(k), fit.slope);
}

}  // namespace mnm
