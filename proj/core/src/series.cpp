#include "mnm/series.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "mnm/error.hpp"

namespace mnm {

namespace {

// Term held as mantissa * 2^exponent so that the tiny leading terms of the
// tie series (4^-k) neither underflow nor lose the ratio recursion.
struct ScaledTerm {
    double mantissa;
    long exponent;

    void scale(double factor) {
        int e = 0;
        mantissa = std::frexp(mantissa * factor, &e);
        exponent += e;
    }
    [[nodiscard]] double value() const {
        return std::ldexp(mantissa, static_cast<int>(std::max(exponent, long{std::numeric_limits<int>::min() / 2})));
    }
};

void check_tol(double tol) {
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw DomainError("tolerance must be positive and finite");
    }
}

// Sums t_0 + t_1 + ... where t_{n+1} = t_n * ratio(n). `tail_ratio(n)` must
// return a bound on sup_{j >= n} |ratio(j)|, or a value >= 1 if none is known yet.
template <class Ratio, class TailRatio>
SeriesValue sum_ratio_series(ScaledTerm term, double tol, Ratio ratio, TailRatio tail_ratio) {
    double sum = 0.0;
    double compensation = 0.0;
    for (std::size_t n = 0; n < kMaxSeriesTerms; ++n) {
        // Neumaier summation.
        const double t = term.value();
        const double s = sum + t;
        compensation += std::abs(sum) >= std::abs(t) ? (sum - s) + t : (t - s) + sum;
        sum = s;

        const double r = ratio(n);
        if (r == 0.0) {
            return {sum + compensation, 0.0, n + 1};
        }
        term.scale(r);
        const double bound_ratio = tail_ratio(n + 1);
        if (bound_ratio < 1.0) {
            const double tail = std::abs(term.value()) / (1.0 - bound_ratio);
            if (tail <= tol) {
                return {sum + compensation, tail, n + 1};
            }
        }
    }
    throw ConvergenceError("series did not certify its tail bound within " + std::to_string(kMaxSeriesTerms) +
                           " terms");
}

SeriesValue hyp2f1_scaled(const Hyp2F1Params& params, double tol, ScaledTerm first) {
    params.validate();
    check_tol(tol);
    const double a = params.a;
    const double b = params.b;
    const double c = params.c;
    const double x = params.x;
    const double abs_a = std::abs(a);
    const double abs_b = std::abs(b);
    const double abs_c = std::abs(c);
    auto ratio = [=](std::size_t n) {
        const double dn = static_cast<double>(n);
        return (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * x;
    };
    // For j >= n > |c|: |a+j|/|c+j| <= (j+|a|)/(j-|c|), non-increasing in j,
    // and |b+j|/(j+1) <= max(1, (j+|b|)/(j+1)), also non-increasing.
    auto tail_ratio = [=](std::size_t n) {
        const double dn = static_cast<double>(n);
        if (dn <= abs_c) {
            return 2.0;
        }
        return std::abs(x) * (dn + abs_a) / (dn - abs_c) * std::max(1.0, (dn + abs_b) / (dn + 1.0));
    };
    return sum_ratio_series(first, tol, ratio, tail_ratio);
}

}  // namespace

void Hyp2F1Params::validate() const {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(x)) {
        throw DomainError("2F1 parameters must be finite");
    }
    if (!(std::abs(x) < 1.0)) {
        throw DomainError("2F1 series needs |x| < 1");
    }
    if (c <= 0.0 && c == std::floor(c)) {
        throw DomainError("2F1 parameter c must not be a non-positive integer");
    }
}

SeriesValue tie_prob_series(unsigned k, double tol) {
    if (k == 0) {
        throw DomainError("tie_prob_series needs k >= 1");
    }
    check_tol(tol);
    const double dk = k;
    // Index m = n - k; T_0 = 4^-k, T_{m+1}/T_m = ((m+k)/(m+1))^2 / 4, decreasing in m.
    auto ratio = [dk](std::size_t m) {
        const double q = (static_cast<double>(m) + dk) / (static_cast<double>(m) + 1.0);
        return q * q * 0.25;
    };
    return sum_ratio_series(ScaledTerm{1.0, -2L * k}, tol, ratio, ratio);
}

ExactRational round_pmf(unsigned k, std::int64_t n) {
    if (k == 0) {
        throw DomainError("round_pmf needs k >= 1");
    }
    if (n < static_cast<std::int64_t>(k)) {
        return ExactRational(0);
    }
    const BigInt c = binomial(static_cast<unsigned long>(n - 1), k - 1);
    return ExactRational(c * c, power(4, static_cast<unsigned long>(n)));
}

double pochhammer(double a, unsigned n) {
    double result = 1.0;
    for (unsigned i = 0; i < n; ++i) {
        result *= a + i;
    }
    return result;
}

SeriesValue hyp2f1(const Hyp2F1Params& params, double tol) {
    return hyp2f1_scaled(params, tol, ScaledTerm{1.0, 0});
}

SeriesValue tie_prob_hypergeometric(unsigned k, double tol) {
    if (k == 0) {
        throw DomainError("tie_prob_hypergeometric needs k >= 1");
    }
    const double dk = k;
    // Carry the 4^-k factor inside the terms; the tail bound scales with it.
    return hyp2f1_scaled(Hyp2F1Params{dk, dk, 1.0, 0.25}, tol, ScaledTerm{1.0, -2L * k});
}

}  // namespace mnm
