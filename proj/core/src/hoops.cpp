#include "mnm/hoops.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "mnm/error.hpp"

namespace mnm {

namespace {

constexpr std::size_t kStartGrid = 256;
constexpr std::size_t kMaxGrid = std::size_t{1} << 14;
constexpr double kRefineTolerance = 1e-4;

template <class RowSum>
double midpoint_grid(std::size_t n, RowSum row_sum) {
    const double h = 1.0 / static_cast<double>(n);
    // Row totals combined by Neumaier summation in row order.
    double sum = 0.0;
    double compensation = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double p_magic = (static_cast<double>(j) + 0.5) * h;
        const double t = row_sum(p_magic, n, h);
        const double s = sum + t;
        compensation += std::abs(sum) >= std::abs(t) ? (sum - s) + t : (t - s) + sum;
        sum = s;
    }
    return (sum + compensation) * h * h;
}

template <class Estimate>
QuadratureResult refine(Estimate estimate) {
    std::size_t n = kStartGrid;
    double previous = estimate(n);
    for (;;) {
        const std::size_t next = 2 * n;
        const double current = estimate(next);
        const double change = std::abs(current - previous);
        if (change < kRefineTolerance || next >= kMaxGrid) {
            return {current, next, change};
        }
        previous = current;
        n = next;
    }
}

}  // namespace

void HoopsParams::validate() const {
    if (!(p_bird >= 0.0 && p_bird <= 1.0) || !(p_magic >= 0.0 && p_magic <= 1.0)) {
        throw DomainError("shooting probabilities must lie in [0,1]");
    }
    if (p_bird == 0.0 && p_magic == 0.0) {
        throw DomainError("both shooting probabilities are zero: the game never ends");
    }
}

double bird_win_closed(const HoopsParams& params) {
    params.validate();
    return std::min(1.0, params.p_bird / (1.0 - params.both_miss()));
}

double bird_win_recurrence(const HoopsTarget& target, const HoopsParams& params) {
    params.validate();
    const double pb = params.p_bird;
    const double pm = params.p_magic;
    const double leave = 1.0 - params.both_miss();
    const std::size_t cols = std::size_t{target.magic} + 1;
    std::vector<double> x((std::size_t{target.bird} + 1) * cols);
    auto at = [&](std::size_t b, std::size_t m) -> double& { return x[b * cols + m]; };
    for (std::size_t b = 0; b <= target.bird; ++b) {
        for (std::size_t m = 0; m <= target.magic; ++m) {
            if (b == 0) {
                at(b, m) = 1.0;  // includes (0,0): Bird reached zero first
            } else if (m == 0) {
                at(b, m) = 0.0;
            } else {
                at(b, m) = (pb * pm * at(b - 1, m - 1) + pb * (1.0 - pm) * at(b - 1, m) +
                            (1.0 - pb) * pm * at(b, m - 1)) /
                           leave;
            }
        }
    }
    return at(target.bird, target.magic);
}

double favored_area_on_grid(std::size_t n) {
    if (n == 0) {
        throw DomainError("grid needs at least one cell");
    }
    return midpoint_grid(n, [](double p_magic, std::size_t cells, double h) {
        std::size_t favored = 0;
        for (std::size_t i = 0; i < cells; ++i) {
            const double p_bird = (static_cast<double>(i) + 0.5) * h;
            favored += bird_win_closed({p_bird, p_magic}) > 0.5 ? 1 : 0;
        }
        return static_cast<double>(favored);
    });
}

double expected_win_on_grid(std::size_t n) {
    if (n == 0) {
        throw DomainError("grid needs at least one cell");
    }
    return midpoint_grid(n, [](double p_magic, std::size_t cells, double h) {
        double sum = 0.0;
        for (std::size_t i = 0; i < cells; ++i) {
            const double p_bird = (static_cast<double>(i) + 0.5) * h;
            sum += bird_win_closed({p_bird, p_magic});
        }
        return sum;
    });
}

QuadratureResult bird_favored_area() { return refine(favored_area_on_grid); }
QuadratureResult bird_expected_win() { return refine(expected_win_on_grid); }

double prob_bird_favored_uniform() { return bird_favored_area().value; }
double expected_bird_win_uniform() { return bird_expected_win().value; }

}  // namespace mnm
