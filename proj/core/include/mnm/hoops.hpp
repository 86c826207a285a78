#pragma once

#include <cstddef>

namespace mnm {

/// Free-throw duel: Bird and Magic alternate shots, Bird first.
struct HoopsParams {
    double p_bird = 0.5;
    double p_magic = 0.5;

    /// Throws DomainError unless both are in [0,1] and not both zero.
    void validate() const;
    /// Probability that both miss in one exchange.
    [[nodiscard]] double both_miss() const { return (1.0 - p_bird) * (1.0 - p_magic); }
};

/// Baskets each player still needs.
struct HoopsTarget {
    unsigned bird = 1;
    unsigned magic = 1;
};

/// Probability Bird makes the first basket: p_B / (1 - (1-p_B)(1-p_M)).
double bird_win_closed(const HoopsParams& params);

/// Probability Bird wins the first-to-(b, m) game with Bird about to shoot.
double bird_win_recurrence(const HoopsTarget& target, const HoopsParams& params);

/// Midpoint-rule estimates on an n x n grid over the unit square.
double favored_area_on_grid(std::size_t n);
double expected_win_on_grid(std::size_t n);

struct QuadratureResult {
    double value = 0.0;
    std::size_t grid = 0;      // final grid resolution per axis
    double last_change = 0.0;  // |I(grid) - I(grid/2)|
};

/// Area of {(p_B, p_M) : Bird is favored (win probability > 1/2)}.
QuadratureResult bird_favored_area();
/// Mean of Bird's win probability under independent uniform p_B, p_M.
QuadratureResult bird_expected_win();

double prob_bird_favored_uniform();
double expected_bird_win_uniform();

}  // namespace mnm
