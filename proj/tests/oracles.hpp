#pragma once

// Independent reference computations used only by the tests.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "mnm/rational.hpp"

namespace mnm::test {

// Sums the probability of every tie-ending path of the conditioned game by
// plain depth-first enumeration of round outcomes (no memoization, no table).
inline ExactRational enumerate_tie_paths(const std::vector<unsigned>& remaining,
                                         const std::vector<ExactRational>& heads) {
    bool all_zero = true;
    bool any_zero = false;
    for (const unsigned r : remaining) {
        all_zero = all_zero && r == 0;
        any_zero = any_zero || r == 0;
    }
    if (all_zero) {
        return ExactRational(1);
    }
    if (any_zero) {
        return ExactRational(0);
    }
    const std::size_t p = remaining.size();
    ExactRational no_heads(1);
    for (const auto& h : heads) {
        no_heads *= ExactRational(1) - h;
    }
    ExactRational total(0);
    for (std::size_t mask = 1; mask < (std::size_t{1} << p); ++mask) {
        ExactRational w(1);
        std::vector<unsigned> next = remaining;
        for (std::size_t i = 0; i < p; ++i) {
            if ((mask >> i) & 1U) {
                w *= heads[i];
                --next[i];
            } else {
                w *= ExactRational(1) - heads[i];
            }
        }
        total += w / (ExactRational(1) - no_heads) * enumerate_tie_paths(next, heads);
    }
    return total;
}

struct Estimate {
    double mean;
    double standard_error;
};

// Plays the alternating free-throw duel shot by shot with an mt19937_64.
inline Estimate simulate_hoops(unsigned bird_needs, unsigned magic_needs, double p_bird, double p_magic,
                               std::uint64_t trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uint64_t bird_wins = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        unsigned b = bird_needs;
        unsigned m = magic_needs;
        if (b == 0) {
            ++bird_wins;
            continue;
        }
        if (m == 0) {
            continue;
        }
        for (;;) {
            if (u(rng) < p_bird && --b == 0) {
                ++bird_wins;
                break;
            }
            if (u(rng) < p_magic && --m == 0) {
                break;
            }
        }
    }
    const double mean = static_cast<double>(bird_wins) / static_cast<double>(trials);
    return {mean, std::sqrt(mean * (1.0 - mean) / static_cast<double>(trials))};
}

}  // namespace mnm::test
