#include "mnm/exact.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "mnm/error.hpp"

namespace mnm {

GameConfig GameConfig::fair(std::vector<unsigned> counts) {
    GameConfig config;
    config.head_probs.assign(counts.size(), ExactRational(1, 2));
    config.counts = std::move(counts);
    return config;
}

void GameConfig::validate() const {
    if (counts.empty()) {
        throw DomainError("game needs at least one player");
    }
    if (counts.size() != head_probs.size()) {
        throw DomainError("counts and head probabilities differ in length");
    }
    for (const auto& p : head_probs) {
        if (p.sign() <= 0 || p >= ExactRational(1)) {
            throw DomainError("head probability " + p.to_string() + " not strictly inside (0,1)");
        }
    }
    if (counts.size() > 20) {
        throw DomainError("more than 20 players is not supported by the exact engine");
    }
}

ExactRational tie_prob_finite_sum(unsigned k) {
    if (k == 0) {
        throw DomainError("finite-sum formula needs k >= 1");
    }
    // Sum over n double-head tosses, all terms over the common denominator 3^(2k-1).
    BigInt numerator = 0;
    BigInt three_pow = 1;
    for (unsigned n = 0; n < k; ++n) {
        numerator += binomial(2UL * k - n - 2, n) * binomial(2UL * k - 2UL * n - 2, k - n - 1) * three_pow;
        three_pow *= 3;
    }
    return ExactRational(numerator, power(3, 2UL * k - 1));
}

namespace {

void check_state(const GameState& state, const GameConfig& config) {
    config.validate();
    if (state.remaining.size() != config.counts.size()) {
        throw DomainError("state has " + std::to_string(state.remaining.size()) + " entries but config has " +
                          std::to_string(config.counts.size()) + " players");
    }
    for (std::size_t i = 0; i < state.remaining.size(); ++i) {
        if (state.remaining[i] > config.counts[i]) {
            throw DomainError("state entry exceeds the player's initial count");
        }
    }
}

// Probability of exactly the heads subset `mask`, before any conditioning.
std::vector<ExactRational> outcome_weights(const GameConfig& config) {
    const std::size_t p = config.players();
    std::vector<ExactRational> weights(std::size_t{1} << p);
    for (std::size_t mask = 0; mask < weights.size(); ++mask) {
        ExactRational w(1);
        for (std::size_t i = 0; i < p; ++i) {
            w *= (mask >> i) & 1U ? config.head_probs[i] : ExactRational(1) - config.head_probs[i];
        }
        weights[mask] = std::move(w);
    }
    return weights;
}

}  // namespace

TieTable::TieTable(const GameState& bound, const GameConfig& config, Route route,
                   const RecurrenceOptions& options) {
    check_state(bound, config);
    const std::size_t p = config.players();

    std::size_t total = 1;
    dims_.reserve(p);
    strides_.reserve(p);
    for (const unsigned r : bound.remaining) {
        const std::size_t d = std::size_t{r} + 1;
        if (total > options.max_states / d) {
            throw ResourceError("recurrence needs more than " + std::to_string(options.max_states) +
                                " states; raise the cap or shrink the state");
        }
        strides_.push_back(total);
        dims_.push_back(static_cast<unsigned>(d));
        total *= d;
    }

    const std::vector<ExactRational> raw_weights = outcome_weights(config);
    const ExactRational stay = raw_weights[0];
    const ExactRational leave = ExactRational(1) - stay;

    std::vector<ExactRational> step_weights(raw_weights.size());
    std::vector<std::size_t> offsets(raw_weights.size(), 0);
    for (std::size_t mask = 1; mask < raw_weights.size(); ++mask) {
        step_weights[mask] = route == Route::conditioned ? raw_weights[mask] / leave : raw_weights[mask];
        for (std::size_t i = 0; i < p; ++i) {
            if ((mask >> i) & 1U) {
                offsets[mask] += strides_[i];
            }
        }
    }

    values_.resize(total);
    std::vector<unsigned> current(p, 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t zeros = 0;
        for (const unsigned c : current) {
            zeros += c == 0 ? 1 : 0;
        }
        if (zeros == p) {
            values_[idx] = ExactRational(1);
        } else if (zeros > 0) {
            values_[idx] = ExactRational(0);
        } else {
            ExactRational acc(0);
            for (std::size_t mask = 1; mask < step_weights.size(); ++mask) {
                const ExactRational& next = values_[idx - offsets[mask]];
                if (next.sign() != 0) {
                    acc += step_weights[mask] * next;
                }
            }
            if (route == Route::raw) {
                // x = stay * x + sum  =>  x = sum / (1 - stay)
                acc /= leave;
            }
            values_[idx] = std::move(acc);
        }
        for (std::size_t i = 0; i < p; ++i) {
            if (++current[i] < dims_[i]) {
                break;
            }
            current[i] = 0;
        }
    }
}

const ExactRational& TieTable::at(const std::vector<unsigned>& state) const {
    if (state.size() != dims_.size()) {
        throw DomainError("state length does not match table");
    }
    std::size_t idx = 0;
    for (std::size_t i = 0; i < state.size(); ++i) {
        if (state[i] >= dims_[i]) {
            throw DomainError("state outside table bounds");
        }
        idx += state[i] * strides_[i];
    }
    return values_[idx];
}

ExactRational tie_prob_recurrence(const GameState& state, const GameConfig& config,
                                  const RecurrenceOptions& options) {
    return TieTable(state, config, TieTable::Route::conditioned, options).at(state.remaining);
}

ExactRational tie_prob_recurrence_raw(const GameState& state, const GameConfig& config,
                                      const RecurrenceOptions& options) {
    return TieTable(state, config, TieTable::Route::raw, options).at(state.remaining);
}

std::vector<ExactRational> tie_prob_diagonal(unsigned kmax) {
    // Fair two-player recurrence scaled to integers: y(c,k) = 3^(c+k) x(c,k)
    // satisfies y(c,k) = 3 y(c-1,k-1) + y(c-1,k) + y(c,k-1). Rows are rolled
    // so memory stays O(kmax).
    std::vector<ExactRational> diagonal;
    diagonal.reserve(std::size_t{kmax} + 1);
    diagonal.emplace_back(1);
    std::vector<BigInt> previous(std::size_t{kmax} + 1, 0);
    std::vector<BigInt> current(std::size_t{kmax} + 1, 0);
    previous[0] = 1;  // row c = 0: y(0,0) = 1, y(0,k>0) = 0
    for (unsigned c = 1; c <= kmax; ++c) {
        current[0] = 0;
        for (unsigned k = 1; k <= kmax; ++k) {
            current[k] = 3 * previous[k - 1] + previous[k] + current[k - 1];
        }
        diagonal.emplace_back(current[c], power(3, 2UL * c));
        std::swap(previous, current);
    }
    return diagonal;
}

std::vector<BigInt> oeis_terms(unsigned n) {
    if (n == 0) {
        throw DomainError("oeis_terms needs n >= 1");
    }
    std::vector<BigInt> terms;
    terms.reserve(n);
    for (unsigned k = 1; k <= n; ++k) {
        const ExactRational scaled = tie_prob_finite_sum(k) * ExactRational(power(3, 2UL * k - 1));
        if (!scaled.is_integer()) {
            throw std::logic_error("3^(2k-1) P(k,k) is not an integer at k = " + std::to_string(k));
        }
        terms.push_back(scaled.numerator());
    }
    return terms;
}

}  // namespace mnm
