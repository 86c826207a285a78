#pragma once

#include <cstddef>
#include <vector>

#include "mnm/rational.hpp"

namespace mnm {

/// Players, their starting M&M counts and their head probabilities.
struct GameConfig {
    std::vector<unsigned> counts;
    std::vector<ExactRational> head_probs;

    /// Every player flips a fair coin.
    static GameConfig fair(std::vector<unsigned> counts);

    [[nodiscard]] std::size_t players() const { return counts.size(); }

    /// Throws DomainError unless lengths match, p >= 1 and every bias is in (0,1).
    void validate() const;
};

/// Remaining M&Ms per player.
struct GameState {
    std::vector<unsigned> remaining;
};

struct RecurrenceOptions {
    /// Upper bound on the number of memoized states, prod(remaining_i + 1).
    std::size_t max_states = 10'000'000;
};

/// Two-player fair-coin tie probability P(k,k) from the finite sum over the
/// number n of double-head tosses. Rejects k = 0.
ExactRational tie_prob_finite_sum(unsigned k);

/// Probability that every player runs out on the same toss, by the
/// conditioned (no all-tails round) recurrence.
ExactRational tie_prob_recurrence(const GameState& state, const GameConfig& config,
                                  const RecurrenceOptions& options = {});

/// Same quantity from the unconditioned 2^p-outcome recurrence, solving for the
/// self-loop term at every state.
ExactRational tie_prob_recurrence_raw(const GameState& state, const GameConfig& config,
                                      const RecurrenceOptions& options = {});

/// Dense table of tie probabilities for every state below a bounding state.
/// Entry order is mixed-radix with player 0 varying fastest.
class TieTable {
public:
    enum class Route { conditioned, raw };

    TieTable(const GameState& bound, const GameConfig& config, Route route = Route::conditioned,
             const RecurrenceOptions& options = {});

    /// Value at a state componentwise <= the bound.
    [[nodiscard]] const ExactRational& at(const std::vector<unsigned>& state) const;
    [[nodiscard]] std::size_t size() const { return values_.size(); }

private:
    std::vector<unsigned> dims_;
    std::vector<std::size_t> strides_;
    std::vector<ExactRational> values_;
};

/// P(k,k) for k = 0..kmax, fair two-player game, from a single recurrence table.
std::vector<ExactRational> tie_prob_diagonal(unsigned kmax);

/// [3^(2k-1) P(k,k) for k = 1..n]; each term is checked to be an integer.
std::vector<BigInt> oeis_terms(unsigned n);

}  // namespace mnm
