#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mnm/exact.hpp"

namespace mnm {

/// SplitMix64 (Steele, Lea, Flood 2014). Satisfies UniformRandomBitGenerator.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }

    result_type operator()() {
        state_ += kGamma;
        return mix(state_);
    }

    /// Uniform double in [0,1) with 53 random bits.
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    /// The SplitMix64 output finalizer.
    static constexpr std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// Seed of trial i: the i-th output of a SplitMix64 stream started at master_seed.
constexpr std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial) {
    return SplitMix64::mix(master_seed + (trial + 1) * SplitMix64::kGamma);
}

/// raw: every round all active players flip (all-tails rounds count).
/// reduced: all-tails rounds among active players are skipped.
enum class Variant { raw, reduced };

struct SimPlan {
    GameConfig config;
    std::uint64_t trials = 1;
    std::uint64_t master_seed = 0;
    Variant variant = Variant::raw;
};

struct GameResult {
    unsigned rounds = 0;                 // until every player is empty
    unsigned decided_round = 0;          // first round in which some player ran out
    std::vector<unsigned> finish_round;  // 0 for players who start empty
    bool tie = true;
    std::vector<unsigned> longest_head_run;
    std::vector<unsigned> longest_tail_run;
    /// Rounds where every active coin agreed; raw variant only.
    std::optional<unsigned> longest_same_outcome_run;
};

GameResult simulate_game(const GameConfig& config, std::uint64_t trial_seed, Variant variant = Variant::raw);

struct Interval {
    double low = 0.0;
    double high = 1.0;
};

/// Wilson score interval; z = 1.96 gives 95%.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = 1.959963984540054);

struct RunSummary {
    double mean = 0.0;
    unsigned max = 0;

    friend bool operator==(const RunSummary&, const RunSummary&) = default;
};

struct SimStats {
    std::uint64_t trials = 0;
    std::uint64_t ties = 0;
    double tie_rate = 0.0;
    double tie_ci_low = 0.0;
    double tie_ci_high = 1.0;
    double mean_rounds = 0.0;
    std::map<unsigned, std::uint64_t> rounds_histogram;
    double mean_decided_round = 0.0;
    unsigned max_decided_round = 0;
    std::vector<RunSummary> head_run;  // per player
    std::vector<RunSummary> tail_run;  // per player
    RunSummary head_run_any;           // per-game max over players
    RunSummary tail_run_any;
    std::optional<RunSummary> same_outcome_run;

    friend bool operator==(const SimStats&, const SimStats&) = default;
};

/// Runs plan.trials games, trial i seeded by trial_seed(master_seed, i).
/// `workers` = 0 picks the hardware concurrency; the result does not depend on it.
SimStats run_plan(const SimPlan& plan, unsigned workers = 1);

}  // namespace mnm
