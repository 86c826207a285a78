#include "mnm/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "mnm/error.hpp"

namespace mnm {

namespace {

std::vector<double> head_probabilities(const GameConfig& config) {
    std::vector<double> probs;
    probs.reserve(config.players());
    for (const auto& h : config.head_probs) {
        probs.push_back(h.to_double());
    }
    return probs;
}

GameResult play(const std::vector<unsigned>& counts, const std::vector<double>& head_prob, std::uint64_t seed,
                Variant variant) {
    const std::size_t p = counts.size();

    GameResult result;
    result.finish_round.assign(p, 0);
    result.longest_head_run.assign(p, 0);
    result.longest_tail_run.assign(p, 0);

    std::vector<unsigned> remaining = counts;
    std::vector<unsigned> head_streak(p, 0);
    std::vector<unsigned> tail_streak(p, 0);
    std::vector<bool> heads(p, false);
    unsigned same_streak = 0;
    unsigned same_longest = 0;

    SplitMix64 rng(seed);
    auto active_count = [&] {
        return static_cast<std::size_t>(std::count_if(remaining.begin(), remaining.end(), [](unsigned r) { return r > 0; }));
    };

    while (active_count() > 0) {
        bool any_head = false;
        do {
            any_head = false;
            for (std::size_t i = 0; i < p; ++i) {
                if (remaining[i] > 0) {
                    heads[i] = rng.uniform() < head_prob[i];
                    any_head = any_head || heads[i];
                }
            }
        } while (variant == Variant::reduced && !any_head);

        ++result.rounds;
        bool all_same = true;
        bool first_seen = false;
        bool first_outcome = false;
        for (std::size_t i = 0; i < p; ++i) {
            if (remaining[i] == 0) {
                continue;
            }
            if (!first_seen) {
                first_seen = true;
                first_outcome = heads[i];
            } else if (heads[i] != first_outcome) {
                all_same = false;
            }
            if (heads[i]) {
                tail_streak[i] = 0;
                result.longest_head_run[i] = std::max(result.longest_head_run[i], ++head_streak[i]);
                if (--remaining[i] == 0) {
                    result.finish_round[i] = result.rounds;
                }
            } else {
                head_streak[i] = 0;
                result.longest_tail_run[i] = std::max(result.longest_tail_run[i], ++tail_streak[i]);
            }
        }
        same_streak = all_same ? same_streak + 1 : 0;
        same_longest = std::max(same_longest, same_streak);
    }

    for (std::size_t i = 0; i < p; ++i) {
        if (counts[i] > 0 && (result.decided_round == 0 || result.finish_round[i] < result.decided_round)) {
            result.decided_round = result.finish_round[i];
        }
    }
    result.tie = std::all_of(result.finish_round.begin(), result.finish_round.end(),
                             [&](unsigned r) { return r == result.finish_round.front(); });
    if (variant == Variant::raw) {
        result.longest_same_outcome_run = same_longest;
    }
    return result;
}

}  // namespace

GameResult simulate_game(const GameConfig& config, std::uint64_t seed, Variant variant) {
    config.validate();
    return play(config.counts, head_probabilities(config), seed, variant);
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
    if (trials == 0) {
        throw DomainError("Wilson interval needs at least one trial");
    }
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double centre = (phat + z2 / (2.0 * n)) / denom;
    const double half = z / denom * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
    // Clamp so that low <= phat <= high holds despite rounding.
    return {std::clamp(std::min(centre - half, phat), 0.0, 1.0), std::clamp(std::max(centre + half, phat), 0.0, 1.0)};
}

namespace {

// Integer accumulators: merging is exact, so the totals do not depend on how
// trials are split across workers.
struct Tally {
    std::uint64_t ties = 0;
    std::uint64_t rounds = 0;
    std::uint64_t decided = 0;
    unsigned decided_max = 0;
    std::map<unsigned, std::uint64_t> histogram;
    std::vector<std::uint64_t> head_sum, tail_sum;
    std::vector<unsigned> head_max, tail_max;
    std::uint64_t head_any_sum = 0, tail_any_sum = 0, same_sum = 0;
    unsigned head_any_max = 0, tail_any_max = 0, same_max = 0;

    explicit Tally(std::size_t p) : head_sum(p, 0), tail_sum(p, 0), head_max(p, 0), tail_max(p, 0) {}

    void add(const GameResult& g) {
        ties += g.tie ? 1 : 0;
        rounds += g.rounds;
        decided += g.decided_round;
        decided_max = std::max(decided_max, g.decided_round);
        ++histogram[g.rounds];
        unsigned head_any = 0;
        unsigned tail_any = 0;
        for (std::size_t i = 0; i < head_sum.size(); ++i) {
            head_sum[i] += g.longest_head_run[i];
            tail_sum[i] += g.longest_tail_run[i];
            head_max[i] = std::max(head_max[i], g.longest_head_run[i]);
            tail_max[i] = std::max(tail_max[i], g.longest_tail_run[i]);
            head_any = std::max(head_any, g.longest_head_run[i]);
            tail_any = std::max(tail_any, g.longest_tail_run[i]);
        }
        head_any_sum += head_any;
        tail_any_sum += tail_any;
        head_any_max = std::max(head_any_max, head_any);
        tail_any_max = std::max(tail_any_max, tail_any);
        if (g.longest_same_outcome_run) {
            same_sum += *g.longest_same_outcome_run;
            same_max = std::max(same_max, *g.longest_same_outcome_run);
        }
    }

    void merge(const Tally& o) {
        ties += o.ties;
        rounds += o.rounds;
        decided += o.decided;
        decided_max = std::max(decided_max, o.decided_max);
        for (const auto& [r, c] : o.histogram) {
            histogram[r] += c;
        }
        for (std::size_t i = 0; i < head_sum.size(); ++i) {
            head_sum[i] += o.head_sum[i];
            tail_sum[i] += o.tail_sum[i];
            head_max[i] = std::max(head_max[i], o.head_max[i]);
            tail_max[i] = std::max(tail_max[i], o.tail_max[i]);
        }
        head_any_sum += o.head_any_sum;
        tail_any_sum += o.tail_any_sum;
        same_sum += o.same_sum;
        head_any_max = std::max(head_any_max, o.head_any_max);
        tail_any_max = std::max(tail_any_max, o.tail_any_max);
        same_max = std::max(same_max, o.same_max);
    }
};

}  // namespace

SimStats run_plan(const SimPlan& plan, unsigned workers) {
    if (plan.trials == 0) {
        throw DomainError("simulation needs at least one trial");
    }
    plan.config.validate();
    if (workers == 0) {
        workers = std::max(1U, std::thread::hardware_concurrency());
    }
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, plan.trials));
    const std::size_t p = plan.config.players();
    const std::vector<double> head_prob = head_probabilities(plan.config);

    std::vector<Tally> tallies(workers, Tally(p));
    auto work = [&](unsigned w) {
        const std::uint64_t begin = plan.trials * w / workers;
        const std::uint64_t end = plan.trials * (w + 1) / workers;
        for (std::uint64_t i = begin; i < end; ++i) {
            tallies[w].add(play(plan.config.counts, head_prob, trial_seed(plan.master_seed, i), plan.variant));
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back(work, w);
        }
    }
    Tally total(p);
    for (const auto& t : tallies) {
        total.merge(t);
    }

    const double n = static_cast<double>(plan.trials);
    SimStats stats;
    stats.trials = plan.trials;
    stats.ties = total.ties;
    stats.tie_rate = static_cast<double>(total.ties) / n;
    const Interval ci = wilson_interval(total.ties, plan.trials);
    stats.tie_ci_low = ci.low;
    stats.tie_ci_high = ci.high;
    stats.mean_rounds = static_cast<double>(total.rounds) / n;
    stats.rounds_histogram = std::move(total.histogram);
    stats.mean_decided_round = static_cast<double>(total.decided) / n;
    stats.max_decided_round = total.decided_max;
    for (std::size_t i = 0; i < p; ++i) {
        stats.head_run.push_back({static_cast<double>(total.head_sum[i]) / n, total.head_max[i]});
        stats.tail_run.push_back({static_cast<double>(total.tail_sum[i]) / n, total.tail_max[i]});
    }
    stats.head_run_any = {static_cast<double>(total.head_any_sum) / n, total.head_any_max};
    stats.tail_run_any = {static_cast<double>(total.tail_any_sum) / n, total.tail_any_max};
    if (plan.variant == Variant::raw) {
        stats.same_outcome_run = RunSummary{static_cast<double>(total.same_sum) / n, total.same_max};
    }
    return stats;
}

}  // namespace mnm
