// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mnm/exact.hpp"
#include "mnm/hoops.hpp"
#include "mnm/inference.hpp"
#include "mnm/montecarlo.hpp"
#include "mnm/oeis.hpp"
#include "mnm/series.hpp"
#include "oracles.hpp"

namespace {

using mnm::BigInt;
using mnm::ExactRational;
using mnm::GameConfig;
using mnm::GameState;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) {
                detail << "failed: ";
            } else {
                detail << "; ";
            }
            detail << what;
            pass = false;
        }
    }
};

struct Criterion {
    std::string name;
    double time_limit_s;  // <= 0: no limit
    std::function<void(Outcome&)> body;
};

ExactRational q(long n, long d) { return ExactRational(BigInt(n), BigInt(d)); }

std::string num(double v, const char* f = "%.6g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

double round_sig(double v, int digits) {
    const double scale = std::pow(10.0, digits - 1 - static_cast<int>(std::floor(std::log10(std::abs(v)))));
    return std::round(v * scale) / scale;
}

void exact_values(Outcome& o) {
    const std::map<unsigned, ExactRational> expected{{1, q(1, 3)},        {2, q(5, 27)},         {3, q(11, 81)},
                                                     {4, q(245, 2187)},   {5, q(1921, 19683)},
                                                     {8, q(355975, 4782969)}};
    for (const auto& [k, value] : expected) {
        const auto finite = mnm::tie_prob_finite_sum(k);
        const auto rec = mnm::tie_prob_recurrence(GameState{{k, k}}, GameConfig::fair({k, k}));
        o.require(finite == value, "finite sum k=" + std::to_string(k) + " gave " + finite.to_string());
        o.require(rec == value, "recurrence k=" + std::to_string(k) + " gave " + rec.to_string());
    }
    o.detail << "P(1..5,8) exact by finite sum and recurrence";
}

void integer_sequence(Outcome& o) {
    const std::vector<BigInt> table{1, 5, 33, 245, 1921, 15525, 127905, 1067925};
    o.require(mnm::oeis_terms(8) == table, "oeis_terms(8) differs from the table");
    const auto bfile = mnm::parse_bfile(mnm::bundled_tie_sequence_bfile());
    const std::size_t n = bfile.size();
    o.require(n >= 50, "bundled b-file has only " + std::to_string(n) + " terms");
    const auto report = mnm::check_terms(mnm::kTieSequenceId, mnm::oeis_terms(static_cast<unsigned>(n)), bfile);
    o.require(report.matched, "bundled b-file mismatch");
    o.detail << "first 8 terms match; " << report.terms_checked << " terms match the bundled A084771 b-file";
}

void four_way(Outcome& o) {
    constexpr unsigned kmax = 200;
    constexpr double tol = 1e-10;
    const mnm::TieTable table(GameState{{kmax, kmax}}, GameConfig::fair({kmax, kmax}));
    double worst_series = 0.0;
    double worst_hyp = 0.0;
    for (unsigned k = 1; k <= kmax; ++k) {
        const ExactRational finite = mnm::tie_prob_finite_sum(k);
        o.require(finite == table.at({k, k}), "finite sum != recurrence at k=" + std::to_string(k));
        const double exact = finite.to_double();
        const double ds = std::abs(mnm::tie_prob_series(k, tol).value - exact);
        const double dh = std::abs(mnm::tie_prob_hypergeometric(k, tol).value - exact);
        worst_series = std::max(worst_series, ds);
        worst_hyp = std::max(worst_hyp, dh);
        o.require(ds <= tol + 1e-12, "series off at k=" + std::to_string(k));
        o.require(dh <= tol + 1e-12, "hypergeometric off at k=" + std::to_string(k));
    }
    o.detail << "k=1..200 finite==recurrence; max |series-exact|=" << num(worst_series, "%.2e")
             << ", max |hyp-exact|=" << num(worst_hyp, "%.2e");
}

void fit_reproduction(Outcome& o) {
    // P(220) from the general recurrence engine.
    const mnm::TieTable table(GameState{{220, 220}}, GameConfig::fair({220, 220}));
    std::map<unsigned, double> probs;
    for (unsigned k = 1; k <= 110; ++k) {
        probs[k] = table.at({k, k}).to_double();
    }
    const double p220 = table.at({220, 220}).to_double();
    const auto all = mnm::loglog_fit(probs, 1, 110);
    const auto tail = mnm::loglog_fit(probs, 50, 110);
    const double prediction = mnm::predict(tail, 220);
    o.require(std::abs(all.intercept + 1.42022) <= 1e-3, "1..110 intercept " + num(all.intercept));
    o.require(std::abs(all.slope + 0.545568) <= 1e-3, "1..110 slope " + num(all.slope));
    o.require(std::abs(tail.intercept + 1.58261) <= 1e-3, "50..110 intercept " + num(tail.intercept));
    o.require(std::abs(tail.slope + 0.50553) <= 1e-3, "50..110 slope " + num(tail.slope));
    o.require(std::abs(prediction - 0.01344) <= 2e-4, "prediction " + num(prediction));
    o.require(round_sig(p220, 3) == round_sig(0.01347, 3), "exact P(220) " + num(p220));
    o.detail << "1..110: " << num(all.intercept) << " " << num(all.slope) << "; 50..110: " << num(tail.intercept)
             << " " << num(tail.slope) << "; predict(220)=" << num(prediction) << ", exact P(220)=" << num(p220);
}

void hoops_constants(Outcome& o) {
    const double favored = mnm::prob_bird_favored_uniform();
    const double expected = mnm::expected_bird_win_uniform();
    o.require(std::abs(favored - std::log(2.0)) <= 1e-3, "favored area " + num(favored));
    o.require(std::abs(expected - (std::numbers::pi * std::numbers::pi / 6 - 1)) <= 1e-3,
              "expected win " + num(expected));
    o.detail << "favored area " << num(favored) << " (ln 2), expected win " << num(expected) << " (pi^2/6 - 1)";
}

void hoops_recurrence(Outcome& o) {
    std::mt19937_64 rng(2718);
    std::uniform_real_distribution<double> p(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const mnm::HoopsParams params{p(rng), p(rng)};
        worst = std::max(worst, std::abs(mnm::bird_win_recurrence({1, 1}, params) - mnm::bird_win_closed(params)));
    }
    o.require(worst <= 1e-12, "(1,1) recurrence differs from closed form by " + num(worst));
    std::uniform_int_distribution<unsigned> baskets(1, 6);
    std::uniform_real_distribution<double> shot(0.1, 0.9);
    double worst_z = 0.0;
    for (int i = 0; i < 10; ++i) {
        const unsigned b = baskets(rng);
        const unsigned m = baskets(rng);
        const double pb = shot(rng);
        const double pm = shot(rng);
        const double v = mnm::bird_win_recurrence({b, m}, {pb, pm});
        const auto mc = mnm::test::simulate_hoops(b, m, pb, pm, 1'000'000, 1000 + static_cast<std::uint64_t>(i));
        const double se = std::sqrt(v * (1 - v) / 1e6);
        const double z = std::abs(mc.mean - v) / se;
        worst_z = std::max(worst_z, z);
        o.require(z <= 4.0, "instance " + std::to_string(i) + " off by " + num(z) + " SE");
    }
    o.detail << "sweep max diff " << num(worst, "%.2e") << "; 10 Monte Carlo instances, max |z|=" << num(worst_z, "%.3f");
}

void monte_carlo(Outcome& o) {
    for (const unsigned k : {1U, 2U, 5U}) {
        const double exact = mnm::tie_prob_finite_sum(k).to_double();
        const mnm::SimPlan raw{GameConfig::fair({k, k}), 1'000'000, 100 + k, mnm::Variant::raw};
        const mnm::SimPlan reduced{GameConfig::fair({k, k}), 1'000'000, 200 + k, mnm::Variant::reduced};
        const auto a = mnm::run_plan(raw);
        const auto b = mnm::run_plan(reduced);
        const std::string tag = "k=" + std::to_string(k);
        o.require(a.tie_ci_low <= exact && exact <= a.tie_ci_high, tag + " raw CI misses exact");
        o.require(b.tie_ci_low <= exact && exact <= b.tie_ci_high, tag + " reduced CI misses exact");
        const double se = std::sqrt(a.tie_rate * (1 - a.tie_rate) / 1e6 + b.tie_rate * (1 - b.tie_rate) / 1e6);
        o.require(std::abs(a.tie_rate - b.tie_rate) <= 4 * se, tag + " raw/reduced disagree");
        // A game is decided when the first player runs out.
        o.require(b.max_decided_round <= 2 * k - 1, tag + " reduced game undecided after 2k-1 rounds");
        o.detail << tag << " raw " << num(a.tie_rate) << " reduced " << num(b.tie_rate) << " exact " << num(exact)
                 << "; ";
    }
    const mnm::SimPlan plan{GameConfig::fair({5, 5}), 200'000, 42, mnm::Variant::raw};
    o.require(mnm::run_plan(plan, 1) == mnm::run_plan(plan, 4), "stats depend on worker count");
    o.detail << "workers 1 vs 4 identical";
}

void property_suites(Outcome& o) {
    std::mt19937_64 rng(31415);
    int cases = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t p = 2 + trial % 2;
        std::vector<unsigned> counts(p);
        std::vector<ExactRational> heads(p);
        for (std::size_t i = 0; i < p; ++i) {
            counts[i] = static_cast<unsigned>(rng() % 7);
            const long d = 2 + static_cast<long>(rng() % 11);
            heads[i] = q(1 + static_cast<long>(rng() % static_cast<unsigned long>(d - 1)), d);
        }
        const GameConfig config{counts, heads};
        o.require(mnm::tie_prob_recurrence_raw(GameState{counts}, config) ==
                      mnm::tie_prob_recurrence(GameState{counts}, config),
                  "raw/reduced recurrence differ on trial " + std::to_string(trial));
        ++cases;
    }

    const ExactRational eps(BigInt(1), mnm::power(10, 30));
    for (unsigned k = 1; k <= 10; ++k) {
        const ExactRational target = mnm::tie_prob_finite_sum(k);
        ExactRational partial(0);
        bool monotone = true;
        for (std::int64_t n = k; n <= 400; ++n) {
            const ExactRational next = partial + mnm::round_pmf(k, n);
            monotone = monotone && next >= partial && next <= target;
            partial = next;
        }
        o.require(monotone && target - partial <= eps, "pmf normalization at k=" + std::to_string(k));
    }

    std::uniform_real_distribution<double> a_dist(-5.0, 5.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double a = a_dist(rng);
        const unsigned n = static_cast<unsigned>(rng() % 50);
        const double lhs = mnm::pochhammer(a, n + 1);
        const double rhs = mnm::pochhammer(a, n) * (a + n);
        o.require(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)), "pochhammer recurrence");
    }
    const double tol = 1e-13;
    for (const double x : {0.1, 0.3, 0.5, 0.7}) {
        o.require(std::abs(x * mnm::hyp2f1({1, 1, 2, -x}, tol).value - std::log1p(x)) <= 1e-10, "log identity");
        o.require(std::abs(mnm::hyp2f1({1.5, 1, 1, x}, tol).value - std::pow(1 - x, -1.5)) <= 1e-10,
                  "power identity");
        o.require(std::abs(x * mnm::hyp2f1({0.5, 0.5, 1.5, x * x}, tol).value - std::asin(x)) <= 1e-10,
                  "arcsin identity");
    }

    const auto diagonal = mnm::tie_prob_diagonal(200);
    for (unsigned k = 2; k <= 200; ++k) {
        o.require(diagonal[k] < diagonal[k - 1], "P(k,k) not decreasing at k=" + std::to_string(k));
    }
    o.detail << cases << " raw/reduced cases, pmf normalization k<=10, pochhammer + three 2F1 identities, "
             << "monotone decay k<=200";
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC1 exact values", 1.0, exact_values},
        {"AC2 integer sequence", 5.0, integer_sequence},
        {"AC3 four-way agreement", 60.0, four_way},
        {"AC4 fit reproduction", 30.0, fit_reproduction},
        {"AC5 hoops constants", 30.0, hoops_constants},
        {"AC6 hoops recurrence", 0.0, hoops_recurrence},
        {"AC7 Monte Carlo calibration", 60.0, monte_carlo},
        {"AC8 property suites", 0.0, property_suites},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Outcome outcome;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(outcome);
        } catch (const std::exception& e) {
            outcome.require(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_s > 0.0) {
            outcome.require(seconds < c.time_limit_s, "took " + num(seconds, "%.2f") + " s");
        }
        failures += outcome.pass ? 0 : 1;
        std::printf("[%s] %-28s %7.2f s%s  %s\n", outcome.pass ? "PASS" : "FAIL", c.name.c_str(), seconds,
                    c.time_limit_s > 0.0 ? (" (< " + num(c.time_limit_s, "%.0f") + " s)").c_str() : "",
                    outcome.detail.str().c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
