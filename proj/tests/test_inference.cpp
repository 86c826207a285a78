#include <doctest.h>

#include <cmath>
#include <map>

#include "mnm/error.hpp"
#include "mnm/exact.hpp"
#include "mnm/inference.hpp"

namespace {

std::map<unsigned, double> exact_probs(unsigned kmax) {
    const auto diagonal = mnm::tie_prob_diagonal(kmax);
    std::map<unsigned, double> probs;
    for (unsigned k = 1; k <= kmax; ++k) {
        probs[k] = diagonal[k].to_double();
    }
    return probs;
}

}  // namespace

TEST_CASE("exact line is recovered") {
    const std::map<unsigned, double> probs{{2, 0.25}, {3, 1.0 / 9.0}};
    const auto fit = mnm::loglog_fit(probs, 2, 3);
    CHECK(fit.slope == doctest::Approx(-2.0).epsilon(1e-14));
    CHECK(std::abs(fit.intercept) < 1e-13);
    CHECK(fit.residual_sum_squares < 1e-26);
    CHECK(fit.amplitude == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("fits of the exact tie probabilities") {
    const auto probs = exact_probs(220);
    const auto all = mnm::loglog_fit(probs, 1, 110);
    CHECK(std::abs(all.intercept - -1.42022) <= 1e-3);
    CHECK(std::abs(all.slope - -0.545568) <= 1e-3);
    CHECK(std::abs(mnm::predict(all, 220) - 0.01274) <= 2e-4);

    const auto tail = mnm::loglog_fit(probs, 50, 110);
    CHECK(std::abs(tail.intercept - -1.58261) <= 1e-3);
    CHECK(std::abs(tail.slope - -0.50553) <= 1e-3);
    CHECK(std::abs(tail.amplitude - 0.205437) <= 1e-3);
    CHECK(std::abs(mnm::predict(tail, 220) - 0.01344) <= 2e-4);

    const double truth = probs.at(220);
    CHECK(std::abs(mnm::predict(tail, 220) - truth) / truth < 0.01);
    CHECK(std::abs(mnm::predict(all, 220) - truth) / truth > 0.05);
}

TEST_CASE("prediction formulations coincide and refits are deterministic") {
    const auto probs = exact_probs(120);
    const auto fit = mnm::loglog_fit(probs, 10, 120);
    for (unsigned k = 1; k <= 1000; k += 37) {
        const double a = mnm::predict(fit, k);
        const double b = std::exp(fit.intercept + fit.slope * std::log(static_cast<double>(k)));
        REQUIRE(std::abs(a - b) <= 1e-14 * b);
    }
    const auto again = mnm::loglog_fit(probs, 10, 120);
    CHECK(again.slope == fit.slope);
    CHECK(again.intercept == fit.intercept);
    CHECK(again.residual_sum_squares == fit.residual_sum_squares);
}

TEST_CASE("zero slope predicts a constant") {
    mnm::FitResult flat;
    flat.slope = 0.0;
    flat.intercept = std::log(0.3);
    flat.amplitude = 0.3;
    CHECK(mnm::predict(flat, 1) == 0.3);
    CHECK(mnm::predict(flat, 5000) == 0.3);
}

TEST_CASE("fit errors") {
    const auto probs = exact_probs(10);
    CHECK_THROWS_AS(mnm::loglog_fit(probs, 1, 1), mnm::DomainError);
    CHECK_THROWS_AS(mnm::loglog_fit(probs, 0, 5), mnm::DomainError);
    CHECK_THROWS_AS(mnm::loglog_fit(probs, 5, 11), mnm::DomainError);
    auto bad = probs;
    bad[3] = 0.0;
    CHECK_THROWS_AS(mnm::loglog_fit(bad, 1, 5), mnm::DomainError);
    bad[3] = 1.0;
    CHECK_THROWS_AS(mnm::loglog_fit(bad, 1, 5), mnm::DomainError);
    CHECK_THROWS_AS(mnm::predict(mnm::loglog_fit(probs, 1, 5), 0), mnm::DomainError);
}
