#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace collapsim {

struct Interval {
    double low;
    double high;
};

// Wilson score interval for a binomial proportion.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                         double confidence = 0.95);

// Two-sided standard normal quantile for the given central confidence,
// e.g. 0.95 -> 1.959964.
double normal_critical_value(double confidence);

struct ChiSquareResult {
    double statistic;
    double p_value;
    int degrees_of_freedom;
    // Some expected count fell below 5, where the chi-square approximation
    // is unreliable.
    bool low_expected_count;
};

// Pearson goodness-of-fit of observed counts against expected probabilities
// with k - 1 degrees of freedom.
ChiSquareResult chi_square_test(std::span<const std::uint64_t> observed,
                                std::span<const double> expected_probabilities);

struct SampleSummary {
    std::uint64_t count = 0;
    double mean = 0.0;
    double median = 0.0;
    double standard_error = 0.0;
};

// Summation runs in the given order so the result is reproducible.
SampleSummary summarize(std::vector<double> samples);

} // namespace collapsim
