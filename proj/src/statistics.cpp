#include "collapsim/statistics.hpp"

#include "collapsim/errors.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>

#include <algorithm>
#include <cmath>

namespace collapsim {

double normal_critical_value(double confidence)
{
    if (!(confidence > 0.0 && confidence < 1.0))
        throw DomainError("confidence must lie in (0, 1)");
    const boost::math::normal_distribution<double> standard;
    return boost::math::quantile(standard, 0.5 + 0.5 * confidence);
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double confidence)
{
    if (trials == 0)
        throw InvalidArgument("Wilson interval needs at least one trial");
    if (successes > trials)
        throw InvalidArgument("successes exceed trials");

    const double z = normal_critical_value(confidence);
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double centre = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;

    Interval ci{centre - half, centre + half};
    if (successes == 0)
        ci.low = 0.0;
    if (successes == trials)
        ci.high = 1.0;
    ci.low = std::max(0.0, std::min(ci.low, p));
    ci.high = std::min(1.0, std::max(ci.high, p));
    return ci;
}

ChiSquareResult chi_square_test(std::span<const std::uint64_t> observed,
                                std::span<const double> expected_probabilities)
{
    if (observed.size() < 2)
        throw InvalidArgument("chi-square test needs at least two categories");
    if (observed.size() != expected_probabilities.size())
        throw InvalidArgument("observed and expected category counts differ");

    double total = 0.0;
    for (auto c : observed)
        total += static_cast<double>(c);
    if (total <= 0.0)
        throw InvalidArgument("chi-square test needs at least one observation");

    ChiSquareResult res{0.0, 1.0, static_cast<int>(observed.size()) - 1, false};
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double p = expected_probabilities[i];
        if (!(p > 0.0))
            throw InvalidArgument("expected probabilities must be positive");
        const double expected = total * p;
        if (expected < 5.0)
            res.low_expected_count = true;
        const double diff = static_cast<double>(observed[i]) - expected;
        res.statistic += diff * diff / expected;
    }
    const boost::math::chi_squared_distribution<double> dist(res.degrees_of_freedom);
    res.p_value = boost::math::cdf(boost::math::complement(dist, res.statistic));
    return res;
}

SampleSummary summarize(std::vector<double> samples)
{
    SampleSummary s;
    s.count = samples.size();
    if (samples.empty())
        return s;

    double sum = 0.0;
    for (double v : samples)
        sum += v;
    s.mean = sum / static_cast<double>(s.count);
    double ss = 0.0;
    for (double v : samples)
        ss += (v - s.mean) * (v - s.mean);
    if (s.count > 1)
        s.standard_error = std::sqrt(ss / static_cast<double>(s.count - 1) / static_cast<double>(s.count));

    const auto mid = samples.begin() + static_cast<std::ptrdiff_t>(s.count / 2);
    std::nth_element(samples.begin(), mid, samples.end());
    s.median = *mid;
    if (s.count % 2 == 0)
        s.median = 0.5 * (s.median + *std::max_element(samples.begin(), mid));
    return s;
}

} // namespace collapsim
