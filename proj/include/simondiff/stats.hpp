#ifndef SIMONDIFF_STATS_HPP
#define SIMONDIFF_STATS_HPP

#include <span>
#include <vector>

namespace simondiff {

double mean(std::span<const double> xs);
double sample_variance(std::span<const double> xs);  // n-1 denominator

// Linear-interpolation (type-7) quantile of a sorted sample, q in [0, 1].
double quantile_type7(std::span<const double> sorted, double q);

// Five-number summary with outliers outside the 1.5*IQR fences listed
// separately. min/max are of the full data, outliers included.
struct BoxplotSummary {
    double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
    std::vector<double> outliers;
};
BoxplotSummary boxplot_stats(std::span<const double> xs);

struct TTestResult {
    double t = 0;
    double p = 0;
    double df = 0;
};

// Welch's unequal-variance t-test with Welch-Satterthwaite df. Two-sided
// p-value from the normal approximation when df > 100, the Student-t CDF
// otherwise. Requires >= 2 elements per sample and non-zero variance in at
// least one sample.
TTestResult welch_t_test(std::span<const double> a, std::span<const double> b);

double normal_cdf(double z);
double students_t_cdf(double t, double df);

} // namespace simondiff

#endif
