#pragma once

#include <optional>
#include <span>

namespace gfis {

// Per-experiment Monte Carlo summary. cv is absent (not 0, not inf) when the
// estimate is exactly zero.
struct EstimateSummary {
    double est = 0.0;
    double sd = 0.0;
    std::optional<double> cv;
    double se = 0.0;
    long n = 0;
    long n_errors = 0;
};

// Fixed-order pairwise summation; result does not depend on how the values
// were produced across threads.
double pairwise_sum(std::span<const double> values);

EstimateSummary summarize(std::span<const double> values, long n_errors = 0);

}  // namespace gfis
