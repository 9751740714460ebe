#include "gfis/summary.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace gfis {

double pairwise_sum(std::span<const double> values) {
    const size_t n = values.size();
    if (n <= 32) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    const size_t half = n / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

EstimateSummary summarize(std::span<const double> values, long n_errors) {
    if (values.empty()) throw std::invalid_argument("summarize: no replicates");
    EstimateSummary s;
    s.n = static_cast<long>(values.size());
    s.n_errors = n_errors;
    s.est = pairwise_sum(values) / static_cast<double>(s.n);
    if (s.n > 1) {
        std::vector<double> sq(values.size());
        for (size_t i = 0; i < values.size(); ++i) {
            const double d = values[i] - s.est;
            sq[i] = d * d;
        }
        s.sd = std::sqrt(pairwise_sum(sq) / static_cast<double>(s.n - 1));
    }
    s.se = s.sd / std::sqrt(static_cast<double>(s.n));
    if (s.est > 0.0) s.cv = s.sd / s.est;
    return s;
}

}  // namespace gfis
