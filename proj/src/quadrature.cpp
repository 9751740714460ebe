#include "gfis/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace gfis {

namespace {

GaussLegendreRule compute_rule(int order) {
    if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    GaussLegendreRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-like initial guess, then Newton on P_n.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[order - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
    return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int order) {
    static std::mutex mutex;
    static std::map<int, GaussLegendreRule> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
    return it->second;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int order) {
    const GaussLegendreRule& rule = gauss_legendre(order);
    const double mid = 0.5 * (a + b);
    const double halfwidth = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < order; ++i)
        sum += rule.weights[i] * f(mid + halfwidth * rule.nodes[i]);
    return sum * halfwidth;
}

double integrate_composite(const std::function<double(double)>& f,
                           std::span<const double> breakpoints, int panels,
                           int order) {
    if (breakpoints.size() < 2)
        throw std::invalid_argument("integrate_composite: need >= 2 breakpoints");
    double total = 0.0;
    for (size_t seg = 0; seg + 1 < breakpoints.size(); ++seg) {
        const double lo = breakpoints[seg];
        const double hi = breakpoints[seg + 1];
        if (!(hi > lo)) continue;
        const double h = (hi - lo) / panels;
        for (int p = 0; p < panels; ++p)
            total += integrate_gl(f, lo + p * h, lo + (p + 1) * h, order);
    }
    return total;
}

PchipInterpolant PchipInterpolant::fit(std::vector<double> x, std::vector<double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("PchipInterpolant: need >= 2 matching nodes");
    const size_t n = x.size();
    for (size_t i = 0; i + 1 < n; ++i)
        if (!(x[i + 1] > x[i]))
            throw std::invalid_argument("PchipInterpolant: x must be strictly increasing");

    std::vector<double> h(n - 1), delta(n - 1), d(n);
    for (size_t i = 0; i + 1 < n; ++i) {
        h[i] = x[i + 1] - x[i];
        delta[i] = (y[i + 1] - y[i]) / h[i];
    }
    // Interior slopes: weighted harmonic mean, zero across sign changes.
    for (size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] * delta[i] <= 0.0) {
            d[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    // One-sided endpoint slopes with the usual shape-preserving clamps.
    auto endpoint = [](double h0, double h1, double d0, double d1) {
        double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (s * d0 <= 0.0)
            s = 0.0;
        else if (d0 * d1 < 0.0 && std::fabs(s) > 3.0 * std::fabs(d0))
            s = 3.0 * d0;
        return s;
    };
    if (n == 2) {
        d[0] = d[1] = delta[0];
    } else {
        d[0] = endpoint(h[0], h[1], delta[0], delta[1]);
        d[n - 1] = endpoint(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
    }

    PchipInterpolant out;
    out.x_ = std::move(x);
    out.y_ = std::move(y);
    out.slope_ = std::move(d);
    return out;
}

double PchipInterpolant::operator()(double x) const {
    if (x <= x_.front()) return y_.front();
    if (x >= x_.back()) return y_.back();
    const auto it = std::upper_bound(x_.begin(), x_.end(), x);
    const size_t i = static_cast<size_t>(it - x_.begin()) - 1;
    const double h = x_[i + 1] - x_[i];
    const double t = (x - x_[i]) / h;
    const double t2 = t * t;
    const double t3 = t2 * t;
    const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    const double h10 = t3 - 2.0 * t2 + t;
    const double h01 = -2.0 * t3 + 3.0 * t2;
    const double h11 = t3 - t2;
    return h00 * y_[i] + h10 * h * slope_[i] + h01 * y_[i + 1] + h11 * h * slope_[i + 1];
}

}  // namespace gfis
