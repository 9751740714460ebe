#include "gfis/priors.hpp"

#include "gfis/quadrature.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gfis {

PriorDensity PriorDensity::uniform() { return PriorDensity{}; }

PriorDensity PriorDensity::custom(std::function<double(double)> density01,
                                  std::function<double(double)> quantile01) {
    PriorDensity p;
    p.uniform_ = false;
    p.density01_ = std::move(density01);
    p.quantile01_ = std::move(quantile01);
    p.validate("custom prior");
    return p;
}

double PriorDensity::density(double x, const Interval& support) const {
    const double w = support.width();
    if (!(w > 0.0)) throw std::invalid_argument("PriorDensity: empty support");
    if (x < support.lo || x > support.hi) return 0.0;
    if (uniform_) return 1.0 / w;
    return density01_((x - support.lo) / w) / w;
}

double PriorDensity::sample(Rng& rng, const Interval& support) const {
    const double u = rng.next_double();
    if (uniform_) return support.lo + support.width() * u;
    return support.lo + support.width() * quantile01_(u);
}

void PriorDensity::validate(const char* name) const {
    if (uniform_) return;
    for (int i = 0; i <= 256; ++i) {
        const double x = i / 256.0;
        if (!(density01_(x) > 0.0))
            throw std::invalid_argument(std::string(name) +
                                        ": density must be strictly positive");
    }
    const std::array<double, 2> unit{0.0, 1.0};
    const double mass = integrate_composite(
        [this](double x) { return density01_(x); }, unit, 64, 32);
    if (std::fabs(mass - 1.0) > 1e-10)
        throw std::invalid_argument(std::string(name) +
                                    ": density must integrate to 1 (got " +
                                    std::to_string(mass) + ")");
}

MixturePriors MixturePriors::make(const FunctionClassBounds& bounds, double b,
                                  double a) {
    return make_with(bounds, b, a, PriorDensity::uniform(), PriorDensity::uniform());
}

MixturePriors MixturePriors::make_with(const FunctionClassBounds& bounds, double b,
                                       double a, PriorDensity g, PriorDensity h) {
    bounds.validate();
    if (!(a > 0.0)) throw std::invalid_argument("MixturePriors: a must be positive");
    if (!(b > 0.0)) throw std::invalid_argument("MixturePriors: b must be positive");

    MixturePriors p;
    p.bounds = bounds;
    p.b = b;
    p.a = a;
    p.delta_b = a / b;
    p.i1 = {bounds.mu_lo, bounds.mu_hi + p.delta_b};
    p.i2 = {bounds.sigma_lo, bounds.sigma_hi + p.delta_b * p.delta_b};
    p.g = std::move(g);
    p.h = std::move(h);
    p.ell_cache = std::make_shared<EllCacheSlot>();

    // The tilted coordinate must sit strictly in the upper tail: s_min > 0.
    if (!(b > p.i1.hi))
        throw std::invalid_argument(
            "MixturePriors: need b > mu_hi + delta_b (threshold not rare enough)");
    return p;
}

}  // namespace gfis
