#include "gfis/uniform_is.hpp"

#include "gfis/gaussian.hpp"
#include "gfis/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace gfis {

namespace {

// Clipped scale interval for a given tilt s: values of varsigma compatible
// with nu = b - s*varsigma lying in I1.
struct ClippedInterval {
    double lo, hi;
    bool empty() const { return !(hi > lo); }
};

ClippedInterval clip_scale(double s, const MixturePriors& p) {
    const double lo = std::max(p.i2.lo, (p.b - p.i1.hi) / s);
    const double hi = std::min(p.i2.hi, (p.b - p.i1.lo) / s);
    return {lo, hi};
}

// Inner integral over varsigma of varsigma * h(b - s varsigma) * g(varsigma).
// Closed form for uniform priors, Gauss-Legendre otherwise.
double inner_r(double s, const MixturePriors& p) {
    if (!(s > 0.0)) return 0.0;
    const ClippedInterval c = clip_scale(s, p);
    if (c.empty()) return 0.0;
    if (p.has_uniform_priors())
        return 0.5 * (c.hi * c.hi - c.lo * c.lo) / (p.i2.width() * p.i1.width());
    return integrate_gl(
        [&](double varsigma) {
            return varsigma * p.h.density(p.b - s * varsigma, p.i1) *
                   p.g.density(varsigma, p.i2);
        },
        c.lo, c.hi, 24);
}

// r(s)/phi_bar(s), evaluated in log space; the ratio spans hundreds of
// orders of magnitude across the s-range.
double tilt_integrand(double s, const MixturePriors& p) {
    const double r = inner_r(s, p);
    if (r <= 0.0) return 0.0;
    return std::exp(std::log(r) - phi_bar(s).log_value);
}

// Locations where the clipped interval switches between a support endpoint
// and the moving constraint; the integrand has derivative kinks there.
std::vector<double> interior_kinks(const MixturePriors& p, double lo, double hi) {
    std::vector<double> kinks;
    const double k_hi = (p.b - p.i1.lo) / p.i2.hi;  // hi constraint switch
    const double k_lo = (p.b - p.i1.hi) / p.i2.lo;  // lo constraint switch
    for (double k : {k_hi, k_lo})
        if (k > lo && k < hi) kinks.push_back(k);
    std::sort(kinks.begin(), kinks.end());
    kinks.erase(std::unique(kinks.begin(), kinks.end()), kinks.end());
    return kinks;
}

// Composite 64-pt Gauss-Legendre over [s_min, s_end] with panels aligned to
// the integrand kinks; `total_panels` split across segments by length.
double integrate_tilt(const MixturePriors& p, double s_end, int total_panels) {
    const double s_lo = p.s_min();
    if (!(s_end > s_lo)) return 0.0;
    std::vector<double> breaks{s_lo};
    for (double k : interior_kinks(p, s_lo, s_end)) breaks.push_back(k);
    breaks.push_back(s_end);

    const double total_len = s_end - s_lo;
    double sum = 0.0;
    for (size_t seg = 0; seg + 1 < breaks.size(); ++seg) {
        const double len = breaks[seg + 1] - breaks[seg];
        const int panels = std::max(
            1, static_cast<int>(std::lround(total_panels * len / total_len)));
        const double h = len / panels;
        for (int q = 0; q < panels; ++q)
            sum += integrate_gl([&](double s) { return tilt_integrand(s, p); },
                                breaks[seg] + q * h, breaks[seg] + (q + 1) * h, 64);
    }
    return sum;
}

double ell_quadrature(double z, const MixturePriors& p) {
    const double s_end = std::min(z, p.s_max());
    if (!(s_end > p.s_min())) return 0.0;
    const double coarse = integrate_tilt(p, s_end, 32);
    const double fine = integrate_tilt(p, s_end, 64);
    const double scale = std::max({std::fabs(fine), std::fabs(coarse), 1e-300});
    if (std::isfinite(fine) && std::fabs(fine - coarse) > 1e-6 * scale)
        throw std::runtime_error("ell: quadrature refinement failed to certify 1e-6");
    return fine;
}

}  // namespace

// Memoized l(z): cumulative Gauss-Legendre over a graded node set (denser
// near s_min where l vanishes quadratically), kinks pinned to nodes, monotone
// cubic interpolation of log l between nodes. Queries below the first node
// fall back to direct quadrature, so the table never loses relative accuracy
// where l is tiny.
class LSumTable {
  public:
    explicit LSumTable(const MixturePriors& p) : s_min_(p.s_min()), s_max_(p.s_max()) {
        constexpr int kNodes = 1024;
        const double span = s_max_ - s_min_;
        std::vector<double> z(kNodes);
        for (int j = 1; j <= kNodes; ++j)
            z[j - 1] = s_min_ + span * std::pow(static_cast<double>(j) / kNodes, 1.5);
        z.back() = s_max_;
        for (double kink : interior_kinks(p, s_min_, s_max_)) {
            const auto it = std::lower_bound(z.begin(), z.end() - 1, kink);
            if (it != z.end() - 1) *it = kink;
        }
        std::sort(z.begin(), z.end());
        z.erase(std::unique(z.begin(), z.end(),
                            [&](double u, double v) { return v - u < 1e-15 * span; }),
                z.end());

        std::vector<double> l(z.size());
        double prev = s_min_;
        double acc = 0.0;
        for (size_t j = 0; j < z.size(); ++j) {
            acc += integrate_gl([&](double s) { return tilt_integrand(s, p); },
                                prev, z[j], 16);
            l[j] = acc;
            prev = z[j];
        }
        l_max_ = l.back();

        size_t first = 0;
        while (first < l.size() && !(l[first] > 0.0 && std::isfinite(std::log(l[first]))))
            ++first;
        if (first + 2 > l.size())
            throw std::runtime_error("LSumTable: mixture mass vanishes on the support");
        std::vector<double> zs(z.begin() + first, z.end());
        std::vector<double> logl(l.size() - first);
        for (size_t j = first; j < l.size(); ++j) logl[j - first] = std::log(l[j]);
        z_first_ = zs.front();
        log_l_ = PchipInterpolant::fit(std::move(zs), std::move(logl));

        certify(p);
    }

    double value(double zq, const MixturePriors& p) const {
        if (!(zq > s_min_)) return 0.0;
        if (zq >= s_max_) return l_max_;
        if (zq < z_first_) return ell_quadrature(zq, p);
        return std::exp(log_l_(zq));
    }

  private:
    void certify(const MixturePriors& p) const {
        for (int t = 0; t < 16; ++t) {
            const double zq = z_first_ + (s_max_ - z_first_) * (t + 0.37) / 16.0;
            const double exact = ell_quadrature(zq, p);
            const double approx = value(zq, p);
            const double scale = std::max(std::fabs(exact), 1e-300);
            if (std::fabs(approx - exact) > 1e-6 * scale)
                throw std::runtime_error("LSumTable: certification against quadrature failed");
        }
    }

    double s_min_, s_max_, z_first_ = 0.0, l_max_ = 0.0;
    PchipInterpolant log_l_;
};

namespace {

const LSumTable& table_for(const MixturePriors& p) {
    if (!p.ell_cache) throw std::logic_error("MixturePriors: missing cache slot");
    std::call_once(p.ell_cache->once,
                   [&] { p.ell_cache->table = std::make_shared<const LSumTable>(p); });
    return *p.ell_cache->table;
}

}  // namespace

double r_of_s(double s, const MixturePriors& priors) {
    if (!priors.has_uniform_priors())
        throw std::invalid_argument("r_of_s: closed form requires uniform priors");
    return inner_r(s, priors);
}

double ell(double z, const MixturePriors& priors, EllMode mode) {
    if (!(z > priors.s_min())) return 0.0;
    if (mode == EllMode::quadrature) return ell_quadrature(z, priors);
    return table_for(priors).value(z, priors);
}

double sum_ell(const Eigen::VectorXd& path, const MixturePriors& priors) {
    const LSumTable& table = table_for(priors);
    std::vector<double> values(path.size());
    for (Eigen::Index i = 0; i < path.size(); ++i)
        values[i] = table.value(path[i], priors);
    return pairwise_sum(values);
}

double likelihood_ratio(const Eigen::VectorXd& path, const MixturePriors& priors) {
    const double sum = sum_ell(path, priors);
    if (!(sum > 0.0))
        throw ZeroMixtureMassError("likelihood_ratio: all l(f_i) are zero");
    const double ratio = static_cast<double>(path.size()) / sum;
    if (!std::isfinite(ratio))
        throw ZeroMixtureMassError("likelihood_ratio: mixture mass underflow");
    return ratio;
}

TiltedSample sample_under_q(const DiscretizedField& field,
                            const MixturePriors& priors, Rng& rng) {
    TiltedSample out;
    out.varsigma = priors.g.sample(rng, priors.i2);
    out.nu = priors.h.sample(rng, priors.i1);
    out.tau = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(field.size())));
    const double c = (priors.b - out.nu) / out.varsigma;
    const double x = sample_truncated_std_normal(c, rng);
    out.path = field.conditional_given_point(out.tau, x, rng);
    return out;
}

WeightedSample make_weighted_sample(const DiscretizedField& field,
                                    const MixturePriors& priors, Rng& rng) {
    TiltedSample tilted = sample_under_q(field, priors, rng);
    WeightedSample ws;
    ws.sum_ell = sum_ell(tilted.path, priors);
    ws.path = std::move(tilted.path);
    return ws;
}

namespace {

bool exceeds(const TrendOnLattice& tv, const Eigen::VectorXd& path, double b) {
    for (Eigen::Index i = 0; i < path.size(); ++i)
        if (tv.sigma[i] * path[i] + tv.mu[i] > b) return true;
    return false;
}

Replicate weigh(const WeightedSample& ws, const TrendOnLattice& tv, double b) {
    Replicate rep;
    rep.indicator = exceeds(tv, ws.path, b);
    if (ws.sum_ell > 0.0) {
        const double ratio = static_cast<double>(ws.path.size()) / ws.sum_ell;
        if (!std::isfinite(ratio)) {
            if (rep.indicator)
                throw ZeroMixtureMassError("replicate: mixture mass underflow");
        } else {
            rep.weight = ratio;
        }
    } else if (rep.indicator) {
        throw ZeroMixtureMassError("replicate: all l(f_i) are zero on an exceeding path");
    }
    rep.value = rep.indicator ? rep.weight : 0.0;
    return rep;
}

}  // namespace

Replicate replicate_uniform(const DiscretizedField& field, const TrendModel& trend,
                            const MixturePriors& priors, Rng& rng) {
    const TrendOnLattice tv = evaluate_on(trend, field.lattice());
    if (!satisfies_class(tv, priors.bounds))
        throw ClassViolationError("replicate_uniform: trend outside the declared class");
    const WeightedSample ws = make_weighted_sample(field, priors, rng);
    return weigh(ws, tv, priors.b);
}

std::vector<EstimateSummary> evaluate_many_trends(
    std::span<const WeightedSample> samples, std::span<const TrendModel> trends,
    const LatticeDomain& lattice, const MixturePriors& priors) {
    std::vector<TrendOnLattice> tvs;
    tvs.reserve(trends.size());
    for (const TrendModel& trend : trends) {
        TrendOnLattice tv = evaluate_on(trend, lattice);
        if (!satisfies_class(tv, priors.bounds))
            throw ClassViolationError(
                "evaluate_many_trends: trend outside the declared class");
        tvs.push_back(std::move(tv));
    }

    std::vector<EstimateSummary> out;
    out.reserve(trends.size());
    std::vector<double> values(samples.size());
    for (const TrendOnLattice& tv : tvs) {
        for (size_t i = 0; i < samples.size(); ++i)
            values[i] = weigh(samples[i], tv, priors.b).value;
        out.push_back(summarize(values));
    }
    return out;
}

}  // namespace gfis
