#include "gfis/gaussian.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gfis {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // log sqrt(2*pi)

// log Phi_bar via the Mills asymptotic series; valid for large x where erfc
// is already deep in the subnormal range. Series is alternating, truncation
// error below the first omitted term (~1e-16 at x = 30).
double log_phi_bar_asymptotic(double x) {
    const double ix2 = 1.0 / (x * x);
    double series = 1.0;
    double term = 1.0;
    for (int k = 1; k <= 7; ++k) {
        term *= -(2.0 * k - 1.0) * ix2;
        series += term;
    }
    return -0.5 * x * x - std::log(x) - kLogSqrt2Pi + std::log(series);
}

}  // namespace

TailValue phi_bar(double x) {
    if (std::isnan(x)) return {x, x};
    const double value = 0.5 * std::erfc(x / kSqrt2);
    double log_value;
    if (x <= 30.0) {
        // erfc(30/sqrt 2) ~ 5e-198, still a normal double: take the log directly.
        log_value = std::log(value);
    } else {
        log_value = log_phi_bar_asymptotic(x);
    }
    return {value, log_value};
}

double log_phi(double x) { return phi_bar(-x).log_value; }

double norm_pdf(double x) { return std::exp(-0.5 * x * x - kLogSqrt2Pi); }

// Wichura (1988), algorithm AS 241, PPND16.
double inv_phi(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("inv_phi: p must lie in (0,1)");

    static constexpr double a[8] = {
        3.3871328727963666080e0,  1.3314166789178437745e2,
        1.9715909503065514427e3,  1.3731693765509461125e4,
        4.5921953931549871457e4,  6.7265770927008700853e4,
        3.3430575583588128105e4,  2.5090809287301226727e3};
    static constexpr double b[8] = {
        1.0,                      4.2313330701600911252e1,
        6.8718700749205790830e2,  5.3941960214247511077e3,
        2.1213794301586595867e4,  3.9307895800092710610e4,
        2.8729085735721942674e4,  5.2264952788528545610e3};
    static constexpr double c[8] = {
        1.42343711074968357734e0,  4.63033784615654529590e0,
        5.76949722146069140550e0,  3.64784832476320460504e0,
        1.27045825245236838258e0,  2.41780725177450611770e-1,
        2.27238449892691845833e-2, 7.74545014278341407640e-4};
    static constexpr double d[8] = {
        1.0,                       2.05319162663775882187e0,
        1.67638483018380384940e0,  6.89767334985100004550e-1,
        1.48103976427480074590e-1, 1.51986665636164571966e-2,
        5.47593808499534494600e-4, 1.05075007164441684324e-9};
    static constexpr double e[8] = {
        6.65790464350110377720e0,  5.46378491116411436990e0,
        1.78482653991729133580e0,  2.96560571828504891230e-1,
        2.65321895265761230930e-2, 1.24266094738807843860e-3,
        2.71155556874348757815e-5, 2.01033439929228813265e-7};
    static constexpr double f[8] = {
        1.0,                       5.99832206555887937690e-1,
        1.36929880922735805310e-1, 1.48753612908506148525e-2,
        7.86869131145613259100e-4, 1.84631831751005468180e-5,
        1.42151175831644588870e-7, 2.04426310338993978564e-15};

    auto ratpoly = [](const double (&num)[8], const double (&den)[8], double r) {
        double n = num[7], m = den[7];
        for (int i = 6; i >= 0; --i) {
            n = n * r + num[i];
            m = m * r + den[i];
        }
        return n / m;
    };

    const double q = p - 0.5;
    if (std::fabs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q * ratpoly(a, b, r);
    }
    double r = (q < 0.0) ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double z;
    if (r <= 5.0) {
        z = ratpoly(c, d, r - 1.6);
    } else {
        z = ratpoly(e, f, r - 5.0);
    }
    return (q < 0.0) ? -z : z;
}

double inv_phi_bar(double q) { return -inv_phi(q); }

double sample_std_normal(Rng& rng) { return inv_phi(rng.next_double()); }

double sample_truncated_std_normal(double c, Rng& rng) {
    double x;
    if (c < 1.0) {
        // q = u * Phi_bar(c) stays well away from the underflow region here.
        const double tail = phi_bar(c).value;
        x = inv_phi_bar(rng.next_double() * tail);
    } else {
        // Robert's translated-exponential proposal with the optimal rate.
        const double alpha = 0.5 * (c + std::sqrt(c * c + 4.0));
        for (;;) {
            const double draw = c - std::log(rng.next_double()) / alpha;
            const double gap = draw - alpha;
            if (rng.next_double() <= std::exp(-0.5 * gap * gap)) {
                x = draw;
                break;
            }
        }
    }
    if (x <= c) x = std::nextafter(c, std::numeric_limits<double>::infinity());
    return x;
}

}  // namespace gfis
