#pragma once

#include "gfis/rng.hpp"

namespace gfis {

// Standard normal survival probability together with its natural log. The two
// members are computed independently so that log_value stays finite and
// accurate far beyond the underflow point of value.
struct TailValue {
    double value;
    double log_value;
};

// Survival function of the standard normal, P(X > x).
// Relative error <= ~2 ulp via erfc for moderate x; log_value is accurate to
// better than 1e-12 relative out to x = 40 (asymptotic Mills series branch).
TailValue phi_bar(double x);

// log P(X <= x); equals phi_bar(-x).log_value.
double log_phi(double x);

// Standard normal density.
double norm_pdf(double x);

// Inverse of the standard normal CDF on (0,1). Wichura's PPND16 (AS 241),
// accurate to ~1e-15 relative over the full representable range.
double inv_phi(double p);

// Inverse survival function, Phi_bar^{-1}(q) = -inv_phi(q).
double inv_phi_bar(double q);

double sample_std_normal(Rng& rng);

// Exact draw from a standard normal conditioned on X > c. Inverse-CDF for
// c < 1, shifted-exponential rejection (Robert 1995) for c >= 1; the rejection
// count stays bounded for arbitrarily large c. The result is always > c.
double sample_truncated_std_normal(double c, Rng& rng);

}  // namespace gfis
