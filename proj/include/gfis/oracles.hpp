#pragma once

#include "gfis/field.hpp"
#include "gfis/trend.hpp"

namespace gfis {

// Ground-truth value with an explicit accuracy certificate, used by tests and
// the reproduction reports.
struct OracleValue {
    enum class Kind { closed_form, brute_force };

    double value = 0.0;
    Kind kind = Kind::closed_form;
    double certified_error = 0.0;
};

// P(max of M iid N(mu, sigma^2) > b) = 1 - Phi((b-mu)/sigma)^M, computed via
// expm1/log of the survival function so extreme tails keep full precision.
OracleValue oracle_iid_max(double sigma, double mu, double b, int m);

// Closed form for the cosine process X cos t + Y sin t on T = [0, 3/4]:
// phi_bar((b-mu)/sigma) + 3/(8 pi) exp(-(b-mu)^2 / (2 sigma^2)).
OracleValue oracle_cosine(double sigma, double mu, double b);

// Exceedance probability for M <= 3 lattice points by inclusion-exclusion
// over upper-orthant probabilities, each evaluated by composite
// Gauss-Legendre with a panel-halving (Richardson) certificate. No
// cancellation against 1, so tiny probabilities keep relative accuracy.
OracleValue brute_force_small(const DiscretizedField& field, const TrendModel& trend,
                              double b);

}  // namespace gfis
