#ifndef HAHN_SELFTEST_GENERATORS_HPP
#define HAHN_SELFTEST_GENERATORS_HPP

// Seeded random generators for property tests. Everything is driven by an
// explicit std::mt19937_64 so runs are reproducible.

#include <cstdint>
#include <random>
#include <vector>

#include <hahn/euler.hpp>
#include <hahn/scalar.hpp>
#include <hahn/series.hpp>

namespace hahn::gen
{

using rng_t = std::mt19937_64;

long uniform_int(rng_t &rng, long lo, long hi);

// p/q with q in [1, max_den] and p/q in [lo, hi].
scalar rational(rng_t &rng, long lo, long hi, long max_den);
// Same, but never zero.
scalar nonzero_rational(rng_t &rng, long lo, long hi, long max_den);

// Float uniformly distributed in [lo, hi] at the context precision.
scalar real(rng_t &rng, double lo, double hi, const numeric_context &ctx);

struct series_shape {
    int min_terms = 1;
    int max_terms = 6;
    long exp_lo = -5;
    long exp_hi = 5;
    long exp_den = 4;
    long coeff_lo = -9;
    long coeff_hi = 9;
    long coeff_den = 3;
};

// Exact series with distinct rational exponents and nonzero coefficients.
series exact_series(rng_t &rng, const series_shape &shape);

// Like exact_series but with positive leading coefficient.
series positive_series(rng_t &rng, const series_shape &shape);

// Exact series, then every coefficient promoted to a float.
series float_coeff_series(rng_t &rng, const series_shape &shape, const numeric_context &ctx);

// Element of the valuation ring: exponents in [0, exp_hi].
series o_element(rng_t &rng, const series_shape &shape);

// Random class; dimension at most max_dim.
oclass oclass_value(rng_t &rng, std::uint32_t max_dim, std::int64_t chi_bound);

// Random nonzero class with top level exactly `top` (or random in [0, top]
// when exact_top is false).
lambda_class lambda_value(rng_t &rng, std::uint32_t top, std::uint32_t max_dim, std::int64_t chi_bound,
                          bool exact_top = true);

} // namespace hahn::gen

#endif
