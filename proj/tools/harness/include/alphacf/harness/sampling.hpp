#pragma once

#include <random>

#include "alphacf/cf_core.hpp"
#include "alphacf/numkit.hpp"

namespace alphacf::harness {

using Rng = std::mt19937_64;

// Quadratic surd (a + b sqrt(d))/c reduced into (0, alpha] by normalize().
ExactNumber random_surd(Rng& rng, const Alpha& alpha);
// Uniform prec-bit point Float in (0, alpha).
ExactNumber random_float(Rng& rng, const Alpha& alpha, Precision prec);
// p/q in [0, 1/2] with q drawn below 2^63.
ExactNumber random_rational_half(Rng& rng);

}  // namespace alphacf::harness
