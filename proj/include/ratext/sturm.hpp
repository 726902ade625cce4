#pragma once

#include "ratext/interval.hpp"
#include "ratext/poly.hpp"

namespace ratext {

/// Exact count of distinct real roots of p inside iv, honoring endpoint
/// openness; infinite ends use leading-coefficient sign limits. Multiple
/// roots count once (the Sturm chain is built on the square-free part).
/// p must be nonzero.
int sturm_count(const Poly& p, const Interval& iv);

}  // namespace ratext
