#pragma once

#include <cstddef>
#include <functional>
#include <string_view>

#include "circdiff/numerics.hpp"

namespace circdiff::detail {

// Trigonometric projection of a pointwise-evaluable periodic function. The node count
// starts at a power of two >= min_nodes and doubles until every mode in the trailing third
// of the spectrum is below 2e-15 (1 + max|f|) and the interpolant matches fresh midpoint
// samples to 1e-10. Throws BandwidthOverflow past kMaxProjectionGrid.
FourierSeries project_periodic(const std::function<double(double)>& f, std::size_t min_nodes,
                               std::string_view what);

// Sum of |a_n| + |b_n|.
double amplitude_bound(const std::vector<double>& cos, const std::vector<double>& sin);

}  // namespace circdiff::detail
