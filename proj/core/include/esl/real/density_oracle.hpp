#pragma once

#include <vector>

#include "esl/error.hpp"
#include "esl/poly_map.hpp"
#include "esl/real/sampling.hpp"

namespace esl::real {

/// y is a critical value of the map inside the box; the density may be infinite there.
class CriticalValue : public Error {
 public:
  using Error::Error;
};

/// Real roots of sum coeffs[i] x^i on [lo, hi], ascending, each to within 1e-12.
std::vector<double> real_roots(const std::vector<double>& coeffs, double lo, double hi);

/// Pushforward density at y of a univariate map: the sum over preimages x
/// of source_density(x) / |f'(x)|. Throws CriticalValue when a preimage is critical.
double density_oracle_equidim_1d(const PolyMap& map, double y, const SampleConfig& cfg);

}  // namespace esl::real
