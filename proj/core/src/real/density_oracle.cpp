#include "esl/real/density_oracle.hpp"

#include <algorithm>
#include <cmath>

namespace esl::real {
namespace {

constexpr double kRootTolerance = 1e-12;

double horner(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

std::vector<double> derivative(const std::vector<double>& c) {
  std::vector<double> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<double>(i));
  return d;
}

void trim(std::vector<double>& c) {
  while (!c.empty() && c.back() == 0.0) c.pop_back();
}

double bisect(const std::vector<double>& c, double a, double b) {
  double fa = horner(c, a);
  while (b - a > kRootTolerance) {
    const double mid = 0.5 * (a + b);
    const double fm = horner(c, mid);
    if (fm == 0.0) return mid;
    if ((fm < 0) == (fa < 0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::vector<double> real_roots(const std::vector<double>& coeffs_in, double lo, double hi) {
  std::vector<double> c = coeffs_in;
  trim(c);
  if (c.empty()) throw DomainError("real_roots: zero polynomial");
  std::vector<double> roots;
  if (c.size() == 1) return roots;
  if (c.size() == 2) {
    const double r = -c[0] / c[1];
    if (r >= lo && r <= hi) roots.push_back(r);
    return roots;
  }
  // Between consecutive critical points the polynomial is monotone.
  std::vector<double> cuts{lo};
  for (double r : real_roots(derivative(c), lo, hi))
    if (r > cuts.back()) cuts.push_back(r);
  if (hi > cuts.back()) cuts.push_back(hi);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    const double fa = horner(c, a), fb = horner(c, b);
    if (fa == 0.0) {
      if (roots.empty() || roots.back() != a) roots.push_back(a);
    } else if (fb != 0.0 && (fa < 0) != (fb < 0)) {
      roots.push_back(bisect(c, a, b));
    }
  }
  if (horner(c, hi) == 0.0 && (roots.empty() || roots.back() != hi)) roots.push_back(hi);
  return roots;
}

double density_oracle_equidim_1d(const PolyMap& map, double y, const SampleConfig& cfg) {
  if (map.source_dimension() != 1 || map.target_dimension() != 1)
    throw DimensionMismatch("density oracle needs a univariate map");
  const SourceSampler sampler(cfg, 1);
  std::vector<double> c;
  for (const auto& [e, coef] : map.component(0).terms()) {
    const std::size_t d = e[0];
    if (c.size() <= d) c.resize(d + 1, 0.0);
    c[d] += coef.to_double();
  }
  if (c.empty()) c.push_back(0.0);
  c[0] -= y;
  trim(c);
  if (c.empty()) throw CriticalValue("map is constant and equal to y");
  const std::vector<double> dc = derivative(c);
  double scale = 0.0;
  for (double v : dc) scale = std::max(scale, std::fabs(v));

  double g = 0.0;
  for (double r : real_roots(c, sampler.lo(0), sampler.hi(0))) {
    const double slope = std::fabs(horner(dc, r));
    if (slope <= 1e-9 * std::max(scale, 1.0))
      throw CriticalValue("y = " + std::to_string(y) + " is a critical value (preimage " +
                          std::to_string(r) + ")");
    const double x[1] = {r};
    g += sampler.density(x) / slope;
  }
  return g;
}

}  // namespace esl::real
