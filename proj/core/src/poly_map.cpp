#include "esl/poly_map.hpp"

#include <cstdint>
#include <unordered_map>

#include "esl/error.hpp"

namespace esl {

PolyMap::PolyMap(std::vector<Polynomial> components) : components_(std::move(components)) {
  if (components_.empty()) throw DimensionMismatch("a map needs at least one component");
  n_ = components_.front().dimension();
  for (const auto& c : components_)
    if (c.dimension() != n_) throw DimensionMismatch("components live in different dimensions");
  if (n_ < components_.size())
    throw DimensionMismatch("source dimension " + std::to_string(n_) +
                            " is smaller than target dimension " +
                            std::to_string(components_.size()));
}

PolyMap PolyMap::identity(std::size_t n) {
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < n; ++i) comps.push_back(Polynomial::variable(n, i));
  return PolyMap(std::move(comps));
}

std::vector<Rational> PolyMap::evaluate(std::span<const Rational> point) const {
  std::vector<Rational> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(c.evaluate(point));
  return out;
}

std::vector<double> PolyMap::evaluate(std::span<const double> point) const {
  std::vector<double> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(c.evaluate(point));
  return out;
}

bool PolyMap::has_integer_coefficients() const {
  for (const auto& c : components_)
    for (const auto& [e, v] : c.terms())
      if (!v.is_integer()) return false;
  return true;
}

PolyMatrix jacobian_matrix(const PolyMap& map) {
  PolyMatrix jac;
  for (const auto& c : map.components()) {
    std::vector<Polynomial> row;
    for (std::size_t i = 0; i < map.source_dimension(); ++i)
      row.push_back(partial_derivative(c, i));
    jac.push_back(std::move(row));
  }
  return jac;
}

namespace {

// Expansion along rows; memoised on the set of still-unused columns.
class CofactorExpansion {
 public:
  CofactorExpansion(const PolyMatrix& m, std::vector<std::size_t> cols)
      : m_(m), cols_(std::move(cols)) {}

  Polynomial run() { return expand(0, (std::uint64_t{1} << cols_.size()) - 1); }

 private:
  Polynomial expand(std::size_t row, std::uint64_t mask) {
    const std::size_t n = m_.front().front().dimension();
    if (row == m_.size()) return Polynomial::constant(n, Rational(1));
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    Polynomial acc(n);
    int sign = 1;
    for (std::size_t k = 0; k < cols_.size(); ++k) {
      if (!(mask & (std::uint64_t{1} << k))) continue;
      const Polynomial& entry = m_[row][cols_[k]];
      if (!entry.is_zero()) {
        Polynomial sub = expand(row + 1, mask & ~(std::uint64_t{1} << k));
        if (!sub.is_zero()) {
          if (sign > 0)
            acc += entry * sub;
          else
            acc -= entry * sub;
        }
      }
      sign = -sign;
    }
    memo_.emplace(mask, acc);
    return acc;
  }

  const PolyMatrix& m_;
  std::vector<std::size_t> cols_;
  std::unordered_map<std::uint64_t, Polynomial> memo_;
};

Polynomial minor(const PolyMatrix& m, const std::vector<std::size_t>& cols) {
  return CofactorExpansion(m, cols).run();
}

}  // namespace

Polynomial determinant(const PolyMatrix& matrix) {
  if (matrix.empty() || matrix.size() != matrix.front().size())
    throw DimensionMismatch("determinant of a non-square matrix");
  if (matrix.size() > 63) throw DomainError("matrix too large for cofactor expansion");
  std::vector<std::size_t> cols(matrix.size());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return minor(matrix, cols);
}

std::vector<Polynomial> jacobian_minors(const PolyMap& map) {
  const std::size_t n = map.source_dimension();
  const std::size_t m = map.target_dimension();
  if (n < m) throw DimensionMismatch("jacobian minors need n >= m");
  const PolyMatrix jac = jacobian_matrix(map);

  std::vector<Polynomial> out;
  std::vector<std::size_t> cols(m);
  for (std::size_t i = 0; i < m; ++i) cols[i] = i;
  while (true) {
    out.push_back(minor(jac, cols));
    // Next m-subset of {0..n-1} in lexicographic order.
    std::size_t i = m;
    while (i > 0 && cols[i - 1] == n - m + i - 1) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (std::size_t j = i; j < m; ++j) cols[j] = cols[j - 1] + 1;
  }
  return out;
}

std::vector<Polynomial> jacobian_ideal_generators(const PolyMap& map) {
  std::vector<Polynomial> gens;
  for (auto& p : jacobian_minors(map))
    if (!p.is_zero()) gens.push_back(std::move(p));
  if (gens.empty()) throw NotLocallyDominant();
  return gens;
}

PolyMap shift_to_origin(const PolyMap& map, std::span<const Rational> x0) {
  const std::size_t n = map.source_dimension();
  if (x0.size() != n) throw DimensionMismatch("base point has the wrong dimension");
  std::vector<Polynomial> shifted;
  for (std::size_t i = 0; i < n; ++i)
    shifted.push_back(Polynomial::variable(n, i) + Polynomial::constant(n, x0[i]));
  const auto base = map.evaluate(x0);
  std::vector<Polynomial> comps;
  for (std::size_t j = 0; j < map.target_dimension(); ++j)
    comps.push_back(map.component(j).compose(shifted) - Polynomial::constant(n, base[j]));
  return PolyMap(std::move(comps));
}

}  // namespace esl
