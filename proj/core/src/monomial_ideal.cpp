#include "esl/monomial_ideal.hpp"

#include <algorithm>
#include <sstream>

#include "esl/error.hpp"

namespace esl {

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<ExponentVector> generators) : n_(n) {
  if (generators.empty()) throw DomainError("monomial ideal needs at least one generator");
  for (const auto& g : generators)
    if (g.size() != n) throw DimensionMismatch("generator length differs from ideal dimension");

  std::sort(generators.begin(), generators.end(), GrlexLess{});
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  // After the sort a divisor always precedes its multiples.
  for (const auto& g : generators) {
    const bool redundant = std::any_of(generators_.begin(), generators_.end(),
                                       [&](const ExponentVector& h) { return h.divides(g); });
    if (!redundant) generators_.push_back(g);
  }
}

bool MonomialIdeal::is_unit() const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [](const ExponentVector& g) { return g.is_zero(); });
}

std::string MonomialIdeal::str(const std::string& var_prefix) const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) os << ", ";
    os << Polynomial::term(generators_[i], Rational(1)).str(var_prefix);
  }
  os << ">";
  return os.str();
}

MonomialIdeal as_monomial_ideal(const std::vector<Polynomial>& generators) {
  if (generators.empty()) throw DomainError("empty generator list");
  std::vector<ExponentVector> exps;
  exps.reserve(generators.size());
  const std::size_t n = generators.front().dimension();
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].term_count() != 1) throw NotMonomial(i);
    if (generators[i].dimension() != n) throw DimensionMismatch("generators of mixed dimension");
    exps.push_back(generators[i].terms().begin()->first);
  }
  return MonomialIdeal(n, std::move(exps));
}

}  // namespace esl
