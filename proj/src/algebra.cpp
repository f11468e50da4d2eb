#include "sphpart/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sphpart {

AlgebraElement::AlgebraElement(const SetPartition2k& d, RationalPolynomial coefficient) : k_(d.k()) {
  add_term(d, coefficient);
}

RationalPolynomial AlgebraElement::coefficient(const SetPartition2k& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? RationalPolynomial() : it->second;
}

void AlgebraElement::add_term(const SetPartition2k& d, const RationalPolynomial& coefficient) {
  if (d.k() != k_) {
    throw std::invalid_argument("diagram with k = " + std::to_string(d.k()) + " added to element with k = " +
                                std::to_string(k_));
  }
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(d, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void AlgebraElement::require_same_k(const AlgebraElement& other) const {
  if (other.k_ != k_) {
    throw std::invalid_argument("algebra elements with k = " + std::to_string(k_) + " and " +
                                std::to_string(other.k_));
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  require_same_k(other);
  for (const auto& [d, c] : other.terms_) add_term(d, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  require_same_k(other);
  for (const auto& [d, c] : other.terms_) add_term(d, RationalPolynomial(-1) * c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const RationalPolynomial& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, c] : terms_) c *= scalar;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  a.require_same_k(b);
  AlgebraElement out(a.k());
  for (const auto& [da, ca] : a.terms()) {
    for (const auto& [db, cb] : b.terms()) {
      auto [d, loops] = compose_diagrams(da, db);
      RationalPolynomial c = ca * cb;
      if (loops > 0) c *= RationalPolynomial::monomial(loops);
      out.add_term(d, c);
    }
  }
  return out;
}

AlgebraElement symmetrizer(int k, int max_k) {
  if (k < 1) throw std::invalid_argument("symmetrizer: k must be positive");
  if (k > max_k) {
    throw std::invalid_argument("symmetrizer: k = " + std::to_string(k) + " exceeds the materialization bound " +
                                std::to_string(max_k));
  }
  const Rational weight = Rational(1) / Rational(factorial(k));
  AlgebraElement e(k);
  std::vector<int> images(k);
  std::iota(images.begin(), images.end(), 1);
  do {
    e.add_term(permutation_diagram(Permutation(images)), weight);
  } while (std::next_permutation(images.begin(), images.end()));
  return e;
}

std::vector<AlgebraElement> spherical_basis(int k, int max_k) {
  const AlgebraElement e = symmetrizer(k, max_k);
  std::vector<AlgebraElement> out;
  for (const auto& b : enumerate_bipartitions(k)) out.push_back(e * AlgebraElement(bipartition_diagram(b)) * e);
  return out;
}

SpecializedElement specialize(const AlgebraElement& a, const Rational& t) {
  SpecializedElement out;
  for (const auto& [d, c] : a.terms()) {
    Rational v = c.evaluate(t);
    if (v != 0) out.emplace(d, std::move(v));
  }
  return out;
}

int rank_of(const std::vector<SpecializedElement>& rows) {
  // Sparse rows over column indices; pivots kept in a map keyed by column.
  std::map<SetPartition2k, int> column_of;
  std::vector<std::map<int, Rational>> sparse;
  for (const auto& row : rows) {
    std::map<int, Rational> r;
    for (const auto& [d, v] : row) {
      auto [it, inserted] = column_of.try_emplace(d, static_cast<int>(column_of.size()));
      r.emplace(it->second, v);
    }
    sparse.push_back(std::move(r));
  }

  std::map<int, std::map<int, Rational>> pivots;  // pivot column -> normalized row
  for (auto& row : sparse) {
    while (!row.empty()) {
      auto lead = row.begin();
      auto pivot = pivots.find(lead->first);
      if (pivot == pivots.end()) {
        const Rational scale = lead->second;
        for (auto& [c, v] : row) v /= scale;
        const int col = lead->first;
        pivots.emplace(col, std::move(row));
        break;
      }
      const Rational factor = lead->second;
      for (const auto& [c, v] : pivot->second) {
        auto [it, inserted] = row.try_emplace(c, Rational(0));
        it->second -= factor * v;
        if (it->second == 0) row.erase(it);
      }
    }
  }
  return static_cast<int>(pivots.size());
}

int rank_at(const std::vector<AlgebraElement>& elements, const Rational& t) {
  if (!elements.empty()) {
    const int k = elements.front().k();
    for (const auto& el : elements) {
      if (el.k() != k) throw std::invalid_argument("rank_at: elements with different k");
    }
  }
  std::vector<SpecializedElement> rows;
  rows.reserve(elements.size());
  for (const auto& el : elements) rows.push_back(specialize(el, t));
  return rank_of(rows);
}

}  // namespace sphpart
