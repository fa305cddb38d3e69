#include "evoalg/algebra.hpp"

#include <algorithm>
#include <unordered_set>

namespace evoalg {

std::vector<std::string> default_labels(int dim) {
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (int i = 1; i <= dim; ++i) labels.push_back("e" + std::to_string(i));
  return labels;
}

EvolutionAlgebra::EvolutionAlgebra(std::vector<std::vector<Rational>> matrix,
                                   std::vector<std::string> labels)
    : matrix_(std::move(matrix)), labels_(std::move(labels)) {
  const auto n = matrix_.size();
  for (const auto& row : matrix_) {
    if (row.size() != n) throw InputError("non-square structure matrix");
  }
  if (labels_.empty()) {
    labels_ = default_labels(static_cast<int>(n));
  } else if (labels_.size() != n) {
    throw InputError("labels length does not match dimension");
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw InputError("duplicate labels: \"" + l + "\"");
  }
}

void EvolutionAlgebra::check_index(int i) const {
  if (i < 0 || i >= dim()) throw InputError("basis index out of range");
}

const std::string& EvolutionAlgebra::label(int i) const {
  check_index(i);
  return labels_[i];
}

const Rational& EvolutionAlgebra::entry(int i, int k) const {
  check_index(i);
  check_index(k);
  return matrix_[i][k];
}

const std::vector<Rational>& EvolutionAlgebra::row(int i) const {
  check_index(i);
  return matrix_[i];
}

bool EvolutionAlgebra::row_is_zero(int i) const {
  check_index(i);
  return std::all_of(matrix_[i].begin(), matrix_[i].end(),
                     [](const Rational& q) { return q.is_zero(); });
}

IndexSet EvolutionAlgebra::square_support(int i) const {
  check_index(i);
  IndexSet out;
  for (int k = 0; k < dim(); ++k) {
    if (!matrix_[i][k].is_zero()) out.insert(k);
  }
  return out;
}

Element Element::zero(int dim) {
  return Element(std::vector<Rational>(dim));
}

Element Element::basis(int dim, int i) {
  std::vector<Rational> coords(dim);
  coords.at(i) = Rational(1);
  return Element(std::move(coords));
}

bool Element::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rational& q) { return q.is_zero(); });
}

IndexSet Element::support() const {
  IndexSet out;
  for (int i = 0; i < dim(); ++i) {
    if (!coords_[i].is_zero()) out.insert(i);
  }
  return out;
}

Element operator+(const Element& a, const Element& b) {
  if (a.dim() != b.dim()) throw InputError("dimension mismatch");
  std::vector<Rational> coords(a.coords_);
  for (int i = 0; i < b.dim(); ++i) coords[i] += b.coords_[i];
  return Element(std::move(coords));
}

Element operator-(const Element& a, const Element& b) {
  if (a.dim() != b.dim()) throw InputError("dimension mismatch");
  std::vector<Rational> coords(a.coords_);
  for (int i = 0; i < b.dim(); ++i) coords[i] -= b.coords_[i];
  return Element(std::move(coords));
}

Element operator*(const Rational& scalar, const Element& x) {
  std::vector<Rational> coords(x.coords_);
  for (auto& c : coords) c *= scalar;
  return Element(std::move(coords));
}

Element multiply(const EvolutionAlgebra& alg, const Element& x, const Element& y) {
  const int n = alg.dim();
  if (x.dim() != n || y.dim() != n) throw InputError("dimension mismatch");
  std::vector<Rational> coords(n);
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero() || y[i].is_zero()) continue;
    const Rational weight = x[i] * y[i];
    const auto& row = alg.row(i);
    for (int k = 0; k < n; ++k) {
      if (!row[k].is_zero()) coords[k] += weight * row[k];
    }
  }
  return Element(std::move(coords));
}

IndexSet support(const Element& x) {
  return x.support();
}

BasisIdeal annihilator(const EvolutionAlgebra& alg) {
  BasisIdeal out;
  out.is_ideal = true;
  for (int i = 0; i < alg.dim(); ++i) {
    if (alg.row_is_zero(i)) out.indices.insert(i);
  }
  return out;
}

}  // namespace evoalg
