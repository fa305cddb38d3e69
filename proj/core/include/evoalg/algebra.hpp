#pragma once

#include <set>
#include <string>
#include <vector>

#include "evoalg/rational.hpp"

namespace evoalg {

/// Sorted set of 0-based basis/vertex indices.
using IndexSet = std::set<int>;

/// Default basis labels "e1".."en".
std::vector<std::string> default_labels(int dim);

/// The span of a subset of the natural basis. The flags are certificates
/// established by whichever operation produced the value; false means
/// "not certified here", not "known false". Basis-aligned subspaces always
/// have the extension property by construction.
struct BasisIdeal {
  IndexSet indices;
  bool is_ideal = false;
  bool has_absorption = false;
  bool extension_by_construction = true;
};

/// A finite-dimensional evolution algebra relative to a fixed natural basis:
/// pairwise products of distinct basis elements vanish and the square of the
/// i-th basis element expands along row i of the structure matrix.
///
/// Immutable after construction. Dimension 0 is a legal value (the zero
/// algebra on an empty basis), which keeps quotient construction total.
class EvolutionAlgebra {
 public:
  EvolutionAlgebra() = default;

  /// `matrix` must be square; `labels` empty (defaulted) or dim distinct
  /// strings. Throws InputError otherwise.
  explicit EvolutionAlgebra(std::vector<std::vector<Rational>> matrix,
                            std::vector<std::string> labels = {});

  int dim() const { return static_cast<int>(matrix_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const;

  /// Coefficient of e_k in the expansion of e_i^2.
  const Rational& entry(int i, int k) const;
  const std::vector<Rational>& row(int i) const;

  bool row_is_zero(int i) const;

  /// Support of e_i^2, i.e. the first-generation descendants of i as read
  /// off the structure matrix.
  IndexSet square_support(int i) const;

  bool operator==(const EvolutionAlgebra& other) const {
    return matrix_ == other.matrix_ && labels_ == other.labels_;
  }

 private:
  void check_index(int i) const;

  std::vector<std::vector<Rational>> matrix_;
  std::vector<std::string> labels_;
};

/// An element written in the natural basis: a coordinate vector.
class Element {
 public:
  explicit Element(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  static Element zero(int dim);
  static Element basis(int dim, int i);

  int dim() const { return static_cast<int>(coords_.size()); }
  const Rational& operator[](int i) const { return coords_.at(i); }

  bool is_zero() const;
  IndexSet support() const;

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Rational& scalar, const Element& x);
  bool operator==(const Element&) const = default;

 private:
  std::vector<Rational> coords_;
};

/// Product in the algebra: z_k = sum_i x_i y_i w_ik. Commutative by
/// construction. Throws InputError("dimension mismatch") if x or y does not
/// conform to alg.
Element multiply(const EvolutionAlgebra& alg, const Element& x, const Element& y);

/// Indices of the nonzero coordinates of x.
IndexSet support(const Element& x);

/// ann(A) = span of the basis elements whose square is zero (the zero rows
/// of the structure matrix). Always an ideal.
BasisIdeal annihilator(const EvolutionAlgebra& alg);

}  // namespace evoalg
