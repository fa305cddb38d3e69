#pragma once

#include <random>
#include <vector>

#include "evoalg/algebra.hpp"
#include "evoalg/digraph.hpp"

namespace evoalg::testsupport {

struct Density {
  double row_zero;  // probability that a whole row is zeroed
  double entry;     // probability that an entry of a surviving row is nonzero
};

/// Random structure matrix: rows zero with probability row_zero, otherwise
/// entries nonzero with probability entry, values uniform in {-3..3}\{0}.
inline EvolutionAlgebra random_algebra(std::mt19937& rng, int dim, const Density& d) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> value(1, 6);
  std::vector<std::vector<Rational>> matrix(dim, std::vector<Rational>(dim));
  for (int i = 0; i < dim; ++i) {
    if (coin(rng) < d.row_zero) continue;
    for (int k = 0; k < dim; ++k) {
      if (coin(rng) < d.entry) {
        const int v = value(rng);
        matrix[i][k] = Rational(v <= 3 ? v : 3 - v);  // 1,2,3,-1,-2,-3
      }
    }
  }
  return EvolutionAlgebra(std::move(matrix));
}

/// Deterministic corpus: `count` instances per dimension in [dim_lo, dim_hi],
/// densities cycling over a fixed schedule, one fixed seed per (dim, t).
template <class F>
inline void for_corpus(int dim_lo, int dim_hi, int count, F&& fn) {
  static constexpr double kEntry[] = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  static constexpr double kRowZero[] = {0.1, 0.2, 0.3, 0.4, 0.5};
  for (int dim = dim_lo; dim <= dim_hi; ++dim) {
    for (int t = 0; t < count; ++t) {
      std::mt19937 rng(0x5eed0000u + static_cast<unsigned>(dim) * 10007u +
                       static_cast<unsigned>(t));
      const Density d{kRowZero[t % 5], kEntry[t % 9]};
      fn(random_algebra(rng, dim, d), dim, t);
    }
  }
}

inline DiGraph random_graph(std::mt19937& rng, int n, double edge_prob) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  DiGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (coin(rng) < edge_prob) g.add_edge(i, k);
    }
  }
  return g;
}

/// Sparse element with small rational coordinates.
inline Element random_element(std::mt19937& rng, int dim) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Rational> coords(dim);
  for (int i = 0; i < dim; ++i) {
    if (coin(rng) < 0.4) coords[i] = Rational(num(rng), den(rng));
  }
  return Element(std::move(coords));
}

inline Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  return Rational(num(rng), den(rng));
}

}  // namespace evoalg::testsupport
