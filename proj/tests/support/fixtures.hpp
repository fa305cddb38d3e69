#pragma once

#include <vector>

#include "evoalg/algebra.hpp"

namespace evoalg::testsupport {

/// Algebra from integer structure constants, default labels.
inline EvolutionAlgebra make_algebra(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> matrix;
  matrix.reserve(rows.size());
  for (const auto& r : rows) matrix.emplace_back(r.begin(), r.end());
  return EvolutionAlgebra(std::move(matrix));
}

/// e1^2=0, e2^2=e1 next to the 3-cycle e3^2=e4, e4^2=e5, e5^2=e3. The graph
/// has two weak components {1,2} and {3,4,5}; radical = span{e1,e2}, asi 2.
inline EvolutionAlgebra two_component_algebra() {
  return make_algebra({{0, 0, 0, 0, 0},
                       {1, 0, 0, 0, 0},
                       {0, 0, 0, 1, 0},
                       {0, 0, 0, 0, 1},
                       {0, 0, 1, 0, 0}});
}

/// Same shape but the cycle feeds the tail: e3^2=e2+e4, so the graph is
/// weakly connected. Radical = span{e1,e2} as well.
inline EvolutionAlgebra tailed_cycle_algebra() {
  return make_algebra({{0, 0, 0, 0, 0},
                       {1, 0, 0, 0, 0},
                       {0, 1, 0, 1, 0},
                       {0, 0, 0, 0, 1},
                       {0, 0, 1, 0, 0}});
}

/// e1^2 = e2^2 = e2+e3 and e3^2 = -(e2+e3). Non-degenerate, every vertex
/// cyclic, radical zero; (e2+e3)^2 = 0 although nothing lies in the radical.
inline EvolutionAlgebra nondegenerate_triple() {
  return make_algebra({{0, 1, 1}, {0, 1, 1}, {0, -1, -1}});
}

inline EvolutionAlgebra zero_algebra(int n) {
  return EvolutionAlgebra(std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
}

/// e1^2 = 0 and e_i^2 = e_{i-1} for i = 2..k: the annihilating series grows
/// by one index per step.
inline EvolutionAlgebra chain_algebra(int k) {
  std::vector<std::vector<Rational>> matrix(k, std::vector<Rational>(k));
  for (int i = 1; i < k; ++i) matrix[i][i - 1] = Rational(1);
  return EvolutionAlgebra(std::move(matrix));
}

inline EvolutionAlgebra self_loop_algebra() {
  return make_algebra({{1}});
}

}  // namespace evoalg::testsupport
