#pragma once

#include <vector>

#include "evoalg/algebra.hpp"
#include "evoalg/radical.hpp"

namespace evoalg {

/// Block decomposition of the structure matrix induced by a basis ideal S:
/// reorder the basis as (S ascending, complement ascending) and the matrix
/// takes the shape
///
///     [ M_ideal     0        ]
///     [ X           M_quot   ]
///
/// The upper-right block vanishes exactly because S is closed under
/// first-generation descendants. `quotient_algebra` carries the complement
/// labels decorated with '~'.
struct QuotientDecomposition {
  EvolutionAlgebra ideal_algebra;
  EvolutionAlgebra quotient_algebra;
  /// Coupling block X: rows follow the complement, columns the ideal.
  std::vector<std::vector<Rational>> coupling;
  /// Original indices in the reordered position: S ascending, then the rest.
  std::vector<int> permutation;
};

/// Splits along a basis ideal. Throws InputError("not an ideal") when S is
/// not closed under descendants.
QuotientDecomposition split_by_ideal(const EvolutionAlgebra& alg, const IndexSet& s);

/// Splits along the absorption radical and verifies that the ideal and
/// quotient graphs are the corresponding full subgraphs of the associated
/// graph.
QuotientDecomposition quotient_by_radical(const EvolutionAlgebra& alg);

}  // namespace evoalg
