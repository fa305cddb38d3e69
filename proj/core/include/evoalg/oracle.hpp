#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "evoalg/algebra.hpp"
#include "evoalg/digraph.hpp"

namespace evoalg {

/// Brute-force ground truth at small dimension. Every field is computed by
/// an algorithm sharing no code with the main path it validates; used by the
/// test suites and the CLI --verify mode.
struct OracleReport {
  IndexSet radical_by_intersection;
  std::vector<IndexSet> annihilator_series_by_quotient;
  bool acyclicity_by_matrix_power = false;
  std::optional<std::pair<IndexSet, IndexSet>> basis_split_found;
};

/// Subset enumeration is 2^dim; calls above this cap are refused.
inline constexpr int kOracleDimensionCap = 16;

/// The radical by definition: the intersection of every basis subset that is
/// closed under descendants and satisfies the absorption criterion. The
/// closure and absorption checks run on bitmasks over the zero-pattern,
/// independent of the main predicates. Throws InputError above the cap.
IndexSet oracle_radical_intersection(const EvolutionAlgebra& alg);

/// The upper annihilating series by repeated quotients: scan the current
/// quotient for zero rows, lift them to original indices, quotient them away
/// and repeat until no annihilator remains. Returns the cumulative index
/// sets, which must match the strictly increasing part of the lambda chain.
std::vector<IndexSet> oracle_series_by_quotient(const EvolutionAlgebra& alg);

/// Exhaustive search for a basis-aligned two-sided split: a bipartition of
/// the basis with both parts nonempty and closed under descendants. Returns
/// the first find in ascending bitmask order, or nothing.
std::optional<std::pair<IndexSet, IndexSet>> oracle_basis_split(const EvolutionAlgebra& alg);

/// Acyclicity by literal boolean matrix power: true iff P^n = 0.
bool oracle_acyclicity(const DiGraph& g);

/// Runs all four oracles on one algebra.
OracleReport oracle_report(const EvolutionAlgebra& alg);

}  // namespace evoalg
