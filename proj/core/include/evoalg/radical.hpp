#pragma once

#include <optional>
#include <vector>

#include "evoalg/algebra.hpp"
#include "evoalg/digraph.hpp"

namespace evoalg {

/// The increasing index chain lambda_1 ⊆ lambda_2 ⊆ ... behind the upper
/// annihilating series, recorded up to and including the first repeated set.
/// `asi` is the annihilator stabilizing index: the least q >= 0 with
/// lambda_q = lambda_{q+1}, taking lambda_0 = ∅. asi <= dim always.
struct LambdaChain {
  std::vector<IndexSet> chain;
  int asi = 0;
};

/// The strictly increasing part lambda_1 .. lambda_asi, i.e. the recorded
/// chain without the repeated final entry.
std::vector<IndexSet> lambda_strict_prefix(const LambdaChain& lc);

/// Everything the radical computation establishes in one pass. The radical
/// index set, the last chain entry and the acyclic vertices are equal by
/// theorem; radical_report checks that agreement at runtime.
struct RadicalReport {
  LambdaChain lambda_chain;
  BasisIdeal radical;
  IndexSet acyclic_vertices;
  /// Dimension increments of the upper annihilating series; present iff the
  /// algebra is nilpotent (radical = whole index set).
  std::optional<std::vector<int>> nilpotent_type;
};

/// lambda_1 = zero rows; lambda_k = { i : D^1(i) ⊆ lambda_{k-1} }, iterated
/// to the fixpoint.
LambdaChain lambda_chain(const EvolutionAlgebra& alg);

/// ann^(i), i.e. lambda_i, with lambda_0 = ∅ and lambda_i = lambda_asi for
/// i past stabilization. Requires i >= 0.
BasisIdeal upper_annihilator(const EvolutionAlgebra& alg, int i);

/// The absorption radical via the annihilating-series fixpoint.
BasisIdeal absorption_radical_series(const EvolutionAlgebra& alg);

/// The absorption radical as the acyclic vertices of the associated graph.
BasisIdeal absorption_radical_graph(const EvolutionAlgebra& alg);

/// True iff span{e_i : i in S} is an ideal: S closed under first-generation
/// descendants.
bool is_basis_ideal(const EvolutionAlgebra& alg, const IndexSet& s);

/// Absorption criterion for a basis ideal: no j outside S has D^1(j) ⊆ S.
/// A sink outside S therefore breaks absorption (its empty descendant set is
/// contained in S). Throws InputError("not an ideal") when S is not closed.
bool has_absorption(const EvolutionAlgebra& alg, const IndexSet& s);

/// For a basis ideal S: true iff the induced subgraph on S is acyclic,
/// which happens exactly when S is contained in the radical. Both routes are
/// evaluated and must agree. Throws InputError("not an ideal") when S is not
/// closed.
bool nilpotent_ideal_in_radical(const EvolutionAlgebra& alg, const IndexSet& s);

/// True iff the associated graph has no cycles (equivalently the radical is
/// the whole algebra).
bool is_nilpotent(const EvolutionAlgebra& alg);

/// True iff every vertex outside lambda_1 is cyclic; cross-checked against
/// direct equality of the radical and annihilator index sets.
bool radical_equals_annihilator(const EvolutionAlgebra& alg);

/// Runs both radical algorithms, verifies they agree, and computes the
/// nilpotent type when applicable. Throws InternalError("internal: radical
/// algorithms disagree") on mismatch.
RadicalReport radical_report(const EvolutionAlgebra& alg);

}  // namespace evoalg
