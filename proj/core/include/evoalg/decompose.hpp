#pragma once

#include <optional>
#include <string>
#include <utility>

#include "evoalg/algebra.hpp"

namespace evoalg {

enum class Verdict { Decomposable, Indecomposable, Unknown };

const char* to_string(Verdict v);

/// Outcome of the decomposability decision procedure. A Decomposable verdict
/// always carries a witness: two disjoint nonempty basis-ideal index sets
/// covering the basis. An Indecomposable verdict names the rule that fired;
/// Unknown carries rule "none".
struct DecompositionVerdict {
  Verdict verdict = Verdict::Unknown;
  std::optional<std::pair<IndexSet, IndexSet>> witness;
  std::string rule = "none";
};

/// Applies the sufficient conditions in a fixed order:
///   1. disconnected associated graph        -> Decomposable ("disconnected-graph")
///   2. non-degenerate + connected           -> Indecomposable ("nondegenerate-connected")
///   3. nilpotent with dim ann = 1           -> Indecomposable ("nilpotent-dim-ann-1")
///   4. degenerate, both graphs connected,
///      radical subalgebra indecomposable    -> Indecomposable ("radical-indecomposable-quotient-connected")
///   5. otherwise                            -> Unknown
/// Rule 4 recurses on the radical viewed as a standalone algebra and is
/// skipped when the radical is the whole algebra (the quotient would be
/// empty and the recursion would not shrink).
DecompositionVerdict decide(const EvolutionAlgebra& alg);

/// Constructive check that the span of the non-radical basis elements is not
/// closed under multiplication: scans for a vertex outside the radical with
/// a descendant inside. Preconditions: degenerate, radical proper, connected
/// associated graph; throws InputError("preconditions unmet") otherwise.
bool complement_not_ideal_check(const EvolutionAlgebra& alg);

}  // namespace evoalg
