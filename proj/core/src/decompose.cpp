#include "evoalg/decompose.hpp"

#include "evoalg/digraph.hpp"
#include "evoalg/quotient.hpp"
#include "evoalg/radical.hpp"

namespace evoalg {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Decomposable: return "Decomposable";
    case Verdict::Indecomposable: return "Indecomposable";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

DecompositionVerdict decide(const EvolutionAlgebra& alg) {
  const int n = alg.dim();
  if (n == 0) {
    // No nonzero ideals exist, so no splitting is possible.
    return {Verdict::Indecomposable, std::nullopt, "zero-dimensional"};
  }

  const DiGraph graph = from_algebra(alg);
  const auto components = weak_components(graph);
  if (components.size() > 1) {
    IndexSet rest;
    for (std::size_t c = 1; c < components.size(); ++c) {
      rest.insert(components[c].begin(), components[c].end());
    }
    return {Verdict::Decomposable,
            std::make_pair(components.front(), std::move(rest)),
            "disconnected-graph"};
  }

  const IndexSet ann = annihilator(alg).indices;
  if (ann.empty()) {
    return {Verdict::Indecomposable, std::nullopt, "nondegenerate-connected"};
  }

  const IndexSet rad = absorption_radical_graph(alg).indices;
  const bool nilpotent = static_cast<int>(rad.size()) == n;
  if (nilpotent && ann.size() == 1) {
    return {Verdict::Indecomposable, std::nullopt, "nilpotent-dim-ann-1"};
  }

  if (!nilpotent) {  // radical proper and nonempty (the algebra is degenerate)
    const QuotientDecomposition split = split_by_ideal(alg, rad);
    if (is_connected(from_algebra(split.quotient_algebra)) &&
        decide(split.ideal_algebra).verdict == Verdict::Indecomposable) {
      return {Verdict::Indecomposable, std::nullopt,
              "radical-indecomposable-quotient-connected"};
    }
  }

  return {Verdict::Unknown, std::nullopt, "none"};
}

bool complement_not_ideal_check(const EvolutionAlgebra& alg) {
  const int n = alg.dim();
  if (n == 0 || annihilator(alg).indices.empty()) throw InputError("preconditions unmet");
  const IndexSet rad = absorption_radical_graph(alg).indices;
  if (static_cast<int>(rad.size()) == n || !is_connected(from_algebra(alg))) {
    throw InputError("preconditions unmet");
  }

  for (int j = 0; j < n; ++j) {
    if (rad.count(j)) continue;
    for (int k : alg.square_support(j)) {
      if (rad.count(k)) return true;  // e_j^2 leaks into the radical
    }
  }
  // A connected graph with a proper radical always has a crossing edge.
  throw InternalError("internal: no crossing vertex found for a connected graph");
}

}  // namespace evoalg
