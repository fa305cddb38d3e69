#include "evoalg/radical.hpp"

#include <algorithm>

namespace evoalg {

namespace {

bool subset_of(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void check_subset_of_basis(const EvolutionAlgebra& alg, const IndexSet& s) {
  for (int i : s) {
    if (i < 0 || i >= alg.dim()) throw InputError("basis index out of range");
  }
}

}  // namespace

LambdaChain lambda_chain(const EvolutionAlgebra& alg) {
  const int n = alg.dim();
  LambdaChain out;
  IndexSet prev;  // lambda_0 = ∅
  for (;;) {
    IndexSet next;
    for (int i = 0; i < n; ++i) {
      if (subset_of(alg.square_support(i), prev)) next.insert(i);
    }
    out.chain.push_back(next);
    if (next == prev) break;  // first repeat recorded, asi already counted
    prev = std::move(next);
    ++out.asi;
  }
  return out;
}

std::vector<IndexSet> lambda_strict_prefix(const LambdaChain& lc) {
  return {lc.chain.begin(), lc.chain.begin() + lc.asi};
}

BasisIdeal upper_annihilator(const EvolutionAlgebra& alg, int i) {
  if (i < 0) throw InputError("annihilator series index must be >= 0");
  const LambdaChain lc = lambda_chain(alg);
  BasisIdeal out;
  out.is_ideal = true;
  out.has_absorption = i >= lc.asi;  // stabilized entries are the radical
  if (i == 0) return out;
  const auto pos = std::min<std::size_t>(static_cast<std::size_t>(i), lc.chain.size());
  out.indices = lc.chain[pos - 1];
  return out;
}

BasisIdeal absorption_radical_series(const EvolutionAlgebra& alg) {
  BasisIdeal out;
  out.indices = lambda_chain(alg).chain.back();
  out.is_ideal = true;
  out.has_absorption = true;
  return out;
}

BasisIdeal absorption_radical_graph(const EvolutionAlgebra& alg) {
  BasisIdeal out;
  out.indices = classify_vertices(from_algebra(alg)).acyclic;
  out.is_ideal = true;
  out.has_absorption = true;
  return out;
}

bool is_basis_ideal(const EvolutionAlgebra& alg, const IndexSet& s) {
  check_subset_of_basis(alg, s);
  return std::all_of(s.begin(), s.end(), [&](int i) {
    return subset_of(alg.square_support(i), s);
  });
}

bool has_absorption(const EvolutionAlgebra& alg, const IndexSet& s) {
  if (!is_basis_ideal(alg, s)) throw InputError("not an ideal");
  for (int j = 0; j < alg.dim(); ++j) {
    if (s.count(j)) continue;
    if (subset_of(alg.square_support(j), s)) return false;
  }
  return true;
}

bool nilpotent_ideal_in_radical(const EvolutionAlgebra& alg, const IndexSet& s) {
  if (!is_basis_ideal(alg, s)) throw InputError("not an ideal");
  const bool by_subgraph = is_acyclic(full_subgraph(from_algebra(alg), s));
  const bool by_containment = subset_of(s, absorption_radical_graph(alg).indices);
  if (by_subgraph != by_containment) {
    throw InternalError("internal: nilpotency of ideal disagrees with radical containment");
  }
  return by_subgraph;
}

bool is_nilpotent(const EvolutionAlgebra& alg) {
  return is_acyclic(from_algebra(alg));
}

bool radical_equals_annihilator(const EvolutionAlgebra& alg) {
  const VertexClassification cls = classify_vertices(from_algebra(alg));
  bool all_outside_cyclic = true;
  for (int i = 0; i < alg.dim(); ++i) {
    if (!alg.row_is_zero(i) && !cls.cyclic.count(i)) {
      all_outside_cyclic = false;
      break;
    }
  }
  const bool sets_equal =
      absorption_radical_graph(alg).indices == annihilator(alg).indices;
  if (all_outside_cyclic != sets_equal) {
    throw InternalError("internal: cyclic-vertex criterion disagrees with radical/annihilator equality");
  }
  return all_outside_cyclic;
}

RadicalReport radical_report(const EvolutionAlgebra& alg) {
  RadicalReport report;
  report.lambda_chain = lambda_chain(alg);
  report.acyclic_vertices = classify_vertices(from_algebra(alg)).acyclic;

  const IndexSet& by_series = report.lambda_chain.chain.back();
  if (by_series != report.acyclic_vertices) {
    throw InternalError("internal: radical algorithms disagree");
  }

  report.radical.indices = by_series;
  report.radical.is_ideal = true;
  report.radical.has_absorption = true;

  if (static_cast<int>(by_series.size()) == alg.dim()) {
    std::vector<int> type;
    std::size_t prev_size = 0;
    for (int k = 1; k <= report.lambda_chain.asi; ++k) {
      const std::size_t size = report.lambda_chain.chain[k - 1].size();
      type.push_back(static_cast<int>(size - prev_size));
      prev_size = size;
    }
    report.nilpotent_type = std::move(type);
  }
  return report;
}

}  // namespace evoalg
