#include "evoalg/quotient.hpp"

#include "evoalg/digraph.hpp"

namespace evoalg {

QuotientDecomposition split_by_ideal(const EvolutionAlgebra& alg, const IndexSet& s) {
  if (!is_basis_ideal(alg, s)) throw InputError("not an ideal");

  std::vector<int> ideal_order(s.begin(), s.end());
  std::vector<int> rest_order;
  for (int i = 0; i < alg.dim(); ++i) {
    if (!s.count(i)) rest_order.push_back(i);
  }

  const auto block = [&alg](const std::vector<int>& rows, const std::vector<int>& cols) {
    std::vector<std::vector<Rational>> out(rows.size());
    for (std::size_t a = 0; a < rows.size(); ++a) {
      out[a].reserve(cols.size());
      for (int j : cols) out[a].push_back(alg.entry(rows[a], j));
    }
    return out;
  };

  std::vector<std::string> ideal_labels, quotient_labels;
  for (int i : ideal_order) ideal_labels.push_back(alg.label(i));
  for (int i : rest_order) quotient_labels.push_back("~" + alg.label(i));

  QuotientDecomposition out;
  out.ideal_algebra = EvolutionAlgebra(block(ideal_order, ideal_order), std::move(ideal_labels));
  out.quotient_algebra = EvolutionAlgebra(block(rest_order, rest_order), std::move(quotient_labels));
  out.coupling = block(rest_order, ideal_order);
  out.permutation = std::move(ideal_order);
  out.permutation.insert(out.permutation.end(), rest_order.begin(), rest_order.end());
  return out;
}

QuotientDecomposition quotient_by_radical(const EvolutionAlgebra& alg) {
  const IndexSet rad = absorption_radical_graph(alg).indices;
  QuotientDecomposition out = split_by_ideal(alg, rad);

  const DiGraph full = from_algebra(alg);
  IndexSet rest;
  for (int i = 0; i < alg.dim(); ++i) {
    if (!rad.count(i)) rest.insert(i);
  }
  if (from_algebra(out.ideal_algebra) != full_subgraph(full, rad) ||
      from_algebra(out.quotient_algebra) != full_subgraph(full, rest)) {
    throw InternalError("internal: split graphs are not full subgraphs of the associated graph");
  }
  return out;
}

}  // namespace evoalg
