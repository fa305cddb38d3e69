#include <doctest.h>

#include <algorithm>

#include "evoalg/oracle.hpp"
#include "evoalg/radical.hpp"
#include "support/fixtures.hpp"
#include "support/random_algebra.hpp"

using namespace evoalg;
using namespace evoalg::testsupport;

namespace {

bool subset(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

IndexSet all_indices(int n) {
  IndexSet s;
  for (int i = 0; i < n; ++i) s.insert(i);
  return s;
}

}  // namespace

TEST_CASE("lambda_chain on the worked examples") {
  const LambdaChain two = lambda_chain(two_component_algebra());
  CHECK(two.chain == std::vector<IndexSet>{{0}, {0, 1}, {0, 1}});
  CHECK(two.asi == 2);

  const LambdaChain zero = lambda_chain(zero_algebra(3));
  CHECK(zero.chain == std::vector<IndexSet>{{0, 1, 2}, {0, 1, 2}});
  CHECK(zero.asi == 1);

  const LambdaChain nondeg = lambda_chain(nondegenerate_triple());
  CHECK(nondeg.chain == std::vector<IndexSet>{{}});
  CHECK(nondeg.asi == 0);
}

TEST_CASE("upper_annihilator walks the chain") {
  const auto alg = two_component_algebra();
  CHECK(upper_annihilator(alg, 0).indices.empty());
  CHECK(upper_annihilator(alg, 1).indices == IndexSet{0});
  CHECK(upper_annihilator(alg, 2).indices == IndexSet{0, 1});
  CHECK(upper_annihilator(alg, 7).indices == IndexSet{0, 1});  // stabilized
  CHECK(upper_annihilator(alg, 1).is_ideal);
  CHECK_FALSE(upper_annihilator(alg, 1).has_absorption);
  CHECK(upper_annihilator(alg, 2).has_absorption);
  CHECK_THROWS_AS(upper_annihilator(alg, -1), InputError);
}

TEST_CASE("both radical algorithms on the worked examples") {
  CHECK(absorption_radical_series(two_component_algebra()).indices == IndexSet{0, 1});
  CHECK(absorption_radical_graph(two_component_algebra()).indices == IndexSet{0, 1});
  CHECK(absorption_radical_series(tailed_cycle_algebra()).indices == IndexSet{0, 1});
  CHECK(absorption_radical_graph(tailed_cycle_algebra()).indices == IndexSet{0, 1});
  CHECK(absorption_radical_series(zero_algebra(4)).indices == all_indices(4));
  CHECK(absorption_radical_graph(self_loop_algebra()).indices.empty());
  CHECK(absorption_radical_series(nondegenerate_triple()).indices.empty());

  const BasisIdeal rad = absorption_radical_graph(two_component_algebra());
  CHECK(rad.is_ideal);
  CHECK(rad.has_absorption);
  CHECK(rad.extension_by_construction);
}

TEST_CASE("is_basis_ideal") {
  const auto alg = two_component_algebra();
  CHECK(is_basis_ideal(alg, {0, 1}));
  CHECK(is_basis_ideal(alg, {}));
  CHECK_FALSE(is_basis_ideal(alg, {2}));  // D^1(2) = {3} leaks out
  CHECK(is_basis_ideal(alg, {2, 3, 4}));
  CHECK_THROWS_AS(is_basis_ideal(alg, {9}), InputError);
}

TEST_CASE("has_absorption") {
  const auto alg = two_component_algebra();
  CHECK(has_absorption(alg, {0, 1}));
  CHECK_FALSE(has_absorption(alg, {0}));  // D^1(1) = {0} sits inside
  CHECK(has_absorption(alg, all_indices(5)));
  CHECK_THROWS_WITH_AS(has_absorption(alg, {2}), doctest::Contains("not an ideal"),
                       InputError);

  // A sink outside S has empty descendants, and ∅ ⊆ S kills absorption.
  const auto zero = zero_algebra(2);
  CHECK(is_basis_ideal(zero, {0}));
  CHECK_FALSE(has_absorption(zero, {0}));
  // The zero ideal has absorption exactly when the algebra is non-degenerate.
  CHECK(has_absorption(nondegenerate_triple(), {}));
  CHECK_FALSE(has_absorption(zero, {}));
}

TEST_CASE("radical_report on the worked examples") {
  const RadicalReport two = radical_report(two_component_algebra());
  CHECK(two.radical.indices == IndexSet{0, 1});
  CHECK(two.acyclic_vertices == IndexSet{0, 1});
  CHECK(two.lambda_chain.asi == 2);
  CHECK_FALSE(two.nilpotent_type.has_value());

  const RadicalReport zero = radical_report(zero_algebra(3));
  CHECK(zero.radical.indices == all_indices(3));
  CHECK(zero.nilpotent_type == std::vector<int>{3});

  const RadicalReport chain = radical_report(chain_algebra(3));
  CHECK(chain.radical.indices == all_indices(3));
  CHECK(chain.lambda_chain.asi == 3);
  CHECK(chain.nilpotent_type == std::vector<int>{1, 1, 1});

  const RadicalReport empty = radical_report(EvolutionAlgebra());
  CHECK(empty.radical.indices.empty());
  CHECK(empty.nilpotent_type == std::vector<int>{});
}

TEST_CASE("is_nilpotent") {
  CHECK_FALSE(is_nilpotent(two_component_algebra()));
  CHECK(is_nilpotent(zero_algebra(3)));
  CHECK(is_nilpotent(chain_algebra(5)));
  CHECK_FALSE(is_nilpotent(self_loop_algebra()));
}

TEST_CASE("radical_equals_annihilator") {
  CHECK(radical_equals_annihilator(nondegenerate_triple()));  // both empty
  CHECK_FALSE(radical_equals_annihilator(two_component_algebra()));
  CHECK(radical_equals_annihilator(self_loop_algebra()));  // λ1 = ∅, loop cyclic
  CHECK(radical_equals_annihilator(zero_algebra(2)));
}

TEST_CASE("nilpotent_ideal_in_radical") {
  const auto alg = two_component_algebra();
  CHECK(nilpotent_ideal_in_radical(alg, {0, 1}));
  CHECK_FALSE(nilpotent_ideal_in_radical(alg, all_indices(5)));  // contains the cycle
  CHECK(nilpotent_ideal_in_radical(alg, {}));
  CHECK_THROWS_WITH_AS(nilpotent_ideal_in_radical(alg, {2}),
                       doctest::Contains("not an ideal"), InputError);
}

TEST_CASE("chain is monotone and the two radical algorithms always agree") {
  for_corpus(1, 10, 100, [&](const EvolutionAlgebra& alg, int dim, int) {
    const LambdaChain lc = lambda_chain(alg);
    for (std::size_t k = 1; k < lc.chain.size(); ++k) {
      CHECK(subset(lc.chain[k - 1], lc.chain[k]));
    }
    if (lc.chain.size() >= 2) {
      CHECK(lc.chain[lc.chain.size() - 2] == lc.chain.back());
    }
    CHECK(lc.asi <= dim);
    CHECK(static_cast<int>(lc.chain.size()) == std::max(lc.asi + 1, 1));
    CHECK(lc.chain.back() == absorption_radical_graph(alg).indices);
  });
}

TEST_CASE("radical is an absorption ideal, minimal among basis ideals") {
  for_corpus(1, 7, 60, [&](const EvolutionAlgebra& alg, int dim, int) {
    const IndexSet rad = absorption_radical_series(alg).indices;
    CHECK(is_basis_ideal(alg, rad));
    CHECK(has_absorption(alg, rad));

    // no proper subset of the radical is itself an absorption ideal
    const std::vector<int> members(rad.begin(), rad.end());
    const int m = static_cast<int>(members.size());
    if (m > 0 && m <= 12) {
      for (unsigned mask = 0; mask + 1 < (1u << m); ++mask) {
        IndexSet s;
        for (int b = 0; b < m; ++b) {
          if ((mask >> b) & 1) s.insert(members[b]);
        }
        const bool absorption_ideal = is_basis_ideal(alg, s) && has_absorption(alg, s);
        CHECK_FALSE(absorption_ideal);
      }
    }
    (void)dim;
  });
}

TEST_CASE("cycles avoid the radical; radical vertices reach a sink") {
  for_corpus(1, 7, 60, [&](const EvolutionAlgebra& alg, int dim, int) {
    const DiGraph g = from_algebra(alg);
    const IndexSet rad = absorption_radical_graph(alg).indices;
    const IndexSet lambda1 = annihilator(alg).indices;

    for (int v : classify_vertices(g).cyclic) CHECK_FALSE(rad.count(v));

    for (int i : rad) {
      if (lambda1.count(i)) continue;
      const IndexSet reach = descendants_all(g, i);
      const bool hits_sink = std::any_of(reach.begin(), reach.end(),
                                         [&](int j) { return lambda1.count(j) > 0; });
      CHECK(hits_sink);
    }

    // descendant containment pulls a vertex into the radical
    for (int j = 0; j < dim; ++j) {
      for (int n = 1; n <= dim; ++n) {
        if (subset(descendants_m(g, j, n), rad)) {
          CHECK(rad.count(j));
          break;
        }
      }
    }
  });
}

TEST_CASE("nilpotent type sums to the dimension") {
  for_corpus(1, 7, 60, [&](const EvolutionAlgebra& alg, int dim, int) {
    const RadicalReport report = radical_report(alg);
    if (!report.nilpotent_type) return;
    int sum = 0;
    for (int inc : *report.nilpotent_type) {
      CHECK(inc >= 1);
      sum += inc;
    }
    CHECK(sum == dim);
    CHECK(static_cast<int>(report.nilpotent_type->size()) == report.lambda_chain.asi);
  });
}
