#include "evoalg/oracle.hpp"

#include <algorithm>
#include <cstdint>

#include "evoalg/quotient.hpp"

namespace evoalg {

namespace {

void check_cap(const EvolutionAlgebra& alg) {
  if (alg.dim() > kOracleDimensionCap) throw InputError("dimension too large for oracle");
}

// Nonzero pattern of each row as a bitmask: bit k of masks[i] is set iff
// the (i,k) structure constant is nonzero.
std::vector<std::uint32_t> row_masks(const EvolutionAlgebra& alg) {
  std::vector<std::uint32_t> masks(alg.dim(), 0);
  for (int i = 0; i < alg.dim(); ++i) {
    for (int k = 0; k < alg.dim(); ++k) {
      if (!alg.entry(i, k).is_zero()) masks[i] |= std::uint32_t{1} << k;
    }
  }
  return masks;
}

bool mask_closed(const std::vector<std::uint32_t>& masks, std::uint32_t s) {
  for (int i = 0; i < static_cast<int>(masks.size()); ++i) {
    if ((s >> i) & 1) {
      if (masks[i] & ~s) return false;
    }
  }
  return true;
}

bool mask_absorbs(const std::vector<std::uint32_t>& masks, std::uint32_t s) {
  for (int j = 0; j < static_cast<int>(masks.size()); ++j) {
    if ((s >> j) & 1) continue;
    if ((masks[j] & ~s) == 0) return false;  // D^1(j) ⊆ S, absorption fails
  }
  return true;
}

IndexSet mask_to_set(std::uint32_t mask, int n) {
  IndexSet out;
  for (int i = 0; i < n; ++i) {
    if ((mask >> i) & 1) out.insert(i);
  }
  return out;
}

}  // namespace

IndexSet oracle_radical_intersection(const EvolutionAlgebra& alg) {
  check_cap(alg);
  const int n = alg.dim();
  const auto masks = row_masks(alg);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::uint32_t acc = full;  // the whole basis always qualifies
  for (std::uint32_t s = 0; s < full; ++s) {
    if (mask_closed(masks, s) && mask_absorbs(masks, s)) acc &= s;
  }
  return mask_to_set(acc, n);
}

std::vector<IndexSet> oracle_series_by_quotient(const EvolutionAlgebra& alg) {
  check_cap(alg);
  std::vector<IndexSet> chain;
  IndexSet accumulated;
  std::vector<int> remaining(alg.dim());
  for (int i = 0; i < alg.dim(); ++i) remaining[i] = i;

  EvolutionAlgebra current = alg;
  for (;;) {
    IndexSet zero_rows;
    for (int i = 0; i < current.dim(); ++i) {
      if (current.row_is_zero(i)) zero_rows.insert(i);
    }
    if (zero_rows.empty()) break;

    for (int q : zero_rows) accumulated.insert(remaining[q]);
    chain.push_back(accumulated);

    std::vector<int> next_remaining;
    for (int q = 0; q < current.dim(); ++q) {
      if (!zero_rows.count(q)) next_remaining.push_back(remaining[q]);
    }
    remaining = std::move(next_remaining);
    current = split_by_ideal(current, zero_rows).quotient_algebra;
  }
  return chain;
}

std::optional<std::pair<IndexSet, IndexSet>> oracle_basis_split(const EvolutionAlgebra& alg) {
  check_cap(alg);
  const int n = alg.dim();
  if (n < 2) return std::nullopt;
  const auto masks = row_masks(alg);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t s = 1; s < full; ++s) {
    const std::uint32_t complement = full & ~s;
    if (mask_closed(masks, s) && mask_closed(masks, complement)) {
      return std::make_pair(mask_to_set(s, n), mask_to_set(complement, n));
    }
  }
  return std::nullopt;
}

bool oracle_acyclicity(const DiGraph& g) {
  const int n = g.size();
  if (n == 0) return true;

  using BoolMatrix = std::vector<std::vector<std::uint8_t>>;
  BoolMatrix p(n, std::vector<std::uint8_t>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) p[i][k] = g.edge(i, k) ? 1 : 0;
  }

  BoolMatrix power = p;
  for (int step = 1; step < n; ++step) {
    BoolMatrix next(n, std::vector<std::uint8_t>(n, 0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (!power[i][j]) continue;
        for (int k = 0; k < n; ++k) {
          if (p[j][k]) next[i][k] = 1;
        }
      }
    }
    power = std::move(next);
  }
  for (const auto& row : power) {
    if (std::any_of(row.begin(), row.end(), [](std::uint8_t b) { return b != 0; })) return false;
  }
  return true;
}

OracleReport oracle_report(const EvolutionAlgebra& alg) {
  OracleReport report;
  report.radical_by_intersection = oracle_radical_intersection(alg);
  report.annihilator_series_by_quotient = oracle_series_by_quotient(alg);
  report.acyclicity_by_matrix_power = oracle_acyclicity(from_algebra(alg));
  report.basis_split_found = oracle_basis_split(alg);
  return report;
}

}  // namespace evoalg
