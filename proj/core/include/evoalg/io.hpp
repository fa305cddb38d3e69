#pragma once

#include <string>
#include <vector>

#include "evoalg/algebra.hpp"
#include "evoalg/digraph.hpp"

namespace evoalg {

/// Parses an algebra document:
///
///   { "dim": 5,
///     "labels": ["e1", ...],            // optional, defaults to e1..en
///     "matrix": [["0","1","-2/3",...], ...] }
///
/// Matrix entries are rational literals as strings so no float ever touches
/// the structure constants. Throws InputError with a field path (or the JSON
/// line/column for syntax errors).
EvolutionAlgebra parse_algebra(const std::string& text);

/// parse_algebra on a file's contents; errors are prefixed with the path.
EvolutionAlgebra load_algebra_file(const std::string& path);

/// Canonical document for the algebra; parse(serialize(a)) == a.
std::string serialize_algebra(const EvolutionAlgebra& alg);

/// Deterministic Graphviz text: one node line per vertex in index order,
/// then one edge line per adjacency entry in row-major order. Byte-identical
/// across runs. `labels` must have one entry per vertex.
std::string emit_dot(const DiGraph& g, const std::vector<std::string>& labels);

}  // namespace evoalg
