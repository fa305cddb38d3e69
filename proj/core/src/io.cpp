#include "evoalg/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace evoalg {

namespace {

using nlohmann::json;

std::string field(const std::string& name, int i, int k = -1) {
  std::string out = name + "[" + std::to_string(i) + "]";
  if (k >= 0) out += "[" + std::to_string(k) + "]";
  return out;
}

}  // namespace

EvolutionAlgebra parse_algebra(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("document must be a JSON object");

  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
    throw InputError("dim: expected a non-negative integer");
  }
  const long long dim_value = doc["dim"].get<long long>();
  if (dim_value < 0) throw InputError("dim: expected a non-negative integer");
  const int n = static_cast<int>(dim_value);

  if (!doc.contains("matrix") || !doc["matrix"].is_array()) {
    throw InputError("matrix: expected an array of rows");
  }
  const json& rows = doc["matrix"];
  if (static_cast<int>(rows.size()) != n) {
    throw InputError("non-square matrix: " + std::to_string(rows.size()) +
                     " rows for dim " + std::to_string(n));
  }

  std::vector<std::vector<Rational>> matrix(n);
  for (int i = 0; i < n; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw InputError("non-square matrix: " + field("matrix", i) + " must have " +
                       std::to_string(n) + " entries");
    }
    matrix[i].reserve(n);
    for (int k = 0; k < n; ++k) {
      if (!row[k].is_string()) {
        throw InputError(field("matrix", i, k) + ": expected a rational literal string");
      }
      try {
        matrix[i].push_back(Rational::parse(row[k].get<std::string>()));
      } catch (const InputError& e) {
        throw InputError(field("matrix", i, k) + ": " + e.what());
      }
    }
  }

  std::vector<std::string> labels;
  if (doc.contains("labels") && !doc["labels"].is_null()) {
    const json& raw = doc["labels"];
    if (!raw.is_array() || static_cast<int>(raw.size()) != n) {
      throw InputError("labels: expected an array of " + std::to_string(n) + " strings");
    }
    for (int i = 0; i < n; ++i) {
      if (!raw[i].is_string()) throw InputError(field("labels", i) + ": expected a string");
      labels.push_back(raw[i].get<std::string>());
    }
  }

  return EvolutionAlgebra(std::move(matrix), std::move(labels));
}

EvolutionAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_algebra(buffer.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string serialize_algebra(const EvolutionAlgebra& alg) {
  json doc;
  doc["dim"] = alg.dim();
  doc["labels"] = alg.labels();
  json rows = json::array();
  for (int i = 0; i < alg.dim(); ++i) {
    json row = json::array();
    for (const Rational& q : alg.row(i)) row.push_back(q.str());
    rows.push_back(std::move(row));
  }
  doc["matrix"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string emit_dot(const DiGraph& g, const std::vector<std::string>& labels) {
  if (static_cast<int>(labels.size()) != g.size()) {
    throw InputError("labels length does not match vertex count");
  }
  const auto quoted = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };

  std::string out = "digraph G {\n";
  for (int v = 0; v < g.size(); ++v) {
    out += "  " + quoted(labels[v]) + ";\n";
  }
  for (int i = 0; i < g.size(); ++i) {
    for (int k = 0; k < g.size(); ++k) {
      if (g.edge(i, k)) out += "  " + quoted(labels[i]) + " -> " + quoted(labels[k]) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace evoalg
