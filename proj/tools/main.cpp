// evoalg command line: structural invariants of evolution algebras given by
// a structure matrix document. See README for the formats.

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "evoalg/evoalg.hpp"

namespace {

using evoalg::EvolutionAlgebra;
using evoalg::IndexSet;
using nlohmann::json;

// CLI index lists are 1-based numbers or labels; internal indices 0-based.
IndexSet parse_index_list(const EvolutionAlgebra& alg, const std::string& arg) {
  IndexSet out;
  std::size_t start = 0;
  while (start <= arg.size()) {
    std::size_t comma = arg.find(',', start);
    if (comma == std::string::npos) comma = arg.size();
    std::string token = arg.substr(start, comma - start);
    start = comma + 1;

    const auto b = token.find_first_not_of(" \t");
    if (b == std::string::npos) continue;  // empty token, e.g. --ideal ""
    const auto e = token.find_last_not_of(" \t");
    token = token.substr(b, e - b + 1);

    const auto& labels = alg.labels();
    const auto hit = std::find(labels.begin(), labels.end(), token);
    if (hit != labels.end()) {
      out.insert(static_cast<int>(hit - labels.begin()));
      continue;
    }
    if (!token.empty() && token.find_first_not_of("0123456789") == std::string::npos) {
      const long v = std::stol(token);
      if (v < 1 || v > alg.dim()) {
        throw evoalg::InputError("basis index " + token + " out of range 1.." +
                                 std::to_string(alg.dim()));
      }
      out.insert(static_cast<int>(v - 1));
      continue;
    }
    throw evoalg::InputError("unknown basis element \"" + token + "\"");
  }
  return out;
}

std::string label_list(const EvolutionAlgebra& alg, const IndexSet& s) {
  std::string out;
  for (int i : s) {
    if (!out.empty()) out += ", ";
    out += alg.label(i);
  }
  return out;
}

json index_set_json(const EvolutionAlgebra& alg, const IndexSet& s) {
  json indices = json::array(), labels = json::array();
  for (int i : s) {
    indices.push_back(i + 1);
    labels.push_back(alg.label(i));
  }
  return json{{"indices", std::move(indices)}, {"labels", std::move(labels)}};
}

json matrix_json(const std::vector<std::vector<evoalg::Rational>>& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& q : row) r.push_back(q.str());
    rows.push_back(std::move(r));
  }
  return rows;
}

json algebra_matrix_json(const EvolutionAlgebra& alg) {
  json rows = json::array();
  for (int i = 0; i < alg.dim(); ++i) {
    json r = json::array();
    for (const auto& q : alg.row(i)) r.push_back(q.str());
    rows.push_back(std::move(r));
  }
  return rows;
}

void print_matrix(std::ostream& os, const std::vector<std::vector<evoalg::Rational>>& m) {
  for (const auto& row : m) {
    std::string line;
    for (const auto& q : row) {
      if (!line.empty()) line += ' ';
      line += q.str();
    }
    os << line << "\n";
  }
}

void print_algebra_matrix(std::ostream& os, const EvolutionAlgebra& alg) {
  for (int i = 0; i < alg.dim(); ++i) {
    std::string line;
    for (const auto& q : alg.row(i)) {
      if (!line.empty()) line += ' ';
      line += q.str();
    }
    os << line << "\n";
  }
}

int run_graph(const EvolutionAlgebra& alg, bool dot, bool as_json) {
  const evoalg::DiGraph g = evoalg::from_algebra(alg);
  if (dot) {
    std::cout << evoalg::emit_dot(g, alg.labels());
    return 0;
  }
  if (as_json) {
    json adj = json::array();
    for (int i = 0; i < g.size(); ++i) {
      json row = json::array();
      for (int k = 0; k < g.size(); ++k) row.push_back(g.edge(i, k) ? 1 : 0);
      adj.push_back(std::move(row));
    }
    std::cout << json{{"n", g.size()}, {"labels", alg.labels()}, {"adjacency", std::move(adj)}}
              << "\n";
    return 0;
  }
  std::cout << "n = " << g.size() << "\n";
  std::string labels;
  for (const auto& l : alg.labels()) {
    if (!labels.empty()) labels += ' ';
    labels += l;
  }
  std::cout << "labels: " << labels << "\n";
  for (int i = 0; i < g.size(); ++i) {
    std::string line;
    for (int k = 0; k < g.size(); ++k) {
      if (!line.empty()) line += ' ';
      line += g.edge(i, k) ? '1' : '0';
    }
    std::cout << line << "\n";
  }
  return 0;
}

int run_radical(const EvolutionAlgebra& alg, bool verify, bool as_json) {
  const evoalg::RadicalReport report = evoalg::radical_report(alg);

  json verify_doc;
  if (verify) {
    const evoalg::OracleReport oracle = evoalg::oracle_report(alg);
    const bool radical_ok = oracle.radical_by_intersection == report.radical.indices;
    const bool series_ok =
        oracle.annihilator_series_by_quotient == evoalg::lambda_strict_prefix(report.lambda_chain);
    const bool acyclic_ok = oracle.acyclicity_by_matrix_power ==
                            (static_cast<int>(report.radical.indices.size()) == alg.dim());
    if (!radical_ok || !series_ok || !acyclic_ok) {
      throw evoalg::InternalError("internal: oracle disagrees with the main algorithms");
    }
    verify_doc = json{{"radical_by_intersection", radical_ok},
                      {"series_by_quotient", series_ok},
                      {"acyclicity_by_matrix_power", acyclic_ok}};
  }

  if (as_json) {
    json doc{{"radical", index_set_json(alg, report.radical.indices)},
             {"asi", report.lambda_chain.asi}};
    if (verify) doc["verify"] = verify_doc;
    std::cout << doc << "\n";
    return 0;
  }
  std::cout << "rad = span{" << label_list(alg, report.radical.indices) << "}";
  std::cout << "; asi = " << report.lambda_chain.asi << "\n";
  if (verify) {
    std::cout << "verify: radical-by-intersection agrees\n";
    std::cout << "verify: series-by-quotient agrees\n";
    std::cout << "verify: acyclicity-by-matrix-power agrees\n";
  }
  return 0;
}

int run_series(const EvolutionAlgebra& alg, bool as_json) {
  const evoalg::LambdaChain lc = evoalg::lambda_chain(alg);
  if (as_json) {
    json chain = json::array();
    for (const auto& s : lc.chain) {
      json entry = index_set_json(alg, s);
      entry["dim"] = s.size();
      chain.push_back(std::move(entry));
    }
    std::cout << json{{"chain", std::move(chain)}, {"asi", lc.asi}} << "\n";
    return 0;
  }
  for (std::size_t k = 0; k < lc.chain.size(); ++k) {
    std::cout << "lambda_" << k + 1 << " = {" << label_list(alg, lc.chain[k]) << "} (dim "
              << lc.chain[k].size() << ")\n";
  }
  std::cout << "asi = " << lc.asi << "\n";
  return 0;
}

int run_type(const EvolutionAlgebra& alg, bool as_json) {
  const evoalg::RadicalReport report = evoalg::radical_report(alg);
  if (as_json) {
    json doc{{"nilpotent", report.nilpotent_type.has_value()}};
    doc["type"] = report.nilpotent_type ? json(*report.nilpotent_type) : json(nullptr);
    std::cout << doc << "\n";
    return 0;
  }
  if (!report.nilpotent_type) {
    std::cout << "not nilpotent\n";
    return 0;
  }
  std::string entries;
  for (int n : *report.nilpotent_type) {
    if (!entries.empty()) entries += ", ";
    entries += std::to_string(n);
  }
  std::cout << "type = [" << entries << "]\n";
  return 0;
}

int run_quotient(const EvolutionAlgebra& alg, const std::string& ideal_arg, bool ideal_given,
                 bool as_json) {
  IndexSet s;
  evoalg::QuotientDecomposition split =
      ideal_given ? evoalg::split_by_ideal(alg, s = parse_index_list(alg, ideal_arg))
                  : evoalg::quotient_by_radical(alg);
  if (!ideal_given) {
    for (int i = 0; i < split.ideal_algebra.dim(); ++i) s.insert(split.permutation[i]);
  }

  if (as_json) {
    json perm = json::array();
    for (int p : split.permutation) perm.push_back(p + 1);
    std::cout << json{{"ideal", index_set_json(alg, s)},
                      {"permutation", std::move(perm)},
                      {"ideal_matrix", algebra_matrix_json(split.ideal_algebra)},
                      {"coupling", matrix_json(split.coupling)},
                      {"quotient_matrix", algebra_matrix_json(split.quotient_algebra)},
                      {"quotient_labels", split.quotient_algebra.labels()}}
              << "\n";
    return 0;
  }
  std::cout << "ideal = {" << label_list(alg, s) << "}\n";
  std::string perm;
  for (int p : split.permutation) {
    if (!perm.empty()) perm += ", ";
    perm += std::to_string(p + 1);
  }
  std::cout << "permutation = [" << perm << "]\n";
  std::cout << "M_B' =\n";
  print_algebra_matrix(std::cout, split.ideal_algebra);
  std::cout << "X =\n";
  print_matrix(std::cout, split.coupling);
  std::cout << "M_Bbar =\n";
  print_algebra_matrix(std::cout, split.quotient_algebra);
  std::string qlabels;
  for (const auto& l : split.quotient_algebra.labels()) {
    if (!qlabels.empty()) qlabels += ' ';
    qlabels += l;
  }
  std::cout << "quotient labels: " << qlabels << "\n";
  return 0;
}

int run_decompose(const EvolutionAlgebra& alg, bool as_json) {
  const evoalg::DecompositionVerdict verdict = evoalg::decide(alg);
  if (as_json) {
    json doc{{"verdict", evoalg::to_string(verdict.verdict)}, {"rule", verdict.rule}};
    doc["witness"] = verdict.witness
                         ? json{{"left", index_set_json(alg, verdict.witness->first)},
                                {"right", index_set_json(alg, verdict.witness->second)}}
                         : json(nullptr);
    std::cout << doc << "\n";
    return 0;
  }
  std::cout << "verdict = " << evoalg::to_string(verdict.verdict) << "\n";
  std::cout << "rule = " << verdict.rule << "\n";
  if (verdict.witness) {
    std::cout << "witness: I = {" << label_list(alg, verdict.witness->first) << "}, J = {"
              << label_list(alg, verdict.witness->second) << "}\n";
  }
  return 0;
}

int run_check_ideal(const EvolutionAlgebra& alg, const std::string& ideal_arg, bool as_json) {
  const IndexSet s = parse_index_list(alg, ideal_arg);
  const bool ideal = evoalg::is_basis_ideal(alg, s);
  std::optional<bool> absorption, nilpotent;
  if (ideal) {
    absorption = evoalg::has_absorption(alg, s);
    nilpotent = evoalg::nilpotent_ideal_in_radical(alg, s);
  }
  if (as_json) {
    json doc{{"is_ideal", ideal}};
    doc["has_absorption"] = absorption ? json(*absorption) : json(nullptr);
    doc["nilpotent"] = nilpotent ? json(*nilpotent) : json(nullptr);
    std::cout << doc << "\n";
    return 0;
  }
  const auto show = [](const std::optional<bool>& v) {
    return v ? (*v ? "true" : "false") : "n/a";
  };
  std::cout << "is-ideal = " << (ideal ? "true" : "false") << "\n";
  std::cout << "has-absorption = " << show(absorption) << "\n";
  std::cout << "nilpotent = " << show(nilpotent) << "\n";
  return 0;
}

int run_nilpotent(const EvolutionAlgebra& alg, bool as_json) {
  const bool nilpotent = evoalg::is_nilpotent(alg);
  if (as_json) {
    std::cout << json{{"nilpotent", nilpotent}} << "\n";
    return 0;
  }
  std::cout << (nilpotent ? "true" : "false") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structural invariants of finite-dimensional evolution algebras"};
  app.require_subcommand(1);

  std::string file, ideal_arg;
  bool as_json = false, dot = false, verify = false;
  std::function<int(const EvolutionAlgebra&)> action;

  const auto add = [&](const std::string& name, const std::string& desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->add_option("file", file, "algebra document (JSON)")->required();
    cmd->add_flag("--json", as_json, "machine-readable output");
    return cmd;
  };

  CLI::App* graph = add("graph", "print the associated graph");
  graph->add_flag("--dot", dot, "emit Graphviz DOT");
  graph->callback([&] { action = [&](const EvolutionAlgebra& a) { return run_graph(a, dot, as_json); }; });

  CLI::App* radical = add("radical", "absorption radical and stabilizing index");
  radical->add_flag("--verify", verify, "cross-check against the brute-force oracles");
  radical->callback([&] { action = [&](const EvolutionAlgebra& a) { return run_radical(a, verify, as_json); }; });

  add("series", "upper annihilating series")->callback([&] {
    action = [&](const EvolutionAlgebra& a) { return run_series(a, as_json); };
  });

  add("type", "nilpotent type, when the algebra is nilpotent")->callback([&] {
    action = [&](const EvolutionAlgebra& a) { return run_type(a, as_json); };
  });

  CLI::App* quotient = add("quotient", "block split along a basis ideal (default: the radical)");
  quotient->add_option("--ideal", ideal_arg, "comma-separated 1-based indices or labels");
  quotient->callback([&] {
    const bool given = quotient->count("--ideal") > 0;
    action = [&, given](const EvolutionAlgebra& a) { return run_quotient(a, ideal_arg, given, as_json); };
  });

  add("decompose", "decomposability verdict with witness or rule")->callback([&] {
    action = [&](const EvolutionAlgebra& a) { return run_decompose(a, as_json); };
  });

  CLI::App* check = add("check-ideal", "ideal/absorption/nilpotency flags of a basis subset");
  check->add_option("--ideal", ideal_arg, "comma-separated 1-based indices or labels")->required();
  check->callback([&] {
    action = [&](const EvolutionAlgebra& a) { return run_check_ideal(a, ideal_arg, as_json); };
  });

  add("nilpotent", "is the algebra nilpotent?")->callback([&] {
    action = [&](const EvolutionAlgebra& a) { return run_nilpotent(a, as_json); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    return action(evoalg::load_algebra_file(file));
  } catch (const evoalg::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const evoalg::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
