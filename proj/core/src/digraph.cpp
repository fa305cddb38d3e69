#include "evoalg/digraph.hpp"

#include <algorithm>
#include <numeric>

namespace evoalg {

DiGraph::DiGraph(int n) : n_(n) {
  if (n < 0) throw InputError("vertex count must be non-negative");
  adj_.assign(static_cast<std::size_t>(n) * n, 0);
}

void DiGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw InputError("vertex out of range");
}

void DiGraph::add_edge(int from, int to) {
  check_vertex(from);
  check_vertex(to);
  adj_[static_cast<std::size_t>(from) * n_ + to] = 1;
}

bool DiGraph::edge(int from, int to) const {
  check_vertex(from);
  check_vertex(to);
  return adj_[static_cast<std::size_t>(from) * n_ + to] != 0;
}

std::vector<int> DiGraph::out_neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (int k = 0; k < n_; ++k) {
    if (adj_[static_cast<std::size_t>(v) * n_ + k]) out.push_back(k);
  }
  return out;
}

int DiGraph::edge_count() const {
  return static_cast<int>(std::count(adj_.begin(), adj_.end(), std::uint8_t{1}));
}

DiGraph from_algebra(const EvolutionAlgebra& alg) {
  DiGraph g(alg.dim());
  for (int i = 0; i < alg.dim(); ++i) {
    for (int k : alg.square_support(i)) g.add_edge(i, k);
  }
  return g;
}

namespace {

void check_subset(const DiGraph& g, const IndexSet& s) {
  for (int v : s) {
    if (v < 0 || v >= g.size()) throw InputError("vertex out of range");
  }
}

// Tarjan's algorithm; components come out in reverse topological order.
struct SccResult {
  std::vector<int> component;  // vertex -> component id
  int count = 0;
};

SccResult strongly_connected_components(const DiGraph& g) {
  const int n = g.size();
  SccResult res;
  res.component.assign(n, -1);
  std::vector<int> index(n, -1), lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int next_index = 0;

  auto dfs = [&](auto&& self, int v) -> void {
    index[v] = lowlink[v] = next_index++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int w : g.out_neighbors(v)) {
      if (index[w] == -1) {
        self(self, w);
        lowlink[v] = std::min(lowlink[v], lowlink[w]);
      } else if (on_stack[w]) {
        lowlink[v] = std::min(lowlink[v], index[w]);
      }
    }
    if (lowlink[v] == index[v]) {
      for (;;) {
        int w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        res.component[w] = res.count;
        if (w == v) break;
      }
      ++res.count;
    }
  };

  for (int v = 0; v < n; ++v) {
    if (index[v] == -1) dfs(dfs, v);
  }
  return res;
}

}  // namespace

IndexSet descendants_1(const DiGraph& g, const IndexSet& sources) {
  check_subset(g, sources);
  IndexSet out;
  for (int v : sources) {
    for (int w : g.out_neighbors(v)) out.insert(w);
  }
  return out;
}

IndexSet descendants_m(const DiGraph& g, int v, int m) {
  if (m < 1) throw InputError("descendant generation must be >= 1");
  IndexSet frontier{v};
  check_subset(g, frontier);
  for (int step = 0; step < m && !frontier.empty(); ++step) {
    frontier = descendants_1(g, frontier);
  }
  return frontier;
}

IndexSet descendants_all(const DiGraph& g, int v) {
  IndexSet seen = descendants_1(g, IndexSet{v});
  std::vector<int> todo(seen.begin(), seen.end());
  while (!todo.empty()) {
    int u = todo.back();
    todo.pop_back();
    for (int w : g.out_neighbors(u)) {
      if (seen.insert(w).second) todo.push_back(w);
    }
  }
  return seen;
}

VertexClassification classify_vertices(const DiGraph& g) {
  const int n = g.size();
  const SccResult scc = strongly_connected_components(g);

  std::vector<int> scc_size(scc.count, 0);
  for (int v = 0; v < n; ++v) ++scc_size[scc.component[v]];
  std::vector<bool> scc_cyclic(scc.count, false);
  for (int v = 0; v < n; ++v) {
    if (scc_size[scc.component[v]] > 1 || g.edge(v, v)) scc_cyclic[scc.component[v]] = true;
  }

  // A vertex outside every cycle only reaches strictly later SCCs, so the
  // memoized recursion below cannot revisit an in-progress vertex.
  std::vector<int> memo(n, -1);
  auto cyclic = [&](auto&& self, int v) -> bool {
    if (memo[v] != -1) return memo[v] == 1;
    if (scc_cyclic[scc.component[v]]) {
      memo[v] = 1;
      return true;
    }
    for (int w : g.out_neighbors(v)) {
      if (self(self, w)) {
        memo[v] = 1;
        return true;
      }
    }
    memo[v] = 0;
    return false;
  };

  VertexClassification out;
  for (int v = 0; v < n; ++v) {
    (cyclic(cyclic, v) ? out.cyclic : out.acyclic).insert(v);
  }
  return out;
}

std::vector<IndexSet> weak_components(const DiGraph& g) {
  const int n = g.size();
  std::vector<bool> seen(n, false);
  std::vector<IndexSet> components;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    IndexSet comp;
    std::vector<int> todo{start};
    seen[start] = true;
    while (!todo.empty()) {
      int v = todo.back();
      todo.pop_back();
      comp.insert(v);
      for (int w = 0; w < n; ++w) {
        if (!seen[w] && (g.edge(v, w) || g.edge(w, v))) {
          seen[w] = true;
          todo.push_back(w);
        }
      }
    }
    components.push_back(std::move(comp));
  }
  return components;
}

bool is_connected(const DiGraph& g) {
  if (g.size() < 1) throw InputError("connectivity requires at least one vertex");
  return weak_components(g).size() == 1;
}

DiGraph full_subgraph(const DiGraph& g, const IndexSet& vertices) {
  check_subset(g, vertices);
  const std::vector<int> order(vertices.begin(), vertices.end());
  DiGraph sub(static_cast<int>(order.size()));
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = 0; b < order.size(); ++b) {
      if (g.edge(order[a], order[b])) sub.add_edge(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return sub;
}

bool is_acyclic(const DiGraph& g) {
  return classify_vertices(g).cyclic.empty();
}

}  // namespace evoalg
