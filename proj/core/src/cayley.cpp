#include "pgdd/cayley.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace pgdd {

namespace {

char generator_letter(const PointGroup& group, int k) {
  if (k == static_cast<int>(group.generators.size())) return 'e';
  return group.generators[k].first.at(0);
}

int letter_index(const PointGroup& group, char c) {
  for (std::size_t k = 0; k < group.generators.size(); ++k)
    if (group.generators[k].first.at(0) == c) return static_cast<int>(k);
  if (c == 'e') return static_cast<int>(group.generators.size());
  throw std::invalid_argument(std::string("unknown generator letter '") + c + "'");
}

// Hierholzer on an explicit edge list; returns edge indices in cycle order
// starting from vertex `start`.  Edge-visit order follows out_edges, which
// build_cayley_graph keeps sorted, so the result is reproducible.
std::vector<int> hierholzer(const std::vector<CayleyEdge>& edges,
                            const std::vector<std::vector<int>>& out_edges, int num_vertices,
                            int start) {
  std::vector<std::size_t> next(num_vertices, 0);
  std::vector<std::pair<int, int>> stack;  // (vertex, edge used to arrive)
  std::vector<int> cycle;
  stack.emplace_back(start, -1);
  while (!stack.empty()) {
    auto [v, via] = stack.back();
    if (next[v] < out_edges[v].size()) {
      const int eid = out_edges[v][next[v]++];
      stack.emplace_back(edges[eid].to, eid);
    } else {
      stack.pop_back();
      if (via >= 0) cycle.push_back(via);
    }
  }
  std::reverse(cycle.begin(), cycle.end());
  if (cycle.size() != edges.size())
    throw std::runtime_error("eulerian_cycle: graph is not connected");
  return cycle;
}

}  // namespace

CayleyGraph build_cayley_graph(const PointGroup& group) {
  if (group.generators.empty())
    throw std::invalid_argument("build_cayley_graph: group has no generators");
  CayleyGraph g;
  g.group = &group;
  g.num_vertices = group.order();
  g.out_edges.resize(g.num_vertices);
  for (int v = 0; v < g.num_vertices; ++v) {
    for (std::size_t k = 0; k < group.generators.size(); ++k) {
      const Rotation target = compose(group.generators[k].second, group.elements[v]);
      const int to = group.find(target);
      if (to < 0) throw std::invalid_argument("build_cayley_graph: generator not in group");
      g.out_edges[v].push_back(static_cast<int>(g.edges.size()));
      g.edges.push_back({v, to, static_cast<int>(k)});
    }
  }
  return g;
}

SequenceWord eulerian_cycle(const CayleyGraph& graph) {
  const std::vector<int> cycle = hierholzer(graph.edges, graph.out_edges, graph.num_vertices, 0);
  SequenceWord word;
  word.reserve(cycle.size());
  for (int eid : cycle) word.push_back(generator_letter(*graph.group, graph.edges[eid].generator));
  return word;
}

bool verify_word(const SequenceWord& word, const PointGroup& group) {
  const int num_gens = static_cast<int>(group.generators.size());
  const bool has_identity_slots = word.find('e') != SequenceWord::npos;
  const int degree = num_gens + (has_identity_slots ? 1 : 0);
  std::vector<std::vector<char>> used(group.order(), std::vector<char>(degree, 0));
  int cur = 0;
  int count = 0;
  for (char c : word) {
    const int k = letter_index(group, c);
    if (k >= degree) return false;
    if (used[cur][k]) return false;
    used[cur][k] = 1;
    ++count;
    if (k < num_gens) {
      cur = group.find(compose(group.generators[k].second, group.elements[cur]));
      if (cur < 0) throw std::invalid_argument("verify_word: generator not in group");
    }
  }
  return cur == 0 && count == group.order() * degree;
}

std::optional<SequenceWord> hamiltonian_cycle(const CayleyGraph& graph, long long node_budget) {
  const int n = graph.num_vertices;
  const PointGroup& group = *graph.group;
  const int num_gens = static_cast<int>(group.generators.size());

  // Moves: each generator forward, then each non-involutive generator
  // backward (an inverted pulse, written as an uppercase letter).  The
  // purely directed graph can lack a Hamiltonian cycle even when the
  // underlying Cayley graph has one.
  struct Move {
    char letter;
    std::vector<int> to;  // successor per vertex
  };
  std::vector<Move> moves;
  for (int k = 0; k < num_gens; ++k) {
    Move fwd{group.generators[k].first.at(0), {}};
    for (int v = 0; v < n; ++v) fwd.to.push_back(graph.edges[graph.out_edges[v][k]].to);
    moves.push_back(std::move(fwd));
  }
  for (int k = 0; k < num_gens; ++k) {
    const Rotation inv = group.generators[k].second.inverse();
    if (so3_equal(inv, group.generators[k].second)) continue;
    Move bwd{static_cast<char>(std::toupper(group.generators[k].first.at(0))), {}};
    for (int v = 0; v < n; ++v) bwd.to.push_back(group.find(compose(inv, group.elements[v])));
    moves.push_back(std::move(bwd));
  }

  std::vector<char> visited(n, 0);
  std::vector<char> path;
  long long nodes = 0;
  visited[0] = 1;

  std::function<bool(int, int)> dfs = [&](int v, int depth) -> bool {
    if (++nodes > node_budget) return false;
    if (depth == n) {
      for (const Move& m : moves)
        if (m.to[v] == 0) {
          path.push_back(m.letter);
          return true;
        }
      return false;
    }
    for (const Move& m : moves) {
      const int to = m.to[v];
      if (visited[to]) continue;
      visited[to] = 1;
      path.push_back(m.letter);
      if (dfs(to, depth + 1)) return true;
      path.pop_back();
      visited[to] = 0;
    }
    return false;
  };

  if (!dfs(0, 1)) return std::nullopt;
  return SequenceWord(path.begin(), path.end());
}

DcgPath dcg_path(const CayleyGraph& graph) {
  const int num_gens = static_cast<int>(graph.group->generators.size());
  std::vector<CayleyEdge> edges = graph.edges;
  std::vector<std::vector<int>> out_edges = graph.out_edges;
  for (int v = 0; v < graph.num_vertices; ++v) {
    out_edges[v].push_back(static_cast<int>(edges.size()));
    edges.push_back({v, v, num_gens});  // identity self-loop
  }
  std::vector<int> cycle = hierholzer(edges, out_edges, graph.num_vertices, 0);

  // Rotate so the identity self-loop at vertex 0 is the final edge; the
  // path then still starts and ends at the identity vertex.
  int pivot = -1;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const CayleyEdge& e = edges[cycle[i]];
    if (e.generator == num_gens && e.from == 0) {
      pivot = static_cast<int>(i);
      break;
    }
  }
  std::rotate(cycle.begin(), cycle.begin() + pivot + 1, cycle.end());

  DcgPath path;
  for (int eid : cycle) path.word.push_back(generator_letter(*graph.group, edges[eid].generator));
  path.gate_slot = static_cast<int>(path.word.size()) - 1;
  return path;
}

SequenceWord reference_word(const std::string& group_name) {
  if (group_name == "D2") return "ababbaba";
  if (group_name == "T") return "abaababbbaababbbaababbaa";
  if (group_name == "O")
    return "abaaabbbabaabbbaababbaaa"
           "ababbbabaabbaaaababbbabb";
  if (group_name == "I")
    return "baaabbaabaaaaabbaaab"
           "abbbabaabbaabbabbabb"
           "abbbaaaababbbaaababb"
           "baaababbbaababbaabba"
           "abbaabbbabbbaababbba"
           "ababbbaababbbabaaaaa";
  throw std::invalid_argument("reference_word: unknown group '" + group_name + "'");
}

}  // namespace pgdd
