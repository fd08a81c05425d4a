#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgdd/point_group.hpp"

namespace pgdd {

// Generator-letter string; letters are the generator labels of the group
// the word was built on ('a', 'b', ... plus 'e' for identity slots).
using SequenceWord = std::string;

// Directed edge u -> v carrying generator index k: element(v) = gen_k * element(u).
struct CayleyEdge {
  int from = 0;
  int to = 0;
  int generator = 0;
};

// Cayley graph of a point group w.r.t. its generator list.  Vertex i is
// group element i; vertex 0 is the identity.  Every vertex has in- and
// out-degree equal to the number of generators.
struct CayleyGraph {
  const PointGroup* group = nullptr;
  int num_vertices = 0;
  std::vector<CayleyEdge> edges;
  // Outgoing edge indices per vertex, sorted by (generator, target vertex).
  std::vector<std::vector<int>> out_edges;
};

CayleyGraph build_cayley_graph(const PointGroup& group);

// Closed walk from the identity using every directed edge exactly once
// (Hierholzer).  Deterministic for a given graph.
SequenceWord eulerian_cycle(const CayleyGraph& graph);

// True iff the word, traversed from the identity, uses every edge exactly
// once and returns to the identity.  Unknown letters throw.
bool verify_word(const SequenceWord& word, const PointGroup& group);

// Closed walk visiting every vertex exactly once, if one is found within
// the search budget.
std::optional<SequenceWord> hamiltonian_cycle(const CayleyGraph& graph,
                                              long long node_budget = 20'000'000);

// Eulerian cycle on the identity-augmented graph (one 'e' self-loop per
// vertex), rotated so the final letter is an identity slot at the identity
// vertex.  That terminal slot is the one to swap for a balanced-pair gate.
struct DcgPath {
  SequenceWord word;        // letters over {generators..., 'e'}
  int gate_slot = 0;        // index of the terminal identity slot (== word.size()-1)
};

DcgPath dcg_path(const CayleyGraph& graph);

// Published Eulerian words kept as regression fixtures; any Eulerian cycle
// is an equally valid sequence.
SequenceWord reference_word(const std::string& group_name);

}  // namespace pgdd
