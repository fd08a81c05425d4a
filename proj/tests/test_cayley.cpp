#include <doctest.h>

#include "pgdd/cayley.hpp"
#include "pgdd/sequence.hpp"

using namespace pgdd;

TEST_CASE("graph shape") {
  for (const auto& [name, vertices] :
       {std::pair<std::string, int>{"D2", 4}, {"T", 12}, {"O", 24}, {"I", 60}}) {
    const PointGroup g = standard_group(name);
    const CayleyGraph graph = build_cayley_graph(g);
    CHECK(graph.num_vertices == vertices);
    CHECK(static_cast<int>(graph.edges.size()) == 2 * vertices);
    for (int v = 0; v < graph.num_vertices; ++v) CHECK(graph.out_edges[v].size() == 2);
    // Balanced in-degree.
    std::vector<int> indeg(graph.num_vertices, 0);
    for (const auto& e : graph.edges) indeg[e.to]++;
    for (int v = 0; v < graph.num_vertices; ++v) CHECK(indeg[v] == 2);
  }
}

TEST_CASE("eulerian cycles verify and are deterministic") {
  for (const std::string name : {"D2", "T", "O", "I"}) {
    const PointGroup g = standard_group(name);
    const CayleyGraph graph = build_cayley_graph(g);
    const SequenceWord word = eulerian_cycle(graph);
    CHECK(word.size() == g.order() * 2);
    CHECK(verify_word(word, g));
    CHECK(eulerian_cycle(graph) == word);
  }
}

TEST_CASE("published words pass verification") {
  CHECK(verify_word(reference_word("D2"), standard_group("D2")));
  CHECK(verify_word(reference_word("T"), standard_group("T")));
  CHECK(verify_word(reference_word("O"), standard_group("O")));
  CHECK(verify_word(reference_word("I"), standard_group("I")));
  CHECK(reference_word("T").size() == 24);
  CHECK(reference_word("O").size() == 48);
  CHECK(reference_word("I").size() == 120);
}

TEST_CASE("short words fail verification") {
  const PointGroup t = standard_group("T");
  CHECK_FALSE(verify_word("ab", t));
  CHECK_THROWS_AS(verify_word("xy", t), std::invalid_argument);
}

TEST_CASE("hamiltonian cycles") {
  const PointGroup d2 = standard_group("D2");
  const auto word_d2 = hamiltonian_cycle(build_cayley_graph(d2));
  REQUIRE(word_d2.has_value());
  CHECK(word_d2->size() == 4);
  CHECK(pulse_product(word_to_pulses(*word_d2, d2, 1.0)).is_identity(1e-10));

  const PointGroup t = standard_group("T");
  const auto word_t = hamiltonian_cycle(build_cayley_graph(t));
  REQUIRE(word_t.has_value());
  CHECK(word_t->size() == 12);
  CHECK(pulse_product(word_to_pulses(*word_t, t, 1.0)).is_identity(1e-10));
}

TEST_CASE("dcg paths") {
  for (const std::string name : {"D2", "T", "O", "I"}) {
    const PointGroup g = standard_group(name);
    const DcgPath path = dcg_path(build_cayley_graph(g));
    CHECK(static_cast<int>(path.word.size()) == 3 * g.order());
    CHECK(path.word.back() == 'e');
    CHECK(path.gate_slot == static_cast<int>(path.word.size()) - 1);
    // Each edge of the augmented graph used exactly once, back at identity.
    CHECK(verify_word(path.word, g));
  }
}

TEST_CASE("word_to_pulses structure") {
  const PointGroup t = standard_group("T");
  const SequenceWord word = eulerian_cycle(build_cayley_graph(t));
  const PulseSequence seq = word_to_pulses(word, t, 2.5e-6);
  CHECK(seq.num_pulses() == 24);
  CHECK(seq.steps.size() == 24);
  for (const auto& s : seq.steps) CHECK(s.interval == 2.5e-6);
  CHECK(pulse_product(seq).is_identity(1e-10));

  CHECK(word_to_pulses("", t, 1.0).steps.empty());
}

TEST_CASE("toggling frame covers each element |generators| times") {
  for (const std::string name : {"D2", "T", "O"}) {
    const PointGroup g = standard_group(name);
    const SequenceWord word = eulerian_cycle(build_cayley_graph(g));
    const PulseSequence seq = word_to_pulses(word, g, 1.0);
    std::vector<int> visits(g.order(), 0);
    for (const Rotation& r : toggling_frame(seq)) {
      const int idx = g.find(r, 1e-8);
      REQUIRE(idx >= 0);
      visits[idx]++;
    }
    for (int v : visits) CHECK(v == 2);
  }
}
