#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pgdd/cayley.hpp"
#include "pgdd/point_group.hpp"

namespace pgdd {

struct Pulse {
  Vec3 axis = Vec3(0, 0, 1);  // unit vector
  double angle = 0.0;         // radians
};

// One timed step: a free interval followed by a pulse.  A missing pulse is
// an identity slot (DCG bookkeeping); the gate_slot flag marks the terminal
// slot to be swapped for the balanced-pair gate.
struct SequenceStep {
  double interval = 0.0;
  std::optional<Pulse> pulse;
  bool gate_slot = false;
};

struct PulseSequence {
  std::vector<SequenceStep> steps;
  std::string source_word;
  std::string group_name;

  int num_pulses() const;
  double total_interval() const;
};

// Realize a generator word as timed pulses, one free interval of tau0
// before each pulse.  'e' letters become identity slots.
PulseSequence word_to_pulses(const SequenceWord& word, const PointGroup& group, double tau0);

// As word_to_pulses, but flags the terminal identity slot of a DCG path.
PulseSequence dcg_to_pulses(const DcgPath& path, const PointGroup& group, double tau0);

// The sequence followed by its time-reversed inverse (each pulse axis
// negated, reversed order).  Doubles the pulse count.
PulseSequence time_antisymmetric(const PulseSequence& seq);

// Net rotation implemented by the ideal pulses.
Rotation pulse_product(const PulseSequence& seq);

// Toggling-frame prefix rotations g_k, one per step (g_1 = identity).
std::vector<Rotation> toggling_frame(const PulseSequence& seq);

// Plain-text format: one `<interval> <ax> <ay> <az> <angle>` line per step;
// '#' starts a comment.  This is also the import path for third-party
// sequences.
void write_sequence(std::ostream& os, const PulseSequence& seq);
PulseSequence read_sequence(std::istream& is);
PulseSequence load_sequence_file(const std::string& path);

}  // namespace pgdd
