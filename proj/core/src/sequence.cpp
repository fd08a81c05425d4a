#include "pgdd/sequence.hpp"
#include <cctype>

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace pgdd {

int PulseSequence::num_pulses() const {
  int n = 0;
  for (const auto& s : steps)
    if (s.pulse) ++n;
  return n;
}

double PulseSequence::total_interval() const {
  double t = 0;
  for (const auto& s : steps) t += s.interval;
  return t;
}

PulseSequence word_to_pulses(const SequenceWord& word, const PointGroup& group, double tau0) {
  PulseSequence seq;
  seq.source_word = word;
  seq.group_name = group.name;
  for (char c : word) {
    SequenceStep step;
    step.interval = tau0;
    if (c != 'e') {
      // Uppercase letters are inverted generators (negated axis).
      const bool inverted = std::isupper(static_cast<unsigned char>(c)) != 0;
      const char base = inverted ? static_cast<char>(std::tolower(c)) : c;
      bool found = false;
      for (const auto& [label, rot] : group.generators) {
        if (label.at(0) == base) {
          step.pulse = Pulse{inverted ? Vec3(-rot.axis()) : rot.axis(), rot.angle()};
          found = true;
          break;
        }
      }
      if (!found) throw std::invalid_argument(std::string("word_to_pulses: unknown letter '") + c + "'");
    }
    seq.steps.push_back(step);
  }
  return seq;
}

PulseSequence dcg_to_pulses(const DcgPath& path, const PointGroup& group, double tau0) {
  PulseSequence seq = word_to_pulses(path.word, group, tau0);
  seq.steps.at(path.gate_slot).gate_slot = true;
  return seq;
}

PulseSequence time_antisymmetric(const PulseSequence& seq) {
  PulseSequence out = seq;
  for (auto it = seq.steps.rbegin(); it != seq.steps.rend(); ++it) {
    SequenceStep step = *it;
    if (step.pulse) step.pulse->axis = -step.pulse->axis;
    out.steps.push_back(step);
  }
  out.source_word += "|reversed";
  return out;
}

Rotation pulse_product(const PulseSequence& seq) {
  Rotation product = Rotation::identity();
  for (const auto& s : seq.steps)
    if (s.pulse) product = compose(rotation_from_axis_angle(s.pulse->axis, s.pulse->angle), product);
  return product;
}

std::vector<Rotation> toggling_frame(const PulseSequence& seq) {
  std::vector<Rotation> g;
  g.reserve(seq.steps.size());
  Rotation cur = Rotation::identity();
  for (const auto& s : seq.steps) {
    g.push_back(cur);
    if (s.pulse) cur = compose(rotation_from_axis_angle(s.pulse->axis, s.pulse->angle), cur);
  }
  return g;
}

void write_sequence(std::ostream& os, const PulseSequence& seq) {
  os << "# pulse sequence";
  if (!seq.group_name.empty()) os << " group=" << seq.group_name;
  if (!seq.source_word.empty()) os << " word=" << seq.source_word;
  os << "\n# <interval_seconds> <axis_x> <axis_y> <axis_z> <angle_radians>\n";
  os << std::setprecision(17);
  for (const auto& s : seq.steps) {
    const Vec3 axis = s.pulse ? s.pulse->axis : Vec3(0, 0, 1);
    const double angle = s.pulse ? s.pulse->angle : 0.0;
    os << s.interval << ' ' << axis.x() << ' ' << axis.y() << ' ' << axis.z() << ' ' << angle;
    if (s.gate_slot) os << "  # gate slot";
    os << '\n';
  }
}

PulseSequence read_sequence(std::istream& is) {
  PulseSequence seq;
  std::string line;
  while (std::getline(is, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    double interval, ax, ay, az, angle;
    if (!(ss >> interval >> ax >> ay >> az >> angle)) continue;
    SequenceStep step;
    step.interval = interval;
    if (interval < 0) throw std::invalid_argument("read_sequence: negative interval");
    if (angle != 0.0) {
      Vec3 axis(ax, ay, az);
      if (axis.norm() < 1e-300) throw std::invalid_argument("read_sequence: zero pulse axis");
      step.pulse = Pulse{axis.normalized(), angle};
    }
    seq.steps.push_back(step);
  }
  return seq;
}

PulseSequence load_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open sequence file: " + path);
  return read_sequence(in);
}

}  // namespace pgdd
