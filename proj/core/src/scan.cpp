#include "pgdd/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pgdd/cayley.hpp"
#include "pgdd/interaction.hpp"
#include "pgdd/random_hamiltonian.hpp"
#include "pgdd/symmetrize.hpp"

namespace pgdd {

namespace {

const std::map<std::string, std::string>& sequence_group_names() {
  static const std::map<std::string, std::string> names = {
      {"edd", "D2"}, {"tedd", "T"}, {"oedd", "O"}, {"iedd", "I"}};
  return names;
}

enum class SeqKind { NoDD, Pulsed, Dcg };

struct PreparedSequence {
  std::string name;
  SeqKind kind = SeqKind::Pulsed;
  PulseSequence seq;
  std::vector<Matrix> pulses;  // instantaneous-pulse unitaries (Pulsed, ideal mode)
  double duration = 0.0;       // total time at the configured tau0 / chi
};

struct SampleContext {
  const ScanConfig* config = nullptr;
  SpinEnsemble ensemble;
  std::vector<PreparedSequence> prepared;
  double t_ref = 0.0;  // NoDD evolution time = shortest sequence duration
  Matrix dcg_target;
  DcgGate gate;
};

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream ss(s);
  std::vector<std::string> out;
  std::string w;
  while (ss >> w) out.push_back(w);
  return out;
}

double parse_double(const std::string& s) {
  if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
  std::size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("scan config: bad number '" + s + "'");
  return v;
}

// Resolve a family parameter at one grid point.
double resolve_param(const ScanConfig& config, const std::map<std::string, double>& axis_values,
                     const std::string& name, double fallback) {
  auto it = config.params.find(name);
  if (it == config.params.end()) return fallback;
  const std::string& v = it->second;
  if (!v.empty() && v[0] == '@') {
    auto ax = axis_values.find(v.substr(1));
    if (ax == axis_values.end())
      throw std::invalid_argument("scan config: parameter '" + name + "' references unknown axis '" +
                                  v + "'");
    return ax->second;
  }
  return parse_double(v);
}

// Random Hermitian supported on the (L1, L2) multipole product sector.
Matrix random_sector(Rng& rng, double j1, double j2, int L1, int L2) {
  const int d = spin_dimension(j1) * spin_dimension(j2);
  Matrix H = Matrix::Zero(d, d);
  for (int M1 = -L1; M1 <= L1; ++M1)
    for (int M2 = -L2; M2 <= L2; ++M2) {
      const Complex g(rng.normal(), rng.normal());
      const Matrix op = kron(multipole_operator(j1, L1, M1), multipole_operator(j2, L2, M2));
      H += g * op + std::conj(g) * op.adjoint();
    }
  return H;
}

std::vector<std::vector<int>> site_combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

Matrix scaled_to_sup_norm(Matrix H, double target) {
  const double s = sup_norm(H);
  if (s > 0) H *= target / s;
  return H;
}

// Draws the error Hamiltonian for one sample at one grid point.
Matrix draw_hamiltonian(const SampleContext& ctx, Rng& rng,
                        const std::map<std::string, double>& axes) {
  const ScanConfig& c = *ctx.config;
  const SpinEnsemble& ens = ctx.ensemble;
  const int d = ens.dim();

  if (c.family == "gue") {
    return random_gue(rng, d, resolve_param(c, axes, "h", 1.0));
  }

  if (c.family == "multipole") {
    if (ens.num_sites() != 1)
      throw std::invalid_argument("multipole family needs a single spin");
    const double j = ens.spins[0];
    Matrix H = Matrix::Zero(d, d);
    for (int L = 1; L <= 2 * d - 2; ++L) {
      const std::string key = "h" + std::to_string(L);
      if (!c.params.count(key)) continue;
      const double hL = resolve_param(c, axes, key, 0.0);
      const Vector v = random_multipole_vector(rng, L);
      for (int M = L; M >= -L; --M) H += hL * v(L - M) * multipole_operator(j, L, M);
    }
    return H;
  }

  if (c.family == "multilinear") {
    Matrix H = Matrix::Zero(d, d);
    const double beta = resolve_param(c, axes, "beta", -1.0);
    const double lambda = resolve_param(c, axes, "lambda", -1.0);
    if (beta >= 0.0) {
      Matrix h2 = Matrix::Zero(d, d);
      for (const auto& pair : site_combinations(ens.num_sites(), 2))
        h2 += multilinear_hamiltonian(random_tensor(rng, pair, c.anisotropic), ens).mat;
      H += scaled_to_sup_norm(std::move(h2), beta);
    }
    if (lambda >= 0.0) {
      Matrix h3 = Matrix::Zero(d, d);
      for (const auto& triple : site_combinations(ens.num_sites(), 3))
        h3 += multilinear_hamiltonian(random_tensor(rng, triple, c.anisotropic), ens).mat;
      H += scaled_to_sup_norm(std::move(h3), lambda);
    }
    return H;
  }

  if (c.family == "dis_dipolar") {
    const double dis = resolve_param(c, axes, "dis", 0.0);
    const double dip = resolve_param(c, axes, "dip", 0.0);
    std::vector<double> deltas(ens.num_sites());
    std::vector<Vec3> dirs(ens.num_sites());
    for (int i = 0; i < ens.num_sites(); ++i) {
      deltas[i] = rng.normal();
      dirs[i] = rng.unit_vector();
    }
    Matrix h_dis = disorder_hamiltonian(deltas, dirs, ens).mat;
    Matrix h_dd = Matrix::Zero(d, d);
    for (const auto& pair : site_combinations(ens.num_sites(), 2)) {
      InteractionTensor t = dipolar_tensor(pair[0], pair[1], rng.unit_vector());
      const double coupling = rng.normal();
      for (auto& x : t.entries) x *= coupling;
      h_dd += multilinear_hamiltonian(t, ens).mat;
    }
    return scaled_to_sup_norm(std::move(h_dis), dis) + scaled_to_sup_norm(std::move(h_dd), dip);
  }

  if (c.family == "qubit_qutrit") {
    if (ens.num_sites() != 2)
      throw std::invalid_argument("qubit_qutrit family needs two spins");
    const double j1 = ens.spins[0], j2 = ens.spins[1];
    const double gamma = resolve_param(c, axes, "gamma", 0.0);
    const double beta = resolve_param(c, axes, "beta", 0.0);

    Matrix h1 = Matrix::Zero(d, d);
    for (int L1 = 1; L1 <= spin_dimension(j1) - 1; ++L1) h1 += random_sector(rng, j1, j2, L1, 0);
    for (int L2 = 1; L2 <= spin_dimension(j2) - 1; ++L2) h1 += random_sector(rng, j1, j2, 0, L2);

    Matrix h2 = Matrix::Zero(d, d);
    for (int L1 = 1; L1 <= spin_dimension(j1) - 1; ++L1)
      for (int L2 = 1; L2 <= spin_dimension(j2) - 1; ++L2) h2 += random_sector(rng, j1, j2, L1, L2);
    if (c.anisotropic)
      h2 = remove_isotropic({ens.dims(), h2}, ens).mat;

    return scaled_to_sup_norm(std::move(h1), gamma) + scaled_to_sup_norm(std::move(h2), beta);
  }

  if (c.family == "dcg") {
    // General anisotropic two-qubit error Hamiltonian.
    Matrix H = random_gue(rng, d, 1.0);
    H -= (H.trace() / static_cast<double>(d)) * Matrix::Identity(d, d);
    H = remove_isotropic({ens.dims(), H}, ctx.ensemble).mat;
    return scaled_to_sup_norm(std::move(H), resolve_param(c, axes, "h", 1.0));
  }

  throw std::invalid_argument("scan: unknown family '" + c.family + "'");
}

PulseSequence build_named_sequence(const std::string& name, double tau0, DcgPath* dcg_out) {
  const auto& names = sequence_group_names();

  std::string base = name;
  bool tt = false;
  if (base.size() > 3 && base.substr(base.size() - 3) == ".tt") {
    tt = true;
    base = base.substr(0, base.size() - 3);
  }
  bool dcg = false;
  if (base.rfind("dcg-", 0) == 0) {
    dcg = true;
    base = base.substr(4);
  }

  PulseSequence seq;
  if (base.rfind("file:", 0) == 0) {
    if (dcg || tt) throw std::invalid_argument("scan: file sequences cannot be dcg/tt variants");
    seq = load_sequence_file(base.substr(5));
    for (auto& s : seq.steps) s.interval = tau0;
  } else {
    auto it = names.find(base);
    if (it == names.end()) throw std::invalid_argument("scan: unknown sequence '" + name + "'");
    static std::map<std::string, PointGroup> group_cache;
    static std::mutex group_mutex;
    std::lock_guard<std::mutex> lock(group_mutex);
    auto g = group_cache.find(it->second);
    if (g == group_cache.end())
      g = group_cache.emplace(it->second, standard_group(it->second)).first;
    const CayleyGraph graph = build_cayley_graph(g->second);
    if (dcg) {
      DcgPath path = dcg_path(graph);
      if (dcg_out) *dcg_out = path;
      seq = dcg_to_pulses(path, g->second, tau0);
    } else {
      seq = word_to_pulses(eulerian_cycle(graph), g->second, tau0);
    }
  }
  if (tt) seq = time_antisymmetric(seq);
  seq.source_word.clear();
  return seq;
}

int num_pulses_of(const std::string& name) {
  // Pulse counts without building matrices; used to fix tau0 = 1/N_min.
  PulseSequence seq = build_named_sequence(name, 0.0, nullptr);
  return std::max(1, seq.num_pulses());
}

double sequence_duration(const PulseSequence& seq, const ErrorModel& error) {
  double t = seq.total_interval();
  if (error.finite_pulses()) {
    for (const auto& s : seq.steps)
      if (s.pulse) t += std::abs(s.pulse->angle) / error.pulse_amplitude_chi;
  }
  return t;
}

}  // namespace

std::vector<double> GridAxis::values() const {
  if (points < 1) throw std::invalid_argument("grid axis needs at least one point");
  std::vector<double> v;
  if (points == 1) return {min};
  for (int i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / (points - 1);
    v.push_back(log_spaced ? min * std::pow(max / min, t) : min + t * (max - min));
  }
  return v;
}

ScanConfig parse_scan_config(std::istream& is) {
  ScanConfig c;
  std::string line;
  while (std::getline(is, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) continue;

    if (key == "family") {
      c.family = value;
    } else if (key == "spins") {
      c.spins.clear();
      for (const auto& w : split_words(value)) c.spins.push_back(parse_double(w));
    } else if (key == "sequences") {
      c.sequences = split_words(value);
    } else if (key == "samples") {
      c.samples = static_cast<int>(parse_double(value));
    } else if (key == "seed") {
      c.seed = static_cast<std::uint64_t>(std::stoull(value));
    } else if (key == "grid") {
      const auto w = split_words(value);
      if (w.size() != 5) throw std::invalid_argument("scan config: grid needs <name min max points lin|log>");
      GridAxis ax;
      ax.name = w[0];
      ax.min = parse_double(w[1]);
      ax.max = parse_double(w[2]);
      ax.points = static_cast<int>(parse_double(w[3]));
      ax.log_spaced = (w[4] == "log");
      c.axes.push_back(ax);
    } else if (key == "tau0") {
      c.tau0 = (value == "auto") ? -1.0 : parse_double(value);
    } else if (key == "eps_fa") {
      c.error.flip_angle_eps = parse_double(value);
    } else if (key == "eps_am") {
      c.error.axis_misspec_eps = parse_double(value);
    } else if (key == "chi") {
      c.error.pulse_amplitude_chi = parse_double(value);
    } else if (key == "anisotropic") {
      c.anisotropic = (value == "true" || value == "1" || value == "yes");
    } else if (key == "gate_angle") {
      c.gate_angle = parse_double(value);
    } else if (key == "gate_axis") {
      c.gate_axis = (value == "x") ? 0 : (value == "y") ? 1 : 2;
    } else {
      c.params[key] = value;
    }
  }
  if (c.family.empty()) throw std::invalid_argument("scan config: missing family");
  if (c.spins.empty()) throw std::invalid_argument("scan config: missing spins");
  if (c.sequences.empty()) throw std::invalid_argument("scan config: missing sequences");
  if (c.axes.empty()) throw std::invalid_argument("scan config: missing grid");
  if (c.axes.size() > 2) throw std::invalid_argument("scan config: at most two grid axes");
  c.error.validate();
  return c;
}

ScanConfig load_scan_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open scan config: " + path);
  return parse_scan_config(in);
}

ScanResult run_scan(const ScanConfig& config) {
  SampleContext ctx;
  ctx.config = &config;
  ctx.ensemble = SpinEnsemble(config.spins);

  // tau0 = auto makes the shortest pulsed sequence last one time unit.
  double tau0 = config.tau0;
  if (tau0 < 0) {
    int n_min = 0;
    for (const auto& name : config.sequences) {
      if (name == "nodd") continue;
      const int n = num_pulses_of(name);
      if (n_min == 0 || n < n_min) n_min = n;
    }
    tau0 = n_min > 0 ? 1.0 / n_min : 1.0;
  }

  ctx.gate.axis = config.gate_axis;
  ctx.gate.angle = config.gate_angle;
  ctx.gate.segment_time = tau0;

  const bool systematic_errors =
      config.error.flip_angle_eps != 0.0 || config.error.axis_misspec_eps != 0.0;
  for (const auto& name : config.sequences) {
    PreparedSequence p;
    p.name = name;
    if (name == "nodd") {
      p.kind = SeqKind::NoDD;
    } else {
      p.kind = name.rfind("dcg-", 0) == 0 ? SeqKind::Dcg : SeqKind::Pulsed;
      p.seq = build_named_sequence(name, tau0, nullptr);
      p.duration = sequence_duration(p.seq, config.error);
      if (p.kind == SeqKind::Pulsed && !config.error.finite_pulses())
        p.pulses = pulse_unitaries(p.seq, ctx.ensemble,
                                   systematic_errors ? &config.error : nullptr);
      if (p.kind == SeqKind::Dcg) {
        if (config.error.finite_pulses())
          throw std::invalid_argument("scan: dcg sequences support instantaneous pulses only");
        ctx.dcg_target = dcg_target_unitary(ctx.gate, ctx.ensemble);
      }
    }
    ctx.prepared.push_back(std::move(p));
  }
  ctx.t_ref = 0.0;
  for (const auto& p : ctx.prepared)
    if (p.kind != SeqKind::NoDD && (ctx.t_ref == 0.0 || p.duration < ctx.t_ref))
      ctx.t_ref = p.duration;
  if (ctx.t_ref == 0.0) ctx.t_ref = 1.0;

  // Grid points in row-major order of the configured axes.
  std::vector<std::vector<double>> axis_values;
  int num_points = 1;
  for (const auto& ax : config.axes) {
    axis_values.push_back(ax.values());
    num_points *= ax.points;
  }

  const int num_seqs = static_cast<int>(ctx.prepared.size());
  std::vector<double> means(num_points * num_seqs, 0.0);
  std::vector<double> sqsums(num_points * num_seqs, 0.0);

  auto run_point = [&](int point) {
    std::map<std::string, double> axes;
    std::vector<double> coords;
    int rem = point;
    for (int a = static_cast<int>(config.axes.size()) - 1; a >= 0; --a) {
      const int idx = rem % config.axes[a].points;
      rem /= config.axes[a].points;
      coords.insert(coords.begin(), axis_values[a][idx]);
    }
    for (std::size_t a = 0; a < config.axes.size(); ++a) axes[config.axes[a].name] = coords[a];

    std::vector<double> acc(num_seqs, 0.0), acc2(num_seqs, 0.0);
    for (int s = 0; s < config.samples; ++s) {
      Rng rng(derive_stream(config.seed, {static_cast<std::uint64_t>(point),
                                          static_cast<std::uint64_t>(s)}));
      const Matrix H = draw_hamiltonian(ctx, rng, axes);
      const FreeEvolver evolver(H);
      for (int q = 0; q < num_seqs; ++q) {
        const PreparedSequence& p = ctx.prepared[q];
        double dist = 0.0;
        switch (p.kind) {
          case SeqKind::NoDD:
            dist = distance(evolver.at(ctx.t_ref), ctx.ensemble.dim());
            break;
          case SeqKind::Pulsed:
            if (config.error.finite_pulses())
              dist = distance(finite_pulse_propagator(H, p.seq, config.error, ctx.ensemble),
                              ctx.ensemble.dim());
            else
              dist = distance(sequence_propagator_cached(evolver, p.seq, p.pulses),
                              ctx.ensemble.dim());
            break;
          case SeqKind::Dcg:
            dist = distance_to(dcg_propagator(H, p.seq, ctx.gate, ctx.ensemble), ctx.dcg_target,
                               ctx.ensemble.dim());
            break;
        }
        acc[q] += dist;
        acc2[q] += dist * dist;
      }
    }
    for (int q = 0; q < num_seqs; ++q) {
      means[point * num_seqs + q] = acc[q] / config.samples;
      sqsums[point * num_seqs + q] = acc2[q] / config.samples;
    }
  };

  int threads = static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("DD_THREADS")) threads = std::max(1, std::atoi(env));
  threads = std::max(1, std::min(threads, num_points));

  if (threads == 1) {
    for (int p = 0; p < num_points; ++p) run_point(p);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (int p = next.fetch_add(1); p < num_points; p = next.fetch_add(1)) run_point(p);
      });
    for (auto& t : pool) t.join();
  }

  ScanResult result;
  for (const auto& ax : config.axes) result.grid_names.push_back(ax.name);
  for (int point = 0; point < num_points; ++point) {
    std::vector<double> coords;
    int rem = point;
    for (int a = static_cast<int>(config.axes.size()) - 1; a >= 0; --a) {
      const int idx = rem % config.axes[a].points;
      rem /= config.axes[a].points;
      coords.insert(coords.begin(), axis_values[a][idx]);
    }
    for (int q = 0; q < num_seqs; ++q) {
      ScanRow row;
      row.grid = coords;
      row.sequence = ctx.prepared[q].name;
      row.mean_distance = means[point * num_seqs + q];
      const double var = std::max(0.0, sqsums[point * num_seqs + q] -
                                           row.mean_distance * row.mean_distance);
      row.stddev = std::sqrt(var);
      row.samples = config.samples;
      row.seed = config.seed;
      result.rows.push_back(std::move(row));
    }
  }
  return result;
}

void write_scan_csv(std::ostream& os, const ScanResult& result,
                    const std::vector<std::string>& fit_comments) {
  for (std::size_t a = 0; a < result.grid_names.size(); ++a) os << result.grid_names[a] << ',';
  os << "sequence,mean_distance,stddev,samples,seed\n";
  os << std::setprecision(17);
  for (const auto& row : result.rows) {
    for (double g : row.grid) os << g << ',';
    os << row.sequence << ',' << row.mean_distance << ',' << row.stddev << ',' << row.samples
       << ',' << row.seed << '\n';
  }
  for (const auto& c : fit_comments) os << "# " << c << '\n';
}

double loglog_slope(const std::vector<std::pair<double, double>>& points, double y_min,
                    double y_max) {
  std::vector<std::pair<double, double>> window;
  for (const auto& [x, y] : points) {
    if (x <= 0.0 || y <= 0.0) throw std::invalid_argument("loglog_slope: nonpositive point");
    if (y >= y_min && y <= y_max) window.emplace_back(std::log(x), std::log(y));
  }
  if (window.size() < 4)
    throw std::invalid_argument("loglog_slope: fewer than 4 points inside the fit window");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [lx, ly] : window) {
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(window.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double fit_scan_slope(const ScanResult& result, const std::string& sequence, int axis_index,
                      double y_min, double y_max) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& row : result.rows)
    if (row.sequence == sequence) pts.emplace_back(row.grid.at(axis_index), row.mean_distance);
  return loglog_slope(pts, y_min, y_max);
}

}  // namespace pgdd
