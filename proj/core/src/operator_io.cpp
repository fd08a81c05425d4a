#include "pgdd/operator_io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace pgdd {

namespace {

std::string strip(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  const auto b = s.find_last_not_of(" \t\r");
  return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

Complex parse_entry(const std::string& token) {
  const auto comma = token.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("operator file: entry '" + token + "' is not re,im");
  return {std::stod(token.substr(0, comma)), std::stod(token.substr(comma + 1))};
}

}  // namespace

void write_operator(std::ostream& os, const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("write_operator: matrix must be square");
  os << "dim " << m.rows() << '\n' << std::setprecision(17);
  for (int i = 0; i < m.rows(); ++i) {
    for (int k = 0; k < m.cols(); ++k)
      os << m(i, k).real() << ',' << m(i, k).imag() << (k + 1 == m.cols() ? '\n' : ' ');
  }
}

Matrix read_operator(std::istream& is) {
  std::string line;
  int dim = 0;
  while (std::getline(is, line)) {
    line = strip(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag >> dim) || tag != "dim" || dim < 1)
      throw std::invalid_argument("operator file: expected 'dim d' header");
    break;
  }
  if (dim == 0) throw std::invalid_argument("operator file: missing header");

  Matrix m(dim, dim);
  int row = 0;
  while (row < dim && std::getline(is, line)) {
    line = strip(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string token;
    for (int col = 0; col < dim; ++col) {
      if (!(ss >> token))
        throw std::invalid_argument("operator file: row " + std::to_string(row) + " too short");
      m(row, col) = parse_entry(token);
    }
    ++row;
  }
  if (row != dim) throw std::invalid_argument("operator file: missing rows");
  return m;
}

Matrix load_operator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open operator file: " + path);
  return read_operator(in);
}

HamiltonianSpec parse_hamiltonian_spec(std::istream& is) {
  std::vector<double> spins;
  struct TermBlock {
    std::vector<int> sites;
    std::vector<double> tensor;
    bool anisotropic = false;
    double norm = -1.0;
  };
  std::vector<TermBlock> terms;
  TermBlock* current = nullptr;

  std::string line;
  while (std::getline(is, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = strip(line);
    if (line.empty()) continue;
    if (line == "[term]") {
      terms.emplace_back();
      current = &terms.back();
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("hamiltonian spec: bad line '" + line + "'");
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    std::istringstream ss(value);
    if (key == "spins") {
      double j;
      while (ss >> j) spins.push_back(j);
    } else if (current == nullptr) {
      throw std::invalid_argument("hamiltonian spec: '" + key + "' outside a [term] block");
    } else if (key == "sites") {
      int s;
      while (ss >> s) current->sites.push_back(s);
    } else if (key == "tensor") {
      double x;
      while (ss >> x) current->tensor.push_back(x);
    } else if (key == "anisotropic") {
      current->anisotropic = (value == "true" || value == "1" || value == "yes");
    } else if (key == "norm") {
      current->norm = std::stod(value);
    } else {
      throw std::invalid_argument("hamiltonian spec: unknown key '" + key + "'");
    }
  }
  if (spins.empty()) throw std::invalid_argument("hamiltonian spec: missing spins");

  HamiltonianSpec spec;
  spec.ensemble = SpinEnsemble(spins);
  const int d = spec.ensemble.dim();
  spec.hamiltonian = {spec.ensemble.dims(), Matrix::Zero(d, d)};
  for (const auto& term : terms) {
    InteractionTensor t = zero_tensor(term.sites);
    if (term.tensor.size() != t.entries.size())
      throw std::invalid_argument("hamiltonian spec: tensor needs 3^K row-major entries");
    t.entries = term.tensor;
    if (term.anisotropic) t = project_anisotropic(t);
    Matrix op = multilinear_hamiltonian(t, spec.ensemble).mat;
    if (term.norm >= 0.0) {
      const double s = sup_norm(op);
      if (s > 0) op *= term.norm / s;
    }
    spec.hamiltonian.mat += op;
  }
  return spec;
}

HamiltonianSpec load_hamiltonian_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open hamiltonian spec: " + path);
  return parse_hamiltonian_spec(in);
}

}  // namespace pgdd
