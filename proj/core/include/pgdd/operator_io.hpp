#pragma once

#include <iosfwd>
#include <string>

#include "pgdd/ensemble.hpp"
#include "pgdd/interaction.hpp"

namespace pgdd {

// Operator text format: line 1 `dim d`, then d rows of d `re,im` entries
// separated by whitespace.
void write_operator(std::ostream& os, const Matrix& m);
Matrix read_operator(std::istream& is);
Matrix load_operator_file(const std::string& path);

// Hamiltonian spec file: a `spins = j1 j2 ...` line followed by [term]
// blocks, each with `sites = ...`, row-major `tensor = ...` entries,
// and optional `anisotropic = true` (project) and `norm = x` (rescale).
struct HamiltonianSpec {
  SpinEnsemble ensemble;
  SpinOperator hamiltonian;
};

HamiltonianSpec parse_hamiltonian_spec(std::istream& is);
HamiltonianSpec load_hamiltonian_spec(const std::string& path);

}  // namespace pgdd
