#include "pgdd/majorana.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pgdd/ensemble.hpp"
#include "pgdd/symmetrize.hpp"

namespace pgdd {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInvarianceTol = 1e-9;
constexpr double kInfiniteRoot = 1e8;

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b *= static_cast<double>(n - k + i) / i;
  return b;
}

// Roots of sum_k c_k z^k via the companion matrix, with a Newton polish.
std::vector<Complex> polynomial_roots(std::vector<Complex> coeffs) {
  int degree = static_cast<int>(coeffs.size()) - 1;
  const double top = [&] {
    double m = 0;
    for (const auto& c : coeffs) m = std::max(m, std::abs(c));
    return m;
  }();
  while (degree > 0 && std::abs(coeffs[degree]) < 1e-14 * top) --degree;
  if (degree <= 0) return {};

  Matrix companion = Matrix::Zero(degree, degree);
  for (int i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < degree; ++i) companion(i, degree - 1) = -coeffs[i] / coeffs[degree];
  Eigen::ComplexEigenSolver<Matrix> es(companion, false);

  std::vector<Complex> roots;
  for (int i = 0; i < degree; ++i) {
    Complex z = es.eigenvalues()(i);
    for (int it = 0; it < 3; ++it) {
      Complex p = 0, dp = 0;
      for (int k = degree; k >= 0; --k) {
        dp = dp * z + p;
        p = p * z + coeffs[k];
      }
      if (std::abs(dp) < 1e-30) break;
      const Complex step = p / dp;
      if (std::abs(step) > 1.0 + std::abs(z)) break;
      z -= step;
    }
    roots.push_back(z);
  }
  return roots;
}

Vec3 root_to_star(const Complex& zeta) {
  // zeta = tan(theta/2) e^{i phi}, projected from the south pole.
  const double r = std::abs(zeta);
  if (r > kInfiniteRoot) return Vec3(0, 0, -1);
  const double theta = 2.0 * std::atan(r);
  const double phi = std::arg(zeta);
  return Vec3(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta));
}

Vec3 canonical_axis(const Vec3& v) {
  Vec3 n = v.normalized();
  for (int i = 0; i < 3; ++i) {
    if (std::abs(n(i)) > 1e-7) return n(i) > 0 ? n : Vec3(-n);
  }
  return n;
}

void add_axis(std::vector<Vec3>& axes, const Vec3& v) {
  if (v.norm() < 1e-6) return;
  const Vec3 n = canonical_axis(v);
  for (const auto& a : axes)
    if ((a - n).norm() < 1e-6) return;
  axes.push_back(n);
}

bool invariant_under(const Matrix& H, double j, const Rotation& r, double tol) {
  const Matrix u = wigner_d(j, r);
  return hs_norm(u.adjoint() * H * u - H) < tol;
}

// Perpendicular unit vector, deterministic.
Vec3 perpendicular(const Vec3& n) {
  const Vec3 trial = std::abs(n.z()) < 0.9 ? Vec3(0, 0, 1) : Vec3(1, 0, 0);
  return trial.cross(n).normalized();
}

}  // namespace

Constellation majorana_roots(const Vector& state) {
  const int d = static_cast<int>(state.size());
  if (d < 1 || state.norm() < 1e-300) throw std::invalid_argument("majorana_roots: zero state");
  const int two_j = d - 1;

  // p(z) = sum_m (-1)^(j-m) sqrt(C(2j, j-m)) lambda_m z^(j+m), with the
  // state stored in the m = j..-j order, so z^k has k = 2j - index.
  std::vector<Complex> coeffs(two_j + 1, Complex(0, 0));
  for (int i = 0; i < d; ++i) {
    const int k = two_j - i;  // polynomial power
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    coeffs[k] = sign * std::sqrt(binomial(two_j, i)) * state(i);
  }

  Constellation c;
  for (const auto& z : polynomial_roots(coeffs)) c.stars.push_back(root_to_star(z));
  while (static_cast<int>(c.stars.size()) < two_j) c.stars.push_back(Vec3(0, 0, -1));
  return c;
}

std::vector<MultipoleConstellation> operator_multipole_constellations(const Matrix& H, double j) {
  std::vector<MultipoleConstellation> out;
  for (const auto& mv : multipole_decompose(H, j)) {
    if (mv.L == 0 || mv.norm() < 1e-12) continue;
    MultipoleConstellation mc;
    mc.L = mv.L;
    mc.norm = mv.norm();
    mc.constellation = majorana_roots(mv.components);
    out.push_back(std::move(mc));
  }
  return out;
}

PointGroupReport detect_point_group(const Matrix& H, double j) {
  const int d = spin_dimension(j);
  if (H.rows() != d || H.cols() != d)
    throw std::invalid_argument("detect_point_group: dimension mismatch");

  PointGroupReport report;
  const double scale = hs_norm(H);
  const Matrix traceless = H - (H.trace() / static_cast<double>(d)) * Matrix::Identity(d, d);
  if (scale < 1e-300 || hs_norm(traceless) / scale < 1e-12) {
    report.name = "SO(3)";
    report.is_identity_multiple = true;
    return report;
  }
  const Matrix Hn = H / scale;

  // Continuous axial symmetry: [J.n, H] = 0 has a solution iff the 3x3
  // Gram matrix M_ab = Re Tr([J_a,H]^dag [J_b,H]) is singular; the null
  // vector is the axis (exact, no star candidates needed).
  const auto jops = angular_momentum_ops(j);
  Mat3 gram;
  {
    std::array<Matrix, 3> comms;
    for (int a = 0; a < 3; ++a) comms[a] = jops[a] * Hn - Hn * jops[a];
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) gram(a, b) = hs_inner(comms[a], comms[b]).real();
  }
  Eigen::SelfAdjointEigenSolver<Mat3> ges(gram);
  if (ges.eigenvalues()(0) < 1e-18 * std::max(1.0, ges.eigenvalues()(2))) {
    const Vec3 n = ges.eigenvectors().col(0);
    report.is_axially_continuous = true;
    report.axes.push_back({0, canonical_axis(n)});
    // Any perpendicular C2 upgrades C-inf to D-inf.
    const Vec3 p = perpendicular(n);
    bool dinf = false;
    for (int k = 0; k < 8 && !dinf; ++k) {
      const Vec3 c2 =
          rotation_from_axis_angle(n, k * kPi / 8.0).apply(p);
      if (invariant_under(Hn, j, rotation_from_axis_angle(c2, kPi), kInvarianceTol)) {
        report.axes.push_back({2, canonical_axis(c2)});
        dinf = true;
      }
    }
    report.name = dinf ? "D-inf" : "C-inf";
    return report;
  }

  // Candidate axes from the constellations: stars, pairwise sums, pairwise
  // cross products, and triple sums (face centers).
  std::vector<Vec3> stars;
  for (const auto& mc : operator_multipole_constellations(Hn, j))
    for (const auto& s : mc.constellation.stars) stars.push_back(s);

  std::vector<Vec3> candidates;
  for (const auto& s : stars) add_axis(candidates, s);
  for (std::size_t i = 0; i < stars.size(); ++i)
    for (std::size_t k = i + 1; k < stars.size(); ++k) {
      add_axis(candidates, stars[i] + stars[k]);
      add_axis(candidates, stars[i].cross(stars[k]));
      for (std::size_t l = k + 1; l < stars.size(); ++l)
        add_axis(candidates, stars[i] + stars[k] + stars[l]);
    }

  // Confirmed discrete rotations: highest fold per candidate axis.
  std::vector<std::pair<std::string, Rotation>> confirmed;
  std::vector<SymmetryAxis> confirmed_axes;
  for (const auto& n : candidates) {
    for (int fold = 12; fold >= 2; --fold) {
      const Rotation r = rotation_from_axis_angle(n, 2.0 * kPi / fold);
      if (invariant_under(Hn, j, r, kInvarianceTol)) {
        confirmed.emplace_back("g", r);
        confirmed_axes.push_back({fold, n});
        break;
      }
    }
  }

  if (confirmed.empty()) {
    report.name = "C1";
    return report;
  }

  PointGroup closure;
  try {
    closure = generate_group(confirmed, kDefaultMaxGroupOrder);
  } catch (const std::runtime_error&) {
    // Numerically inconsistent confirmations; fall back to the largest
    // single axis.
    const auto best = *std::max_element(
        confirmed_axes.begin(), confirmed_axes.end(),
        [](const SymmetryAxis& a, const SymmetryAxis& b) { return a.fold < b.fold; });
    report.name = "C" + std::to_string(best.fold);
    report.axes = {best};
    return report;
  }

  // Name the closure by its order and angle census.
  const int order = closure.order();
  const auto census = angle_census(closure);
  auto count_angle = [&](double angle) {
    auto it = census.find(llround(angle * 1e6));
    return it == census.end() ? 0 : it->second;
  };

  if (order == 12 && count_angle(2 * kPi / 3) == 8 && count_angle(kPi) == 3)
    report.name = "T";
  else if (order == 24 && count_angle(kPi / 2) == 6 && count_angle(2 * kPi / 3) == 8 &&
           count_angle(kPi) == 9)
    report.name = "O";
  else if (order == 60 && count_angle(2 * kPi / 5) == 12 && count_angle(4 * kPi / 5) == 12 &&
           count_angle(2 * kPi / 3) == 20 && count_angle(kPi) == 15)
    report.name = "I";
  else {
    // Cyclic or dihedral: all rotation axes either coincide (C_n) or split
    // into one principal axis plus perpendicular C2s (D_n).
    std::vector<Vec3> axes;
    int max_fold = 1;
    Vec3 principal(0, 0, 1);
    for (const auto& sa : confirmed_axes) {
      add_axis(axes, sa.axis);
      if (sa.fold > max_fold) {
        max_fold = sa.fold;
        principal = sa.axis;
      }
    }
    if (order == 2 * max_fold && axes.size() > 1)
      report.name = "D" + std::to_string(max_fold);
    else if (order == max_fold && axes.size() == 1)
      report.name = "C" + std::to_string(max_fold);
    else
      report.name = "order-" + std::to_string(order);
  }
  report.axes = confirmed_axes;
  report.group = std::move(closure);
  report.group.name = report.name;
  return report;
}

}  // namespace pgdd
