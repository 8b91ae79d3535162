#include "monodim/dec.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>
#include <random>

#include "monodim/errors.hpp"

namespace monodim {

namespace {

struct Assembled {
  Eigen::SparseMatrix<double> stiffness;  // cotangent weights, positive semidefinite
  Eigen::VectorXd mass;                   // lumped (one third of incident triangle areas)
  double area = 0;
};

Assembled assemble(const Mesh& mesh) {
  const int n = mesh.vertex_count();
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(mesh.faces().size() * 12);
  Eigen::VectorXd mass = Eigen::VectorXd::Zero(n);
  double total_area = 0;

  double scale = 0;
  for (const auto& l2 : mesh.squared_lengths()) scale = std::max({scale, l2[0], l2[1], l2[2]});

  for (std::size_t f = 0; f < mesh.faces().size(); ++f) {
    const auto& v = mesh.faces()[f];
    const auto& l2 = mesh.squared_lengths()[f];
    double s0 = std::sqrt(l2[0]), s1 = std::sqrt(l2[1]), s2 = std::sqrt(l2[2]);
    double s = 0.5 * (s0 + s1 + s2);
    double herons = s * (s - s0) * (s - s1) * (s - s2);
    double area = herons > 0 ? std::sqrt(herons) : 0;
    if (!(area > 1e-12 * scale))
      throw input_error("degenerate triangle " + std::to_string(f) + " (area below tolerance)");
    total_area += area;
    // cot of the angle at corner c, from the law of cosines
    double cot[3] = {(l2[1] + l2[2] - l2[0]) / (8 * area), (l2[0] + l2[2] - l2[1]) / (8 * area),
                     (l2[0] + l2[1] - l2[2]) / (8 * area)};
    static const int opp[3][2] = {{1, 2}, {2, 0}, {0, 1}};
    for (int c = 0; c < 3; ++c) {
      int a = v[opp[c][0]], b = v[opp[c][1]];
      double w = 0.5 * cot[c];
      triplets.emplace_back(a, b, -w);
      triplets.emplace_back(b, a, -w);
      triplets.emplace_back(a, a, w);
      triplets.emplace_back(b, b, w);
      mass[v[c]] += area / 3.0;
    }
  }
  Eigen::SparseMatrix<double> L(n, n);
  L.setFromTriplets(triplets.begin(), triplets.end());
  return {std::move(L), std::move(mass), total_area};
}

// Smallest eigenvalues of L v = lambda M v (M diagonal positive) via Lanczos
// with full reorthogonalization on C = M^{1/2} (L + sigma M)^{-1} M^{1/2}.
std::vector<double> smallest_generalized(const Assembled& sys, int count) {
  const int n = int(sys.mass.size());
  count = std::min(count, n);
  if (count < 1) throw input_error("eigenvalue count must be positive");

  double diag_scale = 0;
  for (int i = 0; i < n; ++i) diag_scale += sys.stiffness.coeff(i, i) / sys.mass[i];
  diag_scale /= n;
  const double sigma = std::max(1e-3 * diag_scale, 1e-12);

  Eigen::SparseMatrix<double> shifted = sys.stiffness;
  for (int i = 0; i < n; ++i) shifted.coeffRef(i, i) += sigma * sys.mass[i];
  Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> chol(shifted);
  if (chol.info() != Eigen::Success) throw internal_error("eigensolver: factorization failed");

  Eigen::VectorXd sqrt_m = sys.mass.cwiseSqrt();
  auto apply = [&](const Eigen::VectorXd& x) -> Eigen::VectorXd {
    Eigen::VectorXd y = sqrt_m.cwiseProduct(x);
    y = chol.solve(y);
    return sqrt_m.cwiseProduct(y);
  };

  const int steps = std::min(n, std::max(2 * count + 40, 60));
  std::vector<Eigen::VectorXd> basis;
  basis.reserve(steps);
  std::mt19937 rng(0x5eed1234u);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = unit(rng);
  v.normalize();
  basis.push_back(v);

  Eigen::VectorXd alpha(steps), beta(steps);
  int built = 0;
  for (int j = 0; j < steps; ++j) {
    Eigen::VectorXd w = apply(basis[j]);
    alpha[j] = basis[j].dot(w);
    w -= alpha[j] * basis[j];
    if (j > 0) w -= beta[j - 1] * basis[j - 1];
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : basis) w -= q.dot(w) * q;
    built = j + 1;
    double nb = w.norm();
    if (nb < 1e-12) break;  // invariant subspace found
    beta[j] = nb;
    if (j + 1 < steps) basis.push_back(w / nb);
  }

  Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(built, built);
  for (int j = 0; j < built; ++j) {
    tri(j, j) = alpha[j];
    if (j + 1 < built) tri(j, j + 1) = tri(j + 1, j) = beta[j];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tri);
  if (es.info() != Eigen::Success) throw internal_error("eigensolver: tridiagonal solve failed");

  // theta = 1/(lambda + sigma), largest theta <-> smallest lambda
  std::vector<double> lambdas;
  lambdas.reserve(built);
  for (int j = 0; j < built; ++j) {
    double theta = es.eigenvalues()[built - 1 - j];
    if (theta <= 0) break;  // beyond the resolvable window
    lambdas.push_back(1.0 / theta - sigma);
  }
  if (int(lambdas.size()) < count)
    throw internal_error("eigensolver: Krylov space exhausted before the requested count");
  lambdas.resize(count);
  std::sort(lambdas.begin(), lambdas.end());
  // clamp roundoff negatives in the kernel
  for (auto& l : lambdas)
    if (l < 0 && l > -1e-9 * std::max(1.0, diag_scale)) l = 0;
  return lambdas;
}

}  // namespace

std::vector<double> dec_eigenvalues(const Mesh& mesh, int count) {
  if (count < 1) throw input_error("eigenvalue count must be positive");
  return smallest_generalized(assemble(mesh), count);
}

double mesh_area(const Mesh& mesh) { return assemble(mesh).area; }

SpectrumTable dec_function_spectrum(const Mesh& mesh, int count) {
  std::vector<double> vals = dec_eigenvalues(mesh, count);

  // The kernel dimension is the number of connected components; snap it.
  int zeros = mesh.connected_components();
  if (int(vals.size()) < zeros) throw input_error("count smaller than the number of components");
  double zero_tol = 1e-8 * std::max(1.0, vals.back());
  for (int i = 0; i < zeros; ++i) {
    if (std::abs(vals[i]) > zero_tol)
      throw internal_error("expected a zero mode within tolerance, got " + std::to_string(vals[i]));
    vals[i] = 0;
  }

  SpectrumTable table;
  table.from_mesh = true;
  table.cutoff = vals.back();
  std::size_t i = 0;
  while (i < vals.size()) {
    std::size_t j = i + 1;
    while (j < vals.size() && vals[j] - vals[j - 1] <= 1e-3 * std::max(1.0, std::abs(vals[j]))) ++j;
    double mean = 0;
    for (std::size_t t = i; t < j; ++t) mean += vals[t];
    mean /= double(j - i);
    table.entries.push_back({vals[i] == 0 ? 0 : mean, int(j - i), 0});
    i = j;
  }
  return table;
}

SpectrumTable dec_spectrum_to_cutoff(const Mesh& mesh, double nu_cutoff) {
  int count = std::max(16, int(mesh_area(mesh) * nu_cutoff / (4 * M_PI) * 1.5) + 8);
  for (;;) {
    count = std::min(count, mesh.vertex_count());
    SpectrumTable table = dec_function_spectrum(mesh, count);
    if (table.cutoff >= nu_cutoff || count == mesh.vertex_count()) {
      if (table.cutoff < nu_cutoff) table.cutoff = nu_cutoff;  // full spectrum computed
      return table;
    }
    count *= 2;
  }
}

}  // namespace monodim
