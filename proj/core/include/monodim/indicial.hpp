#pragma once

#include <array>
#include <string>
#include <vector>

#include "monodim/boundary.hpp"

namespace monodim {

// Indicial roots of the rescaled odd signature operator over the boundary
// cylinder. Two kinds:
//   * topological roots (-1)^k (m/2 - k) carried by harmonic k-forms, with
//     multiplicity b^k;
//   * geometric roots -1/2 +- sqrt((m/2-k-1/2)^2 + nu)  (family A)
//                     +1/2 +- sqrt((m/2-k-1/2)^2 + nu)  (family B)
//     carried by the (d phi = sqrt(nu) psi, delta psi = sqrt(nu) phi) coupling
//     of nonzero Laplace eigenvalues nu, with the eigenvalue's multiplicity.
//
// For each degree k the coupled pair forms a single 2x2 block whose shape is
// family A for k odd and family B for k even; enumerating both families for
// every k would list each invariant block twice (the delta-coupled pair in
// degrees (m-k, m-k-1) is the d-coupled pair in degree m-k-1), so multiplicity
// accounting uses one block per (nu, k). The assembled-operator rank oracle
// below is the ground truth for the aggregate counts.

enum class RootFamily { A, B };

struct RootOrigin {
  enum class Kind { Topological, Geometric };
  Kind kind = Kind::Topological;
  int component = 0;
  int degree = 0;          // form degree k
  RootFamily family = RootFamily::A;  // geometric only
  double eigenvalue = 0;   // nu, geometric only
  int multiplicity = 0;
  std::string to_string() const;
};

struct IndicialRoot {
  double value = 0;
  int multiplicity = 0;  // complex dimension of the formal nullspace
  std::vector<RootOrigin> contributions;
};

/// Harmonic-form roots for boundary dimension m from Betti numbers b^0..b^m.
std::vector<IndicialRoot> topological_roots(int m, const std::vector<int>& betti, int component_id = 0);

/// Eigenvalue-coupled roots with |value| <= root_cutoff. The spectrum table is
/// used for every degree (exact for m = 2 by Hodge duality on surfaces; for
/// general m callers supply the per-degree coupled spectrum themselves).
/// Throws input_error if the table's cutoff cannot certify completeness.
std::vector<IndicialRoot> geometric_roots(int m, const SpectrumTable& spectrum, double root_cutoff,
                                          int component_id = 0);

/// Merge roots whose values agree within tol, summing multiplicities.
std::vector<IndicialRoot> merge_roots(std::vector<IndicialRoot> roots, double tol);

/// Full indicial root list of the boundary surface (m = 2), all components,
/// sorted by value, complete in [-root_cutoff, root_cutoff].
std::vector<IndicialRoot> bspec(const BoundarySurface& surface, double root_cutoff);

/// Value-merge tolerance: 1e-9 for analytic spectra, 1e-6 when any component
/// is mesh-backed.
double root_merge_tolerance(const BoundarySurface& surface);

struct IndicialMatrix {
  double r = 0;
  int k = 0;
  double nu = 0;
  RootFamily family = RootFamily::A;
  // row-major [[a,b],[c,d]]:
  //   family A: [[r + M, sqrt(nu)], [sqrt(nu), r - M + 1]]
  //   family B: [[r - M, sqrt(nu)], [sqrt(nu), r + M - 1]]   with M = m/2 - k
  std::array<double, 4> entries{};
  double det() const { return entries[0] * entries[3] - entries[1] * entries[2]; }
};

IndicialMatrix indicial_matrix(int m, int k, double nu, RootFamily family, double r);

/// Rank deficiency of the boundary-model operator at weight r, assembled
/// block-diagonally: 1x1 harmonic blocks r + (-1)^{k+1}(m/2-k) per Betti
/// dimension and one 2x2 block per (nonzero eigenvalue, degree k). Singular
/// values below 1e-8 times the block norm count as zero. Independent of the
/// root formulas above; must agree with the multiplicity in bspec().
int nullspace_oracle(const BoundarySurface& surface, double r, double nu_cutoff);

/// Sufficient eigenvalue coverage for all roots with |value| <= root_cutoff.
double required_spectrum_cutoff(int m, double root_cutoff);

std::string roots_to_csv(const std::vector<IndicialRoot>& roots);

/// ASCII number line; topological roots as large dots 'O', geometric as 'o'.
std::string render_root_line(const std::vector<IndicialRoot>& roots, double half_width, int columns = 97);

}  // namespace monodim
