#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "monodim/rational.hpp"

namespace monodim {

/// su(2) value in the orthonormal basis T_a = -(i/2) sigma_a, for which
/// [T_a, T_b] = eps_{abc} T_c; the bracket of coefficient vectors is the cross
/// product and |Phi| is the Euclidean norm of the coefficients.
struct SuValue {
  std::array<double, 3> c{0, 0, 0};

  friend SuValue operator+(const SuValue& a, const SuValue& b) {
    return {{a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2]}};
  }
  friend SuValue operator-(const SuValue& a, const SuValue& b) {
    return {{a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2]}};
  }
  friend SuValue operator*(double s, const SuValue& a) { return {{s * a.c[0], s * a.c[1], s * a.c[2]}}; }
  SuValue& operator+=(const SuValue& b) { return *this = *this + b; }
};

inline SuValue bracket(const SuValue& a, const SuValue& b) {
  return {{a.c[1] * b.c[2] - a.c[2] * b.c[1], a.c[2] * b.c[0] - a.c[0] * b.c[2],
           a.c[0] * b.c[1] - a.c[1] * b.c[0]}};
}
inline double inner(const SuValue& a, const SuValue& b) {
  return a.c[0] * b.c[0] + a.c[1] * b.c[1] + a.c[2] * b.c[2];
}
inline double su_norm(const SuValue& a) { return std::sqrt(inner(a, a)); }

/// Uniform Cartesian grid over the cube [-extent, extent]^3.
struct Grid {
  double extent = 8.0;
  int n = 33;

  double h() const { return 2 * extent / (n - 1); }
  double coord(int i) const { return -extent + i * h(); }
  std::size_t size() const { return std::size_t(n) * n * n; }
  std::size_t idx(int i, int j, int k) const { return (std::size_t(i) * n + j) * n + k; }
  friend bool operator==(const Grid& a, const Grid& b) { return a.extent == b.extent && a.n == b.n; }
};

using SuField = std::vector<SuValue>;  // one SuValue per grid site

/// Connection + Higgs pair sampled on a grid.
struct FieldConfig {
  Grid grid;
  std::array<SuField, 3> connection;  // A_i
  SuField higgs;                      // Phi
};

/// Odd-degree form data (1-form components and the 3-form coefficient).
struct OddFormField {
  Grid grid;
  std::array<SuField, 3> one_form;
  SuField three_form;  // coefficient of the volume form
};

/// Even-degree output of the linearized operator: 2-forms are stored by their
/// dual components (w = sum_k w_k * (star dx^k)); the scalar slot carries the
/// gauge-fixing functional.
struct D2Result {
  Grid grid;
  std::array<SuField, 3> two_form;
  SuField coulomb;
};

// ---------------------------------------------------------------------------

/// The explicit spherically symmetric unit-charge solution on the cube:
///   Phi^a = -x^a (coth r - 1/r)/r,   A_i^a = eps_{aij} x^j (1 - r/sinh r)/r^2,
/// with series evaluation near r = 0. |Phi| tends to 1 at the faces within 2/extent.
FieldConfig bps_monopole(double extent, int n_points);

/// max_x |F_A - star d_A Phi| over interior sites, centered differences.
double bogomolny_residual(const FieldConfig& config);

/// First Chern number of the positive-eigenvalue line bundle of Phi on the
/// boundary of the cube, evaluated as a discrete winding sum. +1 for
/// bps_monopole output.
double boundary_charge(const FieldConfig& config);

/// Infinitesimal gauge action: gamma -> (-d_A gamma, -star [Phi, gamma]).
OddFormField apply_D1(const FieldConfig& config, const SuField& gamma);

/// Linearized equation + gauge functional:
///   (a, phi) -> d_A a + star [Phi, a] + delta_A phi  (two_form)
///   and the gauge-fixing scalar  -delta_A a + [Phi, star phi]  (coulomb).
D2Result apply_D2(const FieldConfig& config, const OddFormField& field);

/// Tangent vector induced by the gauge action, as (1-form, scalar) data.
struct TangentPair {
  Grid grid;
  std::array<SuField, 3> a;
  SuField phi0;
};
TangentPair gauge_tangent(const FieldConfig& config, const SuField& gamma);

/// Derivative of the curvature-minus-dual-gradient map at the configuration,
/// applied to a tangent pair; equals the two_form slot of apply_D2 on the
/// corresponding odd field.
std::array<SuField, 3> linearized_bogomolny(const FieldConfig& config, const TangentPair& t);

/// Interior max norm of the composite D2 (two_form slot) applied to D1 gamma.
double chain_residual(const FieldConfig& config, const SuField& gamma);

struct WeitzenbockResult {
  double residual0 = 0;   // scalar-slot identity, interior max norm
  double residual2 = 0;   // 2-form-slot identity, interior max norm
  double positivity = 0;  // integral of <-[Phi,[Phi,gamma]], gamma>, must be >= 0
};

/// Compares the composed first-order operators against the covariant Laplacian
/// minus the squared potential, on a flat grid (curvature term zero).
WeitzenbockResult weitzenbock_check(const FieldConfig& config, const SuField& gamma,
                                    const std::array<SuField, 3>& two_form);

/// Relative defect of <D1 gamma, w> = <gamma, D1* w> for compactly supported
/// samples (exactly the coulomb slot of apply_D2 on w).
double adjointness_residual(const FieldConfig& config, const SuField& gamma, const OddFormField& w);

/// Smooth bump supported in |x - center| < radius, amplitude direction dir.
SuField bump_field(const Grid& grid, const std::array<double, 3>& center, double radius,
                   const SuValue& dir);
OddFormField bump_odd_field(const Grid& grid, unsigned seed);

// ---------------------------------------------------------------------------

struct SymbolReport {
  bool composite_is_zero = false;  // sigma(D2) sigma(D1) = 0, exact
  int rank_d1 = 0;                 // 3 (injective: 1 per su(2) direction)
  int rank_d2 = 0;                 // 9 (surjective onto the 2-form slot)
  int middle_dimension = 0;        // 12
  bool exact_at_middle = false;    // rank_d1 + rank_d2 == middle_dimension
  bool contraction_injective_on_top = false;
};

/// Principal symbols at a nonzero rational covector, over the Gaussian
/// rationals tensored with su(2); all statements are exact.
SymbolReport symbol_exactness(const std::array<Rational, 3>& xi);

// ---------------------------------------------------------------------------

struct BpsLevelReport {
  int n = 0;
  double h = 0;
  double bogomolny = 0;
  double chain = 0;
  double weitzenbock0 = 0;
  double weitzenbock2 = 0;
  double coulomb_selfcheck = 0;   // adjointness residual
  double gauge_consistency = 0;   // two code paths for the same derivative
};

struct BpsVerificationReport {
  double extent = 0;
  std::vector<BpsLevelReport> levels;
  std::vector<double> bogomolny_rates;  // residual ratios between levels
  std::vector<double> chain_rates;
  std::vector<double> weitzenbock0_rates;
  double charge = 0;
  bool symbol_composite_zero = false;
};

/// Runs the full verification ladder: n_points doubling per level.
BpsVerificationReport run_bps_verification(double extent, int n_points, int levels);

}  // namespace monodim
