#pragma once

#include <string>
#include <utility>
#include <vector>

#include "monodim/boundary.hpp"
#include "monodim/indicial.hpp"

namespace monodim {

/// The defect index as a piecewise-constant odd integer function of the
/// weight, represented by its jump set. Odd symmetry and the jump relation
/// defect(r-) - defect(r+) = J(r) determine it uniquely:
///   defect(alpha) = -J(0)/2 - sum_{0 < r < alpha} J(r)   for alpha > 0.
class DefectProfile {
 public:
  /// Builds from a symmetric root list (value-merged). Verifies J(r) = J(-r).
  static DefectProfile from_roots(const std::vector<IndicialRoot>& roots, double tol);

  int zero_multiplicity() const { return j0_; }
  /// Jumps at strictly positive roots, ascending.
  const std::vector<std::pair<double, int>>& positive_jumps() const { return jumps_; }
  double tolerance() const { return tol_; }

  /// Largest root magnitude the profile resolves.
  double resolved_up_to() const;

  std::string to_csv(double half_width) const;

 private:
  int j0_ = 0;
  std::vector<std::pair<double, int>> jumps_;
  double tol_ = 1e-9;
};

/// Defect index at a non-root weight. Throws alpha_at_root_error when alpha
/// sits on a root (never nudged), internal_error on a half-integral result.
int defect(const DefectProfile& profile, double alpha);

/// defect(alpha1) - defect(alpha2), cross-checked against the sum of jumps in
/// (alpha1, alpha2).
int index_jump(const DefectProfile& profile, double alpha1, double alpha2);

/// Distance from 0 to the nearest nonzero root.
double epsilon0(const std::vector<IndicialRoot>& roots);

/// 4 * (sum of component charges).
int topological_index(const BoundarySurface& surface);

/// (r+1, r+2) where r is the smallest root strictly above alpha.
std::pair<double, double> leading_asymptotics(const std::vector<IndicialRoot>& roots, double alpha);

/// Informational only; the curvature hypothesis cannot be checked from
/// boundary data, so it is a caller-supplied flag.
std::string surjectivity_advisory(double alpha, bool ricci_nonnegative);

struct VolumeScalingAdvisory {
  double nu_min = 0;      // smallest positive eigenvalue over all components
  double area_factor = 1; // metric scale c with nu_min / c >= 2; 1 if already satisfied
  std::string text;
};
VolumeScalingAdvisory volume_scaling_advisory(const BoundarySurface& surface);

struct VdimReport {
  double alpha = 0;
  int topological_index = 0;
  int defect = 0;
  int vdim = 0;
  double epsilon0 = 0;
  double u0_order = 0;
  double u1_order = 0;
  std::vector<std::string> advisories;
};

/// The full pipeline: roots, defect, vdim = 4k + defect(alpha), weight window,
/// leading asymptotic orders, advisories.
VdimReport vdim(const BoundarySurface& surface, double alpha, double root_cutoff,
                bool ricci_nonnegative = false);

}  // namespace monodim
