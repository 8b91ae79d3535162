#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "monodim/rational.hpp"

namespace monodim {

// Exact Clifford/exterior algebra over R^n with orthonormal oriented basis
// e_0, ..., e_{n-1}.  Multivectors are sparse maps from basis blades to
// Gaussian rationals; a blade is encoded as a bitmask (bit i set <=> e_i is a
// factor, factors in increasing index order).
//
// Conventions, fixed once for the whole project:
//   * Clifford product: v.v = -|v|^2 for grade-1 v, so the complex volume
//     element squares to +1 in odd dimensions.
//   * Matrix basis order: graded lexicographic (by grade, then by increasing
//     index tuple), the order blade_basis() returns.  Golden CSV dumps use it.

using Blade = std::uint32_t;

class CliffordElement {
 public:
  explicit CliffordElement(int dimension);
  CliffordElement(int dimension, Blade blade, GaussRat coeff);

  static CliffordElement scalar(int dimension, GaussRat value);
  static CliffordElement basis_vector(int dimension, int i);

  int dimension() const { return n_; }
  const std::map<Blade, GaussRat>& coefficients() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  /// True if every stored blade has the same grade (the zero element is
  /// homogeneous of every grade).
  bool is_homogeneous() const;
  /// Grade of a homogeneous element; throws input_error otherwise.
  int grade() const;

  GaussRat coefficient(Blade b) const;
  void set_coefficient(Blade b, const GaussRat& c);

  CliffordElement grade_part(int k) const;

  friend CliffordElement operator+(const CliffordElement& a, const CliffordElement& b);
  friend CliffordElement operator-(const CliffordElement& a, const CliffordElement& b);
  friend CliffordElement operator-(const CliffordElement& a);
  friend CliffordElement operator*(const GaussRat& s, const CliffordElement& a);
  friend bool operator==(const CliffordElement& a, const CliffordElement& b);

  std::string to_string() const;

 private:
  int n_;
  std::map<Blade, GaussRat> coeffs_;  // no zero coefficients stored
};

/// Exterior product.
CliffordElement wedge(const CliffordElement& a, const CliffordElement& b);

/// Interior product v ~| a for grade-1 v (metric contraction).
CliffordElement interior(const CliffordElement& v, const CliffordElement& a);

/// Clifford product with v.v = -|v|^2.
CliffordElement clifford_product(const CliffordElement& a, const CliffordElement& b);

/// Hodge star of a homogeneous element (orthonormal oriented basis).  In odd
/// dimensions star is an involution on every grade.
CliffordElement hodge_star(const CliffordElement& a);
CliffordElement hodge_star(const CliffordElement& a, int n);

/// Sign factor tau on grade-k forms in dimension n: i^(k(k-1) + 2nk + floor((n+1)/2)).
/// Asserted real (+1 or -1) whenever n is odd.
GaussRat tau(int k, int n);

/// Multiply each grade component of a by tau(grade, n).
CliffordElement apply_tau(const CliffordElement& a);

/// Normalized complex volume element i^floor((n+1)/2) e_0...e_{n-1}; its
/// Clifford square is verified to be +1 on construction.
CliffordElement volume_element(int n);

/// N = k on odd-degree boundary forms, m - k on even-degree ones
/// (m = boundary dimension).
int n_operator(int k, int m);

// ---------------------------------------------------------------------------

/// All blades of Lambda^* R^n in graded lexicographic order.
std::vector<Blade> blade_basis(int n);
/// Blades of the odd-grade part only, same relative order.
std::vector<Blade> odd_blade_basis(int n);
/// Label such as "1", "e0", "e02" for CSV headers.
std::string blade_label(Blade b);

/// Dense endomorphism of Lambda^* R^n in the blade_basis() order, with the
/// grade blocks it is allowed to touch recorded for sanity checking.
class FormEndomorphism {
 public:
  FormEndomorphism(int n, std::vector<int> domain_grades, std::vector<int> codomain_grades);

  static FormEndomorphism identity(int n);

  int dimension() const { return n_; }
  int size() const { return static_cast<int>(basis_.size()); }
  const std::vector<Blade>& basis() const { return basis_; }
  const std::vector<int>& domain_grades() const { return dom_; }
  const std::vector<int>& codomain_grades() const { return cod_; }

  GaussRat& at(int row, int col);
  const GaussRat& at(int row, int col) const;

  CliffordElement apply(const CliffordElement& x) const;

  friend FormEndomorphism operator*(const FormEndomorphism& a, const FormEndomorphism& b);
  friend FormEndomorphism operator+(const FormEndomorphism& a, const FormEndomorphism& b);
  friend FormEndomorphism operator-(const FormEndomorphism& a, const FormEndomorphism& b);
  friend FormEndomorphism operator*(const GaussRat& s, const FormEndomorphism& a);
  friend bool operator==(const FormEndomorphism& a, const FormEndomorphism& b);

  /// Entries outside the declared grade blocks must vanish.
  bool grade_blocks_respected() const;

  /// Row-major CSV with a header row of blade labels.
  std::string to_csv() const;

 private:
  int n_;
  std::vector<Blade> basis_;
  std::vector<int> index_of_blade_;
  std::vector<int> dom_, cod_;
  std::vector<GaussRat> m_;
};

// ---------------------------------------------------------------------------
// Odd signature operator algebra.

/// Clifford action of a nonzero covector xi on odd forms, computed two ways:
/// star tau (xi ^ . - xi ~| .) and left Clifford multiplication by
/// omega_C . xi.  The two matrices are asserted identical before returning.
FormEndomorphism odd_signature_symbol(const CliffordElement& xi, int n);

/// Induced boundary Clifford action cl(e_j e_0) = -e_j e_0 . , as an
/// endomorphism of Lambda^* R^n (parity preserving; 1 <= j <= n-1).
FormEndomorphism induced_boundary_action(int j, int n);

/// Matrix of the standard Clifford action e ^ . - e ~| . of a boundary basis
/// covector on Lambda^* R^(n-1); used as the independent comparison target for
/// induced_boundary_action under the normal-splitting identification.
FormEndomorphism boundary_clifford_action(int j_boundary, int m);

/// Derivation action of the so(n) rotation generator in the (e_0, e_i) plane
/// on Lambda^* R^n, with e_0 -> e_i and e_i -> -e_0 on grade one.
FormEndomorphism normal_rotation_derivation(int i, int n);

struct ConnectionCorrectionReport {
  bool passed = true;
  std::vector<std::string> checks;    // one line per verified identity
  std::vector<std::string> failures;  // offending basis elements, if any
};

/// Assembles sum_i cl(e_i e_0) o E_{0i} on Lambda^* R^n and checks that it is
/// the diagonal operator -N under the normal-splitting identification,
/// reproducing the casewise action rules on every basis blade.
ConnectionCorrectionReport verify_connection_correction(int n);

}  // namespace monodim
