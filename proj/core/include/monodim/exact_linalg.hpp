#pragma once

#include <vector>

#include "monodim/rational.hpp"

namespace monodim {

/// Dense matrix over the Gaussian rationals. Small sizes only; used where a
/// statement must hold exactly (symbol computations, rank bookkeeping).
class ExactMatrix {
 public:
  ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), m_(std::size_t(rows) * cols) {}

  static ExactMatrix identity(int n);
  /// Kronecker product a (x) b.
  static ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  GaussRat& at(int r, int c) { return m_[std::size_t(r) * cols_ + c]; }
  const GaussRat& at(int r, int c) const { return m_[std::size_t(r) * cols_ + c]; }

  bool is_zero() const;
  int rank() const;  // exact Gaussian elimination

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const GaussRat& s, const ExactMatrix& a);

 private:
  int rows_, cols_;
  std::vector<GaussRat> m_;
};

}  // namespace monodim
