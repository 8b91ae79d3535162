#include "monodim/exact_linalg.hpp"

#include "monodim/errors.hpp"

namespace monodim {

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix e(n, n);
  for (int i = 0; i < n; ++i) e.at(i, i) = GaussRat(1);
  return e;
}

ExactMatrix ExactMatrix::kron(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int p = 0; p < b.rows_; ++p)
        for (int q = 0; q < b.cols_; ++q)
          out.at(i * b.rows_ + p, j * b.cols_ + q) = a.at(i, j) * b.at(p, q);
    }
  return out;
}

bool ExactMatrix::is_zero() const {
  for (const auto& e : m_)
    if (!e.is_zero()) return false;
  return true;
}

int ExactMatrix::rank() const {
  ExactMatrix w = *this;
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r)
      if (!w.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int c = 0; c < cols_; ++c) std::swap(w.at(pivot, c), w.at(rank, c));
    GaussRat inv = GaussRat(1) / w.at(rank, col);
    for (int c = col; c < cols_; ++c) w.at(rank, c) = inv * w.at(rank, c);
    for (int r = 0; r < rows_; ++r) {
      if (r == rank || w.at(r, col).is_zero()) continue;
      GaussRat f = w.at(r, col);
      for (int c = col; c < cols_; ++c) w.at(r, c) = w.at(r, c) - f * w.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw internal_error("ExactMatrix: shape mismatch");
  ExactMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw internal_error("ExactMatrix: shape mismatch");
  ExactMatrix out = a;
  for (std::size_t i = 0; i < out.m_.size(); ++i) out.m_[i] += b.m_[i];
  return out;
}

ExactMatrix operator*(const GaussRat& s, const ExactMatrix& a) {
  ExactMatrix out = a;
  for (auto& e : out.m_) e = s * e;
  return out;
}

}  // namespace monodim
