#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <utility>
#include <vector>

namespace spectacular {

using Int = boost::multiprecision::cpp_int;

/// Dense matrix over the integers with arbitrary-precision entries.
/// Intermediate Smith-form entries can overflow machine words even on
/// small inputs, so exactness comes first.
class IntMatrix {
public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& operator()(int i, int j) { return a_[index(i, j)]; }
  const Int& operator()(int i, int j) const { return a_[index(i, j)]; }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Int& x = (*this)(i, k);
        if (x == 0) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
      }
    return r;
  }

  void swap_rows(int i, int j) {
    for (int k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }
  void swap_cols(int i, int j) {
    for (int k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
  }
  // row i -= f * row j
  void row_axpy(int i, int j, const Int& f) {
    for (int k = 0; k < cols_; ++k) (*this)(i, k) -= f * (*this)(j, k);
  }
  void col_axpy(int i, int j, const Int& f) {
    for (int k = 0; k < rows_; ++k) (*this)(k, i) -= f * (*this)(k, j);
  }
  void negate_row(int i) {
    for (int k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
  }

private:
  size_t index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("matrix index");
    return static_cast<size_t>(i) * cols_ + j;
  }

  int rows_, cols_;
  std::vector<Int> a_;
};

/// U * M * V = diag(d_1..d_r) with d_1 | d_2 | ... | d_r, d_i > 0,
/// U and V unimodular.
struct SmithForm {
  std::vector<Int> diagonal;
  int rank = 0;
  IntMatrix u, v;

  IntMatrix diagonal_matrix(int rows, int cols) const {
    IntMatrix d(rows, cols);
    for (size_t i = 0; i < diagonal.size(); ++i) d(static_cast<int>(i), static_cast<int>(i)) = diagonal[i];
    return d;
  }
};

/// Smith normal form by row/column reduction.  Pivot rule: smallest nonzero
/// absolute value, ties broken row-major, which keeps coefficient growth in
/// check and makes the result deterministic.
inline SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  int rows = a.rows(), cols = a.cols();
  SmithForm out;
  out.u = IntMatrix::identity(rows);
  out.v = IntMatrix::identity(cols);

  auto find_pivot = [&](int t) -> std::pair<int, int> {
    int bi = -1, bj = -1;
    Int best = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (a(i, j) == 0) continue;
        Int mag = abs(a(i, j));
        if (bi < 0 || mag < best) {
          best = mag;
          bi = i;
          bj = j;
        }
      }
    return {bi, bj};
  };

  int t = 0;
  while (t < rows && t < cols) {
    auto [pi, pj] = find_pivot(t);
    if (pi < 0) break;  // submatrix is zero
    if (pi != t) {
      a.swap_rows(t, pi);
      out.u.swap_rows(t, pi);
    }
    if (pj != t) {
      a.swap_cols(t, pj);
      out.v.swap_cols(t, pj);
    }

    bool clean = true;
    for (int i = t + 1; i < rows; ++i) {
      if (a(i, t) == 0) continue;
      Int f = a(i, t) / a(t, t);  // truncated quotient; remainder re-enters pivot search
      if (f != 0) {
        a.row_axpy(i, t, f);
        out.u.row_axpy(i, t, f);
      }
      if (a(i, t) != 0) clean = false;
    }
    for (int j = t + 1; j < cols; ++j) {
      if (a(t, j) == 0) continue;
      Int f = a(t, j) / a(t, t);
      if (f != 0) {
        a.col_axpy(j, t, f);
        out.v.col_axpy(j, t, f);
      }
      if (a(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // a strictly smaller remainder exists; re-pivot

    // pivot must divide every remaining entry for the divisibility chain
    bool divides_all = true;
    for (int i = t + 1; i < rows && divides_all; ++i)
      for (int j = t + 1; j < cols && divides_all; ++j)
        if (a(i, j) % a(t, t) != 0) {
          a.row_axpy(t, i, Int(-1));  // pull the offending row into play
          out.u.row_axpy(t, i, Int(-1));
          divides_all = false;
        }
    if (!divides_all) continue;

    if (a(t, t) < 0) {
      a.negate_row(t);
      out.u.negate_row(t);
    }
    ++t;
  }

  out.rank = t;
  out.diagonal.reserve(t);
  for (int i = 0; i < t; ++i) out.diagonal.push_back(a(i, i));
  return out;
}

}  // namespace spectacular
