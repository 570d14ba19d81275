#pragma once

// Dense matrices over an exact field, with reduced row echelon form, rank,
// kernels and inverses. All arithmetic is exact; zero-row and zero-column
// shapes are first-class (degreewise maps between 0-dimensional components).

#include <cstddef>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "boxmod/scalar.hpp"

namespace boxmod {

template <Field K>
class DenseMatrix {
 public:
  DenseMatrix() : rows_(0), cols_(0) {}
  DenseMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, K()) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
  }
  DenseMatrix(int rows, int cols, std::vector<K> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != static_cast<std::size_t>(rows) * cols)
      throw std::invalid_argument("matrix data size mismatch");
  }

  static DenseMatrix identity(int n) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = K(1L);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  K& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const K& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool is_zero() const {
    for (const K& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool operator==(const DenseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const DenseMatrix& o) const { return !(*this == o); }

  DenseMatrix operator*(const DenseMatrix& o) const {
    if (cols_ != o.rows_)
      throw std::invalid_argument("matrix product shape mismatch: " + shape_str() + " * " + o.shape_str());
    DenseMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const K& a = (*this)(i, k);
        if (a.is_zero()) continue;
        for (int j = 0; j < o.cols_; ++j) {
          const K& b = o(k, j);
          if (!b.is_zero()) r(i, j) += a * b;
        }
      }
    return r;
  }

  DenseMatrix operator+(const DenseMatrix& o) const {
    require_same_shape(o, "+");
    DenseMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
  }

  DenseMatrix operator-(const DenseMatrix& o) const {
    require_same_shape(o, "-");
    DenseMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
  }

  DenseMatrix scaled(const K& c) const {
    DenseMatrix r = *this;
    for (K& x : r.data_) x *= c;
    return r;
  }

  DenseMatrix transpose() const {
    DenseMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  std::vector<K> apply(const std::vector<K>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("apply: vector length mismatch");
    std::vector<K> out(rows_, K());
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  std::vector<K> row(int i) const {
    std::vector<K> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }

  std::vector<K> col(int j) const {
    std::vector<K> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  void set_row(int i, const std::vector<K>& v) {
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }

  static DenseMatrix from_rows(int cols, const std::vector<std::vector<K>>& rows) {
    DenseMatrix m(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows(); ++i) {
      if (static_cast<int>(rows[i].size()) != cols) throw std::invalid_argument("from_rows: ragged rows");
      m.set_row(i, rows[i]);
    }
    return m;
  }

  // block-diagonal sum
  static DenseMatrix diag_sum(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix r(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
    for (int i = 0; i < b.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j) r(a.rows_ + i, a.cols_ + j) = b(i, j);
    return r;
  }

  struct Echelon {
    DenseMatrix rref;
    std::vector<int> pivots;
    int rank() const { return static_cast<int>(pivots.size()); }
  };

  // exact Gauss-Jordan; reduced row echelon form with unit pivots
  Echelon echelon() const {
    DenseMatrix m = *this;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int p = -1;
      for (int i = r; i < rows_; ++i)
        if (!m(i, c).is_zero()) {
          p = i;
          break;
        }
      if (p < 0) continue;
      if (p != r)
        for (int j = 0; j < cols_; ++j) std::swap(m(p, j), m(r, j));
      K inv = K(1L) / m(r, c);
      for (int j = c; j < cols_; ++j) m(r, j) *= inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == r || m(i, c).is_zero()) continue;
        K f = m(i, c);
        for (int j = c; j < cols_; ++j) m(i, j) -= f * m(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return Echelon{std::move(m), std::move(pivots)};
  }

  int rank() const { return echelon().rank(); }

  // rows of the result span ker(*this); dim ker = cols - rank (asserted)
  DenseMatrix kernel_basis() const {
    Echelon e = echelon();
    std::vector<bool> is_pivot(cols_, false);
    for (int p : e.pivots) is_pivot[p] = true;
    DenseMatrix out(cols_ - e.rank(), cols_);
    int k = 0;
    for (int c = 0; c < cols_; ++c) {
      if (is_pivot[c]) continue;
      out(k, c) = K(1L);
      for (int r = 0; r < e.rank(); ++r) out(k, e.pivots[r]) = -e.rref(r, c);
      ++k;
    }
    if (k != out.rows()) throw std::logic_error("kernel dimension violates rank-nullity");
    return out;
  }

  DenseMatrix inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    DenseMatrix aug(rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = K(1L);
    }
    Echelon e = aug.echelon();
    for (int i = 0; i < rows_; ++i)
      if (i >= e.rank() || e.pivots[i] != i) throw std::domain_error("matrix is singular");
    DenseMatrix inv(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) inv(i, j) = e.rref(i, cols_ + j);
    return inv;
  }

  std::string shape_str() const {
    std::ostringstream os;
    os << rows_ << 'x' << cols_;
    return os.str();
  }

 private:
  void require_same_shape(const DenseMatrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument(std::string("matrix ") + op + " shape mismatch");
  }

  int rows_, cols_;
  std::vector<K> data_;
};

template <Field K>
std::ostream& operator<<(std::ostream& os, const DenseMatrix<K>& m) {
  os << '[';
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
  }
  return os << ']';
}

}  // namespace boxmod
