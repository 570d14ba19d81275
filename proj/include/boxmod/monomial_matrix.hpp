#pragma once

// Degree-zero maps between multigraded free modules: every entry is a scalar
// times a monomial whose exponent is forced by the row and column shifts.
// Free complexes of such maps carry resolutions; they can be composed,
// sliced degreewise, radicalized (shift -> sqrt(shift)) and minimized by
// cancelling unit entries.

#include <stdexcept>
#include <vector>

#include "boxmod/betti_table.hpp"
#include "boxmod/exponent_vector.hpp"
#include "boxmod/matrix.hpp"

namespace boxmod {

template <Field K>
class MonomialMatrix {
 public:
  // rows are targets S(-row_shifts[j]), cols sources S(-col_shifts[k]);
  // entry (j,k) represents scalars(j,k) * x^(col_shifts[k] - row_shifts[j])
  MonomialMatrix(std::vector<ExponentVector> row_shifts, std::vector<ExponentVector> col_shifts,
                 DenseMatrix<K> scalars)
      : rows_(std::move(row_shifts)), cols_(std::move(col_shifts)), scalars_(std::move(scalars)) {
    if (scalars_.rows() != static_cast<int>(rows_.size()) ||
        scalars_.cols() != static_cast<int>(cols_.size()))
      throw std::invalid_argument("monomial matrix: shift/scalar shape mismatch");
    for (int j = 0; j < scalars_.rows(); ++j)
      for (int k = 0; k < scalars_.cols(); ++k)
        if (!scalars_(j, k).is_zero() && !leq(rows_[j], cols_[k]))
          throw std::invalid_argument("monomial matrix: entry (" + std::to_string(j) + "," +
                                      std::to_string(k) + ") has negative exponent " +
                                      (cols_[k] - rows_[j]).str());
  }

  static MonomialMatrix zero_map(std::vector<ExponentVector> row_shifts,
                                 std::vector<ExponentVector> col_shifts) {
    DenseMatrix<K> z(static_cast<int>(row_shifts.size()), static_cast<int>(col_shifts.size()));
    return MonomialMatrix(std::move(row_shifts), std::move(col_shifts), std::move(z));
  }

  const std::vector<ExponentVector>& row_shifts() const { return rows_; }
  const std::vector<ExponentVector>& col_shifts() const { return cols_; }
  const DenseMatrix<K>& scalars() const { return scalars_; }
  int n_rows() const { return scalars_.rows(); }
  int n_cols() const { return scalars_.cols(); }

  ExponentVector exponent(int j, int k) const { return cols_[k] - rows_[j]; }

  bool is_zero() const { return scalars_.is_zero(); }

  bool has_unit_entry() const {
    for (int j = 0; j < n_rows(); ++j)
      for (int k = 0; k < n_cols(); ++k)
        if (!scalars_(j, k).is_zero() && rows_[j] == cols_[k]) return true;
    return false;
  }

  // composition with a map into this one's source
  MonomialMatrix compose(const MonomialMatrix& inner) const {
    if (cols_ != inner.rows_)
      throw std::invalid_argument("monomial matrix composition: shift mismatch");
    return MonomialMatrix(rows_, inner.cols_, scalars_ * inner.scalars_);
  }

  // the degree-d component in the monomial bases of source and target
  struct DegreeSlice {
    std::vector<int> row_index;  // j's with row_shifts[j] <= d
    std::vector<int> col_index;
    DenseMatrix<K> mat;          // |row_index| x |col_index|
  };

  DegreeSlice slice_at(const ExponentVector& d) const {
    DegreeSlice s;
    for (int j = 0; j < n_rows(); ++j)
      if (leq(rows_[j], d)) s.row_index.push_back(j);
    for (int k = 0; k < n_cols(); ++k)
      if (leq(cols_[k], d)) s.col_index.push_back(k);
    s.mat = DenseMatrix<K>(static_cast<int>(s.row_index.size()), static_cast<int>(s.col_index.size()));
    for (int jj = 0; jj < s.mat.rows(); ++jj)
      for (int kk = 0; kk < s.mat.cols(); ++kk)
        s.mat(jj, kk) = scalars_(s.row_index[jj], s.col_index[kk]);
    return s;
  }

  // every shift a replaced by sqrt(a); entries keep their scalars
  MonomialMatrix radicalized() const {
    std::vector<ExponentVector> r, c;
    for (const auto& a : rows_) r.push_back(map_sqrt(a));
    for (const auto& a : cols_) c.push_back(map_sqrt(a));
    return MonomialMatrix(std::move(r), std::move(c), scalars_);
  }

  // dual against S(-c): transposed scalars, shifts c - (old shifts)
  MonomialMatrix dualized(const ExponentVector& c) const {
    std::vector<ExponentVector> r, co;
    for (const auto& b : cols_) r.push_back(c - b);
    for (const auto& a : rows_) co.push_back(c - a);
    return MonomialMatrix(std::move(r), std::move(co), scalars_.transpose());
  }

 private:
  std::vector<ExponentVector> rows_, cols_;
  DenseMatrix<K> scalars_;
};

// A complex ... -> F_2 -> F_1 -> F_0 of free modules; diffs[i] is the map
// F_{i+1} -> F_i. Adjacent products are checked to vanish exactly.
template <Field K>
class FreeComplex {
 public:
  FreeComplex(std::vector<ExponentVector> f0_shifts, std::vector<MonomialMatrix<K>> diffs)
      : f0_(std::move(f0_shifts)), diffs_(std::move(diffs)) {
    validate();
  }

  explicit FreeComplex(std::vector<ExponentVector> f0_shifts)
      : FreeComplex(std::move(f0_shifts), {}) {}

  int length() const { return static_cast<int>(diffs_.size()); }

  const std::vector<ExponentVector>& shifts_at(int i) const {
    if (i == 0) return f0_;
    return diffs_[i - 1].col_shifts();
  }

  const MonomialMatrix<K>& diff(int i) const { return diffs_[i - 1]; }  // d_i : F_i -> F_{i-1}
  const std::vector<MonomialMatrix<K>>& diffs() const { return diffs_; }

  bool is_minimal() const {
    for (const auto& d : diffs_)
      if (d.has_unit_entry()) return false;
    return true;
  }

  BettiTable shift_table() const {
    BettiTable b;
    for (int i = 0; i <= length(); ++i)
      for (const auto& a : shifts_at(i)) b.add(i, a, 1);
    return b;
  }

  FreeComplex radicalized() const {
    std::vector<ExponentVector> f0;
    for (const auto& a : f0_) f0.push_back(map_sqrt(a));
    std::vector<MonomialMatrix<K>> ds;
    for (const auto& d : diffs_) ds.push_back(d.radicalized());
    return FreeComplex(std::move(f0), std::move(ds));
  }

  // Gaussian cancellation of unit entries; a homotopy equivalence, so the
  // result resolves the same module. Repeats until no unit entry remains.
  FreeComplex minimized() const {
    std::vector<std::vector<ExponentVector>> shifts;
    for (int i = 0; i <= length(); ++i) shifts.push_back(shifts_at(i));
    std::vector<DenseMatrix<K>> mats;
    for (const auto& d : diffs_) mats.push_back(d.scalars());

    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < mats.size() && !changed; ++i) {
        // find a unit entry in d_{i+1} : F_{i+1} -> F_i
        int uj = -1, uk = -1;
        for (int j = 0; j < mats[i].rows() && uj < 0; ++j)
          for (int k = 0; k < mats[i].cols(); ++k)
            if (!mats[i](j, k).is_zero() && shifts[i][j] == shifts[i + 1][k]) {
              uj = j;
              uk = k;
              break;
            }
        if (uj < 0) continue;
        changed = true;
        K c = mats[i](uj, uk);

        // A' = D - column*c^{-1}*row on the remaining block
        DenseMatrix<K> a2(mats[i].rows() - 1, mats[i].cols() - 1);
        for (int j = 0, jj = 0; j < mats[i].rows(); ++j) {
          if (j == uj) continue;
          for (int k = 0, kk = 0; k < mats[i].cols(); ++k) {
            if (k == uk) continue;
            a2(jj, kk) = mats[i](j, k) - mats[i](j, uk) * mats[i](uj, k) / c;
            ++kk;
          }
          ++jj;
        }
        mats[i] = std::move(a2);

        // delete row uk of the incoming map, column uj of the outgoing one
        if (i + 1 < mats.size()) mats[i + 1] = drop_row(mats[i + 1], uk);
        if (i >= 1) mats[i - 1] = drop_col(mats[i - 1], uj);
        shifts[i].erase(shifts[i].begin() + uj);
        shifts[i + 1].erase(shifts[i + 1].begin() + uk);
      }
    }

    while (!mats.empty() && shifts.back().empty()) {
      mats.pop_back();
      shifts.pop_back();
    }
    std::vector<MonomialMatrix<K>> ds;
    for (std::size_t i = 0; i < mats.size(); ++i)
      ds.emplace_back(shifts[i], shifts[i + 1], mats[i]);
    return FreeComplex(shifts[0], std::move(ds));
  }

 private:
  void validate() const {
    for (int i = 0; i < length(); ++i) {
      const auto& expect = (i == 0) ? f0_ : diffs_[i - 1].col_shifts();
      if (diffs_[i].row_shifts() != expect)
        throw std::invalid_argument("free complex: shifts of step " + std::to_string(i + 1) +
                                    " do not match");
      if (i >= 1 && !diffs_[i - 1].compose(diffs_[i]).is_zero())
        throw std::invalid_argument("free complex: d.d != 0 at step " + std::to_string(i + 1));
    }
  }

  static DenseMatrix<K> drop_row(const DenseMatrix<K>& m, int r) {
    DenseMatrix<K> out(m.rows() - 1, m.cols());
    for (int i = 0, ii = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      for (int j = 0; j < m.cols(); ++j) out(ii, j) = m(i, j);
      ++ii;
    }
    return out;
  }

  static DenseMatrix<K> drop_col(const DenseMatrix<K>& m, int c) {
    DenseMatrix<K> out(m.rows(), m.cols() - 1);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0, jj = 0; j < m.cols(); ++j) {
        if (j == c) continue;
        out(i, jj++) = m(i, j);
      }
    return out;
  }

  std::vector<ExponentVector> f0_;
  std::vector<MonomialMatrix<K>> diffs_;
};

}  // namespace boxmod
