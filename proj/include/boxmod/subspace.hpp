#pragma once

// Subspaces in reduced echelon form, subquotients V/W with explicit
// projection and section matrices, homology of two-step complexes, and maps
// induced on subquotients. This is the degreewise engine behind cokernels,
// Koszul homology and Ext windows.

#include <stdexcept>
#include <vector>

#include "boxmod/matrix.hpp"

namespace boxmod {

template <Field K>
class SubspaceBasis {
 public:
  // zero subspace of K^ambient
  explicit SubspaceBasis(int ambient) : ambient_(ambient), basis_(0, ambient) {}

  // span of the rows of m
  static SubspaceBasis span_of_rows(const DenseMatrix<K>& m) {
    auto e = m.echelon();
    SubspaceBasis s(m.cols());
    s.basis_ = DenseMatrix<K>(e.rank(), m.cols());
    for (int i = 0; i < e.rank(); ++i) s.basis_.set_row(i, e.rref.row(i));
    s.pivots_ = e.pivots;
    return s;
  }

  static SubspaceBasis span_of_cols(const DenseMatrix<K>& m) { return span_of_rows(m.transpose()); }

  static SubspaceBasis full(int ambient) { return span_of_rows(DenseMatrix<K>::identity(ambient)); }

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const DenseMatrix<K>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // v - (its projection onto the span); zero iff v lies in the span
  std::vector<K> reduce(std::vector<K> v) const {
    for (int r = 0; r < dim(); ++r) {
      K c = v[pivots_[r]];
      if (c.is_zero()) continue;
      for (int j = 0; j < ambient_; ++j) v[j] -= c * basis_(r, j);
    }
    return v;
  }

  bool contains(const std::vector<K>& v) const {
    for (const K& x : reduce(v))
      if (!x.is_zero()) return false;
    return true;
  }

  bool contains(const SubspaceBasis& other) const {
    for (int r = 0; r < other.dim(); ++r)
      if (!contains(other.basis().row(r))) return false;
    return true;
  }

  // coordinates of v in this basis; precondition: v lies in the span.
  // With unit pivot columns, coordinates are just the pivot entries.
  std::vector<K> coords(const std::vector<K>& v) const {
    std::vector<K> c(dim());
    for (int r = 0; r < dim(); ++r) c[r] = v[pivots_[r]];
    return c;
  }

  // dim x ambient matrix extracting coordinates of span members
  DenseMatrix<K> coords_matrix() const {
    DenseMatrix<K> m(dim(), ambient_);
    for (int r = 0; r < dim(); ++r) m(r, pivots_[r]) = K(1L);
    return m;
  }

  static SubspaceBasis sum(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("subspace sum: ambient mismatch");
    DenseMatrix<K> stacked(a.dim() + b.dim(), a.ambient());
    for (int i = 0; i < a.dim(); ++i) stacked.set_row(i, a.basis().row(i));
    for (int i = 0; i < b.dim(); ++i) stacked.set_row(a.dim() + i, b.basis().row(i));
    return span_of_rows(stacked);
  }

 private:
  int ambient_;
  DenseMatrix<K> basis_;  // rows in RREF, pivots strictly increasing
  std::vector<int> pivots_;
};

// The quotient big/sub of two nested subspaces of K^ambient, with matrices
//   project:  K^ambient -> K^dim   (defined on members of big)
//   section:  K^dim -> K^ambient   (representatives inside big)
// satisfying project . section = id and project . (inclusion of sub) = 0.
template <Field K>
class Subquotient {
 public:
  Subquotient(const SubspaceBasis<K>& sub, const SubspaceBasis<K>& big)
      : ambient_(big.ambient()), sub_(sub), big_(big) {
    if (sub.ambient() != big.ambient()) throw std::invalid_argument("subquotient: ambient mismatch");
    if (!big.contains(sub)) throw std::invalid_argument("subquotient: sub is not contained in big");

    // sub expressed in big-coordinates, echelonized
    DenseMatrix<K> sub_in_big(sub.dim(), big.dim());
    for (int r = 0; r < sub.dim(); ++r) sub_in_big.set_row(r, big.coords(sub.basis().row(r)));
    auto e = sub_in_big.echelon();
    if (e.rank() != sub.dim()) throw std::logic_error("subquotient: sub basis not independent");

    dim_ = big.dim() - sub.dim();
    std::vector<bool> is_pivot(big.dim(), false);
    for (int p : e.pivots) is_pivot[p] = true;
    std::vector<int> free_pos;
    for (int j = 0; j < big.dim(); ++j)
      if (!is_pivot[j]) free_pos.push_back(j);

    // project on big-coordinates: reduce modulo sub, then read free positions
    DenseMatrix<K> proj_big(dim_, big.dim());
    for (int q = 0; q < dim_; ++q) {
      proj_big(q, free_pos[q]) = K(1L);
      for (int r = 0; r < e.rank(); ++r) proj_big(q, e.pivots[r]) = -e.rref(r, free_pos[q]);
    }
    DenseMatrix<K> section_big(big.dim(), dim_);
    for (int q = 0; q < dim_; ++q) section_big(free_pos[q], q) = K(1L);

    project_ = proj_big * big.coords_matrix();
    section_ = big.basis().transpose() * section_big;

    if (project_ * section_ != DenseMatrix<K>::identity(dim_))
      throw std::logic_error("subquotient: projection/section mismatch");
  }

  // quotient of big by the zero subspace
  explicit Subquotient(const SubspaceBasis<K>& big)
      : Subquotient(SubspaceBasis<K>(big.ambient()), big) {}

  int ambient() const { return ambient_; }
  int dim() const { return dim_; }
  const SubspaceBasis<K>& sub() const { return sub_; }
  const SubspaceBasis<K>& big() const { return big_; }
  const DenseMatrix<K>& project() const { return project_; }
  const DenseMatrix<K>& section() const { return section_; }

 private:
  int ambient_;
  SubspaceBasis<K> sub_, big_;
  int dim_;
  DenseMatrix<K> project_;  // dim x ambient
  DenseMatrix<K> section_;  // ambient x dim
};

// dim (ker g / im f) for a two-step complex  A --f--> B --g--> C
template <Field K>
int homology_dim(const DenseMatrix<K>& f, const DenseMatrix<K>& g) {
  if (g.cols() != f.rows()) throw std::invalid_argument("homology_dim: shapes do not compose");
  if (!(g * f).is_zero()) throw std::invalid_argument("homology_dim: composition is nonzero");
  int dim_ker = f.rows() - g.rank();
  return dim_ker - f.rank();
}

// ker g / im f as an explicit subquotient of the middle term
template <Field K>
Subquotient<K> homology_subquotient(const DenseMatrix<K>& f, const DenseMatrix<K>& g) {
  if (g.cols() != f.rows()) throw std::invalid_argument("homology: shapes do not compose");
  if (!(g * f).is_zero()) throw std::invalid_argument("homology: composition is nonzero");
  auto image = SubspaceBasis<K>::span_of_cols(f);
  auto kernel = SubspaceBasis<K>::span_of_rows(g.kernel_basis());
  return Subquotient<K>(image, kernel);
}

// Matrix induced by f on target-quotient coordinates from source-quotient
// coordinates; verifies that f respects both filtrations.
template <Field K>
DenseMatrix<K> induced_map(const DenseMatrix<K>& f, const Subquotient<K>& src,
                           const Subquotient<K>& tgt) {
  if (f.cols() != src.ambient() || f.rows() != tgt.ambient())
    throw std::invalid_argument("induced_map: ambient shape mismatch");
  for (int r = 0; r < src.big().dim(); ++r)
    if (!tgt.big().contains(f.apply(src.big().basis().row(r))))
      throw std::invalid_argument("induced_map: f does not preserve the big subspaces");
  for (int r = 0; r < src.sub().dim(); ++r)
    if (!tgt.sub().contains(f.apply(src.sub().basis().row(r))))
      throw std::invalid_argument("induced_map: f does not preserve the sub subspaces");
  return tgt.project() * f * src.section();
}

}  // namespace boxmod
