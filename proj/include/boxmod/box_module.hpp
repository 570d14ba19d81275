#pragma once

// The central data structure: a Z^n-graded module presented by finite data
// on a degree box -- one vector space dimension per degree, one scalar
// matrix per unit multiplication step. Degrees below the window are zero;
// when the module is flagged determined, multiplication beyond the upper
// boundary is an isomorphism and is represented by the identity on stored
// coordinates (the saturation rule used by evaluate_action).

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "boxmod/exponent_vector.hpp"
#include "boxmod/matrix.hpp"
#include "boxmod/monomial_ideal.hpp"
#include "boxmod/monomial_matrix.hpp"
#include "boxmod/subspace.hpp"

namespace boxmod {

template <Field K>
class BoxModule {
 public:
  BoxModule(Window win, std::vector<int> dims, std::vector<DenseMatrix<K>> edges, bool determined)
      : win_(std::move(win)), dims_(std::move(dims)), edges_(std::move(edges)), determined_(determined) {
    validate();
  }

  static BoxModule zero(const Window& w) {
    std::vector<int> dims(static_cast<std::size_t>(w.count()), 0);
    std::vector<DenseMatrix<K>> edges(dims.size() * w.arity());
    return BoxModule(w, std::move(dims), std::move(edges), true);
  }

  // J/I for monomial ideals I within J; J = (1) yields S/I, I = 0 yields the
  // ideal J as a submodule of S.
  static BoxModule from_ideal_pair(const MonomialIdeal& I, const MonomialIdeal& J,
                                   const BoundVector& t) {
    if (I.arity() != J.arity() || I.arity() != t.size())
      throw std::invalid_argument("from_ideal_pair: arity mismatch");
    if (!J.contains(I)) throw std::invalid_argument("from_ideal_pair: I is not contained in J");
    if (!I.is_t_determined(t) || !J.is_t_determined(t))
      throw std::invalid_argument("from_ideal_pair: ideals are not t-determined");
    Window w = Window::box(t.vec());
    std::vector<int> dims(static_cast<std::size_t>(w.count()), 0);
    for (long idx = 0; idx < w.count(); ++idx) {
      ExponentVector a = w.degree_at(idx);
      dims[idx] = (J.contains(a) && !I.contains(a)) ? 1 : 0;
    }
    std::vector<DenseMatrix<K>> edges(dims.size() * w.arity());
    for (long idx = 0; idx < w.count(); ++idx) {
      ExponentVector a = w.degree_at(idx);
      for (int i = 0; i < w.arity(); ++i) {
        if (a[i] >= w.hi[i]) continue;
        long jdx = w.index_of(a + ExponentVector::unit(w.arity(), i));
        DenseMatrix<K> e(dims[jdx], dims[idx]);
        if (dims[idx] == 1 && dims[jdx] == 1) e(0, 0) = K(1L);
        edges[idx * w.arity() + i] = std::move(e);
      }
    }
    return BoxModule(w, std::move(dims), std::move(edges), true);
  }

  // degreewise cokernel of a presentation with shifts inside [0, t]
  static BoxModule from_presentation(const MonomialMatrix<K>& phi, const BoundVector& t) {
    Window w = Window::box(t.vec());
    for (const auto& a : phi.row_shifts())
      if (!w.contains(a)) throw std::invalid_argument("presentation row shift " + a.str() + " outside [0,t]");
    for (const auto& b : phi.col_shifts())
      if (!w.contains(b)) throw std::invalid_argument("presentation column shift " + b.str() + " outside [0,t]");

    std::vector<Subquotient<K>> coker;
    std::vector<typename MonomialMatrix<K>::DegreeSlice> slices;
    coker.reserve(static_cast<std::size_t>(w.count()));
    for (long idx = 0; idx < w.count(); ++idx) {
      auto s = phi.slice_at(w.degree_at(idx));
      auto image = SubspaceBasis<K>::span_of_cols(s.mat);
      coker.emplace_back(image, SubspaceBasis<K>::full(static_cast<int>(s.row_index.size())));
      slices.push_back(std::move(s));
    }
    std::vector<int> dims(static_cast<std::size_t>(w.count()));
    for (long idx = 0; idx < w.count(); ++idx) dims[idx] = coker[idx].dim();

    std::vector<DenseMatrix<K>> edges(dims.size() * w.arity());
    for (long idx = 0; idx < w.count(); ++idx) {
      ExponentVector a = w.degree_at(idx);
      for (int i = 0; i < w.arity(); ++i) {
        if (a[i] >= w.hi[i]) continue;
        long jdx = w.index_of(a + ExponentVector::unit(w.arity(), i));
        // monomial-basis inclusion of the free module components
        DenseMatrix<K> incl(static_cast<int>(slices[jdx].row_index.size()),
                            static_cast<int>(slices[idx].row_index.size()));
        for (std::size_t p = 0; p < slices[idx].row_index.size(); ++p) {
          int j = slices[idx].row_index[p];
          std::size_t q = 0;
          while (slices[jdx].row_index[q] != j) ++q;
          incl(static_cast<int>(q), static_cast<int>(p)) = K(1L);
        }
        edges[idx * w.arity() + i] = induced_map(incl, coker[idx], coker[jdx]);
      }
    }
    return BoxModule(w, std::move(dims), std::move(edges), true);
  }

  // direct sum of S(-a) over the given shifts, on an arbitrary window;
  // determined iff every shift lies under the upper boundary
  static BoxModule free_box(const std::vector<ExponentVector>& shifts, const Window& w) {
    bool det = true;
    for (const auto& a : shifts) {
      if (a.size() != w.arity()) throw std::invalid_argument("free_box: shift arity mismatch");
      if (!leq(a, w.hi)) det = false;
    }
    auto present = [&](const ExponentVector& d) {
      std::vector<int> js;
      for (std::size_t j = 0; j < shifts.size(); ++j)
        if (leq(shifts[j], d)) js.push_back(static_cast<int>(j));
      return js;
    };
    std::vector<int> dims(static_cast<std::size_t>(w.count()));
    for (long idx = 0; idx < w.count(); ++idx)
      dims[idx] = static_cast<int>(present(w.degree_at(idx)).size());
    std::vector<DenseMatrix<K>> edges(dims.size() * w.arity());
    for (long idx = 0; idx < w.count(); ++idx) {
      ExponentVector a = w.degree_at(idx);
      auto rows_a = present(a);
      for (int i = 0; i < w.arity(); ++i) {
        if (a[i] >= w.hi[i]) continue;
        ExponentVector b = a + ExponentVector::unit(w.arity(), i);
        auto rows_b = present(b);
        DenseMatrix<K> e(static_cast<int>(rows_b.size()), static_cast<int>(rows_a.size()));
        for (std::size_t p = 0; p < rows_a.size(); ++p) {
          std::size_t q = 0;
          while (rows_b[q] != rows_a[p]) ++q;
          e(static_cast<int>(q), static_cast<int>(p)) = K(1L);
        }
        edges[idx * w.arity() + i] = std::move(e);
      }
    }
    return BoxModule(w, std::move(dims), std::move(edges), det);
  }

  static BoxModule direct_sum(const BoxModule& a, const BoxModule& b) {
    if (a.win_ != b.win_) throw std::invalid_argument("direct_sum: window mismatch");
    std::vector<int> dims(a.dims_.size());
    for (std::size_t i = 0; i < dims.size(); ++i) dims[i] = a.dims_[i] + b.dims_[i];
    std::vector<DenseMatrix<K>> edges(a.edges_.size());
    int n = a.arity();
    for (long idx = 0; idx < a.win_.count(); ++idx) {
      ExponentVector d = a.win_.degree_at(idx);
      for (int i = 0; i < n; ++i)
        if (d[i] < a.win_.hi[i])
          edges[idx * n + i] = DenseMatrix<K>::diag_sum(a.edges_[idx * n + i], b.edges_[idx * n + i]);
    }
    return BoxModule(a.win_, std::move(dims), std::move(edges), a.determined_ && b.determined_);
  }

  int arity() const { return win_.arity(); }
  const Window& window() const { return win_; }
  bool determined() const { return determined_; }

  // the bound vector of a canonical [0,t] box
  BoundVector bound() const {
    if (win_.lo != ExponentVector::zero(arity()))
      throw std::logic_error("bound(): window is not canonical [0,t]");
    return BoundVector(win_.hi);
  }

  int dim_in_window(const ExponentVector& a) const { return dims_[win_.index_of(a)]; }

  // dimension with the below-window-zero / above-window-saturation rules
  int dim_at(const ExponentVector& a) const {
    require_same_arity(a, win_.lo);
    for (int i = 0; i < arity(); ++i)
      if (a[i] < win_.lo[i]) return 0;
    if (leq(a, win_.hi)) return dims_[win_.index_of(a)];
    if (!determined_)
      throw std::invalid_argument("degree " + a.str() + " above an undetermined window");
    return dims_[win_.index_of(cwise_min(a, win_.hi))];
  }

  // the stored unit-step matrix (within-window only)
  const DenseMatrix<K>& edge(const ExponentVector& a, int i) const {
    ExponentVector b = a + ExponentVector::unit(arity(), i);
    if (!win_.contains(a) || !win_.contains(b))
      throw std::invalid_argument("edge " + a.str() + " -> " + b.str() + " outside window");
    return edges_[win_.index_of(a) * arity() + i];
  }

  // matrix of multiplication by x^b from degree a, in box coordinates of
  // clamp(a) and clamp(a+b); beyond-boundary steps are the identity
  DenseMatrix<K> evaluate_action(const ExponentVector& a, const ExponentVector& b) const {
    require_nonnegative(b, "evaluate_action");
    require_same_arity(a, b);
    for (int i = 0; i < arity(); ++i)
      if (a[i] < win_.lo[i]) return DenseMatrix<K>(dim_at(a + b), 0);
    bool beyond = !leq(a + b, win_.hi);
    if (beyond && !determined_)
      throw std::invalid_argument("action leaves the window of an undetermined module");
    ExponentVector cur = cwise_min(a, win_.hi);
    ExponentVector tgt = cwise_min(a + b, win_.hi);
    DenseMatrix<K> m = DenseMatrix<K>::identity(dims_[win_.index_of(cur)]);
    for (int i = 0; i < arity(); ++i)
      while (cur[i] < tgt[i]) {
        m = edges_[win_.index_of(cur) * arity() + i] * m;
        ++cur[i];
      }
    return m;
  }

  bool is_zero_module() const {
    for (int d : dims_)
      if (d != 0) return false;
    return true;
  }

  std::map<ExponentVector, int, LexLess> hilbert_function() const {
    std::map<ExponentVector, int, LexLess> h;
    for (long idx = 0; idx < win_.count(); ++idx) h[win_.degree_at(idx)] = dims_[idx];
    return h;
  }

  long total_dimension() const {
    long s = 0;
    for (int d : dims_) s += d;
    return s;
  }

 private:
  void validate() const {
    int n = arity();
    if (dims_.size() != static_cast<std::size_t>(win_.count()))
      throw std::invalid_argument("box module: dims table size mismatch");
    if (edges_.size() != dims_.size() * n)
      throw std::invalid_argument("box module: edge table size mismatch");
    for (long idx = 0; idx < win_.count(); ++idx) {
      ExponentVector a = win_.degree_at(idx);
      if (dims_[idx] < 0) throw std::invalid_argument("box module: negative dimension");
      for (int i = 0; i < n; ++i) {
        if (a[i] >= win_.hi[i]) continue;
        long jdx = win_.index_of(a + ExponentVector::unit(n, i));
        const DenseMatrix<K>& e = edges_[idx * n + i];
        if (e.rows() != dims_[jdx] || e.cols() != dims_[idx])
          throw std::invalid_argument("box module: edge at " + a.str() + " dir " +
                                      std::to_string(i) + " has shape " + e.shape_str());
      }
    }
    // the square x_i x_j = x_j x_i must commute exactly
    for (long idx = 0; idx < win_.count(); ++idx) {
      ExponentVector a = win_.degree_at(idx);
      for (int i = 0; i < n; ++i) {
        if (a[i] >= win_.hi[i]) continue;
        ExponentVector ai = a + ExponentVector::unit(n, i);
        for (int j = i + 1; j < n; ++j) {
          if (a[j] >= win_.hi[j]) continue;
          ExponentVector aj = a + ExponentVector::unit(n, j);
          DenseMatrix<K> via_i = edges_[win_.index_of(ai) * n + j] * edges_[idx * n + i];
          DenseMatrix<K> via_j = edges_[win_.index_of(aj) * n + i] * edges_[idx * n + j];
          if (via_i != via_j)
            throw std::invalid_argument("box module: non-commuting square at " + a.str() +
                                        " dirs " + std::to_string(i) + "," + std::to_string(j));
        }
      }
    }
  }

  Window win_;
  std::vector<int> dims_;
  std::vector<DenseMatrix<K>> edges_;  // edges_[idx * n + i] : dims(a+e_i) x dims(a)
  bool determined_;
};

struct ProfileVerdict {
  bool equal;
  std::string detail;
  explicit operator bool() const { return equal; }
};

// Necessary condition for graded isomorphism: equal dimensions at every
// window degree, equal rank of every multiplication x^b within the window.
// For modules with all dimensions <= 1 this is equivalent to isomorphism.
template <Field K>
ProfileVerdict compare_graded(const BoxModule<K>& m, const BoxModule<K>& n) {
  if (m.window() != n.window())
    throw std::invalid_argument("compare_graded: modules on different windows");
  const Window& w = m.window();
  for (long idx = 0; idx < w.count(); ++idx) {
    ExponentVector a = w.degree_at(idx);
    if (m.dim_in_window(a) != n.dim_in_window(a))
      return {false, "dimensions differ at degree " + a.str()};
  }
  for (long idx = 0; idx < w.count(); ++idx) {
    ExponentVector a = w.degree_at(idx);
    for (const auto& b : box_enumerate(ExponentVector::zero(w.arity()), w.hi - a)) {
      if (b == ExponentVector::zero(w.arity())) continue;
      if (m.evaluate_action(a, b).rank() != n.evaluate_action(a, b).rank())
        return {false, "action ranks differ on path (" + a.str() + ", " + b.str() + ")"};
    }
  }
  return {true, ""};
}

}  // namespace boxmod
