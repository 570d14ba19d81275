#pragma once

// Graded Ext windows: Ext^p(M, S(-c)) computed from the dualized minimal
// free resolution, materialized as a box module with its multiplication
// structure (induced maps on degreewise homology).

#include <stdexcept>
#include <vector>

#include "boxmod/box_module.hpp"
#include "boxmod/functors.hpp"
#include "boxmod/resolution.hpp"

namespace boxmod {

template <Field K>
class ExtComputer {
 public:
  ExtComputer(const BoxModule<K>& m, ExponentVector c)
      : ExtComputer(minimal_resolution(m).complex, m.window(), std::move(c)) {}

  // any free resolution of the module works; Ext does not depend on the choice
  ExtComputer(const FreeComplex<K>& resolution, const Window& module_window, ExponentVector c)
      : window_(module_window), c_(std::move(c)) {
    length_ = resolution.length();
    shifts_.reserve(static_cast<std::size_t>(length_) + 1);
    for (int i = 0; i <= length_; ++i) {
      std::vector<ExponentVector> dual_shifts;
      for (const auto& a : resolution.shifts_at(i)) dual_shifts.push_back(c_ - a);
      shifts_.push_back(std::move(dual_shifts));
    }
    for (int i = 1; i <= length_; ++i) deltas_.push_back(resolution.diff(i).dualized(c_));
  }

  // the window where Ext is faithfully captured: support can only reach down
  // to c - hi, and multiplication stabilizes above c - lo
  Window natural_window() const { return Window(c_ - window_.hi, c_ - window_.lo); }

  int resolution_length() const { return length_; }

  // Ext^p(M, S(-c)) as a determined box on the natural window
  BoxModule<K> ext(int p) const {
    Window w = natural_window();
    int n = w.arity();
    if (p < 0 || p > length_) return BoxModule<K>::zero(w);

    std::vector<Subquotient<K>> h;
    h.reserve(static_cast<std::size_t>(w.count()));
    for (long idx = 0; idx < w.count(); ++idx) {
      ExponentVector d = w.degree_at(idx);
      int ambient = static_cast<int>(detail::present_at(shifts_[p], d).size());
      DenseMatrix<K> in = (p >= 1) ? deltas_[p - 1].slice_at(d).mat : DenseMatrix<K>(ambient, 0);
      DenseMatrix<K> out = (p < length_) ? deltas_[p].slice_at(d).mat : DenseMatrix<K>(0, ambient);
      h.push_back(homology_subquotient(in, out));
    }
    std::vector<int> dims(static_cast<std::size_t>(w.count()));
    for (long idx = 0; idx < w.count(); ++idx) dims[idx] = h[idx].dim();

    std::vector<DenseMatrix<K>> edges(dims.size() * n);
    for (long idx = 0; idx < w.count(); ++idx) {
      ExponentVector d = w.degree_at(idx);
      for (int i = 0; i < n; ++i) {
        if (d[i] >= w.hi[i]) continue;
        ExponentVector d2 = d + ExponentVector::unit(n, i);
        DenseMatrix<K> incl = detail::free_inclusion<K>(shifts_[p], d, d2);
        edges[idx * n + i] = induced_map(incl, h[idx], h[w.index_of(d2)]);
      }
    }
    return BoxModule<K>(w, std::move(dims), std::move(edges), true);
  }

 private:
  Window window_;
  ExponentVector c_;
  int length_;
  std::vector<std::vector<ExponentVector>> shifts_;  // of the dual complex
  std::vector<MonomialMatrix<K>> deltas_;            // delta[i] : C^i -> C^{i+1}
};

template <Field K>
BoxModule<K> ext_box(const BoxModule<K>& m, const ExponentVector& c, int p) {
  return ExtComputer<K>(m, c).ext(p);
}

// Ext^p(M, S(-c)) restricted to a window; degrees of W below the natural
// window's start are truncated away first (so the result is tau_{>= W.lo}
// applied to Ext, restricted to W).
template <Field K>
BoxModule<K> ext_window(const BoxModule<K>& m, const ExponentVector& c, int p, const Window& w) {
  ExtComputer<K> comp(m, c);
  BoxModule<K> e = comp.ext(p);
  Window nat = comp.natural_window();
  if (!leq(nat.lo, w.lo) || !leq(w.hi, nat.hi))
    throw std::invalid_argument("ext_window: window escapes the natural Ext window");
  if (nat.lo != w.lo) e = truncate_low(e, w.lo);
  return crop(e, w, w.hi == nat.hi);
}

// Both sides of the Ext comparison tau_0 Ext^p(M, S(-1)) vs Ext^p(r*M, S(-1)),
// each on the window [0,1]^n, ready for a profile comparison.
template <Field K>
std::pair<BoxModule<K>, BoxModule<K>> ext_sides_a(const BoxModule<K>& m, int p) {
  int n = m.arity();
  ExponentVector one = ExponentVector::ones(n);
  BoxModule<K> lhs =
      crop(truncate_low(ext_box(m, one, p), ExponentVector::zero(n)), Window::box(one), true);
  BoxModule<K> rhs = ext_box(pullback_r(m), one, p);
  return {std::move(lhs), std::move(rhs)};
}

// Both sides of r* Ext^p(M, S(-t)) vs Ext^p(s*M, S(-1)), on [0,1]^n.
template <Field K>
std::pair<BoxModule<K>, BoxModule<K>> ext_sides_b(const BoxModule<K>& m, int p) {
  BoxModule<K> lhs = pullback_r(ext_box(m, m.window().hi, p));
  BoxModule<K> rhs = ext_box(pullback_s(m), ExponentVector::ones(m.arity()), p);
  return {std::move(lhs), std::move(rhs)};
}

// D_t(M) = grHom(M, S(-t)) on [0,t]; the degree-zero part of the duality
template <Field K>
BoxModule<K> dual_dt(const BoxModule<K>& m) {
  return ext_box(m, m.bound().vec(), 0);
}

// D_1(M) = grHom(M, S(-1)); for squarefree input this lands on [0,1]^n
template <Field K>
BoxModule<K> dual_d1(const BoxModule<K>& m) {
  return ext_box(m, ExponentVector::ones(m.arity()), 0);
}

}  // namespace boxmod
