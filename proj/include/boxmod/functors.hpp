#pragma once

// The functors of the theory acting on box modules: pullbacks along
// order-preserving degree maps (r, s, p_1, p_t, custom), degree shifts,
// the two truncations, window cropping, Alexander duality, and the natural
// transformations Phi : id => r^* and Psi : s^* => sigma_{1-t}.

#include <functional>
#include <stdexcept>
#include <vector>

#include "boxmod/box_module.hpp"

namespace boxmod {

using DegreeMap = std::function<ExponentVector(const ExponentVector&)>;

// (q^* M)_a = M_{q(a)}, multiplication x_i acting as x^{q(a+e_i)-q(a)}.
// q must be order preserving on the result window (checked on unit steps).
template <Field K>
BoxModule<K> pullback(const BoxModule<K>& m, const DegreeMap& q, const Window& result_window,
                      bool result_determined) {
  int n = result_window.arity();
  std::vector<int> dims(static_cast<std::size_t>(result_window.count()));
  std::vector<DenseMatrix<K>> edges(dims.size() * n);
  for (long idx = 0; idx < result_window.count(); ++idx) {
    ExponentVector a = result_window.degree_at(idx);
    dims[idx] = m.dim_at(q(a));
  }
  for (long idx = 0; idx < result_window.count(); ++idx) {
    ExponentVector a = result_window.degree_at(idx);
    ExponentVector qa = q(a);
    for (int i = 0; i < n; ++i) {
      if (a[i] >= result_window.hi[i]) continue;
      ExponentVector qb = q(a + ExponentVector::unit(n, i));
      if (!leq(qa, qb))
        throw std::invalid_argument("pullback: degree map is not order preserving at " + a.str());
      edges[idx * n + i] = m.evaluate_action(qa, qb - qa);
    }
  }
  return BoxModule<K>(result_window, std::move(dims), std::move(edges), result_determined);
}

// r^* on the canonical squarefree window [0,1]^n; the result is squarefree
template <Field K>
BoxModule<K> pullback_r(const BoxModule<K>& m) {
  BoundVector t = m.bound();
  Window w = Window::box(ExponentVector::ones(m.arity()));
  return pullback(m, [&t](const ExponentVector& a) { return map_r(a, t); }, w, true);
}

// r^* kept on the full window [0,t] (the squarefree module viewed in Mod_t)
template <Field K>
BoxModule<K> pullback_r_wide(const BoxModule<K>& m) {
  BoundVector t = m.bound();
  return pullback(m, [&t](const ExponentVector& a) { return map_r(a, t); }, m.window(), true);
}

template <Field K>
BoxModule<K> pullback_s(const BoxModule<K>& m) {
  BoundVector t = m.bound();
  Window w = Window::box(ExponentVector::ones(m.arity()));
  return pullback(m, [&t](const ExponentVector& a) { return map_s(a, t); }, w, true);
}

template <Field K>
BoxModule<K> pullback_p1(const BoxModule<K>& m) {
  BoundVector one(ExponentVector::ones(m.arity()));
  Window w = Window::box(ExponentVector::ones(m.arity()));
  return pullback(m, [&one](const ExponentVector& a) { return map_p(a, one); }, w, true);
}

template <Field K>
BoxModule<K> pullback_pt(const BoxModule<K>& m) {
  BoundVector t = m.bound();
  return pullback(m, [&t](const ExponentVector& a) { return map_p(a, t); }, m.window(), true);
}

// sigma_a : M -> M(-a); relabels the window
template <Field K>
BoxModule<K> sigma_shift(const BoxModule<K>& m, const ExponentVector& a) {
  const Window& w = m.window();
  Window shifted(w.lo + a, w.hi + a);
  std::vector<int> dims(static_cast<std::size_t>(w.count()));
  std::vector<DenseMatrix<K>> edges(dims.size() * w.arity());
  for (long idx = 0; idx < w.count(); ++idx) {
    ExponentVector d = shifted.degree_at(idx);
    dims[idx] = m.dim_in_window(d - a);
    for (int i = 0; i < w.arity(); ++i)
      if (d[i] < shifted.hi[i]) edges[idx * w.arity() + i] = m.edge(d - a, i);
  }
  return BoxModule<K>(shifted, std::move(dims), std::move(edges), m.determined());
}

// tau_{>=a} : keep degrees >= a, zero out the rest
template <Field K>
BoxModule<K> truncate_low(const BoxModule<K>& m, const ExponentVector& a) {
  const Window& w = m.window();
  if (!leq(a, w.hi))
    throw std::invalid_argument("truncate_low: cut " + a.str() + " above the window");
  int n = w.arity();
  std::vector<int> dims(static_cast<std::size_t>(w.count()), 0);
  std::vector<DenseMatrix<K>> edges(dims.size() * n);
  auto survives = [&](const ExponentVector& d) { return leq(a, d); };
  for (long idx = 0; idx < w.count(); ++idx) {
    ExponentVector d = w.degree_at(idx);
    dims[idx] = survives(d) ? m.dim_in_window(d) : 0;
  }
  for (long idx = 0; idx < w.count(); ++idx) {
    ExponentVector d = w.degree_at(idx);
    for (int i = 0; i < n; ++i) {
      if (d[i] >= w.hi[i]) continue;
      long jdx = w.index_of(d + ExponentVector::unit(n, i));
      if (dims[idx] > 0 && dims[jdx] > 0)
        edges[idx * n + i] = m.edge(d, i);
      else
        edges[idx * n + i] = DenseMatrix<K>(dims[jdx], dims[idx]);
    }
  }
  return BoxModule<K>(w, std::move(dims), std::move(edges), m.determined());
}

// tau^a : M / (submodule generated by all components of degree not <= a).
// Multiplication only raises degrees, so nothing of degree not <= a maps
// into a degree <= a: the quotient is plain restriction to degrees <= a.
// The generated-submodule span is still propagated and quotiented out
// explicitly, which re-derives that fact degree by degree.
template <Field K>
BoxModule<K> truncate_high(const BoxModule<K>& m, const ExponentVector& a) {
  const Window& w = m.window();
  int n = w.arity();
  std::vector<SubspaceBasis<K>> killed;
  killed.reserve(static_cast<std::size_t>(w.count()));
  for (long idx = 0; idx < w.count(); ++idx) {
    ExponentVector d = w.degree_at(idx);
    if (!leq(d, a)) {
      killed.push_back(SubspaceBasis<K>::full(m.dim_in_window(d)));
      continue;
    }
    SubspaceBasis<K> span(m.dim_in_window(d));
    for (int i = 0; i < n; ++i) {
      if (d[i] <= w.lo[i]) continue;
      ExponentVector below = d - ExponentVector::unit(n, i);
      DenseMatrix<K> pushed = m.edge(below, i) * killed[w.index_of(below)].basis().transpose();
      span = SubspaceBasis<K>::sum(span, SubspaceBasis<K>::span_of_cols(pushed));
    }
    killed.push_back(span);
  }
  std::vector<Subquotient<K>> quot;
  quot.reserve(killed.size());
  std::vector<int> dims(killed.size());
  for (long idx = 0; idx < w.count(); ++idx) {
    quot.emplace_back(killed[idx], SubspaceBasis<K>::full(m.dim_in_window(w.degree_at(idx))));
    dims[idx] = quot[idx].dim();
  }
  std::vector<DenseMatrix<K>> edges(dims.size() * n);
  for (long idx = 0; idx < w.count(); ++idx) {
    ExponentVector d = w.degree_at(idx);
    for (int i = 0; i < n; ++i) {
      if (d[i] >= w.hi[i]) continue;
      long jdx = w.index_of(d + ExponentVector::unit(n, i));
      edges[idx * n + i] = induced_map(m.edge(d, i), quot[idx], quot[jdx]);
    }
  }
  bool det = m.determined() && leq(w.hi, a);  // otherwise stabilization is lost
  return BoxModule<K>(w, std::move(dims), std::move(edges), det);
}

// Restriction to a subwindow. Degrees dropped below must be zero (the box
// convention treats everything below the window as zero). When the upper
// boundary shrinks and keep_determined is requested, the stabilization of
// every discarded step is verified.
template <Field K>
BoxModule<K> crop(const BoxModule<K>& m, const Window& sub, bool keep_determined) {
  const Window& w = m.window();
  if (!leq(w.lo, sub.lo) || !leq(sub.hi, w.hi))
    throw std::invalid_argument("crop: target window is not contained in the source window");
  for (long idx = 0; idx < w.count(); ++idx) {
    ExponentVector d = w.degree_at(idx);
    bool below = false;
    for (int i = 0; i < w.arity(); ++i)
      if (d[i] < sub.lo[i]) below = true;
    if (below && m.dim_in_window(d) != 0)
      throw std::invalid_argument("crop: nonzero component below the target window at " + d.str());
  }
  int n = w.arity();
  if (keep_determined) {
    if (!m.determined()) throw std::invalid_argument("crop: source module is not determined");
    for (int i = 0; i < n; ++i) {
      if (sub.hi[i] == w.hi[i]) continue;
      for (long idx = 0; idx < sub.count(); ++idx) {
        ExponentVector d = sub.degree_at(idx);
        if (d[i] != sub.hi[i]) continue;
        ExponentVector reach = d;
        reach[i] = w.hi[i];
        DenseMatrix<K> step = m.evaluate_action(d, reach - d);
        if (step.rows() != step.cols() || step.rank() != step.rows())
          throw std::invalid_argument("crop: multiplication does not stabilize at " + d.str() +
                                      " dir " + std::to_string(i));
      }
    }
  }
  std::vector<int> dims(static_cast<std::size_t>(sub.count()));
  std::vector<DenseMatrix<K>> edges(dims.size() * n);
  for (long idx = 0; idx < sub.count(); ++idx) {
    ExponentVector d = sub.degree_at(idx);
    dims[idx] = m.dim_in_window(d);
    for (int i = 0; i < n; ++i)
      if (d[i] < sub.hi[i]) edges[idx * n + i] = m.edge(d, i);
  }
  return BoxModule<K>(sub, std::move(dims), std::move(edges), keep_determined);
}

// smallest window containing all nonzero components; the zero module
// normalizes to the one-point window at the origin
template <Field K>
BoxModule<K> crop_to_support(const BoxModule<K>& m) {
  const Window& w = m.window();
  bool any = false;
  ExponentVector lo = w.hi, hi = w.lo;
  for (long idx = 0; idx < w.count(); ++idx) {
    if (m.dim_in_window(w.degree_at(idx)) == 0) continue;
    any = true;
    lo = cwise_min(lo, w.degree_at(idx));
    hi = cwise_max(hi, w.degree_at(idx));
  }
  if (!any) {
    ExponentVector o = ExponentVector::zero(w.arity());
    return BoxModule<K>::zero(Window(o, o));
  }
  return crop(m, Window(lo, hi), false);
}

// Alexander duality on the window: (A_t M)_a is the dual of M_{t - p_t(a)}
// with transposed multiplication maps
template <Field K>
BoxModule<K> alexander_dual(const BoxModule<K>& m) {
  if (!m.determined()) throw std::invalid_argument("alexander_dual: module must be determined");
  BoundVector t = m.bound();
  const Window& w = m.window();
  int n = w.arity();
  std::vector<int> dims(static_cast<std::size_t>(w.count()));
  std::vector<DenseMatrix<K>> edges(dims.size() * n);
  for (long idx = 0; idx < w.count(); ++idx) {
    ExponentVector a = w.degree_at(idx);
    dims[idx] = m.dim_in_window(t.vec() - a);
  }
  for (long idx = 0; idx < w.count(); ++idx) {
    ExponentVector a = w.degree_at(idx);
    for (int i = 0; i < n; ++i) {
      if (a[i] >= w.hi[i]) continue;
      // dual of x_i : M_{t-a-e_i} -> M_{t-a}
      edges[idx * n + i] = m.edge(t.vec() - a - ExponentVector::unit(n, i), i).transpose();
    }
  }
  return BoxModule<K>(w, std::move(dims), std::move(edges), true);
}

// Phi_M at every degree of [0,t]: the map M_a -> (r^* M)_a = M_{r(a)},
// u |-> (phi_a)^{-1}(x^{a(t-1)} u); in box coordinates phi_a is the
// identity, so Phi_a is just the action of x^{a(t-1)}.
template <Field K>
std::vector<DenseMatrix<K>> phi_transform(const BoxModule<K>& m) {
  if (!m.determined()) throw std::invalid_argument("phi_transform: module must be determined");
  BoundVector t = m.bound();
  const Window& w = m.window();
  ExponentVector tm1 = t.vec() - ExponentVector::ones(w.arity());
  std::vector<DenseMatrix<K>> out;
  out.reserve(static_cast<std::size_t>(w.count()));
  for (long idx = 0; idx < w.count(); ++idx) {
    ExponentVector a = w.degree_at(idx);
    out.push_back(m.evaluate_action(a, cwise_mul(a, tm1)));
  }
  return out;
}

// Psi_M at every degree of [0,1]^n: the map (s^* M)_a = M_{s(a)} ->
// (sigma_{1-t} M)_a = M_{a+t-1}, u |-> x^{a+t-1-s(a)} u.
template <Field K>
std::vector<DenseMatrix<K>> psi_transform(const BoxModule<K>& m) {
  if (!m.determined()) throw std::invalid_argument("psi_transform: module must be determined");
  BoundVector t = m.bound();
  int n = m.arity();
  Window cube = Window::box(ExponentVector::ones(n));
  ExponentVector tm1 = t.vec() - ExponentVector::ones(n);
  std::vector<DenseMatrix<K>> out;
  out.reserve(static_cast<std::size_t>(cube.count()));
  for (long idx = 0; idx < cube.count(); ++idx) {
    ExponentVector a = cube.degree_at(idx);
    ExponentVector sa = map_s(a, t);
    out.push_back(m.evaluate_action(sa, a + tm1 - sa));
  }
  return out;
}

// A degree-0 morphism of box modules on a common window, one matrix per degree.
template <Field K>
struct GradedMap {
  Window window;
  std::vector<DenseMatrix<K>> at;  // indexed by window index

  GradedMap(Window w, std::vector<DenseMatrix<K>> maps) : window(std::move(w)), at(std::move(maps)) {}
};

// check the commuting squares f_{a+e_i} edgeM = edgeN f_a on every window edge
template <Field K>
bool is_morphism(const BoxModule<K>& m, const BoxModule<K>& n, const GradedMap<K>& f) {
  const Window& w = m.window();
  if (n.window() != w || f.window != w) return false;
  for (long idx = 0; idx < w.count(); ++idx) {
    ExponentVector a = w.degree_at(idx);
    for (int i = 0; i < w.arity(); ++i) {
      if (a[i] >= w.hi[i]) continue;
      long jdx = w.index_of(a + ExponentVector::unit(w.arity(), i));
      if (f.at[jdx] * m.edge(a, i) != n.edge(a, i) * f.at[idx]) return false;
    }
  }
  return true;
}

// Basis of the space of degree-0 morphisms M -> N, by solving the linear
// system cut out by all commuting squares.
template <Field K>
std::vector<GradedMap<K>> hom_space_basis(const BoxModule<K>& m, const BoxModule<K>& n) {
  if (m.window() != n.window()) throw std::invalid_argument("hom_space: window mismatch");
  const Window& w = m.window();
  int arity = w.arity();

  std::vector<long> offset(static_cast<std::size_t>(w.count()) + 1, 0);
  for (long idx = 0; idx < w.count(); ++idx) {
    ExponentVector a = w.degree_at(idx);
    offset[idx + 1] = offset[idx] +
                      static_cast<long>(m.dim_in_window(a)) * n.dim_in_window(a);
  }
  long unknowns = offset[w.count()];

  std::vector<std::vector<K>> rows;
  for (long idx = 0; idx < w.count(); ++idx) {
    ExponentVector a = w.degree_at(idx);
    int dm = m.dim_in_window(a), dn = n.dim_in_window(a);
    for (int i = 0; i < arity; ++i) {
      if (a[i] >= w.hi[i]) continue;
      long jdx = w.index_of(a + ExponentVector::unit(arity, i));
      int dm2 = m.dim_in_window(w.degree_at(jdx)), dn2 = n.dim_in_window(w.degree_at(jdx));
      const DenseMatrix<K>& em = m.edge(a, i);
      const DenseMatrix<K>& en = n.edge(a, i);
      // (f_{a+e_i} em - en f_a)(r, c) = 0 for all r < dn2, c < dm
      for (int r = 0; r < dn2; ++r)
        for (int c = 0; c < dm; ++c) {
          std::vector<K> row(unknowns, K());
          for (int k = 0; k < dm2; ++k)
            if (!em(k, c).is_zero()) row[offset[jdx] + static_cast<long>(r) * dm2 + k] += em(k, c);
          for (int k = 0; k < dn; ++k)
            if (!en(r, k).is_zero()) row[offset[idx] + static_cast<long>(k) * dm + c] -= en(r, k);
          rows.push_back(std::move(row));
        }
    }
  }
  DenseMatrix<K> sys = DenseMatrix<K>::from_rows(static_cast<int>(unknowns), rows);
  DenseMatrix<K> ker = sys.kernel_basis();

  std::vector<GradedMap<K>> basis;
  for (int v = 0; v < ker.rows(); ++v) {
    std::vector<DenseMatrix<K>> maps;
    maps.reserve(static_cast<std::size_t>(w.count()));
    for (long idx = 0; idx < w.count(); ++idx) {
      ExponentVector a = w.degree_at(idx);
      int dm = m.dim_in_window(a), dn = n.dim_in_window(a);
      DenseMatrix<K> f(dn, dm);
      for (int r = 0; r < dn; ++r)
        for (int c = 0; c < dm; ++c) f(r, c) = ker(v, offset[idx] + static_cast<long>(r) * dm + c);
      maps.push_back(std::move(f));
    }
    basis.emplace_back(w, std::move(maps));
  }
  return basis;
}

}  // namespace boxmod
