#pragma once

// Homological classification of a determined box module: projective
// dimension and depth (Auslander-Buchsbaum), Krull dimension, and the
// Cohen-Macaulay family of properties. Sequential CM uses the Ext
// criterion: Ext^{n-i}(M, omega) is zero or CM of dimension i for every i.
// Generalized CM: every non-top Ext has finite length (dimension <= 0).
// Both use grHom(-, S(-t)), a degree shift of the canonical module that
// leaves dimension, depth and CM-ness unchanged.

#include <stdexcept>

#include "boxmod/ext.hpp"
#include "boxmod/koszul.hpp"
#include "boxmod/module_invariants.hpp"

namespace boxmod {

struct Classification {
  bool zero = false;
  int projdim = -1;
  int depth = -1;
  int dim = -1;
  bool is_cm = false;
  bool is_seq_cm = false;
  bool is_gen_cm = false;
};

namespace detail {

struct BasicHomological {
  int projdim, depth, dim;
  bool cm;
};

template <Field K>
BasicHomological classify_basic(const BoxModule<K>& m) {
  int n = m.arity();
  int pd = betti_table(m).projdim();
  int depth = n - pd;
  int dim = krull_dim(m);
  return {pd, depth, dim, depth == dim};
}

}  // namespace detail

template <Field K>
Classification classify(const BoxModule<K>& m) {
  Classification c;
  if (m.is_zero_module()) {
    c.zero = true;
    return c;
  }
  int n = m.arity();
  auto basic = detail::classify_basic(m);
  c.projdim = basic.projdim;
  c.depth = basic.depth;
  c.dim = basic.dim;
  c.is_cm = basic.cm;

  ExtComputer<K> ext(m, m.bound().vec());
  c.is_gen_cm = true;
  c.is_seq_cm = true;
  for (int p = 0; p <= n; ++p) {
    BoxModule<K> e = ext.ext(p);
    bool ezero = e.is_zero_module();
    if (p != n - c.dim) {
      if (!ezero && krull_dim(e) > 0) c.is_gen_cm = false;
    }
    if (!ezero) {
      auto eb = detail::classify_basic(e);
      if (!(eb.cm && eb.dim == n - p)) c.is_seq_cm = false;
    }
  }
  return c;
}

}  // namespace boxmod
