#pragma once

// Annihilator, Krull dimension, associated primes and equidimensionality of
// determined box modules. Monomial primes are written P_F = (x_i : i not in
// F) and handled through their face F as a bitmask.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "boxmod/box_module.hpp"
#include "boxmod/subspace.hpp"

namespace boxmod {

namespace detail {

// exponent saturating direction i from degree a: one step past the border
template <Field K>
int saturation_steps(const BoxModule<K>& m, const ExponentVector& a, int i) {
  return m.window().hi[i] - a[i] + 1;
}

}  // namespace detail

// x^b annihilates M iff its action is zero from every window degree
template <Field K>
bool annihilates(const BoxModule<K>& m, const ExponentVector& b) {
  const Window& w = m.window();
  for (long idx = 0; idx < w.count(); ++idx)
    if (!m.evaluate_action(w.degree_at(idx), b).is_zero()) return false;
  return true;
}

// ann(M) as a monomial ideal; generators found inside the box where every
// exponent saturates, since larger powers act the same way
template <Field K>
MonomialIdeal annihilator(const BoxModule<K>& m) {
  if (!m.determined()) throw std::invalid_argument("annihilator: module must be determined");
  const Window& w = m.window();
  int n = w.arity();
  ExponentVector cap = w.hi - w.lo + ExponentVector::ones(n);
  std::vector<ExponentVector> gens;
  MonomialIdeal sofar = MonomialIdeal::zero(n);
  for (const auto& b : box_enumerate(ExponentVector::zero(n), cap)) {
    if (sofar.contains(b)) continue;
    if (annihilates(m, b)) {
      gens.push_back(b);
      sofar = MonomialIdeal::from_generators(n, gens);
    }
  }
  return sofar;
}

// dim M = max |F| over faces F such that some component survives saturation
// in all directions of F; -1 for the zero module
template <Field K>
int krull_dim(const BoxModule<K>& m) {
  if (!m.determined()) throw std::invalid_argument("krull_dim: module must be determined");
  if (m.is_zero_module()) return -1;
  const Window& w = m.window();
  int n = w.arity();
  int best = 0;
  for (std::uint32_t F = 0; F < (1u << n); ++F) {
    int size = static_cast<int>(mask_members(F, n).size());
    if (size <= best) continue;
    for (long idx = 0; idx < w.count(); ++idx) {
      ExponentVector a = w.degree_at(idx);
      ExponentVector b = ExponentVector::zero(n);
      for (int i : mask_members(F, n)) b[i] = detail::saturation_steps(m, a, i);
      if (!m.evaluate_action(a, b).is_zero()) {
        best = size;
        break;
      }
    }
  }
  return best;
}

struct AnnihilatorAndDim {
  MonomialIdeal ann;
  int dim;  // -1 sentinel for the zero module
};

template <Field K>
AnnihilatorAndDim annihilator_and_dim(const BoxModule<K>& m) {
  MonomialIdeal ann = annihilator(m);
  if (m.is_zero_module()) return {ann, -1};
  return {ann, ann.dim_and_minimal_primes().dim};
}

// P_F is associated iff some window degree carries a vector killed by a
// saturating power of every x_i outside F and surviving the saturating
// monomial supported on F.
template <Field K>
std::vector<std::vector<int>> ass_primes(const BoxModule<K>& m) {
  if (!m.determined()) throw std::invalid_argument("ass_primes: module must be determined");
  const Window& w = m.window();
  int n = w.arity();
  std::vector<std::vector<int>> found;
  for (std::uint32_t F = 0; F < (1u << n); ++F) {
    bool witnessed = false;
    for (long idx = 0; idx < w.count() && !witnessed; ++idx) {
      ExponentVector a = w.degree_at(idx);
      if (m.dim_in_window(a) == 0) continue;
      // candidates: intersection of kernels of saturating powers outside F
      DenseMatrix<K> cand = DenseMatrix<K>::identity(m.dim_in_window(a));  // rows span
      for (int i = 0; i < n; ++i) {
        if (F & (1u << i)) continue;
        ExponentVector b = ExponentVector::zero(n);
        b[i] = detail::saturation_steps(m, a, i);
        DenseMatrix<K> killer = m.evaluate_action(a, b) * cand.transpose();
        cand = killer.kernel_basis() * cand;
        if (cand.rows() == 0) break;
      }
      if (cand.rows() == 0) continue;
      ExponentVector s = ExponentVector::zero(n);
      for (int i : mask_members(F, n)) s[i] = detail::saturation_steps(m, a, i);
      if (!(m.evaluate_action(a, s) * cand.transpose()).is_zero()) witnessed = true;
    }
    if (witnessed) found.push_back(mask_members(F, n));
  }
  return found;
}

// Independent oracle for Ass(S/I): a monomial prime is associated iff it
// equals (I : u) for a monomial u dividing lcm(G(I)). Replacing a witness u
// by gcd(u, lcm) preserves the colon ideal, so that search space suffices.
inline std::vector<std::vector<int>> ass_faces_colon_oracle(const MonomialIdeal& I) {
  int n = I.arity();
  ExponentVector lcm = ExponentVector::zero(n);
  for (const auto& g : I.generators()) lcm = cwise_max(lcm, g);
  std::vector<std::vector<int>> found;
  for (std::uint32_t F = 0; F < (1u << n); ++F) {
    std::vector<ExponentVector> gens;
    for (int i = 0; i < n; ++i)
      if (!(F & (1u << i))) gens.push_back(ExponentVector::unit(n, i));
    MonomialIdeal pf = MonomialIdeal::from_generators(n, gens);
    bool hit = false;
    for (const auto& u : box_enumerate(ExponentVector::zero(n), lcm))
      if (I.colon(u) == pf) {
        hit = true;
        break;
      }
    if (hit) found.push_back(mask_members(F, n));
  }
  return found;
}

// minimal primes = inclusion-maximal faces among the associated ones
inline std::vector<std::vector<int>> minimal_prime_faces(
    const std::vector<std::vector<int>>& ass_faces) {
  std::vector<std::vector<int>> out;
  auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    for (int x : a)
      if (std::find(b.begin(), b.end(), x) == b.end()) return false;
    return true;
  };
  for (const auto& f : ass_faces) {
    bool maximal = true;
    for (const auto& g : ass_faces)
      if (f != g && subset(f, g)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(f);
  }
  return out;
}

// all minimal primes of the same codimension; undefined for the zero module
template <Field K>
bool is_equidimensional(const BoxModule<K>& m) {
  if (m.is_zero_module()) throw std::invalid_argument("equidimensionality of the zero module");
  auto mins = minimal_prime_faces(ass_primes(m));
  for (const auto& f : mins)
    if (f.size() != mins.front().size()) return false;
  return true;
}

}  // namespace boxmod
