#pragma once

// Monomial ideals by their minimal generators: membership, colon ideals,
// radicals (two independent routes), t-determinedness, Krull dimension and
// minimal primes of the quotient.

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "boxmod/exponent_vector.hpp"

namespace boxmod {

class MonomialIdeal {
 public:
  // minimalizes: drops every generator divisible by another, sorts lex
  static MonomialIdeal from_generators(int n, std::vector<ExponentVector> gens) {
    for (const auto& g : gens) {
      if (g.size() != n) throw std::invalid_argument("generator arity mismatch");
      require_nonnegative(g, "ideal generator");
    }
    std::vector<ExponentVector> kept;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
        if (i == j) continue;
        // strict divisor, or an equal duplicate earlier in the list
        if (leq(gens[j], gens[i]) && (gens[j] != gens[i] || j < i)) redundant = true;
      }
      if (!redundant) kept.push_back(gens[i]);
    }
    std::sort(kept.begin(), kept.end(), LexLess{});
    MonomialIdeal I;
    I.n_ = n;
    I.gens_ = std::move(kept);
    return I;
  }

  static MonomialIdeal zero(int n) { return from_generators(n, {}); }
  static MonomialIdeal unit(int n) { return from_generators(n, {ExponentVector::zero(n)}); }

  int arity() const { return n_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0] == ExponentVector::zero(n_); }

  bool operator==(const MonomialIdeal& o) const { return n_ == o.n_ && gens_ == o.gens_; }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

  // x^u in I iff some generator divides x^u
  bool contains(const ExponentVector& u) const {
    if (u.size() != n_) throw std::invalid_argument("membership: arity mismatch");
    require_nonnegative(u, "membership");
    for (const auto& g : gens_)
      if (leq(g, u)) return true;
    return false;
  }

  bool contains(const MonomialIdeal& o) const {
    for (const auto& g : o.gens_)
      if (!contains(g)) return false;
    return true;
  }

  // I : x^u, generators max(g - u, 0)
  MonomialIdeal colon(const ExponentVector& u) const {
    require_nonnegative(u, "colon");
    std::vector<ExponentVector> gens;
    gens.reserve(gens_.size());
    for (const auto& g : gens_) {
      ExponentVector h = g;
      for (int i = 0; i < n_; ++i) h[i] = std::max(g[i] - u[i], 0);
      gens.push_back(h);
    }
    return from_generators(n_, gens);
  }

  // componentwise sqrt of each generator, minimalized
  MonomialIdeal radical() const {
    std::vector<ExponentVector> gens;
    gens.reserve(gens_.size());
    for (const auto& g : gens_) gens.push_back(map_sqrt(g));
    return from_generators(n_, gens);
  }

  bool is_t_determined(const BoundVector& t) const {
    for (const auto& g : gens_)
      if (!leq(g, t.vec())) return false;
    return true;
  }

  // smallest valid bound: componentwise max of generator exponents, raised to 1
  BoundVector tight_bound() const {
    ExponentVector t = ExponentVector::ones(n_);
    for (const auto& g : gens_) t = cwise_max(t, g);
    return BoundVector(t);
  }

  // all minimal primes P_F = (x_i : i not in F) of S/I, returned as the F's,
  // plus dim S/I = max |F|; exhaustive over subsets (desk-scale n)
  struct DimAndPrimes {
    int dim;
    std::vector<std::vector<int>> prime_faces;  // inclusion-maximal F's
  };

  DimAndPrimes dim_and_minimal_primes() const {
    if (is_unit()) throw std::invalid_argument("dim of the unit ideal quotient");
    if (n_ > 30) throw std::invalid_argument("minimal primes: arity too large for subset scan");
    std::vector<std::uint32_t> supp_masks;
    for (const auto& g : gens_) {
      std::uint32_t m = 0;
      for (int i = 0; i < n_; ++i)
        if (g[i] > 0) m |= 1u << i;
      supp_masks.push_back(m);
    }
    // F admissible iff no generator has support inside F
    std::vector<std::uint32_t> admissible;
    for (std::uint32_t F = 0; F < (1u << n_); ++F) {
      bool ok = true;
      for (std::uint32_t m : supp_masks)
        if ((m & ~F) == 0) {
          ok = false;
          break;
        }
      if (ok) admissible.push_back(F);
    }
    DimAndPrimes out;
    out.dim = 0;
    for (std::uint32_t F : admissible) {
      bool maximal = true;
      for (std::uint32_t G : admissible)
        if (F != G && (F & ~G) == 0) {
          maximal = false;
          break;
        }
      if (maximal) out.prime_faces.push_back(mask_members(F, n_));
      out.dim = std::max(out.dim, static_cast<int>(mask_members(F, n_).size()));
    }
    return out;
  }

 private:
  int n_ = 0;
  std::vector<ExponentVector> gens_;
};

// Second, independent radical route: read off the squarefree degrees a with
// x^{r(a)} in I and minimalize. Cross-checked against MonomialIdeal::radical.
inline MonomialIdeal radical_by_degree_criterion(const MonomialIdeal& I, const BoundVector& t) {
  if (!I.is_t_determined(t)) throw std::invalid_argument("radical criterion needs a t-determined ideal");
  int n = I.arity();
  std::vector<ExponentVector> gens;
  for (const auto& a : box_enumerate(ExponentVector::zero(n), ExponentVector::ones(n)))
    if (I.contains(map_r(a, t))) gens.push_back(a);
  return MonomialIdeal::from_generators(n, gens);
}

}  // namespace boxmod
