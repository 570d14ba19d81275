#pragma once

// Deterministic random instances for the verification harness. All
// randomness flows through a seeded mt19937_64 and a local uniform helper,
// so a seed reproduces an instance bit for bit on any platform. Every
// instance carries its own serialization in the CLI text format.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include "boxmod/io.hpp"

namespace boxmod {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // inclusive bounds; rejection sampling keeps the stream implementation-independent
  int uniform(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("uniform: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do x = eng_();
    while (x >= limit);
    return lo + static_cast<int>(x % span);
  }

  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 eng_;
};

struct InstanceCaps {
  int n_min = 1, n_max = 4;
  int t_max = 3;              // each t_i uniform in 1..t_max
  int gens_min = 1, gens_max = 6;
  int pres_rows_max = 3, pres_cols_max = 3;

  InstanceCaps() = default;
  InstanceCaps(int nmin, int nmax, int tmax) : n_min(nmin), n_max(nmax), t_max(tmax) {}

  void validate() const {
    if (n_max > 6 || t_max > 4 || gens_max > 10)
      throw std::invalid_argument("instance caps exceed the harness limits (n<=6, t<=4, gens<=10)");
  }
};

enum class InstanceKind { ideal, ideal_pair, presentation, direct_sum };

inline ExponentVector random_bound(Rng& rng, int n, int t_max) {
  ExponentVector t = ExponentVector::ones(n);
  for (int i = 0; i < n; ++i) t[i] = rng.uniform(1, t_max);
  return t;
}

// a nonzero degree with components <= cap
inline ExponentVector random_degree(Rng& rng, const ExponentVector& cap) {
  int n = cap.size();
  for (;;) {
    ExponentVector a = ExponentVector::zero(n);
    for (int i = 0; i < n; ++i) a[i] = rng.uniform(0, cap[i]);
    if (a != ExponentVector::zero(n)) return a;
  }
}

inline MonomialIdeal random_ideal(Rng& rng, int n, const ExponentVector& t, int gmin, int gmax) {
  int k = rng.uniform(gmin, gmax);
  std::vector<ExponentVector> gens;
  for (int i = 0; i < k; ++i) gens.push_back(random_degree(rng, t));
  return MonomialIdeal::from_generators(n, gens);
}

// I inside J: J is generated by one divisor of each generator of I plus extras
inline std::pair<MonomialIdeal, MonomialIdeal> random_ideal_pair(Rng& rng, int n,
                                                                 const ExponentVector& t,
                                                                 int gmin, int gmax) {
  MonomialIdeal I = random_ideal(rng, n, t, gmin, gmax);
  std::vector<ExponentVector> jg;
  for (const auto& g : I.generators()) {
    ExponentVector d = ExponentVector::zero(n);
    for (int i = 0; i < n; ++i) d[i] = rng.uniform(0, g[i]);
    jg.push_back(d);
  }
  int extras = rng.uniform(0, 2);
  for (int i = 0; i < extras; ++i) jg.push_back(random_degree(rng, t));
  MonomialIdeal J = MonomialIdeal::from_generators(n, jg);
  if (!J.contains(I)) throw std::logic_error("random pair lost the inclusion");
  return {I, J};
}

// A random instance packaged as parsed CLI input, so failures serialize to a
// standalone reproduction file.
inline ParsedInput random_instance(Rng& rng, const InstanceCaps& caps, InstanceKind kind) {
  caps.validate();
  int n = rng.uniform(caps.n_min, caps.n_max);
  ExponentVector t = random_bound(rng, n, caps.t_max);
  ParsedInput out;
  out.ring = RingContext::generic(n);
  out.t = t;

  switch (kind) {
    case InstanceKind::ideal: {
      MonomialIdeal I = random_ideal(rng, n, t, caps.gens_min, caps.gens_max);
      out.ideals.emplace_back("I", I);
      out.ideals.emplace_back("J", MonomialIdeal::unit(n));
      out.kind = ParsedInput::ModuleKind::quotient;
      out.quot_num = "J";
      out.quot_den = "I";
      break;
    }
    case InstanceKind::ideal_pair: {
      auto [I, J] = random_ideal_pair(rng, n, t, caps.gens_min, caps.gens_max);
      out.ideals.emplace_back("I", I);
      out.ideals.emplace_back("J", J);
      out.kind = ParsedInput::ModuleKind::quotient;
      out.quot_num = "J";
      out.quot_den = "I";
      break;
    }
    case InstanceKind::presentation: {
      out.kind = ParsedInput::ModuleKind::presentation;
      int r = rng.uniform(1, caps.pres_rows_max);
      int c = rng.uniform(0, caps.pres_cols_max);
      for (int j = 0; j < r; ++j) {
        ExponentVector a = ExponentVector::zero(n);
        for (int i = 0; i < n; ++i) a[i] = rng.uniform(0, t[i]);
        out.pres.rows.push_back(a);
      }
      for (int k = 0; k < c; ++k) {
        ExponentVector b = ExponentVector::zero(n);
        for (int i = 0; i < n; ++i) b[i] = rng.uniform(0, t[i]);
        out.pres.cols.push_back(b);
      }
      static const long scalars[4] = {1, -1, 2, -2};
      for (int j = 0; j < r; ++j)
        for (int k = 0; k < c; ++k) {
          if (!leq(out.pres.rows[j], out.pres.cols[k])) continue;
          if (!rng.coin()) continue;
          PresentationData::Entry e;
          e.j = j;
          e.k = k;
          e.num = scalars[rng.uniform(0, 3)];
          e.exp = out.pres.cols[k] - out.pres.rows[j];
          out.pres.entries.push_back(e);
        }
      break;
    }
    case InstanceKind::direct_sum: {
      // block presentation of a sum of shifted cyclic quotients S/P_m(-c_m)
      out.kind = ParsedInput::ModuleKind::presentation;
      int summands = rng.uniform(2, 3);
      for (int mth = 0; mth < summands; ++mth) {
        ExponentVector c = ExponentVector::zero(n);
        for (int i = 0; i < n; ++i) c[i] = rng.uniform(0, t[i] - 1);
        ExponentVector room = t - c;
        MonomialIdeal P = random_ideal(rng, n, room, 1, 3);
        int j = static_cast<int>(out.pres.rows.size());
        out.pres.rows.push_back(c);
        for (const auto& g : P.generators()) {
          PresentationData::Entry e;
          e.j = j;
          e.k = static_cast<int>(out.pres.cols.size());
          e.num = 1;
          e.exp = g;
          out.pres.cols.push_back(c + g);
          out.pres.entries.push_back(e);
        }
      }
      break;
    }
  }
  return out;
}

// cycle through module-producing kinds by seed
inline InstanceKind module_kind_for(std::uint64_t seed) {
  switch (seed % 4) {
    case 0: return InstanceKind::ideal;
    case 1: return InstanceKind::ideal_pair;
    case 2: return InstanceKind::presentation;
    default: return InstanceKind::direct_sum;
  }
}

}  // namespace boxmod
