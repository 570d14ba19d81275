#pragma once

// Multigraded Betti numbers via degreewise Koszul homology:
//   beta_{i,a}(M) = dim H_i of the strand with terms  (+)_{|F|=i} M_{a-e_F}
// and signed unit-step multiplications as differentials. Also the Taylor
// complex oracle for cyclic monomial quotients, an independent route used to
// cross-check the Koszul numbers.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "boxmod/betti_table.hpp"
#include "boxmod/box_module.hpp"
#include "boxmod/monomial_ideal.hpp"

namespace boxmod {

namespace detail {

inline std::vector<std::uint32_t> subsets_of_size(int n, int k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t F = 0; F < (1u << n); ++F)
    if (static_cast<int>(__builtin_popcount(F)) == k) out.push_back(F);
  return out;
}

inline int koszul_sign(std::uint32_t F, int j) {
  // parity of the position of j among the members of F
  int before = __builtin_popcount(F & ((1u << j) - 1));
  return before % 2 == 0 ? 1 : -1;
}

template <Field K>
ExponentVector minus_face(const ExponentVector& a, std::uint32_t F) {
  ExponentVector b = a;
  for (int i = 0; i < a.size(); ++i)
    if (F & (1u << i)) --b[i];
  return b;
}

// the Koszul differential (+)_{|F|=i} M_{a-e_F} -> (+)_{|G|=i-1} M_{a-e_G}
template <Field K>
DenseMatrix<K> koszul_differential(const BoxModule<K>& m, const ExponentVector& a, int i) {
  int n = m.arity();
  auto src = subsets_of_size(n, i);
  auto tgt = subsets_of_size(n, i - 1);
  std::vector<int> src_dim(src.size()), tgt_dim(tgt.size());
  std::vector<int> src_off(src.size() + 1, 0), tgt_off(tgt.size() + 1, 0);
  for (std::size_t s = 0; s < src.size(); ++s) {
    src_dim[s] = m.dim_at(minus_face<K>(a, src[s]));
    src_off[s + 1] = src_off[s] + src_dim[s];
  }
  for (std::size_t u = 0; u < tgt.size(); ++u) {
    tgt_dim[u] = m.dim_at(minus_face<K>(a, tgt[u]));
    tgt_off[u + 1] = tgt_off[u] + tgt_dim[u];
  }
  DenseMatrix<K> d(tgt_off.back(), src_off.back());
  for (std::size_t s = 0; s < src.size(); ++s) {
    if (src_dim[s] == 0) continue;
    ExponentVector deg = minus_face<K>(a, src[s]);
    for (int j = 0; j < n; ++j) {
      if (!(src[s] & (1u << j))) continue;
      std::uint32_t G = src[s] & ~(1u << j);
      std::size_t u = 0;
      while (tgt[u] != G) ++u;
      if (tgt_dim[u] == 0) continue;
      DenseMatrix<K> block =
          m.evaluate_action(deg, ExponentVector::unit(n, j)).scaled(K(koszul_sign(src[s], j)));
      for (int r = 0; r < block.rows(); ++r)
        for (int c = 0; c < block.cols(); ++c) d(tgt_off[u] + r, src_off[s] + c) = block(r, c);
    }
  }
  return d;
}

}  // namespace detail

// beta_{i,a} for a fixed degree, all homological positions 0..n
template <Field K>
std::vector<int> koszul_strand_betti(const BoxModule<K>& m, const ExponentVector& a) {
  int n = m.arity();
  std::vector<DenseMatrix<K>> d(n + 2);  // d[i] : K_i -> K_{i-1}; d[0], d[n+1] zero-shaped
  for (int i = 1; i <= n; ++i) d[i] = detail::koszul_differential(m, a, i);
  d[0] = DenseMatrix<K>(0, d[1].rows());
  d[n + 1] = DenseMatrix<K>(d[n].cols(), 0);
  std::vector<int> betti(n + 1);
  for (int i = 0; i <= n; ++i) betti[i] = homology_dim(d[i + 1], d[i]);
  return betti;
}

// the full table; degrees are scanned over the whole window, which captures
// every Betti degree of a determined module
template <Field K>
BettiTable betti_table(const BoxModule<K>& m) {
  if (!m.determined()) throw std::invalid_argument("betti_table: module must be determined");
  BettiTable out;
  const Window& w = m.window();
  for (long idx = 0; idx < w.count(); ++idx) {
    ExponentVector a = w.degree_at(idx);
    std::vector<int> row = koszul_strand_betti(m, a);
    for (int i = 0; i <= m.arity(); ++i) out.add(i, a, row[i]);
  }
  return out;
}

// Independent oracle for beta(S/I): the Taylor complex on G(I) tensored
// with K; only the scalar parts (entries with equal lcm) survive.
template <Field K>
BettiTable taylor_betti(const MonomialIdeal& I) {
  int n = I.arity();
  const auto& gens = I.generators();
  int g = static_cast<int>(gens.size());
  if (g > 12) throw std::invalid_argument("taylor_betti: more than 12 generators");

  std::vector<ExponentVector> lcm(static_cast<std::size_t>(1) << g, ExponentVector::zero(n));
  for (std::uint32_t F = 1; F < (1u << g); ++F) {
    int j = __builtin_ctz(F);
    lcm[F] = cwise_max(lcm[F & (F - 1)], gens[j]);
  }

  // degrees where anything can happen
  std::vector<ExponentVector> degrees{ExponentVector::zero(n)};
  for (std::uint32_t F = 1; F < (1u << g); ++F) {
    bool seen = false;
    for (const auto& d : degrees)
      if (d == lcm[F]) seen = true;
    if (!seen) degrees.push_back(lcm[F]);
  }

  BettiTable out;
  for (const auto& a : degrees) {
    // strand basis at homological position i: subsets F, |F| = i, lcm(F) = a
    std::vector<std::vector<std::uint32_t>> basis(g + 2);
    for (std::uint32_t F = 0; F < (1u << g); ++F)
      if (lcm[F] == a) basis[__builtin_popcount(F)].push_back(F);
    for (int i = 0; i <= g; ++i) {
      if (basis[i].empty()) continue;
      auto matrix_to = [&](int lev) {
        DenseMatrix<K> d(static_cast<int>(basis[lev - 1].size()), static_cast<int>(basis[lev].size()));
        for (std::size_t c = 0; c < basis[lev].size(); ++c) {
          std::uint32_t F = basis[lev][c];
          for (int j = 0; j < g; ++j) {
            if (!(F & (1u << j))) continue;
            std::uint32_t G = F & ~(1u << j);
            if (lcm[G] != a) continue;  // entry carries a monomial, dies in T (x) K
            for (std::size_t r = 0; r < basis[lev - 1].size(); ++r)
              if (basis[lev - 1][r] == G)
                d(static_cast<int>(r), static_cast<int>(c)) = K(detail::koszul_sign(F, j));
          }
        }
        return d;
      };
      DenseMatrix<K> din = (i + 1 <= g && !basis[i + 1].empty())
                               ? matrix_to(i + 1)
                               : DenseMatrix<K>(static_cast<int>(basis[i].size()), 0);
      DenseMatrix<K> dout = (i >= 1 && !basis[i - 1].empty())
                                ? matrix_to(i)
                                : DenseMatrix<K>(0, static_cast<int>(basis[i].size()));
      out.add(i, a, homology_dim(din, dout));
    }
  }
  return out;
}

}  // namespace boxmod
