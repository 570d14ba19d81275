#pragma once

// Exponent vectors in Z^n, the componentwise partial order, the degree maps
// r, sqrt, s, p_t that drive the pullback functors, and iteration over
// finite degree boxes.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace boxmod {

struct ExponentVector {
  std::vector<int> e;

  ExponentVector() = default;
  explicit ExponentVector(std::vector<int> entries) : e(std::move(entries)) {}
  ExponentVector(std::initializer_list<int> entries) : e(entries) {}

  static ExponentVector zero(int n) { return ExponentVector(std::vector<int>(n, 0)); }
  static ExponentVector ones(int n) { return ExponentVector(std::vector<int>(n, 1)); }
  static ExponentVector unit(int n, int i) {
    ExponentVector v = zero(n);
    v.e.at(i) = 1;
    return v;
  }

  int size() const { return static_cast<int>(e.size()); }
  int operator[](int i) const { return e[i]; }
  int& operator[](int i) { return e[i]; }

  bool is_nonnegative() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x >= 0; });
  }

  int total() const { return std::accumulate(e.begin(), e.end(), 0); }

  bool operator==(const ExponentVector& o) const { return e == o.e; }
  bool operator!=(const ExponentVector& o) const { return e != o.e; }

  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < size(); ++i) os << (i ? "," : "") << e[i];
    os << ')';
    return os.str();
  }
};

inline std::ostream& operator<<(std::ostream& os, const ExponentVector& a) {
  return os << a.str();
}

inline void require_same_arity(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("exponent vectors of different arity: " + a.str() + " vs " + b.str());
}

// componentwise order; this is a partial order, so no operator<
inline bool leq(const ExponentVector& a, const ExponentVector& b) {
  require_same_arity(a, b);
  for (int i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// lexicographic order, used as the canonical linear extension of leq
inline bool lex_less(const ExponentVector& a, const ExponentVector& b) {
  require_same_arity(a, b);
  return std::lexicographical_compare(a.e.begin(), a.e.end(), b.e.begin(), b.e.end());
}

struct LexLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const { return lex_less(a, b); }
};

inline ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  require_same_arity(a, b);
  ExponentVector r = a;
  for (int i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

inline ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
  require_same_arity(a, b);
  ExponentVector r = a;
  for (int i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

inline ExponentVector cwise_min(const ExponentVector& a, const ExponentVector& b) {
  require_same_arity(a, b);
  ExponentVector r = a;
  for (int i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

inline ExponentVector cwise_max(const ExponentVector& a, const ExponentVector& b) {
  require_same_arity(a, b);
  ExponentVector r = a;
  for (int i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

// a.b with (a.b)_i = a_i b_i
inline ExponentVector cwise_mul(const ExponentVector& a, const ExponentVector& b) {
  require_same_arity(a, b);
  ExponentVector r = a;
  for (int i = 0; i < a.size(); ++i) r[i] = a[i] * b[i];
  return r;
}

// A bound vector t >= 1; the parameter of positive t-determinedness.
struct BoundVector {
  ExponentVector t;

  explicit BoundVector(ExponentVector v) : t(std::move(v)) {
    for (int i = 0; i < t.size(); ++i)
      if (t[i] < 1) throw std::invalid_argument("bound vector must be >= 1, got " + t.str());
  }
  BoundVector(std::initializer_list<int> entries) : BoundVector(ExponentVector(entries)) {}

  int size() const { return t.size(); }
  int operator[](int i) const { return t[i]; }
  const ExponentVector& vec() const { return t; }
};

inline void require_nonnegative(const ExponentVector& a, const char* what) {
  if (!a.is_nonnegative())
    throw std::invalid_argument(std::string(what) + ": negative component in " + a.str());
}

// r(a)_i = t_i if a_i > 0, else 0
inline ExponentVector map_r(const ExponentVector& a, const BoundVector& t) {
  require_nonnegative(a, "map_r");
  require_same_arity(a, t.vec());
  ExponentVector r = a;
  for (int i = 0; i < a.size(); ++i) r[i] = a[i] > 0 ? t[i] : 0;
  return r;
}

// sqrt(a)_i = 1 if a_i > 0, else 0
inline ExponentVector map_sqrt(const ExponentVector& a) {
  require_nonnegative(a, "map_sqrt");
  ExponentVector r = a;
  for (int i = 0; i < a.size(); ++i) r[i] = a[i] > 0 ? 1 : 0;
  return r;
}

// s(a)_i = t_i if a_i >= 1, else t_i - 1
inline ExponentVector map_s(const ExponentVector& a, const BoundVector& t) {
  require_nonnegative(a, "map_s");
  require_same_arity(a, t.vec());
  ExponentVector r = a;
  for (int i = 0; i < a.size(); ++i) r[i] = a[i] >= 1 ? t[i] : t[i] - 1;
  return r;
}

// p_t(a)_i = min(a_i, t_i)
inline ExponentVector map_p(const ExponentVector& a, const BoundVector& t) {
  require_nonnegative(a, "map_p");
  return cwise_min(a, t.vec());
}

// supp(a) = { i : a_i > 0 },  supp^t(a) = { i : a_i >= t_i }
inline std::pair<std::vector<int>, std::vector<int>> supports(const ExponentVector& a,
                                                              const BoundVector& t) {
  require_nonnegative(a, "supports");
  require_same_arity(a, t.vec());
  std::vector<int> supp, supp_t;
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] > 0) supp.push_back(i);
    if (a[i] >= t[i]) supp_t.push_back(i);
  }
  return {supp, supp_t};
}

// A finite degree box [lo, hi] in Z^n with lex-ascending linear indexing.
struct Window {
  ExponentVector lo, hi;

  Window(ExponentVector l, ExponentVector h) : lo(std::move(l)), hi(std::move(h)) {
    require_same_arity(lo, hi);
    if (!leq(lo, hi)) throw std::invalid_argument("window lower bound exceeds upper: " + lo.str() + " .. " + hi.str());
  }

  static Window box(const ExponentVector& hi) { return Window(ExponentVector::zero(hi.size()), hi); }

  int arity() const { return lo.size(); }

  long count() const {
    long c = 1;
    for (int i = 0; i < arity(); ++i) c *= hi[i] - lo[i] + 1;
    return c;
  }

  bool contains(const ExponentVector& a) const { return leq(lo, a) && leq(a, hi); }

  // lex-ascending index: last coordinate varies fastest
  long index_of(const ExponentVector& a) const {
    if (!contains(a)) throw std::invalid_argument("degree " + a.str() + " outside window");
    long idx = 0;
    for (int i = 0; i < arity(); ++i) idx = idx * (hi[i] - lo[i] + 1) + (a[i] - lo[i]);
    return idx;
  }

  ExponentVector degree_at(long idx) const {
    ExponentVector a = lo;
    for (int i = arity() - 1; i >= 0; --i) {
      int span = hi[i] - lo[i] + 1;
      a[i] = lo[i] + static_cast<int>(idx % span);
      idx /= span;
    }
    return a;
  }

  bool operator==(const Window& o) const { return lo == o.lo && hi == o.hi; }
  bool operator!=(const Window& o) const { return !(*this == o); }
};

// Every degree of [lo, hi] exactly once, lex ascending.
inline std::vector<ExponentVector> box_enumerate(const ExponentVector& lo, const ExponentVector& hi) {
  Window w(lo, hi);
  std::vector<ExponentVector> out;
  out.reserve(static_cast<std::size_t>(w.count()));
  for (long i = 0; i < w.count(); ++i) out.push_back(w.degree_at(i));
  return out;
}

// Subsets of {0,...,n-1} as bitmasks, smallest members first.
inline std::vector<int> mask_members(std::uint32_t mask, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) out.push_back(i);
  return out;
}

}  // namespace boxmod
