#pragma once

// Multigraded Betti tables: (homological index, degree) -> multiplicity.

#include <map>
#include <ostream>
#include <utility>

#include "boxmod/exponent_vector.hpp"

namespace boxmod {

class BettiTable {
 public:
  struct KeyLess {
    bool operator()(const std::pair<int, ExponentVector>& a,
                    const std::pair<int, ExponentVector>& b) const {
      if (a.first != b.first) return a.first < b.first;
      return lex_less(a.second, b.second);
    }
  };
  using Map = std::map<std::pair<int, ExponentVector>, int, KeyLess>;

  void add(int i, const ExponentVector& a, int mult) {
    if (mult == 0) return;
    auto key = std::make_pair(i, a);
    auto it = entries_.find(key);
    if (it == entries_.end())
      entries_.emplace(key, mult);
    else if ((it->second += mult) == 0)
      entries_.erase(it);
  }

  int get(int i, const ExponentVector& a) const {
    auto it = entries_.find({i, a});
    return it == entries_.end() ? 0 : it->second;
  }

  const Map& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  // largest homological index with a nonzero row; -1 for the zero table
  int projdim() const {
    int p = -1;
    for (const auto& [key, mult] : entries_)
      if (mult != 0) p = std::max(p, key.first);
    return p;
  }

  // beta_{i,j} aggregated by total degree
  std::map<std::pair<int, int>, int> totals() const {
    std::map<std::pair<int, int>, int> out;
    for (const auto& [key, mult] : entries_) out[{key.first, key.second.total()}] += mult;
    return out;
  }

  bool operator==(const BettiTable& o) const { return entries_ == o.entries_; }
  bool operator!=(const BettiTable& o) const { return !(*this == o); }

 private:
  Map entries_;
};

inline std::ostream& operator<<(std::ostream& os, const BettiTable& b) {
  for (const auto& [key, mult] : b.entries())
    os << key.first << "  " << key.second << "  " << mult << '\n';
  return os;
}

}  // namespace boxmod
