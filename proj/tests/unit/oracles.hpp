#pragma once

// Brute-force reference implementations. Nothing here calls the search or
// enumeration code under test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "ordercraft/poset.hpp"

namespace oracle {

using oc::Element;
using oc::kNone;
using oc::Poset;
using Matrix = std::vector<std::vector<bool>>;

inline Matrix leq_matrix(const Poset& p) {
  Matrix m(p.size(), std::vector<bool>(p.size(), false));
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y = 0; y < p.size(); ++y) m[x][y] = p.leq(x, y);
  }
  return m;
}

// Reflexive-transitive closure of strict pairs (Warshall).
inline Matrix closure(std::size_t n, const std::vector<oc::Pair>& pairs) {
  Matrix m(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = true;
  for (auto [a, b] : pairs) m[a][b] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m[i][j] = m[i][j] || (m[i][k] && m[k][j]);
    }
  }
  return m;
}

inline Element lub(const Poset& p, Element x, Element y) {
  for (Element z = 0; z < p.size(); ++z) {
    if (!p.leq(x, z) || !p.leq(y, z)) continue;
    bool least = true;
    for (Element w = 0; w < p.size(); ++w) {
      if (p.leq(x, w) && p.leq(y, w) && !p.leq(z, w)) least = false;
    }
    if (least) return z;
  }
  return kNone;
}

inline Element glb(const Poset& p, Element x, Element y) {
  for (Element z = 0; z < p.size(); ++z) {
    if (!p.leq(z, x) || !p.leq(z, y)) continue;
    bool greatest = true;
    for (Element w = 0; w < p.size(); ++w) {
      if (p.leq(w, x) && p.leq(w, y) && !p.leq(w, z)) greatest = false;
    }
    if (greatest) return z;
  }
  return kNone;
}

// Every downset as a bitmask, by scanning all 2^n subsets (n <= 20).
inline std::vector<std::uint32_t> downset_masks(const Poset& p) {
  std::vector<std::uint32_t> out;
  const std::size_t n = p.size();
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (Element y = 0; y < n && ok; ++y) {
      if (!(s >> y & 1)) continue;
      for (Element x = 0; x < n && ok; ++x) {
        if (p.less(x, y) && !(s >> x & 1)) ok = false;
      }
    }
    if (ok) out.push_back(s);
  }
  return out;
}

inline bool independent(const Poset& p, const std::vector<Element>& xs) {
  const std::size_t k = xs.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      if (mask >> i & 1) continue;
      Element acc = kNone;
      bool exists = true;
      for (std::size_t j = 0; j < k && exists; ++j) {
        if (!(mask >> j & 1)) continue;
        acc = acc == kNone ? xs[j] : lub(p, acc, xs[j]);
        exists = acc != kNone;
      }
      if (exists && p.leq(xs[i], acc)) return false;
    }
  }
  return true;
}

inline std::size_t max_independent(const Poset& p, std::size_t cap) {
  std::size_t best = 0;
  const std::size_t n = p.size();
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    const auto c = static_cast<std::size_t>(__builtin_popcount(s));
    if (c <= best || c > cap) continue;
    std::vector<Element> xs;
    for (Element x = 0; x < n; ++x) {
      if (s >> x & 1) xs.push_back(x);
    }
    if (independent(p, xs)) best = c;
  }
  return best;
}

// Isomorphism by trying every permutation (small n only).
inline bool isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  std::vector<Element> perm(a.size());
  std::iota(perm.begin(), perm.end(), Element{0});
  do {
    bool ok = true;
    for (Element x = 0; x < a.size() && ok; ++x) {
      for (Element y = 0; y < a.size() && ok; ++y) ok = a.leq(x, y) == b.leq(perm[x], perm[y]);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool is_isomorphism(const Poset& a, const Poset& b, const std::vector<Element>& f) {
  if (a.size() != b.size() || f.size() != a.size()) return false;
  std::vector<bool> hit(b.size(), false);
  for (Element v : f) {
    if (v >= b.size() || hit[v]) return false;
    hit[v] = true;
  }
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      if (a.leq(x, y) != b.leq(f[x], f[y])) return false;
    }
  }
  return true;
}

// Random strict order from a random DAG over index order.
inline Poset random_order(std::size_t n, double density, std::mt19937_64& g) {
  std::vector<oc::Pair> pairs;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (Element i = 0; i < n; ++i) {
    for (Element j = i + 1; j < n; ++j) {
      if (u(g) < density) pairs.emplace_back(i, j);
    }
  }
  return oc::build(n, oc::RelationKind::Covers, pairs);
}

struct MapCheck {
  bool order_preserving = true;
  bool order_embedding = true;
  bool joins = true;
  bool meets = true;
  bool injective = true;
};

// Joins and meets are compared on pairs where the source bound exists.
inline MapCheck check_map(const Poset& s, const Poset& t, const std::vector<Element>& f) {
  MapCheck m;
  for (Element x = 0; x < s.size(); ++x) {
    for (Element y = 0; y < s.size(); ++y) {
      if (s.leq(x, y) && !t.leq(f[x], f[y])) m.order_preserving = false;
      if (s.leq(x, y) != t.leq(f[x], f[y])) m.order_embedding = false;
      if (x != y && f[x] == f[y]) m.injective = false;
      const Element j = lub(s, x, y), k = glb(s, x, y);
      if (j != kNone && f[j] != lub(t, f[x], f[y])) m.joins = false;
      if (k != kNone && f[k] != glb(t, f[x], f[y])) m.meets = false;
    }
  }
  return m;
}

}  // namespace oracle
