#include "ordercraft/poset.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace oc {

std::vector<Element> members(const Bits& bits) {
  std::vector<Element> out;
  out.reserve(bits.count());
  for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i)) {
    out.push_back(static_cast<Element>(i));
  }
  return out;
}

Bits bits_of(std::size_t n, const std::vector<Element>& elements) {
  Bits b(n);
  for (Element e : elements) {
    if (e >= n) fail(ErrorCode::IndexOutOfRange, "element " + std::to_string(e) + " not below " + std::to_string(n));
    b.set(e);
  }
  return b;
}

Poset Poset::from_down_sets(std::vector<Bits> down, std::vector<std::string> labels, bool check) {
  const std::size_t n = down.size();
  if (!labels.empty() && labels.size() != n) {
    fail(ErrorCode::ArityMismatch, "label count " + std::to_string(labels.size()) + " differs from n = " + std::to_string(n));
  }
  Poset p;
  p.down_ = std::move(down);
  p.labels_ = std::move(labels);
  p.up_.assign(n, Bits(n));
  for (std::size_t y = 0; y < n; ++y) {
    if (p.down_[y].size() != n) fail(ErrorCode::ArityMismatch, "down-set width mismatch");
    for (auto x = p.down_[y].find_first(); x != Bits::npos; x = p.down_[y].find_next(x)) {
      p.up_[x].set(y);
    }
  }
  if (check) {
    for (std::size_t y = 0; y < n; ++y) {
      if (p.down_[y].test(y)) fail(ErrorCode::CyclicRelation, "relation is reflexive at " + std::to_string(y));
      for (auto x = p.down_[y].find_first(); x != Bits::npos; x = p.down_[y].find_next(x)) {
        if (!p.down_[x].is_subset_of(p.down_[y])) {
          fail(ErrorCode::CyclicRelation, "relation is not transitive at " + std::to_string(y));
        }
      }
    }
  }
  p.down_count_.resize(n);
  p.up_count_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    p.down_count_[x] = static_cast<std::uint32_t>(p.down_[x].count());
    p.up_count_[x] = static_cast<std::uint32_t>(p.up_[x].count());
  }

  std::vector<std::uint32_t> pending(p.down_count_);
  std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
  for (std::size_t x = 0; x < n; ++x) {
    if (pending[x] == 0) ready.push(static_cast<Element>(x));
  }
  p.linear_.reserve(n);
  while (!ready.empty()) {
    Element x = ready.top();
    ready.pop();
    p.linear_.push_back(x);
    for (auto y = p.up_[x].find_first(); y != Bits::npos; y = p.up_[x].find_next(y)) {
      if (--pending[y] == 0) ready.push(static_cast<Element>(y));
    }
  }
  if (p.linear_.size() != n) fail(ErrorCode::CyclicRelation, "relation contains a cycle");
  for (std::size_t i = 0; i < n; ++i) {
    if (p.linear_[i] != i) {
      p.index_linear_ = false;
      break;
    }
  }
  return p;
}

Bits Poset::down_closed(Element x) const {
  Bits b = down_[x];
  b.set(x);
  return b;
}

Bits Poset::up_closed(Element x) const {
  Bits b = up_[x];
  b.set(x);
  return b;
}

std::string Poset::label(Element x) const {
  return labels_.empty() ? std::to_string(x) : labels_[x];
}

Poset Poset::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != size()) fail(ErrorCode::ArityMismatch, "label count mismatch");
  Poset copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

std::optional<Element> Poset::least_of(const Bits& s) const {
  if (s.none()) return std::nullopt;
  std::size_t z = Bits::npos;
  if (index_linear_) {
    z = s.find_first();
  } else {
    std::uint32_t best = 0;
    for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i)) {
      if (z == Bits::npos || up_count_[i] > best) {
        z = i;
        best = up_count_[i];
      }
    }
  }
  Bits above = up_[z];
  above.set(z);
  if (!s.is_subset_of(above)) return std::nullopt;
  return static_cast<Element>(z);
}

std::optional<Element> Poset::greatest_of(const Bits& s) const {
  if (s.none()) return std::nullopt;
  std::size_t z = Bits::npos;
  std::uint32_t best = 0;
  for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i)) {
    if (z == Bits::npos || down_count_[i] > best) {
      z = i;
      best = down_count_[i];
    }
  }
  Bits below = down_[z];
  below.set(z);
  if (!s.is_subset_of(below)) return std::nullopt;
  return static_cast<Element>(z);
}

std::optional<Element> Poset::join(Element x, Element y) const {
  if (leq(x, y)) return y;
  if (leq(y, x)) return x;
  return least_of(up_[x] & up_[y]);
}

std::optional<Element> Poset::meet(Element x, Element y) const {
  if (leq(x, y)) return x;
  if (leq(y, x)) return y;
  return greatest_of(down_[x] & down_[y]);
}

std::optional<Element> Poset::least() const {
  Bits all(size());
  all.set();
  return least_of(all);
}

std::optional<Element> Poset::greatest() const {
  Bits all(size());
  all.set();
  return greatest_of(all);
}

std::size_t Poset::relation_size() const {
  std::size_t total = 0;
  for (auto c : down_count_) total += c;
  return total;
}

Poset build(std::size_t n, RelationKind kind, const std::vector<Pair>& pairs,
            std::vector<std::string> labels) {
  std::vector<std::vector<Element>> succ(n);
  std::vector<std::uint32_t> indeg(n, 0);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) {
      fail(ErrorCode::IndexOutOfRange, "pair (" + std::to_string(a) + "," + std::to_string(b) + ") outside n = " + std::to_string(n));
    }
    if (a == b) fail(ErrorCode::CyclicRelation, "pair (" + std::to_string(a) + "," + std::to_string(a) + ") is reflexive");
    succ[a].push_back(b);
    ++indeg[b];
  }
  std::vector<Bits> down(n, Bits(n));
  std::vector<Element> queue;
  for (std::size_t x = 0; x < n; ++x) {
    if (indeg[x] == 0) queue.push_back(static_cast<Element>(x));
  }
  std::size_t head = 0;
  while (head < queue.size()) {
    Element x = queue[head++];
    for (Element y : succ[x]) {
      down[y] |= down[x];
      down[y].set(x);
      if (--indeg[y] == 0) queue.push_back(y);
    }
  }
  if (queue.size() != n) fail(ErrorCode::CyclicRelation, "relation contains a directed cycle");
  (void)kind;  // both kinds are closed transitively; a leq input is already closed
  return Poset::from_down_sets(std::move(down), std::move(labels), false);
}

CoverList transitive_reduction(const Poset& p) {
  CoverList covers;
  for (Element y = 0; y < p.size(); ++y) {
    const Bits& below = p.down(y);
    for (auto x = below.find_first(); x != Bits::npos; x = below.find_next(x)) {
      if (!p.up(static_cast<Element>(x)).intersects(below)) covers.emplace_back(static_cast<Element>(x), y);
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

std::vector<Pair> strict_pairs(const Poset& p) {
  std::vector<Pair> out;
  for (Element x = 0; x < p.size(); ++x) {
    for (auto y = p.up(x).find_first(); y != Bits::npos; y = p.up(x).find_next(y)) {
      out.emplace_back(x, static_cast<Element>(y));
    }
  }
  return out;
}

Poset chain(std::size_t n) {
  std::vector<Bits> down(n, Bits(n));
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < y; ++x) down[y].set(x);
  }
  return Poset::from_down_sets(std::move(down), {}, false);
}

Poset antichain(std::size_t n) {
  return Poset::from_down_sets(std::vector<Bits>(n, Bits(n)), {}, false);
}

Poset dual(const Poset& p) {
  std::vector<Bits> down(p.size());
  for (Element x = 0; x < p.size(); ++x) down[x] = p.up(x);
  return Poset::from_down_sets(std::move(down), p.labels(), false);
}

namespace {

std::vector<std::string> pair_labels(const Poset& a, const Poset& b) {
  std::vector<std::string> out;
  if (!a.has_labels() && !b.has_labels()) return out;
  out.reserve(a.size() * b.size());
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < b.size(); ++y) out.push_back("(" + a.label(x) + "," + b.label(y) + ")");
  }
  return out;
}

std::vector<std::string> concat_labels(const std::vector<const Poset*>& parts) {
  bool any = false;
  for (auto* q : parts) any = any || q->has_labels();
  std::vector<std::string> out;
  if (!any) return out;
  for (auto* q : parts) {
    for (Element x = 0; x < q->size(); ++x) out.push_back(q->label(x));
  }
  return out;
}

}  // namespace

Poset direct_product(const Poset& a, const Poset& b) {
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  std::vector<Bits> down(n, Bits(n));
  for (Element x = 0; x < na; ++x) {
    Bits da = a.down_closed(x);
    for (Element y = 0; y < nb; ++y) {
      Bits db = b.down_closed(y);
      Bits& d = down[x * nb + y];
      for (auto u = da.find_first(); u != Bits::npos; u = da.find_next(u)) {
        for (auto v = db.find_first(); v != Bits::npos; v = db.find_next(v)) d.set(u * nb + v);
      }
      d.reset(x * nb + y);
    }
  }
  return Poset::from_down_sets(std::move(down), pair_labels(a, b), false);
}

Poset direct_sum(const Poset& a, const Poset& b) {
  const std::size_t na = a.size(), n = na + b.size();
  std::vector<Bits> down(n, Bits(n));
  for (Element x = 0; x < na; ++x) {
    for (auto u = a.down(x).find_first(); u != Bits::npos; u = a.down(x).find_next(u)) down[x].set(u);
  }
  for (Element y = 0; y < b.size(); ++y) {
    for (auto v = b.down(y).find_first(); v != Bits::npos; v = b.down(y).find_next(v)) down[na + y].set(na + v);
  }
  return Poset::from_down_sets(std::move(down), concat_labels({&a, &b}), false);
}

Poset ordinal_sum(const Poset& a, const Poset& b) {
  return lexicographic_sum(chain(2), {a, b});
}

Poset lexicographic_sum(const Poset& index, const std::vector<Poset>& parts) {
  if (parts.size() != index.size()) {
    fail(ErrorCode::ArityMismatch, "index has " + std::to_string(index.size()) + " elements but " + std::to_string(parts.size()) + " parts were given");
  }
  std::vector<std::size_t> offset(parts.size() + 1, 0);
  for (std::size_t i = 0; i < parts.size(); ++i) offset[i + 1] = offset[i] + parts[i].size();
  const std::size_t n = offset.back();
  std::vector<Bits> down(n, Bits(n));
  for (Element i = 0; i < parts.size(); ++i) {
    for (Element x = 0; x < parts[i].size(); ++x) {
      Bits& d = down[offset[i] + x];
      for (auto j = index.down(i).find_first(); j != Bits::npos; j = index.down(i).find_next(j)) {
        for (std::size_t y = offset[j]; y < offset[j + 1]; ++y) d.set(y);
      }
      for (auto y = parts[i].down(x).find_first(); y != Bits::npos; y = parts[i].down(x).find_next(y)) {
        d.set(offset[i] + y);
      }
    }
  }
  std::vector<const Poset*> ptrs;
  for (auto& q : parts) ptrs.push_back(&q);
  return Poset::from_down_sets(std::move(down), concat_labels(ptrs), false);
}

Poset induced(const Poset& p, const std::vector<Element>& elements) {
  const std::size_t n = elements.size();
  std::vector<Bits> down(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (p.less(elements[j], elements[i])) down[i].set(j);
    }
  }
  std::vector<std::string> labels;
  if (p.has_labels()) {
    for (Element e : elements) labels.push_back(p.label(e));
  }
  return Poset::from_down_sets(std::move(down), std::move(labels), false);
}

std::vector<Element> minimals(const Poset& p) {
  std::vector<Element> out;
  for (Element x = 0; x < p.size(); ++x) {
    if (p.down(x).none()) out.push_back(x);
  }
  return out;
}

std::vector<Element> maximals(const Poset& p) {
  std::vector<Element> out;
  for (Element x = 0; x < p.size(); ++x) {
    if (p.up(x).none()) out.push_back(x);
  }
  return out;
}

std::vector<Element> minimals_of(const Poset& p, const Bits& s) {
  std::vector<Element> out;
  for (auto x = s.find_first(); x != Bits::npos; x = s.find_next(x)) {
    if (!p.down(static_cast<Element>(x)).intersects(s)) out.push_back(static_cast<Element>(x));
  }
  return out;
}

std::vector<Element> maximals_of(const Poset& p, const Bits& s) {
  std::vector<Element> out;
  for (auto x = s.find_first(); x != Bits::npos; x = s.find_next(x)) {
    if (!p.up(static_cast<Element>(x)).intersects(s)) out.push_back(static_cast<Element>(x));
  }
  return out;
}

std::size_t height(const Poset& p) {
  std::vector<std::size_t> h(p.size(), 1);
  std::size_t best = 0;
  for (Element y : p.linear_extension()) {
    for (auto x = p.down(y).find_first(); x != Bits::npos; x = p.down(y).find_next(x)) {
      h[y] = std::max(h[y], h[x] + 1);
    }
    best = std::max(best, h[y]);
  }
  return best;
}

namespace {

// Greedy chain partition of `cand`; its size bounds the width of `cand` from above.
std::size_t chain_cover_bound(const Poset& p, const Bits& cand) {
  std::vector<Element> tops;
  for (Element x : p.linear_extension()) {
    if (!cand.test(x)) continue;
    bool placed = false;
    for (Element& t : tops) {
      if (p.less(t, x)) {
        t = x;
        placed = true;
        break;
      }
    }
    if (!placed) tops.push_back(x);
  }
  return tops.size();
}

struct AntichainSearch {
  const Poset& p;
  std::vector<Bits> comparable;
  std::vector<Element> current;
  std::vector<Element> best;

  void run(Bits cand) {
    if (current.size() > best.size()) best = current;
    if (cand.none()) return;
    if (current.size() + cand.count() <= best.size()) return;
    if (current.size() + chain_cover_bound(p, cand) <= best.size()) return;
    auto v = static_cast<Element>(cand.find_first());
    cand.reset(v);
    current.push_back(v);
    run(cand - comparable[v]);
    current.pop_back();
    run(std::move(cand));
  }
};

}  // namespace

std::vector<Element> maximum_antichain(const Poset& p) {
  AntichainSearch s{p, {}, {}, {}};
  s.comparable.resize(p.size());
  for (Element x = 0; x < p.size(); ++x) s.comparable[x] = p.up(x) | p.down(x);
  Bits all(p.size());
  all.set();
  s.run(all);
  return s.best;
}

bool is_antichain(const Poset& p, const std::vector<Element>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (p.comparable(xs[i], xs[j])) return false;
    }
  }
  return true;
}

bool is_chain(const Poset& p, const std::vector<Element>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (!p.comparable(xs[i], xs[j])) return false;
    }
  }
  return true;
}

BasicStats basic_stats(const Poset& p) {
  BasicStats s;
  s.minimals = minimals(p);
  s.maximals = maximals(p);
  s.height = height(p);
  s.width = maximum_antichain(p).size();
  s.linear_extension = p.linear_extension();
  return s;
}

}  // namespace oc
