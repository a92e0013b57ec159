#include <algorithm>
#include <array>
#include <numeric>

#include "ordercraft/poset.hpp"

namespace oc {

namespace {

using Signature = std::array<std::uint32_t, 6>;

struct Profile {
  std::vector<std::uint32_t> level;  // longest chain ending at x, minus one
  std::vector<Signature> sig;
  std::vector<std::vector<Element>> lower_covers;
  std::vector<std::vector<Element>> upper_covers;
};

Profile profile(const Poset& p) {
  const std::size_t n = p.size();
  Profile pr;
  pr.level.assign(n, 0);
  std::vector<std::uint32_t> depth(n, 0);
  for (Element y : p.linear_extension()) {
    for (auto x = p.down(y).find_first(); x != Bits::npos; x = p.down(y).find_next(x)) {
      pr.level[y] = std::max(pr.level[y], pr.level[x] + 1);
    }
  }
  const auto& lin = p.linear_extension();
  for (auto it = lin.rbegin(); it != lin.rend(); ++it) {
    Element x = *it;
    for (auto y = p.up(x).find_first(); y != Bits::npos; y = p.up(x).find_next(y)) {
      depth[x] = std::max(depth[x], depth[y] + 1);
    }
  }
  pr.lower_covers.resize(n);
  pr.upper_covers.resize(n);
  for (auto [a, b] : transitive_reduction(p)) {
    pr.upper_covers[a].push_back(b);
    pr.lower_covers[b].push_back(a);
  }
  pr.sig.resize(n);
  for (Element x = 0; x < n; ++x) {
    pr.sig[x] = {pr.level[x], depth[x], static_cast<std::uint32_t>(p.down_count(x)),
                 static_cast<std::uint32_t>(p.up_count(x)),
                 static_cast<std::uint32_t>(pr.lower_covers[x].size()),
                 static_cast<std::uint32_t>(pr.upper_covers[x].size())};
  }
  return pr;
}

struct IsoSearch {
  const Poset& a;
  const Poset& b;
  const Profile& pa;
  const Profile& pb;
  std::vector<Element> order;
  std::vector<Element> fwd;
  std::vector<Element> back;
  std::vector<Element> minimal_b;
  std::uint64_t budget;
  std::uint64_t nodes = 0;

  bool consistent(Element x, Element y) const {
    const Bits& db = b.down(y);
    for (auto v = db.find_first(); v != Bits::npos; v = db.find_next(v)) {
      Element u = back[v];
      if (u == kNone || !a.less(u, x)) return false;
    }
    return true;
  }

  bool run(std::size_t depth) {
    if (depth == order.size()) return true;
    if (++nodes > budget) fail(ErrorCode::BudgetExceeded, "isomorphism search exceeded " + std::to_string(budget) + " nodes");
    Element x = order[depth];
    const std::vector<Element>* cands = &minimal_b;
    if (!pa.lower_covers[x].empty()) cands = &pb.upper_covers[fwd[pa.lower_covers[x].front()]];
    for (Element y : *cands) {
      if (back[y] != kNone || pb.sig[y] != pa.sig[x] || !consistent(x, y)) continue;
      fwd[x] = y;
      back[y] = x;
      if (run(depth + 1)) return true;
      fwd[x] = kNone;
      back[y] = kNone;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Element>> is_isomorphic(const Poset& a, const Poset& b, SearchOptions opts) {
  if (a.size() != b.size() || a.relation_size() != b.relation_size()) return std::nullopt;
  if (a.size() > 12 && !opts.force) {
    fail(ErrorCode::BudgetExceeded, "isomorphism search limited to 12 elements without force (got " + std::to_string(a.size()) + ")");
  }
  Profile pa = profile(a), pb = profile(b);
  auto sa = pa.sig, sb = pb.sig;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;

  IsoSearch s{a, b, pa, pb, {}, {}, {}, {}, opts.budget ? opts.budget : default_search_budget()};
  s.order.resize(a.size());
  std::iota(s.order.begin(), s.order.end(), Element{0});
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](Element x, Element y) { return pa.level[x] < pa.level[y]; });
  s.fwd.assign(a.size(), kNone);
  s.back.assign(b.size(), kNone);
  s.minimal_b = minimals(b);
  if (!s.run(0)) return std::nullopt;
  return s.fwd;
}

}  // namespace oc
