#include <algorithm>
#include <numeric>

#include "ordercraft/semilattice.hpp"

namespace oc {

namespace {

struct Triple {
  Element a;
  Element b;
  Element z;  // z = a op b in the pattern
  bool is_join;
};

struct EmbedSearch {
  const Poset& pattern;
  const Poset& target;
  std::vector<Element> order;
  std::vector<std::size_t> pos;                // position of each pattern element in `order`
  std::vector<std::vector<Triple>> triples_at;  // checked once their last element is placed
  std::vector<Element> fwd;
  Bits used;
  std::uint64_t budget;
  std::uint64_t nodes = 0;

  bool triple_ok(const Triple& t) const {
    auto v = t.is_join ? target.join(fwd[t.a], fwd[t.b]) : target.meet(fwd[t.a], fwd[t.b]);
    return v && *v == fwd[t.z];
  }

  bool consistent(Element x, Element y) const {
    if (target.down_count(y) < pattern.down_count(x) || target.up_count(y) < pattern.up_count(x)) return false;
    for (std::size_t i = 0; i < pos[x]; ++i) {
      Element u = order[i];
      if (pattern.less(u, x) != target.less(fwd[u], y)) return false;
      if (pattern.less(x, u) != target.less(y, fwd[u])) return false;
    }
    return true;
  }

  bool run(std::size_t depth) {
    if (depth == order.size()) return true;
    if (++nodes > budget) fail(ErrorCode::BudgetExceeded, "embedding search exceeded " + std::to_string(budget) + " nodes");
    Element x = order[depth];
    for (Element y = 0; y < target.size(); ++y) {
      if (used.test(y) || !consistent(x, y)) continue;
      fwd[x] = y;
      bool ok = std::all_of(triples_at[x].begin(), triples_at[x].end(), [&](const Triple& t) { return triple_ok(t); });
      if (ok) {
        used.set(y);
        if (run(depth + 1)) return true;
        used.reset(y);
      }
      fwd[x] = kNone;
    }
    return false;
  }
};

}  // namespace

std::optional<MapWitness> embedding_search(const Poset& pattern, const Poset& target, EmbeddingMode mode,
                                           SearchOptions opts) {
  const bool joins = mode == EmbeddingMode::Join || mode == EmbeddingMode::Sublattice;
  const bool meets = mode == EmbeddingMode::Meet || mode == EmbeddingMode::Sublattice;
  if (mode == EmbeddingMode::Sublattice && (!is_lattice(pattern) || !is_lattice(target))) {
    fail(ErrorCode::StructureMismatch, "sublattice mode needs two lattices");
  }
  if (joins && (!is_join_semilattice(pattern) || !is_join_semilattice(target))) {
    fail(ErrorCode::StructureMismatch, "join mode needs two join-semilattices");
  }
  if (meets && (!is_meet_semilattice(pattern) || !is_meet_semilattice(target))) {
    fail(ErrorCode::StructureMismatch, "meet mode needs two meet-semilattices");
  }
  if (pattern.size() > target.size()) return std::nullopt;

  const std::size_t n = pattern.size();
  std::vector<std::size_t> level(n, 0);
  for (Element y : pattern.linear_extension()) {
    for (auto x = pattern.down(y).find_first(); x != Bits::npos; x = pattern.down(y).find_next(x)) {
      level[y] = std::max(level[y], level[x] + 1);
    }
  }
  EmbedSearch s{pattern, target, {}, std::vector<std::size_t>(n), std::vector<std::vector<Triple>>(n),
                std::vector<Element>(n, kNone), Bits(target.size()), opts.budget ? opts.budget : default_search_budget()};
  s.order.resize(n);
  std::iota(s.order.begin(), s.order.end(), Element{0});
  std::stable_sort(s.order.begin(), s.order.end(), [&](Element a, Element b) { return level[a] < level[b]; });
  for (std::size_t i = 0; i < n; ++i) s.pos[s.order[i]] = i;

  auto attach = [&](Element a, Element b, Element z, bool is_join) {
    Element last = a;
    for (Element e : {b, z}) {
      if (s.pos[e] > s.pos[last]) last = e;
    }
    s.triples_at[last].push_back({a, b, z, is_join});
  };
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (pattern.comparable(a, b)) continue;
      if (joins) attach(a, b, *pattern.join(a, b), true);
      if (meets) attach(a, b, *pattern.meet(a, b), false);
    }
  }
  if (!s.run(0)) return std::nullopt;
  MapWitness w = make_witness(pattern, target, s.fwd);
  bool ok = w.certified.order_embedding && (!joins || w.certified.join_preserving) && (!meets || w.certified.meet_preserving);
  if (!ok) fail(ErrorCode::PreconditionViolated, "embedding search produced an uncertified witness");
  return w;
}

}  // namespace oc
