#include <algorithm>

#include "ordercraft/constructions.hpp"
#include "ordercraft/families.hpp"
#include "ordercraft/segments.hpp"
#include "ordercraft/semilattice.hpp"

namespace oc {

namespace {

Element join_of(const Poset& p, Element x, Element y) {
  auto j = p.join(x, y);
  if (!j) fail(ErrorCode::NotJoinSemilattice, "join of " + p.label(x) + " and " + p.label(y) + " is missing");
  return *j;
}

Element smallest_minimal(const Poset& p, const Bits& s) {
  auto mins = minimals_of(p, s);
  return mins.empty() ? kNone : mins.front();
}

struct DescentSearch {
  const ChainOfDownSets& c;
  const Bits& e;
  std::size_t depth;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<Element> path;
  std::vector<Element> best;

  // Largest member strictly inside ↓x.
  std::optional<std::size_t> below(Element x) const {
    const Bits& dx = c.host.down_closed(x);
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      if (c.members[i].is_proper_subset_of(dx)) return i;
    }
    return std::nullopt;
  }

  bool run(const Bits& within) {
    if (path.size() > best.size()) best = path;
    if (path.size() == depth) return true;
    if (++nodes > budget) fail(ErrorCode::BudgetExceeded, "descending chain search exceeded " + std::to_string(budget) + " nodes");
    Bits cand = e & within;
    for (auto x = cand.find_first(); x != Bits::npos; x = cand.find_next(x)) {
      auto i = below(static_cast<Element>(x));
      if (!i) continue;
      path.push_back(static_cast<Element>(x));
      if (run(c.members[*i])) return true;
      path.pop_back();
    }
    return false;
  }
};

}  // namespace

ChainOfDownSets ChainOfDownSets::make(Poset host, std::vector<Bits> members, bool increasing) {
  if (members.empty()) fail(ErrorCode::PreconditionViolated, "chain of ideals needs at least one member");
  if (increasing) std::reverse(members.begin(), members.end());
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].size() != host.size()) fail(ErrorCode::ArityMismatch, "chain member has the wrong width");
    if (!is_ideal(host, members[i])) fail(ErrorCode::PreconditionViolated, "chain member " + std::to_string(i) + " is not an ideal");
    if (i > 0 && !members[i].is_proper_subset_of(members[i - 1])) {
      fail(ErrorCode::PreconditionViolated, "chain members " + std::to_string(i - 1) + " and " + std::to_string(i) + " are not strictly nested");
    }
  }
  return ChainOfDownSets{std::move(host), std::move(members)};
}

Bits join_with_ideal(const Poset& p, Element x, const Bits& j) {
  Bits gens(p.size());
  gens.set(x);
  for (auto y = j.find_first(); y != Bits::npos; y = j.find_next(y)) gens.set(join_of(p, x, static_cast<Element>(y)));
  return down_closure(p, gens);
}

Separation is_separating(const ChainOfDownSets& c) {
  const auto& m = c.members;
  if (m.size() < 3) return {};
  const Bits& smallest = m.back();
  for (std::size_t i = 1; i + 1 < m.size(); ++i) {
    for (Element x : minimals_of(c.host, m[0] - m[i])) {
      // {x}⋁J grows with J, so the smallest member is the only candidate.
      if (m[i].is_subset_of(join_with_ideal(c.host, x, smallest))) return {false, i, x};
    }
  }
  return {};
}

Certificate independent_from_separating(const ChainOfDownSets& c) {
  const auto& m = c.members;
  if (m.size() < 2) fail(ErrorCode::PreconditionViolated, "independent_from_separating needs at least two members");
  Separation sep = is_separating(c);
  if (!sep.separating) fail(ErrorCode::PreconditionViolated, "chain is not separating at member " + std::to_string(sep.member));

  Certificate cert;
  cert.kind = CertKind::IndependentSet;
  cert.host = c.host;
  std::size_t cur = 1;
  Element acc = smallest_minimal(c.host, m[0] - m[cur]);
  cert.elements.push_back(acc);
  while (cur + 1 < m.size()) {
    bool stepped = false;
    for (std::size_t next = cur + 1; next < m.size(); ++next) {
      Bits rest = m[cur] - join_with_ideal(c.host, acc, m[next]);
      if (rest.none()) continue;
      // Skipping a member means this level took no step.
      if (next > cur + 1 && !cert.stalled_at) cert.stalled_at = cert.elements.size();
      Element z = smallest_minimal(c.host, rest);
      cert.elements.push_back(z);
      acc = join_of(c.host, acc, z);
      cur = next;
      stepped = true;
      break;
    }
    if (!stepped) {
      if (!cert.stalled_at) cert.stalled_at = cert.elements.size();
      break;
    }
  }
  cert.param = cert.elements.size();
  cert.evidence = recheck(cert);
  return cert;
}

Certificate dichotomy_extract(const ChainOfDownSets& c, std::size_t depth) {
  const Poset& p = c.host;
  const auto& m = c.members;
  if (depth == 0) fail(ErrorCode::PreconditionViolated, "depth must be at least 1");
  if (depth + 1 > m.size()) {
    fail(ErrorCode::DepthUnreachable, "chain of " + std::to_string(m.size()) + " members supports depth " + std::to_string(m.size() - 1));
  }
  for (std::size_t s = 0; s + 3 <= m.size(); ++s) {
    ChainOfDownSets suffix{p, std::vector<Bits>(m.begin() + static_cast<std::ptrdiff_t>(s), m.end())};
    if (is_separating(suffix).separating) fail(ErrorCode::PreconditionViolated, "suffix from member " + std::to_string(s) + " is separating");
  }

  Bits e(p.size());
  for (auto x = m[0].find_first(); x != Bits::npos; x = m[0].find_next(x)) {
    const auto el = static_cast<Element>(x);
    if (maximals_of(p, p.down(el)).size() > 1) continue;  // two or more lower covers
    const Bits& dx = p.down_closed(el);
    if (std::any_of(m.begin(), m.end(), [&](const Bits& i) { return i.is_proper_subset_of(dx); })) e.set(x);
  }
  std::size_t first_free = m.size();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if ((m[i] & e).none()) {
      first_free = i;
      break;
    }
  }

  Certificate cert;
  cert.host = p;
  if (first_free + 1 >= m.size()) {
    cert.kind = CertKind::DescendingChain;
    DescentSearch s{c, e, depth, default_search_budget(), 0, {}, {}};
    s.run(m[0]);
    cert.elements = s.best;
    cert.param = cert.elements.size();
    if (cert.elements.size() < depth) cert.stalled_at = cert.elements.size();
    cert.evidence = recheck(cert);
    return cert;
  }

  // Case (ii) on the members below the first E-free one.
  std::vector<Bits> ms(m.begin() + static_cast<std::ptrdiff_t>(first_free), m.end());
  const Bits& smallest = ms.back();
  std::vector<Element> xs;
  std::vector<std::size_t> at;  // at[n] = position of I_{n-1} in ms
  std::size_t cur = 0;
  std::optional<std::size_t> stall;
  for (std::size_t n = 0; n <= depth; ++n) {
    at.push_back(cur);
    Element chosen = kNone;
    std::size_t next = cur;
    for (std::size_t q = cur + 1; q < ms.size() && chosen == kNone; ++q) {
      Bits diff = ms[cur] - ms[q];
      for (auto x = diff.find_first(); x != Bits::npos; x = diff.find_next(x)) {
        if (ms[q].is_subset_of(join_with_ideal(p, static_cast<Element>(x), smallest))) {
          chosen = static_cast<Element>(x);
          next = q;
          break;
        }
      }
    }
    if (chosen == kNone && n == depth) chosen = static_cast<Element>(ms[cur].find_first());
    if (chosen == kNone) {
      stall = n;
      break;
    }
    xs.push_back(chosen);
    cur = next;
  }

  std::vector<Element> ys;
  if (!xs.empty()) ys.push_back(xs[0]);
  for (std::size_t n = 1; n < xs.size() && !stall; ++n) {
    const Bits& prev = ms[at[n]];
    Element total = ys[0];
    for (std::size_t i = 1; i < n; ++i) total = join_of(p, total, ys[i]);
    Element z = kNone;
    for (auto u = prev.find_first(); u != Bits::npos; u = prev.find_next(u)) {
      if (!p.leq(static_cast<Element>(u), total)) {
        z = static_cast<Element>(u);
        break;
      }
    }
    if (z == kNone) {
      stall = n;
      break;
    }
    Element y = join_of(p, xs[n], z);
    for (std::size_t j = 0; j + 2 <= n; ++j) {
      Element s = ys[j + 1];
      for (std::size_t i = j + 2; i < n; ++i) s = join_of(p, s, ys[i]);
      Element t = kNone;
      for (auto u = prev.find_first(); u != Bits::npos; u = prev.find_next(u)) {
        if (p.leq(s, join_of(p, xs[j], static_cast<Element>(u)))) {
          t = static_cast<Element>(u);
          break;
        }
      }
      if (t == kNone) {
        stall = n;
        break;
      }
      y = join_of(p, y, t);
    }
    if (stall) break;
    ys.push_back(y);
  }

  cert.kind = CertKind::GridMap;
  const std::size_t reached = ys.empty() ? 0 : ys.size() - 1;
  auto coords = grid_coords(reached);
  std::vector<Element> table;
  table.reserve(coords.size());
  for (auto [i, j] : coords) table.push_back(join_of(p, ys[i], ys[j]));
  cert.map = make_witness(omega_star_grid(reached), p, std::move(table));
  cert.elements = ys;
  cert.param = reached;
  if (reached < depth) cert.stalled_at = stall.value_or(reached);
  cert.evidence = recheck(cert);
  return cert;
}

BadAntichainReport check_bad_antichain(const Poset& p, const std::vector<Element>& a, std::size_t k) {
  if (!is_antichain(p, a)) fail(ErrorCode::NotAntichain, "check_bad_antichain needs an antichain");
  BadAntichainReport r;
  Bits above = up_closure(p, bits_of(p.size(), a));
  for (Element x = 0; x < p.size(); ++x) {
    if (above.test(x)) continue;
    std::size_t exceptions = 0;
    for (Element y : a) exceptions += p.less(x, y) ? 0 : 1;
    r.max_exceptions = std::max(r.max_exceptions, exceptions);
    const bool tail = !a.empty() && p.less(x, a.back());
    if (exceptions > k || !tail) {
      if (exceptions > k) r.condition1 = false;
      if (!tail) r.condition1_cofinal = false;
      if (!r.first_failure) r.first_failure = x;
    }
  }
  Bits remainder = ~above;
  r.remainder_size = remainder.count();
  r.remainder_width = r.remainder_size == 0 ? 0 : maximum_antichain(induced(p, members(remainder))).size();
  return r;
}

}  // namespace oc
