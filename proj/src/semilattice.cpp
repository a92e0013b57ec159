#include "ordercraft/semilattice.hpp"

#include <algorithm>
#include <bit>

#include "ordercraft/families.hpp"
#include "ordercraft/segments.hpp"

namespace oc {

MapFlags compute_flags(const Poset& source, const Poset& target, const std::vector<Element>& table) {
  const std::size_t n = source.size();
  if (table.size() != n) fail(ErrorCode::ArityMismatch, "map table has " + std::to_string(table.size()) + " entries for " + std::to_string(n) + " elements");
  for (Element v : table) {
    if (v >= target.size()) fail(ErrorCode::IndexOutOfRange, "map value " + std::to_string(v) + " outside target");
  }
  MapFlags f;
  Bits image(target.size());
  for (Element v : table) image.set(v);
  f.injective = image.count() == n;
  f.surjective = image.all();
  f.order_preserving = true;
  f.order_embedding = true;
  f.join_preserving = true;
  f.meet_preserving = true;
  bool source_lattice = true;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      bool s = source.leq(x, y), t = target.leq(table[x], table[y]);
      if (s && !t) f.order_preserving = false;
      if (s != t) f.order_embedding = false;
    }
    for (Element y = x + 1; y < n; ++y) {
      auto js = source.join(x, y);
      if (js) {
        auto jt = target.join(table[x], table[y]);
        if (!jt || *jt != table[*js]) f.join_preserving = false;
      } else {
        source_lattice = false;
      }
      auto ms = source.meet(x, y);
      if (ms) {
        auto mt = target.meet(table[x], table[y]);
        if (!mt || *mt != table[*ms]) f.meet_preserving = false;
      } else {
        source_lattice = false;
      }
    }
  }
  f.lattice_hom = f.join_preserving && f.meet_preserving && source_lattice && n > 0;
  return f;
}

MapWitness make_witness(Poset source, Poset target, std::vector<Element> table) {
  MapFlags flags = compute_flags(source, target, table);
  return MapWitness{std::move(source), std::move(target), std::move(table), flags};
}

bool reverify(const MapWitness& w) { return compute_flags(w.source, w.target, w.table) == w.certified; }

MapWitness compose(const MapWitness& first, const MapWitness& second) {
  if (first.target.size() != second.source.size()) fail(ErrorCode::ArityMismatch, "cannot compose maps with mismatched middle poset");
  std::vector<Element> table(first.table.size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = second.table[first.table[i]];
  return make_witness(first.source, second.target, std::move(table));
}

OpTable join_table(const Poset& p) {
  const std::size_t n = p.size();
  OpTable t(n * n, kNone);
  for (Element x = 0; x < n; ++x) {
    t[x * n + x] = x;
    for (Element y = x + 1; y < n; ++y) {
      auto j = p.join(x, y);
      t[x * n + y] = t[y * n + x] = j ? *j : kNone;
    }
  }
  return t;
}

OpTable meet_table(const Poset& p) {
  const std::size_t n = p.size();
  OpTable t(n * n, kNone);
  for (Element x = 0; x < n; ++x) {
    t[x * n + x] = x;
    for (Element y = x + 1; y < n; ++y) {
      auto m = p.meet(x, y);
      t[x * n + y] = t[y * n + x] = m ? *m : kNone;
    }
  }
  return t;
}

bool is_join_semilattice(const Poset& p) {
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y = x + 1; y < p.size(); ++y) {
      if (!p.join(x, y)) return false;
    }
  }
  return true;
}

bool is_meet_semilattice(const Poset& p) {
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y = x + 1; y < p.size(); ++y) {
      if (!p.meet(x, y)) return false;
    }
  }
  return true;
}

bool is_lattice(const Poset& p) { return p.size() > 0 && is_join_semilattice(p) && is_meet_semilattice(p); }

StructureReport structure_report(const Poset& p) {
  StructureReport r;
  const std::size_t n = p.size();
  OpTable jt = join_table(p), mt = meet_table(p);
  r.is_join_semilattice = std::find(jt.begin(), jt.end(), kNone) == jt.end();
  r.is_meet_semilattice = std::find(mt.begin(), mt.end(), kNone) == mt.end();
  r.is_lattice = n > 0 && r.is_join_semilattice && r.is_meet_semilattice;
  if (r.is_lattice) {
    r.is_distributive = true;
    r.is_modular = true;
    for (std::size_t x = 0; x < n && (r.is_distributive || r.is_modular); ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          Element lhs = mt[x * n + jt[y * n + z]];
          Element rhs = jt[mt[x * n + y] * n + mt[x * n + z]];
          if (lhs != rhs) r.is_distributive = false;
          if (p.leq(static_cast<Element>(x), static_cast<Element>(z)) &&
              jt[x * n + mt[y * n + z]] != mt[jt[x * n + y] * n + z]) {
            r.is_modular = false;
          }
        }
      }
    }
  }
  if (r.is_join_semilattice) r.join_table = std::move(jt);
  if (r.is_meet_semilattice) r.meet_table = std::move(mt);
  return r;
}

bool is_distributive_lattice(const Poset& p) {
  if (!is_lattice(p)) return false;
  Poset irr = induced(p, join_irreducibles(p));
  try {
    return enumerate_downsets(irr, p.size() + 1).sets.size() == p.size();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BudgetExceeded) return false;
    throw;
  }
}

std::optional<Element> join_all(const Poset& p, const std::vector<Element>& xs) {
  if (xs.empty()) return p.least();
  Element acc = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) {
    auto j = p.join(acc, xs[i]);
    if (!j) return std::nullopt;
    acc = *j;
  }
  return acc;
}

std::optional<Element> meet_all(const Poset& p, const std::vector<Element>& xs) {
  if (xs.empty()) return p.greatest();
  Element acc = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) {
    auto m = p.meet(acc, xs[i]);
    if (!m) return std::nullopt;
    acc = *m;
  }
  return acc;
}

namespace {

Element require_join_semilattice_with_least(const Poset& p) {
  if (!is_join_semilattice(p)) fail(ErrorCode::NotJoinSemilattice, "poset is not a join-semilattice");
  auto bottom = p.least();
  if (!bottom) fail(ErrorCode::NoLeastElement, "poset has no least element");
  return *bottom;
}

Element join_or_fail(const Poset& p, Element x, Element y) {
  auto j = p.join(x, y);
  if (!j) fail(ErrorCode::NotJoinSemilattice, "join of " + std::to_string(x) + " and " + std::to_string(y) + " is missing");
  return *j;
}

}  // namespace

// In a finite join-semilattice every element strictly below x lies below one of
// its lower covers, so x is a binary join of smaller elements exactly when it
// has at least two lower covers.
std::vector<Element> join_irreducibles(const Poset& p) {
  Element bottom = require_join_semilattice_with_least(p);
  std::vector<Element> out;
  for (Element x = 0; x < p.size(); ++x) {
    if (x != bottom && maximals_of(p, p.down(x)).size() == 1) out.push_back(x);
  }
  return out;
}

// x is prime exactly when the join of everything outside the up-set of x stays
// off x.
std::vector<Element> join_primes(const Poset& p) {
  Element bottom = require_join_semilattice_with_least(p);
  std::vector<Element> out;
  for (Element x = 0; x < p.size(); ++x) {
    if (x == bottom) continue;
    Element acc = bottom;
    for (Element y = 0; y < p.size(); ++y) {
      if (!p.leq(x, y)) acc = join_or_fail(p, acc, y);
    }
    if (!p.leq(x, acc)) out.push_back(x);
  }
  return out;
}

bool is_independent(const Poset& p, const std::vector<Element>& xs) {
  const std::size_t k = xs.size();
  if (k > 24) fail(ErrorCode::BudgetExceeded, "exhaustive independence check limited to 24 elements");
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Element> others;
    for (std::size_t j = 0; j < k; ++j) {
      if (j != i) others.push_back(xs[j]);
    }
    const std::size_t subsets = std::size_t{1} << others.size();
    std::vector<Element> joins(subsets, kNone);
    for (std::size_t mask = 1; mask < subsets; ++mask) {
      std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
      std::size_t rest = mask & (mask - 1);
      joins[mask] = rest == 0 ? others[low] : join_or_fail(p, joins[rest], others[low]);
      if (p.leq(xs[i], joins[mask])) return false;
    }
  }
  return true;
}

namespace {

struct IndependentSearch {
  const Poset& p;
  std::size_t k;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<Element> chosen;
  std::vector<Element> rest;  // rest[i]: join of the chosen elements other than chosen[i]
  Element total = kNone;      // join of all chosen

  bool run(Element start) {
    if (chosen.size() == k) return true;
    if (++nodes > budget) fail(ErrorCode::BudgetExceeded, "independent-set search exceeded " + std::to_string(budget) + " nodes");
    for (Element y = start; y + (k - chosen.size()) <= p.size(); ++y) {
      if (total != kNone && p.leq(y, total)) continue;
      std::vector<Element> next_rest(rest.size());
      bool ok = true;
      for (std::size_t i = 0; i < chosen.size() && ok; ++i) {
        next_rest[i] = rest[i] == kNone ? y : join_or_fail(p, rest[i], y);
        if (p.leq(chosen[i], next_rest[i])) ok = false;
      }
      if (!ok) continue;
      auto saved_rest = rest;
      Element saved_total = total;
      next_rest.push_back(total);
      rest = std::move(next_rest);
      total = total == kNone ? y : join_or_fail(p, total, y);
      chosen.push_back(y);
      if (run(y + 1)) return true;
      chosen.pop_back();
      rest = std::move(saved_rest);
      total = saved_total;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Element>> find_independent_set(const Poset& p, std::size_t k, SearchOptions opts) {
  if (k == 0) fail(ErrorCode::PreconditionViolated, "independence target k must be >= 1");
  if (!is_join_semilattice(p)) fail(ErrorCode::NotJoinSemilattice, "find_independent_set needs a join-semilattice");
  IndependentSearch s{p, k, opts.budget ? opts.budget : default_search_budget()};
  if (!s.run(0)) return std::nullopt;
  if (!is_independent(p, s.chosen)) fail(ErrorCode::PreconditionViolated, "search returned a dependent set");
  return s.chosen;
}

Bits subsemilattice_generated(const Poset& p, const Bits& s, Ops ops) {
  Bits in = s;
  std::vector<Element> list = members(s);
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      auto add = [&](std::optional<Element> v, const char* what) {
        if (!v) fail(ErrorCode::StructureMismatch, std::string(what) + " of " + std::to_string(list[i]) + " and " + std::to_string(list[j]) + " is missing");
        if (!in.test(*v)) {
          in.set(*v);
          list.push_back(*v);
        }
      };
      if (ops != Ops::Meet) add(p.join(list[i], list[j]), "join");
      if (ops != Ops::Join) add(p.meet(list[i], list[j]), "meet");
    }
  }
  return in;
}

PhiQuotient phi_quotient(const Poset& t, const std::vector<Element>& l) {
  if (l.size() < 2) fail(ErrorCode::PreconditionViolated, "phi_quotient needs at least two generators");
  if (l.size() > 12) fail(ErrorCode::UnsupportedParams, "phi_quotient supports at most 12 generators");
  if (!is_lattice(t)) fail(ErrorCode::NotALattice, "phi_quotient needs a lattice");
  if (!is_independent(t, l)) fail(ErrorCode::NotIndependent, "generators are not independent");
  if (!is_distributive_lattice(t)) fail(ErrorCode::NotDistributive, "phi_quotient needs a distributive lattice");
  PhiQuotient out;
  out.sublattice = members(subsemilattice_generated(t, bits_of(t.size(), l), Ops::Both));
  Poset sub = induced(t, out.sublattice);
  std::vector<Element> table(out.sublattice.size());
  for (std::size_t x = 0; x < out.sublattice.size(); ++x) {
    Element mask = 0;
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (t.leq(l[i], out.sublattice[x])) mask |= Element{1} << i;
    }
    table[x] = mask;
  }
  for (Element g : l) {
    out.generators.push_back(static_cast<Element>(std::lower_bound(out.sublattice.begin(), out.sublattice.end(), g) - out.sublattice.begin()));
  }
  auto irr = join_irreducibles(sub);
  out.generators_join_irreducible = std::all_of(out.generators.begin(), out.generators.end(), [&](Element g) {
    return std::binary_search(irr.begin(), irr.end(), g);
  });
  out.phi = make_witness(std::move(sub), finite_powerset(l.size()), std::move(table));
  if (!out.phi.certified.lattice_hom) fail(ErrorCode::NotLatticeHom, "quotient map is not a lattice homomorphism");
  if (!out.phi.certified.surjective) fail(ErrorCode::NotSurjective, "quotient map is not onto the powerset");
  return out;
}

}  // namespace oc
