#include "ordercraft/segments.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ordercraft/semilattice.hpp"

namespace oc {

Bits down_closure(const Poset& p, const Bits& a) {
  Bits out = a;
  for (auto x = a.find_first(); x != Bits::npos; x = a.find_next(x)) out |= p.down(static_cast<Element>(x));
  return out;
}

Bits down_closure(const Poset& p, const std::vector<Element>& a) {
  return down_closure(p, bits_of(p.size(), a));
}

Bits up_closure(const Poset& p, const Bits& a) {
  Bits out = a;
  for (auto x = a.find_first(); x != Bits::npos; x = a.find_next(x)) out |= p.up(static_cast<Element>(x));
  return out;
}

bool is_downset(const Poset& p, const Bits& s) {
  for (auto x = s.find_first(); x != Bits::npos; x = s.find_next(x)) {
    if (!p.down(static_cast<Element>(x)).is_subset_of(s)) return false;
  }
  return true;
}

bool is_up_directed(const Poset& p, const Bits& s) {
  for (auto a = s.find_first(); a != Bits::npos; a = s.find_next(a)) {
    for (auto b = s.find_next(a); b != Bits::npos; b = s.find_next(b)) {
      Bits common = p.up_closed(static_cast<Element>(a)) & p.up_closed(static_cast<Element>(b)) & s;
      if (common.none()) return false;
    }
  }
  return true;
}

bool is_ideal(const Poset& p, const Bits& s) {
  return s.any() && is_downset(p, s) && is_up_directed(p, s);
}

bool canonical_less(const Bits& a, const Bits& b) {
  const auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  auto x = a.find_first(), y = b.find_first();
  while (x != Bits::npos && y != Bits::npos) {
    if (x != y) return x < y;
    x = a.find_next(x);
    y = b.find_next(y);
  }
  return false;
}

void sort_canonical(std::vector<Bits>& sets) { std::sort(sets.begin(), sets.end(), canonical_less); }

std::string set_label(const Poset& host, const Bits& s) {
  std::string out = "{";
  bool first = true;
  for (auto x = s.find_first(); x != Bits::npos; x = s.find_next(x)) {
    if (!first) out += ",";
    out += host.label(static_cast<Element>(x));
    first = false;
  }
  return out + "}";
}

namespace {

struct DownsetEnumerator {
  const Poset& p;
  const std::vector<Element>& order;
  std::uint64_t cap;
  Bits current;
  std::vector<Bits> out;

  void run(std::size_t k) {
    if (k == order.size()) {
      if (out.size() >= cap) fail(ErrorCode::BudgetExceeded, "more than " + std::to_string(cap) + " downsets");
      out.push_back(current);
      return;
    }
    Element e = order[k];
    run(k + 1);
    if (p.down(e).is_subset_of(current)) {
      current.set(e);
      run(k + 1);
      current.reset(e);
    }
  }
};

}  // namespace

DownSetFamily enumerate_downsets(const Poset& p, std::uint64_t cap) {
  DownsetEnumerator en{p, p.linear_extension(), cap, Bits(p.size()), {}};
  en.run(0);
  sort_canonical(en.out);
  return DownSetFamily{p, std::move(en.out), FamilyRole::All};
}

DownSetFamily enumerate_ideals(const Poset& p, std::uint64_t cap) {
  DownSetFamily all = enumerate_downsets(p, cap);
  std::vector<Bits> ideals;
  for (auto& s : all.sets) {
    if (s.any() && is_up_directed(p, s)) ideals.push_back(s);
  }
  return DownSetFamily{p, std::move(ideals), FamilyRole::Ideals};
}

Poset inclusion_poset(const Poset& host, const std::vector<Bits>& sets) {
  const std::size_t m = sets.size();
  std::vector<Bits> down(m, Bits(m));
  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      if (i != j && sets[i].is_proper_subset_of(sets[j])) down[j].set(i);
    }
    labels.push_back(set_label(host, sets[j]));
  }
  return Poset::from_down_sets(std::move(down), std::move(labels), false);
}

DownsetLattice downset_lattice_with_sets(const Poset& p, std::size_t cap) {
  DownSetFamily fam = enumerate_downsets(p, cap);
  DownsetLattice out{inclusion_poset(p, fam.sets), std::move(fam.sets)};
  // Union and intersection stay inside the family, so the inclusion order is a
  // distributive lattice; spot-checked in full on small results.
  if (out.sets.size() <= 512) {
    std::set<Bits> known(out.sets.begin(), out.sets.end());
    for (std::size_t i = 0; i < out.sets.size(); ++i) {
      for (std::size_t j = i + 1; j < out.sets.size(); ++j) {
        if (!known.count(out.sets[i] | out.sets[j]) || !known.count(out.sets[i] & out.sets[j])) {
          fail(ErrorCode::NotDistributive, "downset family not closed under union and intersection");
        }
      }
    }
  }
  return out;
}

Poset downset_lattice(const Poset& p, std::size_t cap) { return downset_lattice_with_sets(p, cap).lattice; }

DownsetLattice family_union_lattice(const DownSetFamily& f, bool include_empty, std::size_t cap) {
  if (f.sets.empty()) fail(ErrorCode::PreconditionViolated, "family_union_lattice needs a nonempty family");
  std::set<Bits> seen;
  std::vector<Bits> all;
  auto add = [&](const Bits& s) {
    if (seen.insert(s).second) {
      if (all.size() >= cap) fail(ErrorCode::BudgetExceeded, "union closure exceeds " + std::to_string(cap) + " sets");
      all.push_back(s);
    }
  };
  if (include_empty) add(Bits(f.host.size()));
  for (auto& s : f.sets) add(s);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) add(all[i] | all[j]);
  }
  sort_canonical(all);
  return DownsetLattice{inclusion_poset(f.host, all), std::move(all)};
}

MeetIrreducibles completely_meet_irreducibles(const Poset& lattice) {
  if (!is_lattice(lattice)) fail(ErrorCode::NotALattice, "completely_meet_irreducibles needs a lattice");
  MeetIrreducibles out;
  for (Element x = 0; x < lattice.size(); ++x) {
    auto covers = minimals_of(lattice, lattice.up(x));
    if (covers.size() == 1) {
      out.elements.push_back(x);
      out.successor.push_back(covers.front());
    }
  }
  return out;
}

bool separates(const Poset& p, const DownSetFamily& q) {
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y = 0; y < p.size(); ++y) {
      if (p.leq(x, y)) continue;
      bool found = std::any_of(q.sets.begin(), q.sets.end(), [&](const Bits& j) { return !j.test(x) && j.test(y); });
      if (!found) return false;
    }
  }
  return true;
}

MapWitness representation_map(const Poset& p, const DownSetFamily& q) {
  Poset qp = inclusion_poset(p, q.sets);
  DownsetLattice target = downset_lattice_with_sets(qp);
  std::map<Bits, Element> where;
  for (Element i = 0; i < target.sets.size(); ++i) where.emplace(target.sets[i], i);
  std::vector<Element> table(p.size());
  for (Element x = 0; x < p.size(); ++x) {
    Bits image(q.sets.size());
    for (std::size_t j = 0; j < q.sets.size(); ++j) {
      if (!q.sets[j].test(x)) image.set(j);
    }
    table[x] = where.at(image);
  }
  return make_witness(p, std::move(target.lattice), std::move(table));
}

// The ideals of a finite P are identified with their images in I(P); an ideal
// counts as completely meet-irreducible when it has a unique upper cover there.
std::vector<Bits> phi_triangle(const Poset& p, Element x, std::size_t cap) {
  if (x >= p.size()) fail(ErrorCode::IndexOutOfRange, "element " + std::to_string(x));
  DownsetLattice l = downset_lattice_with_sets(p, cap);
  MeetIrreducibles cmi = completely_meet_irreducibles(l.lattice);
  std::vector<Bits> out;
  for (Element e : cmi.elements) {
    const Bits& s = l.sets[e];
    if (!s.test(x) && is_ideal(p, s)) out.push_back(s);
  }
  sort_canonical(out);
  return out;
}

}  // namespace oc
