#include <algorithm>

#include "ordercraft/families.hpp"
#include "ordercraft/segments.hpp"
#include "ordercraft/semilattice.hpp"

namespace oc {

namespace {

Element meet_or_fail(const Poset& p, Element x, Element y) {
  auto m = p.meet(x, y);
  if (!m) fail(ErrorCode::StructureMismatch, "meet of " + std::to_string(x) + " and " + std::to_string(y) + " is missing");
  return *m;
}

Element join_or_fail(const Poset& p, Element x, Element y) {
  auto j = p.join(x, y);
  if (!j) fail(ErrorCode::StructureMismatch, "join of " + std::to_string(x) + " and " + std::to_string(y) + " is missing");
  return *j;
}

}  // namespace

DeltaMapReport check_delta_map(std::size_t n, const Poset& p, const std::vector<Element>& table) {
  Poset dom = delta(n);
  if (table.size() != dom.size()) fail(ErrorCode::ArityMismatch, "table does not match delta(" + std::to_string(n) + ")");
  for (Element v : table) {
    if (v >= p.size()) fail(ErrorCode::IndexOutOfRange, "map value outside target");
  }
  const auto N = static_cast<std::uint32_t>(n);
  auto f = [&](std::uint32_t i, std::uint32_t j) { return table[delta_index(n, i, j)]; };

  DeltaMapReport r;
  r.base = true;
  for (std::uint32_t i = 0; i <= N; ++i) {
    for (std::uint32_t j = i + 1; j <= N; ++j) {
      if (f(i, j) != meet_or_fail(p, f(i, kOmega), f(j, kOmega))) r.base = false;
    }
  }
  if (!r.base) fail(ErrorCode::BaseHypothesisViolated, "f(i,j) differs from f(i,w) meet f(j,w)");

  bool meet_ok = true, order_ok = true;
  for (Element x = 0; x < dom.size(); ++x) {
    for (Element y = 0; y < dom.size(); ++y) {
      if (dom.leq(x, y) && !p.leq(table[x], table[y])) order_ok = false;
      if (y > x && table[*dom.meet(x, y)] != meet_or_fail(p, table[x], table[y])) meet_ok = false;
    }
  }
  r.cond[0] = meet_ok;
  r.cond[1] = order_ok;
  bool c3 = true, c4 = true, c5 = true, c6 = true;
  for (std::uint32_t i = 0; i <= N; ++i) {
    for (std::uint32_t j = i + 1; j <= N; ++j) {
      for (std::uint32_t k = j + 1; k <= N; ++k) {
        c3 = c3 && p.leq(f(i, j), f(k, kOmega));
        c4 = c4 && p.leq(f(i, j), f(j, k));
        c5 = c5 && p.leq(f(i, j), f(i, k));
        c6 = c6 && f(i, j) == meet_or_fail(p, f(i, k), f(j, k));
      }
    }
  }
  r.cond[2] = c3;
  r.cond[3] = c4;
  r.cond[4] = c5;
  r.cond[5] = c6;

  // (a) and (b) also range over k = ω; the truncation has no finite witness
  // above j = n otherwise.
  r.a = r.b = true;
  for (std::uint32_t i = 0; i <= N; ++i) {
    for (std::uint32_t j = i + 1; j <= N; ++j) {
      for (std::uint32_t k = j + 1; k <= N + 1; ++k) {
        std::uint32_t kk = k == N + 1 ? kOmega : k;
        r.a = r.a && p.less(f(i, j), f(j, kk));
        r.b = r.b && p.less(f(i, j), f(i, kk));
      }
    }
  }
  Bits image(p.size());
  for (Element v : table) image.set(v);
  r.injective = image.count() == table.size();
  r.conditions_agree = std::all_of(r.cond.begin(), r.cond.end(), [&](bool c) { return c == r.cond[0]; });
  r.injectivity_criterion_agrees = !r.cond[0] || (r.injective == (r.a && r.b));
  return r;
}

Poset nonempty_downset_lattice(const Poset& p, std::vector<Bits>* sets) {
  DownSetFamily fam = enumerate_downsets(p);
  std::vector<Bits> nonempty;
  for (auto& s : fam.sets) {
    if (s.any()) nonempty.push_back(s);
  }
  Poset out = inclusion_poset(p, nonempty);
  if (sets) *sets = std::move(nonempty);
  return out;
}

FVee f_vee(const MapWitness& f) {
  if (!f.certified.meet_preserving) fail(ErrorCode::NotMeetPreserving, "f_vee needs a meet-preserving map");
  const Poset& p = f.source;
  const Poset& t = f.target;
  if (!is_lattice(t)) fail(ErrorCode::NotALattice, "f_vee target must be a lattice");
  if (!is_distributive_lattice(t)) fail(ErrorCode::NotDistributive, "f_vee target must be distributive");

  FVee out;
  Poset dom = nonempty_downset_lattice(p, &out.domain_sets);
  std::vector<Element> table;
  table.reserve(out.domain_sets.size());
  for (auto& a : out.domain_sets) {
    Element acc = kNone;
    for (Element x : maximals_of(p, a)) acc = acc == kNone ? f.table[x] : join_or_fail(t, acc, f.table[x]);
    table.push_back(acc);
  }
  out.criterion1 = f.certified.injective;
  out.criterion2 = true;
  for (Element x = 0; x < p.size(); ++x) {
    Element acc = kNone;
    for (Element y = 0; y < p.size(); ++y) {
      if (y != x && t.leq(f.table[y], f.table[x])) acc = acc == kNone ? f.table[y] : join_or_fail(t, acc, f.table[y]);
    }
    if (acc == f.table[x]) out.criterion2 = false;
  }
  out.witness = make_witness(std::move(dom), t, std::move(table));
  out.table_injective = out.witness.certified.injective;
  return out;
}

MapWitness delta_from_hom(const Poset& t, const MapWitness& phi) {
  if (phi.source.size() != t.size()) fail(ErrorCode::ArityMismatch, "phi source differs from T");
  if (!phi.certified.lattice_hom) fail(ErrorCode::NotLatticeHom, "phi is not a lattice homomorphism");
  if (!phi.certified.surjective) fail(ErrorCode::NotSurjective, "phi is not surjective");
  const std::size_t size = phi.target.size();
  std::size_t n = 0;
  while ((std::size_t{1} << n) < size) ++n;
  if ((std::size_t{1} << n) != size || n < 2) fail(ErrorCode::PreconditionViolated, "phi target must be a powerset B_n with n >= 2");
  for (Element x = 0; x < size; ++x) {
    for (Element y = 0; y < size; ++y) {
      if (phi.target.leq(x, y) != ((x & y) == x)) fail(ErrorCode::PreconditionViolated, "phi target is not indexed by bitmasks");
    }
  }

  auto first_with = [&](Element mask) {
    for (Element x = 0; x < t.size(); ++x) {
      if (phi.table[x] == mask) return x;
    }
    fail(ErrorCode::NotSurjective, "no preimage for mask " + std::to_string(mask));
  };
  std::vector<Element> col(n);
  const Element b0 = first_with(0);
  for (std::size_t k = 0; k < n; ++k) {
    const Element ak = first_with(Element{1} << k);
    if (k < 2) {
      col[k] = join_or_fail(t, ak, b0);
      continue;
    }
    Element bk = kNone;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        Element m = meet_or_fail(t, col[i], col[j]);
        bk = bk == kNone ? m : join_or_fail(t, bk, m);
      }
    }
    col[k] = join_or_fail(t, bk, ak);
  }

  const std::size_t dn = n - 1;
  auto coords = delta_coords(dn);
  std::vector<Element> table(coords.size());
  for (std::size_t e = 0; e < coords.size(); ++e) {
    auto [i, j] = coords[e];
    table[e] = j == kOmega ? col[i] : meet_or_fail(t, col[i], col[j]);
  }
  DeltaMapReport rep = check_delta_map(dn, t, table);
  if (!rep.cond[0]) fail(ErrorCode::ConstructionStalled, "constructed map is not meet-preserving");
  for (std::size_t k = 0; k < n; ++k) {
    if (phi.table[col[k]] != (Element{1} << k)) fail(ErrorCode::ConstructionStalled, "phi of column " + std::to_string(k) + " is not a singleton");
  }
  return make_witness(delta(dn), t, std::move(table));
}

}  // namespace oc
