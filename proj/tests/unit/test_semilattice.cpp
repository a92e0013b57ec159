#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "ordercraft/families.hpp"
#include "ordercraft/segments.hpp"
#include "ordercraft/semilattice.hpp"
#include "ordercraft/theoremlab.hpp"

using namespace oc;

namespace {

bool triples_distributive(const Poset& l) {
  for (Element x = 0; x < l.size(); ++x) {
    for (Element y = 0; y < l.size(); ++y) {
      for (Element z = 0; z < l.size(); ++z) {
        if (oracle::glb(l, x, oracle::lub(l, y, z)) != oracle::lub(l, oracle::glb(l, x, y), oracle::glb(l, x, z)))
          return false;
      }
    }
  }
  return true;
}

bool triples_modular(const Poset& l) {
  for (Element x = 0; x < l.size(); ++x) {
    for (Element y = 0; y < l.size(); ++y) {
      for (Element z = 0; z < l.size(); ++z) {
        if (l.leq(x, z) && oracle::lub(l, x, oracle::glb(l, y, z)) != oracle::glb(l, oracle::lub(l, x, y), z))
          return false;
      }
    }
  }
  return true;
}

std::vector<Element> irreducibles_oracle(const Poset& p, Element bottom) {
  std::vector<Element> out;
  for (Element x = 0; x < p.size(); ++x) {
    bool irr = x != bottom;
    for (Element a = 0; a < p.size() && irr; ++a) {
      for (Element b = 0; b < p.size() && irr; ++b) {
        if (a != x && b != x && oracle::lub(p, a, b) == x) irr = false;
      }
    }
    if (irr) out.push_back(x);
  }
  return out;
}

std::vector<Element> primes_oracle(const Poset& p, Element bottom) {
  std::vector<Element> out;
  for (Element x = 0; x < p.size(); ++x) {
    bool prime = x != bottom;
    for (Element a = 0; a < p.size() && prime; ++a) {
      for (Element b = 0; b < p.size() && prime; ++b) {
        if (p.leq(x, oracle::lub(p, a, b)) && !p.leq(x, a) && !p.leq(x, b)) prime = false;
      }
    }
    if (prime) out.push_back(x);
  }
  return out;
}

// Lattice index of each principal downset of p inside downset_lattice(p).
std::vector<Element> principal_positions(const Poset& p, const DownsetLattice& l) {
  std::vector<Element> out;
  for (Element x = 0; x < p.size(); ++x) {
    auto it = std::find(l.sets.begin(), l.sets.end(), p.down_closed(x));
    REQUIRE(it != l.sets.end());
    out.push_back(static_cast<Element>(it - l.sets.begin()));
  }
  return out;
}

// x -> ↓x ∩ M as a bitmask over M; always meet-preserving on a meet-semilattice.
MapWitness trace_map(const Poset& p, const std::vector<Element>& m) {
  std::vector<Element> table;
  for (Element x = 0; x < p.size(); ++x) {
    Element mask = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (p.leq(m[i], x)) mask |= Element{1} << i;
    }
    table.push_back(mask);
  }
  return make_witness(p, finite_powerset(m.size()), table);
}

Poset pentagon() { return l_alpha(2); }

}  // namespace

TEST_CASE("structure reports") {
  auto b3 = structure_report(finite_powerset(3));
  CHECK(b3.is_lattice);
  CHECK(b3.is_distributive);
  CHECK(b3.is_modular);
  auto pent = structure_report(pentagon());
  CHECK(pent.is_lattice);
  CHECK_FALSE(pent.is_modular);
  CHECK_FALSE(pent.is_distributive);
  auto m = structure_report(m5());
  CHECK(m.is_lattice);
  CHECK_FALSE(m.is_modular);
  auto a2 = structure_report(antichain(2));
  CHECK_FALSE(a2.is_join_semilattice);
  CHECK_FALSE(a2.is_meet_semilattice);
  CHECK_FALSE(a2.join_table.has_value());

  std::mt19937_64 g(41);
  int lattices = 0;
  for (int t = 0; t < 300; ++t) {
    Poset p = oracle::random_order(1 + g() % 7, 0.45, g);
    auto r = structure_report(p);
    bool joins = true, meets = true;
    for (Element x = 0; x < p.size(); ++x) {
      for (Element y = 0; y < p.size(); ++y) {
        const Element j = oracle::lub(p, x, y), k = oracle::glb(p, x, y);
        joins = joins && j != kNone;
        meets = meets && k != kNone;
        if (r.join_table) CHECK((*r.join_table)[x * p.size() + y] == j);
        if (r.meet_table) CHECK((*r.meet_table)[x * p.size() + y] == k);
      }
    }
    CHECK(r.is_join_semilattice == joins);
    CHECK(r.is_meet_semilattice == meets);
    CHECK(r.join_table.has_value() == joins);
    CHECK(r.meet_table.has_value() == meets);
    CHECK(r.is_lattice == (joins && meets));
    if (r.is_lattice) {
      ++lattices;
      CHECK(r.is_distributive == triples_distributive(p));
      CHECK(r.is_modular == triples_modular(p));
      CHECK(is_distributive_lattice(p) == r.is_distributive);
    }
  }
  CHECK(lattices > 20);
}

TEST_CASE("join-irreducible and join-prime elements") {
  CHECK(join_irreducibles(finite_powerset(3)) == std::vector<Element>{1, 2, 4});
  CHECK(join_primes(finite_powerset(3)) == std::vector<Element>{1, 2, 4});
  Poset pent = pentagon();
  CHECK(join_irreducibles(pent).size() == 3);
  CHECK(join_primes(pent).size() == 2);
  CHECK_THROWS_AS(join_irreducibles(antichain(2)), Error);
  CHECK_THROWS_AS(join_irreducibles(dual(v_family(2))), Error);

  std::mt19937_64 g(43);
  for (int t = 0; t < 40; ++t) {
    Poset q = oracle::random_order(1 + g() % 6, 0.3, g);
    DownsetLattice l = downset_lattice_with_sets(q);
    const Element bottom = *l.lattice.least();
    auto irr = join_irreducibles(l.lattice);
    CHECK(irr == irreducibles_oracle(l.lattice, bottom));
    CHECK(join_primes(l.lattice) == irr);
    auto principal = principal_positions(q, l);
    std::sort(principal.begin(), principal.end());
    CHECK(irr == principal);
  }
  for (std::uint64_t s = 0; s < 60; ++s) {
    Poset p = random_join_semilattice(2 + s % 9, s);
    const Element bottom = *p.least();
    auto irr = join_irreducibles(p), pr = join_primes(p);
    CHECK(irr == irreducibles_oracle(p, bottom));
    CHECK(pr == primes_oracle(p, bottom));
    CHECK(std::includes(irr.begin(), irr.end(), pr.begin(), pr.end()));
  }
}

TEST_CASE("independent sets") {
  for (std::size_t n = 2; n <= 5; ++n) {
    auto s = find_independent_set(finite_powerset(n), n);
    REQUIRE(s);
    std::vector<Element> singles;
    for (std::size_t i = 0; i < n; ++i) singles.push_back(Element{1} << i);
    CHECK(*s == singles);
    CHECK_FALSE(find_independent_set(finite_powerset(n), n + 1));
  }
  CHECK_FALSE(find_independent_set(chain(5), 2));
  CHECK(find_independent_set(chain(5), 1));

  Poset d2 = delta(2);
  DownsetLattice l = downset_lattice_with_sets(d2);
  auto s = find_independent_set(l.lattice, 3);
  REQUIRE(s);
  std::set<Bits> got;
  for (Element e : *s) got.insert(l.sets[e]);
  std::set<Bits> expect;
  for (std::uint32_t i = 0; i <= 2; ++i) expect.insert(d2.down_closed(delta_index(2, i, kOmega)));
  CHECK(got == expect);
  CHECK_FALSE(find_independent_set(l.lattice, 4));
  CHECK_THROWS_AS(find_independent_set(antichain(3), 2), Error);

  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    Poset p = random_join_semilattice(2 + seed % 9, seed);
    const std::size_t best = oracle::max_independent(p, 4);
    for (std::size_t k = 1; k <= 4; ++k) {
      auto found = find_independent_set(p, k);
      CHECK(found.has_value() == (best >= k));
      if (found) {
        CHECK(found->size() == k);
        CHECK(oracle::independent(p, *found));
      }
    }
    std::vector<Element> xs;
    for (Element x = 0; x < p.size() && xs.size() < 4; ++x) {
      if (seed >> x & 1) xs.push_back(x);
    }
    CHECK(is_independent(p, xs) == oracle::independent(p, xs));
  }
}

TEST_CASE("embedding search") {
  auto w = embedding_search(finite_powerset(2), finite_powerset(3), EmbeddingMode::Join);
  REQUIRE(w);
  CHECK(w->certified.join_preserving);
  CHECK(w->certified.injective);
  CHECK(reverify(*w));
  CHECK_FALSE(embedding_search(pentagon(), finite_powerset(3), EmbeddingMode::Sublattice));
  CHECK_THROWS_AS(embedding_search(antichain(2), finite_powerset(2), EmbeddingMode::Join), Error);
  CHECK_THROWS_AS(embedding_search(chain(2), antichain(3), EmbeddingMode::Sublattice), Error);
  CHECK(embedding_search(chain(3), finite_powerset(2), EmbeddingMode::Sublattice));
  CHECK_FALSE(embedding_search(chain(4), finite_powerset(2), EmbeddingMode::Order));

  // Deterministic first witness.
  auto a = embedding_search(chain(3), finite_powerset(3), EmbeddingMode::Order);
  auto b = embedding_search(chain(3), finite_powerset(3), EmbeddingMode::Order);
  REQUIRE(a);
  REQUIRE(b);
  CHECK(a->table == b->table);

  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    Poset p = random_join_semilattice(2 + seed % 9, seed);
    for (std::size_t k = 1; k <= 3; ++k) {
      const bool indep = find_independent_set(p, k).has_value();
      auto order = embedding_search(finite_powerset(k), p, EmbeddingMode::Order);
      auto join = embedding_search(finite_powerset(k), p, EmbeddingMode::Join);
      CHECK(order.has_value() == indep);
      CHECK(join.has_value() == indep);
      if (order) {
        auto m = oracle::check_map(order->source, order->target, order->table);
        CHECK(m.order_embedding);
        CHECK(reverify(*order));
      }
      if (join) {
        auto m = oracle::check_map(join->source, join->target, join->table);
        CHECK(m.joins);
        CHECK(m.injective);
        CHECK(reverify(*join));
      }
    }
  }
}

TEST_CASE("generated subsemilattices") {
  Poset b3 = finite_powerset(3);
  Bits singles = bits_of(8, {1, 2, 4});
  CHECK(subsemilattice_generated(b3, singles, Ops::Both).count() == 8);
  CHECK(members(subsemilattice_generated(b3, singles, Ops::Join)) == std::vector<Element>{1, 2, 3, 4, 5, 6, 7});
  CHECK(subsemilattice_generated(b3, Bits(8), Ops::Both).none());
  Poset c = chain(6);
  Bits s = bits_of(6, {1, 4});
  CHECK(subsemilattice_generated(c, s, Ops::Both) == s);
  CHECK_THROWS_AS(subsemilattice_generated(antichain(3), bits_of(3, {0, 1}), Ops::Join), Error);

  std::mt19937_64 g(47);
  for (int t = 0; t < 30; ++t) {
    Poset l = downset_lattice(oracle::random_order(1 + g() % 5, 0.3, g));
    Bits start(l.size());
    for (Element x = 0; x < l.size(); ++x) {
      if (g() % 4 == 0) start.set(x);
    }
    for (Ops ops : {Ops::Join, Ops::Meet, Ops::Both}) {
      Bits closed = start;
      for (bool grew = true; grew;) {
        grew = false;
        for (Element x = 0; x < l.size(); ++x) {
          for (Element y = 0; y < l.size(); ++y) {
            if (!closed.test(x) || !closed.test(y)) continue;
            for (Element z : {oracle::lub(l, x, y), oracle::glb(l, x, y)}) {
              const bool wanted = ops == Ops::Both || (ops == Ops::Join) == (z == oracle::lub(l, x, y));
              if (wanted && !closed.test(z)) {
                closed.set(z);
                grew = true;
              }
            }
          }
        }
      }
      CHECK(subsemilattice_generated(l, start, ops) == closed);
    }
  }
}

TEST_CASE("quotient onto a powerset") {
  auto q = phi_quotient(finite_powerset(3), {1, 2, 4});
  CHECK(q.phi.certified.lattice_hom);
  CHECK(q.phi.certified.injective);
  CHECK(q.phi.certified.surjective);
  CHECK(q.generators_join_irreducible);

  Poset d2 = delta(2);
  DownsetLattice l = downset_lattice_with_sets(d2);
  auto pos = principal_positions(d2, l);
  std::vector<Element> gens;
  for (std::uint32_t i = 0; i <= 2; ++i) gens.push_back(pos[delta_index(2, i, kOmega)]);
  auto qd = phi_quotient(l.lattice, gens);
  CHECK(qd.phi.target.size() == 8);
  CHECK(qd.phi.certified.lattice_hom);
  CHECK(qd.phi.certified.surjective);
  CHECK(qd.generators_join_irreducible);
  auto chk = oracle::check_map(qd.phi.source, qd.phi.target, qd.phi.table);
  CHECK(chk.joins);
  CHECK(chk.meets);
  // φ(x) = {a ∈ L : a ≤ x}
  for (Element x = 0; x < qd.sublattice.size(); ++x) {
    Element mask = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (l.lattice.leq(gens[i], qd.sublattice[x])) mask |= Element{1} << i;
    }
    CHECK(qd.phi.table[x] == mask);
  }

  Poset g3 = oc::gamma(3);
  DownsetLattice lg = downset_lattice_with_sets(g3);
  auto pg = principal_positions(g3, lg);
  std::vector<Element> gg;
  for (std::uint32_t i = 0; i <= 3; ++i) gg.push_back(pg[gamma_index(3, i, kOmega)]);
  auto qg = phi_quotient(lg.lattice, gg);
  CHECK(qg.phi.target.size() == 16);
  CHECK(qg.phi.certified.surjective);
  CHECK(qg.phi.certified.lattice_hom);

  CHECK_THROWS_AS(phi_quotient(finite_powerset(3), {1, 3}), Error);
  CHECK_THROWS_AS(phi_quotient(m5(), {1, 2}), Error);
}

TEST_CASE("delta map conditions") {
  const std::size_t n = 3;
  Poset d3 = delta(n);
  DownsetLattice l = downset_lattice_with_sets(d3);
  auto ident = check_delta_map(n, l.lattice, principal_positions(d3, l));
  CHECK(std::all_of(ident.cond.begin(), ident.cond.end(), [](bool c) { return c; }));
  CHECK(ident.a);
  CHECK(ident.b);
  CHECK(ident.injective);

  auto cst = check_delta_map(n, finite_powerset(2), std::vector<Element>(d3.size(), 3));
  CHECK(std::all_of(cst.cond.begin(), cst.cond.end(), [](bool c) { return c; }));
  CHECK_FALSE(cst.a);
  CHECK_FALSE(cst.b);
  CHECK_FALSE(cst.injective);

  // Columns {0,1}, {0,1}, {2} in B_3: f(0,1) = {0,1} is not below f(2,ω).
  std::vector<Element> col{3, 3, 4};
  std::vector<Element> table(delta(2).size());
  for (std::uint32_t i = 0; i <= 2; ++i) {
    table[delta_index(2, i, kOmega)] = col[i];
    for (std::uint32_t j = i + 1; j <= 2; ++j) table[delta_index(2, i, j)] = col[i] & col[j];
  }
  auto bad = check_delta_map(2, finite_powerset(3), table);
  CHECK_FALSE(bad.cond[2]);
  CHECK(bad.conditions_agree);
  CHECK(std::none_of(bad.cond.begin(), bad.cond.end(), [](bool c) { return c; }));

  table[delta_index(2, 0, 1)] = 0;
  CHECK_THROWS_AS(check_delta_map(2, finite_powerset(3), table), Error);

  std::mt19937_64 g(53);
  int true_runs = 0, false_runs = 0;
  for (int t = 0; t < 400; ++t) {
    const std::size_t m = 2 + g() % 3;
    std::vector<Element> cols(m + 1);
    for (auto& c : cols) c = static_cast<Element>(g() % 16);
    std::vector<Element> tb(delta(m).size());
    for (std::uint32_t i = 0; i <= m; ++i) {
      tb[delta_index(m, i, kOmega)] = cols[i];
      for (std::uint32_t j = i + 1; j <= m; ++j) tb[delta_index(m, i, j)] = cols[i] & cols[j];
    }
    auto r = check_delta_map(m, finite_powerset(4), tb);
    CHECK(r.conditions_agree);
    CHECK(r.injectivity_criterion_agrees);
    // Oracle for (i): every meet is preserved.
    auto chk = oracle::check_map(delta(m), finite_powerset(4), tb);
    CHECK(r.cond[0] == chk.meets);
    CHECK(r.injective == chk.injective);
    (r.cond[0] ? true_runs : false_runs)++;
  }
  CHECK(true_runs > 10);
  CHECK(false_runs > 10);
}

TEST_CASE("join extension over nonempty downsets") {
  auto w = make_witness(chain(2), finite_powerset(2), {1, 3});
  auto fv = f_vee(w);
  CHECK(fv.table_injective);
  CHECK(fv.criterion1);
  CHECK(fv.criterion2);
  CHECK(fv.witness.certified.lattice_hom);

  Poset g2 = oc::gamma(2);
  DownsetLattice l = downset_lattice_with_sets(g2);
  auto gv = f_vee(make_witness(g2, l.lattice, principal_positions(g2, l)));
  CHECK(gv.witness.certified.lattice_hom);
  CHECK(gv.witness.certified.injective);

  Poset d2 = delta(2);
  std::vector<Element> all(d2.size());
  std::iota(all.begin(), all.end(), Element{0});
  std::vector<Element> most;
  for (Element x : all) {
    if (x != delta_index(2, 0, kOmega)) most.push_back(x);
  }
  auto collapsed = f_vee(trace_map(d2, most));
  CHECK_FALSE((collapsed.criterion1 && collapsed.criterion2));
  CHECK_FALSE(collapsed.table_injective);

  CHECK_THROWS_AS(f_vee(make_witness(finite_powerset(2), chain(2), {0, 1, 1, 1})), Error);

  std::mt19937_64 g(59);
  int inj = 0, non = 0;
  for (int t = 0; t < 80; ++t) {
    const std::size_t m = 1 + g() % 2;
    Poset p = (t % 2) ? delta(m) : oc::gamma(m);
    std::vector<Element> pick;
    for (Element x = 0; x < p.size(); ++x) {
      if (g() % 3 && pick.size() < 6) pick.push_back(x);
    }
    auto f = trace_map(p, pick);
    REQUIRE(f.certified.meet_preserving);
    auto r = f_vee(f);
    auto chk = oracle::check_map(r.witness.source, r.witness.target, r.witness.table);
    CHECK(chk.joins);
    CHECK(chk.meets);
    CHECK(r.witness.certified.lattice_hom);
    CHECK(r.table_injective == chk.injective);
    const bool criteria = r.criterion1 && r.criterion2;
    CHECK(criteria == chk.injective);
    // f∨(A) is the join of f over A.
    for (std::size_t i = 0; i < r.domain_sets.size(); ++i) {
      Element acc = 0;
      for (Element x : members(r.domain_sets[i])) acc |= f.table[x];
      CHECK(r.witness.table[i] == acc);
    }
    (chk.injective ? inj : non)++;
  }
  CHECK(inj > 5);
  CHECK(non > 5);
}

TEST_CASE("delta map from a homomorphism") {
  auto id = make_witness(finite_powerset(3), finite_powerset(3), {0, 1, 2, 3, 4, 5, 6, 7});
  auto f = delta_from_hom(finite_powerset(3), id);
  CHECK(f.source.size() == delta(2).size());
  for (std::uint32_t i = 0; i <= 2; ++i) CHECK(f.table[delta_index(2, i, kOmega)] == (Element{1} << i));
  CHECK(f.certified.meet_preserving);
  CHECK(check_delta_map(2, f.target, f.table).cond[0]);

  Poset d2 = delta(2);
  DownsetLattice l = downset_lattice_with_sets(d2);
  auto pos = principal_positions(d2, l);
  std::vector<Element> gens;
  for (std::uint32_t i = 0; i <= 2; ++i) gens.push_back(pos[delta_index(2, i, kOmega)]);
  auto q = phi_quotient(l.lattice, gens);
  auto fd = delta_from_hom(q.phi.source, q.phi);
  CHECK(fd.certified.meet_preserving);
  CHECK(oracle::check_map(fd.source, fd.target, fd.table).meets);
  for (std::uint32_t i = 0; i <= 2; ++i) CHECK(q.phi.table[fd.table[delta_index(2, i, kOmega)]] == (Element{1} << i));

  auto two = delta_from_hom(finite_powerset(2), make_witness(finite_powerset(2), finite_powerset(2), {0, 1, 2, 3}));
  CHECK(two.source.size() == delta(1).size());
  CHECK(two.certified.meet_preserving);

  auto not_onto = make_witness(finite_powerset(2), finite_powerset(2), {0, 0, 3, 3});
  CHECK_THROWS_AS(delta_from_hom(finite_powerset(2), not_onto), Error);
}

TEST_CASE("every witness re-verifies") {
  std::mt19937_64 g(61);
  for (int t = 0; t < 40; ++t) {
    Poset a = oracle::random_order(1 + g() % 5, 0.4, g), b = oracle::random_order(1 + g() % 5, 0.4, g);
    std::vector<Element> table(a.size());
    for (auto& v : table) v = static_cast<Element>(g() % b.size());
    auto w = make_witness(a, b, table);
    CHECK(reverify(w));
    auto chk = oracle::check_map(a, b, table);
    CHECK(w.certified.order_preserving == chk.order_preserving);
    CHECK(w.certified.order_embedding == chk.order_embedding);
    CHECK(w.certified.injective == chk.injective);
    MapWitness tampered = w;
    tampered.certified.injective = !tampered.certified.injective;
    CHECK_FALSE(reverify(tampered));
  }
}
