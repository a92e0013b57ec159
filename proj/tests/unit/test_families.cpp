#include <doctest.h>

#include "oracles.hpp"
#include "ordercraft/families.hpp"
#include "ordercraft/io.hpp"
#include "ordercraft/segments.hpp"
#include "ordercraft/semilattice.hpp"

using namespace oc;

namespace {

OrdinalCNF cnf(std::vector<std::uint64_t> c) { return OrdinalCNF{std::move(c)}; }

// ω-aware comparison of second coordinates.
bool j_leq(std::uint32_t a, std::uint32_t b) { return b == kOmega || (a != kOmega && a <= b); }

}  // namespace

TEST_CASE("powersets") {
  for (std::size_t n = 0; n <= 4; ++n) {
    Poset b = finite_powerset(n);
    CHECK(b.size() == (std::size_t{1} << n));
    CHECK(is_isomorphic(b, downset_lattice(antichain(n)), SearchOptions{0, true}).has_value());
  }
  CHECK(finite_powerset(2).label(3) == "{0,1}");
}

TEST_CASE("omega-star grid joins") {
  for (std::size_t n = 1; n <= 6; ++n) {
    Poset g = omega_star_grid(n);
    auto cs = grid_coords(n);
    CHECK(g.size() == n * (n + 1) / 2);
    for (Element x = 0; x < g.size(); ++x) {
      for (Element y = 0; y < g.size(); ++y) {
        CHECK(g.leq(x, y) == (cs[y].i <= cs[x].i && cs[x].j <= cs[y].j));
        auto j = g.join(x, y);
        REQUIRE(j);
        CHECK(cs[*j] == Coord{std::min(cs[x].i, cs[y].i), std::max(cs[x].j, cs[y].j)});
        CHECK(*j == oracle::lub(g, x, y));
      }
    }
    for (auto c : cs) CHECK(cs[grid_index(n, c.i, c.j)] == c);
    Poset b = with_bottom(g);
    CHECK(b.size() == g.size() + 1);
    CHECK(b.least().has_value());
    CHECK(is_lattice(b));
  }
}

TEST_CASE("delta family") {
  Poset d2 = delta(2);
  CHECK(d2.size() == 6);
  auto anti = maximum_antichain(d2);
  CHECK(anti.size() == 3);
  std::vector<Element> tops;
  for (std::uint32_t i = 0; i <= 2; ++i) tops.push_back(delta_index(2, i, kOmega));
  CHECK(maximals(d2) == tops);

  for (std::size_t n = 0; n <= 5; ++n) {
    Poset d = delta(n);
    auto cs = delta_coords(n);
    CHECK(d.size() == n * (n + 1) / 2 + (n + 1));
    for (Element x = 0; x < d.size(); ++x) {
      CHECK(cs[delta_index(n, cs[x].i, cs[x].j)] == cs[x]);
      for (Element y = 0; y < d.size(); ++y) {
        const bool expect = x == y || (cs[x].j != kOmega && cs[x].j <= cs[y].i) ||
                            (cs[x].i == cs[y].i && j_leq(cs[x].j, cs[y].j));
        CHECK(d.leq(x, y) == expect);
        CHECK(oracle::glb(d, x, y) != kNone);
      }
    }
    for (std::uint32_t i = 0; i <= n; ++i) {
      for (std::uint32_t j = i + 1; j <= n; ++j) {
        CHECK(d.meet(delta_index(n, i, kOmega), delta_index(n, j, kOmega)) == delta_index(n, i, j));
      }
    }
    CHECK(structure_report(d).is_meet_semilattice);
  }
}

TEST_CASE("gamma family") {
  CHECK(oc::gamma(3).size() == 7);
  for (std::size_t n = 1; n <= 6; ++n) {
    Poset g = oc::gamma(n);
    auto cs = gamma_coords(n);
    CHECK(g.size() == 2 * n + 1);
    for (auto c : cs) CHECK((c.j == c.i + 1 || c.j == kOmega));
    CHECK(is_isomorphic(g, induced(delta(n), [&] {
                          std::vector<Element> xs;
                          for (auto c : cs) xs.push_back(delta_index(n, c.i, c.j));
                          return xs;
                        }()),
                        SearchOptions{0, true})
              .has_value());
    CHECK(structure_report(g).is_meet_semilattice);
    for (std::uint32_t i = 0; i <= n; ++i) {
      for (std::uint32_t j = i + 1; j <= n; ++j) {
        CHECK(g.meet(gamma_index(n, i, kOmega), gamma_index(n, j, kOmega)) == gamma_index(n, i, i + 1));
      }
    }
  }
}

TEST_CASE("downset lattices of delta and gamma carry the column family") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (bool use_gamma : {false, true}) {
      Poset p = use_gamma ? oc::gamma(n) : delta(n);
      DownsetLattice l = downset_lattice_with_sets(p);
      CHECK(structure_report(l.lattice).is_distributive);
      std::vector<Element> cols;
      for (std::uint32_t i = 0; i <= n; ++i) {
        Element e = use_gamma ? gamma_index(n, i, kOmega) : delta_index(n, i, kOmega);
        cols.push_back(static_cast<Element>(std::find(l.sets.begin(), l.sets.end(), p.down_closed(e)) - l.sets.begin()));
      }
      CHECK(oracle::independent(l.lattice, cols));
      CHECK(is_independent(l.lattice, cols));
    }
  }
}

TEST_CASE("v and l_alpha") {
  Poset v = v_family(4);
  CHECK(v.size() == 5);
  CHECK(v.least() == Element{0});
  CHECK(maximals(v).size() == 4);
  CHECK(maximum_antichain(v).size() == 4);

  Poset l2 = l_alpha(2);
  CHECK(l2.size() == 5);
  CHECK(structure_report(l2).is_lattice);
  CHECK_FALSE(structure_report(l2).is_modular);
  CHECK(is_isomorphic(l2, m5()).has_value());
  for (std::size_t a = 1; a <= 5; ++a) {
    Poset l = l_alpha(a);
    CHECK(l.size() == a + 3);
    CHECK(height(l) == a + 2);
    CHECK(is_lattice(l));
    CHECK(maximum_antichain(l).size() == 2);
  }
}

TEST_CASE("dyadic grid") {
  for (std::size_t n = 0; n <= 4; ++n) {
    Poset e = omega_eta(n);
    CHECK(e.size() == (std::size_t{2} << n) - 1);
  }
  Poset e = omega_eta(2);
  // (0,0) is least in the first coordinate and in value.
  CHECK(e.least().has_value());
}

TEST_CASE("ordinal arithmetic helpers") {
  CHECK(cnf({0, 2}).to_string() == "w*2");
  CHECK(cnf({3, 1, 1}).to_string() == "w^2+w+3");
  CHECK(cnf({}).to_string() == "0");
  CHECK(compare(cnf({5}), cnf({0, 1})) < 0);
  CHECK(compare(cnf({0, 1, 0}), cnf({0, 1})) == 0);
  CHECK(compare(cnf({0, 0, 1}), cnf({9, 9})) > 0);
  auto below = enumerate_below(cnf({2}), 6);
  REQUIRE(below.size() == 2);
  CHECK(below[0].to_string() == "0");
  CHECK(below[1].to_string() == "1");
  auto omega = enumerate_below(cnf({0, 0, 1}), 10);
  CHECK(omega.size() == 10);
  for (auto& o : omega) CHECK(compare(o, cnf({0, 0, 1})) < 0);
  for (std::size_t i = 0; i < omega.size(); ++i) {
    for (std::size_t j = i + 1; j < omega.size(); ++j) CHECK(compare(omega[i], omega[j]) != 0);
  }
}

TEST_CASE("sierpinskisation") {
  auto s = sierpinskisation(cnf({0, 2}), 6);
  Poset p = s.poset;
  CHECK(maximum_antichain(p).size() == 2);
  CHECK(is_chain(p, {0, 2, 4}));
  CHECK(is_chain(p, {1, 3, 5}));
  for (auto [x, y] : std::vector<Pair>{{0, 1}, {2, 3}, {4, 5}, {0, 3}, {0, 5}, {2, 5}}) CHECK(p.less(x, y));
  CHECK_FALSE(p.comparable(1, 2));

  CHECK(is_chain(sierpinskisation(cnf({0, 1}), 7).poset, {0, 1, 2, 3, 4, 5, 6}));
  CHECK_THROWS_AS(sierpinskisation(cnf({1, 2}), 4), Error);
  CHECK_THROWS_AS(sierpinskisation(cnf({}), 4), Error);

  for (SierpScheme scheme : {SierpScheme::ColumnAlternating, SierpScheme::Block, SierpScheme::SeededShuffle}) {
    for (auto alpha : {cnf({0, 3}), cnf({0, 0, 1}), cnf({0, 1, 1})}) {
      SierpOptions o{scheme, 2, 7};
      auto r = sierpinskisation(alpha, 12, o);
      for (Element x = 0; x < 12; ++x) {
        for (Element y = 0; y < 12; ++y) {
          const bool both = x <= y && r.alpha_rank[x] <= r.alpha_rank[y];
          CHECK(r.poset.leq(x, y) == both);
          if (r.column[x] == r.column[y] && x < y) CHECK(r.row[x] < r.row[y]);
        }
      }
      auto again = sierpinskisation(alpha, 12, o);
      CHECK(again.poset == r.poset);
    }
  }
}

TEST_CASE("lattice sierpinskisation") {
  Poset two = lattice_sierp(cnf({2}), 4);
  CHECK(two.size() == 8);
  CHECK(is_isomorphic(two, direct_product(chain(4), chain(2))).has_value());
  CHECK(is_chain(lattice_sierp(cnf({1}), 5), {0, 1, 2, 3, 4}));
  Poset w = lattice_sierp(cnf({0, 1}), 4);
  CHECK(w.size() == 10);
  CHECK(is_join_semilattice(w));
  // Pairs (i, p) with p <= i < 4, ordered componentwise.
  std::vector<Pair> cells;
  for (Element i = 0; i < 4; ++i) {
    for (Element q = 0; q <= i; ++q) cells.emplace_back(i, q);
  }
  std::vector<Pair> rel;
  for (Element x = 0; x < cells.size(); ++x) {
    for (Element y = 0; y < cells.size(); ++y) {
      if (x != y && cells[x].first <= cells[y].first && cells[x].second <= cells[y].second) rel.emplace_back(x, y);
    }
  }
  CHECK(oracle::isomorphic(w, build(cells.size(), RelationKind::Leq, rel)));
  CHECK_THROWS_AS(lattice_sierp(cnf({}), 3), Error);
}

TEST_CASE("s_alpha") {
  Poset s = s_alpha(cnf({2, 2}), 6);
  CHECK(s.size() == 8);
  CHECK(maximum_antichain(s).size() == 3);
  CHECK(s_alpha(cnf({3}), 6) == chain(3).with_labels({"t0", "t1", "t2"}));
}

TEST_CASE("generate dispatches on family names") {
  FamilySpec d{"delta", {{"n", 4}}, false, ""};
  CHECK(generate(d) == delta(4));
  CHECK(dump(to_json(generate(d))) == dump(to_json(generate(d))));
  FamilySpec b{"omega_star_grid", {{"n", 3}}, true, ""};
  CHECK(generate(b) == with_bottom(omega_star_grid(3)));
  FamilySpec sp{"sierpinskisation", {{"c0", 0}, {"c1", 2}, {"n", 6}}, false, "column-alternating"};
  CHECK(generate(sp) == sierpinskisation(cnf({0, 2}), 6).poset);
  CHECK(generate(FamilySpec{"m5", {}, false, ""}).size() == 5);
  CHECK_THROWS_AS(generate(FamilySpec{"delta", {}, false, ""}), Error);
  CHECK_THROWS_AS(generate(FamilySpec{"nonsense", {}, false, ""}), Error);
  CHECK_THROWS_AS(generate(FamilySpec{"sierpinskisation", {{"c1", 1}, {"n", 3}}, false, "zigzag"}), Error);
}
