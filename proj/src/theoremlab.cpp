#include "ordercraft/theoremlab.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <thread>

#include "ordercraft/constructions.hpp"
#include "ordercraft/families.hpp"
#include "ordercraft/segments.hpp"
#include "ordercraft/semilattice.hpp"

namespace oc {

namespace {

using Rng = std::mt19937_64;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) { return splitmix(seed ^ splitmix(trial + 1)); }

double unit(Rng& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }
std::size_t below(Rng& g, std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(g() % n); }

template <typename T>
void shuffle(std::vector<T>& v, Rng& g) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(g, i)]);
}

std::string show(const std::vector<Element>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "]";
}

// Brute-force bounds by scanning every element.
namespace oracle {

Element lub(const Poset& p, Element x, Element y) {
  for (Element z = 0; z < p.size(); ++z) {
    if (!p.leq(x, z) || !p.leq(y, z)) continue;
    bool least = true;
    for (Element w = 0; w < p.size() && least; ++w) {
      if (p.leq(x, w) && p.leq(y, w) && !p.leq(z, w)) least = false;
    }
    if (least) return z;
  }
  return kNone;
}

Element glb(const Poset& p, Element x, Element y) {
  for (Element z = 0; z < p.size(); ++z) {
    if (!p.leq(z, x) || !p.leq(z, y)) continue;
    bool greatest = true;
    for (Element w = 0; w < p.size() && greatest; ++w) {
      if (p.leq(w, x) && p.leq(w, y) && !p.leq(w, z)) greatest = false;
    }
    if (greatest) return z;
  }
  return kNone;
}

bool independent(const Poset& p, const std::vector<Element>& xs) {
  const std::size_t k = xs.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      if (mask & (1u << i)) continue;
      Element acc = kNone;
      for (std::size_t j = 0; j < k; ++j) {
        if (mask & (1u << j)) acc = acc == kNone ? xs[j] : lub(p, acc, xs[j]);
      }
      if (acc != kNone && p.leq(xs[i], acc)) return false;
    }
  }
  return true;
}

bool has_independent(const Poset& p, std::size_t k) {
  std::vector<Element> pick;
  std::function<bool(Element)> rec = [&](Element from) {
    if (pick.size() == k) return independent(p, pick);
    for (Element x = from; x < p.size(); ++x) {
      pick.push_back(x);
      if (rec(x + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(0);
}

bool is_isomorphism(const Poset& a, const Poset& b, const std::vector<Element>& f) {
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

struct HomCheck {
  bool joins = true;
  bool meets = true;
  bool injective = true;
};

HomCheck lattice_hom(const Poset& s, const Poset& t, const std::vector<Element>& f) {
  HomCheck h;
  for (Element x = 0; x < s.size(); ++x) {
    for (Element y = x + 1; y < s.size(); ++y) {
      if (f[x] == f[y]) h.injective = false;
      const Element j = lub(s, x, y), m = glb(s, x, y);
      if (j == kNone || f[j] != lub(t, f[x], f[y])) h.joins = false;
      if (m == kNone || f[m] != glb(t, f[x], f[y])) h.meets = false;
    }
  }
  return h;
}

}  // namespace oracle

struct Suite {
  std::function<Json(Rng&, std::size_t, std::size_t, std::uint64_t)> inputs;  // rng, max_n, trial, suite seed
  std::function<std::optional<std::string>(const Json&)> check;
  std::size_t default_max_n;
};

// ---- tm21

// Odd trials use the full size bound so that B_3 (8 elements) has room to appear.
Json tm21_inputs(Rng& g, std::size_t max_n, std::size_t trial, std::uint64_t) {
  const std::size_t hi = std::max<std::size_t>(max_n, 2);
  const std::size_t n = trial % 2 ? hi : 2 + below(g, hi - 1);
  return Json{{"poset", to_json(random_join_semilattice(n, g()))}};
}

std::optional<std::string> tm21_check(const Json& in) {
  Poset p = poset_from_json(in.at("poset"));
  for (std::size_t k = 1; k <= 3; ++k) {
    const bool brute = oracle::has_independent(p, k);
    const bool search = find_independent_set(p, k).has_value();
    const bool order = embedding_search(finite_powerset(k), p, EmbeddingMode::Order).has_value();
    const bool join = embedding_search(finite_powerset(k), p, EmbeddingMode::Join).has_value();
    if (brute != search || brute != order || brute != join) {
      return "k=" + std::to_string(k) + ": oracle " + std::to_string(brute) + ", search " + std::to_string(search) +
             ", order-embedding " + std::to_string(order) + ", join-embedding " + std::to_string(join);
    }
  }
  return std::nullopt;
}

// ---- irr_eq

Poset random_small_poset(Rng& g, std::size_t max_n) {
  const std::size_t n = 1 + below(g, std::max<std::size_t>(max_n, 1));
  const double density = unit(g);
  return random_poset(n, density, g());
}

Json irr_inputs(Rng& g, std::size_t max_n, std::size_t, std::uint64_t) { return Json{{"poset", to_json(random_small_poset(g, max_n))}}; }

std::optional<std::string> irr_check(const Json& in) {
  Poset q = poset_from_json(in.at("poset"));
  DownsetLattice dl = downset_lattice_with_sets(q);
  const Poset& l = dl.lattice;
  std::map<Bits, Element> where;
  for (Element i = 0; i < dl.sets.size(); ++i) where.emplace(dl.sets[i], i);
  auto join = [&](Element a, Element b) { return where.at(dl.sets[a] | dl.sets[b]); };

  std::vector<Element> principal, irr, prime;
  for (Element x = 0; x < q.size(); ++x) principal.push_back(where.at(q.down_closed(x)));
  std::sort(principal.begin(), principal.end());
  for (Element x = 0; x < l.size(); ++x) {
    if (dl.sets[x].none()) continue;
    bool is_irr = true, is_prime = true;
    for (Element a = 0; a < l.size(); ++a) {
      for (Element b = 0; b < l.size(); ++b) {
        if (l.less(a, x) && l.less(b, x) && join(a, b) == x) is_irr = false;
        if (l.leq(x, join(a, b)) && !l.leq(x, a) && !l.leq(x, b)) is_prime = false;
      }
    }
    if (is_irr) irr.push_back(x);
    if (is_prime) prime.push_back(x);
  }
  const auto lib_irr = join_irreducibles(l), lib_prime = join_primes(l);
  if (irr != principal || prime != principal || lib_irr != principal || lib_prime != principal) {
    return "principal " + show(principal) + ", irreducible " + show(irr) + "/" + show(lib_irr) + ", prime " + show(prime) +
           "/" + show(lib_prime);
  }
  return std::nullopt;
}

// ---- sum_prod

Json sum_inputs(Rng& g, std::size_t max_n, std::size_t, std::uint64_t) {
  Poset a = random_small_poset(g, max_n);
  Poset b = random_small_poset(g, max_n);
  return Json{{"a", to_json(a)}, {"b", to_json(b)}};
}

Poset ideal_poset(const Poset& p) { return inclusion_poset(p, enumerate_ideals(p).sets); }

std::optional<std::string> sum_check(const Json& in) {
  Poset a = poset_from_json(in.at("a")), b = poset_from_json(in.at("b"));
  SearchOptions forced{0, true};
  Poset l1 = downset_lattice(direct_sum(a, b));
  Poset la = downset_lattice(a), lb = downset_lattice(b);
  Poset l2 = direct_product(la, lb);
  if (l1.size() != la.size() * lb.size()) {
    return "downset count " + std::to_string(l1.size()) + " != " + std::to_string(la.size()) + "*" + std::to_string(lb.size());
  }
  auto iso = is_isomorphic(l1, l2, forced);
  if (!iso || !oracle::is_isomorphism(l1, l2, *iso)) return "downset lattice of the sum is not isomorphic to the product";
  auto js = is_isomorphic(ideal_poset(direct_sum(a, b)), direct_sum(ideal_poset(a), ideal_poset(b)), forced);
  if (!js) return "ideal poset of the sum differs from the sum of ideal posets";
  auto jp = is_isomorphic(ideal_poset(direct_product(a, b)), direct_product(ideal_poset(a), ideal_poset(b)), forced);
  if (!jp) return "ideal poset of the product differs from the product of ideal posets";
  return std::nullopt;
}

// ---- ideal_principal

std::optional<std::string> ideal_check(const Json& in) {
  std::size_t idx = 0;
  for (const auto& pj : in.at("posets")) {
    Poset p = poset_from_json(pj);
    DownSetFamily ideals = enumerate_ideals(p);
    if (ideals.sets.size() != p.size()) {
      return "poset " + std::to_string(idx) + ": " + std::to_string(ideals.sets.size()) + " ideals for " + std::to_string(p.size()) + " elements";
    }
    for (const auto& s : ideals.sets) {
      auto tops = maximals_of(p, s);
      if (tops.size() != 1 || p.down_closed(tops[0]) != s) return "poset " + std::to_string(idx) + ": non-principal ideal " + set_label(p, s);
    }
    ++idx;
  }
  return std::nullopt;
}

// ---- lem2_3

Json lem_inputs(Rng& g, std::size_t max_n, std::size_t trial, std::uint64_t) {
  const std::size_t variant = trial % 3;
  Poset host = variant == 2 ? dual(random_join_semilattice(max_n + 4, g())) : downset_lattice(random_small_poset(g, max_n));
  const std::size_t dn = 1 + below(g, 3);
  std::vector<Element> cols;
  for (std::size_t k = 0; k <= dn; ++k) {
    Element a = static_cast<Element>(below(g, host.size()));
    if (variant == 0 && k >= 2) {
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) a = *host.join(a, *host.meet(cols[i], cols[j]));
      }
    }
    cols.push_back(a);
  }
  return Json{{"host", to_json(host)}, {"n", dn}, {"columns", cols}, {"mode", variant == 0 ? "constructed" : "random"},
              {"inject", false}};
}

std::optional<std::string> lem_check(const Json& in) {
  Poset p = poset_from_json(in.at("host"));
  const auto dn = in.at("n").get<std::size_t>();
  const auto cols = in.at("columns").get<std::vector<Element>>();
  if (cols.size() != dn + 1) return "column count differs from n + 1";
  auto coords = delta_coords(dn);
  std::vector<Element> table;
  for (auto [i, j] : coords) table.push_back(j == kOmega ? cols[i] : oracle::glb(p, cols[i], cols[j]));
  DeltaMapReport rep = check_delta_map(dn, p, table);
  if (in.value("inject", false)) rep.cond[2] = !rep.cond[2];

  // Order on Δ from coordinates, ω above every integer.
  auto big = [](std::uint32_t v) { return v == kOmega ? std::uint64_t{1} << 40 : std::uint64_t{v}; };
  auto dleq = [&](Coord a, Coord b) { return big(a.j) <= big(b.i) || (a.i == b.i && big(a.j) <= big(b.j)); };
  auto f = [&](std::uint32_t i, std::uint32_t j) {
    for (std::size_t e = 0; e < coords.size(); ++e) {
      if (coords[e].i == i && coords[e].j == j) return table[e];
    }
    return kNone;
  };
  std::array<bool, 6> c{true, true, true, true, true, true};
  for (std::size_t x = 0; x < coords.size(); ++x) {
    for (std::size_t y = 0; y < coords.size(); ++y) {
      if (dleq(coords[x], coords[y]) && !p.leq(table[x], table[y])) c[1] = false;
      std::size_t m = coords.size();
      for (std::size_t z = 0; z < coords.size(); ++z) {
        if (!dleq(coords[z], coords[x]) || !dleq(coords[z], coords[y])) continue;
        bool top = true;
        for (std::size_t w = 0; w < coords.size(); ++w) {
          if (dleq(coords[w], coords[x]) && dleq(coords[w], coords[y]) && !dleq(coords[w], coords[z])) top = false;
        }
        if (top) m = z;
      }
      if (m == coords.size() || table[m] != oracle::glb(p, table[x], table[y])) c[0] = false;
    }
  }
  bool a = true, b = true;
  const auto N = static_cast<std::uint32_t>(dn);
  for (std::uint32_t i = 0; i <= N; ++i) {
    for (std::uint32_t j = i + 1; j <= N; ++j) {
      for (std::uint32_t k = j + 1; k <= N + 1; ++k) {
        const std::uint32_t kk = k == N + 1 ? kOmega : k;
        a = a && p.less(f(i, j), f(j, kk));
        b = b && p.less(f(i, j), f(i, kk));
        if (kk == kOmega) continue;
        c[2] = c[2] && p.leq(f(i, j), f(k, kOmega));
        c[3] = c[3] && p.leq(f(i, j), f(j, k));
        c[4] = c[4] && p.leq(f(i, j), f(i, k));
        c[5] = c[5] && f(i, j) == oracle::glb(p, f(i, k), f(j, k));
      }
    }
  }
  std::vector<Element> sorted = table;
  std::sort(sorted.begin(), sorted.end());
  const bool injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

  for (std::size_t i = 0; i < 6; ++i) {
    if (rep.cond[i] != c[i]) return "condition " + std::to_string(i + 1) + " reported " + std::to_string(rep.cond[i]) + ", oracle " + std::to_string(c[i]);
  }
  if (rep.a != a || rep.b != b || rep.injective != injective) return "injectivity data differs from the oracle";
  for (std::size_t i = 1; i < 6; ++i) {
    if (c[i] != c[1]) return "conditions (ii)-(vi) do not share a truth value";
  }
  if (c[0] != c[1]) return "condition (i) differs from (ii)";
  if (c[0] && injective != (a && b)) return "injectivity differs from (a) and (b)";
  return std::nullopt;
}

// ---- fvee

Json fvee_inputs(Rng& g, std::size_t max_n, std::size_t, std::uint64_t) {
  Poset p = dual(random_join_semilattice(max_n, g()));
  std::vector<Element> s;
  while (s.empty()) {
    for (Element x = 0; x < p.size(); ++x) {
      if (g() & 1) s.push_back(x);
    }
  }
  return Json{{"poset", to_json(p)}, {"subset", s}};
}

std::optional<std::string> fvee_check(const Json& in) {
  Poset p = poset_from_json(in.at("poset"));
  const auto s = in.at("subset").get<std::vector<Element>>();
  Poset ps = induced(p, s);
  DownsetLattice t = downset_lattice_with_sets(ps);
  std::map<Bits, Element> where;
  for (Element i = 0; i < t.sets.size(); ++i) where.emplace(t.sets[i], i);
  std::vector<Element> table;
  for (Element x = 0; x < p.size(); ++x) {
    Bits img(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (p.leq(s[i], x)) img.set(i);
    }
    table.push_back(where.at(img));
  }
  FVee fv = f_vee(make_witness(p, t.lattice, table));

  // Set-level oracle: the domain is closed under union and intersection.
  const auto& dom = fv.domain_sets;
  auto image = [&](const Bits& a) {
    Bits acc(s.size());
    for (auto x = a.find_first(); x != Bits::npos; x = a.find_next(x)) acc |= t.sets[table[x]];
    return where.at(acc);
  };
  std::map<Bits, Element> dom_where;
  for (Element i = 0; i < dom.size(); ++i) dom_where.emplace(dom[i], i);
  bool hom = true;
  for (Element i = 0; i < dom.size(); ++i) {
    if (fv.witness.table[i] != image(dom[i])) return "f_vee table differs from the set-level oracle";
    for (Element j = 0; j < dom.size(); ++j) {
      const Element u = image(dom[i] | dom[j]);
      const Element v = image(dom[i] & dom[j]);
      if (u != where.at(t.sets[image(dom[i])] | t.sets[image(dom[j])])) hom = false;
      if (v != where.at(t.sets[image(dom[i])] & t.sets[image(dom[j])])) hom = false;
    }
  }
  if (!hom || !fv.witness.certified.lattice_hom) return "f_vee is not a lattice homomorphism";

  std::vector<Element> sorted = table;
  std::sort(sorted.begin(), sorted.end());
  const bool c1 = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  bool c2 = true;
  const std::size_t n = p.size();
  for (Element x = 0; x < n && c2; ++x) {
    for (std::uint32_t mask = 1; mask < (1u << n) && c2; ++mask) {
      if (mask & (1u << x)) continue;
      Bits acc(s.size());
      for (Element y = 0; y < n; ++y) {
        if (mask & (1u << y)) acc |= t.sets[table[y]];
      }
      if (acc == t.sets[table[x]]) c2 = false;
    }
  }
  std::vector<Element> img = fv.witness.table;
  std::sort(img.begin(), img.end());
  const bool inj = std::adjacent_find(img.begin(), img.end()) == img.end();
  if (fv.criterion1 != c1 || fv.criterion2 != c2 || fv.table_injective != inj) return "f_vee criteria differ from the oracle";
  if (inj != (c1 && c2)) return "injectivity of f_vee differs from criteria 1 and 2";
  return std::nullopt;
}

// ---- thm8_pipe

Json pipe_inputs(Rng& g, std::size_t max_n, std::size_t, std::uint64_t) {
  const std::size_t hi = std::max<std::size_t>(max_n, 4);
  for (;;) {
    const std::size_t n = 4 + below(g, hi - 3);
    Poset q = random_poset(n, unit(g) * 0.5, g());
    if (maximum_antichain(q).size() >= 4) return Json{{"poset", to_json(q)}, {"k", 4}};
  }
}

std::optional<std::string> pipe_check(const Json& in) {
  Poset t = downset_lattice(poset_from_json(in.at("poset")));
  Certificate cert = thm8_pipeline(t, in.at("k").get<std::size_t>());
  if (!verify_certificate(cert)) return "certificate evidence does not re-verify";
  auto h = oracle::lattice_hom(cert.map->source, cert.map->target, cert.map->table);
  if (!h.joins || !h.meets || !h.injective) return "oracle rejects the sublattice witness";
  return std::nullopt;
}

// ---- separating

Json sep_inputs(Rng& g, std::size_t max_n, std::size_t trial, std::uint64_t) {
  const std::size_t n = 3 + below(g, std::max<std::size_t>(max_n, 3) - 2);
  if (trial % 2 == 0) {
    std::vector<Element> perm(n);
    std::iota(perm.begin(), perm.end(), Element{0});
    shuffle(perm, g);
    return Json{{"kind", "powerset"}, {"n", n}, {"perm", perm}};
  }
  return Json{{"kind", "grid"}, {"n", n}};
}

std::optional<std::string> sep_check(const Json& in) {
  const auto n = in.at("n").get<std::size_t>();
  if (in.at("kind") == "powerset") {
    const auto perm = in.at("perm").get<std::vector<Element>>();
    Poset b = finite_powerset(n);
    std::vector<Bits> members;
    for (std::size_t k = 0; k < n; ++k) {
      Element allowed = 0;
      for (std::size_t m = k; m < n; ++m) allowed |= Element{1} << perm[m];
      Bits s(b.size());
      for (Element x = 0; x < b.size(); ++x) {
        if ((x & ~allowed) == 0) s.set(x);
      }
      members.push_back(s);
    }
    auto chain = ChainOfDownSets::make(b, members);
    if (!is_separating(chain).separating) return "powerset chain reported non-separating";
    Certificate cert = independent_from_separating(chain);
    if (cert.stalled_at || cert.elements.size() != n - 1) return "extracted " + std::to_string(cert.elements.size()) + " elements, expected " + std::to_string(n - 1);
    for (std::size_t i = 0; i < cert.elements.size(); ++i) {
      Element rest = 0;
      for (std::size_t j = 0; j < cert.elements.size(); ++j) {
        if (j != i) rest |= cert.elements[j];
      }
      if ((cert.elements[i] & ~rest) == 0) return "extracted set is not independent";
    }
    if (!verify_certificate(cert)) return "certificate evidence does not re-verify";
    return std::nullopt;
  }
  Poset grid = omega_star_grid(n);
  auto coords = grid_coords(n);
  std::vector<Bits> members;
  for (std::uint32_t k = 0; k < n; ++k) {
    Bits s(grid.size());
    for (Element x = 0; x < grid.size(); ++x) {
      if (coords[x].i >= k) s.set(x);
    }
    members.push_back(s);
  }
  auto chain = ChainOfDownSets::make(grid, members);
  Separation sep = is_separating(chain);
  if (sep.separating) return "grid chain reported separating";
  // {x}⋁J by coordinates: everything below (min i, max j) over x and J.
  for (const Bits& j : members) {
    std::uint32_t lo = coords[sep.x].i, hi = coords[sep.x].j;
    for (auto y = j.find_first(); y != Bits::npos; y = j.find_next(y)) {
      lo = std::min(lo, coords[y].i);
      hi = std::max(hi, coords[y].j);
    }
    for (auto y = members[sep.member].find_first(); y != Bits::npos; y = members[sep.member].find_next(y)) {
      if (coords[y].i < lo || coords[y].j > hi) return "witness does not block separation";
    }
  }
  const std::size_t depth = std::max<std::size_t>(1, (n - 1) / 2);
  Certificate cert = dichotomy_extract(chain, depth);
  if (cert.kind != CertKind::GridMap || cert.stalled_at || cert.param != depth) return "dichotomy did not reach the grid at depth " + std::to_string(depth);
  const auto src = grid_coords(depth);
  for (std::size_t x = 0; x < src.size(); ++x) {
    for (std::size_t y = 0; y < src.size(); ++y) {
      const Coord u{std::min(src[x].i, src[y].i), std::max(src[x].j, src[y].j)};
      const auto ux = static_cast<std::size_t>(std::find(src.begin(), src.end(), u) - src.begin());
      if (cert.map->table[ux] != oracle::lub(grid, cert.map->table[x], cert.map->table[y])) return "grid map is not join-preserving";
      if (x != y && cert.map->table[x] == cert.map->table[y]) return "grid map is not injective";
    }
  }
  return std::nullopt;
}

Json ideal_inputs(Rng&, std::size_t, std::size_t trial, std::uint64_t seed);

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> s{
      {"tm21", {tm21_inputs, tm21_check, 10}},
      {"irr_eq", {irr_inputs, irr_check, 7}},
      {"sum_prod", {sum_inputs, sum_check, 5}},
      {"ideal_principal", {ideal_inputs, ideal_check, 0}},
      {"lem2_3", {lem_inputs, lem_check, 5}},
      {"fvee", {fvee_inputs, fvee_check, 6}},
      {"thm8_pipe", {pipe_inputs, pipe_check, 6}},
      {"separating", {sep_inputs, sep_check, 8}},
  };
  return s;
}

const Suite& suite(const std::string& name) {
  auto it = suites().find(name);
  if (it == suites().end()) fail(ErrorCode::UnknownSuite, "unknown suite '" + name + "'");
  return it->second;
}

// The posets suites tm21, irr_eq and sum_prod draw for the same trial.
Json ideal_inputs(Rng&, std::size_t, std::size_t trial, std::uint64_t seed) {
  Json posets = Json::array();
  posets.push_back(suite_inputs("tm21", seed, trial, 0).at("poset"));
  posets.push_back(suite_inputs("irr_eq", seed, trial, 0).at("poset"));
  Json ab = suite_inputs("sum_prod", seed, trial, 0);
  posets.push_back(ab.at("a"));
  posets.push_back(ab.at("b"));
  posets.push_back(to_json(direct_sum(poset_from_json(ab.at("a")), poset_from_json(ab.at("b")))));
  return Json{{"posets", posets}};
}

}  // namespace

Poset random_poset(std::size_t n, double p, std::uint64_t seed) {
  Rng g(seed);
  std::vector<Pair> pairs;
  for (Element i = 0; i < n; ++i) {
    for (Element j = i + 1; j < n; ++j) {
      if (unit(g) < p) pairs.emplace_back(i, j);
    }
  }
  return build(n, RelationKind::Leq, pairs);
}

Poset random_join_semilattice(std::size_t n, std::uint64_t seed) {
  Rng g(seed);
  const std::size_t bound = std::max<std::size_t>(n, 2);
  const std::size_t base_n = 1 + below(g, bound);
  const double density = unit(g);
  Poset base = random_poset(base_n, density, g());
  std::vector<Bits> downs;
  for (auto& s : enumerate_downsets(base).sets) {
    if (s.any()) downs.push_back(s);
  }
  shuffle(downs, g);
  std::vector<Bits> family{Bits(base_n)};
  for (const Bits& d : downs) {
    std::vector<Bits> next = family;
    auto add = [&](const Bits& s) {
      if (std::find(next.begin(), next.end(), s) == next.end()) next.push_back(s);
    };
    for (const Bits& f : family) add(f | d);
    if (next.size() <= bound) family = std::move(next);
  }
  sort_canonical(family);
  return inclusion_poset(base, family);
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, s] : suites()) out.push_back(name);
  return out;
}

std::size_t default_max_n(const std::string& name) { return suite(name).default_max_n; }

Json suite_inputs(const std::string& name, std::uint64_t seed, std::size_t trial, std::size_t max_n, bool inject_fault) {
  const Suite& s = suite(name);
  Rng g(trial_seed(seed, trial));
  Json in = s.inputs(g, max_n ? max_n : s.default_max_n, trial, seed);
  if (inject_fault && name == "lem2_3") in["inject"] = true;
  return in;
}

std::optional<std::string> suite_check(const std::string& name, const Json& inputs) {
  const Suite& s = suite(name);
  try {
    return s.check(inputs);
  } catch (const Error& e) {
    return std::string(e.what());
  }
}

std::optional<std::string> replay(const Json& bundle) {
  return suite_check(bundle.at("suite").get<std::string>(), bundle.at("inputs"));
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  const Suite& s = suite(name);
  const auto start = std::chrono::steady_clock::now();
  SuiteReport r;
  r.suite = name;
  r.trials = opts.trials;
  r.seed = opts.seed;
  r.max_n = opts.max_n ? opts.max_n : s.default_max_n;
  const std::size_t planted = opts.trials / 2;

  std::vector<std::optional<SuiteFailure>> results(opts.trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < opts.trials; t = next++) {
      Json in;
      std::optional<std::string> msg;
      try {
        in = suite_inputs(name, opts.seed, t, r.max_n, opts.inject_fault && t == planted);
        msg = suite_check(name, in);
      } catch (const std::exception& e) {
        msg = std::string("exception: ") + e.what();
      }
      if (msg) results[t] = SuiteFailure{t, *msg, Json{{"suite", name}, {"trial", t}, {"inputs", in}}};
    }
  };
  unsigned jobs = opts.jobs ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(opts.trials, 1)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < jobs; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& f : results) {
    if (f) r.failures.push_back(std::move(*f));
  }
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Json to_json(const SuiteReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back({{"trial", f.trial}, {"message", f.message}, {"bundle", f.bundle}});
  return Json{{"suite", r.suite}, {"trials", r.trials}, {"seed", r.seed}, {"max_n", r.max_n},
              {"failure_count", r.failures.size()}, {"failures", failures}, {"wall_seconds", r.wall_seconds}};
}

}  // namespace oc
