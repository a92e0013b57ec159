#include "ordercraft/families.hpp"

#include <algorithm>
#include <functional>

namespace oc {

namespace {

Poset from_predicate(std::size_t n, const std::function<bool(Element, Element)>& less,
                     std::vector<std::string> labels) {
  std::vector<Bits> down(n, Bits(n));
  for (Element y = 0; y < n; ++y) {
    for (Element x = 0; x < n; ++x) {
      if (x != y && less(x, y)) down[y].set(x);
    }
  }
  return Poset::from_down_sets(std::move(down), std::move(labels), true);
}

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::UnsupportedParams, what);
}

std::string subset_label(std::uint64_t mask, std::size_t n) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask >> i & 1U) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    }
  }
  return s + "}";
}

}  // namespace

std::string coord_label(Coord c) {
  return "(" + std::to_string(c.i) + "," + (c.j == kOmega ? std::string("w") : std::to_string(c.j)) + ")";
}

bool delta_leq(Coord a, Coord b) {
  return a.j <= b.i || (a.i == b.i && a.j <= b.j);
}

Poset finite_powerset(std::size_t n) {
  require(n <= 12, "finite_powerset supports n <= 12");
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::string> labels;
  for (std::uint64_t m = 0; m < size; ++m) labels.push_back(subset_label(m, n));
  return from_predicate(size, [](Element x, Element y) { return (x & y) == x; }, std::move(labels));
}

std::vector<Coord> grid_coords(std::size_t n) {
  std::vector<Coord> out;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j <= n; ++j) out.push_back({i, j});
  }
  return out;
}

Element grid_index(std::size_t n, std::uint32_t i, std::uint32_t j) {
  if (!(i < j && j <= n)) fail(ErrorCode::IndexOutOfRange, "grid coordinate " + coord_label({i, j}));
  return static_cast<Element>(i * n - i * (i - 1) / 2 + (j - i - 1));
}

Poset omega_star_grid(std::size_t n) {
  require(n <= 64, "omega_star_grid supports n <= 64");
  auto cs = grid_coords(n);
  std::vector<std::string> labels;
  for (auto c : cs) labels.push_back(coord_label(c));
  return from_predicate(cs.size(), [&](Element x, Element y) { return cs[y].i <= cs[x].i && cs[x].j <= cs[y].j; },
                        std::move(labels));
}

std::vector<Coord> delta_coords(std::size_t n) {
  std::vector<Coord> out;
  for (std::uint32_t i = 0; i <= n; ++i) {
    for (std::uint32_t j = i + 1; j <= n; ++j) out.push_back({i, j});
    out.push_back({i, kOmega});
  }
  return out;
}

Element delta_index(std::size_t n, std::uint32_t i, std::uint32_t j) {
  if (i > n || (j != kOmega && (j <= i || j > n))) fail(ErrorCode::IndexOutOfRange, "delta coordinate " + coord_label({i, j}));
  const std::size_t offset = i * (n + 1) - i * (i - 1) / 2;
  return static_cast<Element>(offset + (j == kOmega ? n - i : j - i - 1));
}

Poset delta(std::size_t n) {
  require(n <= 64, "delta supports n <= 64");
  auto cs = delta_coords(n);
  std::vector<std::string> labels;
  for (auto c : cs) labels.push_back(coord_label(c));
  return from_predicate(cs.size(), [&](Element x, Element y) { return delta_leq(cs[x], cs[y]); }, std::move(labels));
}

std::vector<Coord> gamma_coords(std::size_t n) {
  std::vector<Coord> out;
  for (std::uint32_t i = 0; i < n; ++i) {
    out.push_back({i, i + 1});
    out.push_back({i, kOmega});
  }
  out.push_back({static_cast<std::uint32_t>(n), kOmega});
  return out;
}

Element gamma_index(std::size_t n, std::uint32_t i, std::uint32_t j) {
  if (j == kOmega && i <= n) return static_cast<Element>(i == n ? 2 * n : 2 * i + 1);
  if (i < n && j == i + 1) return static_cast<Element>(2 * i);
  fail(ErrorCode::IndexOutOfRange, "gamma coordinate " + coord_label({i, j}));
}

Poset gamma(std::size_t n) {
  require(n <= 64, "gamma supports n <= 64");
  auto cs = gamma_coords(n);
  std::vector<std::string> labels;
  for (auto c : cs) labels.push_back(coord_label(c));
  return from_predicate(cs.size(), [&](Element x, Element y) { return delta_leq(cs[x], cs[y]); }, std::move(labels));
}

Poset v_family(std::size_t n) {
  require(n <= 4096, "v supports n <= 4096");
  std::vector<std::string> labels{"{}"};
  for (std::size_t i = 0; i < n; ++i) labels.push_back("{" + std::to_string(i) + "}");
  return from_predicate(n + 1, [](Element x, Element y) { return x == 0 && y != 0; }, std::move(labels));
}

Poset l_alpha(std::size_t a) {
  require(a <= 4096, "l_alpha supports a <= 4096");
  Poset middle = direct_sum(chain(1), chain(a));
  Poset p = lexicographic_sum(chain(3), {chain(1), middle, chain(1)});
  std::vector<std::string> labels{"0", "p"};
  for (std::size_t i = 0; i < a; ++i) labels.push_back("c" + std::to_string(i));
  labels.push_back("1");
  return p.with_labels(std::move(labels));
}

Poset m5() { return l_alpha(2); }

Poset omega_eta(std::size_t n) {
  require(n <= 10, "omega_eta supports n <= 10");
  struct Point {
    std::uint32_t m;
    std::uint64_t num;  // value num / 2^n on a common denominator
  };
  std::vector<Point> pts;
  std::vector<std::string> labels;
  for (std::uint32_t m = 0; m <= n; ++m) {
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << m); ++i) {
      pts.push_back({m, i << (n - m)});
      labels.push_back("(" + std::to_string(m) + "," + std::to_string(i) + "/" + std::to_string(std::uint64_t{1} << m) + ")");
    }
  }
  return from_predicate(pts.size(), [&](Element x, Element y) { return pts[x].m <= pts[y].m && pts[x].num <= pts[y].num; },
                        std::move(labels));
}

Poset with_bottom(const Poset& p) {
  const std::size_t n = p.size() + 1;
  std::vector<Bits> down(n, Bits(n));
  for (Element y = 0; y < p.size(); ++y) {
    Bits& d = down[y + 1];
    d.set(0);
    for (auto x = p.down(y).find_first(); x != Bits::npos; x = p.down(y).find_next(x)) d.set(x + 1);
  }
  std::vector<std::string> labels;
  if (p.has_labels()) {
    labels.push_back("bot");
    for (auto& l : p.labels()) labels.push_back(l);
  }
  return Poset::from_down_sets(std::move(down), std::move(labels), false);
}

namespace {

std::int64_t param(const FamilySpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) fail(ErrorCode::UnsupportedParams, spec.family + " requires parameter '" + key + "'");
  if (it->second < 0) fail(ErrorCode::UnsupportedParams, "parameter '" + key + "' must be >= 0");
  return it->second;
}

OrdinalCNF cnf_params(const FamilySpec& spec) {
  OrdinalCNF out;
  for (std::size_t k = 0;; ++k) {
    auto it = spec.params.find("c" + std::to_string(k));
    if (it == spec.params.end()) break;
    if (it->second < 0) fail(ErrorCode::UnsupportedParams, "ordinal coefficients must be >= 0");
    out.coeffs.push_back(static_cast<std::uint64_t>(it->second));
  }
  if (out.coeffs.empty()) fail(ErrorCode::UnsupportedParams, spec.family + " requires coefficients c0, c1, ...");
  return out;
}

SierpOptions sierp_options(const FamilySpec& spec) {
  SierpOptions o;
  if (!spec.scheme.empty()) o.scheme = parse_scheme(spec.scheme);
  if (auto it = spec.params.find("block"); it != spec.params.end()) {
    require(it->second >= 1, "block must be >= 1");
    o.block = static_cast<std::uint64_t>(it->second);
  }
  if (auto it = spec.params.find("seed"); it != spec.params.end()) o.seed = static_cast<std::uint64_t>(it->second);
  return o;
}

}  // namespace

Poset generate(const FamilySpec& spec) {
  const std::string& f = spec.family;
  Poset p;
  if (f == "finite_powerset") {
    p = finite_powerset(param(spec, "n"));
  } else if (f == "omega_star_grid") {
    p = omega_star_grid(param(spec, "n"));
  } else if (f == "delta") {
    p = delta(param(spec, "n"));
  } else if (f == "gamma") {
    p = gamma(param(spec, "n"));
  } else if (f == "v") {
    p = v_family(param(spec, "n"));
  } else if (f == "l_alpha") {
    p = l_alpha(param(spec, "a"));
  } else if (f == "m5") {
    p = m5();
  } else if (f == "omega_eta") {
    p = omega_eta(param(spec, "n"));
  } else if (f == "sierpinskisation") {
    p = sierpinskisation(cnf_params(spec), param(spec, "n"), sierp_options(spec)).poset;
  } else if (f == "lattice_sierp") {
    p = lattice_sierp(cnf_params(spec), param(spec, "n"));
  } else if (f == "s_alpha") {
    p = s_alpha(cnf_params(spec), param(spec, "n"), sierp_options(spec));
  } else {
    fail(ErrorCode::UnsupportedParams, "unknown family '" + f + "'");
  }
  return spec.with_bottom ? with_bottom(p) : p;
}

}  // namespace oc
