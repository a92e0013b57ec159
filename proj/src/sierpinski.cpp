#include <algorithm>
#include <cmath>
#include <random>

#include "ordercraft/families.hpp"
#include "ordercraft/semilattice.hpp"

namespace oc {

bool OrdinalCNF::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](auto c) { return c == 0; });
}

std::size_t OrdinalCNF::degree() const {
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    if (coeffs[k] != 0) return k;
  }
  return 0;
}

bool OrdinalCNF::is_finite() const { return degree() == 0; }

OrdinalCNF OrdinalCNF::normalized() const {
  OrdinalCNF out = *this;
  while (!out.coeffs.empty() && out.coeffs.back() == 0) out.coeffs.pop_back();
  return out;
}

std::string OrdinalCNF::to_string() const {
  std::string s;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    if (coeffs[k] == 0) continue;
    if (!s.empty()) s += "+";
    if (k == 0) {
      s += std::to_string(coeffs[k]);
      continue;
    }
    s += k == 1 ? "w" : "w^" + std::to_string(k);
    if (coeffs[k] != 1) s += "*" + std::to_string(coeffs[k]);
  }
  return s.empty() ? "0" : s;
}

int compare(const OrdinalCNF& a, const OrdinalCNF& b) {
  const std::size_t len = std::max(a.coeffs.size(), b.coeffs.size());
  for (std::size_t k = len; k-- > 0;) {
    std::uint64_t x = k < a.coeffs.size() ? a.coeffs[k] : 0;
    std::uint64_t y = k < b.coeffs.size() ? b.coeffs[k] : 0;
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

namespace {

void compositions(std::size_t dims, std::uint64_t sum, std::vector<std::uint64_t>& cur,
                  std::vector<OrdinalCNF>& out) {
  if (cur.size() + 1 == dims) {
    cur.push_back(sum);
    out.push_back(OrdinalCNF{cur});
    cur.pop_back();
    return;
  }
  for (std::uint64_t v = 0; v <= sum; ++v) {
    cur.push_back(v);
    compositions(dims, sum - v, cur, out);
    cur.pop_back();
  }
}

std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t t) {
  auto w = static_cast<std::uint64_t>((std::sqrt(8.0 * static_cast<double>(t) + 1.0) - 1.0) / 2.0);
  while (w * (w + 1) / 2 > t) --w;
  while ((w + 1) * (w + 2) / 2 <= t) ++w;
  std::uint64_t b = t - w * (w + 1) / 2;
  return {w - b, b};
}

}  // namespace

std::vector<OrdinalCNF> enumerate_below(const OrdinalCNF& bound_in, std::size_t count) {
  OrdinalCNF bound = bound_in.normalized();
  std::vector<OrdinalCNF> out;
  if (bound.is_zero()) return out;
  if (bound.is_finite()) count = std::min<std::size_t>(count, bound.coeffs[0]);
  const std::size_t dims = bound.coeffs.size();
  for (std::uint64_t w = 0; out.size() < count; ++w) {
    std::vector<OrdinalCNF> level;
    std::vector<std::uint64_t> cur;
    compositions(dims, w, cur, level);
    std::sort(level.begin(), level.end(), [](const auto& a, const auto& b) { return compare(a, b) < 0; });
    for (auto& o : level) {
      if (compare(o, bound) < 0 && out.size() < count) out.push_back(o.normalized());
    }
  }
  return out;
}

std::string scheme_name(SierpScheme s) {
  switch (s) {
    case SierpScheme::ColumnAlternating: return "column-alternating";
    case SierpScheme::Block: return "block";
    case SierpScheme::SeededShuffle: return "seeded-shuffle";
  }
  return "column-alternating";
}

SierpScheme parse_scheme(const std::string& name) {
  if (name == "column-alternating") return SierpScheme::ColumnAlternating;
  if (name == "block") return SierpScheme::Block;
  if (name == "seeded-shuffle") return SierpScheme::SeededShuffle;
  fail(ErrorCode::UnsupportedParams, "unknown sierpinskisation scheme '" + name + "'");
}

Sierpinskisation sierpinskisation(const OrdinalCNF& alpha_in, std::size_t n, SierpOptions opts) {
  OrdinalCNF alpha = alpha_in.normalized();
  if (alpha.is_zero() || alpha.coeffs[0] != 0) {
    fail(ErrorCode::UnsupportedOrdinal, "alpha " + alpha.to_string() + " is not a nonzero multiple of w");
  }
  if (n == 0) fail(ErrorCode::UnsupportedParams, "truncation n must be >= 1");
  OrdinalCNF prime{std::vector<std::uint64_t>(alpha.coeffs.begin() + 1, alpha.coeffs.end())};
  const bool finite = prime.is_finite();
  const std::uint64_t c = finite ? prime.coeffs[0] : 0;

  std::vector<std::pair<std::uint64_t, std::uint64_t>> slots;  // (column position, row)
  slots.reserve(n);
  if (opts.scheme == SierpScheme::SeededShuffle) {
    std::mt19937_64 rng(opts.seed);
    for (std::uint64_t r = 0; slots.size() < n; ++r) {
      std::vector<std::uint64_t> cols(finite ? c : r + 1);
      for (std::uint64_t k = 0; k < cols.size(); ++k) cols[k] = k;
      for (std::size_t k = cols.size(); k > 1; --k) std::swap(cols[k - 1], cols[rng() % k]);
      for (auto col : cols) {
        if (slots.size() < n) slots.emplace_back(col, finite ? r : r - col);
      }
    }
  } else {
    const std::uint64_t b = opts.scheme == SierpScheme::Block ? opts.block : 1;
    for (std::uint64_t x = 0; x < n; ++x) {
      std::uint64_t t = x / b, off = x % b;
      auto [col, r] = finite ? std::pair{t % c, t / c} : cantor_unpair(t);
      slots.emplace_back(col, r * b + off);
    }
  }

  std::uint64_t max_col = 0;
  for (auto& s : slots) max_col = std::max(max_col, s.first);
  Sierpinskisation out;
  out.columns = enumerate_below(prime, max_col + 1);
  for (auto& [col, row] : slots) {
    out.column.push_back(static_cast<std::uint32_t>(col));
    out.row.push_back(static_cast<std::uint32_t>(row));
  }
  auto alpha_less = [&](std::size_t x, std::size_t y) {
    int cmp = compare(out.columns[out.column[x]], out.columns[out.column[y]]);
    return cmp < 0 || (cmp == 0 && out.row[x] < out.row[y]);
  };
  std::vector<std::size_t> by_alpha(n);
  for (std::size_t x = 0; x < n; ++x) by_alpha[x] = x;
  std::sort(by_alpha.begin(), by_alpha.end(), alpha_less);
  out.alpha_rank.resize(n);
  for (std::size_t r = 0; r < n; ++r) out.alpha_rank[by_alpha[r]] = static_cast<std::uint32_t>(r);

  std::vector<Bits> down(n, Bits(n));
  std::vector<std::string> labels;
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < y; ++x) {
      if (out.alpha_rank[x] < out.alpha_rank[y]) down[y].set(x);
    }
    labels.push_back("(" + out.columns[out.column[y]].to_string() + "," + std::to_string(out.row[y]) + ")");
  }
  out.poset = Poset::from_down_sets(std::move(down), std::move(labels), true);

  // Rows increase along the index order inside every column.
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (out.column[x] == out.column[y] && out.row[x] >= out.row[y]) {
        fail(ErrorCode::PreconditionViolated, "enumeration is not monotonic on a column");
      }
    }
  }
  return out;
}

Poset lattice_sierp(const OrdinalCNF& prime_in, std::size_t n) {
  OrdinalCNF prime = prime_in.normalized();
  if (prime.is_zero()) fail(ErrorCode::UnsupportedOrdinal, "alpha_prime must be nonzero");
  if (n == 0) fail(ErrorCode::UnsupportedParams, "truncation n must be >= 1");
  const bool finite = prime.is_finite();
  std::vector<OrdinalCNF> cols = enumerate_below(prime, finite ? prime.coeffs[0] : n);

  struct Cell {
    std::size_t row;
    std::size_t col;
  };
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < cols.size(); ++p) {
      // Infinite column lists start column p at row p so every row is finite.
      if (finite || p <= i) cells.push_back({i, p});
    }
  }
  const std::size_t m = cells.size();
  std::vector<Bits> down(m, Bits(m));
  std::vector<std::string> labels;
  for (std::size_t y = 0; y < m; ++y) {
    for (std::size_t x = 0; x < m; ++x) {
      if (x != y && cells[x].row <= cells[y].row && compare(cols[cells[x].col], cols[cells[y].col]) <= 0) down[y].set(x);
    }
    labels.push_back("(" + std::to_string(cells[y].row) + "," + cols[cells[y].col].to_string() + ")");
  }
  Poset p = Poset::from_down_sets(std::move(down), std::move(labels), true);

  for (Element x = 0; x < m; ++x) {
    for (Element y = x + 1; y < m; ++y) {
      auto j = p.join(x, y);
      std::size_t row = std::max(cells[x].row, cells[y].row);
      std::size_t col = compare(cols[cells[x].col], cols[cells[y].col]) < 0 ? cells[y].col : cells[x].col;
      if (!j || cells[*j].row != row || cells[*j].col != col) {
        fail(ErrorCode::PreconditionViolated, "lattice sierpinskisation window is not join-closed");
      }
    }
  }
  for (std::size_t col = 0; col < cols.size(); ++col) {
    bool present = std::any_of(cells.begin(), cells.end(), [&](const Cell& c) { return c.col == col; });
    if (!present) fail(ErrorCode::PreconditionViolated, "empty vertical line in window");
  }
  return p;
}

Poset s_alpha(const OrdinalCNF& alpha_in, std::size_t n, SierpOptions opts) {
  OrdinalCNF alpha = alpha_in.normalized();
  const std::uint64_t tail = alpha.coeffs.empty() ? 0 : alpha.coeffs[0];
  std::vector<std::string> tail_labels;
  for (std::uint64_t k = 0; k < tail; ++k) tail_labels.push_back("t" + std::to_string(k));
  Poset tail_chain = chain(tail).with_labels(tail_labels);
  if (alpha.is_finite()) return tail_chain;
  OrdinalCNF head = alpha;
  head.coeffs[0] = 0;
  return direct_sum(sierpinskisation(head, n, opts).poset, tail_chain);
}

}  // namespace oc
