#include <algorithm>

#include "ordercraft/constructions.hpp"
#include "ordercraft/families.hpp"

namespace oc {

namespace {

Element meet_of(const Poset& p, Element x, Element y) {
  auto m = p.meet(x, y);
  if (!m) fail(ErrorCode::NotMeetSemilattice, "meet of " + p.label(x) + " and " + p.label(y) + " is missing");
  return *m;
}

struct MonoSearch {
  const std::vector<std::vector<std::vector<TripleClass>>>& cls;
  const std::vector<TripleClass>& allowed;
  std::size_t n;
  std::size_t m;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<std::size_t> chosen;
  std::optional<TripleClass> colour;

  bool admissible(TripleClass c) const {
    return allowed.empty() || std::find(allowed.begin(), allowed.end(), c) != allowed.end();
  }

  bool run(std::size_t from) {
    if (chosen.size() == m) return true;
    if (++nodes > budget) fail(ErrorCode::BudgetExceeded, "monochromatic search exceeded " + std::to_string(budget) + " nodes");
    for (std::size_t l = from; l + (m - chosen.size()) <= n; ++l) {
      auto saved = colour;
      bool ok = true;
      for (std::size_t a = 0; a < chosen.size() && ok; ++a) {
        for (std::size_t b = a + 1; b < chosen.size() && ok; ++b) {
          TripleClass c = cls[chosen[a]][chosen[b]][l];
          if (!colour) {
            if (!admissible(c)) ok = false;
            else colour = c;
          } else if (*colour != c) {
            ok = false;
          }
        }
      }
      if (ok) {
        chosen.push_back(l);
        if (run(l + 1)) return true;
        chosen.pop_back();
      }
      colour = saved;
    }
    return false;
  }
};

}  // namespace

TripleClass classify_triple(const Poset& p, Element xi, Element xj, Element xk) {
  const Element a = meet_of(p, xi, xj), b = meet_of(p, xi, xk), c = meet_of(p, xj, xk);
  if (!p.comparable(a, b)) return TripleClass::R1;
  if (p.less(b, a)) return TripleClass::R2;
  if (p.less(a, b)) return TripleClass::R3;
  return p.less(a, c) ? TripleClass::R5 : TripleClass::R4;
}

Poset pattern_domain(Classification c, std::size_t param) {
  switch (c) {
    case Classification::DeltaLike: return delta(param);
    case Classification::GammaLike: return gamma(param);
    case Classification::VLike: return v_family(param);
    case Classification::NotWqoEvidence: break;
  }
  fail(ErrorCode::PreconditionViolated, "no pattern domain for NotWqoEvidence");
}

Certificate ramsey_extract(const Poset& p, const std::vector<Element>& x, std::size_t m, RamseyOptions opts) {
  if (m < 3) fail(ErrorCode::PreconditionViolated, "ramsey_extract needs m >= 3");
  for (Element e : x) {
    if (e >= p.size()) fail(ErrorCode::IndexOutOfRange, "element " + std::to_string(e));
  }
  if (!is_antichain(p, x) || std::adjacent_find(x.begin(), x.end()) != x.end()) fail(ErrorCode::NotAntichain, "X is not an antichain");
  const std::size_t n = x.size();
  if (n < m) fail(ErrorCode::NoMonochromaticSubset, "X has " + std::to_string(n) + " < " + std::to_string(m) + " elements");

  std::vector<std::vector<std::vector<TripleClass>>> cls(n, std::vector<std::vector<TripleClass>>(n, std::vector<TripleClass>(n, TripleClass::R1)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) cls[i][j][k] = classify_triple(p, x[i], x[j], x[k]);
    }
  }
  MonoSearch s{cls, opts.allowed, n, m, opts.search.budget ? opts.search.budget : default_search_budget(), 0, {}, {}};
  if (!s.run(0)) fail(ErrorCode::NoMonochromaticSubset, "no monochromatic " + std::to_string(m) + "-subset");

  Certificate cert;
  cert.kind = CertKind::RamseyClass;
  cert.host = p;
  for (std::size_t i : s.chosen) cert.elements.push_back(x[i]);
  cert.triple_class = s.colour;
  const auto& h = cert.elements;
  switch (*s.colour) {
    case TripleClass::R1:
    case TripleClass::R2:
      cert.classification = Classification::NotWqoEvidence;
      break;
    case TripleClass::R3: {
      // Even positions only; the odd ones separate consecutive meets.
      const std::size_t t = m / 2;
      std::vector<Element> even;
      for (std::size_t i = 0; i < t; ++i) even.push_back(h[2 * i]);
      cert.classification = Classification::DeltaLike;
      cert.param = t - 1;
      std::vector<Element> table;
      for (auto [i, j] : delta_coords(cert.param)) table.push_back(j == kOmega ? even[i] : meet_of(p, even[i], even[j]));
      cert.map = make_witness(delta(cert.param), p, std::move(table));
      break;
    }
    case TripleClass::R4: {
      cert.classification = Classification::VLike;
      cert.param = m;
      std::vector<Element> table{meet_of(p, h[0], h[1])};
      table.insert(table.end(), h.begin(), h.end());
      cert.map = make_witness(v_family(m), p, std::move(table));
      break;
    }
    case TripleClass::R5: {
      cert.classification = Classification::GammaLike;
      cert.param = m - 1;
      std::vector<Element> table;
      for (auto [i, j] : gamma_coords(cert.param)) table.push_back(j == kOmega ? h[i] : meet_of(p, h[i], h[j]));
      cert.map = make_witness(gamma(cert.param), p, std::move(table));
      break;
    }
  }
  cert.evidence = recheck(cert);
  return cert;
}

}  // namespace oc
