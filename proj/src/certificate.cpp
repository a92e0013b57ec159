#include <algorithm>
#include <array>

#include "ordercraft/constructions.hpp"
#include "ordercraft/families.hpp"
#include "ordercraft/semilattice.hpp"

namespace oc {

namespace {

constexpr std::array<const char*, 5> kKindNames{"IndependentSet", "DescendingChain", "GridMap", "RamseyClass", "SublatticePattern"};
constexpr std::array<const char*, 4> kClassNames{"DeltaLike", "GammaLike", "VLike", "NotWqoEvidence"};

bool in_range(const Certificate& c) {
  return std::all_of(c.elements.begin(), c.elements.end(), [&](Element e) { return e < c.host.size(); });
}

bool distinct(std::vector<Element> xs) {
  std::sort(xs.begin(), xs.end());
  return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
}

std::optional<Classification> expected_class(TripleClass t) {
  switch (t) {
    case TripleClass::R1:
    case TripleClass::R2: return Classification::NotWqoEvidence;
    case TripleClass::R3: return Classification::DeltaLike;
    case TripleClass::R4: return Classification::VLike;
    case TripleClass::R5: return Classification::GammaLike;
  }
  return std::nullopt;
}

void ramsey_evidence(const Certificate& c, std::vector<Assertion>& out) {
  const auto& h = c.elements;
  const bool ok_range = in_range(c);
  out.push_back({"antichain", ok_range && distinct(h) && is_antichain(c.host, h)});
  bool mono = ok_range && c.triple_class.has_value() && h.size() >= 3;
  for (std::size_t i = 0; mono && i < h.size(); ++i) {
    for (std::size_t j = i + 1; mono && j < h.size(); ++j) {
      for (std::size_t k = j + 1; mono && k < h.size(); ++k) {
        auto mi = c.host.meet(h[i], h[j]), mj = c.host.meet(h[i], h[k]), mk = c.host.meet(h[j], h[k]);
        mono = mi && mj && mk && classify_triple(c.host, h[i], h[j], h[k]) == *c.triple_class;
      }
    }
  }
  out.push_back({"monochromatic", mono});
  const bool consistent = c.triple_class && c.classification && expected_class(*c.triple_class) == c.classification;
  out.push_back({"classification_consistent", consistent});
  if (!c.classification || *c.classification == Classification::NotWqoEvidence) return;

  const bool has_map = c.map.has_value() && c.map->target == c.host;
  MapFlags f = has_map ? compute_flags(c.map->source, c.map->target, c.map->table) : MapFlags{};
  out.push_back({"map_meet_preserving", has_map && f.meet_preserving});
  out.push_back({"map_injective", has_map && f.injective});
  out.push_back({"domain_matches_class", has_map && c.map->source == pattern_domain(*c.classification, c.param)});
  bool gens = has_map && out.back().holds;
  if (gens) {
    const auto& t = c.map->table;
    switch (*c.classification) {
      case Classification::DeltaLike:
        gens = h.size() >= 2 * (c.param + 1);
        for (std::uint32_t i = 0; gens && i <= c.param; ++i) gens = t[delta_index(c.param, i, kOmega)] == h[2 * i];
        break;
      case Classification::GammaLike:
        gens = h.size() == c.param + 1;
        for (std::uint32_t i = 0; gens && i <= c.param; ++i) gens = t[gamma_index(c.param, i, kOmega)] == h[i];
        break;
      case Classification::VLike:
        gens = h.size() == c.param && std::equal(h.begin(), h.end(), t.begin() + 1);
        break;
      case Classification::NotWqoEvidence: break;
    }
  }
  out.push_back({"generators_from_subset", gens});
}

}  // namespace

std::string kind_name(CertKind k) { return kKindNames[static_cast<std::size_t>(k)]; }

CertKind parse_kind(const std::string& s) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (s == kKindNames[i]) return static_cast<CertKind>(i);
  }
  fail(ErrorCode::InvalidInput, "unknown certificate kind '" + s + "'");
}

std::string classification_name(Classification c) { return kClassNames[static_cast<std::size_t>(c)]; }

Classification parse_classification(const std::string& s) {
  for (std::size_t i = 0; i < kClassNames.size(); ++i) {
    if (s == kClassNames[i]) return static_cast<Classification>(i);
  }
  fail(ErrorCode::InvalidInput, "unknown classification '" + s + "'");
}

std::vector<Assertion> recheck(const Certificate& c) {
  std::vector<Assertion> out;
  const bool ok_range = in_range(c);
  switch (c.kind) {
    case CertKind::IndependentSet:
      out.push_back({"independent", ok_range && is_independent(c.host, c.elements)});
      out.push_back({"distinct", ok_range && distinct(c.elements)});
      break;
    case CertKind::DescendingChain: {
      bool desc = ok_range && !c.elements.empty();
      for (std::size_t i = 1; desc && i < c.elements.size(); ++i) desc = c.host.less(c.elements[i], c.elements[i - 1]);
      out.push_back({"strictly_descending", desc});
      out.push_back({"length_matches_depth", c.elements.size() == c.param});
      break;
    }
    case CertKind::GridMap: {
      const bool has_map = c.map.has_value() && c.map->target == c.host;
      MapFlags f = has_map ? compute_flags(c.map->source, c.map->target, c.map->table) : MapFlags{};
      out.push_back({"source_is_grid", has_map && c.map->source == omega_star_grid(c.param)});
      out.push_back({"join_preserving", has_map && f.join_preserving});
      out.push_back({"injective", has_map && f.injective});
      break;
    }
    case CertKind::RamseyClass:
      ramsey_evidence(c, out);
      break;
    case CertKind::SublatticePattern: {
      const bool has_map = c.map.has_value() && c.map->target == c.host;
      MapFlags f = has_map ? compute_flags(c.map->source, c.map->target, c.map->table) : MapFlags{};
      out.push_back({"lattice_hom", has_map && f.lattice_hom});
      out.push_back({"injective", has_map && f.injective});
      bool shape = has_map && c.classification && *c.classification != Classification::NotWqoEvidence;
      shape = shape && c.map->source == nonempty_downset_lattice(pattern_domain(*c.classification, c.param));
      out.push_back({"domain_is_pattern", shape});
      break;
    }
  }
  return out;
}

bool verify_certificate(const Certificate& c) {
  auto fresh = recheck(c);
  if (fresh != c.evidence) return false;
  return std::all_of(fresh.begin(), fresh.end(), [](const Assertion& a) { return a.holds; });
}

}  // namespace oc
