#include "ordercraft/constructions.hpp"
#include "ordercraft/families.hpp"
#include "ordercraft/semilattice.hpp"

namespace oc {

namespace {

// g: Δ_s → Δ_t with (i,j) ↦ (2i,2j) and (i,ω) ↦ (2i,ω).
MapWitness thin_delta(const MapWitness& h, std::size_t t) {
  const std::size_t s = t / 2;
  std::vector<Element> table;
  for (auto [i, j] : delta_coords(s)) {
    const std::uint32_t jj = j == kOmega ? kOmega : 2 * j;
    table.push_back(h.table[delta_index(t, 2 * i, jj)]);
  }
  return make_witness(delta(s), h.target, std::move(table));
}

}  // namespace

Certificate thm8_pipeline(const Poset& t, std::size_t k, PipelineTrace* trace) {
  if (k < 4) fail(ErrorCode::IndependenceTooSmall, "pipeline needs k >= 4");
  if (!is_lattice(t)) fail(ErrorCode::NotALattice, "pipeline needs a lattice");
  if (!is_distributive_lattice(t)) fail(ErrorCode::NotDistributive, "pipeline needs a distributive lattice");
  auto indep = find_independent_set(t, k);
  if (!indep) fail(ErrorCode::IndependenceTooSmall, "no independent set of size " + std::to_string(k));

  PhiQuotient q = phi_quotient(t, *indep);
  MapWitness f = delta_from_hom(q.phi.source, q.phi);
  std::vector<Element> lifted;
  for (Element v : f.table) lifted.push_back(q.sublattice[v]);
  MapWitness ft = make_witness(f.source, t, std::move(lifted));
  if (!ft.certified.meet_preserving) fail(ErrorCode::ConstructionStalled, "lifted map is not meet-preserving");

  const std::size_t dn = k - 1;
  std::vector<Element> columns;
  for (std::uint32_t i = 0; i <= dn; ++i) columns.push_back(ft.table[delta_index(dn, i, kOmega)]);

  std::optional<Certificate> ram;
  std::size_t used_m = 0;
  for (std::size_t m = columns.size(); m >= 3 && !ram; --m) {
    try {
      ram = ramsey_extract(t, columns, m, {{TripleClass::R3, TripleClass::R4, TripleClass::R5}, {}});
      used_m = m;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoMonochromaticSubset) throw;
    }
  }
  if (!ram) fail(ErrorCode::ConstructionStalled, "no monochromatic subset of class R3, R4 or R5");

  MapWitness h = *ram->map;
  std::size_t param = ram->param;
  FVee fv = f_vee(h);
  bool thinned = false;
  if (!fv.table_injective && *ram->classification == Classification::DeltaLike) {
    h = thin_delta(h, param);
    param /= 2;
    fv = f_vee(h);
    thinned = true;
  }
  if (!fv.table_injective) fail(ErrorCode::ConstructionStalled, "f_vee is not injective");

  if (trace) {
    trace->independent = *indep;
    trace->sublattice = q.sublattice;
    trace->columns = columns;
    trace->ramsey_m = used_m;
    trace->thinned = thinned;
  }
  Certificate cert;
  cert.kind = CertKind::SublatticePattern;
  cert.host = t;
  cert.elements = ram->elements;
  cert.classification = ram->classification;
  cert.triple_class = ram->triple_class;
  cert.param = param;
  cert.map = std::move(fv.witness);
  cert.evidence = recheck(cert);
  return cert;
}

}  // namespace oc
