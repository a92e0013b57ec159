#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ordercraft/map_witness.hpp"
#include "ordercraft/poset.hpp"

namespace oc {

// Row-major n*n operation table; kNone marks a missing join/meet.
using OpTable = std::vector<Element>;

struct StructureReport {
  bool is_join_semilattice = false;
  bool is_meet_semilattice = false;
  bool is_lattice = false;
  bool is_distributive = false;
  bool is_modular = false;
  std::optional<OpTable> join_table;
  std::optional<OpTable> meet_table;
};

OpTable join_table(const Poset& p);  // may contain kNone
OpTable meet_table(const Poset& p);
bool is_join_semilattice(const Poset& p);
bool is_meet_semilattice(const Poset& p);
bool is_lattice(const Poset& p);
StructureReport structure_report(const Poset& p);

// Distributivity through the Birkhoff count |L| = |I(J(L))|; cheaper than the
// triple check on large lattices.
bool is_distributive_lattice(const Poset& p);

std::optional<Element> join_all(const Poset& p, const std::vector<Element>& xs);
std::optional<Element> meet_all(const Poset& p, const std::vector<Element>& xs);

std::vector<Element> join_irreducibles(const Poset& p);
std::vector<Element> join_primes(const Poset& p);

// x is not below the join of any nonempty F inside xs minus x; every F is tried.
bool is_independent(const Poset& p, const std::vector<Element>& xs);
std::optional<std::vector<Element>> find_independent_set(const Poset& p, std::size_t k,
                                                         SearchOptions opts = {});

enum class EmbeddingMode { Order, Join, Meet, Sublattice };

std::optional<MapWitness> embedding_search(const Poset& pattern, const Poset& target, EmbeddingMode mode,
                                           SearchOptions opts = {});

enum class Ops { Join, Meet, Both };
Bits subsemilattice_generated(const Poset& p, const Bits& s, Ops ops);

struct PhiQuotient {
  std::vector<Element> sublattice;  // generated sublattice, ascending indices into T
  std::vector<Element> generators;  // positions of L inside `sublattice`
  MapWitness phi;                   // from induced(T, sublattice) onto B_|L|
  bool generators_join_irreducible = false;
};
PhiQuotient phi_quotient(const Poset& t, const std::vector<Element>& l);

struct DeltaMapReport {
  bool base = false;
  std::array<bool, 6> cond{};  // conditions (i)..(vi)
  bool a = false;
  bool b = false;
  bool injective = false;
  bool conditions_agree = false;
  bool injectivity_criterion_agrees = false;
};

// f is a table over delta(n) into P.
DeltaMapReport check_delta_map(std::size_t n, const Poset& p, const std::vector<Element>& table);

struct FVee {
  MapWitness witness;  // from I0(P) into T; source labels are the downsets
  std::vector<Bits> domain_sets;
  bool criterion1 = false;
  bool criterion2 = false;
  bool table_injective = false;
};
FVee f_vee(const MapWitness& f);

// Nonempty downsets of P ordered by inclusion.
Poset nonempty_downset_lattice(const Poset& p, std::vector<Bits>* sets = nullptr);

// phi is a lattice homomorphism from T onto B_n (bitmask indices).
MapWitness delta_from_hom(const Poset& t, const MapWitness& phi);

}  // namespace oc
