#pragma once

#include <vector>

#include "ordercraft/map_witness.hpp"
#include "ordercraft/poset.hpp"

namespace oc {

enum class FamilyRole { All, Ideals, Custom };

// Downsets are bitsets over the host's indices; the host travels with the family.
struct DownSetFamily {
  Poset host;
  std::vector<Bits> sets;
  FamilyRole role = FamilyRole::Custom;
};

Bits down_closure(const Poset& p, const Bits& a);
Bits down_closure(const Poset& p, const std::vector<Element>& a);
Bits up_closure(const Poset& p, const Bits& a);
bool is_downset(const Poset& p, const Bits& s);
bool is_up_directed(const Poset& p, const Bits& s);
bool is_ideal(const Poset& p, const Bits& s);

// Canonical order: by size, then by sorted member list.
bool canonical_less(const Bits& a, const Bits& b);
void sort_canonical(std::vector<Bits>& sets);
std::string set_label(const Poset& host, const Bits& s);

DownSetFamily enumerate_downsets(const Poset& p, std::uint64_t cap = kDefaultDownsetCap);
DownSetFamily enumerate_ideals(const Poset& p, std::uint64_t cap = kDefaultDownsetCap);

// Sets ordered by strict inclusion, in the order given, labelled by members.
Poset inclusion_poset(const Poset& host, const std::vector<Bits>& sets);

struct DownsetLattice {
  Poset lattice;
  std::vector<Bits> sets;  // sets[i] is the downset behind lattice element i
};

DownsetLattice downset_lattice_with_sets(const Poset& p, std::size_t cap = kDefaultLatticeCap);
Poset downset_lattice(const Poset& p, std::size_t cap = kDefaultLatticeCap);

// Union closure of a family. The empty union is included unless disabled.
DownsetLattice family_union_lattice(const DownSetFamily& f, bool include_empty = true,
                                    std::size_t cap = kDefaultLatticeCap);

struct MeetIrreducibles {
  std::vector<Element> elements;
  std::vector<Element> successor;  // successor[i] is the unique upper cover of elements[i]
};
MeetIrreducibles completely_meet_irreducibles(const Poset& lattice);

// For x not below y some member J has x outside, y inside.
bool separates(const Poset& p, const DownSetFamily& q);
MapWitness representation_map(const Poset& p, const DownSetFamily& q);

std::vector<Bits> phi_triangle(const Poset& p, Element x, std::size_t cap = kDefaultLatticeCap);

}  // namespace oc
