#pragma once

#include <vector>

#include "ordercraft/poset.hpp"

namespace oc {

struct MapFlags {
  bool order_preserving = false;
  bool order_embedding = false;
  bool join_preserving = false;
  bool meet_preserving = false;
  bool lattice_hom = false;
  bool injective = false;
  bool surjective = false;

  friend bool operator==(const MapFlags&, const MapFlags&) = default;
};

// Joins/meets are checked on every source pair whose join/meet exists; the
// image join/meet must then exist and match. lattice_hom additionally needs
// the source to be a lattice.
struct MapWitness {
  Poset source;
  Poset target;
  std::vector<Element> table;
  MapFlags certified;
};

MapFlags compute_flags(const Poset& source, const Poset& target, const std::vector<Element>& table);

// Builds a witness whose flags are computed from the table.
MapWitness make_witness(Poset source, Poset target, std::vector<Element> table);

// True when the recorded flags equal a fresh recomputation.
bool reverify(const MapWitness& w);

MapWitness compose(const MapWitness& first, const MapWitness& second);

}  // namespace oc
