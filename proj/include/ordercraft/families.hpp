#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ordercraft/poset.hpp"

namespace oc {

// Sentinel second coordinate standing for ω; above every finite value.
inline constexpr std::uint32_t kOmega = ~std::uint32_t{0};

struct Coord {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  friend bool operator==(const Coord&, const Coord&) = default;
};

Poset finite_powerset(std::size_t n);
Poset omega_star_grid(std::size_t n);
Poset delta(std::size_t n);
Poset gamma(std::size_t n);
Poset v_family(std::size_t n);
Poset l_alpha(std::size_t a);
Poset m5();
Poset omega_eta(std::size_t n);
Poset with_bottom(const Poset& p);

std::vector<Coord> grid_coords(std::size_t n);
std::vector<Coord> delta_coords(std::size_t n);
std::vector<Coord> gamma_coords(std::size_t n);
Element grid_index(std::size_t n, std::uint32_t i, std::uint32_t j);
Element delta_index(std::size_t n, std::uint32_t i, std::uint32_t j);
Element gamma_index(std::size_t n, std::uint32_t i, std::uint32_t j);
bool delta_leq(Coord a, Coord b);
std::string coord_label(Coord c);

// c_k·ω^k + ... + c_1·ω + c_0, stored low coefficient first.
struct OrdinalCNF {
  std::vector<std::uint64_t> coeffs;

  bool is_zero() const;
  bool is_finite() const;
  std::size_t degree() const;  // index of the leading nonzero coefficient
  std::string to_string() const;
  OrdinalCNF normalized() const;
};
int compare(const OrdinalCNF& a, const OrdinalCNF& b);

// First `count` ordinals below `bound` in a fixed ω-enumeration (by coefficient
// sum, ascending within equal sums).
std::vector<OrdinalCNF> enumerate_below(const OrdinalCNF& bound, std::size_t count);

enum class SierpScheme { ColumnAlternating, Block, SeededShuffle };

struct SierpOptions {
  SierpScheme scheme = SierpScheme::ColumnAlternating;
  std::uint64_t block = 1;
  std::uint64_t seed = 0;
};

std::string scheme_name(SierpScheme s);
SierpScheme parse_scheme(const std::string& name);

struct Sierpinskisation {
  Poset poset;
  std::vector<OrdinalCNF> columns;      // distinct columns in use, ascending
  std::vector<std::uint32_t> column;    // column position of each element
  std::vector<std::uint32_t> row;
  std::vector<std::uint32_t> alpha_rank;  // position in the type-α order
};

// alpha = ω·α′; element x sits at (column, row) and the order is the
// intersection of index order with the α order.
Sierpinskisation sierpinskisation(const OrdinalCNF& alpha, std::size_t n, SierpOptions opts = {});
Poset lattice_sierp(const OrdinalCNF& alpha_prime, std::size_t n);
Poset s_alpha(const OrdinalCNF& alpha, std::size_t n, SierpOptions opts = {});

struct FamilySpec {
  std::string family;
  std::map<std::string, std::int64_t> params;
  bool with_bottom = false;
  std::string scheme;  // sierpinskisation / s_alpha only
};

Poset generate(const FamilySpec& spec);

}  // namespace oc
