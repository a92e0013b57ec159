#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordercraft/map_witness.hpp"
#include "ordercraft/poset.hpp"

namespace oc {

// Chain of ideals stored from the largest member down.
struct ChainOfDownSets {
  Poset host;
  std::vector<Bits> members;

  // Validates strict containment and the ideal property. `increasing` states
  // the order of the given list.
  static ChainOfDownSets make(Poset host, std::vector<Bits> members, bool increasing = false);
};

enum class CertKind { IndependentSet, DescendingChain, GridMap, RamseyClass, SublatticePattern };
enum class Classification { DeltaLike, GammaLike, VLike, NotWqoEvidence };
enum class TripleClass { R1 = 1, R2, R3, R4, R5 };

std::string kind_name(CertKind k);
CertKind parse_kind(const std::string& s);
std::string classification_name(Classification c);
Classification parse_classification(const std::string& s);

struct Assertion {
  std::string name;
  bool holds = false;
  friend bool operator==(const Assertion&, const Assertion&) = default;
};

struct Certificate {
  CertKind kind = CertKind::IndependentSet;
  Poset host;
  std::vector<Element> elements;  // independent set, descending chain, or monochromatic subset
  std::optional<MapWitness> map;
  std::optional<Classification> classification;
  std::optional<TripleClass> triple_class;
  std::size_t param = 0;  // depth, or the size parameter of the pattern domain
  std::optional<std::size_t> stalled_at;
  std::vector<Assertion> evidence;
};

// Recomputes every assertion for the certificate's kind from its payload.
std::vector<Assertion> recheck(const Certificate& c);
// Passes when the recorded evidence matches a fresh recheck and every entry holds.
bool verify_certificate(const Certificate& c);

// Least ideal containing {x} and J.
Bits join_with_ideal(const Poset& p, Element x, const Bits& j);

struct Separation {
  bool separating = true;
  std::size_t member = 0;  // index of the violating I
  Element x = kNone;
};
Separation is_separating(const ChainOfDownSets& c);

Certificate independent_from_separating(const ChainOfDownSets& c);
Certificate dichotomy_extract(const ChainOfDownSets& c, std::size_t depth);

TripleClass classify_triple(const Poset& p, Element xi, Element xj, Element xk);

struct RamseyOptions {
  std::vector<TripleClass> allowed;  // empty means all classes
  SearchOptions search;
};
Certificate ramsey_extract(const Poset& p, const std::vector<Element>& x, std::size_t m, RamseyOptions opts = {});

struct BadAntichainReport {
  bool condition1 = true;          // each x dominates A or is below all of A but at most k
  bool condition1_cofinal = true;  // each x dominates A or is below a nonempty tail of A
  std::optional<Element> first_failure;
  std::size_t max_exceptions = 0;
  std::size_t remainder_size = 0;
  std::size_t remainder_width = 0;
};
BadAntichainReport check_bad_antichain(const Poset& p, const std::vector<Element>& a, std::size_t k);

struct PipelineTrace {
  std::vector<Element> independent;
  std::vector<Element> sublattice;
  std::vector<Element> columns;  // f(i,w) in T
  std::size_t ramsey_m = 0;
  bool thinned = false;
};
Certificate thm8_pipeline(const Poset& t, std::size_t k, PipelineTrace* trace = nullptr);

// Pattern domain poset behind a classification and size parameter.
Poset pattern_domain(Classification c, std::size_t param);

}  // namespace oc
