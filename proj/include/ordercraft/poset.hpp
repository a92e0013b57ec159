#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ordercraft/error.hpp"

namespace oc {

using Element = std::uint32_t;
inline constexpr Element kNone = ~Element{0};
using Bits = boost::dynamic_bitset<std::uint64_t>;
using Pair = std::pair<Element, Element>;
using CoverList = std::vector<Pair>;

enum class RelationKind { Covers, Leq };

std::vector<Element> members(const Bits& bits);
Bits bits_of(std::size_t n, const std::vector<Element>& elements);

// Finite strict order stored as dense strict down-sets and up-sets.
class Poset {
 public:
  Poset() = default;

  // `down[y]` holds every x with x < y. With `check` the relation is verified
  // to be irreflexive and transitive.
  static Poset from_down_sets(std::vector<Bits> down, std::vector<std::string> labels = {},
                              bool check = true);

  std::size_t size() const { return down_.size(); }
  bool empty() const { return down_.empty(); }

  bool less(Element x, Element y) const { return down_[y].test(x); }
  bool leq(Element x, Element y) const { return x == y || down_[y].test(x); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }

  const Bits& down(Element x) const { return down_[x]; }
  const Bits& up(Element x) const { return up_[x]; }
  Bits down_closed(Element x) const;
  Bits up_closed(Element x) const;
  std::size_t down_count(Element x) const { return down_count_[x]; }
  std::size_t up_count(Element x) const { return up_count_[x]; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Element x) const;
  Poset with_labels(std::vector<std::string> labels) const;

  // Least / greatest member of `s`, if one exists.
  std::optional<Element> least_of(const Bits& s) const;
  std::optional<Element> greatest_of(const Bits& s) const;
  std::optional<Element> join(Element x, Element y) const;
  std::optional<Element> meet(Element x, Element y) const;
  std::optional<Element> least() const;
  std::optional<Element> greatest() const;

  // Linear extension built by removing minimal elements, smallest index first.
  const std::vector<Element>& linear_extension() const { return linear_; }
  bool index_order_is_linear() const { return index_linear_; }

  std::size_t relation_size() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.down_ == b.down_ && a.labels_ == b.labels_;
  }

 private:
  std::vector<Bits> down_;
  std::vector<Bits> up_;
  std::vector<std::uint32_t> down_count_;
  std::vector<std::uint32_t> up_count_;
  std::vector<std::string> labels_;
  std::vector<Element> linear_;
  bool index_linear_ = true;
};

Poset build(std::size_t n, RelationKind kind, const std::vector<Pair>& pairs,
            std::vector<std::string> labels = {});

CoverList transitive_reduction(const Poset& p);
std::vector<Pair> strict_pairs(const Poset& p);

Poset chain(std::size_t n);
Poset antichain(std::size_t n);
Poset dual(const Poset& p);
Poset direct_product(const Poset& a, const Poset& b);
Poset direct_sum(const Poset& a, const Poset& b);
Poset ordinal_sum(const Poset& a, const Poset& b);
Poset lexicographic_sum(const Poset& index, const std::vector<Poset>& parts);
// Subposet on `elements`, in the given order; labels carried over.
Poset induced(const Poset& p, const std::vector<Element>& elements);

std::vector<Element> minimals(const Poset& p);
std::vector<Element> maximals(const Poset& p);
std::vector<Element> minimals_of(const Poset& p, const Bits& s);
std::vector<Element> maximals_of(const Poset& p, const Bits& s);
std::size_t height(const Poset& p);
std::vector<Element> maximum_antichain(const Poset& p);
bool is_antichain(const Poset& p, const std::vector<Element>& xs);
bool is_chain(const Poset& p, const std::vector<Element>& xs);

struct BasicStats {
  std::vector<Element> minimals;
  std::vector<Element> maximals;
  std::size_t height = 0;
  std::size_t width = 0;
  std::vector<Element> linear_extension;
};
BasicStats basic_stats(const Poset& p);

struct SearchOptions {
  std::uint64_t budget = 0;  // 0 means default_search_budget()
  bool force = false;
};

// Order-isomorphism table A -> B, or nothing.
std::optional<std::vector<Element>> is_isomorphic(const Poset& a, const Poset& b,
                                                  SearchOptions opts = {});

}  // namespace oc
