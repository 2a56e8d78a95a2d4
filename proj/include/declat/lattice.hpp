#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "declat/element_set.hpp"
#include "declat/error.hpp"

namespace declat {

struct LatticeOptions {
  // Validation refuses larger inputs; exhaustive checks are cubic in the size.
  std::size_t max_size = 64;
};

using LabelPair = std::pair<std::string, std::string>;
using IndexPair = std::pair<Elem, Elem>;

struct Triple {
  Elem a = 0;
  Elem b = 0;
  Elem c = 0;
  bool operator==(const Triple&) const = default;
};

// A finite poset given by its strict down-sets: below[i] = { j : j < i }.
struct Poset {
  std::vector<std::string> labels;
  std::vector<ElementSet> below;
  // For posets extracted from a lattice: the lattice index of each point.
  std::vector<Elem> origin;

  std::size_t size() const { return below.size(); }
  bool less(Elem i, Elem j) const { return below[j].contains(i); }
};

// Finite lattice with bottom at index 0. Immutable once built; every table is
// computed during validation.
class Lattice {
 public:
  // `relation` holds pairs (lower, upper); its reflexive-transitive closure is
  // the order. Cover lists and full relations are both accepted here.
  static Lattice from_relation(std::string name, std::vector<std::string> labels,
                               const std::vector<IndexPair>& relation, const LatticeOptions& options = {});

  const std::string& name() const { return name_; }
  std::size_t size() const { return labels_.size(); }
  const std::string& label(Elem e) const { return labels_[e]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Elem> index_of(std::string_view label) const;
  // Position of element `e` in the caller's original label list.
  std::size_t input_index(Elem e) const { return input_index_[e]; }

  static constexpr Elem bottom() { return 0; }
  Elem top() const { return top_; }

  bool leq(Elem a, Elem b) const { return down_[b].contains(a); }
  bool less(Elem a, Elem b) const { return a != b && leq(a, b); }
  bool comparable(Elem a, Elem b) const { return leq(a, b) || leq(b, a); }
  Elem meet(Elem a, Elem b) const { return meet_[a * size() + b]; }
  Elem join(Elem a, Elem b) const { return join_[a * size() + b]; }

  // (a] and [a)
  ElementSet down(Elem a) const { return down_[a]; }
  ElementSet up(Elem a) const { return up_[a]; }
  ElementSet all() const { return ElementSet::all(size()); }

  // Join of a set of elements; the empty join is the bottom.
  Elem join_of(ElementSet s) const;
  // Meet of a set of elements; the empty meet is the top.
  Elem meet_of(ElementSet s) const;
  bool is_down_closed(ElementSet s) const;
  bool is_up_closed(ElementSet s) const;

  // Hasse edges (lower, upper) in lexicographic index order.
  const std::vector<IndexPair>& covers() const { return covers_; }
  ElementSet lower_covers(Elem a) const { return lower_covers_[a]; }

  bool distributive() const { return !distributivity_witness_.has_value(); }
  const std::optional<Triple>& distributivity_witness() const { return distributivity_witness_; }

  Lattice renamed(std::string name) const {
    Lattice copy = *this;
    copy.name_ = std::move(name);
    return copy;
  }

 private:
  Lattice() = default;

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> input_index_;
  std::vector<ElementSet> down_;
  std::vector<ElementSet> up_;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  std::vector<IndexPair> covers_;
  std::vector<ElementSet> lower_covers_;
  Elem top_ = 0;
  std::optional<Triple> distributivity_witness_;
};

Lattice build_from_covers(std::string name, std::vector<std::string> labels, const std::vector<LabelPair>& covers,
                          const LatticeOptions& options = {});
// Same contract, but `leq` lists the full order (reflexive pairs optional).
Lattice build_from_leq(std::string name, std::vector<std::string> labels, const std::vector<LabelPair>& leq,
                       const LatticeOptions& options = {});

struct DistributivityResult {
  bool distributive = true;
  // Lexicographically smallest (a,b,c) with a∧(b∨c) != (a∧b)∨(a∧c).
  std::optional<Triple> witness;
};

DistributivityResult is_distributive(const Lattice& lattice);
// Dual law a∨(b∧c) = (a∨b)∧(a∨c); equivalent to the meet form in any lattice.
DistributivityResult is_distributive_dual(const Lattice& lattice);

bool is_totally_ordered(const Lattice& lattice);

// Join-irreducible elements (exactly one lower cover) with the induced order.
// Throws kNotDistributive.
Poset join_irreducibles(const Lattice& lattice);

void require_distributive(const Lattice& lattice);

}  // namespace declat
