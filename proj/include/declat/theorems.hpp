#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "declat/lattice.hpp"

namespace declat {

// How the conditions of one quantified instance must relate.
enum class Relation {
  kEquivalent,  // all conditions equal
  kImplies,     // first condition implies every other one
  kAllTrue,     // every condition holds (equalities of sets)
};

struct Condition {
  std::string label;
  bool value = false;
};

// One quantified object (an ideal, an element, a pair, or the whole lattice)
// with the truth value of every condition evaluated on it.
struct Instance {
  std::string scope;
  std::vector<std::pair<std::string, std::string>> bindings;
  Relation relation = Relation::kEquivalent;
  std::vector<Condition> conditions;

  bool consistent() const;
  std::optional<bool> value(const std::string& label) const;
};

enum class VerdictStatus { kHolds, kFails, kInapplicable };

struct TheoremVerdict {
  std::string theorem_id;
  std::string lattice;
  VerdictStatus status = VerdictStatus::kHolds;
  bool holds = false;
  bool degenerate = false;
  std::string note;
  std::vector<Instance> instances;
  // First inconsistent instance in evaluation order.
  std::optional<Instance> counterexample;
  std::size_t failing_instances = 0;
};

enum class Guard { kDistributive, kDecomposable };

// Two readings of "maximal chain of values".
enum class ChainReading {
  kMaximalAmongValueChains,  // no value can be added to the chain
  kMaximalInIdealLattice,    // chain ∪ {L} is a maximal chain of Ide(L)
};

struct CheckOptions {
  bool force = false;
  ChainReading chain_reading = ChainReading::kMaximalAmongValueChains;
  // Per-subset quantifiers (ultrafilter and polar-union lemmas) are skipped
  // above this many nonzero elements.
  std::size_t max_subset_universe = 20;
};

struct CheckContext;

struct CheckerEntry {
  std::string id;
  std::string statement;
  Guard guard = Guard::kDecomposable;
  std::string domain;
  bool degenerate = false;
  std::string note;
  std::vector<std::string> conditions;
  std::function<std::vector<Instance>(const CheckContext&)> evaluate;
};

const std::vector<CheckerEntry>& registry();
// Throws kUnknownTheoremId.
const CheckerEntry& registry_entry(const std::string& id);

// Throws kUnknownTheoremId.
TheoremVerdict check(const Lattice& lattice, const std::string& theorem_id, const CheckOptions& options = {});
std::vector<TheoremVerdict> check_all(const Lattice& lattice, const CheckOptions& options = {});

// One direction of a registry equivalence, e.g. "T3.1:(2)=>(1)" or
// "C3.3:(3)zero-prime=>chain".
struct Implication {
  std::string theorem_id;
  std::string premise;
  std::string conclusion;
};

// Throws kUnknownImplicationId.
Implication parse_implication(const std::string& text);

struct ImplicationFailure {
  Lattice lattice;
  Instance witness;
};

// First instance of `lattice` where the premise holds and the conclusion fails,
// evaluated without the decomposability guard.
std::optional<Instance> find_implication_failure(const Lattice& lattice, const Implication& implication,
                                                 const CheckOptions& options = {});

// Every distributive lattice with at most max_n elements falsifying the
// implication. Throws kUnknownImplicationId, kCapExceeded.
std::vector<ImplicationFailure> search_counterexamples(const std::string& implication_id, std::size_t max_n,
                                                       const CheckOptions& options = {});

std::string_view to_string(VerdictStatus status);

}  // namespace declat
