#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "declat/ideals.hpp"
#include "declat/lattice.hpp"

namespace declat {

// Splitting of an incomparable pair (a, b):
//   a = abar ∨ (a∧b),  b = bbar ∨ (a∧b),  abar ∧ bbar = 0.
struct DecompositionWitness {
  Elem a = 0;
  Elem b = 0;
  Elem abar = 0;
  Elem bbar = 0;
};

struct DecomposabilityResult {
  bool decomposable = true;
  // One witness per incomparable pair a < b (index order), on success.
  std::vector<DecompositionWitness> witnesses;
  // Lexicographically smallest pair without a witness, on failure.
  std::optional<IndexPair> failing_pair;
};

// Throws kNotDistributive.
DecomposabilityResult is_decomposable(const Lattice& lattice);
// Smallest witness for one pair (either order), scanning abar then bbar by index.
std::optional<DecompositionWitness> find_witness(const Lattice& lattice, Elem a, Elem b);

// L = (a] ∨ a^⊥ for every a.
bool is_strongly_projectable(const Lattice& lattice);
// L = x^⊥ ∨ x^⊥⊥ for every x.
bool is_projectable(const Lattice& lattice);

// Given pairwise incomparable primes Q_1..Q_n (n >= 2) none containing a,
// returns a_1..a_n with a_i ∈ (⋂_{j≠i} Q_j) \ Q_i, 0 < a_i < a, and
// a_i ∧ a_j = 0 for i ≠ j. Built by induction on n: the n = 2 case meets a
// with a splitting of a separating pair; for n > 2 the instances on
// Q_1..Q_{n-1} and Q_2..Q_n are combined and the ends patched with a fresh
// n = 2 instance on Q_1, Q_n.
// Throws kNotDecomposable, kNotPrime, kNotIncomparable, kElementInsidePrime,
// kInvalidArgument (n < 2).
std::vector<Elem> disjointify(const Lattice& lattice, const std::vector<Ideal>& primes, Elem a);

struct SpecialDecomposition {
  Elem element = 0;
  std::vector<Elem> parts;
  // value_map[i] is the unique value of parts[i].
  std::vector<Ideal> value_map;
};

// a = ⋁ parts, parts pairwise disjoint, each part special with a distinct value.
// Throws kNotDecomposable, kBottomElement.
SpecialDecomposition decompose_special(const Lattice& lattice, Elem a);

}  // namespace declat
