#pragma once

#include <utility>
#include <vector>

#include "declat/lattice.hpp"

namespace declat {

// An ideal of a finite lattice. Every such ideal is principal, so the
// generator (the maximum of the carrier) is cached alongside the carrier.
// Equality is carrier equality.
struct Ideal {
  ElementSet carrier;
  Elem generator = 0;

  bool contains(Elem e) const { return carrier.contains(e); }
  bool subset_of(const Ideal& other) const { return carrier.subset_of(other.carrier); }
  bool operator==(const Ideal& other) const { return carrier == other.carrier; }
};

// Nonempty, meet-closed up-set avoiding 0. Finite filters are principal;
// `least` is their minimum.
struct Filter {
  ElementSet carrier;
  Elem least = 0;

  bool operator==(const Filter& other) const { return carrier == other.carrier; }
};

bool is_ideal(const Lattice& lattice, ElementSet carrier);
bool is_filter(const Lattice& lattice, ElementSet carrier);

// Validates `carrier` and asserts principality. Throws kInvalidArgument.
Ideal make_ideal(const Lattice& lattice, ElementSet carrier);
Ideal principal_ideal(const Lattice& lattice, Elem a);
Ideal zero_ideal(const Lattice& lattice);
Ideal whole_ideal(const Lattice& lattice);
bool is_proper(const Lattice& lattice, const Ideal& ideal);
bool comparable(const Ideal& a, const Ideal& b);

// Intersection of a family of ideals; the empty family intersects to L.
Ideal intersect_all(const Lattice& lattice, const std::vector<Ideal>& family);
bool contains_ideal(const std::vector<Ideal>& family, const Ideal& ideal);

// Ide(L) ordered by generator index. Throws kNotDistributive.
std::vector<Ideal> enumerate_ideals(const Lattice& lattice);
Ideal ideal_meet(const Lattice& lattice, const Ideal& a, const Ideal& b);
// { x ∨ y : x ∈ a, y ∈ b }
Ideal ideal_join(const Lattice& lattice, const Ideal& a, const Ideal& b);

bool is_prime(const Lattice& lattice, const Ideal& p);
std::vector<Ideal> primes(const Lattice& lattice);
std::vector<Ideal> min_primes(const Lattice& lattice);

// Maximal ideals omitting x. Throws kBottomHasNoValue for x = 0.
std::vector<Ideal> values_of(const Lattice& lattice, Elem x);
// V(L): ideals that are a value of some x > 0.
std::vector<Ideal> regular_ideals(const Lattice& lattice);
// Proper ideals that are not the intersection of two strictly larger ideals.
std::vector<Ideal> meet_irreducible_ideals(const Lattice& lattice);
// Proper ideals M with M ⊂ M*.
std::vector<Ideal> ideals_below_their_cover(const Lattice& lattice);
// Intersection of all ideals strictly containing m. Throws kMStarUndefined for m = L.
Ideal m_star(const Lattice& lattice, const Ideal& m);

// S(L): ideals that are the unique value of some x > 0.
std::vector<Ideal> special_ideals(const Lattice& lattice);
bool is_special(const Lattice& lattice, const Ideal& m);
bool is_special_element(const Lattice& lattice, Elem x);

// Whether every finite family {I_k} with ⋂ I_k ⊆ m has some I_k ⊆ m.
//
// Reduction: the empty family intersects to L, so the condition forces m ≠ L.
// For nonempty families, induct on size: if ⋂_{k<n} I_k ∩ I_n ⊆ m, the pair
// case gives I_n ⊆ m or ⋂_{k<n} I_k ⊆ m, and the latter is an ideal. Ide(L) is
// finite, so arbitrary families reduce to finite ones. Only pairs are scanned.
bool satisfies_family_condition(const Lattice& lattice, const Ideal& m);
// Whether some x ∈ m* \ m has m as its unique value (false when m* is undefined).
bool is_unique_value_of_cover_element(const Lattice& lattice, const Ideal& m);

// A^⊥ = { x : x ∧ a = 0 for every a ∈ A }. Throws kEmptySet.
Ideal polar(const Lattice& lattice, ElementSet a);
Ideal double_polar(const Lattice& lattice, ElementSet a);
// P(L) = { I : I = I^⊥⊥ }
std::vector<Ideal> polar_ideals(const Lattice& lattice);

std::vector<Filter> filters(const Lattice& lattice);
std::vector<Filter> ultrafilters(const Lattice& lattice);

// Intersection of the minimal primes contained in prime p. Throws kNotPrime.
Ideal s_p(const Lattice& lattice, const Ideal& p);

struct SpectrumReport {
  std::vector<Ideal> all_ideals;
  std::vector<Ideal> primes;
  std::vector<Ideal> min_primes;
  std::vector<Ideal> values;
  std::vector<Ideal> specials;
  std::vector<Ideal> polar_ideals;
  std::vector<Filter> ultrafilters;
  // Val(x) for every x > 0, by element index.
  std::vector<std::pair<Elem, std::vector<Ideal>>> val_of;
  // S_P for every prime P, in prime order.
  std::vector<std::pair<Ideal, Ideal>> s_p;
};

SpectrumReport spectrum(const Lattice& lattice);

}  // namespace declat
