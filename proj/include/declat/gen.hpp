#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "declat/lattice.hpp"

namespace declat {

inline constexpr std::size_t kMaxPosetPoints = 7;
inline constexpr std::size_t kMaxEnumeratedLatticeSize = 9;
inline constexpr std::size_t kMaxRandomPosetPoints = 6;  // 2^6 downsets fit the element cap

// Strict-order bit matrix: bit (i * k + j) is set iff i < j.
using PosetCode = std::uint64_t;

struct PosetSpec {
  Poset poset;
  PosetCode canonical = 0;
};

// Builds a poset from (lower, upper) pairs, closing transitively.
// Throws kNotAPoset on cycles.
Poset make_poset(std::vector<std::string> labels, const std::vector<IndexPair>& less);

// Minimum relation code over every relabelling that lists points in
// nondecreasing (|down-set|, |up-set|) order. Equal for isomorphic posets.
PosetCode poset_canonical_form(const Poset& poset);

// One representative per isomorphism class of k-point posets. Throws kCapExceeded.
std::vector<PosetSpec> enumerate_posets(std::size_t k);

// Lattice of down-closed subsets ordered by inclusion; bottom is the empty set.
Lattice downset_lattice(const Poset& poset, std::string name = "");

// Canonical form of the order relation computed directly on the lattice
// (row i lists the indices below i after relabelling); independent of posets.
std::vector<std::uint64_t> lattice_canonical_form(const Lattice& lattice);

// Checks downset_lattice(join_irreducibles(L)) ≅ L through the explicit map
// x ↦ { j join-irreducible : j ≤ x }.
bool birkhoff_round_trip(const Lattice& lattice);

// Streams one lattice per isomorphism class of distributive lattices with at
// most max_elems elements, ordered by size and then canonical poset code.
// Throws kCapExceeded when max_elems > kMaxEnumeratedLatticeSize.
void enumerate_distributive(std::size_t max_elems, const std::function<void(const Lattice&)>& emit);
std::vector<Lattice> distributive_lattices(std::size_t max_elems);

// Downset lattice of a pseudo-random k-point poset, deterministic in seed.
// Throws kCapExceeded when k > kMaxRandomPosetPoints.
Lattice random_distributive(std::uint64_t seed, std::size_t k);

Lattice chain(std::size_t n);
Lattice boolean_lattice(std::size_t atoms);
Lattice chain_product(std::size_t m, std::size_t n);
Lattice kite();
Lattice diamond();
Lattice pentagon();

struct CatalogEntry {
  std::string name;
  Lattice lattice;
  bool distributive = false;
  bool decomposable = false;
  bool strongly_projectable = false;
  bool projectable = false;
};

// C1..C6, B1..B4, G{m}x{n} for 2 <= m <= n <= 4, K5, M3, N5.
const std::vector<CatalogEntry>& catalog();
// Throws kUnknownCatalogName.
const CatalogEntry& catalog_entry(const std::string& name);

}  // namespace declat
