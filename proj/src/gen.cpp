#include "declat/gen.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <stdexcept>
#include <tuple>

#include "declat/decomp.hpp"

namespace declat {
namespace {

using Blocks = std::vector<std::vector<Elem>>;

// Groups 0..n-1 by key, blocks in increasing key order.
template <typename Key>
Blocks blocks_by_key(std::size_t n, Key key) {
  std::vector<Elem> order(n);
  for (Elem i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) { return key(a) < key(b); });
  Blocks blocks;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0 || key(order[i]) != key(order[i - 1])) blocks.emplace_back();
    blocks.back().push_back(order[i]);
  }
  return blocks;
}

// Calls f(order) for every arrangement that permutes within blocks;
// order[p] is the original index placed at position p.
template <typename F>
void for_each_block_order(Blocks& blocks, std::vector<Elem>& order, std::size_t bi, F& f) {
  if (bi == blocks.size()) {
    f(order);
    return;
  }
  auto& block = blocks[bi];
  std::sort(block.begin(), block.end());
  do {
    order.insert(order.end(), block.begin(), block.end());
    for_each_block_order(blocks, order, bi + 1, f);
    order.resize(order.size() - block.size());
  } while (std::next_permutation(block.begin(), block.end()));
}

template <typename F>
void for_each_block_order(Blocks blocks, F f) {
  std::vector<Elem> order;
  for_each_block_order(blocks, order, 0, f);
}

std::vector<ElementSet> downsets_of(const Poset& p) {
  const std::size_t k = p.size();
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    const ElementSet s(mask);
    bool closed = true;
    s.for_each([&](Elem i) { closed = closed && p.below[i].subset_of(s); });
    if (closed) out.push_back(s);
  }
  std::stable_sort(out.begin(), out.end(), [](ElementSet a, ElementSet b) { return a.size() < b.size(); });
  return out;
}

std::size_t count_downsets(const Poset& p) { return downsets_of(p).size(); }

std::vector<std::string> letter_labels(std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < k; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

std::string downset_label(const Poset& p, ElementSet s) {
  if (s.empty()) return "0";
  const bool short_labels =
      std::all_of(p.labels.begin(), p.labels.end(), [](const std::string& l) { return l.size() == 1; });
  std::string out;
  s.for_each([&](Elem i) {
    if (!out.empty() && !short_labels) out += '+';
    out += p.labels[i];
  });
  return out;
}

struct DownsetLattice {
  std::vector<ElementSet> downsets;
  Lattice lattice;
};

DownsetLattice build_downset_lattice(const Poset& p, std::string name) {
  auto downsets = downsets_of(p);
  std::vector<std::string> labels;
  labels.reserve(downsets.size());
  for (ElementSet d : downsets) labels.push_back(downset_label(p, d));
  std::vector<IndexPair> covers;
  for (Elem i = 0; i < downsets.size(); ++i)
    for (Elem j = 0; j < downsets.size(); ++j)
      if (downsets[i].proper_subset_of(downsets[j]) && downsets[j].size() == downsets[i].size() + 1)
        covers.emplace_back(i, j);
  Lattice l = Lattice::from_relation(std::move(name), std::move(labels), covers);
  return {std::move(downsets), std::move(l)};
}

// Level-wise generation: every (k+1)-point poset has a maximal point whose
// removal leaves a k-point poset, so extending one representative per class
// by a new maximal point over each of its downsets reaches every class.
std::vector<std::map<PosetCode, Poset>> poset_levels(std::size_t max_points, std::size_t max_downsets) {
  std::vector<std::map<PosetCode, Poset>> levels(1);
  levels[0].emplace(0, Poset{});
  for (std::size_t k = 0; k < max_points; ++k) {
    std::map<PosetCode, Poset> next;
    for (const auto& [code, p] : levels[k]) {
      for (ElementSet d : downsets_of(p)) {
        Poset q = p;
        q.below.push_back(d);
        q.labels = letter_labels(k + 1);
        if (count_downsets(q) > max_downsets) continue;
        next.emplace(poset_canonical_form(q), std::move(q));
      }
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

Poset relabel(const Poset& p, const std::vector<Elem>& order) {
  std::vector<Elem> position(p.size());
  for (Elem i = 0; i < order.size(); ++i) position[order[i]] = i;
  Poset out;
  out.labels = letter_labels(p.size());
  out.below.assign(p.size(), ElementSet{});
  for (Elem i = 0; i < p.size(); ++i) p.below[order[i]].for_each([&](Elem j) { out.below[i].insert(position[j]); });
  return out;
}

// The order minimising the canonical code, applied to p.
Poset canonical_relabel(const Poset& p) {
  const PosetCode target = poset_canonical_form(p);
  const std::size_t k = p.size();
  std::vector<Elem> best;
  auto blocks = blocks_by_key(k, [&](Elem i) {
    std::size_t above = 0;
    for (Elem j = 0; j < k; ++j) above += p.less(i, j);
    return std::make_pair(p.below[i].size(), above);
  });
  for_each_block_order(blocks, [&](const std::vector<Elem>& order) {
    if (!best.empty()) return;
    PosetCode code = 0;
    for (Elem a = 0; a < k; ++a)
      for (Elem b = 0; b < k; ++b)
        if (p.less(order[a], order[b])) code |= PosetCode{1} << (a * k + b);
    if (code == target) best = order;
  });
  return relabel(p, best);
}

CatalogEntry make_entry(Lattice l) {
  CatalogEntry e{l.name(), l};
  e.distributive = l.distributive();
  if (e.distributive) {
    e.decomposable = is_decomposable(l).decomposable;
    e.strongly_projectable = is_strongly_projectable(l);
    e.projectable = is_projectable(l);
  }
  return e;
}

}  // namespace

Poset make_poset(std::vector<std::string> labels, const std::vector<IndexPair>& less) {
  const std::size_t k = labels.size();
  if (k > ElementSet::kCapacity) throw Error(ErrorCode::kTooLarge, "poset");
  Poset p;
  p.labels = std::move(labels);
  p.below.assign(k, ElementSet{});
  for (const auto& [lo, hi] : less) {
    if (lo >= k || hi >= k) throw Error(ErrorCode::kUnknownLabel, "poset index out of range");
    p.below[hi].insert(lo);
  }
  for (Elem m = 0; m < k; ++m)
    for (Elem i = 0; i < k; ++i)
      if (p.below[i].contains(m)) p.below[i] |= p.below[m];
  for (Elem i = 0; i < k; ++i)
    if (p.below[i].contains(i)) throw Error(ErrorCode::kNotAPoset, "cycle through " + p.labels[i]);
  return p;
}

PosetCode poset_canonical_form(const Poset& p) {
  const std::size_t k = p.size();
  if (k > kMaxPosetPoints + 1) throw Error(ErrorCode::kCapExceeded, "canonical form of a " + std::to_string(k) + "-point poset");
  auto blocks = blocks_by_key(k, [&](Elem i) {
    std::size_t above = 0;
    for (Elem j = 0; j < k; ++j) above += p.less(i, j);
    return std::make_pair(p.below[i].size(), above);
  });
  PosetCode best = ~PosetCode{0};
  for_each_block_order(blocks, [&](const std::vector<Elem>& order) {
    PosetCode code = 0;
    for (Elem a = 0; a < k; ++a)
      for (Elem b = 0; b < k; ++b)
        if (p.less(order[a], order[b])) code |= PosetCode{1} << (a * k + b);
    best = std::min(best, code);
  });
  return best;
}

std::vector<PosetSpec> enumerate_posets(std::size_t k) {
  if (k < 1 || k > kMaxPosetPoints) throw Error(ErrorCode::kCapExceeded, "poset size " + std::to_string(k));
  auto levels = poset_levels(k, std::size_t{1} << k);
  std::vector<PosetSpec> out;
  for (const auto& [code, p] : levels[k]) out.push_back(PosetSpec{canonical_relabel(p), code});
  return out;
}

Lattice downset_lattice(const Poset& p, std::string name) {
  if (name.empty()) name = "O(P" + std::to_string(p.size()) + ")";
  return build_downset_lattice(p, std::move(name)).lattice;
}

std::vector<std::uint64_t> lattice_canonical_form(const Lattice& l) {
  const std::size_t n = l.size();
  auto blocks = blocks_by_key(n, [&](Elem i) { return std::make_pair(l.down(i).size(), n - l.up(i).size()); });
  std::vector<std::uint64_t> best;
  std::vector<std::uint64_t> rows(n);
  for_each_block_order(blocks, [&](const std::vector<Elem>& order) {
    for (Elem a = 0; a < n; ++a) {
      std::uint64_t row = 0;
      for (Elem b = 0; b < n; ++b)
        if (l.leq(order[b], order[a])) row |= std::uint64_t{1} << b;
      rows[a] = row;
    }
    if (best.empty() || rows < best) best = rows;
  });
  return best;
}

bool birkhoff_round_trip(const Lattice& l) {
  const Poset j = join_irreducibles(l);
  const auto built = build_downset_lattice(j, l.name());
  if (built.lattice.size() != l.size()) return false;
  std::vector<ElementSet> image(l.size());
  for (Elem x = 0; x < l.size(); ++x)
    for (Elem p = 0; p < j.size(); ++p)
      if (l.leq(j.origin[p], x)) image[x].insert(p);
  for (Elem x = 0; x < l.size(); ++x) {
    if (std::find(built.downsets.begin(), built.downsets.end(), image[x]) == built.downsets.end()) return false;
    for (Elem y = 0; y < l.size(); ++y) {
      if (x != y && image[x] == image[y]) return false;
      if (l.leq(x, y) != image[x].subset_of(image[y])) return false;
    }
  }
  return true;
}

void enumerate_distributive(std::size_t max_elems, const std::function<void(const Lattice&)>& emit) {
  if (max_elems > kMaxEnumeratedLatticeSize)
    throw Error(ErrorCode::kCapExceeded, "max elements " + std::to_string(max_elems) + " above " + std::to_string(kMaxEnumeratedLatticeSize));
  if (max_elems == 0) return;
  // A k-point poset has at least k + 1 downsets.
  auto levels = poset_levels(max_elems - 1, max_elems);
  std::vector<std::tuple<std::size_t, std::size_t, PosetCode, const Poset*>> order;
  for (std::size_t k = 0; k < levels.size(); ++k)
    for (const auto& [code, p] : levels[k]) order.emplace_back(count_downsets(p), k, code, &p);
  std::sort(order.begin(), order.end());
  std::size_t previous_size = 0;
  std::size_t index = 0;
  for (const auto& [size, k, code, p] : order) {
    index = size == previous_size ? index + 1 : 1;
    previous_size = size;
    emit(downset_lattice(canonical_relabel(*p), "D" + std::to_string(size) + "." + std::to_string(index)));
  }
}

std::vector<Lattice> distributive_lattices(std::size_t max_elems) {
  std::vector<Lattice> out;
  enumerate_distributive(max_elems, [&](const Lattice& l) { out.push_back(l); });
  return out;
}

Lattice random_distributive(std::uint64_t seed, std::size_t k) {
  if (k > kMaxRandomPosetPoints) throw Error(ErrorCode::kCapExceeded, "random poset size " + std::to_string(k));
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(0.35);
  std::vector<IndexPair> less;
  for (Elem i = 0; i < k; ++i)
    for (Elem j = i + 1; j < k; ++j)
      if (edge(rng)) less.emplace_back(i, j);
  return downset_lattice(make_poset(letter_labels(k), less),
                         "R" + std::to_string(seed) + "." + std::to_string(k));
}

Lattice chain(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kEmptyLattice, "chain");
  std::vector<std::string> labels{"0"};
  if (n == 3) labels.push_back("m");
  else
    for (std::size_t i = 1; i + 1 < n; ++i) labels.push_back("m" + std::to_string(i));
  if (n > 1) labels.push_back("1");
  std::vector<IndexPair> covers;
  for (Elem i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return Lattice::from_relation("C" + std::to_string(n), std::move(labels), covers);
}

Lattice boolean_lattice(std::size_t atoms) {
  if (atoms == 0 || atoms > 4) throw Error(ErrorCode::kInvalidArgument, "boolean lattice with " + std::to_string(atoms) + " atoms");
  const std::string letters = atoms == 4 ? "wxyz" : "xyz";
  const std::uint64_t full = (std::uint64_t{1} << atoms) - 1;
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = 0; m <= full; ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
  std::vector<std::string> labels;
  for (std::uint64_t m : masks) {
    std::string label;
    if (m == 0) label = "0";
    else if (m == full) label = "1";
    else
      for (std::size_t i = 0; i < atoms; ++i)
        if ((m >> i) & 1U) label += letters[i];
    labels.push_back(label);
  }
  std::vector<IndexPair> covers;
  for (Elem i = 0; i < masks.size(); ++i)
    for (Elem j = 0; j < masks.size(); ++j)
      if ((masks[i] & ~masks[j]) == 0 && std::popcount(masks[j]) == std::popcount(masks[i]) + 1)
        covers.emplace_back(i, j);
  return Lattice::from_relation("B" + std::to_string(atoms), std::move(labels), covers);
}

Lattice chain_product(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0 || m > 9 || n > 9) throw Error(ErrorCode::kInvalidArgument, "chain product dimensions");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) labels.push_back(std::to_string(i) + std::to_string(j));
  std::vector<IndexPair> covers;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i + 1 < m) covers.emplace_back(i * n + j, (i + 1) * n + j);
      if (j + 1 < n) covers.emplace_back(i * n + j, i * n + j + 1);
    }
  }
  return Lattice::from_relation("G" + std::to_string(m) + "x" + std::to_string(n), std::move(labels), covers);
}

Lattice kite() {
  return build_from_covers("K5", {"0", "c", "a", "b", "1"},
                           {{"0", "c"}, {"c", "a"}, {"c", "b"}, {"a", "1"}, {"b", "1"}});
}

Lattice diamond() {
  return build_from_covers("M3", {"0", "x", "y", "z", "1"},
                           {{"0", "x"}, {"0", "y"}, {"0", "z"}, {"x", "1"}, {"y", "1"}, {"z", "1"}});
}

Lattice pentagon() {
  return build_from_covers("N5", {"0", "a", "b", "c", "1"},
                           {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (std::size_t n = 1; n <= 6; ++n) out.push_back(make_entry(chain(n)));
    for (std::size_t k = 1; k <= 4; ++k) out.push_back(make_entry(boolean_lattice(k)));
    for (std::size_t m = 2; m <= 4; ++m)
      for (std::size_t n = m; n <= 4; ++n) out.push_back(make_entry(chain_product(m, n)));
    out.push_back(make_entry(kite()));
    out.push_back(make_entry(diamond()));
    out.push_back(make_entry(pentagon()));
    return out;
  }();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw Error(ErrorCode::kUnknownCatalogName, name);
}

}  // namespace declat
