#include "declat/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace declat {
namespace {

std::string pair_detail(const std::vector<std::string>& labels, Elem a, Elem b) {
  return "(" + labels[a] + "," + labels[b] + ")";
}

// Greatest element of `s` w.r.t. the order given by `down`, if it exists.
std::optional<Elem> greatest(const std::vector<ElementSet>& down, ElementSet s) {
  std::optional<Elem> found;
  s.for_each([&](Elem e) {
    if (!found && down[e] == s) found = e;
  });
  return found;
}

std::optional<Elem> least(const std::vector<ElementSet>& up, ElementSet s) {
  std::optional<Elem> found;
  s.for_each([&](Elem e) {
    if (!found && up[e] == s) found = e;
  });
  return found;
}

std::vector<std::size_t> index_labels(const std::vector<std::string>& labels,
                                      std::unordered_map<std::string, std::size_t>& out) {
  std::vector<std::size_t> order(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!out.emplace(labels[i], i).second) throw Error(ErrorCode::kDuplicateLabel, labels[i]);
    order[i] = i;
  }
  return order;
}

std::vector<IndexPair> resolve(const std::vector<std::string>& labels, const std::vector<LabelPair>& pairs) {
  std::unordered_map<std::string, std::size_t> index;
  index_labels(labels, index);
  std::vector<IndexPair> out;
  out.reserve(pairs.size());
  for (const auto& [lo, hi] : pairs) {
    auto l = index.find(lo);
    if (l == index.end()) throw Error(ErrorCode::kUnknownLabel, lo);
    auto h = index.find(hi);
    if (h == index.end()) throw Error(ErrorCode::kUnknownLabel, hi);
    out.emplace_back(l->second, h->second);
  }
  return out;
}

void check_lattice_laws(const Lattice& l) {
  const std::size_t n = l.size();
  for (Elem a = 0; a < n; ++a) {
    if (l.meet(a, a) != a || l.join(a, a) != a) throw std::logic_error("idempotency violated");
    for (Elem b = 0; b < n; ++b) {
      if (l.meet(a, b) != l.meet(b, a) || l.join(a, b) != l.join(b, a)) throw std::logic_error("commutativity violated");
      if (l.meet(a, l.join(a, b)) != a || l.join(a, l.meet(a, b)) != a) throw std::logic_error("absorption violated");
      for (Elem c = 0; c < n; ++c) {
        if (l.meet(a, l.meet(b, c)) != l.meet(l.meet(a, b), c)) throw std::logic_error("meet associativity violated");
        if (l.join(a, l.join(b, c)) != l.join(l.join(a, b), c)) throw std::logic_error("join associativity violated");
      }
    }
  }
}

}  // namespace

Lattice Lattice::from_relation(std::string name, std::vector<std::string> labels,
                               const std::vector<IndexPair>& relation, const LatticeOptions& options) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorCode::kEmptyLattice, name);
  const std::size_t cap = std::min(options.max_size, ElementSet::kCapacity);
  if (n > cap) throw Error(ErrorCode::kTooLarge, std::to_string(n) + " > " + std::to_string(cap));
  {
    std::unordered_map<std::string, std::size_t> seen;
    index_labels(labels, seen);
  }

  // Reflexive-transitive closure in input order.
  std::vector<ElementSet> down(n);
  for (Elem i = 0; i < n; ++i) down[i] = ElementSet::single(i);
  for (const auto& [lo, hi] : relation) {
    if (lo >= n || hi >= n) throw Error(ErrorCode::kUnknownLabel, "index out of range");
    down[hi].insert(lo);
  }
  for (Elem k = 0; k < n; ++k)
    for (Elem i = 0; i < n; ++i)
      if (down[i].contains(k)) down[i] |= down[k];

  for (Elem i = 0; i < n; ++i)
    for (Elem j = i + 1; j < n; ++j)
      if (down[i].contains(j) && down[j].contains(i))
        throw Error(ErrorCode::kNotAPoset, "cycle through " + pair_detail(labels, i, j));

  std::optional<Elem> bottom;
  for (Elem i = 0; i < n && !bottom; ++i) {
    bool below_all = true;
    for (Elem j = 0; j < n && below_all; ++j) below_all = down[j].contains(i);
    if (below_all) bottom = i;
  }
  if (!bottom) throw Error(ErrorCode::kNoBottom, name);

  // Relocate the bottom to index 0, keeping the relative order of the rest.
  std::vector<std::size_t> order;
  order.reserve(n);
  order.push_back(*bottom);
  for (Elem i = 0; i < n; ++i)
    if (i != *bottom) order.push_back(i);
  std::vector<Elem> position(n);
  for (Elem i = 0; i < n; ++i) position[order[i]] = i;

  Lattice l;
  l.name_ = std::move(name);
  l.input_index_ = order;
  l.labels_.resize(n);
  l.down_.resize(n);
  l.up_.assign(n, ElementSet{});
  for (Elem i = 0; i < n; ++i) {
    l.labels_[i] = labels[order[i]];
    down[order[i]].for_each([&](Elem j) { l.down_[i].insert(position[j]); });
  }
  for (Elem i = 0; i < n; ++i) l.down_[i].for_each([&](Elem j) { l.up_[j].insert(i); });

  l.meet_.resize(n * n);
  l.join_.resize(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a; b < n; ++b) {
      auto m = greatest(l.down_, l.down_[a] & l.down_[b]);
      if (!m) throw Error(ErrorCode::kNoMeet, pair_detail(l.labels_, a, b));
      l.meet_[a * n + b] = l.meet_[b * n + a] = *m;
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a; b < n; ++b) {
      auto j = least(l.up_, l.up_[a] & l.up_[b]);
      if (!j) throw Error(ErrorCode::kNoJoin, pair_detail(l.labels_, a, b));
      l.join_[a * n + b] = l.join_[b * n + a] = *j;
    }
  }
  check_lattice_laws(l);

  for (Elem i = 0; i < n; ++i)
    if (l.up_[i] == ElementSet::single(i)) l.top_ = i;

  l.lower_covers_.assign(n, ElementSet{});
  for (Elem hi = 0; hi < n; ++hi) {
    ElementSet strictly_below = l.down_[hi];
    strictly_below.erase(hi);
    strictly_below.for_each([&](Elem lo) {
      ElementSet between = strictly_below & l.up_[lo];
      between.erase(lo);
      if (between.empty()) l.lower_covers_[hi].insert(lo);
    });
  }
  for (Elem lo = 0; lo < n; ++lo)
    for (Elem hi = 0; hi < n; ++hi)
      if (l.lower_covers_[hi].contains(lo)) l.covers_.emplace_back(lo, hi);

  l.distributivity_witness_ = is_distributive(l).witness;
  return l;
}

std::optional<Elem> Lattice::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Elem>(it - labels_.begin());
}

Elem Lattice::join_of(ElementSet s) const {
  Elem acc = bottom();
  s.for_each([&](Elem e) { acc = join(acc, e); });
  return acc;
}

Elem Lattice::meet_of(ElementSet s) const {
  Elem acc = top();
  s.for_each([&](Elem e) { acc = meet(acc, e); });
  return acc;
}

bool Lattice::is_down_closed(ElementSet s) const {
  bool ok = true;
  s.for_each([&](Elem e) { ok = ok && down_[e].subset_of(s); });
  return ok;
}

bool Lattice::is_up_closed(ElementSet s) const {
  bool ok = true;
  s.for_each([&](Elem e) { ok = ok && up_[e].subset_of(s); });
  return ok;
}

Lattice build_from_covers(std::string name, std::vector<std::string> labels, const std::vector<LabelPair>& covers,
                          const LatticeOptions& options) {
  if (labels.empty()) throw Error(ErrorCode::kEmptyLattice, name);
  auto relation = resolve(labels, covers);
  return Lattice::from_relation(std::move(name), std::move(labels), relation, options);
}

Lattice build_from_leq(std::string name, std::vector<std::string> labels, const std::vector<LabelPair>& leq,
                       const LatticeOptions& options) {
  return build_from_covers(std::move(name), std::move(labels), leq, options);
}

DistributivityResult is_distributive(const Lattice& l) {
  const std::size_t n = l.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) return {false, Triple{a, b, c}};
  return {};
}

DistributivityResult is_distributive_dual(const Lattice& l) {
  const std::size_t n = l.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (l.join(a, l.meet(b, c)) != l.meet(l.join(a, b), l.join(a, c))) return {false, Triple{a, b, c}};
  return {};
}

bool is_totally_ordered(const Lattice& l) {
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = a + 1; b < l.size(); ++b)
      if (!l.comparable(a, b)) return false;
  return true;
}

void require_distributive(const Lattice& l) {
  if (!l.distributive()) {
    const Triple& w = *l.distributivity_witness();
    throw Error(ErrorCode::kNotDistributive,
                l.name() + " at (" + l.label(w.a) + "," + l.label(w.b) + "," + l.label(w.c) + ")");
  }
}

Poset join_irreducibles(const Lattice& l) {
  require_distributive(l);
  Poset p;
  for (Elem x = 1; x < l.size(); ++x) {
    if (l.lower_covers(x).size() == 1) {
      p.origin.push_back(x);
      p.labels.push_back(l.label(x));
    }
  }
  p.below.assign(p.origin.size(), ElementSet{});
  for (std::size_t i = 0; i < p.origin.size(); ++i)
    for (std::size_t j = 0; j < p.origin.size(); ++j)
      if (l.less(p.origin[j], p.origin[i])) p.below[i].insert(j);
  return p;
}

}  // namespace declat
