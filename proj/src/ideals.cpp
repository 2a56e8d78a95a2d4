#include "declat/ideals.hpp"

#include <algorithm>
#include <stdexcept>

namespace declat {
namespace {

void sort_by_generator(std::vector<Ideal>& ideals) {
  std::sort(ideals.begin(), ideals.end(), [](const Ideal& a, const Ideal& b) { return a.generator < b.generator; });
  ideals.erase(std::unique(ideals.begin(), ideals.end()), ideals.end());
}

// Members of `family` not strictly containing another member.
std::vector<Ideal> minimal_members(const std::vector<Ideal>& family) {
  std::vector<Ideal> out;
  for (const Ideal& i : family) {
    bool minimal = std::none_of(family.begin(), family.end(),
                                [&](const Ideal& j) { return j.carrier.proper_subset_of(i.carrier); });
    if (minimal) out.push_back(i);
  }
  return out;
}

std::vector<Ideal> maximal_members(const std::vector<Ideal>& family) {
  std::vector<Ideal> out;
  for (const Ideal& i : family) {
    bool maximal = std::none_of(family.begin(), family.end(),
                                [&](const Ideal& j) { return i.carrier.proper_subset_of(j.carrier); });
    if (maximal) out.push_back(i);
  }
  return out;
}

}  // namespace

bool is_ideal(const Lattice& l, ElementSet carrier) {
  if (carrier.empty() || !carrier.subset_of(l.all()) || !l.is_down_closed(carrier)) return false;
  bool closed = true;
  carrier.for_each([&](Elem a) {
    carrier.for_each([&](Elem b) { closed = closed && carrier.contains(l.join(a, b)); });
  });
  return closed;
}

bool is_filter(const Lattice& l, ElementSet carrier) {
  if (carrier.empty() || carrier.contains(Lattice::bottom()) || !carrier.subset_of(l.all()) ||
      !l.is_up_closed(carrier))
    return false;
  bool closed = true;
  carrier.for_each([&](Elem a) {
    carrier.for_each([&](Elem b) { closed = closed && carrier.contains(l.meet(a, b)); });
  });
  return closed;
}

Ideal make_ideal(const Lattice& l, ElementSet carrier) {
  if (!is_ideal(l, carrier)) throw Error(ErrorCode::kInvalidArgument, "not an ideal of " + l.name());
  const Elem g = l.join_of(carrier);
  if (l.down(g) != carrier) throw std::logic_error("non-principal ideal in a finite lattice");
  return Ideal{carrier, g};
}

Ideal principal_ideal(const Lattice& l, Elem a) { return Ideal{l.down(a), a}; }
Ideal zero_ideal(const Lattice& l) { return principal_ideal(l, Lattice::bottom()); }
Ideal whole_ideal(const Lattice& l) { return principal_ideal(l, l.top()); }
bool is_proper(const Lattice& l, const Ideal& i) { return i.carrier != l.all(); }
bool comparable(const Ideal& a, const Ideal& b) { return a.subset_of(b) || b.subset_of(a); }

Ideal intersect_all(const Lattice& l, const std::vector<Ideal>& family) {
  ElementSet acc = l.all();
  for (const Ideal& i : family) acc &= i.carrier;
  return make_ideal(l, acc);
}

bool contains_ideal(const std::vector<Ideal>& family, const Ideal& ideal) {
  return std::find(family.begin(), family.end(), ideal) != family.end();
}

std::vector<Ideal> enumerate_ideals(const Lattice& l) {
  require_distributive(l);
  std::vector<Ideal> out;
  out.reserve(l.size());
  for (Elem a = 0; a < l.size(); ++a) out.push_back(make_ideal(l, l.down(a)));
  return out;
}

Ideal ideal_meet(const Lattice& l, const Ideal& a, const Ideal& b) { return make_ideal(l, a.carrier & b.carrier); }

Ideal ideal_join(const Lattice& l, const Ideal& a, const Ideal& b) {
  ElementSet joins;
  a.carrier.for_each([&](Elem x) { b.carrier.for_each([&](Elem y) { joins.insert(l.join(x, y)); }); });
  return make_ideal(l, joins);
}

bool is_prime(const Lattice& l, const Ideal& p) {
  if (!is_proper(l, p)) return false;
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = a; b < l.size(); ++b)
      if (p.contains(l.meet(a, b)) && !p.contains(a) && !p.contains(b)) return false;
  return true;
}

std::vector<Ideal> primes(const Lattice& l) {
  std::vector<Ideal> out;
  for (const Ideal& i : enumerate_ideals(l))
    if (is_prime(l, i)) out.push_back(i);
  return out;
}

std::vector<Ideal> min_primes(const Lattice& l) { return minimal_members(primes(l)); }

std::vector<Ideal> values_of(const Lattice& l, Elem x) {
  if (x == Lattice::bottom()) throw Error(ErrorCode::kBottomHasNoValue, l.name());
  std::vector<Ideal> omitting;
  for (const Ideal& i : enumerate_ideals(l))
    if (!i.contains(x)) omitting.push_back(i);
  return maximal_members(omitting);
}

std::vector<Ideal> regular_ideals(const Lattice& l) {
  std::vector<Ideal> out;
  for (Elem x = 1; x < l.size(); ++x)
    for (const Ideal& v : values_of(l, x)) out.push_back(v);
  sort_by_generator(out);
  return out;
}

std::vector<Ideal> meet_irreducible_ideals(const Lattice& l) {
  const auto ideals = enumerate_ideals(l);
  std::vector<Ideal> out;
  for (const Ideal& m : ideals) {
    if (!is_proper(l, m)) continue;
    bool irreducible = true;
    for (const Ideal& i : ideals) {
      if (!m.carrier.proper_subset_of(i.carrier)) continue;
      for (const Ideal& j : ideals)
        if (m.carrier.proper_subset_of(j.carrier) && (i.carrier & j.carrier) == m.carrier) irreducible = false;
    }
    if (irreducible) out.push_back(m);
  }
  return out;
}

Ideal m_star(const Lattice& l, const Ideal& m) {
  if (!is_proper(l, m)) throw Error(ErrorCode::kMStarUndefined, l.name());
  std::vector<Ideal> larger;
  for (const Ideal& i : enumerate_ideals(l))
    if (m.carrier.proper_subset_of(i.carrier)) larger.push_back(i);
  return intersect_all(l, larger);
}

std::vector<Ideal> ideals_below_their_cover(const Lattice& l) {
  std::vector<Ideal> out;
  for (const Ideal& m : enumerate_ideals(l))
    if (is_proper(l, m) && m.carrier.proper_subset_of(m_star(l, m).carrier)) out.push_back(m);
  return out;
}

bool is_special_element(const Lattice& l, Elem x) { return values_of(l, x).size() == 1; }

std::vector<Ideal> special_ideals(const Lattice& l) {
  std::vector<Ideal> out;
  for (Elem x = 1; x < l.size(); ++x) {
    auto vals = values_of(l, x);
    if (vals.size() == 1) out.push_back(vals.front());
  }
  sort_by_generator(out);
  return out;
}

bool is_special(const Lattice& l, const Ideal& m) { return contains_ideal(special_ideals(l), m); }

bool satisfies_family_condition(const Lattice& l, const Ideal& m) {
  if (!is_proper(l, m)) return false;
  const auto ideals = enumerate_ideals(l);
  for (const Ideal& i : ideals)
    for (const Ideal& j : ideals)
      if ((i.carrier & j.carrier).subset_of(m.carrier) && !i.subset_of(m) && !j.subset_of(m)) return false;
  return true;
}

bool is_unique_value_of_cover_element(const Lattice& l, const Ideal& m) {
  if (!is_proper(l, m)) return false;
  const ElementSet candidates = m_star(l, m).carrier.minus(m.carrier);
  bool found = false;
  candidates.for_each([&](Elem x) {
    if (found) return;
    auto vals = values_of(l, x);
    found = vals.size() == 1 && vals.front() == m;
  });
  return found;
}

Ideal polar(const Lattice& l, ElementSet a) {
  if (a.empty()) throw Error(ErrorCode::kEmptySet, "polar of the empty set");
  ElementSet out;
  for (Elem x = 0; x < l.size(); ++x) {
    bool disjoint = true;
    a.for_each([&](Elem y) { disjoint = disjoint && l.meet(x, y) == Lattice::bottom(); });
    if (disjoint) out.insert(x);
  }
  return make_ideal(l, out);
}

Ideal double_polar(const Lattice& l, ElementSet a) { return polar(l, polar(l, a).carrier); }

std::vector<Ideal> polar_ideals(const Lattice& l) {
  std::vector<Ideal> out;
  for (const Ideal& i : enumerate_ideals(l))
    if (double_polar(l, i.carrier) == i) out.push_back(i);
  return out;
}

std::vector<Filter> filters(const Lattice& l) {
  std::vector<Filter> out;
  for (Elem a = 1; a < l.size(); ++a) {
    const ElementSet up = l.up(a);
    if (!is_filter(l, up)) throw std::logic_error("principal up-set is not a filter");
    out.push_back(Filter{up, a});
  }
  return out;
}

std::vector<Filter> ultrafilters(const Lattice& l) {
  const auto all = filters(l);
  std::vector<Filter> out;
  for (const Filter& f : all) {
    bool maximal = std::none_of(all.begin(), all.end(),
                                [&](const Filter& g) { return f.carrier.proper_subset_of(g.carrier); });
    if (maximal) out.push_back(f);
  }
  return out;
}

Ideal s_p(const Lattice& l, const Ideal& p) {
  if (!is_prime(l, p)) throw Error(ErrorCode::kNotPrime, l.name());
  std::vector<Ideal> below;
  for (const Ideal& m : min_primes(l))
    if (m.subset_of(p)) below.push_back(m);
  return intersect_all(l, below);
}

SpectrumReport spectrum(const Lattice& l) {
  SpectrumReport r;
  r.all_ideals = enumerate_ideals(l);
  r.primes = primes(l);
  r.min_primes = minimal_members(r.primes);
  r.values = regular_ideals(l);
  r.specials = special_ideals(l);
  r.polar_ideals = polar_ideals(l);
  r.ultrafilters = ultrafilters(l);
  for (Elem x = 1; x < l.size(); ++x) r.val_of.emplace_back(x, values_of(l, x));
  for (const Ideal& p : r.primes) r.s_p.emplace_back(p, s_p(l, p));
  return r;
}

}  // namespace declat
