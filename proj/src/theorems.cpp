#include "declat/theorems.hpp"

#include <algorithm>
#include <cctype>

#include "declat/decomp.hpp"
#include "declat/gen.hpp"
#include "declat/ideals.hpp"

namespace declat {

// Spectra shared by every checker evaluated on one lattice.
struct CheckContext {
  const Lattice& l;
  CheckOptions options;
  bool decomposable = false;
  std::vector<Ideal> ideals;
  std::vector<Ideal> primes;
  std::vector<Ideal> min_primes;
  std::vector<Ideal> values;
  std::vector<Ideal> specials;
  std::vector<Ideal> polars;
  std::vector<std::vector<Ideal>> val;  // Val(x), empty for x = 0
  std::vector<Ideal> elem_polar;        // x^⊥

  CheckContext(const Lattice& lattice, const CheckOptions& opts) : l(lattice), options(opts) {
    decomposable = is_decomposable(l).decomposable;
    ideals = enumerate_ideals(l);
    primes = declat::primes(l);
    min_primes = declat::min_primes(l);
    values = regular_ideals(l);
    specials = special_ideals(l);
    polars = polar_ideals(l);
    val.resize(l.size());
    for (Elem x = 1; x < l.size(); ++x) val[x] = values_of(l, x);
    for (Elem x = 0; x < l.size(); ++x) elem_polar.push_back(polar(l, ElementSet::single(x)));
  }

  const Ideal& perp(Elem x) const { return elem_polar[x]; }
  Ideal whole() const { return whole_ideal(l); }
  Ideal zero() const { return zero_ideal(l); }
  std::string name(const Ideal& i) const {
    return i.generator == Lattice::bottom() ? "{" + l.label(i.generator) + "}" : "(" + l.label(i.generator) + "]";
  }
};

bool Instance::consistent() const {
  if (conditions.empty()) return true;
  switch (relation) {
    case Relation::kEquivalent:
      return std::all_of(conditions.begin(), conditions.end(),
                         [&](const Condition& c) { return c.value == conditions.front().value; });
    case Relation::kImplies:
      return !conditions.front().value ||
             std::all_of(conditions.begin(), conditions.end(), [](const Condition& c) { return c.value; });
    case Relation::kAllTrue:
      return std::all_of(conditions.begin(), conditions.end(), [](const Condition& c) { return c.value; });
  }
  return false;
}

std::optional<bool> Instance::value(const std::string& label) const {
  for (const auto& c : conditions)
    if (c.label == label) return c.value;
  return std::nullopt;
}

std::string_view to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::kHolds: return "holds";
    case VerdictStatus::kFails: return "fails";
    case VerdictStatus::kInapplicable: return "inapplicable";
  }
  return "unknown";
}

namespace {

using Instances = std::vector<Instance>;

Instance global_instance(Relation rel, std::vector<Condition> conds) {
  return Instance{"global", {}, rel, std::move(conds)};
}

Instance ideal_instance(const CheckContext& c, const std::string& var, const Ideal& i, Relation rel,
                        std::vector<Condition> conds) {
  return Instance{var + "=" + c.name(i), {{var, c.l.label(i.generator)}}, rel, std::move(conds)};
}

Instance element_instance(const CheckContext& c, const std::string& var, Elem x, Relation rel,
                          std::vector<Condition> conds) {
  return Instance{var + "=" + c.l.label(x), {{var, c.l.label(x)}}, rel, std::move(conds)};
}

bool same_family(std::vector<Ideal> a, std::vector<Ideal> b) {
  auto less = [](const Ideal& x, const Ideal& y) { return x.carrier < y.carrier; };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

bool family_subset(const std::vector<Ideal>& a, const std::vector<Ideal>& b) {
  return std::all_of(a.begin(), a.end(), [&](const Ideal& i) { return contains_ideal(b, i); });
}

template <typename Pred>
std::vector<Ideal> select(const std::vector<Ideal>& family, Pred pred) {
  std::vector<Ideal> out;
  std::copy_if(family.begin(), family.end(), std::back_inserter(out), pred);
  return out;
}

bool is_chain(const Lattice& l, ElementSet s) {
  bool ok = true;
  s.for_each([&](Elem a) { s.for_each([&](Elem b) { ok = ok && l.comparable(a, b); }); });
  return ok;
}

bool family_is_chain(const std::vector<Ideal>& family) {
  for (const Ideal& a : family)
    for (const Ideal& b : family)
      if (!comparable(a, b)) return false;
  return true;
}

// ⋃ { a^⊥ : a ∈ s }
ElementSet union_of_polars(const CheckContext& c, ElementSet s) {
  ElementSet out;
  s.for_each([&](Elem a) { out |= c.perp(a).carrier; });
  return out;
}

bool meet_closed(const Lattice& l, ElementSet s) {
  bool ok = true;
  s.for_each([&](Elem a) { s.for_each([&](Elem b) { ok = ok && s.contains(l.meet(a, b)); }); });
  return ok;
}

// Nonempty meet-closed subsets avoiding 0, in increasing bit order.
std::vector<ElementSet> meet_closed_subsets(const CheckContext& c) {
  std::vector<ElementSet> out;
  const std::size_t universe = c.l.size() - 1;
  if (universe == 0 || universe > c.options.max_subset_universe) return out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << universe); ++m) {
    const ElementSet s(m << 1);
    if (meet_closed(c.l, s)) out.push_back(s);
  }
  return out;
}

std::string set_name(const Lattice& l, ElementSet s) {
  std::string out = "{";
  s.for_each([&](Elem e) {
    if (out.size() > 1) out += ",";
    out += l.label(e);
  });
  return out + "}";
}

// Nonempty sub-families of `family` that are chains.
std::vector<std::vector<Ideal>> chains_of(const std::vector<Ideal>& family) {
  std::vector<std::vector<Ideal>> out;
  const std::size_t k = family.size();
  if (k > 20) return out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << k); ++m) {
    std::vector<Ideal> members;
    for (std::size_t i = 0; i < k; ++i)
      if ((m >> i) & 1U) members.push_back(family[i]);
    if (family_is_chain(members)) out.push_back(std::move(members));
  }
  return out;
}

std::string family_name(const CheckContext& c, const std::vector<Ideal>& family) {
  std::string out = "{";
  for (const Ideal& i : family) {
    if (out.size() > 1) out += ",";
    out += c.name(i);
  }
  return out + "}";
}

bool all_ideals_comparable_above(const CheckContext& c, const Ideal& p) {
  return family_is_chain(select(c.ideals, [&](const Ideal& i) { return p.subset_of(i); }));
}

// S_P without the primality precondition.
Ideal sp_of(const CheckContext& c, const Ideal& p) {
  return intersect_all(c.l, select(c.min_primes, [&](const Ideal& m) { return m.subset_of(p); }));
}

bool incomparable_pairs_join_to_top(const CheckContext& c, const std::vector<Ideal>& family) {
  for (const Ideal& a : family)
    for (const Ideal& b : family)
      if (!comparable(a, b) && ideal_join(c.l, a, b) != c.whole()) return false;
  return true;
}

bool ideal_lattice_distributive(const CheckContext& c) {
  for (const Ideal& a : c.ideals)
    for (const Ideal& b : c.ideals)
      for (const Ideal& d : c.ideals)
        if (ideal_meet(c.l, a, ideal_join(c.l, b, d)) != ideal_join(c.l, ideal_meet(c.l, a, b), ideal_meet(c.l, a, d)))
          return false;
  return true;
}

// ---------------------------------------------------------------------------

Instances check_e2_2(const CheckContext& c) {
  return {global_instance(Relation::kImplies, {{"strongly-projectable", is_strongly_projectable(c.l)},
                                               {"decomposable", c.decomposable}})};
}

Instances check_t3_1(const CheckContext& c) {
  const Lattice& l = c.l;
  Instances out;
  for (const Ideal& p : c.ideals) {
    if (!is_proper(l, p)) continue;
    bool c2 = true, c3 = true, c4 = true;
    for (Elem x = 0; x < l.size(); ++x) {
      for (Elem y = 0; y < l.size(); ++y) {
        if (l.meet(x, y) == Lattice::bottom() && !p.contains(x) && !p.contains(y)) c2 = false;
        if (!p.contains(x) && !p.contains(y) && p.contains(l.meet(x, y))) c3 = false;
      }
    }
    for (const Ideal& i : c.ideals)
      for (const Ideal& j : c.ideals)
        if ((i.carrier & j.carrier).subset_of(p.carrier) && !i.subset_of(p) && !j.subset_of(p)) c4 = false;
    out.push_back(ideal_instance(c, "P", p, Relation::kEquivalent,
                                 {{"1", is_prime(l, p)}, {"2", c2}, {"3", c3}, {"4", c4},
                                  {"5", all_ideals_comparable_above(c, p)}}));
  }
  return out;
}

Instances check_c3_2(const CheckContext& c) {
  const Ideal zero = c.zero();
  Instances out;
  out.push_back(global_instance(Relation::kAllTrue,
                                {{"1", family_subset(c.values, c.primes)},
                                 {"2", intersect_all(c.l, c.values) == zero && intersect_all(c.l, c.primes) == zero}}));
  for (const Ideal& i : c.ideals) {
    auto above_v = select(c.values, [&](const Ideal& m) { return i.subset_of(m); });
    auto above_p = select(c.primes, [&](const Ideal& p) { return i.subset_of(p); });
    out.push_back(ideal_instance(c, "I", i, Relation::kAllTrue,
                                 {{"3", intersect_all(c.l, above_v) == i && intersect_all(c.l, above_p) == i}}));
  }
  return out;
}

Instances check_c3_3(const CheckContext& c) {
  Instances out;
  for (const auto& ch : chains_of(c.primes)) {
    out.push_back(Instance{"chain=" + family_name(c, ch), {{"chain", family_name(c, ch)}}, Relation::kAllTrue,
                           {{"1", is_prime(c.l, intersect_all(c.l, ch))}}});
  }
  for (const Ideal& p : c.primes)
    out.push_back(ideal_instance(c, "P", p, Relation::kAllTrue, {{"2", all_ideals_comparable_above(c, p)}}));
  // In the one-point lattice {0} = L is never prime although L is a chain.
  if (c.l.size() > 1)
    out.push_back(global_instance(Relation::kEquivalent,
                                  {{"3:chain", is_totally_ordered(c.l)}, {"3:zero-prime", is_prime(c.l, c.zero())}}));
  return out;
}

Instances check_c3_4(const CheckContext& c) {
  bool unique_min = true;
  for (const Ideal& p : c.primes) {
    if (select(c.min_primes, [&](const Ideal& m) { return m.subset_of(p); }).size() != 1) unique_min = false;
  }
  return {global_instance(Relation::kEquivalent, {{"1", unique_min},
                                                  {"2", incomparable_pairs_join_to_top(c, c.min_primes)},
                                                  {"3", incomparable_pairs_join_to_top(c, c.primes)},
                                                  {"4", incomparable_pairs_join_to_top(c, c.values)}})};
}

Instances check_t3_5(const CheckContext& c) {
  // Finite families satisfy DCC.
  return {global_instance(Relation::kEquivalent,
                          {{"1", same_family(c.primes, c.values)}, {"2", true}, {"3", true}})};
}

Instances check_l4_1(const CheckContext& c) {
  const Lattice& l = c.l;
  const auto ultra = ultrafilters(l);
  Instances out;
  for (ElementSet u : meet_closed_subsets(c)) {
    const bool c1 = std::any_of(ultra.begin(), ultra.end(), [&](const Filter& f) { return f.carrier == u; });
    bool c2 = true;
    l.all().minus(u).for_each([&](Elem x) {
      bool separated = false;
      u.for_each([&](Elem v) { separated = separated || l.meet(x, v) == Lattice::bottom(); });
      c2 = c2 && separated;
    });
    const ElementSet rest = l.all().minus(u);
    const bool c3 = is_ideal(l, rest) && contains_ideal(c.min_primes, make_ideal(l, rest));
    out.push_back(Instance{"U=" + set_name(l, u), {{"U", set_name(l, u)}}, Relation::kEquivalent,
                           {{"1", c1}, {"2", c2}, {"3", c3}}});
  }
  std::vector<Ideal> complements;
  for (const Filter& f : ultra) {
    const ElementSet rest = l.all().minus(f.carrier);
    if (is_ideal(l, rest)) complements.push_back(make_ideal(l, rest));
  }
  const bool bijection = complements.size() == ultra.size() && same_family(complements, c.min_primes);
  out.push_back(global_instance(Relation::kAllTrue, {{"bijection", bijection}}));
  return out;
}

Instances check_l4_2(const CheckContext& c) {
  const Lattice& l = c.l;
  Instances out;
  for (ElementSet x : meet_closed_subsets(c)) {
    const ElementSet lhs = union_of_polars(c, x);
    const ElementSet mid =
        intersect_all(l, select(c.primes, [&](const Ideal& p) { return !p.carrier.intersects(x); })).carrier;
    const ElementSet rhs =
        intersect_all(l, select(c.min_primes, [&](const Ideal& m) { return !m.carrier.intersects(x); })).carrier;
    out.push_back(Instance{"X=" + set_name(l, x), {{"X", set_name(l, x)}}, Relation::kAllTrue,
                           {{"1=2", lhs == mid}, {"2=3", mid == rhs}}});
  }
  for (const Ideal& p : c.primes) {
    const ElementSet lhs = union_of_polars(c, l.all().minus(p.carrier));
    out.push_back(ideal_instance(c, "P", p, Relation::kAllTrue, {{"prime", lhs == sp_of(c, p).carrier}}));
  }
  return out;
}

Instances check_t4_3(const CheckContext& c) {
  const Lattice& l = c.l;
  Instances out;
  for (const Ideal& p : c.primes) {
    bool c3 = true;
    p.carrier.for_each([&](Elem x) { c3 = c3 && !c.perp(x).subset_of(p); });
    out.push_back(ideal_instance(c, "P", p, Relation::kEquivalent,
                                 {{"1", contains_ideal(c.min_primes, p)},
                                  {"2", union_of_polars(c, l.all().minus(p.carrier)) == p.carrier},
                                  {"3", c3}}));
  }
  return out;
}

Instances check_l4_4(const CheckContext& c) {
  Instances out;
  for (const Ideal& a : c.ideals) {
    if (a == c.zero()) continue;
    const Ideal perp = polar(c.l, a.carrier);
    const Ideal mid = intersect_all(c.l, select(c.primes, [&](const Ideal& m) { return !a.subset_of(m); }));
    const Ideal rhs = intersect_all(c.l, select(c.min_primes, [&](const Ideal& m) { return !a.subset_of(m); }));
    out.push_back(ideal_instance(c, "A", a, Relation::kAllTrue, {{"1=2", perp == mid}, {"2=3", mid == rhs}}));
  }
  return out;
}

Instances check_l4_5(const CheckContext& c) {
  const Lattice& l = c.l;
  Instances out;
  for (Elem a = 1; a < l.size(); ++a) {
    for (Elem b = a; b < l.size(); ++b) {
      const auto& va = c.val[a];
      const auto& vb = c.val[b];
      const bool disjoint_values =
          std::none_of(va.begin(), va.end(), [&](const Ideal& q) { return contains_ideal(vb, q); });
      std::vector<Ideal> both = va;
      for (const Ideal& q : vb)
        if (!contains_ideal(both, q)) both.push_back(q);
      const bool c2 = disjoint_values && same_family(both, c.val[l.join(a, b)]);
      out.push_back(Instance{"(a,b)=(" + l.label(a) + "," + l.label(b) + ")",
                             {{"a", l.label(a)}, {"b", l.label(b)}},
                             Relation::kEquivalent,
                             {{"1", l.meet(a, b) == Lattice::bottom()}, {"2", c2}}});
    }
  }
  return out;
}

Instances check_t4_6(const CheckContext& c) {
  const Lattice& l = c.l;
  const Ideal zero = c.zero();
  const Ideal whole = c.whole();
  Instances out;
  for (const Ideal& i : c.ideals) {
    if (i == zero) continue;
    const Ideal i_perp = polar(l, i.carrier);
    const Ideal i_pp = polar(l, i_perp.carrier);
    bool c2 = true;
    bool c8 = true;
    i.carrier.minus(zero.carrier).for_each([&](Elem a) {
      c2 = c2 && c.perp(a) == i_perp;
      c8 = c8 && c.val[a].size() == 1;
    });
    const bool pp_chain = is_chain(l, i_pp.carrier);
    const bool c5 = pp_chain && std::none_of(c.ideals.begin(), c.ideals.end(), [&](const Ideal& j) {
                      return i_pp.carrier.proper_subset_of(j.carrier) && is_chain(l, j.carrier);
                    });
    const bool c6 = i_pp != zero && std::none_of(c.polars.begin(), c.polars.end(), [&](const Ideal& q) {
                      return q != zero && q.carrier.proper_subset_of(i_pp.carrier);
                    });
    const bool c7 = i_perp != whole && std::none_of(c.polars.begin(), c.polars.end(), [&](const Ideal& q) {
                      return q != whole && i_perp.carrier.proper_subset_of(q.carrier);
                    });
    out.push_back(ideal_instance(c, "I", i, Relation::kEquivalent,
                                 {{"1", is_chain(l, i.carrier)},
                                  {"2", c2},
                                  {"3", contains_ideal(c.primes, i_perp)},
                                  {"4", contains_ideal(c.min_primes, i_perp)},
                                  {"5", c5},
                                  {"6", c6},
                                  {"7", c7},
                                  {"8", c8}}));
  }
  return out;
}

Instances check_t4_7(const CheckContext& c) {
  bool hypothesis = true;
  for (const Ideal& p : c.polars)
    for (const Ideal& q : c.polars)
      if (!comparable(p, q) && ideal_join(c.l, p, q) != c.whole()) hypothesis = false;
  // {0} = L^⊥ and L = {0}^⊥ are polar but never minimal prime in general;
  // the statement concerns the proper nonzero polars.
  const auto proper = select(c.polars, [&](const Ideal& p) { return p != c.zero() && p != c.whole(); });
  return {global_instance(Relation::kImplies,
                          {{"hypothesis", hypothesis}, {"conclusion", family_subset(proper, c.min_primes)}})};
}

Instances check_t4_8(const CheckContext& c) {
  const Lattice& l = c.l;
  bool principal_is_double_polar = true;
  for (Elem x = 0; x < l.size(); ++x)
    if (polar(l, c.perp(x).carrier) != principal_ideal(l, x)) principal_is_double_polar = false;
  return {global_instance(Relation::kEquivalent,
                          {{"1", same_family(c.primes, c.min_primes)},
                           {"2", is_strongly_projectable(l)},
                           {"3", is_projectable(l) && principal_is_double_polar}})};
}

Instances check_l4_9(const CheckContext& c) {
  const auto chains = chains_of(c.values);
  std::vector<Ideal> meets;
  for (const auto& ch : chains) {
    bool maximal = false;
    if (c.options.chain_reading == ChainReading::kMaximalAmongValueChains) {
      maximal = std::none_of(c.values.begin(), c.values.end(), [&](const Ideal& v) {
        if (contains_ideal(ch, v)) return false;
        auto extended = ch;
        extended.push_back(v);
        return family_is_chain(extended);
      });
    } else {
      auto with_top = ch;
      with_top.push_back(c.whole());
      maximal = std::none_of(c.ideals.begin(), c.ideals.end(), [&](const Ideal& i) {
        if (contains_ideal(with_top, i)) return false;
        auto extended = with_top;
        extended.push_back(i);
        return family_is_chain(extended);
      });
    }
    if (maximal) meets.push_back(intersect_all(c.l, ch));
  }
  Instances out;
  for (const Ideal& m : c.ideals)
    out.push_back(ideal_instance(c, "M", m, Relation::kEquivalent,
                                 {{"1", contains_ideal(c.min_primes, m)}, {"2", contains_ideal(meets, m)}}));
  return out;
}

Instances check_t4_10(const CheckContext& c) {
  const auto atoms = select(c.values, [&](const Ideal& v) {
    return std::none_of(c.values.begin(), c.values.end(),
                        [&](const Ideal& w) { return w.carrier.proper_subset_of(v.carrier); });
  });
  const bool atomic = std::all_of(c.values.begin(), c.values.end(), [&](const Ideal& v) {
    return std::any_of(atoms.begin(), atoms.end(), [&](const Ideal& a) { return a.subset_of(v); });
  });
  return {global_instance(Relation::kEquivalent, {{"1", family_subset(c.min_primes, c.values)}, {"2", atomic}})};
}

Instances check_t5_1(const CheckContext& c) {
  Instances out;
  for (const Ideal& m : c.ideals)
    out.push_back(ideal_instance(c, "M", m, Relation::kEquivalent,
                                 {{"1", contains_ideal(c.specials, m)},
                                  {"2", satisfies_family_condition(c.l, m)},
                                  {"3", is_unique_value_of_cover_element(c.l, m)}}));
  return out;
}

Instances check_l5_2(const CheckContext& c) {
  Instances out;
  for (const Ideal& p1 : c.primes) {
    const Ideal s1 = sp_of(c, p1);
    for (const Ideal& p2 : c.primes) {
      out.push_back(Instance{"(P1,P2)=(" + c.name(p1) + "," + c.name(p2) + ")",
                             {{"P1", c.l.label(p1.generator)}, {"P2", c.l.label(p2.generator)}},
                             Relation::kEquivalent,
                             {{"1", s1.subset_of(p2)}, {"2", comparable(p1, p2)}}});
    }
  }
  return out;
}

Instances check_l5_3(const CheckContext& c) {
  const Lattice& l = c.l;
  Instances out;
  for (const Ideal& p : c.primes) {
    ElementSet k = ElementSet::single(Lattice::bottom());
    for (Elem a = 1; a < l.size(); ++a) {
      const bool all_incomparable = std::all_of(c.primes.begin(), c.primes.end(), [&](const Ideal& q) {
        return q.contains(a) || !comparable(q, p);
      });
      if (all_incomparable) k.insert(a);
    }
    out.push_back(ideal_instance(c, "P", p, Relation::kAllTrue, {{"1", sp_of(c, p).carrier == k}}));
  }
  return out;
}

Instances check_t5_4(const CheckContext& c) {
  const Lattice& l = c.l;
  Instances out;
  for (Elem g = 1; g < l.size(); ++g) {
    for (const Ideal& i : c.ideals) {
      const auto above = select(c.val[g], [&](const Ideal& q) { return i.subset_of(q); });
      bool stays_out = true;
      l.all().minus(i.carrier).for_each([&](Elem x) { stays_out = stays_out && !i.contains(l.meet(x, g)); });
      const bool c2 = std::any_of(c.val[g].begin(), c.val[g].end(), [&](const Ideal& p) {
        return sp_of(c, p).subset_of(i) && i.subset_of(p);
      });
      out.push_back(Instance{"(g,I)=(" + l.label(g) + "," + c.name(i) + ")",
                             {{"g", l.label(g)}, {"I", l.label(i.generator)}},
                             Relation::kEquivalent,
                             {{"1", above.size() == 1 && stays_out}, {"2", c2}}});
    }
  }
  return out;
}

Instances check_t5_5(const CheckContext& c) {
  const Lattice& l = c.l;
  Instances out;
  for (const Ideal& k : c.ideals) {
    // The statement is about prime-like K; L itself would satisfy (3)-(6) vacuously.
    if (!is_proper(l, k)) continue;
    const bool prime = is_prime(l, k);
    const ElementSet outside = l.all().minus(k.carrier);
    bool above_all = true, trivial_polar = true, special = true;
    outside.for_each([&](Elem x) {
      above_all = above_all && k.carrier.subset_of(l.down(x));
      trivial_polar = trivial_polar && c.perp(x) == c.zero();
      special = special && c.val[x].size() == 1;
    });
    const bool c2 = std::all_of(c.ideals.begin(), c.ideals.end(), [&](const Ideal& i) { return comparable(k, i); });
    const bool c3 = std::all_of(c.polars.begin(), c.polars.end(),
                                [&](const Ideal& p) { return p == c.whole() || p.subset_of(k); });
    const bool c4 = std::all_of(c.min_primes.begin(), c.min_primes.end(), [&](const Ideal& m) { return m.subset_of(k); });
    out.push_back(ideal_instance(c, "K", k, Relation::kEquivalent,
                                 {{"1", prime && above_all},
                                  {"2", prime && c2},
                                  {"3", c3},
                                  {"4", c4},
                                  {"5", trivial_polar},
                                  {"6", special}}));
  }
  return out;
}

Instances check_t5_6(const CheckContext& c) {
  // In a finite lattice complete distributivity and α-distributivity reduce
  // to finite distributivity of Ide(L).
  const bool distributive = ideal_lattice_distributive(c);
  return {global_instance(Relation::kEquivalent,
                          {{"1", same_family(c.values, c.specials)}, {"2", distributive}, {"3", distributive}})};
}

Instances check_t5_9(const CheckContext& c) {
  const Lattice& l = c.l;
  Instances out;
  for (Elem a = 1; a < l.size(); ++a) {
    bool ok = false;
    try {
      const auto d = decompose_special(l, a);
      ElementSet joined;
      for (Elem p : d.parts) joined.insert(p);
      ok = !d.parts.empty() && l.join_of(joined) == a;
      std::vector<Ideal> seen;
      for (std::size_t i = 0; i < d.parts.size() && ok; ++i) {
        const auto vals = values_of(l, d.parts[i]);
        ok = d.parts[i] != Lattice::bottom() && vals.size() == 1 && !contains_ideal(seen, vals.front());
        if (ok) seen.push_back(vals.front());
        for (std::size_t j = i + 1; j < d.parts.size() && ok; ++j)
          ok = l.meet(d.parts[i], d.parts[j]) == Lattice::bottom();
      }
    } catch (const Error&) {
      ok = false;
    }
    out.push_back(element_instance(c, "a", a, Relation::kEquivalent,
                                   {{"1", c.val[a].size() < l.size()}, {"2", ok}}));
  }
  return out;
}

std::vector<CheckerEntry> build_registry() {
  auto labels = [](std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
    return out;
  };
  const Guard dl = Guard::kDecomposable;
  return {
      {"E2.2", "strongly projectable distributive lattices are decomposable", Guard::kDistributive, "global", false,
       "", {"strongly-projectable", "decomposable"}, check_e2_2},
      {"T3.1", "prime ideal characterisations", dl, "per proper ideal P", false, "", labels(5), check_t3_1},
      {"C3.2", "values are prime; intersections of values and primes", dl, "global + per ideal", false, "",
       labels(3), check_c3_2},
      {"C3.3", "chains of primes; ideals above a prime; zero ideal prime iff chain", dl,
       "per chain of primes + per prime + global", false, "", {"1", "2", "3:chain", "3:zero-prime"}, check_c3_3},
      {"C3.4", "unique minimal prime below each prime", dl, "global", false, "", labels(4), check_c3_4},
      {"T3.5", "Spe(L) = V(L) under DCC", dl, "global", true,
       "DCC holds in every finite lattice; checks Spe(L) = V(L)", labels(3), check_t3_5},
      {"L4.1", "ultrafilters and minimal primes", dl, "per meet-closed U avoiding 0 + global", false, "",
       {"1", "2", "3", "bijection"}, check_l4_1},
      {"L4.2", "union of polars equals intersections of primes", dl, "per meet-closed X avoiding 0 + per prime", false,
       "", {"1=2", "2=3", "prime"}, check_l4_2},
      {"T4.3", "minimal prime characterisations", dl, "per prime P", false, "", labels(3), check_t4_3},
      {"L4.4", "polar of an ideal as an intersection of primes", dl, "per nonzero ideal A", false, "",
       {"1=2", "2=3"}, check_l4_4},
      {"L4.5", "disjointness through values", dl, "per pair a,b > 0", false, "", labels(2), check_l4_5},
      {"T4.6", "totally ordered ideals", dl, "per nonzero ideal I", false,
       "minimal/maximal polars are taken among nonzero / proper polars", labels(8), check_t4_6},
      {"T4.7", "polars are minimal primes", dl, "global", false, "conclusion ranges over proper nonzero polars",
       {"hypothesis", "conclusion"}, check_t4_7},
      {"T4.8", "Spe(L) = MinSpe(L) iff strongly projectable", dl, "global", false, "", labels(3), check_t4_8},
      {"L4.9", "minimal primes as intersections of maximal chains of values", dl, "per ideal M", false, "",
       labels(2), check_l4_9},
      {"T4.10", "minimal primes are regular iff V(L) is atomic", dl, "global", false,
       "each prime contains finitely many minimal primes in a finite lattice", labels(2), check_t4_10},
      {"T5.1", "special ideal characterisations", Guard::kDistributive, "per ideal M", false,
       "family condition checked on ideal pairs", labels(3), check_t5_1},
      {"L5.2", "S_P1 below P2 iff comparable", dl, "per pair of primes", false, "", labels(2), check_l5_2},
      {"L5.3", "element description of S_P", dl, "per prime P", false, "", labels(1), check_l5_3},
      {"T5.4", "ideals between S_P and P", dl, "per element g > 0 and ideal I", false,
       "condition (2) quantifies P over Val(g) existentially", labels(2), check_t5_4},
      {"T5.5", "ideals containing every minimal prime", dl, "per proper ideal K", false,
       "x > K read as x above every member of K", labels(6), check_t5_5},
      {"T5.6", "V(L) = S(L) iff Ide(L) completely distributive", dl, "global", true,
       "Ide(L) of a finite distributive lattice is completely distributive; checks V(L) = S(L)", labels(3),
       check_t5_6},
      {"T5.9", "decomposition into disjoint special elements", dl, "per element a > 0", false, "", labels(2),
       check_t5_9},
  };
}

std::string normalise_arrows(std::string s) {
  auto replace_all = [&](const std::string& from, const std::string& to) {
    for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size()))
      s.replace(pos, from.size(), to);
  };
  replace_all("\xE2\x87\x92", "=>");  // ⇒
  replace_all("\xE2\x87\x90", "<=");  // ⇐
  replace_all(" ", "");
  return s;
}

// "(2)" -> "2"; "(3)zero-prime" -> "3:zero-prime"; "chain" -> "<group>:chain".
std::string side_label(const std::string& side, const std::string& group) {
  if (!side.empty() && side.front() == '(') {
    const auto close = side.find(')');
    if (close == std::string::npos) return {};
    const std::string number = side.substr(1, close - 1);
    const std::string suffix = side.substr(close + 1);
    return suffix.empty() ? number : number + ":" + suffix;
  }
  return group.empty() ? side : group + ":" + side;
}

std::string group_of(const std::string& side) {
  if (side.empty() || side.front() != '(') return {};
  const auto close = side.find(')');
  return close == std::string::npos ? std::string{} : side.substr(1, close - 1);
}

TheoremVerdict make_verdict(const CheckerEntry& entry, const Lattice& l) {
  TheoremVerdict v;
  v.theorem_id = entry.id;
  v.lattice = l.name();
  v.degenerate = entry.degenerate;
  v.note = entry.note;
  return v;
}

TheoremVerdict evaluate(const CheckerEntry& entry, const CheckContext& ctx) {
  TheoremVerdict v = make_verdict(entry, ctx.l);
  if (entry.guard == Guard::kDecomposable && !ctx.decomposable && !ctx.options.force) {
    v.status = VerdictStatus::kInapplicable;
    v.note = "requires a decomposable lattice";
    return v;
  }
  v.instances = entry.evaluate(ctx);
  for (const Instance& inst : v.instances) {
    if (inst.consistent()) continue;
    ++v.failing_instances;
    if (!v.counterexample) v.counterexample = inst;
  }
  v.holds = v.failing_instances == 0;
  v.status = v.holds ? VerdictStatus::kHolds : VerdictStatus::kFails;
  return v;
}

TheoremVerdict not_distributive_verdict(const CheckerEntry& entry, const Lattice& l) {
  TheoremVerdict v = make_verdict(entry, l);
  v.status = VerdictStatus::kInapplicable;
  v.note = "requires a distributive lattice";
  return v;
}

}  // namespace

const std::vector<CheckerEntry>& registry() {
  static const std::vector<CheckerEntry> entries = build_registry();
  return entries;
}

const CheckerEntry& registry_entry(const std::string& id) {
  for (const auto& e : registry())
    if (e.id == id) return e;
  throw Error(ErrorCode::kUnknownTheoremId, id);
}

TheoremVerdict check(const Lattice& lattice, const std::string& theorem_id, const CheckOptions& options) {
  const CheckerEntry& entry = registry_entry(theorem_id);
  if (!lattice.distributive()) return not_distributive_verdict(entry, lattice);
  const CheckContext ctx(lattice, options);
  return evaluate(entry, ctx);
}

std::vector<TheoremVerdict> check_all(const Lattice& lattice, const CheckOptions& options) {
  std::vector<TheoremVerdict> out;
  if (!lattice.distributive()) {
    for (const auto& e : registry()) out.push_back(not_distributive_verdict(e, lattice));
    return out;
  }
  const CheckContext ctx(lattice, options);
  for (const auto& e : registry()) out.push_back(evaluate(e, ctx));
  return out;
}

Implication parse_implication(const std::string& text) {
  const std::string s = normalise_arrows(text);
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::kUnknownImplicationId, text);
  Implication imp;
  imp.theorem_id = s.substr(0, colon);
  const std::string body = s.substr(colon + 1);
  std::string left, right;
  bool forward = true;
  if (auto pos = body.find("=>"); pos != std::string::npos) {
    left = body.substr(0, pos);
    right = body.substr(pos + 2);
  } else if (pos = body.find("<="); pos != std::string::npos) {
    left = body.substr(0, pos);
    right = body.substr(pos + 2);
    forward = false;
  } else {
    throw Error(ErrorCode::kUnknownImplicationId, text);
  }
  if (left.empty()) throw Error(ErrorCode::kUnknownImplicationId, text);

  const CheckerEntry* entry = nullptr;
  for (const auto& e : registry())
    if (e.id == imp.theorem_id) entry = &e;
  if (entry == nullptr) throw Error(ErrorCode::kUnknownImplicationId, text);

  const std::string group = group_of(left).empty() ? group_of(right) : group_of(left);
  std::string lhs, rhs;
  if (right.empty()) {
    // "(3)=>" / "(3)<=": one direction of a two-sided condition "3:left", "3:right".
    if (left != "(" + group + ")") throw Error(ErrorCode::kUnknownImplicationId, text);
    std::vector<std::string> sides;
    for (const auto& c : entry->conditions)
      if (c.rfind(group + ":", 0) == 0) sides.push_back(c);
    if (sides.size() != 2) throw Error(ErrorCode::kUnknownImplicationId, text);
    lhs = sides[0];
    rhs = sides[1];
  } else {
    lhs = side_label(left, group);
    rhs = side_label(right, group);
  }
  imp.premise = forward ? lhs : rhs;
  imp.conclusion = forward ? rhs : lhs;

  auto known = [&](const std::string& label) {
    return std::find(entry->conditions.begin(), entry->conditions.end(), label) != entry->conditions.end();
  };
  if (!known(imp.premise) || !known(imp.conclusion) || imp.premise == imp.conclusion)
    throw Error(ErrorCode::kUnknownImplicationId, text);
  return imp;
}

std::optional<Instance> find_implication_failure(const Lattice& lattice, const Implication& implication,
                                                 const CheckOptions& options) {
  if (!lattice.distributive()) return std::nullopt;
  CheckOptions forced = options;
  forced.force = true;
  const CheckContext ctx(lattice, forced);
  for (const Instance& inst : registry_entry(implication.theorem_id).evaluate(ctx)) {
    const auto premise = inst.value(implication.premise);
    const auto conclusion = inst.value(implication.conclusion);
    if (premise && conclusion && *premise && !*conclusion) return inst;
  }
  return std::nullopt;
}

std::vector<ImplicationFailure> search_counterexamples(const std::string& implication_id, std::size_t max_n,
                                                       const CheckOptions& options) {
  const Implication imp = parse_implication(implication_id);
  std::vector<ImplicationFailure> out;
  enumerate_distributive(max_n, [&](const Lattice& l) {
    if (auto witness = find_implication_failure(l, imp, options)) out.push_back({l, *witness});
  });
  return out;
}

}  // namespace declat
