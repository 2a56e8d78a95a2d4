#include <map>
#include <doctest.h>

#include "declat/decomp.hpp"
#include "declat/gen.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace declat;
using fixture::at;
using fixture::ideal_of;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::kParse;
}

// Parts disjoint, join to a, each with exactly one value, values distinct.
bool special_parts_ok(const Lattice& l, Elem a, const std::vector<Elem>& parts) {
  const oracle::Order o = oracle::from_lattice(l);
  int joined = 0;
  std::set<oracle::Set> seen;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const int p = static_cast<int>(parts[i]);
    if (p == 0) return false;
    joined = *oracle::join(o, joined, p);
    const auto vals = oracle::values_of(o, p);
    if (vals.size() != 1 || !seen.insert(vals.front()).second) return false;
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (*oracle::meet(o, p, static_cast<int>(parts[j])) != 0) return false;
  }
  return joined == static_cast<int>(a);
}

}  // namespace

TEST_CASE("decomposability of the fixtures") {
  CHECK(is_decomposable(chain(4)).decomposable);
  CHECK(is_decomposable(chain(4)).witnesses.empty());
  CHECK(is_decomposable(fixture::b3().lattice()).decomposable);
  CHECK(is_decomposable(fixture::b2().lattice()).decomposable);
  for (std::size_t m = 2; m <= 4; ++m)
    for (std::size_t n = m; n <= 4; ++n) CHECK(is_decomposable(chain_product(m, n)).decomposable);

  const Lattice k5 = fixture::k5().lattice();
  const auto r = is_decomposable(k5);
  CHECK(!r.decomposable);
  REQUIRE(r.failing_pair);
  CHECK(k5.label(r.failing_pair->first) == "a");
  CHECK(k5.label(r.failing_pair->second) == "b");
  CHECK(code_of([] { is_decomposable(fixture::n5().lattice()); }) == ErrorCode::kNotDistributive);
}

TEST_CASE("decomposability matches the oracle on every small distributive lattice") {
  for (const Lattice& l : distributive_lattices(8)) {
    CAPTURE(l.name());
    const oracle::Order o = oracle::from_lattice(l);
    const auto expected = oracle::decomposability_failure(o);
    const auto got = is_decomposable(l);
    CHECK(got.decomposable == !expected.has_value());
    if (expected) {
      REQUIRE(got.failing_pair);
      CHECK(static_cast<int>(got.failing_pair->first) == expected->first);
      CHECK(static_cast<int>(got.failing_pair->second) == expected->second);
    }
    for (const auto& w : got.witnesses) {
      const Elem m = l.meet(w.a, w.b);
      CHECK(l.join(w.abar, m) == w.a);
      CHECK(l.join(w.bbar, m) == w.b);
      CHECK(l.meet(w.abar, w.bbar) == 0);
    }
    CHECK(is_strongly_projectable(l) == oracle::strongly_projectable(o));
    CHECK(is_projectable(l) == oracle::projectable(o));
  }
}

TEST_CASE("strong projectability") {
  CHECK(is_strongly_projectable(fixture::b2().lattice()));
  CHECK(!is_strongly_projectable(fixture::k5().lattice()));
  // (m] ∨ m^⊥ = (m] ∨ {0} = (m] ≠ L.
  CHECK(!is_strongly_projectable(fixture::c3().lattice()));
  CHECK(!oracle::strongly_projectable(fixture::c3().order()));
  CHECK(is_strongly_projectable(chain(2)));
  for (std::size_t n = 3; n <= 6; ++n) CHECK(!is_strongly_projectable(chain(n)));
}

TEST_CASE("disjointify") {
  const Lattice b2 = fixture::b2().lattice();
  const auto parts = disjointify(b2, {ideal_of(b2, "x"), ideal_of(b2, "y")}, b2.top());
  REQUIRE(parts.size() == 2);
  CHECK(b2.label(parts[0]) == "y");
  CHECK(b2.label(parts[1]) == "x");

  const Lattice b3 = fixture::b3().lattice();
  const std::vector<Ideal> coatoms{ideal_of(b3, "xy"), ideal_of(b3, "xz"), ideal_of(b3, "yz")};
  const auto p3 = disjointify(b3, coatoms, b3.top());
  REQUIRE(p3.size() == 3);
  CHECK(b3.label(p3[0]) == "z");
  CHECK(b3.label(p3[1]) == "y");
  CHECK(b3.label(p3[2]) == "x");

  const Lattice k5 = fixture::k5().lattice();
  CHECK(code_of([&] { disjointify(k5, {ideal_of(k5, "a"), ideal_of(k5, "b")}, k5.top()); }) ==
        ErrorCode::kNotDecomposable);
  CHECK(code_of([&] { disjointify(b3, {ideal_of(b3, "x"), ideal_of(b3, "y")}, b3.top()); }) == ErrorCode::kNotPrime);
  CHECK(code_of([&] { disjointify(b3, {ideal_of(b3, "xy"), ideal_of(b3, "xy")}, b3.top()); }) ==
        ErrorCode::kNotIncomparable);
  CHECK(code_of([&] { disjointify(b3, {ideal_of(b3, "xy"), ideal_of(b3, "xz")}, at(b3, "x")); }) ==
        ErrorCode::kElementInsidePrime);
  CHECK(code_of([&] { disjointify(b3, {ideal_of(b3, "xy")}, b3.top()); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("disjointify postconditions on B4") {
  const Lattice b4 = boolean_lattice(4);
  const auto coatoms = values_of(b4, b4.top());
  REQUIRE(coatoms.size() == 4);
  const auto parts = disjointify(b4, coatoms, b4.top());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    CHECK(!coatoms[i].contains(parts[i]));
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (i != j) {
        CHECK(coatoms[j].contains(parts[i]));
        CHECK(b4.meet(parts[i], parts[j]) == 0);
      }
  }
}

TEST_CASE("special decomposition") {
  const Lattice b2 = fixture::b2().lattice();
  const auto d = decompose_special(b2, b2.top());
  std::map<std::string, std::string> value_of;
  for (std::size_t i = 0; i < d.parts.size(); ++i) value_of[b2.label(d.parts[i])] = b2.label(d.value_map[i].generator);
  CHECK(value_of == std::map<std::string, std::string>{{"x", "y"}, {"y", "x"}});

  const Lattice c3 = fixture::c3().lattice();
  const auto dc = decompose_special(c3, c3.top());
  REQUIRE(dc.parts.size() == 1);
  CHECK(c3.label(dc.parts[0]) == "1");
  CHECK(c3.label(dc.value_map[0].generator) == "m");

  const Lattice k5 = fixture::k5().lattice();
  CHECK(code_of([&] { decompose_special(k5, k5.top()); }) == ErrorCode::kNotDecomposable);
  CHECK(code_of([&] { decompose_special(b2, 0); }) == ErrorCode::kBottomElement);
}

TEST_CASE("special decomposition round trip on every decomposable lattice") {
  std::size_t checked = 0;
  for (const Lattice& l : distributive_lattices(8)) {
    if (!is_decomposable(l).decomposable) {
      CHECK(code_of([&] { decompose_special(l, l.top()); }) == ErrorCode::kNotDecomposable);
      continue;
    }
    for (Elem a = 1; a < l.size(); ++a) {
      CAPTURE(l.name());
      CAPTURE(l.label(a));
      const auto d = decompose_special(l, a);
      CHECK(special_parts_ok(l, a, d.parts));
      for (std::size_t i = 0; i < d.parts.size(); ++i) CHECK(values_of(l, d.parts[i]).front() == d.value_map[i]);
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("strongly projectable implies decomposable") {
  for (const Lattice& l : distributive_lattices(8))
    if (is_strongly_projectable(l)) CHECK(is_decomposable(l).decomposable);
}

TEST_CASE("values of disjoint elements split") {
  for (const Lattice& l : distributive_lattices(8)) {
    if (!is_decomposable(l).decomposable) continue;
    for (Elem a = 1; a < l.size(); ++a)
      for (Elem b = 1; b < l.size(); ++b) {
        if (l.meet(a, b) != 0) continue;
        auto va = values_of(l, a);
        const auto vb = values_of(l, b);
        for (const Ideal& q : vb) {
          CHECK(!contains_ideal(va, q));
          va.push_back(q);
        }
        const auto vab = values_of(l, l.join(a, b));
        CHECK(va.size() == vab.size());
        for (const Ideal& q : vab) CHECK(contains_ideal(va, q));
      }
  }
}
