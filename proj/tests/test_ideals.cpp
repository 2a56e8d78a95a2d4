#include <doctest.h>

#include "declat/gen.hpp"
#include "declat/ideals.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace declat;
using fixture::at;
using fixture::ideal_of;
using fixture::names;

namespace {

using Names = std::set<std::set<std::string>>;

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::kParse;
}

// Every spectrum class against the brute-force oracle, compared as label sets.
void check_against_oracle(const Lattice& l) {
  CAPTURE(l.name());
  const oracle::Order o = oracle::from_lattice(l);
  CHECK(names(l, enumerate_ideals(l)) == oracle::names(o, oracle::ideals(o)));
  CHECK(names(l, primes(l)) == oracle::names(o, oracle::primes(o)));
  CHECK(names(l, min_primes(l)) == oracle::names(o, oracle::min_primes(o)));
  CHECK(names(l, regular_ideals(l)) == oracle::names(o, oracle::values(o)));
  CHECK(names(l, special_ideals(l)) == oracle::names(o, oracle::specials(o)));
  CHECK(names(l, polar_ideals(l)) == oracle::names(o, oracle::polars(o)));
  for (Elem x = 1; x < l.size(); ++x)
    CHECK(names(l, values_of(l, x)) == oracle::names(o, oracle::values_of(o, static_cast<int>(x))));
  for (Elem x = 0; x < l.size(); ++x)
    CHECK(names(l, polar(l, ElementSet::single(x)).carrier) ==
          oracle::names(o, oracle::polar(o, oracle::Set{1} << x)));
  Names ultra;
  for (const Filter& f : ultrafilters(l)) ultra.insert(names(l, f.carrier));
  CHECK(ultra == oracle::names(o, oracle::ultrafilters(o)));
}

}  // namespace

TEST_CASE("ideals of the small fixtures") {
  const Lattice c3 = fixture::c3().lattice();
  CHECK(enumerate_ideals(c3).size() == 3);
  const Lattice k5 = fixture::k5().lattice();
  const auto ik = enumerate_ideals(k5);
  REQUIRE(ik.size() == 5);
  std::vector<std::string> gens;
  for (const Ideal& i : ik) gens.push_back(k5.label(i.generator));
  CHECK(gens == std::vector<std::string>{"0", "c", "a", "b", "1"});
  // {0,c,a,b} is down-closed but not join-closed.
  CHECK(!is_ideal(k5, k5.all().minus(ElementSet::single(k5.top()))));
  CHECK(enumerate_ideals(fixture::b2().lattice()).size() == 4);
  CHECK(code_of([] { enumerate_ideals(fixture::n5().lattice()); }) == ErrorCode::kNotDistributive);
}

TEST_CASE("ideal operations") {
  const Lattice k5 = fixture::k5().lattice();
  CHECK(ideal_join(k5, ideal_of(k5, "a"), ideal_of(k5, "b")) == whole_ideal(k5));
  for (const Ideal& i : enumerate_ideals(k5)) CHECK(ideal_join(k5, i, zero_ideal(k5)) == i);
  const Lattice b2 = fixture::b2().lattice();
  CHECK(ideal_meet(b2, ideal_of(b2, "x"), ideal_of(b2, "y")) == zero_ideal(b2));

  // Ide(L) is isomorphic to L through a ↦ (a], and its operations agree with the oracle.
  for (const auto& e : catalog()) {
    if (!e.distributive) continue;
    const Lattice& l = e.lattice;
    const oracle::Order o = oracle::from_lattice(l);
    for (Elem a = 0; a < l.size(); ++a)
      for (Elem b = 0; b < l.size(); ++b) {
        const Ideal ia = principal_ideal(l, a), ib = principal_ideal(l, b);
        CHECK(ideal_meet(l, ia, ib) == principal_ideal(l, l.meet(a, b)));
        CHECK(ideal_join(l, ia, ib) == principal_ideal(l, l.join(a, b)));
        CHECK(ideal_join(l, ia, ib).carrier.bits() == oracle::ideal_join(o, ia.carrier.bits(), ib.carrier.bits()));
      }
  }
}

TEST_CASE("primes") {
  const Lattice k5 = fixture::k5().lattice();
  CHECK(is_prime(k5, ideal_of(k5, "a")));
  CHECK(!is_prime(k5, ideal_of(k5, "c")));
  CHECK(is_prime(k5, zero_ideal(k5)));
  CHECK(!is_prime(k5, whole_ideal(k5)));
  CHECK(names(k5, primes(k5)) == Names{{"0"}, {"0", "c", "a"}, {"0", "c", "b"}});
  CHECK(names(k5, min_primes(k5)) == Names{{"0"}});

  const Lattice c3 = fixture::c3().lattice();
  CHECK(names(c3, primes(c3)) == Names{{"0"}, {"0", "m"}});
  CHECK(names(c3, min_primes(c3)) == Names{{"0"}});

  const Lattice b2 = fixture::b2().lattice();
  CHECK(names(b2, primes(b2)) == Names{{"0", "x"}, {"0", "y"}});
  CHECK(names(b2, min_primes(b2)) == Names{{"0", "x"}, {"0", "y"}});
}

TEST_CASE("values") {
  const Lattice k5 = fixture::k5().lattice();
  CHECK(names(k5, values_of(k5, at(k5, "1"))) == Names{{"0", "c", "a"}, {"0", "c", "b"}});
  CHECK(names(k5, values_of(k5, at(k5, "c"))) == Names{{"0"}});
  CHECK(code_of([&] { values_of(k5, 0); }) == ErrorCode::kBottomHasNoValue);
  const Lattice b2 = fixture::b2().lattice();
  CHECK(names(b2, values_of(b2, at(b2, "x"))) == Names{{"0", "y"}});

  CHECK(names(k5, regular_ideals(k5)) == Names{{"0"}, {"0", "c", "a"}, {"0", "c", "b"}});
  CHECK(m_star(k5, zero_ideal(k5)) == ideal_of(k5, "c"));
  CHECK(code_of([&] { m_star(k5, whole_ideal(k5)); }) == ErrorCode::kMStarUndefined);
  const Lattice c3 = fixture::c3().lattice();
  CHECK(names(c3, regular_ideals(c3)) == Names{{"0"}, {"0", "m"}});
}

TEST_CASE("three descriptions of values agree") {
  for (const auto& e : catalog()) {
    if (!e.distributive) continue;
    CAPTURE(e.name);
    const Lattice& l = e.lattice;
    const Names v = names(l, regular_ideals(l));
    CHECK(names(l, meet_irreducible_ideals(l)) == v);
    CHECK(names(l, ideals_below_their_cover(l)) == v);
  }
}

TEST_CASE("special ideals") {
  const Lattice k5 = fixture::k5().lattice();
  CHECK(names(k5, special_ideals(k5)) == Names{{"0"}, {"0", "c", "a"}, {"0", "c", "b"}});
  const Lattice c3 = fixture::c3().lattice();
  CHECK(names(c3, special_ideals(c3)) == names(c3, regular_ideals(c3)));
  const Lattice b2 = fixture::b2().lattice();
  CHECK(names(b2, special_ideals(b2)) == Names{{"0", "x"}, {"0", "y"}});
  CHECK(!is_special_element(b2, at(b2, "1")));
  CHECK(is_special_element(b2, at(b2, "x")));

  // Family condition over all finite families agrees with the pairwise scan.
  for (const auto& e : catalog()) {
    if (!e.distributive || e.lattice.size() > 12) continue;
    const Lattice& l = e.lattice;
    const auto ids = enumerate_ideals(l);
    for (const Ideal& m : ids) {
      bool families = m != whole_ideal(l);
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << ids.size()) && families; ++mask) {
        ElementSet meet = l.all();
        bool some_inside = false;
        for (std::size_t i = 0; i < ids.size(); ++i)
          if ((mask >> i) & 1U) {
            meet = meet & ids[i].carrier;
            some_inside = some_inside || ids[i].subset_of(m);
          }
        if (meet.subset_of(m.carrier) && !some_inside) families = false;
      }
      CHECK(satisfies_family_condition(l, m) == families);
    }
  }
}

TEST_CASE("polars") {
  const Lattice b2 = fixture::b2().lattice();
  CHECK(polar(b2, ElementSet::single(at(b2, "x"))) == ideal_of(b2, "y"));
  const Lattice k5 = fixture::k5().lattice();
  CHECK(polar(k5, ElementSet::single(at(k5, "a"))) == zero_ideal(k5));
  for (const auto& e : catalog()) {
    if (!e.distributive) continue;
    CHECK(polar(e.lattice, ElementSet::single(0)) == whole_ideal(e.lattice));
  }
  CHECK(code_of([&] { polar(k5, ElementSet{}); }) == ErrorCode::kEmptySet);
  CHECK(double_polar(b2, ElementSet::single(at(b2, "x"))) == ideal_of(b2, "x"));
}

TEST_CASE("filters and ultrafilters") {
  const Lattice k5 = fixture::k5().lattice();
  const auto uk = ultrafilters(k5);
  REQUIRE(uk.size() == 1);
  CHECK(names(k5, uk.front().carrier) == std::set<std::string>{"c", "a", "b", "1"});
  const Lattice c3 = fixture::c3().lattice();
  const auto uc = ultrafilters(c3);
  REQUIRE(uc.size() == 1);
  CHECK(names(c3, uc.front().carrier) == std::set<std::string>{"m", "1"});
  const Lattice b2 = fixture::b2().lattice();
  Names ub;
  for (const Filter& f : ultrafilters(b2)) ub.insert(names(b2, f.carrier));
  CHECK(ub == Names{{"x", "1"}, {"y", "1"}});
  CHECK(ultrafilters(chain(1)).empty());
  CHECK(filters(chain(1)).empty());
}

TEST_CASE("S_P") {
  const Lattice k5 = fixture::k5().lattice();
  CHECK(s_p(k5, ideal_of(k5, "a")) == zero_ideal(k5));
  CHECK(code_of([&] { s_p(k5, ideal_of(k5, "c")); }) == ErrorCode::kNotPrime);
  const Lattice b2 = fixture::b2().lattice();
  CHECK(s_p(b2, ideal_of(b2, "x")) == ideal_of(b2, "x"));
  const Lattice c3 = fixture::c3().lattice();
  CHECK(s_p(c3, ideal_of(c3, "m")) == zero_ideal(c3));
}

TEST_CASE("spectra agree with the oracle on the catalog and every small distributive lattice") {
  for (const auto& e : catalog())
    if (e.distributive) check_against_oracle(e.lattice);
  for (const Lattice& l : distributive_lattices(8)) check_against_oracle(l);
}

TEST_CASE("spectrum report inclusions") {
  for (const Lattice& l : distributive_lattices(8)) {
    const SpectrumReport r = spectrum(l);
    for (const Ideal& s : r.specials) CHECK(contains_ideal(r.values, s));
    for (const Ideal& m : r.min_primes) CHECK(contains_ideal(r.primes, m));
    CHECK(r.val_of.size() == l.size() - 1);
    CHECK(r.s_p.size() == r.primes.size());
  }
}

TEST_CASE("zero ideal is prime in K5 although K5 is not a chain") {
  const Lattice k5 = fixture::k5().lattice();
  CHECK(is_prime(k5, zero_ideal(k5)));
  CHECK(!is_totally_ordered(k5));
}
