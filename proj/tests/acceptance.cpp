// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <functional>
#include <iostream>

#include "cli_harness.hpp"
#include "declat/decomp.hpp"
#include "declat/gen.hpp"
#include "declat/ideals.hpp"
#include "declat/theorems.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace declat;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

bool same_shape(const Lattice& l, const oracle::Order& o) {
  return static_cast<int>(l.size()) == o.size() && oracle::canonical(oracle::from_lattice(l)) == oracle::canonical(o);
}

std::vector<Lattice> decomposable_up_to_8() {
  std::vector<Lattice> out;
  for (const Lattice& l : distributive_lattices(8))
    if (!oracle::decomposability_failure(oracle::from_lattice(l))) out.push_back(l);
  return out;
}

Outcome fixtures() {
  Outcome r;
  const auto start = std::chrono::steady_clock::now();

  const auto k5 = fixture::k5();
  const Lattice lk = k5.lattice();
  const auto ok = k5.order();
  r.require(!oracle::distributivity_failure(ok) && lk.distributive(), "K5 distributive");
  const auto fail = oracle::decomposability_failure(ok);
  const auto dec = is_decomposable(lk);
  r.require(fail && ok.labels[fail->first] == "a" && ok.labels[fail->second] == "b", "oracle K5 failing pair");
  r.require(!dec.decomposable && dec.failing_pair && lk.label(dec.failing_pair->first) == "a" &&
                lk.label(dec.failing_pair->second) == "b",
            "K5 failing pair (a,b)");

  for (const auto& raw : {fixture::m3(), fixture::n5()}) {
    const Lattice l = raw.lattice();
    const auto expected = oracle::distributivity_failure(oracle::from_lattice(l));
    const auto& w = l.distributivity_witness();
    r.require(expected && w && static_cast<int>(w->a) == (*expected)[0] && static_cast<int>(w->b) == (*expected)[1] &&
                  static_cast<int>(w->c) == (*expected)[2],
              raw.name + " witness triple");
    bool rejected = false;
    try {
      enumerate_ideals(l);
    } catch (const Error& e) {
      rejected = e.code() == ErrorCode::kNotDistributive;
    }
    r.require(rejected, raw.name + " rejected as non-distributive");
  }

  std::vector<Lattice> positives{fixture::b2().lattice(), fixture::b3().lattice()};
  for (std::size_t n = 1; n <= 6; ++n) positives.push_back(chain(n));
  for (std::size_t m = 2; m <= 4; ++m)
    for (std::size_t n = m; n <= 4; ++n) positives.push_back(chain_product(m, n));
  for (const Lattice& l : positives)
    r.require(is_decomposable(l).decomposable && !oracle::decomposability_failure(oracle::from_lattice(l)),
              l.name() + " decomposable");

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.require(secs < 1.0, "runtime " + std::to_string(secs) + " s");
  return r;
}

Outcome sweep() {
  Outcome r;
  const auto start = std::chrono::steady_clock::now();
  std::size_t lattices = 0, verdicts = 0;
  for (const Lattice& l : decomposable_up_to_8()) {
    ++lattices;
    const auto vs = check_all(l);
    r.require(vs.size() == 23, "23 verdicts");
    for (const auto& v : vs) {
      ++verdicts;
      r.require(v.status == VerdictStatus::kHolds, v.theorem_id + " on " + l.name());
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.require(lattices > 0, "no lattices");
  r.require(secs < 60.0, "runtime " + std::to_string(secs) + " s");
  if (r.pass)
    r.detail = std::to_string(lattices) + " lattices, " + std::to_string(verdicts) + " verdicts hold";
  return r;
}

Outcome necessity() {
  Outcome r;
  const auto k5 = fixture::k5().order();
  // Direct pair check: a and b lie outside (c] but a∧b = c lies inside.
  const int a = 2, b = 3, c = 1;
  r.require(!k5.le[a][c] && !k5.le[b][c] && *oracle::meet(k5, a, b) == c, "a∧b = c with a, b outside (c]");
  r.require(!oracle::is_prime(k5, 0b00011), "(c] not prime");
  r.require(oracle::is_prime(k5, 0b00001), "{0} prime");
  r.require(!oracle::totally_ordered(k5), "K5 not a chain");

  for (const char* id : {"T3.1:(2)=>(1)", "C3.3:(3)zero-prime=>chain"}) {
    const auto found = search_counterexamples(id, 5);
    bool k5_found = false;
    for (const auto& f : found) {
      r.require(oracle::decomposability_failure(oracle::from_lattice(f.lattice)).has_value(),
                std::string(id) + " found a decomposable lattice");
      k5_found = k5_found || same_shape(f.lattice, k5);
    }
    r.require(k5_found, std::string(id) + " misses K5");
  }
  const auto w = find_implication_failure(fixture::k5().lattice(), parse_implication("T3.1:(2)=>(1)"));
  r.require(w && w->scope == "P=(c]", "T3.1 witness at P=(c]");
  return r;
}

Outcome round_trip() {
  Outcome r;
  std::size_t elements = 0;
  for (const Lattice& l : decomposable_up_to_8()) {
    const oracle::Order o = oracle::from_lattice(l);
    for (Elem a = 1; a < l.size(); ++a) {
      ++elements;
      const auto d = decompose_special(l, a);
      int joined = 0;
      std::set<oracle::Set> values;
      for (std::size_t i = 0; i < d.parts.size(); ++i) {
        const int p = static_cast<int>(d.parts[i]);
        joined = *oracle::join(o, joined, p);
        const auto vals = oracle::values_of(o, p);
        r.require(vals.size() == 1, "part with one value in " + l.name());
        if (!vals.empty()) values.insert(vals.front());
        for (std::size_t j = i + 1; j < d.parts.size(); ++j)
          r.require(*oracle::meet(o, p, static_cast<int>(d.parts[j])) == 0, "disjoint parts in " + l.name());
      }
      r.require(joined == static_cast<int>(a), "parts join to a in " + l.name());
      r.require(values.size() == d.parts.size(), "distinct values in " + l.name());
    }
  }
  bool k5_error = false;
  try {
    const Lattice k5 = fixture::k5().lattice();
    decompose_special(k5, k5.top());
  } catch (const Error& e) {
    k5_error = e.code() == ErrorCode::kNotDecomposable;
  }
  r.require(k5_error, "K5 raises NotDecomposable");
  if (r.pass) r.detail = std::to_string(elements) + " elements decomposed";
  return r;
}

Outcome enumeration() {
  Outcome r;
  std::string counts;
  for (int n = 1; n <= 8; ++n) {
    std::size_t birkhoff = 0;
    for (const Lattice& l : distributive_lattices(n))
      if (static_cast<int>(l.size()) == n) ++birkhoff;
    const std::size_t direct = oracle::direct_distributive(n).size();
    r.require(birkhoff == direct, "n=" + std::to_string(n) + ": " + std::to_string(birkhoff) + " vs " +
                                      std::to_string(direct));
    counts += (counts.empty() ? "" : ",") + std::to_string(birkhoff);
  }
  if (r.pass) r.detail = "counts " + counts;
  return r;
}

Outcome duality() {
  Outcome r;
  for (const Lattice& l : decomposable_up_to_8()) {
    const oracle::Order o = oracle::from_lattice(l);
    const auto ultra = ultrafilters(l);
    const auto mins = min_primes(l);
    r.require(ultra.size() == mins.size(), "sizes in " + l.name());
    std::vector<Ideal> complements;
    for (const Filter& f : ultra) {
      const ElementSet rest = l.all().minus(f.carrier);
      r.require(is_ideal(l, rest), "complement is an ideal in " + l.name());
      if (!is_ideal(l, rest)) continue;
      const Ideal q = make_ideal(l, rest);
      r.require(contains_ideal(mins, q), "complement is a minimal prime in " + l.name());
      r.require(!contains_ideal(complements, q), "injective in " + l.name());
      complements.push_back(q);
    }
    // Same sets by brute force.
    const oracle::Set everything = (oracle::Set{1} << o.size()) - 1;
    std::set<oracle::Set> expected;
    for (oracle::Set m : oracle::min_primes(o)) expected.insert(m);
    std::set<oracle::Set> got;
    for (oracle::Set u : oracle::ultrafilters(o)) got.insert(everything & ~u);
    r.require(got == expected, "oracle duality in " + l.name());
  }
  return r;
}

Outcome cli_contract() {
  Outcome r;
  for (const auto& c : cli::cases()) {
    const std::string problem = cli::verify(c);
    r.require(problem.empty(), problem);
  }
  const auto first = cli::run("export-dot catalog:K5");
  const auto second = cli::run("export-dot data/k5.json");
  r.require(first.exit_code == 0 && first.output == second.output, "DOT not byte-stable");
  if (r.pass) r.detail = std::to_string(cli::cases().size()) + " golden cases";
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"fixture correctness", fixtures},
      {"full theorem sweep", sweep},
      {"necessity witnesses", necessity},
      {"decomposition round trip", round_trip},
      {"enumeration cross-validation", enumeration},
      {"ultrafilter duality", duality},
      {"CLI contract", cli_contract},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += o.pass ? 0 : 1;
    std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << ": " << criteria[i].first;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
  }
  return failures == 0 ? 0 : 1;
}
