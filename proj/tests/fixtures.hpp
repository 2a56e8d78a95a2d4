#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "declat/ideals.hpp"
#include "declat/lattice.hpp"
#include "oracle.hpp"

namespace fixture {

struct Raw {
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;

  declat::Lattice lattice() const { return declat::build_from_covers(name, labels, covers); }
  oracle::Order order() const { return oracle::from_covers(labels, covers); }
};

inline Raw k5() { return {"K5", {"0", "c", "a", "b", "1"}, {{"0", "c"}, {"c", "a"}, {"c", "b"}, {"a", "1"}, {"b", "1"}}}; }
inline Raw n5() { return {"N5", {"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}}}; }
inline Raw m3() {
  return {"M3", {"0", "x", "y", "z", "1"}, {{"0", "x"}, {"0", "y"}, {"0", "z"}, {"x", "1"}, {"y", "1"}, {"z", "1"}}};
}
inline Raw b2() { return {"B2", {"0", "x", "y", "1"}, {{"0", "x"}, {"0", "y"}, {"x", "1"}, {"y", "1"}}}; }
inline Raw c3() { return {"C3", {"0", "m", "1"}, {{"0", "m"}, {"m", "1"}}}; }
inline Raw b3() {
  return {"B3",
          {"0", "x", "y", "z", "xy", "xz", "yz", "1"},
          {{"0", "x"}, {"0", "y"}, {"0", "z"}, {"x", "xy"}, {"x", "xz"}, {"y", "xy"}, {"y", "yz"}, {"z", "xz"},
           {"z", "yz"}, {"xy", "1"}, {"xz", "1"}, {"yz", "1"}}};
}

inline std::set<std::string> names(const declat::Lattice& l, declat::ElementSet s) {
  std::set<std::string> out;
  s.for_each([&](declat::Elem e) { out.insert(l.label(e)); });
  return out;
}

inline std::set<std::set<std::string>> names(const declat::Lattice& l, const std::vector<declat::Ideal>& family) {
  std::set<std::set<std::string>> out;
  for (const auto& i : family) out.insert(names(l, i.carrier));
  return out;
}

inline declat::Ideal ideal_of(const declat::Lattice& l, const std::string& generator) {
  return declat::principal_ideal(l, *l.index_of(generator));
}

inline declat::Elem at(const declat::Lattice& l, const std::string& label) { return *l.index_of(label); }

}  // namespace fixture
