#include "declat/decomp.hpp"

#include <stdexcept>

namespace declat {
namespace {

Elem first_element_in(ElementSet s) {
  auto elems = s.elements();
  if (elems.empty()) throw std::logic_error("expected a nonempty difference of incomparable primes");
  return elems.front();
}

// n = 2: separate q1, q2 by x1 ∈ q2\q1, x2 ∈ q1\q2, split the pair, meet with a.
std::pair<Elem, Elem> disjointify_pair(const Lattice& l, const Ideal& q1, const Ideal& q2, Elem a) {
  const Elem x1 = first_element_in(q2.carrier.minus(q1.carrier));
  const Elem x2 = first_element_in(q1.carrier.minus(q2.carrier));
  auto w = find_witness(l, x1, x2);
  if (!w) throw Error(ErrorCode::kNotDecomposable, l.name() + " at (" + l.label(x1) + "," + l.label(x2) + ")");
  return {l.meet(a, w->abar), l.meet(a, w->bbar)};
}

std::vector<Elem> disjointify_rec(const Lattice& l, const std::vector<Ideal>& q, Elem a) {
  const std::size_t n = q.size();
  if (n == 2) {
    auto [a1, a2] = disjointify_pair(l, q[0], q[1], a);
    return {a1, a2};
  }
  // Step 1 on Q_1..Q_{n-1}, step 2 on Q_2..Q_n.
  const std::vector<Ideal> head(q.begin(), q.end() - 1);
  const std::vector<Ideal> tail(q.begin() + 1, q.end());
  const auto b = disjointify_rec(l, head, a);  // b[i] pairs with Q_{i+1}
  const auto c = disjointify_rec(l, tail, a);  // c[i] pairs with Q_{i+2}

  std::vector<Elem> out(n);
  // Step 3: middle indices combine both halves.
  for (std::size_t i = 1; i + 1 < n; ++i) out[i] = l.meet(b[i], c[i - 1]);
  // Ends: a disjoint pair separating Q_1 and Q_n.
  auto [f1, fn] = disjointify_pair(l, q.front(), q.back(), a);
  out.front() = l.meet(f1, b.front());
  out.back() = l.meet(fn, c.back());
  return out;
}

void check_disjointify_post(const Lattice& l, const std::vector<Ideal>& q, Elem a, const std::vector<Elem>& parts) {
  for (std::size_t i = 0; i < q.size(); ++i) {
    const Elem ai = parts[i];
    if (ai == Lattice::bottom() || !l.less(ai, a) || q[i].contains(ai))
      throw std::logic_error("disjointify produced an out-of-range part");
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (j == i) continue;
      if (!q[j].contains(ai) || l.meet(ai, parts[j]) != Lattice::bottom())
        throw std::logic_error("disjointify produced overlapping parts");
    }
  }
}

}  // namespace

std::optional<DecompositionWitness> find_witness(const Lattice& l, Elem a, Elem b) {
  const Elem m = l.meet(a, b);
  for (Elem abar = 0; abar < l.size(); ++abar) {
    if (l.join(abar, m) != a) continue;
    for (Elem bbar = 0; bbar < l.size(); ++bbar)
      if (l.join(bbar, m) == b && l.meet(abar, bbar) == Lattice::bottom()) return DecompositionWitness{a, b, abar, bbar};
  }
  return std::nullopt;
}

DecomposabilityResult is_decomposable(const Lattice& l) {
  require_distributive(l);
  DecomposabilityResult r;
  for (Elem a = 0; a < l.size(); ++a) {
    for (Elem b = a + 1; b < l.size(); ++b) {
      if (l.comparable(a, b)) continue;
      auto w = find_witness(l, a, b);
      if (!w) {
        r.decomposable = false;
        r.witnesses.clear();
        r.failing_pair = IndexPair{a, b};
        return r;
      }
      r.witnesses.push_back(*w);
    }
  }
  return r;
}

bool is_strongly_projectable(const Lattice& l) {
  require_distributive(l);
  const Ideal whole = whole_ideal(l);
  for (Elem a = 0; a < l.size(); ++a)
    if (ideal_join(l, principal_ideal(l, a), polar(l, ElementSet::single(a))) != whole) return false;
  return true;
}

bool is_projectable(const Lattice& l) {
  require_distributive(l);
  const Ideal whole = whole_ideal(l);
  for (Elem x = 0; x < l.size(); ++x) {
    const Ideal p = polar(l, ElementSet::single(x));
    if (ideal_join(l, p, polar(l, p.carrier)) != whole) return false;
  }
  return true;
}

std::vector<Elem> disjointify(const Lattice& l, const std::vector<Ideal>& q, Elem a) {
  if (q.size() < 2) throw Error(ErrorCode::kInvalidArgument, "disjointify needs at least two primes");
  const auto dec = is_decomposable(l);
  if (!dec.decomposable) {
    const auto [x, y] = *dec.failing_pair;
    throw Error(ErrorCode::kNotDecomposable, l.name() + " at (" + l.label(x) + "," + l.label(y) + ")");
  }
  for (const Ideal& p : q)
    if (!is_prime(l, p)) throw Error(ErrorCode::kNotPrime, "(" + l.label(p.generator) + "]");
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = i + 1; j < q.size(); ++j)
      if (comparable(q[i], q[j]))
        throw Error(ErrorCode::kNotIncomparable,
                    "(" + l.label(q[i].generator) + "], (" + l.label(q[j].generator) + "]");
  for (const Ideal& p : q)
    if (p.contains(a)) throw Error(ErrorCode::kElementInsidePrime, l.label(a) + " in (" + l.label(p.generator) + "]");

  auto parts = disjointify_rec(l, q, a);
  check_disjointify_post(l, q, a, parts);
  return parts;
}

SpecialDecomposition decompose_special(const Lattice& l, Elem a) {
  const auto dec = is_decomposable(l);
  if (!dec.decomposable) {
    const auto [x, y] = *dec.failing_pair;
    throw Error(ErrorCode::kNotDecomposable, l.name() + " at (" + l.label(x) + "," + l.label(y) + ")");
  }
  if (a == Lattice::bottom()) throw Error(ErrorCode::kBottomElement, l.label(a));

  SpecialDecomposition out;
  out.element = a;
  out.value_map = values_of(l, a);
  if (out.value_map.size() == 1) {
    out.parts = {a};
  } else {
    out.parts = disjointify(l, out.value_map, a);
  }
  return out;
}

}  // namespace declat
