#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace semikit {

/// A finite lattice given by its order relation.  Validated on
/// construction: partial order with all binary meets and joins, hence a
/// bottom and a top.  Meet/join tables are precomputed.
struct FiniteLattice {
  int order = 0;
  std::vector<std::uint8_t> leq;  // row-major: leq[a*order+b] iff a <= b
  std::vector<int> meet_table, join_table;
  int bottom = -1, top = -1;

  bool le(int a, int b) const { return leq[static_cast<std::size_t>(a) * order + b] != 0; }
  int meet(int a, int b) const { return meet_table[static_cast<std::size_t>(a) * order + b]; }
  int join(int a, int b) const { return join_table[static_cast<std::size_t>(a) * order + b]; }

  /// Meet over a subset given as a bitmask; the empty meet is the top.
  int meet_of(std::uint32_t mask) const {
    int acc = top;
    for (int x = 0; x < order; ++x)
      if (mask >> x & 1) acc = meet(acc, x);
    return acc;
  }
  /// Join over a subset given as a bitmask; the empty join is the bottom.
  int join_of(std::uint32_t mask) const {
    int acc = bottom;
    for (int x = 0; x < order; ++x)
      if (mask >> x & 1) acc = join(acc, x);
    return acc;
  }
};

inline FiniteLattice make_lattice(const std::vector<std::vector<int>>& leq_rows) {
  const int n = static_cast<int>(leq_rows.size());
  if (n == 0) throw std::invalid_argument("empty lattice");
  FiniteLattice l;
  l.order = n;
  l.leq.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(leq_rows[a].size()) != n)
      throw std::invalid_argument("leq matrix is not square");
    for (int b = 0; b < n; ++b) l.leq[static_cast<std::size_t>(a) * n + b] = leq_rows[a][b] ? 1 : 0;
  }
  for (int a = 0; a < n; ++a) {
    if (!l.le(a, a)) throw std::invalid_argument("order not reflexive at " + std::to_string(a));
    for (int b = 0; b < n; ++b) {
      if (a != b && l.le(a, b) && l.le(b, a))
        throw std::invalid_argument("order not antisymmetric");
      for (int c = 0; c < n; ++c)
        if (l.le(a, b) && l.le(b, c) && !l.le(a, c))
          throw std::invalid_argument("order not transitive");
    }
  }
  auto bound = [&](int a, int b, bool lower) -> int {
    std::vector<int> cand;
    for (int x = 0; x < n; ++x)
      if (lower ? (l.le(x, a) && l.le(x, b)) : (l.le(a, x) && l.le(b, x))) cand.push_back(x);
    for (int g : cand) {
      bool extreme = true;
      for (int x : cand)
        if (lower ? !l.le(x, g) : !l.le(g, x)) {
          extreme = false;
          break;
        }
      if (extreme) return g;
    }
    return -1;
  };
  l.meet_table.assign(static_cast<std::size_t>(n) * n, -1);
  l.join_table.assign(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int m = bound(a, b, true);
      const int j = bound(a, b, false);
      if (m < 0 || j < 0)
        throw std::invalid_argument("pair (" + std::to_string(a) + "," + std::to_string(b) +
                                    ") lacks a meet or join");
      l.meet_table[static_cast<std::size_t>(a) * n + b] = m;
      l.join_table[static_cast<std::size_t>(a) * n + b] = j;
    }
  l.bottom = 0;
  l.top = 0;
  for (int x = 0; x < n; ++x) {
    l.bottom = l.meet(l.bottom, x);
    l.top = l.join(l.top, x);
  }
  return l;
}

inline FiniteLattice chain(int n) {
  std::vector<std::vector<int>> leq(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) leq[a][b] = 1;
  return make_lattice(leq);
}

/// Minimal elements of L minus the bottom.
inline std::vector<int> atoms(const FiniteLattice& l) {
  std::vector<int> out;
  for (int x = 0; x < l.order; ++x) {
    if (x == l.bottom) continue;
    bool minimal = true;
    for (int y = 0; y < l.order; ++y)
      if (y != x && y != l.bottom && l.le(y, x)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(x);
  }
  return out;
}

enum class Irreducibility { mi, smi, fmi, sfmi, ji, sji, fji, sfji };

/// The literal quantifier over all subsets X.  In a finite lattice the
/// f-variants coincide with the unrestricted ones; the conventions
/// meet(empty) = top and join(empty) = bottom apply.
inline bool irreducible(const FiniteLattice& l, int x, Irreducibility kind) {
  if (l.order > 20) throw std::invalid_argument("irreducibility sweep limited to order <= 20");
  const bool meets = kind == Irreducibility::mi || kind == Irreducibility::smi ||
                     kind == Irreducibility::fmi || kind == Irreducibility::sfmi;
  const bool strict = kind == Irreducibility::smi || kind == Irreducibility::sfmi ||
                      kind == Irreducibility::sji || kind == Irreducibility::sfji;
  const std::uint32_t all = (1u << l.order) - 1;
  for (std::uint32_t mask = 0; mask <= all; ++mask) {
    const int agg = meets ? l.meet_of(mask) : l.join_of(mask);
    const bool premise = strict ? (x == agg) : (meets ? l.le(agg, x) : l.le(x, agg));
    if (!premise) continue;
    bool witness = false;
    for (int y = 0; y < l.order && !witness; ++y) {
      if (!(mask >> y & 1)) continue;
      witness = strict ? (x == y) : (meets ? l.le(y, x) : l.le(x, y));
    }
    if (!witness) return false;
  }
  return true;
}

/// The induced lattice on {x : a <= x <= b}.
struct IntervalLattice {
  FiniteLattice lat;
  std::vector<int> elements;  // interval index -> original index
};

inline IntervalLattice interval(const FiniteLattice& l, int a, int b) {
  if (!l.le(a, b)) throw std::invalid_argument("interval endpoints not comparable");
  IntervalLattice out;
  for (int x = 0; x < l.order; ++x)
    if (l.le(a, x) && l.le(x, b)) out.elements.push_back(x);
  const int k = static_cast<int>(out.elements.size());
  std::vector<std::vector<int>> leq(k, std::vector<int>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) leq[i][j] = l.le(out.elements[i], out.elements[j]) ? 1 : 0;
  out.lat = make_lattice(leq);
  return out;
}

// --- lattice maps and the adjunction check ----------------------------------

struct LatticeMap {
  FiniteLattice source, target;
  std::vector<int> images;
};

inline void check_total(const LatticeMap& f) {
  if (static_cast<int>(f.images.size()) != f.source.order)
    throw std::invalid_argument("lattice map is not total");
  for (int v : f.images)
    if (v < 0 || v >= f.target.order) throw std::invalid_argument("lattice map image out of range");
}

inline bool is_order_preserving(const LatticeMap& f) {
  for (int a = 0; a < f.source.order; ++a)
    for (int b = 0; b < f.source.order; ++b)
      if (f.source.le(a, b) && !f.target.le(f.images[a], f.images[b])) return false;
  return true;
}

/// Preservation of all suprema; in a finite lattice this is the empty join
/// plus all binary joins.
inline bool is_sup_preserving(const LatticeMap& f) {
  if (f.images[f.source.bottom] != f.target.bottom) return false;
  for (int a = 0; a < f.source.order; ++a)
    for (int b = 0; b < f.source.order; ++b)
      if (f.images[f.source.join(a, b)] != f.target.join(f.images[a], f.images[b])) return false;
  return true;
}

inline bool is_inf_preserving(const LatticeMap& f) {
  if (f.images[f.source.top] != f.target.top) return false;
  for (int a = 0; a < f.source.order; ++a)
    for (int b = 0; b < f.source.order; ++b)
      if (f.images[f.source.meet(a, b)] != f.target.meet(f.images[a], f.images[b])) return false;
  return true;
}

inline bool is_injective(const LatticeMap& f) {
  std::set<int> seen(f.images.begin(), f.images.end());
  return static_cast<int>(seen.size()) == f.source.order;
}

inline bool is_surjective(const LatticeMap& f) {
  std::set<int> seen(f.images.begin(), f.images.end());
  return static_cast<int>(seen.size()) == f.target.order;
}

/// Structured result of checking the two-part hypothesis for an adjoint
/// pair q: L2 -> L1 (inf, onto) and m: L1 -> L2 (injective, sup) with
/// m(x) <= y iff x <= q(y), plus the bottom-fiber condition
/// q^{-1}(B1) = {B2}.
struct AdjunctionReport {
  bool m_injective = false;
  bool m_sup = false;
  bool q_inf = false;
  bool q_onto = false;
  bool adjoint_pair = false;
  bool hypothesis1 = false;  // all of the above
  bool hypothesis2 = false;  // q^{-1}(B1) = {B2}
};

inline AdjunctionReport check_adjunction(const LatticeMap& q, const LatticeMap& m) {
  check_total(q);
  check_total(m);
  if (q.source.order != m.target.order || q.target.order != m.source.order)
    throw std::invalid_argument("check_adjunction: q and m do not connect the same two lattices");
  const FiniteLattice& l1 = m.source;  // == q.target
  const FiniteLattice& l2 = m.target;  // == q.source

  AdjunctionReport rep;
  rep.m_injective = is_injective(m);
  rep.m_sup = is_sup_preserving(m);
  rep.q_inf = is_inf_preserving(q);
  rep.q_onto = is_surjective(q);
  rep.adjoint_pair = true;
  for (int x = 0; x < l1.order && rep.adjoint_pair; ++x)
    for (int y = 0; y < l2.order; ++y)
      if (l2.le(m.images[x], y) != l1.le(x, q.images[y])) {
        rep.adjoint_pair = false;
        break;
      }
  rep.hypothesis1 = rep.m_injective && rep.m_sup && rep.q_inf && rep.q_onto && rep.adjoint_pair;
  rep.hypothesis2 = true;
  for (int y = 0; y < l2.order; ++y)
    if ((q.images[y] == l1.bottom) != (y == l2.bottom)) {
      rep.hypothesis2 = false;
      break;
    }
  return rep;
}

/// Conclusion (a): Atoms(L1)m = Atoms(L2); conclusion (b):
/// Atoms(L1) = Atoms(L2)q.  Literal set comparisons.
inline std::pair<bool, bool> atoms_correspondence(const LatticeMap& q, const LatticeMap& m) {
  const auto a1 = atoms(m.source);
  const auto a2 = atoms(m.target);
  std::set<int> a1m, a2set(a2.begin(), a2.end()), a2q, a1set(a1.begin(), a1.end());
  for (int a : a1) a1m.insert(m.images[a]);
  for (int a : a2) a2q.insert(q.images[a]);
  return {a1m == a2set, a1set == a2q};
}

// --- seeded random generation for property suites ---------------------------

/// Random poset via transitive closure of a random DAG, rejection-sampled
/// until it is a lattice.
inline FiniteLattice random_lattice(std::mt19937_64& rng, int min_order, int max_order) {
  for (;;) {
    const int core = min_order + static_cast<int>(rng() % (max_order - min_order + 1));
    std::vector<std::vector<int>> leq(core, std::vector<int>(core, 0));
    for (int i = 0; i < core; ++i) leq[i][i] = 1;
    for (int i = 0; i < core; ++i)
      for (int j = i + 1; j < core; ++j)
        if (rng() % 3 == 0) leq[i][j] = 1;
    for (int k = 0; k < core; ++k)
      for (int i = 0; i < core; ++i)
        for (int j = 0; j < core; ++j)
          if (leq[i][k] && leq[k][j]) leq[i][j] = 1;
    try {
      return make_lattice(leq);
    } catch (const std::invalid_argument&) {
      // not a lattice, resample
    }
  }
}

struct AdjunctionFixture {
  FiniteLattice l1, l2;
  LatticeMap q;  // L2 -> L1
  LatticeMap m;  // L1 -> L2
};

/// Random adjoint pair built from a join-closed subset J of a random
/// lattice: L1 is J with the inclusion m, and q sends y to the largest
/// element of J below y.  With `force_bottom_fiber` the atoms of L2 are
/// put into J, which makes the bottom-fiber condition hold.
inline AdjunctionFixture random_adjunction(std::mt19937_64& rng, int max_order,
                                           bool force_bottom_fiber) {
  AdjunctionFixture fx;
  fx.l2 = random_lattice(rng, 3, max_order);
  std::vector<char> in(fx.l2.order, 0);
  in[fx.l2.bottom] = 1;
  if (force_bottom_fiber)
    for (int a : atoms(fx.l2)) in[a] = 1;
  for (int x = 0; x < fx.l2.order; ++x)
    if (rng() % 2 == 0) in[x] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 0; a < fx.l2.order; ++a)
      for (int b = 0; b < fx.l2.order; ++b)
        if (in[a] && in[b] && !in[fx.l2.join(a, b)]) {
          in[fx.l2.join(a, b)] = 1;
          changed = true;
        }
  }
  std::vector<int> elems;
  std::vector<int> idx(fx.l2.order, -1);
  for (int x = 0; x < fx.l2.order; ++x)
    if (in[x]) {
      idx[x] = static_cast<int>(elems.size());
      elems.push_back(x);
    }
  const int k = static_cast<int>(elems.size());
  std::vector<std::vector<int>> leq(k, std::vector<int>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) leq[i][j] = fx.l2.le(elems[i], elems[j]) ? 1 : 0;
  fx.l1 = make_lattice(leq);

  fx.m.source = fx.l1;
  fx.m.target = fx.l2;
  fx.m.images = elems;

  fx.q.source = fx.l2;
  fx.q.target = fx.l1;
  fx.q.images.assign(fx.l2.order, -1);
  for (int y = 0; y < fx.l2.order; ++y) {
    int best = fx.l2.bottom;
    for (int j : elems)
      if (fx.l2.le(j, y)) best = fx.l2.join(best, j);
    fx.q.images[y] = idx[best];
  }
  return fx;
}

}  // namespace semikit
