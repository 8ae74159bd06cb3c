#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace semikit {

/// Thrown when an exhaustive search exceeds its configured node budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Counter shared by backtracking searches.  `charge` throws once the
/// configured limit is crossed, so callers can distinguish "searched
/// everything" from "gave up".
struct Budget {
  std::uint64_t limit = 10'000'000;
  std::uint64_t used = 0;
  void charge(std::uint64_t n = 1) {
    used += n;
    if (used > limit) throw BudgetExceeded("search budget exceeded");
  }
};

/// A finite semigroup as an order x order multiplication table over the
/// carrier [0, order).  table[a*order+b] is the product a*b.  Instances
/// are immutable after construction; every operation below is a pure
/// function of its inputs.
struct FiniteSemigroup {
  int order = 0;
  std::vector<int> table;
  std::string name;

  int at(int a, int b) const { return table[static_cast<std::size_t>(a) * order + b]; }

  bool same_table(const FiniteSemigroup& other) const {
    return order == other.order && table == other.table;
  }
};

namespace detail {
inline void check_element(const FiniteSemigroup& s, int x, const char* what) {
  if (x < 0 || x >= s.order)
    throw std::invalid_argument(std::string(what) + ": element index out of range");
}
}  // namespace detail

/// Validates a candidate multiplication table: square, entries in range,
/// associative.  Reports the first violating triple (a,b,c) otherwise.
inline FiniteSemigroup validate_associative(const std::vector<std::vector<int>>& rows,
                                            std::string name = "") {
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw std::invalid_argument("empty table");
  FiniteSemigroup s;
  s.order = n;
  s.name = std::move(name);
  s.table.reserve(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(rows[a].size()) != n)
      throw std::invalid_argument("table is not square at row " + std::to_string(a));
    for (int b = 0; b < n; ++b) {
      const int v = rows[a][b];
      if (v < 0 || v >= n)
        throw std::invalid_argument("entry out of range at (" + std::to_string(a) + "," +
                                    std::to_string(b) + ")");
      s.table.push_back(v);
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = s.at(a, b);
      for (int c = 0; c < n; ++c)
        if (s.at(ab, c) != s.at(a, s.at(b, c)))
          throw std::invalid_argument("associativity fails at (" + std::to_string(a) + "," +
                                      std::to_string(b) + "," + std::to_string(c) + ")");
    }
  return s;
}

inline FiniteSemigroup validate_associative_flat(int order, std::vector<int> flat,
                                                 std::string name = "") {
  std::vector<std::vector<int>> rows(order);
  for (int a = 0; a < order; ++a)
    rows[a].assign(flat.begin() + static_cast<std::ptrdiff_t>(a) * order,
                   flat.begin() + static_cast<std::ptrdiff_t>(a + 1) * order);
  return validate_associative(rows, std::move(name));
}

inline bool is_associative(int order, const std::vector<int>& flat) {
  auto at = [&](int a, int b) { return flat[static_cast<std::size_t>(a) * order + b]; };
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      const int ab = at(a, b);
      for (int c = 0; c < order; ++c)
        if (at(ab, c) != at(a, at(b, c))) return false;
    }
  return true;
}

/// Least multiplication-closed superset of `gens` plus the induced table,
/// relabeled to [0,k) in ascending order of the original indices.
struct GeneratedSub {
  std::vector<int> elements;       // sorted original indices
  std::vector<int> new_index;      // original index -> new index, -1 outside
  FiniteSemigroup sub;
};

inline GeneratedSub subsemigroup_generated(const FiniteSemigroup& s, std::vector<int> gens) {
  if (gens.empty()) throw std::invalid_argument("empty generator set");
  for (int g : gens) detail::check_element(s, g, "subsemigroup_generated");
  std::vector<char> in(s.order, 0);
  std::vector<int> work;
  for (int g : gens)
    if (!in[g]) { in[g] = 1; work.push_back(g); }
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (int p : {s.at(work[i], work[j]), s.at(work[j], work[i])})
        if (!in[p]) { in[p] = 1; work.push_back(p); }
  GeneratedSub out;
  out.new_index.assign(s.order, -1);
  for (int x = 0; x < s.order; ++x)
    if (in[x]) {
      out.new_index[x] = static_cast<int>(out.elements.size());
      out.elements.push_back(x);
    }
  const int k = static_cast<int>(out.elements.size());
  out.sub.order = k;
  out.sub.name = s.name.empty() ? "" : s.name + "-sub";
  out.sub.table.resize(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      out.sub.table[static_cast<std::size_t>(i) * k + j] =
          out.new_index[s.at(out.elements[i], out.elements[j])];
  return out;
}

/// Componentwise product; pairs enumerated row-major, so (a,b) has index
/// a*|T|+b.
inline FiniteSemigroup direct_product(const FiniteSemigroup& s, const FiniteSemigroup& t) {
  FiniteSemigroup p;
  p.order = s.order * t.order;
  p.name = (s.name.empty() || t.name.empty()) ? "" : s.name + "x" + t.name;
  p.table.resize(static_cast<std::size_t>(p.order) * p.order);
  for (int a = 0; a < s.order; ++a)
    for (int b = 0; b < t.order; ++b)
      for (int c = 0; c < s.order; ++c)
        for (int d = 0; d < t.order; ++d) {
          const int x = a * t.order + b;
          const int y = c * t.order + d;
          p.table[static_cast<std::size_t>(x) * p.order + y] =
              s.at(a, c) * t.order + t.at(b, d);
        }
  return p;
}

/// Collapse a two-sided ideal to a single zero.  Non-ideal elements keep
/// their relative order at indices [0, m); the zero is the last index m.
struct ReesQuotientResult {
  FiniteSemigroup quotient;
  std::vector<int> projection;  // original index -> quotient index
  int zero = -1;
};

inline ReesQuotientResult rees_quotient(const FiniteSemigroup& s, const std::vector<int>& ideal) {
  if (ideal.empty()) throw std::invalid_argument("rees_quotient: empty ideal");
  std::vector<char> in(s.order, 0);
  for (int x : ideal) {
    detail::check_element(s, x, "rees_quotient");
    in[x] = 1;
  }
  for (int i = 0; i < s.order; ++i)
    if (in[i])
      for (int x = 0; x < s.order; ++x) {
        if (!in[s.at(x, i)])
          throw std::invalid_argument("not an ideal: " + std::to_string(x) + "*" +
                                      std::to_string(i) + " escapes");
        if (!in[s.at(i, x)])
          throw std::invalid_argument("not an ideal: " + std::to_string(i) + "*" +
                                      std::to_string(x) + " escapes");
      }
  ReesQuotientResult out;
  out.projection.assign(s.order, -1);
  int next = 0;
  for (int x = 0; x < s.order; ++x)
    if (!in[x]) out.projection[x] = next++;
  out.zero = next;
  for (int x = 0; x < s.order; ++x)
    if (in[x]) out.projection[x] = out.zero;
  const int m = next + 1;
  out.quotient.order = m;
  out.quotient.name = s.name.empty() ? "" : s.name + "/I";
  out.quotient.table.assign(static_cast<std::size_t>(m) * m, out.zero);
  for (int a = 0; a < s.order; ++a)
    for (int b = 0; b < s.order; ++b)
      out.quotient.table[static_cast<std::size_t>(out.projection[a]) * m + out.projection[b]] =
          out.projection[s.at(a, b)];
  return out;
}

/// A partition of the carrier compatible with multiplication.  Block ids
/// are contiguous from 0 in order of first appearance.
struct Congruence {
  std::vector<int> block;
  int blocks = 0;
};

namespace detail {
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

inline Congruence normalize_partition(const std::vector<int>& root, int n) {
  Congruence c;
  c.block.assign(n, -1);
  std::vector<int> remap(n, -1);
  for (int x = 0; x < n; ++x) {
    const int r = root[x];
    if (remap[r] < 0) remap[r] = c.blocks++;
    c.block[x] = remap[r];
  }
  return c;
}
}  // namespace detail

/// Least congruence containing the seed pairs: union-find plus a worklist
/// of one-sided translates.
inline Congruence congruence_closure(const FiniteSemigroup& s,
                                     const std::vector<std::pair<int, int>>& seeds) {
  detail::UnionFind uf(s.order);
  std::queue<std::pair<int, int>> work;
  for (auto [a, b] : seeds) {
    detail::check_element(s, a, "congruence_closure");
    detail::check_element(s, b, "congruence_closure");
    if (uf.unite(a, b)) work.emplace(a, b);
  }
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop();
    for (int x = 0; x < s.order; ++x) {
      if (uf.unite(s.at(x, a), s.at(x, b))) work.emplace(s.at(x, a), s.at(x, b));
      if (uf.unite(s.at(a, x), s.at(b, x))) work.emplace(s.at(a, x), s.at(b, x));
    }
  }
  std::vector<int> root(s.order);
  for (int x = 0; x < s.order; ++x) root[x] = uf.find(x);
  return detail::normalize_partition(root, s.order);
}

/// Compatibility: a~b implies xa~xb and ax~bx for every x.  Returns a
/// witness triple (a,b,x) on failure.
inline std::optional<std::array<int, 3>> compatibility_witness(const FiniteSemigroup& s,
                                                               const Congruence& c) {
  for (int a = 0; a < s.order; ++a)
    for (int b = a + 1; b < s.order; ++b) {
      if (c.block[a] != c.block[b]) continue;
      for (int x = 0; x < s.order; ++x) {
        if (c.block[s.at(x, a)] != c.block[s.at(x, b)]) return std::array<int, 3>{a, b, x};
        if (c.block[s.at(a, x)] != c.block[s.at(b, x)]) return std::array<int, 3>{a, b, x};
      }
    }
  return std::nullopt;
}

inline bool is_compatible(const FiniteSemigroup& s, const Congruence& c) {
  return !compatibility_witness(s, c).has_value();
}

/// Quotient by a compatible partition; blocks become elements.
inline FiniteSemigroup quotient(const FiniteSemigroup& s, const Congruence& c) {
  if (auto w = compatibility_witness(s, c))
    throw std::invalid_argument("incompatible partition: elements " + std::to_string((*w)[0]) +
                                "~" + std::to_string((*w)[1]) + " split by " +
                                std::to_string((*w)[2]));
  std::vector<int> rep(c.blocks, -1);
  for (int x = 0; x < s.order; ++x)
    if (rep[c.block[x]] < 0) rep[c.block[x]] = x;
  FiniteSemigroup q;
  q.order = c.blocks;
  q.name = s.name.empty() ? "" : s.name + "/~";
  q.table.resize(static_cast<std::size_t>(q.order) * q.order);
  for (int i = 0; i < q.order; ++i)
    for (int j = 0; j < q.order; ++j)
      q.table[static_cast<std::size_t>(i) * q.order + j] = c.block[s.at(rep[i], rep[j])];
  return q;
}

/// A map between carriers; `homomorphic` is checked on demand.
struct ElementMap {
  std::vector<int> images;  // domain index -> codomain index
};

inline bool is_homomorphism(const FiniteSemigroup& dom, const FiniteSemigroup& cod,
                            const std::vector<int>& images) {
  if (static_cast<int>(images.size()) != dom.order) return false;
  for (int a = 0; a < dom.order; ++a)
    for (int b = 0; b < dom.order; ++b)
      if (images[dom.at(a, b)] != cod.at(images[a], images[b])) return false;
  return true;
}

inline bool is_surjective_onto(const FiniteSemigroup& cod, const std::vector<int>& images) {
  std::vector<char> hit(cod.order, 0);
  for (int v : images) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

/// Smallest generating set found by increasing-size lexicographic search.
inline std::vector<int> minimal_generating_set(const FiniteSemigroup& s) {
  std::vector<int> subset;
  std::vector<int> best;
  auto generates = [&](const std::vector<int>& gens) {
    return subsemigroup_generated(s, gens).sub.order == s.order;
  };
  for (int size = 1; size <= s.order; ++size) {
    subset.clear();
    // lexicographically first generating subset of this size, if any
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      if (generates(idx)) return idx;
      int i = size - 1;
      while (i >= 0 && idx[i] == s.order - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return best;  // unreachable: the full carrier always generates
}

namespace detail {
// Expresses every element of S as a product of generators: elements are
// listed in discovery order, each with the pair of earlier positions whose
// product introduced it (-1,-1 for generators).
struct GeneratorExpressions {
  std::vector<int> element;                   // position -> carrier index
  std::vector<std::pair<int, int>> parents;   // position -> producing pair
  std::vector<int> position;                  // carrier index -> position
};

inline GeneratorExpressions generator_expressions(const FiniteSemigroup& s,
                                                  const std::vector<int>& gens) {
  GeneratorExpressions ge;
  ge.position.assign(s.order, -1);
  for (int g : gens)
    if (ge.position[g] < 0) {
      ge.position[g] = static_cast<int>(ge.element.size());
      ge.element.push_back(g);
      ge.parents.emplace_back(-1, -1);
    }
  for (std::size_t i = 0; i < ge.element.size(); ++i)
    for (std::size_t j = 0; j < ge.element.size(); ++j) {
      const int p = s.at(ge.element[i], ge.element[j]);
      if (ge.position[p] < 0) {
        ge.position[p] = static_cast<int>(ge.element.size());
        ge.element.push_back(p);
        ge.parents.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  return ge;
}
}  // namespace detail

/// All homomorphisms (or all surjective ones) S -> T, in lexicographic
/// order of generator images.  Backtracks over images of a minimal
/// generating set of S; the budget counts candidate assignments.
inline std::vector<ElementMap> find_homomorphisms(const FiniteSemigroup& s,
                                                  const FiniteSemigroup& t, bool surjective_only,
                                                  Budget budget = {}) {
  const std::vector<int> gens = minimal_generating_set(s);
  const auto ge = detail::generator_expressions(s, gens);
  const int m = static_cast<int>(gens.size());

  double candidates = 1;
  for (int i = 0; i < m; ++i) candidates *= t.order;
  if (candidates > static_cast<double>(budget.limit))
    throw BudgetExceeded("homomorphism search: |T|^|gens| exceeds budget");

  std::vector<ElementMap> found;
  std::vector<int> choice(m, 0);
  while (true) {
    budget.charge();
    // derive every element's image from the generator images
    std::vector<int> img(s.order, -1);
    for (std::size_t pos = 0; pos < ge.element.size(); ++pos) {
      const int e = ge.element[pos];
      // generators occupy the leading positions in discovery order
      img[e] = ge.parents[pos].first < 0
                   ? choice[pos]
                   : t.at(img[ge.element[ge.parents[pos].first]],
                          img[ge.element[ge.parents[pos].second]]);
    }
    bool hom = true;
    for (int a = 0; a < s.order && hom; ++a)
      for (int b = 0; b < s.order; ++b)
        if (img[s.at(a, b)] != t.at(img[a], img[b])) {
          hom = false;
          break;
        }
    if (hom && (!surjective_only || is_surjective_onto(t, img)))
      found.push_back(ElementMap{std::move(img)});
    int i = m - 1;
    while (i >= 0 && choice[i] == t.order - 1) choice[i--] = 0;
    if (i < 0) break;
    ++choice[i];
  }
  return found;
}

/// All multiplication-closed subsets, as sorted element lists, in
/// ascending bitmask order.  Guarded for small carriers only.
inline std::vector<std::vector<int>> all_subsemigroups(const FiniteSemigroup& s) {
  if (s.order > 24) throw BudgetExceeded("subsemigroup enumeration: carrier too large");
  std::vector<std::vector<int>> subs;
  const std::uint32_t full = (s.order == 32) ? 0xffffffffu : ((1u << s.order) - 1);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    bool closed = true;
    for (int a = 0; a < s.order && closed; ++a) {
      if (!(mask >> a & 1)) continue;
      for (int b = 0; b < s.order; ++b) {
        if (!(mask >> b & 1)) continue;
        if (!(mask >> s.at(a, b) & 1)) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    std::vector<int> elems;
    for (int a = 0; a < s.order; ++a)
      if (mask >> a & 1) elems.push_back(a);
    subs.push_back(std::move(elems));
  }
  return subs;
}

/// Division: T divides S iff some subsemigroup of S maps onto T.
inline bool divides(const FiniteSemigroup& t, const FiniteSemigroup& s, Budget budget = {}) {
  for (const auto& elems : all_subsemigroups(s)) {
    if (static_cast<int>(elems.size()) < t.order) continue;
    const auto sub = subsemigroup_generated(s, elems);
    if (!find_homomorphisms(sub.sub, t, /*surjective_only=*/true, budget).empty()) return true;
  }
  return false;
}

/// The unique idempotent in the cyclic subsemigroup of x.
inline int omega_power(const FiniteSemigroup& s, int x) {
  detail::check_element(s, x, "omega_power");
  int p = x;
  for (int k = 0; k < 2 * s.order + 2; ++k) {
    if (s.at(p, p) == p) return p;
    p = s.at(p, x);
  }
  throw std::logic_error("omega_power: no idempotent found (table not associative?)");
}

/// Isomorphism test by backtracking over bijections with forced-image
/// propagation.
inline bool is_isomorphic(const FiniteSemigroup& s, const FiniteSemigroup& t, Budget budget = {}) {
  if (s.order != t.order) return false;
  const int n = s.order;

  // cheap invariants: idempotency and row/column value counts
  auto profile = [](const FiniteSemigroup& g) {
    std::vector<std::array<int, 3>> prof(g.order);
    for (int a = 0; a < g.order; ++a) {
      std::vector<char> row(g.order, 0), col(g.order, 0);
      for (int b = 0; b < g.order; ++b) {
        row[g.at(a, b)] = 1;
        col[g.at(b, a)] = 1;
      }
      prof[a] = {g.at(a, a) == a ? 1 : 0,
                 static_cast<int>(std::count(row.begin(), row.end(), 1)),
                 static_cast<int>(std::count(col.begin(), col.end(), 1))};
    }
    return prof;
  };
  auto ps = profile(s), pt = profile(t);
  {
    auto cs = ps, ct = pt;
    std::sort(cs.begin(), cs.end());
    std::sort(ct.begin(), ct.end());
    if (cs != ct) return false;
  }

  std::vector<int> img(n, -1), pre(n, -1);
  // assign images for domain elements 0..n-1 in order, propagating products
  std::vector<std::pair<int, int>> trail;
  auto assign = [&](int a, int b) -> bool {
    if (img[a] >= 0) return img[a] == b;
    if (pre[b] >= 0) return false;
    if (ps[a] != pt[b]) return false;
    img[a] = b;
    pre[b] = a;
    trail.emplace_back(a, b);
    return true;
  };
  auto undo_to = [&](std::size_t mark) {
    while (trail.size() > mark) {
      auto [a, b] = trail.back();
      trail.pop_back();
      img[a] = -1;
      pre[b] = -1;
    }
  };
  auto propagate = [&](std::size_t from) -> bool {
    for (std::size_t i = from; i < trail.size(); ++i) {
      const int a = trail[i].first;
      for (std::size_t j = 0; j < trail.size(); ++j) {
        const int c = trail[j].first;
        if (!assign(s.at(a, c), t.at(img[a], img[c]))) return false;
        if (!assign(s.at(c, a), t.at(img[c], img[a]))) return false;
      }
    }
    return true;
  };

  std::uint64_t nodes = 0;
  auto rec = [&](auto&& self, int a) -> bool {
    while (a < n && img[a] >= 0) ++a;
    if (a == n) return true;
    for (int b = 0; b < n; ++b) {
      if (pre[b] >= 0) continue;
      if (++nodes > budget.limit) throw BudgetExceeded("isomorphism search budget exceeded");
      const std::size_t mark = trail.size();
      if (assign(a, b) && propagate(mark)) {
        if (self(self, a + 1)) return true;
      }
      undo_to(mark);
    }
    return false;
  };
  return rec(rec, 0);
}

/// Lifting / projectivity over a finite universe of test semigroups.
struct LiftCounterexample {
  std::size_t universe_index = 0;
  FiniteSemigroup source;
  ElementMap surjection;
};

struct LiftReport {
  bool holds = true;
  std::optional<LiftCounterexample> counterexample;
};

/// T lifts over the universe: every surjection S ->> T from a universe
/// member has an isomorphic copy of T inside S.
inline LiftReport check_lifts(const FiniteSemigroup& t,
                              const std::vector<FiniteSemigroup>& universe, Budget budget = {}) {
  for (std::size_t u = 0; u < universe.size(); ++u) {
    const auto& s = universe[u];
    if (s.order < t.order) continue;
    auto surjections = find_homomorphisms(s, t, /*surjective_only=*/true, budget);
    if (surjections.empty()) continue;
    bool copy_found = false;
    for (const auto& elems : all_subsemigroups(s)) {
      if (static_cast<int>(elems.size()) != t.order) continue;
      if (is_isomorphic(subsemigroup_generated(s, elems).sub, t, budget)) {
        copy_found = true;
        break;
      }
    }
    if (!copy_found)
      return LiftReport{false, LiftCounterexample{u, s, std::move(surjections.front())}};
  }
  return LiftReport{};
}

/// T is projective over the universe: every surjection S ->> T splits,
/// i.e. some homomorphism psi: T -> S satisfies phi(psi(x)) = x.
inline LiftReport check_projective(const FiniteSemigroup& t,
                                   const std::vector<FiniteSemigroup>& universe,
                                   Budget budget = {}) {
  for (std::size_t u = 0; u < universe.size(); ++u) {
    const auto& s = universe[u];
    if (s.order < t.order) continue;
    for (auto& phi : find_homomorphisms(s, t, /*surjective_only=*/true, budget)) {
      bool split = false;
      for (const auto& psi : find_homomorphisms(t, s, /*surjective_only=*/false, budget)) {
        bool ok = true;
        for (int x = 0; x < t.order && ok; ++x) ok = phi.images[psi.images[x]] == x;
        if (ok) {
          split = true;
          break;
        }
      }
      if (!split) return LiftReport{false, LiftCounterexample{u, s, std::move(phi)}};
    }
  }
  return LiftReport{};
}

/// True iff S has a (necessarily unique) zero and every m-fold product
/// equals it.
inline bool is_nilpotent_of_class(const FiniteSemigroup& s, int m) {
  int zero = -1;
  for (int z = 0; z < s.order; ++z) {
    bool absorbing = true;
    for (int x = 0; x < s.order && absorbing; ++x)
      absorbing = s.at(z, x) == z && s.at(x, z) == z;
    if (absorbing) {
      zero = z;
      break;
    }
  }
  if (zero < 0) return false;
  std::vector<char> cur(s.order, 0);
  for (int x = 0; x < s.order; ++x) cur[x] = 1;
  for (int step = 1; step < m; ++step) {
    std::vector<char> next(s.order, 0);
    for (int a = 0; a < s.order; ++a)
      if (cur[a])
        for (int b = 0; b < s.order; ++b) next[s.at(a, b)] = 1;
    cur = std::move(next);
  }
  for (int x = 0; x < s.order; ++x)
    if (cur[x] && x != zero) return false;
  return true;
}

}  // namespace semikit
