#pragma once

#include <string>
#include <vector>

#include "semikit/semigroup.hpp"
#include "semikit/word.hpp"

namespace semikit {
namespace catalog {

/// The 11-element generator for the variety of xyx=xyy (rows = left factor).
inline const FiniteSemigroup& table_B() {
  static const FiniteSemigroup b = validate_associative(
      {
          {2, 3, 4, 5, 6, 7, 6, 6, 5, 5, 5},
          {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
          {4, 5, 6, 7, 6, 6, 6, 6, 7, 7, 7},
          {3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3},
          {6, 7, 6, 6, 6, 6, 6, 6, 6, 6, 6},
          {5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5},
          {6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6},
          {7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7},
          {9, 3, 10, 3, 10, 10, 10, 10, 8, 9, 10},
          {10, 3, 10, 10, 10, 10, 10, 10, 10, 10, 10},
          {10, 10, 10, 10, 10, 10, 10, 10, 10, 10, 10},
      },
      "B");
  return b;
}

/// The 11-element generator for the variety of xyx=yxy.  Elements are, in
/// order: 0=abc, a, b, c, b^2, b^3, ab, ab^2, bc, b^2c, ab^2c under the
/// presentation <a,b,c | aa=a, b^4=0, cc=c, ba=cb=ca=abc=0, ab^3=b^3=b^3c=ac>.
inline const FiniteSemigroup& table_C() {
  static const FiniteSemigroup c = validate_associative(
      {
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
          {0, 1, 6, 5, 7, 5, 6, 7, 0, 10, 10},
          {0, 0, 4, 8, 5, 0, 0, 0, 9, 5, 0},
          {0, 0, 0, 3, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, 5, 9, 0, 0, 0, 0, 5, 0, 0},
          {0, 0, 0, 5, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, 7, 0, 5, 0, 0, 0, 10, 5, 0},
          {0, 0, 5, 10, 0, 0, 0, 0, 5, 0, 0},
          {0, 0, 0, 8, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 9, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 10, 0, 0, 0, 0, 0, 0, 0},
      },
      "C");
  return c;
}

/// A0 = {0, e, f, ef} with e,f idempotent, ef != 0, fe = 0; the concrete
/// table is the subsemigroup of C on {0,1,3,5}, relabeled 0,e,f,ef.
inline const FiniteSemigroup& a0() {
  static const FiniteSemigroup a = validate_associative(
      {
          {0, 0, 0, 0},
          {0, 1, 3, 3},
          {0, 0, 2, 0},
          {0, 0, 3, 0},
      },
      "A0");
  return a;
}

/// Two-element null semigroup {n, 0} with n*n = 0.
inline const FiniteSemigroup& n2() {
  static const FiniteSemigroup s = validate_associative({{1, 1}, {1, 1}}, "N2");
  return s;
}

/// Two-element semilattice ({0,1}, *).
inline const FiniteSemigroup& u1() {
  static const FiniteSemigroup s = validate_associative({{0, 0}, {0, 1}}, "U1");
  return s;
}

inline FiniteSemigroup left_zero(int n) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) rows[a][b] = a;
  return validate_associative(rows, "L" + std::to_string(n));
}

inline FiniteSemigroup right_zero(int n) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) rows[a][b] = b;
  return validate_associative(rows, "R" + std::to_string(n));
}

inline const FiniteSemigroup& l2() {
  static const FiniteSemigroup s = left_zero(2);
  return s;
}

inline const FiniteSemigroup& r2() {
  static const FiniteSemigroup s = right_zero(2);
  return s;
}

inline FiniteSemigroup cyclic_group(int m) {
  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) rows[a][b] = (a + b) % m;
  return validate_associative(rows, "Z" + std::to_string(m));
}

inline const FiniteSemigroup& z2() {
  static const FiniteSemigroup s = cyclic_group(2);
  return s;
}
inline const FiniteSemigroup& z3() {
  static const FiniteSemigroup s = cyclic_group(3);
  return s;
}
inline const FiniteSemigroup& z4() {
  static const FiniteSemigroup s = cyclic_group(4);
  return s;
}

inline const FiniteSemigroup& trivial() {
  static const FiniteSemigroup s = validate_associative({{0}}, "1");
  return s;
}

/// The monogenic semigroup <y | y^2 = y^4> on {y, y^2, y^3}.
inline const FiniteSemigroup& mono_2_2() {
  static const FiniteSemigroup s =
      validate_associative({{1, 2, 1}, {2, 1, 2}, {1, 2, 1}}, "MONO_2_2");
  return s;
}

/// The nilpotent monogenic semigroup <x | x^3 = 0> on {x, x^2, 0}.
inline const FiniteSemigroup& nil3() {
  static const FiniteSemigroup s = validate_associative({{1, 2, 2}, {2, 2, 2}, {2, 2, 2}}, "NIL3");
  return s;
}

// --- presentation checking ---------------------------------------------------

/// Claimed data for a finitely presented semigroup realized inside a table.
struct PresentationCheck {
  std::vector<int> generator_letters;            // letter indices, e.g. a,b,c
  std::vector<std::pair<Word, Word>> relations;  // over the generator letters
  std::vector<Word> claimed_elements;            // representative words
};

struct PresentationReport {
  bool generators_generate = false;
  bool relations_hold = false;
  bool claimed_distinct = false;
  bool claimed_exhaustive = false;
  std::vector<std::string> failures;

  bool all_ok() const {
    return generators_generate && relations_hold && claimed_distinct && claimed_exhaustive;
  }
};

/// Checks a presentation against a concrete table: the generator map must
/// satisfy every relation, and the claimed representative words must be
/// pairwise distinct and exhaust the generated subsemigroup.
inline PresentationReport verify_presentation(const FiniteSemigroup& target,
                                              const std::vector<int>& gens,
                                              const PresentationCheck& pc) {
  PresentationReport rep;
  if (gens.size() != pc.generator_letters.size())
    throw std::invalid_argument("generator count mismatch");
  Evaluation theta;
  for (std::size_t i = 0; i < gens.size(); ++i) theta[pc.generator_letters[i]] = gens[i];

  const auto sub = subsemigroup_generated(target, gens);
  rep.generators_generate = sub.sub.order == target.order;
  if (!rep.generators_generate) rep.failures.push_back("generators do not generate the target");

  rep.relations_hold = true;
  for (const auto& [l, r] : pc.relations)
    if (eval_word(target, l, theta) != eval_word(target, r, theta)) {
      rep.relations_hold = false;
      rep.failures.push_back("relation fails: " + to_string(l) + "=" + to_string(r));
    }

  std::vector<int> values;
  for (const auto& w : pc.claimed_elements) values.push_back(eval_word(target, w, theta));
  rep.claimed_distinct = true;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (values[i] == values[j]) {
        rep.claimed_distinct = false;
        rep.failures.push_back("claimed words collide: " + to_string(pc.claimed_elements[i]) +
                               " and " + to_string(pc.claimed_elements[j]));
      }

  std::vector<char> hit(target.order, 0);
  for (int v : values) hit[v] = 1;
  rep.claimed_exhaustive = true;
  for (int e : sub.elements)
    if (!hit[e]) {
      rep.claimed_exhaustive = false;
      rep.failures.push_back("claimed words miss element " + std::to_string(e));
    }
  return rep;
}

/// The presentation of C with its 11 representative words, listed so that
/// word #i evaluates to element i.
inline PresentationCheck presentation_of_C() {
  PresentationCheck pc;
  pc.generator_letters = {0, 1, 2};  // a, b, c
  auto rel = [&](const char* l, const char* r) {
    pc.relations.emplace_back(parse_word(l), parse_word(r));
  };
  rel("aa", "a");
  rel("cc", "c");
  rel("ba", "abc");
  rel("cb", "abc");
  rel("ca", "abc");
  rel("b^4", "abc");
  rel("ab^3", "b^3");
  rel("b^3c", "b^3");
  rel("ac", "b^3");
  for (const char* w : {"abc", "a", "b", "c", "b^2", "b^3", "ab", "ab^2", "bc", "b^2c", "ab^2c"})
    pc.claimed_elements.push_back(parse_word(w));
  return pc;
}

// --- the A0 word-problem criterion -------------------------------------------

/// Decides A0 |= u=v from the connected decompositions alone: block counts
/// equal, letters occurring once identical, connected blocks content-equal.
inline bool a0_identity_oracle(const Word& u, const Word& v) {
  const auto bu = connected_decomposition(u);
  const auto bv = connected_decomposition(v);
  if (bu.size() != bv.size()) return false;
  for (std::size_t i = 0; i < bu.size(); ++i) {
    const bool cu = is_connected(bu[i]);
    const bool cv = is_connected(bv[i]);
    if (cu != cv) return false;
    if (!cu) {
      if (bu[i] != bv[i]) return false;  // singletons must match exactly
    } else {
      if (content(bu[i]) != content(bv[i])) return false;
    }
  }
  return true;
}

}  // namespace catalog
}  // namespace semikit
