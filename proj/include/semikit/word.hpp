#pragma once

#include <array>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "semikit/semigroup.hpp"

namespace semikit {

constexpr int kMaxLetters = 26;  // surface syntax a-z

/// A nonempty word over indexed letters (0 = 'a', ..., 25 = 'z').
struct Word {
  std::vector<int> letters;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

  int length() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }
};

/// A formal equation between two words; the sides may differ freely.
struct Identity {
  Word lhs, rhs;

  bool operator==(const Identity&) const = default;
  auto operator<=>(const Identity&) const = default;

  bool trivial() const { return lhs == rhs; }
};

inline Word parse_word(const std::string& text) {
  Word w;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    const char c = text[i];
    if (c < 'a' || c > 'z')
      throw std::invalid_argument("bad letter '" + std::string(1, c) + "' in word \"" + text +
                                  "\"");
    ++i;
    long exponent = 1;
    skip_ws();
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip_ws();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw std::invalid_argument("missing exponent in word \"" + text + "\"");
      exponent = std::stol(text.substr(start, i - start));
      if (exponent <= 0) throw std::invalid_argument("exponent must be positive");
      if (exponent > 100000) throw std::invalid_argument("exponent too large");
    }
    for (long k = 0; k < exponent; ++k) w.letters.push_back(c - 'a');
    skip_ws();
  }
  if (w.empty()) throw std::invalid_argument("empty word");
  return w;
}

inline std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size();) {
    std::size_t j = i;
    while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
    out += static_cast<char>('a' + w.letters[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

inline Identity parse_identity(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw std::invalid_argument("identity needs '=': " + text);
  return Identity{parse_word(text.substr(0, eq)), parse_word(text.substr(eq + 1))};
}

inline std::string to_string(const Identity& id) {
  return to_string(id.lhs) + "=" + to_string(id.rhs);
}

inline std::set<int> content(const Word& w) { return {w.letters.begin(), w.letters.end()}; }

inline std::set<int> content(const Identity& id) {
  auto c = content(id.lhs);
  c.merge(content(id.rhs));
  return c;
}

inline int length(const Word& w) { return w.length(); }

inline Word reversed(const Word& w) {
  Word r = w;
  std::reverse(r.letters.begin(), r.letters.end());
  return r;
}

inline Word concat(const Word& u, const Word& v) {
  Word w = u;
  w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
  return w;
}

/// Per-letter multiplicities agree on both sides.
inline bool is_balanced(const Identity& id) {
  std::array<int, kMaxLetters> l{}, r{};
  for (int x : id.lhs.letters) ++l[x];
  for (int x : id.rhs.letters) ++r[x];
  return l == r;
}

/// Letters in order of first occurrence.
inline std::vector<int> first_occurrence_order(const Word& w) {
  std::vector<int> order;
  std::array<bool, kMaxLetters> seen{};
  for (int x : w.letters)
    if (!seen[x]) {
      seen[x] = true;
      order.push_back(x);
    }
  return order;
}

// --- substitutions ---------------------------------------------------------

/// Letter -> element assignment into a finite semigroup.
using Evaluation = std::map<int, int>;

/// Letter -> nonempty word assignment (non-erasing).
using WordSubstitution = std::map<int, Word>;

inline int eval_word(const FiniteSemigroup& s, const Word& w, const Evaluation& theta) {
  auto first = theta.find(w.letters.front());
  if (first == theta.end()) throw std::invalid_argument("evaluation missing a letter image");
  int acc = first->second;
  for (std::size_t i = 1; i < w.letters.size(); ++i) {
    auto it = theta.find(w.letters[i]);
    if (it == theta.end()) throw std::invalid_argument("evaluation missing a letter image");
    acc = s.at(acc, it->second);
  }
  return acc;
}

inline Word apply_substitution(const Word& w, const WordSubstitution& theta) {
  Word out;
  for (int x : w.letters) {
    auto it = theta.find(x);
    if (it == theta.end()) throw std::invalid_argument("substitution missing a letter image");
    if (it->second.empty()) throw std::invalid_argument("substitution must be non-erasing");
    out.letters.insert(out.letters.end(), it->second.letters.begin(), it->second.letters.end());
  }
  return out;
}

inline Identity apply_substitution(const Identity& id, const WordSubstitution& theta) {
  return Identity{apply_substitution(id.lhs, theta), apply_substitution(id.rhs, theta)};
}

// --- identity checking ------------------------------------------------------

struct CheckOptions {
  int max_letters = 6;
  std::uint64_t budget = 100'000'000;
};

/// First evaluation separating the sides, in mixed-radix order over the
/// sorted letters of the identity (earlier letters are more significant).
inline std::optional<Evaluation> find_counterexample(const FiniteSemigroup& s, const Identity& id,
                                                     CheckOptions opts = {}) {
  const auto letters_set = content(id);
  const std::vector<int> letters(letters_set.begin(), letters_set.end());
  const int k = static_cast<int>(letters.size());
  if (k > opts.max_letters) throw BudgetExceeded("identity has too many letters");
  double total = 1;
  for (int i = 0; i < k; ++i) total *= s.order;
  if (total > static_cast<double>(opts.budget))
    throw BudgetExceeded("evaluation sweep exceeds budget");

  std::vector<int> value(k, 0);
  Evaluation theta;
  while (true) {
    for (int i = 0; i < k; ++i) theta[letters[i]] = value[i];
    if (eval_word(s, id.lhs, theta) != eval_word(s, id.rhs, theta)) return theta;
    int i = k - 1;
    while (i >= 0 && value[i] == s.order - 1) value[i--] = 0;
    if (i < 0) return std::nullopt;
    ++value[i];
  }
}

inline bool satisfies(const FiniteSemigroup& s, const Identity& id, CheckOptions opts = {}) {
  return !find_counterexample(s, id, opts).has_value();
}

inline bool satisfies_all(const FiniteSemigroup& s, const std::vector<Identity>& ids,
                          CheckOptions opts = {}) {
  for (const auto& id : ids)
    if (!satisfies(s, id, opts)) return false;
  return true;
}

// --- the letter-merging equation set T_{w1,w2} -----------------------------

struct FlaggedIdentity {
  Identity id;
  bool trivial = false;

  bool operator==(const FlaggedIdentity&) const = default;
  auto operator<=>(const FlaggedIdentity&) const = default;
};

/// All images of the identity under letter-to-letter maps of its content
/// into itself with image of size < k.  Trivial instances are kept but
/// flagged.  Requires equal contents, equal lengths n >= k > 1.
inline std::vector<FlaggedIdentity> tw1w2(const Identity& id) {
  const auto cl = content(id.lhs);
  const auto cr = content(id.rhs);
  if (cl != cr) throw std::invalid_argument("tw1w2: sides must have equal content");
  if (id.lhs.length() != id.rhs.length())
    throw std::invalid_argument("tw1w2: sides must have equal length");
  const int k = static_cast<int>(cl.size());
  if (k < 2 || id.lhs.length() < k) throw std::invalid_argument("tw1w2: needs n >= k > 1");

  const std::vector<int> letters(cl.begin(), cl.end());
  std::set<Identity> seen;
  std::vector<FlaggedIdentity> out;
  std::vector<int> pick(k, 0);  // pick[i] = index of image letter for letters[i]
  while (true) {
    std::set<int> image;
    for (int i = 0; i < k; ++i) image.insert(letters[pick[i]]);
    if (static_cast<int>(image.size()) < k) {
      WordSubstitution theta;
      for (int i = 0; i < k; ++i) theta[letters[i]] = Word{{letters[pick[i]]}};
      Identity inst = apply_substitution(id, theta);
      if (seen.insert(inst).second) out.push_back(FlaggedIdentity{inst, inst.trivial()});
    }
    int i = k - 1;
    while (i >= 0 && pick[i] == k - 1) pick[i--] = 0;
    if (i < 0) break;
    ++pick[i];
  }
  return out;
}

// --- connectivity -----------------------------------------------------------

/// A word is connected when it has at least two positions and the
/// per-letter occurrence intervals [first, last] chain into one block
/// covering the whole word.
inline bool is_connected(const Word& w) {
  const int n = w.length();
  if (n < 2) return false;
  std::array<int, kMaxLetters> last{};
  last.fill(-1);
  for (int i = 0; i < n; ++i) last[w.letters[i]] = i;
  int reach = 0;
  for (int i = 0; i < n - 1; ++i) {
    reach = std::max(reach, last[w.letters[i]]);
    if (reach == i) return false;  // a cut between i and i+1
  }
  return true;
}

/// The unique factorization into maximal connected subwords and letters
/// occurring just once; block contents are pairwise disjoint.
inline std::vector<Word> connected_decomposition(const Word& w) {
  const int n = w.length();
  std::array<int, kMaxLetters> last{};
  last.fill(-1);
  for (int i = 0; i < n; ++i) last[w.letters[i]] = i;
  std::vector<Word> blocks;
  int start = 0, reach = 0;
  for (int i = 0; i < n; ++i) {
    reach = std::max(reach, last[w.letters[i]]);
    if (reach == i) {
      blocks.push_back(Word{{w.letters.begin() + start, w.letters.begin() + i + 1}});
      start = i + 1;
    }
  }
  return blocks;
}

}  // namespace semikit
