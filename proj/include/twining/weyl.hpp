#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "twining/automorphism.hpp"
#include "twining/root_data.hpp"

namespace twining {

/// A word i_1 ... i_k in the simple reflections, read as s_{i_1} ... s_{i_k}.
struct WeylWord {
  std::vector<Index> letters;

  WeylWord() = default;
  explicit WeylWord(std::vector<Index> l) : letters(std::move(l)) {}
  WeylWord(std::initializer_list<Index> l) : letters(l) {}

  Index size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }

  WeylWord reversed() const { return WeylWord(std::vector<Index>(letters.rbegin(), letters.rend())); }

  friend WeylWord operator+(WeylWord a, const WeylWord& b) {
    a.letters.insert(a.letters.end(), b.letters.begin(), b.letters.end());
    return a;
  }

  friend bool operator==(const WeylWord&, const WeylWord&) = default;
  friend auto operator<=>(const WeylWord&, const WeylWord&) = default;
};

/// "1,2,1"; the empty word serializes as "".
inline std::string to_string(const WeylWord& w) {
  std::string s;
  for (Index k = 0; k < w.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(w.letters[k]);
  }
  return s;
}

inline std::vector<Coord> parse_csv(const std::string& text) {
  std::vector<Coord> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    const auto b = token.find_first_not_of(" \t[]");
    const auto e = token.find_last_not_of(" \t[]");
    if (b == std::string::npos) continue;
    token = token.substr(b, e - b + 1);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(token, &used);
    } catch (...) {
      fail(ErrorKind::InvalidInput, "not an integer: '" + token + "'");
    }
    require(used == token.size(), ErrorKind::InvalidInput, "not an integer: '" + token + "'");
    out.push_back(v);
  }
  return out;
}

inline WeylWord parse_word(const std::string& text) {
  WeylWord w;
  for (Coord c : parse_csv(text)) {
    require(c >= 0, ErrorKind::InvalidInput, "negative letter in word '" + text + "'");
    w.letters.push_back(static_cast<Index>(c));
  }
  return w;
}

/// Canonical form of a Weyl group element: its matrix on fundamental-weight
/// coordinates. The matching action on root coordinates is carried alongside
/// for sign tests.
class WeylElement {
 public:
  static WeylElement identity(const GCM& a) {
    return WeylElement(IntMatrix::identity(a.size()), IntMatrix::identity(a.size()));
  }

  static WeylElement simple(const GCM& a, Index i) {
    require(i < a.size(), ErrorKind::InvalidInput,
            "letter " + std::to_string(i) + " out of range for rank " + std::to_string(a.size()));
    IntMatrix weight = IntMatrix::identity(a.size());
    IntMatrix root = IntMatrix::identity(a.size());
    for (Index j = 0; j < a.size(); ++j) {
      weight(j, i) -= a(j, i);
      root(i, j) -= a(i, j);
    }
    return WeylElement(std::move(weight), std::move(root));
  }

  const IntMatrix& matrix() const noexcept { return weight_; }
  const IntMatrix& root_matrix() const noexcept { return root_; }

  Weight operator()(const Weight& lambda) const { return Weight(weight_.apply(lambda.coords)); }
  RootVector operator()(const RootVector& beta) const { return RootVector(root_.apply(beta.coeffs)); }

  /// w(alpha_i) < 0.
  bool has_right_descent(Index i) const {
    bool any = false;
    for (Index r = 0; r < root_.rows(); ++r) {
      if (root_(r, i) > 0) return false;
      any = any || root_(r, i) != 0;
    }
    return any;
  }

  friend WeylElement operator*(const WeylElement& x, const WeylElement& y) {
    return WeylElement(x.weight_ * y.weight_, x.root_ * y.root_);
  }

  friend bool operator==(const WeylElement& x, const WeylElement& y) { return x.weight_ == y.weight_; }
  friend auto operator<=>(const WeylElement& x, const WeylElement& y) { return x.weight_ <=> y.weight_; }

 private:
  WeylElement(IntMatrix weight, IntMatrix root) : weight_(std::move(weight)), root_(std::move(root)) {}

  IntMatrix weight_;
  IntMatrix root_;
};

inline WeylElement element_of(const GCM& a, const WeylWord& word) {
  WeylElement g = WeylElement::identity(a);
  for (Index i : word.letters) g = g * WeylElement::simple(a, i);
  return g;
}

/// Number of positive roots sent to negative roots.
inline Index length(const GCM& a, const WeylElement& g) {
  Index count = 0;
  for (const auto& alpha : positive_roots(a))
    if (g(alpha).is_nonpositive()) ++count;
  return count;
}

inline Index length(const GCM& a, const WeylWord& word) { return length(a, element_of(a, word)); }

/// Greedy right-descent peeling, smallest index first.
inline WeylWord reduced_word(const GCM& a, WeylElement g) {
  a.require_finite_type("reduced_word");
  std::vector<Index> peeled;
  for (;;) {
    Index i = 0;
    while (i < a.size() && !g.has_right_descent(i)) ++i;
    if (i == a.size()) break;
    peeled.push_back(i);
    g = g * WeylElement::simple(a, i);
  }
  return WeylWord(std::vector<Index>(peeled.rbegin(), peeled.rend()));
}

inline WeylWord reduced_word(const GCM& a, const WeylWord& word) { return reduced_word(a, element_of(a, word)); }

inline bool is_reduced(const GCM& a, const WeylWord& word) { return length(a, word) == word.size(); }

inline WeylWord longest_element(const GCM& a) {
  a.require_finite_type("longest_element");
  // The longest element is the unique one with every simple root as a descent;
  // build it by left-multiplying until no ascent remains.
  WeylElement g = WeylElement::identity(a);
  for (;;) {
    Index i = 0;
    while (i < a.size() && g.has_right_descent(i)) ++i;
    if (i == a.size()) break;
    g = g * WeylElement::simple(a, i);
  }
  return reduced_word(a, g);
}

inline WeylElement inverse(const GCM& a, const WeylWord& word) { return element_of(a, word.reversed()); }

/// w omega* = omega* w on weights.
inline bool is_in_W_tilde(const GCM& a, const WeylWord& w, const DiagramAutomorphism& omega) {
  require(omega.size() == a.size(), ErrorKind::SizeMismatch, "automorphism size differs from the Cartan matrix");
  const IntMatrix m = element_of(a, w).matrix();
  const IntMatrix p = omega.star_matrix();
  return m * p == p * m;
}

struct GroupElement {
  WeylElement element;
  WeylWord word;  // canonical reduced word
};

/// All elements of a finite Weyl group, ordered by (length, reduced word).
inline std::vector<GroupElement> enumerate_group(const GCM& a, Index max_size = 100000) {
  a.require_finite_type("enumerate_group");
  std::map<WeylElement, WeylWord> seen;
  std::vector<WeylElement> frontier{WeylElement::identity(a)};
  seen.emplace(frontier.front(), WeylWord{});
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& g : frontier)
      for (Index i = 0; i < a.size(); ++i) {
        WeylElement h = g * WeylElement::simple(a, i);
        if (seen.count(h)) continue;
        require(seen.size() < max_size, ErrorKind::TooLarge, "Weyl group exceeds " + std::to_string(max_size) + " elements");
        seen.emplace(h, WeylWord{});
        next.push_back(h);
      }
    frontier = std::move(next);
  }
  std::vector<GroupElement> out;
  out.reserve(seen.size());
  for (auto& [g, unused] : seen) out.push_back({g, reduced_word(a, g)});
  std::sort(out.begin(), out.end(), [](const GroupElement& x, const GroupElement& y) {
    if (x.word.size() != y.word.size()) return x.word.size() < y.word.size();
    return x.word < y.word;
  });
  return out;
}

/// Every reduced word of the element, lexicographically sorted.
inline std::vector<WeylWord> all_reduced_words(const GCM& a, const WeylElement& g) {
  if (g == WeylElement::identity(a)) return {WeylWord{}};
  std::vector<WeylWord> out;
  for (Index i = 0; i < a.size(); ++i) {
    if (!g.has_right_descent(i)) continue;
    for (auto& prefix : all_reduced_words(a, g * WeylElement::simple(a, i))) {
      prefix.letters.push_back(i);
      out.push_back(std::move(prefix));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace twining
