#pragma once

// Word model of the irreducible highest weight module L(lambda).
//
// A vector v of weight lambda - beta is stored through its pairings
// <w, v> with every f-word w of content beta under the contravariant form
// (<u, u> = 1, <f_i x, y> = <x, e_i y>). Such coordinates see L(lambda)
// exactly: the radical of the form on the Verma module is invisible to them.
// In these coordinates the raising and lowering operators and the twining map
// are pure index transport:
//   <w, e_i v> = <f_i w, v>
//   <w, f_i v> = <e_i w, v>      (e_i expanded on the word w)
//   <w, tau v> = <omega(w), v>   (letterwise relabelling)
// Nothing here refers to the folded Cartan matrix.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "twining/automorphism.hpp"
#include "twining/characters.hpp"
#include "twining/root_data.hpp"
#include "twining/weyl.hpp"

namespace twining {

using Letter = std::uint8_t;

struct FWord {
  std::vector<Letter> letters;  // f_{l_0} f_{l_1} ... f_{l_k} u_lambda

  FWord() = default;
  explicit FWord(std::vector<Letter> l) : letters(std::move(l)) {}
  FWord(std::initializer_list<Letter> l) : letters(l) {}

  Index size() const noexcept { return letters.size(); }

  RootVector content(Index n) const {
    RootVector c = RootVector::zero(n);
    for (Letter l : letters) ++c[l];
    return c;
  }

  friend bool operator==(const FWord&, const FWord&) = default;
  friend auto operator<=>(const FWord&, const FWord&) = default;
};

inline std::string to_string(const FWord& w) {
  std::string s = "(";
  for (Index k = 0; k < w.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(w.letters[k]);
  }
  return s + ")";
}

/// Number of distinct words with the given letter counts; saturates at
/// UINT64_MAX.
inline std::uint64_t word_count(const RootVector& content) {
  std::uint64_t total = 1;
  Coord len = 0;
  for (Index i = 0; i < content.size(); ++i) {
    for (Coord k = 1; k <= content[i]; ++k) {
      ++len;
      // total * len / k stays exact: it is a multinomial coefficient.
      const unsigned __int128 next = static_cast<unsigned __int128>(total) * static_cast<std::uint64_t>(len) /
                                     static_cast<std::uint64_t>(k);
      if (next > UINT64_MAX) return UINT64_MAX;
      total = static_cast<std::uint64_t>(next);
    }
  }
  return total;
}

/// All words of one content in lexicographic order, with an arithmetic rank.
class WordTable {
 public:
  WordTable(const RootVector& content, std::uint64_t cap) : content_(content) {
    for (Coord k : content.coeffs) {
      require(k >= 0, ErrorKind::Internal, "negative content");
      length_ += static_cast<Index>(k);
    }
    const std::uint64_t count = word_count(content);
    require(count <= cap, ErrorKind::TooLarge,
            "content " + to_string(content) + " has " + (count == UINT64_MAX ? std::string("too many") : std::to_string(count)) +
                " words, above the cap of " + std::to_string(cap));
    count_ = static_cast<Index>(count);
    letters_.reserve(count_ * length_);
    std::vector<Letter> w;
    for (Index i = 0; i < content.size(); ++i) w.insert(w.end(), static_cast<Index>(content[i]), static_cast<Letter>(i));
    do {
      letters_.insert(letters_.end(), w.begin(), w.end());
    } while (std::next_permutation(w.begin(), w.end()));
  }

  const RootVector& content() const noexcept { return content_; }
  Index size() const noexcept { return count_; }
  Index word_length() const noexcept { return length_; }

  const Letter* word(Index r) const { return letters_.data() + r * length_; }
  FWord fword(Index r) const { return FWord(std::vector<Letter>(word(r), word(r) + length_)); }

  /// Lexicographic rank of a word of this content.
  Index rank(const Letter* w) const {
    Coord counts[64];
    const Index n = content_.size();
    for (Index i = 0; i < n; ++i) counts[i] = content_[i];
    std::uint64_t block = count_;  // words of the remaining multiset
    std::uint64_t rank = 0;
    for (Index t = 0, rem = length_; t < length_; ++t, --rem) {
      const Letter x = w[t];
      for (Letter c = 0; c < x; ++c)
        if (counts[c] > 0) rank += block * static_cast<std::uint64_t>(counts[c]) / rem;
      block = block * static_cast<std::uint64_t>(counts[x]) / rem;
      --counts[x];
    }
    return static_cast<Index>(rank);
  }

  Index rank(const FWord& w) const { return rank(w.letters.data()); }

 private:
  RootVector content_;
  Index length_ = 0;
  Index count_ = 0;
  std::vector<Letter> letters_;
};

/// Pairings <w, v> against the words of `content`, indexed by lexicographic rank.
struct PairingVector {
  Weight lambda;
  RootVector content;
  std::vector<Rational> coords;

  bool is_zero() const {
    for (const auto& x : coords)
      if (sgn(x) != 0) return false;
    return true;
  }
  Weight weight(const GCM& a) const { return lambda - to_weight(a, content); }

  friend bool operator==(const PairingVector&, const PairingVector&) = default;
};

/// Row space in reduced row-echelon form; pivots strictly increasing in
/// lexicographic word order and each pivot entry equal to 1.
struct Subspace {
  RootVector content;
  std::vector<std::vector<Rational>> rows;
  std::vector<Index> pivots;

  Index dim() const noexcept { return rows.size(); }

  /// Reduces v against the current rows in place; returns true if v became zero.
  bool reduce(std::vector<Rational>& v) const {
    for (Index k = 0; k < rows.size(); ++k) {
      const Rational f = v[pivots[k]];
      if (sgn(f) == 0) continue;
      const auto& r = rows[k];
      for (Index j = pivots[k]; j < v.size(); ++j)
        if (sgn(r[j]) != 0) v[j] -= f * r[j];
    }
    for (const auto& x : v)
      if (sgn(x) != 0) return false;
    return true;
  }

  /// Adds v to the span; returns false if it was already contained.
  bool insert(std::vector<Rational> v) {
    if (reduce(v)) return false;
    Index p = 0;
    while (sgn(v[p]) == 0) ++p;
    const Rational inv = 1 / v[p];
    for (Index j = p; j < v.size(); ++j)
      if (sgn(v[j]) != 0) v[j] *= inv;
    for (auto& r : rows) {
      const Rational f = r[p];
      if (sgn(f) == 0) continue;
      for (Index j = p; j < r.size(); ++j)
        if (sgn(v[j]) != 0) r[j] -= f * v[j];
    }
    const auto pos = std::lower_bound(pivots.begin(), pivots.end(), p) - pivots.begin();
    pivots.insert(pivots.begin() + pos, p);
    rows.insert(rows.begin() + pos, std::move(v));
    return true;
  }

  bool contains(std::vector<Rational> v) const { return reduce(v); }
};

struct EngineOptions {
  std::uint64_t word_cap = 100000;
};

class HighestWeightEngine {
 public:
  HighestWeightEngine(GCM a, Weight lambda, EngineOptions options = {})
      : a_(std::move(a)), lambda_(std::move(lambda)), options_(options) {
    require_size(a_, lambda_.size(), "weight");
    require(a_.size() <= 64, ErrorKind::TooLarge, "rank above 64");
  }

  const GCM& cartan() const noexcept { return a_; }
  const Weight& lambda() const noexcept { return lambda_; }
  const EngineOptions& options() const noexcept { return options_; }

  const WordTable& table(const RootVector& content) {
    auto it = tables_.find(content);
    if (it == tables_.end())
      it = tables_.emplace(content, std::make_unique<WordTable>(content, options_.word_cap)).first;
    return *it->second;
  }

  // -------------------------------------------------------------------------
  // Contravariant form on words

  /// <w1, w2> by the recursion <f_a y, s> = <y, e_a s>, memoized over
  /// (suffix of w1, subsequence of w2).
  Rational shapovalov_pair(const FWord& w1, const FWord& w2) const {
    const Index n = a_.size();
    for (Letter l : w1.letters) require(l < n, ErrorKind::InvalidInput, "letter out of range");
    if (w1.content(n) != w2.content(n)) return 0;
    const Index len = w2.size();
    require(len <= 40, ErrorKind::TooLarge, "word longer than 40 letters");
    std::unordered_map<std::uint64_t, Integer> memo;
    std::function<Integer(Index, std::uint64_t)> rec = [&](Index pos, std::uint64_t mask) -> Integer {
      if (pos == w1.size()) return 1;  // mask is empty too: contents agree
      const std::uint64_t key = (static_cast<std::uint64_t>(pos) << 41) | mask;
      if (auto it = memo.find(key); it != memo.end()) return it->second;
      const Letter i = w1.letters[pos];
      Integer total = 0;
      // e_i on the subword selected by mask: scan from the right keeping the
      // weight of the suffix.
      Coord h = lambda_[i];
      for (Index t = len; t-- > 0;) {
        if (!(mask >> t & 1)) continue;
        const Letter l = w2.letters[t];
        if (l == i && h != 0) total += h * rec(pos + 1, mask & ~(std::uint64_t{1} << t));
        h -= a_(i, l);
      }
      memo.emplace(key, total);
      return total;
    };
    const std::uint64_t full = len == 0 ? 0 : (len == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1);
    return Rational(rec(0, full));
  }

  /// Gram row of a single word, computed pairing by pairing.
  PairingVector pairing_vector(const FWord& word) {
    const RootVector content = word.content(a_.size());
    const WordTable& t = table(content);
    PairingVector v{lambda_, content, std::vector<Rational>(t.size())};
    for (Index r = 0; r < t.size(); ++r) v.coords[r] = shapovalov_pair(t.fword(r), word);
    return v;
  }

  PairingVector highest_weight_vector() const {
    return PairingVector{lambda_, RootVector::zero(a_.size()), std::vector<Rational>{Rational(1)}};
  }

  // -------------------------------------------------------------------------
  // Operators

  PairingVector e_action(Index i, const PairingVector& v) {
    require(i < a_.size(), ErrorKind::InvalidInput, "index out of range");
    check_vector(v);
    if (v.content[i] == 0) fail(ErrorKind::InvalidInput, "e_" + std::to_string(i) + " raises above the highest weight");
    RootVector lower = v.content;
    --lower[i];
    const WordTable& src = table(v.content);
    const WordTable& dst = table(lower);
    PairingVector out{lambda_, lower, std::vector<Rational>(dst.size())};
    std::vector<Letter> buf(src.word_length());
    for (Index r = 0; r < dst.size(); ++r) {
      buf[0] = static_cast<Letter>(i);
      std::copy_n(dst.word(r), dst.word_length(), buf.begin() + 1);
      out.coords[r] = v.coords[src.rank(buf.data())];
    }
    return out;
  }

  PairingVector f_action(Index i, const PairingVector& v) {
    require(i < a_.size(), ErrorKind::InvalidInput, "index out of range");
    check_vector(v);
    RootVector upper = v.content;
    ++upper[i];
    const WordTable& src = table(v.content);
    const WordTable& dst = table(upper);
    PairingVector out{lambda_, upper, std::vector<Rational>(dst.size())};
    const Index len = dst.word_length();
    std::vector<Letter> buf(len == 0 ? 0 : len - 1);
    for (Index r = 0; r < dst.size(); ++r) {
      const Letter* w = dst.word(r);
      Rational acc = 0;
      Coord h = lambda_[i];
      for (Index t = len; t-- > 0;) {
        if (w[t] == i && h != 0) {
          std::copy_n(w, t, buf.begin());
          std::copy(w + t + 1, w + len, buf.begin() + t);
          const Rational& x = v.coords[src.rank(buf.data())];
          if (sgn(x) != 0) acc += h * x;
        }
        h -= a_(i, w[t]);
      }
      out.coords[r] = std::move(acc);
    }
    return out;
  }

  /// tau_omega in pairing coordinates: <w, tau v> = <omega(w), v>.
  PairingVector tau(const DiagramAutomorphism& omega, const PairingVector& v) {
    require(omega.size() == a_.size(), ErrorKind::SizeMismatch, "automorphism size differs from the Cartan matrix");
    require(is_symmetric_weight(lambda_, omega), ErrorKind::NotSymmetricWeight,
            "tau needs a symmetric highest weight, got " + to_string(lambda_));
    check_vector(v);
    RootVector image = RootVector::zero(a_.size());
    for (Index j = 0; j < a_.size(); ++j) image[omega.inverse(j)] = v.content[j];
    const WordTable& src = table(v.content);
    const WordTable& dst = table(image);
    PairingVector out{lambda_, image, std::vector<Rational>(dst.size())};
    std::vector<Letter> buf(dst.word_length());
    for (Index r = 0; r < dst.size(); ++r) {
      const Letter* w = dst.word(r);
      for (Index t = 0; t < buf.size(); ++t) buf[t] = static_cast<Letter>(omega(w[t]));
      out.coords[r] = v.coords[src.rank(buf.data())];
    }
    return out;
  }

  /// <w, v> is a coordinate lookup.
  Rational pair_with_word(const FWord& w, const PairingVector& v) {
    check_vector(v);
    require(w.content(a_.size()) == v.content, ErrorKind::InvalidInput, "content mismatch");
    return v.coords[table(v.content).rank(w)];
  }

  // -------------------------------------------------------------------------
  // Weight spaces

  /// L(lambda)_{lambda - beta} as the span of all word vectors of content beta,
  /// built as the span of f_i applied to the weight spaces one step up.
  const Subspace& weight_space(const RootVector& beta) {
    a_.require_finite_type("weight_space");
    require(lambda_.is_dominant(), ErrorKind::NotDominant, "weight_space needs a dominant weight");
    require(beta.size() == a_.size() && beta.is_nonnegative(), ErrorKind::InvalidInput, "content must be nonnegative");
    if (auto it = weight_spaces_.find(beta); it != weight_spaces_.end()) return it->second;
    Subspace s{beta, {}, {}};
    if (beta.is_zero()) {
      s.insert({Rational(1)});
    } else {
      table(beta);  // cap check before recursing
      for (Index i = 0; i < a_.size(); ++i) {
        if (beta[i] == 0) continue;
        RootVector up = beta;
        --up[i];
        const Subspace& parent = weight_space(up);
        for (Index k = 0; k < parent.dim(); ++k) {
          PairingVector pv{lambda_, up, parent.rows[k]};
          s.insert(f_action(i, pv).coords);
        }
      }
    }
    return weight_spaces_.emplace(beta, std::move(s)).first->second;
  }

  /// Rank of the full Gram matrix on words of content beta (direct route).
  Index gram_rank(const RootVector& beta) {
    const WordTable& t = table(beta);
    Subspace s{beta, {}, {}};
    for (Index r = 0; r < t.size(); ++r) s.insert(pairing_vector(t.fword(r)).coords);
    return s.dim();
  }

  // -------------------------------------------------------------------------
  // Demazure modules

  /// f_{i_1}^{m_1} ... f_{i_k}^{m_k} with m_t = <s_{i_{t+1}}...s_{i_k} lambda, alpha_{i_t}^vee>.
  FWord extremal_word(const WeylWord& w) const {
    require(lambda_.is_dominant(), ErrorKind::NotDominant, "extremal vectors need a dominant weight");
    std::vector<Letter> reversed;
    Weight mu = lambda_;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      const Index i = *it;
      require(i < a_.size(), ErrorKind::InvalidInput, "letter out of range");
      const Coord m = mu[i];
      require(m >= 0, ErrorKind::NotReduced, "word " + to_string(w) + " is not reduced");
      reversed.insert(reversed.end(), static_cast<Index>(m), static_cast<Letter>(i));
      mu = reflect(a_, mu, i);
    }
    return FWord(std::vector<Letter>(reversed.rbegin(), reversed.rend()));
  }

  PairingVector extremal_vector(const WeylWord& w) {
    a_.require_finite_type("extremal_vector");
    const FWord word = extremal_word(w);
    const RootVector content = word.content(a_.size());
    table(content);  // cap check
    PairingVector v = highest_weight_vector();
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) v = f_action(*it, v);
    require(!v.is_zero(), ErrorKind::NotReduced, "extremal vector for " + to_string(w) + " vanishes");
    require(v.weight(a_) == element_of(a_, w)(lambda_), ErrorKind::Internal, "extremal vector has the wrong weight");
    return v;
  }

  /// Visits the Demazure subspaces L_w(lambda)_{lambda - beta} level by level,
  /// from the extremal line down to the highest weight line. Only one level
  /// of subspaces is alive at a time.
  void for_each_demazure_subspace(const WeylWord& w, const std::function<void(const Subspace&)>& visit) {
    a_.require_finite_type("demazure_subspaces");
    require(lambda_.is_dominant(), ErrorKind::NotDominant, "Demazure modules need a dominant weight");
    const WeylWord word = reduced_word(a_, w);
    const PairingVector top = extremal_vector(word);
    std::map<RootVector, Subspace> level;
    Subspace line{top.content, {}, {}};
    line.insert(top.coords);
    level.emplace(top.content, std::move(line));
    while (!level.empty()) {
      std::map<RootVector, Subspace> next;
      for (const auto& [beta, s] : level) {
        visit(s);
        for (Index i = 0; i < a_.size(); ++i) {
          if (beta[i] == 0) continue;
          RootVector lower = beta;
          --lower[i];
          auto it = next.try_emplace(lower, Subspace{lower, {}, {}}).first;
          for (const auto& row : s.rows) {
            PairingVector pv{lambda_, beta, row};
            it->second.insert(e_action(i, pv).coords);
          }
        }
      }
      for (auto it = next.begin(); it != next.end();) it = it->second.dim() == 0 ? next.erase(it) : std::next(it);
      // Contents of one level are never revisited; drop their tables.
      for (const auto& [beta, s] : level) tables_.erase(beta);
      level = std::move(next);
    }
  }

  std::map<RootVector, Subspace> demazure_subspaces(const WeylWord& w) {
    std::map<RootVector, Subspace> out;
    for_each_demazure_subspace(w, [&](const Subspace& s) { out.emplace(s.content, s); });
    return out;
  }

  /// Sum over contents of dim * e(lambda - beta).
  CharacterPolynomial demazure_dimension_character(const WeylWord& w) {
    CharacterPolynomial ch(a_.size());
    for_each_demazure_subspace(w, [&](const Subspace& s) {
      ch.add(lambda_ - to_weight(a_, s.content), Integer(static_cast<unsigned long>(s.dim())));
    });
    return ch;
  }

  // -------------------------------------------------------------------------
  // Twining

  /// tr(tau | S). Raises NotTauStable if tau does not map S into itself.
  Integer twining_trace(const Subspace& s, const DiagramAutomorphism& omega) {
    Rational trace = 0;
    for (Index k = 0; k < s.dim(); ++k) {
      PairingVector row{lambda_, s.content, s.rows[k]};
      PairingVector image = tau(omega, row);
      require(image.content == s.content, ErrorKind::NotTauStable,
              "tau moves content " + to_string(s.content) + " to " + to_string(image.content));
      // In reduced echelon form the coefficient on row j is the pivot entry.
      std::vector<Rational> residual = image.coords;
      for (Index j = 0; j < s.dim(); ++j) {
        const Rational cj = image.coords[s.pivots[j]];
        if (j == k) trace += cj;
        if (sgn(cj) == 0) continue;
        for (Index c = 0; c < residual.size(); ++c)
          if (sgn(s.rows[j][c]) != 0) residual[c] -= cj * s.rows[j][c];
      }
      for (const auto& x : residual)
        require(sgn(x) == 0, ErrorKind::NotTauStable,
                "tau maps a vector of content " + to_string(s.content) + " outside the subspace");
    }
    require(is_integral(trace), ErrorKind::Internal, "non-integral trace " + trace.get_str());
    return trace.get_num();
  }

  /// Sum over symmetric weights chi of tr(tau | L_w(lambda)_chi) e(chi).
  CharacterPolynomial twining_character(const WeylWord& w, const DiagramAutomorphism& omega) {
    require(is_symmetric_weight(lambda_, omega), ErrorKind::NotSymmetricWeight,
            to_string(lambda_) + " is not fixed by omega*");
    require(is_in_W_tilde(a_, w, omega), ErrorKind::NotInWTilde, "word " + to_string(w) + " does not commute with omega*");
    CharacterPolynomial ch(a_.size());
    for_each_demazure_subspace(w, [&](const Subspace& s) {
      if (!omega.fixes(s.content)) return;
      ch.add(lambda_ - to_weight(a_, s.content), twining_trace(s, omega));
    });
    return ch;
  }

 private:
  void check_vector(const PairingVector& v) const {
    require(v.lambda == lambda_, ErrorKind::InvalidInput, "vector belongs to a different module");
    require(v.content.size() == a_.size() && v.content.is_nonnegative(), ErrorKind::InvalidInput, "bad content");
  }

  GCM a_;
  Weight lambda_;
  EngineOptions options_;
  std::map<RootVector, std::unique_ptr<WordTable>> tables_;
  std::map<RootVector, Subspace> weight_spaces_;
};

/// Convenience wrappers with a fresh engine per call.
inline CharacterPolynomial twining_character(const GCM& a, const Weight& lambda, const WeylWord& w,
                                             const DiagramAutomorphism& omega, EngineOptions options = {}) {
  HighestWeightEngine engine(a, lambda, options);
  return engine.twining_character(w, omega);
}

}  // namespace twining
