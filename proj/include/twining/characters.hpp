#pragma once

#include <map>
#include <string>
#include <vector>

#include "twining/root_data.hpp"
#include "twining/weyl.hpp"

namespace twining {

/// Finitely supported sum of c_chi e(chi) with integer coefficients.
/// Zero coefficients are never stored.
class CharacterPolynomial {
 public:
  using Terms = std::map<Weight, Integer>;

  CharacterPolynomial() = default;
  explicit CharacterPolynomial(Index gcm_size) : size_(gcm_size) {}

  static CharacterPolynomial monomial(const Weight& mu, const Integer& coeff = 1) {
    CharacterPolynomial p(mu.size());
    p.add(mu, coeff);
    return p;
  }

  Index gcm_size() const noexcept { return size_; }
  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  Index support_size() const noexcept { return terms_.size(); }

  Integer coefficient(const Weight& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add(const Weight& mu, const Integer& coeff) {
    require(mu.size() == size_, ErrorKind::SizeMismatch,
            "exponent " + to_string(mu) + " does not have size " + std::to_string(size_));
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(mu, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  CharacterPolynomial& operator+=(const CharacterPolynomial& o) {
    require(o.size_ == size_, ErrorKind::SizeMismatch, "adding characters of different rank");
    for (const auto& [mu, c] : o.terms_) add(mu, c);
    return *this;
  }
  CharacterPolynomial& operator-=(const CharacterPolynomial& o) {
    require(o.size_ == size_, ErrorKind::SizeMismatch, "subtracting characters of different rank");
    for (const auto& [mu, c] : o.terms_) add(mu, -c);
    return *this;
  }
  friend CharacterPolynomial operator+(CharacterPolynomial a, const CharacterPolynomial& b) { return a += b; }
  friend CharacterPolynomial operator-(CharacterPolynomial a, const CharacterPolynomial& b) { return a -= b; }
  friend CharacterPolynomial operator*(const Integer& k, const CharacterPolynomial& p) {
    CharacterPolynomial out(p.size_);
    for (const auto& [mu, c] : p.terms_) out.add(mu, k * c);
    return out;
  }

  Integer coefficient_sum() const {
    Integer s = 0;
    for (const auto& [mu, c] : terms_) s += c;
    return s;
  }

  friend bool operator==(const CharacterPolynomial& a, const CharacterPolynomial& b) {
    return a.size_ == b.size_ && a.terms_ == b.terms_;
  }

 private:
  Index size_ = 0;
  Terms terms_;
};

/// One term per line, "c*e[m_1,...,m_n]", exponents in descending
/// lexicographic order. No trailing newline.
inline std::string canonical_serialize(const CharacterPolynomial& f) {
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    if (!out.empty()) out += "\n";
    out += it->second.get_str() + "*e" + to_string(it->first);
  }
  return out;
}

/// D_i e(mu) with m = <mu, alpha_i^vee>:
///   m >= 0:  e(mu) + e(mu - alpha_i) + ... + e(mu - m alpha_i)
///   m = -1:  0
///   m <= -2: -(e(mu + alpha_i) + ... + e(mu + (-m-1) alpha_i))
inline CharacterPolynomial demazure_op(const GCM& a, const CharacterPolynomial& f, Index i) {
  require(f.gcm_size() == a.size(), ErrorKind::SizeMismatch, "character rank differs from the Cartan matrix");
  require(i < a.size(), ErrorKind::InvalidInput, "Demazure operator index " + std::to_string(i) + " out of range");
  const Weight alpha = simple_root(a, i);
  CharacterPolynomial out(a.size());
  for (const auto& [mu, c] : f.terms()) {
    const Coord m = mu[i];
    if (m >= 0) {
      Weight nu = mu;
      for (Coord k = 0; k <= m; ++k) {
        out.add(nu, c);
        nu -= alpha;
      }
    } else if (m <= -2) {
      Weight nu = mu;
      for (Coord k = 1; k <= -m - 1; ++k) {
        nu += alpha;
        out.add(nu, -c);
      }
    }
  }
  return out;
}

/// D_{i_1}(D_{i_2}(... D_{i_k}(e(lambda)))). On finite type the word is first
/// replaced by the canonical reduced word of its element; otherwise it is
/// taken to be reduced as given.
inline CharacterPolynomial demazure_character(const GCM& a, const Weight& lambda, const WeylWord& w) {
  require_size(a, lambda.size(), "weight");
  require(lambda.is_dominant(), ErrorKind::NotDominant, "Demazure character needs a dominant weight, got " + to_string(lambda));
  const WeylWord word = a.is_finite_type() ? reduced_word(a, w) : w;
  CharacterPolynomial f = CharacterPolynomial::monomial(lambda);
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) f = demazure_op(a, f, *it);
  return f;
}

/// Weight multiplicities of L(lambda) by Freudenthal's recursion, run on
/// contents beta = lambda - mu in order of height:
///   (2(lambda+rho, beta) - (beta, beta)) mult(beta)
///     = 2 sum_{alpha>0} sum_{k>=1} ((lambda, alpha) - (beta - k alpha, alpha)) mult(beta - k alpha)
/// Every quantity is an integer in root coordinates.
inline CharacterPolynomial freudenthal_character(const GCM& a, const Weight& lambda) {
  a.require_finite_type("freudenthal_character");
  require_size(a, lambda.size(), "weight");
  require(lambda.is_dominant(), ErrorKind::NotDominant, "Freudenthal needs a dominant weight, got " + to_string(lambda));
  const Index n = a.size();
  const auto roots = positive_roots(a);
  const Weight lowest = element_of(a, longest_element(a))(lambda);
  const auto top = to_root(a, lambda - lowest);
  require(top.has_value(), ErrorKind::Internal, "lambda - w0(lambda) is not in the root lattice");

  // Contents in the box [0, top], by height.
  std::vector<RootVector> box;
  RootVector cur = RootVector::zero(n);
  for (;;) {
    box.push_back(cur);
    Index i = 0;
    while (i < n && cur[i] == (*top)[i]) cur[i++] = 0;
    if (i == n) break;
    ++cur[i];
  }
  std::stable_sort(box.begin(), box.end(),
                   [](const RootVector& x, const RootVector& y) { return x.height() < y.height(); });

  const Weight shifted = lambda + Weight::rho(n);
  std::vector<Integer> lambda_alpha;
  for (const auto& alpha : roots) lambda_alpha.push_back(form(a, lambda, alpha));

  std::map<RootVector, Integer> mult;
  mult[RootVector::zero(n)] = 1;
  for (const auto& beta : box) {
    if (beta.is_zero()) continue;
    const Integer denom = 2 * form(a, shifted, beta) - form(a, beta, beta);
    Integer numer = 0;
    for (Index r = 0; r < roots.size(); ++r) {
      const RootVector& alpha = roots[r];
      RootVector upper = beta - alpha;
      while (upper.is_nonnegative()) {
        auto it = mult.find(upper);
        if (it != mult.end()) numer += (lambda_alpha[r] - form(a, upper, alpha)) * it->second;
        upper -= alpha;
      }
    }
    numer *= 2;
    if (denom == 0) {
      require(numer == 0, ErrorKind::Internal, "Freudenthal recursion inconsistent at content " + to_string(beta));
      continue;
    }
    require(numer % denom == 0, ErrorKind::Internal, "non-integral multiplicity at content " + to_string(beta));
    const Integer m = numer / denom;
    require(m >= 0, ErrorKind::Internal, "negative multiplicity at content " + to_string(beta));
    if (m != 0) mult[beta] = m;
  }

  CharacterPolynomial out(n);
  for (const auto& [beta, m] : mult) out.add(lambda - to_weight(a, beta), m);
  return out;
}

}  // namespace twining
