#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "twining/error.hpp"
#include "twining/numeric.hpp"

namespace twining {

/// Integral weight in fundamental-weight coordinates, m_i = <lambda, alpha_i^vee>.
struct Weight {
  std::vector<Coord> coords;

  Weight() = default;
  explicit Weight(std::vector<Coord> c) : coords(std::move(c)) {}
  Weight(std::initializer_list<Coord> c) : coords(c) {}

  static Weight zero(Index n) { return Weight(std::vector<Coord>(n, 0)); }
  static Weight rho(Index n) { return Weight(std::vector<Coord>(n, 1)); }

  Index size() const noexcept { return coords.size(); }
  Coord operator[](Index i) const { return coords[i]; }
  Coord& operator[](Index i) { return coords[i]; }

  bool is_dominant() const {
    return std::all_of(coords.begin(), coords.end(), [](Coord m) { return m >= 0; });
  }

  Weight& operator+=(const Weight& o) {
    for (Index i = 0; i < size(); ++i) coords[i] += o.coords[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (Index i = 0; i < size(); ++i) coords[i] -= o.coords[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(Coord k, Weight a) {
    for (auto& m : a.coords) m *= k;
    return a;
  }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// beta = sum_i k_i alpha_i. A "content" when every k_i >= 0.
struct RootVector {
  std::vector<Coord> coeffs;

  RootVector() = default;
  explicit RootVector(std::vector<Coord> c) : coeffs(std::move(c)) {}
  RootVector(std::initializer_list<Coord> c) : coeffs(c) {}

  static RootVector zero(Index n) { return RootVector(std::vector<Coord>(n, 0)); }
  static RootVector simple(Index n, Index i) {
    RootVector r = zero(n);
    r.coeffs[i] = 1;
    return r;
  }

  Index size() const noexcept { return coeffs.size(); }
  Coord operator[](Index i) const { return coeffs[i]; }
  Coord& operator[](Index i) { return coeffs[i]; }

  Coord height() const { return std::accumulate(coeffs.begin(), coeffs.end(), Coord{0}); }
  bool is_nonnegative() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](Coord k) { return k >= 0; });
  }
  bool is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](Coord k) { return k == 0; });
  }
  bool is_nonpositive() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](Coord k) { return k <= 0; });
  }
  /// Componentwise partial order.
  bool leq(const RootVector& o) const {
    for (Index i = 0; i < size(); ++i)
      if (coeffs[i] > o.coeffs[i]) return false;
    return true;
  }

  RootVector& operator+=(const RootVector& o) {
    for (Index i = 0; i < size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
  }
  RootVector& operator-=(const RootVector& o) {
    for (Index i = 0; i < size(); ++i) coeffs[i] -= o.coeffs[i];
    return *this;
  }
  friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
  friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
  friend RootVector operator*(Coord k, RootVector a) {
    for (auto& c : a.coeffs) c *= k;
    return a;
  }

  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;
};

inline std::string to_string(const std::vector<Coord>& v) {
  std::string s = "[";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}
inline std::string to_string(const Weight& w) { return to_string(w.coords); }
inline std::string to_string(const RootVector& r) { return to_string(r.coeffs); }

/// A validated, symmetrizable generalized Cartan matrix a_ij = <alpha_j, alpha_i^vee>.
/// Construct through validate(); instances are immutable.
class GeneralizedCartanMatrix {
 public:
  static GeneralizedCartanMatrix validate(const IntMatrix& m) {
    require(m.rows() == m.cols(), ErrorKind::NotGCM, "matrix is not square");
    require(m.rows() > 0, ErrorKind::NotGCM, "matrix is empty");
    const Index n = m.rows();
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        const std::string at = "a(" + std::to_string(i) + "," + std::to_string(j) + ")=" + std::to_string(m(i, j));
        if (i == j) {
          require(m(i, j) == 2, ErrorKind::NotGCM, at + " but diagonal entries must be 2");
        } else {
          require(m(i, j) <= 0, ErrorKind::NotGCM, at + " but off-diagonal entries must be <= 0");
          require((m(i, j) == 0) == (m(j, i) == 0), ErrorKind::NotGCM,
                  at + " while a(" + std::to_string(j) + "," + std::to_string(i) + ")=" + std::to_string(m(j, i)) +
                      " (zero pattern must be symmetric)");
        }
      }
    }
    GeneralizedCartanMatrix gcm;
    gcm.a_ = m;
    gcm.d_ = compute_symmetrizer(m);
    return gcm;
  }

  static GeneralizedCartanMatrix validate(const std::vector<std::vector<Coord>>& rows) {
    for (const auto& r : rows) require(r.size() == rows.size(), ErrorKind::NotGCM, "matrix is not square");
    return validate(IntMatrix::from_rows(rows));
  }

  Index size() const noexcept { return a_.rows(); }
  Coord operator()(Index i, Index j) const { return a_(i, j); }
  const IntMatrix& matrix() const noexcept { return a_; }
  const std::vector<Coord>& symmetrizer() const noexcept { return d_; }
  Coord symmetrizer(Index i) const { return d_[i]; }

  Integer det() const { return determinant(a_); }
  bool is_invertible() const { return det() != 0; }

  /// Finite type iff every leading principal minor is positive.
  bool is_finite_type() const {
    for (Index k = 1; k <= size(); ++k) {
      IntMatrix minor(k, k);
      for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j) minor(i, j) = a_(i, j);
      if (determinant(minor) <= 0) return false;
    }
    return true;
  }

  void require_finite_type(const std::string& context) const {
    require(is_finite_type(), ErrorKind::NotFiniteType, context + " requires a finite-type Cartan matrix, got " + a_.str());
  }

  std::vector<std::vector<Index>> connected_components() const {
    const Index n = size();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<Index>> out;
    for (Index s = 0; s < n; ++s) {
      if (comp[s] >= 0) continue;
      out.emplace_back();
      std::vector<Index> stack{s};
      comp[s] = static_cast<int>(out.size() - 1);
      while (!stack.empty()) {
        const Index i = stack.back();
        stack.pop_back();
        out.back().push_back(i);
        for (Index j = 0; j < n; ++j)
          if (j != i && a_(i, j) != 0 && comp[j] < 0) {
            comp[j] = comp[s];
            stack.push_back(j);
          }
      }
      std::sort(out.back().begin(), out.back().end());
    }
    return out;
  }

  friend bool operator==(const GeneralizedCartanMatrix& x, const GeneralizedCartanMatrix& y) { return x.a_ == y.a_; }

 private:
  GeneralizedCartanMatrix() = default;

  // d_i a_ij = d_j a_ji: propagate ratios along edges, check on every edge
  // (which covers cycles), then scale each component to coprime integers.
  static std::vector<Coord> compute_symmetrizer(const IntMatrix& a) {
    const Index n = a.rows();
    std::vector<Rational> d(n, Rational(0));
    std::vector<bool> seen(n, false);
    for (Index s = 0; s < n; ++s) {
      if (seen[s]) continue;
      std::vector<Index> component;
      std::queue<Index> q;
      q.push(s);
      seen[s] = true;
      d[s] = 1;
      while (!q.empty()) {
        const Index i = q.front();
        q.pop();
        component.push_back(i);
        for (Index j = 0; j < n; ++j) {
          if (j == i || a(i, j) == 0) continue;
          const Rational dj = d[i] * make_rational(Integer(static_cast<long>(a(i, j))), Integer(static_cast<long>(a(j, i))));
          if (!seen[j]) {
            seen[j] = true;
            d[j] = dj;
            q.push(j);
          } else if (d[j] != dj) {
            fail(ErrorKind::NotSymmetrizable, "inconsistent ratio around a cycle through nodes " + std::to_string(i) +
                                                  " and " + std::to_string(j));
          }
        }
      }
      Integer lcm_den = 1;
      for (Index i : component) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d[i].get_den_mpz_t());
      Integer g = 0;
      for (Index i : component) {
        d[i] *= lcm_den;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d[i].get_num_mpz_t());
      }
      for (Index i : component) d[i] /= g;
    }
    std::vector<Coord> out(n);
    for (Index i = 0; i < n; ++i) out[i] = d[i].get_num().get_si();
    return out;
  }

  IntMatrix a_;
  std::vector<Coord> d_;
};

using GCM = GeneralizedCartanMatrix;

// ---------------------------------------------------------------------------
// Catalog (Bourbaki numbering, shifted to 0-based node labels)

inline GCM catalog(const std::string& label) {
  require(label.size() >= 2, ErrorKind::InvalidInput, "unknown Cartan label '" + label + "'");
  const char family = label[0];
  int rank = 0;
  try {
    rank = std::stoi(label.substr(1));
  } catch (...) {
    fail(ErrorKind::InvalidInput, "unknown Cartan label '" + label + "'");
  }
  require(rank >= 1 && rank <= 16, ErrorKind::InvalidInput, "unsupported rank in '" + label + "'");
  const Index n = static_cast<Index>(rank);
  IntMatrix a = IntMatrix::identity(n);
  for (Index i = 0; i < n; ++i) a(i, i) = 2;
  auto link = [&](Index i, Index j) { a(i, j) = a(j, i) = -1; };
  switch (family) {
    case 'A':
      for (Index i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      require(n >= 2, ErrorKind::InvalidInput, "B needs rank >= 2");
      for (Index i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 1, n - 2) = -2;  // last node short
      break;
    case 'C':
      require(n >= 2, ErrorKind::InvalidInput, "C needs rank >= 2");
      for (Index i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 2, n - 1) = -2;  // last node long
      break;
    case 'D':
      require(n >= 4, ErrorKind::InvalidInput, "D needs rank >= 4");
      for (Index i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'G':
      require(n == 2, ErrorKind::InvalidInput, "G exists only in rank 2");
      a(0, 1) = -3;  // node 0 short
      a(1, 0) = -1;
      break;
    default:
      fail(ErrorKind::InvalidInput, "unknown Cartan label '" + label + "'");
  }
  return GCM::validate(a);
}

// ---------------------------------------------------------------------------
// Weight arithmetic

inline void require_size(const GCM& a, Index n, const char* what) {
  require(n == a.size(), ErrorKind::SizeMismatch,
          std::string(what) + " has size " + std::to_string(n) + " but the Cartan matrix has size " +
              std::to_string(a.size()));
}

inline Coord pairing(const Weight& lambda, Index i) { return lambda[i]; }

/// alpha_j in fundamental-weight coordinates (column j of A).
inline Weight simple_root(const GCM& a, Index j) {
  require(j < a.size(), ErrorKind::InvalidInput, "simple root index out of range");
  Weight w = Weight::zero(a.size());
  for (Index i = 0; i < a.size(); ++i) w[i] = a(i, j);
  return w;
}

inline Weight reflect(const GCM& a, const Weight& lambda, Index i) {
  require_size(a, lambda.size(), "weight");
  const Coord m = lambda[i];
  Weight out = lambda;
  if (m != 0)
    for (Index j = 0; j < a.size(); ++j) out[j] -= m * a(j, i);
  return out;
}

inline bool is_dominant(const Weight& lambda) { return lambda.is_dominant(); }

/// lambda(beta)_i = sum_j a_ij k_j.
inline Weight to_weight(const GCM& a, const RootVector& beta) {
  require_size(a, beta.size(), "root vector");
  Weight w = Weight::zero(a.size());
  for (Index i = 0; i < a.size(); ++i)
    for (Index j = 0; j < a.size(); ++j) w[i] += a(i, j) * beta[j];
  return w;
}

/// Inverse of to_weight; nullopt when the result is not integral. Requires det A != 0.
inline std::optional<RootVector> to_root(const GCM& a, const Weight& w) {
  require_size(a, w.size(), "weight");
  const Index n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) m[i][j] = static_cast<long>(a(i, j));
    m[i][n] = static_cast<long>(w[i]);
  }
  for (Index col = 0; col < n; ++col) {
    Index piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    require(piv < n, ErrorKind::NotFiniteType, "root coordinates need an invertible Cartan matrix");
    std::swap(m[piv], m[col]);
    const Rational inv = 1 / m[col][col];
    for (Index j = col; j <= n; ++j) m[col][j] *= inv;
    for (Index i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (Index j = col; j <= n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  RootVector r = RootVector::zero(n);
  for (Index i = 0; i < n; ++i) {
    if (!is_integral(m[i][n])) return std::nullopt;
    r[i] = m[i][n].get_num().get_si();
  }
  return r;
}

/// s_i on root coordinates: beta - <beta, alpha_i^vee> alpha_i.
inline RootVector reflect_root(const GCM& a, const RootVector& beta, Index i) {
  Coord p = 0;
  for (Index j = 0; j < a.size(); ++j) p += a(i, j) * beta[j];
  RootVector out = beta;
  out[i] -= p;
  return out;
}

/// Invariant form with (lambda, alpha_j) = d_j m_j.
inline Integer form(const GCM& a, const Weight& lambda, const RootVector& beta) {
  Integer s = 0;
  for (Index j = 0; j < a.size(); ++j) s += Integer(static_cast<long>(a.symmetrizer(j) * lambda[j])) * static_cast<long>(beta[j]);
  return s;
}

/// (beta, gamma) on root coordinates: sum_ij beta_i gamma_j d_i a_ij.
inline Integer form(const GCM& a, const RootVector& beta, const RootVector& gamma) {
  Integer s = 0;
  for (Index i = 0; i < a.size(); ++i) {
    if (beta[i] == 0) continue;
    for (Index j = 0; j < a.size(); ++j) s += Integer(static_cast<long>(beta[i] * gamma[j])) * static_cast<long>(a.symmetrizer(i) * a(i, j));
  }
  return s;
}

// ---------------------------------------------------------------------------
// Positive roots and the Weyl dimension formula

/// Positive roots by closing the simple roots under simple reflections.
/// Sorted by height, then lexicographically.
inline std::vector<RootVector> positive_roots(const GCM& a) {
  a.require_finite_type("positive_roots");
  const Index n = a.size();
  std::set<RootVector> found;
  std::vector<RootVector> frontier;
  for (Index i = 0; i < n; ++i) {
    frontier.push_back(RootVector::simple(n, i));
    found.insert(frontier.back());
  }
  while (!frontier.empty()) {
    std::vector<RootVector> next;
    for (const auto& beta : frontier)
      for (Index i = 0; i < n; ++i) {
        RootVector r = reflect_root(a, beta, i);
        if (!r.is_nonnegative() || r.is_zero()) continue;
        if (found.insert(r).second) next.push_back(r);
      }
    frontier = std::move(next);
  }
  std::vector<RootVector> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const RootVector& x, const RootVector& y) { return x.height() < y.height(); });
  return out;
}

/// dim L(lambda) = prod_{alpha>0} (lambda+rho, alpha)/(rho, alpha).
inline Integer weyl_dimension(const GCM& a, const Weight& lambda) {
  require_size(a, lambda.size(), "weight");
  require(lambda.is_dominant(), ErrorKind::NotDominant, "weyl_dimension needs a dominant weight, got " + to_string(lambda));
  const auto roots = positive_roots(a);
  const Weight rho = Weight::rho(a.size());
  const Weight shifted = lambda + rho;
  Rational dim = 1;
  for (const auto& alpha : roots) dim *= make_rational(form(a, shifted, alpha), form(a, rho, alpha));
  require(is_integral(dim), ErrorKind::Internal, "Weyl dimension is not an integer");
  return dim.get_num();
}

struct RootsAndDimension {
  std::vector<RootVector> roots;
  Integer dimension;
};

inline RootsAndDimension positive_roots_and_dim(const GCM& a, const Weight& lambda) {
  return {positive_roots(a), weyl_dimension(a, lambda)};
}

}  // namespace twining
