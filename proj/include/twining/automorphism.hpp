#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "twining/root_data.hpp"

namespace twining {

/// A permutation omega of the node set with a_{omega(i),omega(j)} = a_ij.
class DiagramAutomorphism {
 public:
  static DiagramAutomorphism validate(const GCM& a, std::vector<Index> perm) {
    const Index n = a.size();
    require(perm.size() == n, ErrorKind::SizeMismatch,
            "automorphism has " + std::to_string(perm.size()) + " images for " + std::to_string(n) + " nodes");
    std::vector<bool> hit(n, false);
    for (Index i = 0; i < n; ++i) {
      require(perm[i] < n, ErrorKind::InvalidInput, "automorphism image " + std::to_string(perm[i]) + " out of range");
      require(!hit[perm[i]], ErrorKind::InvalidInput, "automorphism is not a bijection");
      hit[perm[i]] = true;
    }
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        require(a(perm[i], perm[j]) == a(i, j), ErrorKind::NotDiagramAutomorphism,
                "pair (" + std::to_string(i) + "," + std::to_string(j) + "): a(" + std::to_string(perm[i]) + "," +
                    std::to_string(perm[j]) + ")=" + std::to_string(a(perm[i], perm[j])) + " but a(" +
                    std::to_string(i) + "," + std::to_string(j) + ")=" + std::to_string(a(i, j)));
    DiagramAutomorphism w;
    w.perm_ = std::move(perm);
    w.inverse_.assign(n, 0);
    for (Index i = 0; i < n; ++i) w.inverse_[w.perm_[i]] = i;
    w.order_ = 1;
    std::vector<Index> power = w.perm_;
    auto is_identity = [](const std::vector<Index>& p) {
      for (Index i = 0; i < p.size(); ++i)
        if (p[i] != i) return false;
      return true;
    };
    while (!is_identity(power)) {
      for (Index i = 0; i < n; ++i) power[i] = w.perm_[power[i]];
      ++w.order_;
    }
    return w;
  }

  static DiagramAutomorphism identity(const GCM& a) {
    std::vector<Index> p(a.size());
    std::iota(p.begin(), p.end(), Index{0});
    return validate(a, std::move(p));
  }

  Index size() const noexcept { return perm_.size(); }
  Index operator()(Index i) const { return perm_[i]; }
  Index inverse(Index i) const { return inverse_[i]; }
  const std::vector<Index>& images() const noexcept { return perm_; }
  Index order() const noexcept { return order_; }

  /// omega*: (omega* lambda)_i = m_{omega(i)}.
  Weight star(const Weight& lambda) const {
    Weight out = lambda;
    for (Index i = 0; i < size(); ++i) out[i] = lambda[perm_[i]];
    return out;
  }

  /// Permutation matrix of omega* acting on fundamental-weight coordinates.
  IntMatrix star_matrix() const {
    IntMatrix p(size(), size());
    for (Index i = 0; i < size(); ++i) p(i, perm_[i]) = 1;
    return p;
  }

  /// Orbits as sorted index lists, ordered by smallest element.
  std::vector<std::vector<Index>> orbits() const {
    std::vector<bool> seen(size(), false);
    std::vector<std::vector<Index>> out;
    for (Index s = 0; s < size(); ++s) {
      if (seen[s]) continue;
      std::vector<Index> orbit;
      for (Index i = s; !seen[i]; i = perm_[i]) {
        seen[i] = true;
        orbit.push_back(i);
      }
      std::sort(orbit.begin(), orbit.end());
      out.push_back(std::move(orbit));
    }
    return out;
  }

  /// Content beta is omega-stable iff beta_{omega(j)} = beta_j.
  bool fixes(const RootVector& beta) const {
    for (Index j = 0; j < size(); ++j)
      if (beta[perm_[j]] != beta[j]) return false;
    return true;
  }

  std::string str() const {
    std::string s = "[";
    for (Index i = 0; i < size(); ++i) {
      if (i) s += ",";
      s += std::to_string(perm_[i]);
    }
    return s + "]";
  }

 private:
  DiagramAutomorphism() = default;

  std::vector<Index> perm_;
  std::vector<Index> inverse_;
  Index order_ = 1;
};

/// Symmetric weights are the fixed points of omega*.
inline bool is_symmetric_weight(const Weight& lambda, const DiagramAutomorphism& omega) {
  require(lambda.size() == omega.size(), ErrorKind::SizeMismatch, "weight and automorphism sizes differ");
  return omega.star(lambda) == lambda;
}

}  // namespace twining
