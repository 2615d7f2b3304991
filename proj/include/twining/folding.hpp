#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "twining/automorphism.hpp"
#include "twining/root_data.hpp"
#include "twining/weyl.hpp"

namespace twining {

/// Orbit data of a diagram automorphism. Orbit k has representative
/// orbits[k].front(); s[k] = sum_{j in orbit} a_{rep,j} and c[k] = 2/s[k]
/// (absent when s[k] <= 0).
struct OrbitData {
  std::vector<std::vector<Index>> orbits;
  std::vector<Index> orbit_of;  // node -> orbit index
  std::vector<Coord> s;
  std::vector<std::optional<Rational>> c;

  Index count() const noexcept { return orbits.size(); }
  Index rep(Index k) const { return orbits[k].front(); }
  Index orbit_size(Index k) const { return orbits[k].size(); }
};

inline std::string orbit_label(const std::vector<Index>& orbit) {
  std::string s = "{";
  for (Index k = 0; k < orbit.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(orbit[k]);
  }
  return s + "}";
}

struct ValidatedAutomorphism {
  DiagramAutomorphism omega;
  OrbitData orbits;
};

inline OrbitData orbit_data(const GCM& a, const DiagramAutomorphism& omega) {
  OrbitData d;
  d.orbits = omega.orbits();
  d.orbit_of.assign(a.size(), 0);
  for (Index k = 0; k < d.count(); ++k) {
    for (Index j : d.orbits[k]) d.orbit_of[j] = k;
    auto orbit_sum = [&](Index i) {
      Coord s = 0;
      for (Index j : d.orbits[k]) s += a(i, j);
      return s;
    };
    const Coord s = orbit_sum(d.rep(k));
    for (Index i : d.orbits[k])
      require(orbit_sum(i) == s, ErrorKind::Internal,
              "orbit sum differs between members of " + orbit_label(d.orbits[k]));
    d.s.push_back(s);
    d.c.push_back(s > 0 ? std::optional<Rational>(make_rational(2, s)) : std::nullopt);
  }
  return d;
}

inline ValidatedAutomorphism validate_automorphism(const GCM& a, std::vector<Index> perm) {
  auto omega = DiagramAutomorphism::validate(a, std::move(perm));
  auto data = orbit_data(a, omega);
  return {std::move(omega), std::move(data)};
}

/// The orbit Lie algebra data. Produced by fold(), which checks every
/// invariant before returning. Fields are public so test fixtures can corrupt
/// them.
struct FoldingData {
  GCM source;
  DiagramAutomorphism omega;
  OrbitData orbits;
  GCM folded;
  IntMatrix pstar_matrix;              // n x n_hat, orbit indicator columns
  std::vector<WeylWord> theta_table;   // orbit index -> word over the source
};

namespace detail {

// Components of the subdiagram induced on an orbit; each must be a single
// node or a single simply-laced edge.
inline std::vector<std::vector<Index>> orbit_components(const GCM& a, const std::vector<Index>& orbit) {
  std::vector<std::vector<Index>> comps;
  std::set<Index> done;
  for (Index p : orbit) {
    if (done.count(p)) continue;
    std::vector<Index> neighbours;
    for (Index q : orbit)
      if (q != p && a(p, q) != 0) neighbours.push_back(q);
    if (neighbours.empty()) {
      comps.push_back({p});
      done.insert(p);
      continue;
    }
    require(neighbours.size() == 1, ErrorKind::UnsupportedOrbitShape,
            "node " + std::to_string(p) + " has several neighbours inside orbit " + orbit_label(orbit));
    const Index q = neighbours.front();
    require(a(p, q) == -1 && a(q, p) == -1, ErrorKind::UnsupportedOrbitShape,
            "edge " + std::to_string(p) + "-" + std::to_string(q) + " inside orbit " + orbit_label(orbit) +
                " is not simply laced");
    for (Index r : orbit)
      require(r == p || r == q || a(q, r) == 0, ErrorKind::UnsupportedOrbitShape,
              "node " + std::to_string(q) + " has several neighbours inside orbit " + orbit_label(orbit));
    comps.push_back({std::min(p, q), std::max(p, q)});
    done.insert(p);
    done.insert(q);
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

inline WeylWord orbit_longest_word(const GCM& a, const std::vector<Index>& orbit) {
  WeylWord w;
  for (const auto& comp : orbit_components(a, orbit)) {
    if (comp.size() == 1) {
      w.letters.push_back(comp[0]);
    } else {
      w.letters.insert(w.letters.end(), {comp[0], comp[1], comp[0]});
    }
  }
  return w;
}

}  // namespace detail

inline Weight pstar(const FoldingData& f, const Weight& mu_hat) {
  require(mu_hat.size() == f.folded.size(), ErrorKind::SizeMismatch,
          "folded weight has size " + std::to_string(mu_hat.size()) + ", expected " + std::to_string(f.folded.size()));
  return Weight(f.pstar_matrix.apply(mu_hat.coords));
}

inline bool is_symmetric_weight(const FoldingData& f, const Weight& lambda) {
  return is_symmetric_weight(lambda, f.omega);
}

inline Weight pstar_inverse(const FoldingData& f, const Weight& lambda) {
  require(lambda.size() == f.source.size(), ErrorKind::SizeMismatch, "weight size differs from the Cartan matrix");
  require(is_symmetric_weight(lambda, f.omega), ErrorKind::NotSymmetricWeight,
          to_string(lambda) + " is not constant on the orbits of " + f.omega.str());
  Weight out = Weight::zero(f.orbits.count());
  for (Index k = 0; k < f.orbits.count(); ++k) out[k] = lambda[f.orbits.rep(k)];
  return out;
}

inline WeylWord theta(const FoldingData& f, const WeylWord& w_hat) {
  WeylWord out;
  for (Index k : w_hat.letters) {
    require(k < f.theta_table.size(), ErrorKind::InvalidInput, "folded letter " + std::to_string(k) + " out of range");
    out = out + f.theta_table[k];
  }
  return out;
}

/// Peels orbit-longest elements off the right while they shorten w.
inline WeylWord theta_inverse(const FoldingData& f, const WeylWord& w) {
  const GCM& a = f.source;
  a.require_finite_type("theta_inverse");
  require(is_in_W_tilde(a, w, f.omega), ErrorKind::NotInWTilde, "word " + to_string(w) + " does not commute with omega*");
  WeylElement g = element_of(a, w);
  Index len = length(a, g);
  std::vector<Index> peeled;
  while (len > 0) {
    bool found = false;
    for (Index k = 0; k < f.theta_table.size() && !found; ++k) {
      WeylElement h = g * element_of(a, f.theta_table[k]);
      const Index hl = length(a, h);
      if (hl < len) {
        peeled.push_back(k);
        g = h;
        len = hl;
        found = true;
      }
    }
    require(found, ErrorKind::NoDescentFound, "no orbit descent for the remainder of " + to_string(w));
  }
  return WeylWord(std::vector<Index>(peeled.rbegin(), peeled.rend()));
}

/// Checks every FoldingData invariant; throws Internal on the first failure.
inline void check_folding_invariants(const FoldingData& f) {
  const GCM& a = f.source;
  const Index n = a.size();
  const Index m = f.orbits.count();
  require(f.folded.size() == m, ErrorKind::Internal, "folded matrix has wrong size");
  require(f.pstar_matrix.rows() == n && f.pstar_matrix.cols() == m, ErrorKind::Internal, "P* has wrong shape");
  for (Index k = 0; k < m; ++k)
    for (Index j = 0; j < n; ++j)
      require(f.pstar_matrix(j, k) == (f.orbits.orbit_of[j] == k ? 1 : 0), ErrorKind::Internal,
              "P* column " + std::to_string(k) + " is not the indicator of its orbit");
  // Representative independence of the folded entries.
  for (Index k = 0; k < m; ++k) {
    for (Index i : f.orbits.orbits[k])
      for (Index l = 0; l < m; ++l) {
        Coord sum = 0;
        for (Index j : f.orbits.orbits[l]) sum += a(i, j);
        require(*f.orbits.c[l] * sum == f.folded(k, l), ErrorKind::Internal,
                "folded entry (" + std::to_string(k) + "," + std::to_string(l) + ") depends on the representative");
      }
  }
  for (Index k = 0; k < m; ++k) {
    const WeylWord& wk = f.theta_table[k];
    require(is_in_W_tilde(a, wk, f.omega), ErrorKind::Internal,
            "theta word for orbit " + orbit_label(f.orbits.orbits[k]) + " does not commute with omega*");
    const IntMatrix lhs = element_of(a, wk).matrix() * f.pstar_matrix;
    const IntMatrix rhs = f.pstar_matrix * WeylElement::simple(f.folded, k).matrix();
    require(lhs == rhs, ErrorKind::Internal,
            "intertwining M(theta(s_" + std::to_string(k) + "))P* = P*M(s_" + std::to_string(k) + ") fails");
  }
}

inline FoldingData fold(const GCM& a, const DiagramAutomorphism& omega) {
  require(omega.size() == a.size(), ErrorKind::SizeMismatch, "automorphism size differs from the Cartan matrix");
  OrbitData od = orbit_data(a, omega);
  const Index m = od.count();
  for (Index k = 0; k < m; ++k)
    require(od.s[k] == 1 || od.s[k] == 2, ErrorKind::LinkingConditionFailed,
            "orbit " + orbit_label(od.orbits[k]) + " has s = " + std::to_string(od.s[k]) + " (need 1 or 2)");
  std::vector<WeylWord> table;
  for (Index k = 0; k < m; ++k) table.push_back(detail::orbit_longest_word(a, od.orbits[k]));

  IntMatrix folded(m, m);
  for (Index k = 0; k < m; ++k)
    for (Index l = 0; l < m; ++l) {
      Coord sum = 0;
      for (Index j : od.orbits[l]) sum += a(od.rep(k), j);
      // Scaled by the column orbit: column l is the folded simple root, and
      // theta(s_l) moves an orbit-constant weight by c_l times the orbit sum.
      const Rational entry = *od.c[l] * sum;
      require(is_integral(entry), ErrorKind::Internal, "folded entry is not an integer");
      folded(k, l) = entry.get_num().get_si();
    }
  std::optional<GCM> folded_gcm;
  try {
    folded_gcm = GCM::validate(folded);
  } catch (const Error& e) {
    fail(ErrorKind::Internal, std::string("folded matrix is not a symmetrizable GCM: ") + e.what());
  }

  IntMatrix p(a.size(), m);
  for (Index j = 0; j < a.size(); ++j) p(j, od.orbit_of[j]) = 1;

  FoldingData f{a, omega, std::move(od), *folded_gcm, std::move(p), std::move(table)};
  check_folding_invariants(f);
  return f;
}

inline FoldingData fold(const GCM& a, std::vector<Index> perm) {
  return fold(a, DiagramAutomorphism::validate(a, std::move(perm)));
}

/// "{0,2}->0,2 ; {1}->1"
inline std::string theta_table_string(const FoldingData& f) {
  std::string s;
  for (Index k = 0; k < f.theta_table.size(); ++k) {
    if (k) s += " ; ";
    s += orbit_label(f.orbits.orbits[k]) + "->" + to_string(f.theta_table[k]);
  }
  return s;
}

}  // namespace twining
