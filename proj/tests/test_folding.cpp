#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "generators.hpp"
#include "twining/folding.hpp"

using namespace twining;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

struct Case {
  const char* label;
  std::vector<Index> perm;
};

const std::vector<Case> kBattery{
    {"A2", {1, 0}}, {"A3", {2, 1, 0}}, {"A4", {3, 2, 1, 0}}, {"D4", {2, 1, 3, 0}}, {"D4", {0, 1, 3, 2}}};

}  // namespace

TEST(Orbits, Examples) {
  const auto a3 = validate_automorphism(catalog("A3"), {2, 1, 0});
  EXPECT_EQ(a3.orbits.orbits, (std::vector<std::vector<Index>>{{0, 2}, {1}}));
  EXPECT_EQ(a3.orbits.s, (std::vector<Coord>{2, 2}));
  const auto a2 = validate_automorphism(catalog("A2"), {1, 0});
  EXPECT_EQ(a2.orbits.orbits.size(), 1u);
  EXPECT_EQ(a2.orbits.s, (std::vector<Coord>{1}));
  EXPECT_EQ(kind_of([] { validate_automorphism(catalog("B2"), {1, 0}); }), ErrorKind::NotDiagramAutomorphism);
}

TEST(Fold, FoldedMatrices) {
  EXPECT_EQ(fold(catalog("A2"), {1, 0}).folded.matrix().str(), "[[2]]");
  EXPECT_EQ(fold(catalog("A3"), {2, 1, 0}).folded.matrix().str(), "[[2,-1],[-2,2]]");
  EXPECT_EQ(fold(catalog("D4"), {2, 1, 3, 0}).folded.matrix().str(), "[[2,-1],[-3,2]]");
  EXPECT_EQ(fold(catalog("D4"), {0, 1, 3, 2}).folded.matrix().str(), "[[2,-1,0],[-1,2,-2],[0,-1,2]]");
  // Column scaling: the A2-shaped orbit {1,2} carries c = 2.
  EXPECT_EQ(fold(catalog("A4"), {3, 2, 1, 0}).folded.matrix().str(), "[[2,-2],[-1,2]]");
}

TEST(Fold, IdentityFoldsToItself) {
  for (const char* label : {"A3", "B3", "G2"}) {
    const GCM a = catalog(label);
    const FoldingData f = fold(a, DiagramAutomorphism::identity(a));
    EXPECT_EQ(f.folded.matrix(), a.matrix());
    EXPECT_EQ(f.pstar_matrix, IntMatrix::identity(a.size()));
  }
}

TEST(Fold, Errors) {
  const GCM affine = GCM::validate({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
  EXPECT_EQ(kind_of([&] { fold(affine, {1, 2, 0}); }), ErrorKind::LinkingConditionFailed);
  EXPECT_EQ(kind_of([] { fold(catalog("A3"), {1, 0, 2}); }), ErrorKind::NotDiagramAutomorphism);
  EXPECT_EQ(kind_of([] { fold(catalog("A3"), {2, 1}); }), ErrorKind::SizeMismatch);
}

TEST(Fold, OrbitShapeCheck) {
  const GCM a = GCM::validate({{2, -1, 0, 0}, {-1, 2, 0, 0}, {0, 0, 2, -1}, {0, 0, -1, 2}});
  EXPECT_NO_THROW(fold(a, {2, 3, 0, 1}));
  EXPECT_NO_THROW(fold(a, {1, 0, 3, 2}));
  EXPECT_EQ(detail::orbit_components(a, {0, 1}), (std::vector<std::vector<Index>>{{0, 1}}));
  // The shape check itself, on orbits that would already fail the linking condition.
  const GCM tri = GCM::validate({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
  EXPECT_EQ(kind_of([&] { detail::orbit_components(tri, {0, 1, 2}); }), ErrorKind::UnsupportedOrbitShape);
  const GCM a1a = GCM::validate({{2, -2}, {-2, 2}});
  EXPECT_EQ(kind_of([&] { detail::orbit_components(a1a, {0, 1}); }), ErrorKind::UnsupportedOrbitShape);
  const GCM cyc = GCM::validate({{2, -1, 0, -1}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {-1, 0, -1, 2}});
  EXPECT_EQ(kind_of([&] { fold(cyc, {1, 2, 3, 0}); }), ErrorKind::LinkingConditionFailed);
}

TEST(PStar, Examples) {
  const FoldingData a3 = fold(catalog("A3"), {2, 1, 0});
  EXPECT_EQ(pstar(a3, Weight({1, 0})), Weight({1, 0, 1}));
  EXPECT_EQ(kind_of([&] { pstar_inverse(a3, Weight({1, 1, 0})); }), ErrorKind::NotSymmetricWeight);
  EXPECT_EQ(pstar_inverse(a3, Weight({3, 4, 3})), Weight({3, 4}));
  const FoldingData a2 = fold(catalog("A2"), {1, 0});
  EXPECT_TRUE(is_symmetric_weight(a2, Weight({2, 2})));
  EXPECT_FALSE(is_symmetric_weight(a2, Weight({2, 1})));
}

TEST(PStar, IsABijectionOntoSymmetricWeights) {
  proptest::Gen gen(3);
  for (const auto& c : kBattery) {
    const FoldingData f = fold(catalog(c.label), c.perm);
    for (int trial = 0; trial < 50; ++trial) {
      const Weight mu = gen.weight(f.folded.size(), -4, 4);
      const Weight lam = pstar(f, mu);
      EXPECT_TRUE(is_symmetric_weight(f, lam));
      EXPECT_EQ(pstar_inverse(f, lam), mu);
    }
  }
}

TEST(Theta, Examples) {
  const FoldingData a2 = fold(catalog("A2"), {1, 0});
  EXPECT_EQ(theta(a2, parse_word("0")), parse_word("0,1,0"));
  const FoldingData a3 = fold(catalog("A3"), {2, 1, 0});
  EXPECT_EQ(theta(a3, parse_word("0")), parse_word("0,2"));
  EXPECT_EQ(theta_table_string(a3), "{0,2}->0,2 ; {1}->1");
  const FoldingData d4 = fold(catalog("D4"), {2, 1, 3, 0});
  EXPECT_EQ(theta(d4, parse_word("0")), parse_word("0,2,3"));
}

TEST(Theta, IntertwinesForShortWords) {
  for (const auto& c : kBattery) {
    const FoldingData f = fold(catalog(c.label), c.perm);
    for (const auto& g : enumerate_group(f.folded)) {
      if (g.word.size() > 4) continue;
      const WeylWord tw = theta(f, g.word);
      const IntMatrix lhs = element_of(f.source, tw).matrix() * f.pstar_matrix;
      const IntMatrix rhs = f.pstar_matrix * g.element.matrix();
      EXPECT_EQ(lhs, rhs) << c.label << " " << to_string(g.word);
    }
  }
}

TEST(Theta, IsABijectionOntoWTilde) {
  for (const auto& c : kBattery) {
    const FoldingData f = fold(catalog(c.label), c.perm);
    const auto hat = enumerate_group(f.folded);
    std::set<WeylElement> images;
    for (const auto& g : hat) {
      const WeylWord tw = theta(f, g.word);
      EXPECT_TRUE(is_in_W_tilde(f.source, tw, f.omega));
      images.insert(element_of(f.source, tw));
      // Length additivity along reduced words.
      EXPECT_TRUE(is_reduced(f.source, tw)) << c.label << " " << to_string(g.word);
      EXPECT_EQ(element_of(f.folded, theta_inverse(f, tw)), g.element);
    }
    EXPECT_EQ(images.size(), hat.size()) << c.label;
    Index tilde = 0;
    for (const auto& g : enumerate_group(f.source))
      if (is_in_W_tilde(f.source, g.word, f.omega)) ++tilde;
    EXPECT_EQ(tilde, hat.size()) << c.label;
  }
}

TEST(Theta, InverseRejectsWordsOutsideWTilde) {
  const FoldingData a2 = fold(catalog("A2"), {1, 0});
  EXPECT_EQ(kind_of([&] { theta_inverse(a2, parse_word("0")); }), ErrorKind::NotInWTilde);
  EXPECT_EQ(theta_inverse(a2, parse_word("1,0,1")), parse_word("0"));
}

TEST(Invariants, CorruptedDataIsDetected) {
  FoldingData f = fold(catalog("A3"), {2, 1, 0});
  EXPECT_NO_THROW(check_folding_invariants(f));
  FoldingData bad_theta = f;
  bad_theta.theta_table[0] = parse_word("0");
  EXPECT_EQ(kind_of([&] { check_folding_invariants(bad_theta); }), ErrorKind::Internal);
  FoldingData bad_p = f;
  bad_p.pstar_matrix(1, 0) = 1;
  EXPECT_EQ(kind_of([&] { check_folding_invariants(bad_p); }), ErrorKind::Internal);
  FoldingData bad_a = f;
  bad_a.folded = GCM::validate({{2, -1}, {-1, 2}});
  EXPECT_EQ(kind_of([&] { check_folding_invariants(bad_a); }), ErrorKind::Internal);
}
