#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "twining/root_data.hpp"

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

}  // namespace

TEST(Gcm, A2IsValidWithUnitSymmetrizer) {
  const GCM a = GCM::validate({{2, -1}, {-1, 2}});
  EXPECT_EQ(a.symmetrizer(), (std::vector<Coord>{1, 1}));
}

TEST(Gcm, SymmetrizerSolvesTheBalanceEquation) {
  const GCM a = GCM::validate({{2, -1}, {-2, 2}});
  EXPECT_EQ(a.symmetrizer(), (std::vector<Coord>{2, 1}));
  for (const char* label : {"B3", "C3", "G2", "D5", "A4"}) {
    const GCM b = catalog(label);
    const auto& d = b.symmetrizer();
    for (Index i = 0; i < b.size(); ++i)
      for (Index j = 0; j < b.size(); ++j) EXPECT_EQ(d[i] * b(i, j), d[j] * b(j, i)) << label;
  }
}

TEST(Gcm, ZeroPatternMustBeSymmetric) {
  EXPECT_EQ(kind_of([] { GCM::validate({{2, 0}, {-1, 2}}); }), ErrorKind::NotGCM);
  EXPECT_EQ(kind_of([] { GCM::validate({{3, -1}, {-1, 2}}); }), ErrorKind::NotGCM);
  EXPECT_EQ(kind_of([] { GCM::validate({{2, 1}, {1, 2}}); }), ErrorKind::NotGCM);
}

TEST(Gcm, NonSymmetrizableCycleIsRejected) {
  EXPECT_EQ(kind_of([] { GCM::validate({{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}}); }), ErrorKind::NotSymmetrizable);
}

TEST(Gcm, FiniteType) {
  EXPECT_TRUE(catalog("A2").is_finite_type());
  EXPECT_FALSE(GCM::validate({{2, -2}, {-2, 2}}).is_finite_type());
  EXPECT_TRUE(GCM::validate({{2}}).is_finite_type());
  EXPECT_FALSE(GCM::validate({{2, -3}, {-3, 2}}).is_finite_type());
  EXPECT_EQ(catalog("A2").det(), 3);
}

TEST(Catalog, Shapes) {
  EXPECT_EQ(catalog("B2").matrix().str(), "[[2,-1],[-2,2]]");
  EXPECT_EQ(catalog("C2").matrix().str(), "[[2,-2],[-1,2]]");
  EXPECT_EQ(catalog("G2").matrix().str(), "[[2,-3],[-1,2]]");
  const GCM d4 = catalog("D4");
  EXPECT_EQ(d4(1, 0), -1);
  EXPECT_EQ(d4(1, 2), -1);
  EXPECT_EQ(d4(1, 3), -1);
  EXPECT_EQ(d4(0, 2), 0);
  EXPECT_EQ(kind_of([] { catalog("E6"); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { catalog("Q"); }), ErrorKind::InvalidInput);
}

TEST(WeightArithmetic, A2Examples) {
  const GCM a = catalog("A2");
  EXPECT_EQ(simple_root(a, 0), Weight({2, -1}));
  EXPECT_EQ(reflect(a, Weight::rho(2), 0), Weight({-1, 2}));
  EXPECT_FALSE(is_dominant(Weight({-1, 2})));
  EXPECT_EQ(pairing(Weight({3, 5}), 1), 5);
}

TEST(WeightArithmetic, ReflectionIsAnInvolution) {
  for (const char* label : {"A3", "B3", "C3", "D4", "G2"}) {
    const GCM a = catalog(label);
    for (Coord x = -2; x <= 2; ++x)
      for (Index i = 0; i < a.size(); ++i) {
        Weight mu = Weight::zero(a.size());
        for (Index k = 0; k < a.size(); ++k) mu[k] = x + static_cast<Coord>(k);
        EXPECT_EQ(reflect(a, reflect(a, mu, i), i), mu) << label;
        EXPECT_EQ(reflect(a, mu, i)[i], -mu[i]);
      }
  }
}

TEST(WeightArithmetic, RootAndWeightCoordinatesRoundTrip) {
  const GCM a = catalog("B3");
  const RootVector beta({1, 2, 2});
  EXPECT_EQ(to_root(a, to_weight(a, beta)), beta);
  EXPECT_FALSE(to_root(catalog("A2"), Weight({1, 0})).has_value());
}

TEST(WeightArithmetic, FormIsSymmetricAndRespectsPairing) {
  const GCM a = catalog("G2");
  const auto& d = a.symmetrizer();
  const auto roots = positive_roots(a);
  for (const auto& x : roots)
    for (const auto& y : roots) {
      EXPECT_EQ(form(a, x, y), form(a, y, x));
      EXPECT_EQ(form(a, to_weight(a, x), y), form(a, x, y));
    }
  for (Index j = 0; j < 2; ++j) EXPECT_EQ(form(a, Weight({3, 4}), RootVector::simple(2, j)), d[j] * (j ? 4 : 3));
}

TEST(PositiveRoots, Counts) {
  const std::vector<std::pair<const char*, Index>> expected{{"A2", 3}, {"A3", 6}, {"B2", 4}, {"D4", 12}, {"G2", 6}};
  for (const auto& [label, count] : expected) EXPECT_EQ(positive_roots(catalog(label)).size(), count) << label;
}

TEST(PositiveRoots, A2Set) {
  const auto roots = positive_roots(catalog("A2"));
  const std::set<RootVector> got(roots.begin(), roots.end());
  EXPECT_EQ(got, (std::set<RootVector>{RootVector({1, 0}), RootVector({0, 1}), RootVector({1, 1})}));
}

TEST(WeylDimension, Examples) {
  EXPECT_EQ(weyl_dimension(catalog("A2"), Weight::rho(2)), 8);
  EXPECT_EQ(weyl_dimension(catalog("A3"), Weight({0, 1, 0})), 6);
  EXPECT_EQ(weyl_dimension(catalog("D4"), Weight({0, 1, 0, 0})), 28);
  EXPECT_EQ(weyl_dimension(catalog("G2"), Weight({1, 0})), 7);
  EXPECT_EQ(weyl_dimension(catalog("G2"), Weight({0, 1})), 14);
  for (const char* label : {"A1", "A4", "B3", "C4", "D5", "G2"}) {
    const GCM a = catalog(label);
    EXPECT_EQ(weyl_dimension(a, Weight::zero(a.size())), 1) << label;
  }
  const auto rd = positive_roots_and_dim(catalog("A2"), Weight::rho(2));
  EXPECT_EQ(rd.roots.size(), 3u);
  EXPECT_EQ(rd.dimension, 8);
}

TEST(WeylDimension, RequiresDominantWeight) {
  EXPECT_EQ(kind_of([] { weyl_dimension(catalog("A2"), Weight({-1, 2})); }), ErrorKind::NotDominant);
  EXPECT_EQ(kind_of([] { weyl_dimension(catalog("A2"), Weight({1, 2, 3})); }), ErrorKind::SizeMismatch);
}
