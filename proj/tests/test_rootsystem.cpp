#include <gtest/gtest.h>

#include "onewtype/rootsystem.hpp"

using namespace onewtype;

TEST(RootSystem, PositiveRootCounts) {
  EXPECT_EQ(build_root_system("G2").num_positive(), 6u);
  auto f4 = build_root_system("F4");
  // 48 roots: 24 long and 24 short, half of each positive
  EXPECT_EQ(2 * f4.num_positive(), 48u);
  EXPECT_EQ(2 * std::count(f4.is_long.begin(), f4.is_long.end(), true), 24);
  EXPECT_EQ(build_root_system("E6").num_positive(), 36u);
  EXPECT_EQ(build_root_system("E7").num_positive(), 63u);
  EXPECT_EQ(build_root_system("E8").num_positive(), 120u);
  EXPECT_EQ(build_root_system("B4").num_positive(), 16u);
  EXPECT_EQ(build_root_system("D5").num_positive(), 20u);
  EXPECT_EQ(build_root_system("A1").num_positive(), 1u);
  EXPECT_THROW(build_root_system("E9"), std::invalid_argument);
  EXPECT_THROW(build_root_system("Q3"), std::invalid_argument);
}

TEST(RootSystem, CrystallographicAndClosed) {
  for (auto name : {"A3", "B3", "C3", "D4", "G2", "F4", "E6", "E7", "E8"}) {
    auto rs = build_root_system(name);
    for (std::size_t a = 0; a < rs.num_positive(); ++a)
      for (std::size_t b = 0; b < rs.num_positive(); ++b) {
        Rational c = 2 * dot(rs.positive_ambient[a], rs.positive_ambient[b]) / rs.norm2[a];
        EXPECT_TRUE(is_integer(c));
        Vec r = rs.reflect(rs.positive_ambient[b], a);
        bool found = false;
        for (const auto& x : rs.positive_ambient)
          if (x == r || x == scaled(Rational(-1), r)) found = true;
        EXPECT_TRUE(found) << name;
        // 2a is never a root
        EXPECT_NE(scaled(Rational(2), rs.positive_ambient[a]), rs.positive_ambient[b]);
      }
  }
}

TEST(RootSystem, SimpleRootNumberingLongRoots) {
  auto g2 = build_root_system("G2");
  EXPECT_TRUE(g2.simple_is_long(0));
  EXPECT_FALSE(g2.simple_is_long(1));
  auto f4 = build_root_system("F4");
  EXPECT_TRUE(f4.simple_is_long(0));
  EXPECT_TRUE(f4.simple_is_long(1));
  EXPECT_FALSE(f4.simple_is_long(2));
  EXPECT_FALSE(f4.simple_is_long(3));
}

TEST(WeylGroup, Orders) {
  EXPECT_EQ(WeylGroup(build_root_system("G2")).size(), 12u);
  EXPECT_EQ(WeylGroup(build_root_system("F4")).size(), 1152u);
  EXPECT_EQ(WeylGroup(build_root_system("B3")).size(), 48u);
  EXPECT_EQ(WeylGroup(build_root_system("A4")).size(), 120u);
  EXPECT_EQ(WeylGroup(build_root_system("D4")).size(), 192u);
  EXPECT_EQ(WeylGroup(build_root_system("E6")).size(), 51840u);
  EXPECT_THROW(WeylGroup(build_root_system("E7")), std::length_error);
}

TEST(WeylGroup, ClassCounts) {
  EXPECT_EQ(WeylGroup(build_root_system("G2")).group().num_classes(), 6u);
  EXPECT_EQ(WeylGroup(build_root_system("F4")).group().num_classes(), 25u);
  WeylGroup a2(build_root_system("A2"));
  const auto& cls = a2.group().classes();
  ASSERT_EQ(cls.size(), 3u);
  std::vector<std::size_t> sizes;
  for (const auto& c : cls) sizes.push_back(c.size);
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 3, 2}));
  EXPECT_EQ(cls[0].rep, 0u);
}

TEST(WeylGroup, CoxeterRelationsAndInvariantForm) {
  for (auto name : {"A3", "B3", "G2", "F4"}) {
    WeylGroup W(build_root_system(name));
    const auto& rs = W.roots();
    const auto& G = W.group();
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j) {
        auto x = G.right(G.generator(i), j);
        EXPECT_EQ(G.element_order(x), rs.coxeter_m(i, j));
      }
    Matrix<Rational> I = Matrix<Rational>::identity(rs.dim);
    for (std::size_t x = 0; x < W.size(); x += 37) {
      auto m = W.ambient_matrix(static_cast<FiniteGroup::Index>(x));
      EXPECT_EQ(m.transpose() * m, I);
    }
  }
}

TEST(WeylGroup, LongestElement) {
  for (auto name : {"B3", "C4", "D4", "F4", "G2", "E7", "E8"}) EXPECT_TRUE(WeylGroup::w0_central(build_root_system(name))) << name;
  for (auto name : {"A2", "A3", "D5", "E6"}) EXPECT_FALSE(WeylGroup::w0_central(build_root_system(name))) << name;
  std::vector<int> w;
  WeylGroup::longest_coords(build_root_system("A2"), &w);
  EXPECT_EQ(w, (std::vector<int>{0, 1, 0}));
  // E6: -w0 permutes simple roots nontrivially
  auto e6 = build_root_system("E6");
  IVec m = WeylGroup::longest_coords(e6);
  bool nontrivial = false;
  for (int j = 0; j < 6; ++j) {
    int hits = 0, at = -1;
    for (int i = 0; i < 6; ++i)
      if (m[i * 6 + j] != 0) {
        ++hits;
        at = i;
        EXPECT_EQ(m[i * 6 + j], -1);
      }
    EXPECT_EQ(hits, 1);
    if (at != j) nontrivial = true;
  }
  EXPECT_TRUE(nontrivial);
  WeylGroup W(build_root_system("B3"));
  auto w0 = W.longest_element();
  EXPECT_EQ(W.group().mul(w0, w0), 0u);
  EXPECT_EQ(W.ambient_matrix(w0), -Matrix<Rational>::identity(3));
}

TEST(WeylGroup, ReflectionsAreInvolutionsMatchingFormula) {
  WeylGroup W(build_root_system("F4"));
  const auto& rs = W.roots();
  for (std::size_t a = 0; a < rs.num_positive(); ++a) {
    auto x = W.reflection(a);
    EXPECT_EQ(W.group().element_order(x), 2);
    EXPECT_EQ(W.ambient_matrix(x), rs.ambient_reflection(a));
  }
}
