#include <gtest/gtest.h>

#include "onewtype/chartab.hpp"

using namespace onewtype;

static void expect_orthogonal(const CharacterTable& T) {
  long sum = 0;
  for (std::size_t i = 0; i < T.irreps.size(); ++i) {
    sum += T.degree(i) * T.degree(i);
    for (std::size_t j = 0; j < T.irreps.size(); ++j)
      EXPECT_EQ(T.inner(T.irreps[i], T.irreps[j]), Cyclotomic(i == j ? 1 : 0));
  }
  EXPECT_EQ(static_cast<std::size_t>(sum), T.order);
  // column orthogonality
  for (std::size_t k = 0; k < T.num_classes(); ++k)
    for (std::size_t l = 0; l < T.num_classes(); ++l) {
      Cyclotomic s;
      for (const auto& chi : T.irreps) s += chi[k] * chi[l].conj();
      Cyclotomic want = k == l ? Cyclotomic(static_cast<long>(T.order / T.class_sizes[k])) : Cyclotomic(0);
      EXPECT_EQ(s, want);
    }
}

static std::vector<long> degrees(const CharacterTable& T) {
  std::vector<long> d;
  for (std::size_t i = 0; i < T.irreps.size(); ++i) d.push_back(T.degree(i));
  return d;
}

TEST(DixonSchneider, SymmetricGroupS3) {
  WeylGroup W(build_root_system("A2"));
  auto T = dixon_schneider(W.group());
  EXPECT_EQ(degrees(T), (std::vector<long>{1, 1, 2}));
  expect_orthogonal(T);
}

TEST(DixonSchneider, WeylGroupsF4G2) {
  WeylGroup g2(build_root_system("G2"));
  auto T = dixon_schneider(g2.group());
  EXPECT_EQ(degrees(T), (std::vector<long>{1, 1, 1, 1, 2, 2}));
  expect_orthogonal(T);
  WeylGroup f4(build_root_system("F4"));
  auto F = dixon_schneider(f4.group());
  EXPECT_EQ(F.irreps.size(), 25u);
  expect_orthogonal(F);
  for (const auto& chi : F.irreps)
    for (const auto& v : chi) EXPECT_TRUE(v.is_rational());
}

static std::vector<long> genuine_degrees(const CharacterTable& T, const PinCover& cover) {
  std::vector<long> d;
  for (std::size_t i = 0; i < T.irreps.size(); ++i)
    if (is_genuine(T.irreps[i], cover)) d.push_back(T.degree(i));
  return d;
}

TEST(DixonSchneider, PinCovers) {
  WeylGroup g2(build_root_system("G2"));
  PinCover cg(g2);
  auto T = dixon_schneider(cg.group());
  expect_orthogonal(T);
  EXPECT_EQ(genuine_degrees(T, cg), (std::vector<long>{2, 2, 2}));
  WeylGroup f4(build_root_system("F4"));
  PinCover cf(f4);
  auto F = dixon_schneider(cf.group());
  expect_orthogonal(F);
  EXPECT_EQ(genuine_degrees(F, cf), (std::vector<long>{4, 4, 8, 8, 8, 8, 12, 12, 24}));
  // the spin module is an irreducible genuine character
  auto S = spin_class_function(cf, SpinVariant::unique);
  EXPECT_NO_THROW(F.find(S));
  EXPECT_TRUE(is_genuine(S, cf));
}

TEST(DixonSchneider, InnerProducts) {
  WeylGroup W(build_root_system("B3"));
  auto T = dixon_schneider(W.group());
  expect_orthogonal(T);
  const auto& triv = T.irreps[0];
  ClassFunction refl;
  for (const auto& c : W.group().classes()) refl.push_back(Cyclotomic(W.ambient_matrix(c.rep).trace()));
  EXPECT_EQ(T.multiplicity(refl, refl), 1);
  EXPECT_EQ(T.multiplicity(triv, refl), 0);
}

TEST(Casimir, RankOneAndZeroParameter) {
  WeylGroup W(build_root_system("A1"));
  PinCover cover(W);
  auto T = dixon_schneider(cover.group());
  for (const auto& chi : T.irreps) {
    if (!is_genuine(chi, cover)) continue;
    auto c = casimir_scalar(chi, cover);
    EXPECT_EQ(c.evaluate(Cyclotomic(1), Cyclotomic(1)), Cyclotomic(2));
    EXPECT_TRUE(c.evaluate(Cyclotomic(0), Cyclotomic(0)).is_zero());
  }
}

TEST(Casimir, CentralInGroupAlgebra) {
  // the coefficient of the expanded square is constant on classes of the cover
  WeylGroup W(build_root_system("G2"));
  PinCover cover(W);
  const auto& G = cover.group();
  const auto& rs = W.roots();
  std::vector<Cyclotomic> coef(G.size());
  for (std::size_t a = 0; a < rs.num_positive(); ++a)
    for (std::size_t b = 0; b < rs.num_positive(); ++b) {
      auto x = G.mul(cover.times_z(cover.reflection_lift(a)), cover.reflection_lift(b));
      coef[x] += Cyclotomic(4) * Cyclotomic::sqrt(rs.norm2[a] * rs.norm2[b]).inverse() *
                 Cyclotomic(rs.is_long[a] == rs.is_long[b] ? 1 : 7);
    }
  for (FiniteGroup::Index x = 0; x < G.size(); ++x)
    for (int g = 0; g < G.ngens(); ++g) EXPECT_EQ(coef[x], coef[G.conj_by_gen(x, g)]);
}
