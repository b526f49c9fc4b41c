#include <gtest/gtest.h>

#include "onewtype/chartab.hpp"
#include "onewtype/combinat.hpp"

using namespace onewtype;

TEST(Partitions, HookPartition) {
  EXPECT_EQ(hook_partition(2, 2), (Partition{3, 1}));
  EXPECT_EQ(hook_partition(1, 5), (Partition{5}));
  EXPECT_EQ(hook_partition(3, 2), (Partition{4, 2}));
  for (int d = 1; d <= 6; ++d)
    for (int k = 1; k <= 6; ++k) {
      auto h = hook_partition(d, k);
      EXPECT_TRUE(is_strict(h));
      EXPECT_EQ(size_of(h), d * k);
      EXPECT_EQ(static_cast<int>(h.size()), std::min(d, k));
      EXPECT_EQ(h, hook_partition(k, d));
    }
}

TEST(Partitions, CountsAndTranspose) {
  EXPECT_EQ(partitions(8).size(), 22u);
  EXPECT_EQ(transpose(Partition{3, 1}), (Partition{2, 1, 1}));
  EXPECT_EQ(parse_partition("(2,1,1)"), (Partition{2, 1, 1}));
  EXPECT_THROW(parse_partition("1,2"), std::invalid_argument);
}

TEST(LittlewoodRichardson, Examples) {
  EXPECT_EQ(lr_coefficient({2}, {1}, {1}), 1);
  EXPECT_EQ(lr_coefficient({1, 1}, {1}, {1}), 1);
  EXPECT_EQ(lr_coefficient({2, 1}, {1}, {1, 1}), 1);
  EXPECT_EQ(lr_coefficient({3, 2, 1}, {2, 1}, {2, 1}), 2);
  EXPECT_THROW(lr_coefficient({2}, {1}, {2}), std::invalid_argument);
}

// z_mu = prod_i i^{m_i} m_i!
static Rational centralizer(const Partition& mu) {
  std::map<int, int> m;
  for (int x : mu) ++m[x];
  Rational z = 1;
  for (auto [i, c] : m)
    for (int t = 1; t <= c; ++t) z *= i * t;
  return z;
}

TEST(LittlewoodRichardson, AgreesWithInducedCharacters) {
  for (int n = 2; n <= 8; ++n)
    for (int a = 1; a < n; ++a)
      for (const auto& mu : partitions(a))
        for (const auto& nu : partitions(n - a)) {
          // oracle: <Res chi_lambda, chi_mu x chi_nu> over S_a x S_b
          for (const auto& lam : partitions(n)) {
            Rational s = 0;
            for (const auto& al : partitions(a))
              for (const auto& be : partitions(n - a)) {
                Partition joint = al;
                joint.insert(joint.end(), be.begin(), be.end());
                s += Rational(sn_character(lam, normalized(joint)) * sn_character(mu, al) * sn_character(nu, be)) /
                     (centralizer(al) * centralizer(be));
              }
            long c = lr_coefficient(lam, mu, nu);
            EXPECT_EQ(Rational(c), s);
            if (n <= 6) {
              EXPECT_EQ(c, lr_coefficient(lam, nu, mu));
            }
          }
        }
}

static Partition cycle_type_of_permutation(const Matrix<Rational>& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<bool> seen(n, false);
  Partition out;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j];) {
      seen[j] = true;
      ++len;
      for (int k = 0; k < n; ++k)
        if (m(k, j) != 0) {
          j = k;
          break;
        }
    }
    out.push_back(len);
  }
  return normalized(out);
}

TEST(SymmetricGroup, MurnaghanNakayamaMatchesDixonSchneider) {
  for (auto name : {"A3", "A4", "A5"}) {
    WeylGroup W(build_root_system(name));
    auto T = dixon_schneider(W.group());
    int n = W.roots().rank + 1;
    std::vector<Partition> types;
    for (const auto& c : W.group().classes()) types.push_back(cycle_type_of_permutation(W.ambient_matrix(c.rep)));
    auto parts = partitions(n);
    ASSERT_EQ(parts.size(), T.irreps.size());
    for (const auto& lam : parts) {
      ClassFunction chi;
      for (const auto& t : types) chi.push_back(Cyclotomic(sn_character(lam, t)));
      EXPECT_NO_THROW(T.find(chi)) << to_string(lam);
    }
  }
}

static SignedCycleType signed_cycle_type(const Matrix<Rational>& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<bool> seen(n, false);
  SignedCycleType t;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, sign = 1;
    for (int j = i; !seen[j];) {
      seen[j] = true;
      ++len;
      for (int k = 0; k < n; ++k)
        if (m(k, j) != 0) {
          if (m(k, j) < 0) sign = -sign;
          j = k;
          break;
        }
    }
    (sign > 0 ? t.positive : t.negative).push_back(len);
  }
  t.positive = normalized(t.positive);
  t.negative = normalized(t.negative);
  return t;
}

TEST(Hyperoctahedral, CharactersMatchDixonSchneiderAndConventions) {
  for (int n = 2; n <= 4; ++n) {
    WeylGroup W(build_root_system("B" + std::to_string(n)));
    auto T = dixon_schneider(W.group());
    std::vector<SignedCycleType> types;
    for (const auto& c : W.group().classes()) types.push_back(signed_cycle_type(W.ambient_matrix(c.rep)));
    auto bips = bipartitions(n);
    ASSERT_EQ(bips.size(), T.irreps.size());
    auto chi_of = [&](const Bipartition& b) {
      ClassFunction chi;
      for (const auto& t : types) chi.push_back(Cyclotomic(bn_character(b, t)));
      return chi;
    };
    for (const auto& b : bips) EXPECT_NO_THROW(T.find(chi_of(b))) << to_string(b);
    ClassFunction triv, refl, sgn;
    for (const auto& c : W.group().classes()) {
      auto m = W.ambient_matrix(c.rep);
      triv.push_back(Cyclotomic(1));
      refl.push_back(Cyclotomic(m.trace()));
      sgn.push_back(Cyclotomic(W.group().length(c.rep) % 2 ? -1 : 1));
    }
    EXPECT_EQ(chi_of({{n}, {}}), triv);
    EXPECT_EQ(chi_of({{n - 1}, {1}}), refl);
    EXPECT_EQ(chi_of({{}, Partition(n, 1)}), sgn);
    // tensoring with the reflection representation moves one box
    for (const auto& b : bips) {
      auto prod = CharacterTable::product(chi_of(b), refl);
      auto moved = refl_tensor_b(b);
      for (const auto& c : bips) {
        long want = std::count(moved.begin(), moved.end(), c);
        EXPECT_EQ(T.multiplicity(prod, chi_of(c)), want) << to_string(b) << " " << to_string(c);
      }
    }
  }
}

TEST(Hyperoctahedral, ReflTensorExamples) {
  auto moves = refl_tensor_b({{1}, {1}});
  std::vector<Bipartition> want{{{}, {1, 1}}, {{}, {2}}, {{1, 1}, {}}, {{2}, {}}};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(moves, want);
  auto triv = refl_tensor_b({{4}, {}});
  EXPECT_EQ(triv, (std::vector<Bipartition>{{{3}, {1}}}));
  for (const auto& b : bipartitions(4)) {
    auto m = refl_tensor_b(b);
    EXPECT_EQ(std::count(m.begin(), m.end(), b), 0);
  }
}

TEST(RectangularLR, Examples) {
  EXPECT_EQ(rectangular_lr_partitions(2, 1, 1, 1), (std::vector<Partition>{{3}, {2, 1}}));
  EXPECT_EQ(rectangular_lr_partitions(1, 1, 1, 1), (std::vector<Partition>{{2}, {1, 1}}));
}

TEST(RectangularLR, MatchesGeneralEnumeratorUpToTen) {
  for (int n = 2; n <= 10; ++n)
    for (int a = 1; a < n; ++a)
      for (int d1 = 1; d1 <= a; ++d1) {
        if (a % d1) continue;
        for (int d2 = 1; d2 <= n - a; ++d2) {
          if ((n - a) % d2) continue;
          int m1 = a / d1, m2 = (n - a) / d2;
          Partition L = rectangle(d1, m1), Rt = transpose(rectangle(d2, m2));
          std::vector<Partition> oracle;
          for (const auto& lam : partitions(n)) {
            long c = lr_coefficient(lam, L, Rt);
            EXPECT_LE(c, 1);
            if (c) oracle.push_back(lam);
          }
          auto got = rectangular_lr_partitions(d1, m1, d2, m2);
          std::sort(got.begin(), got.end());
          std::sort(oracle.begin(), oracle.end());
          EXPECT_EQ(got, oracle) << d1 << "x" << m1 << " " << d2 << "x" << m2;
          EXPECT_TRUE(std::count(got.begin(), got.end(), glue_vertical(L, Rt)));
          EXPECT_TRUE(std::count(got.begin(), got.end(), glue_horizontal(L, Rt)));
        }
      }
}

TEST(CentralCharacterTableau, Examples) {
  EXPECT_EQ(specialize(central_character_tableau({4}), 1, 1), (std::vector<Rational>{1, 2, 3, 4}));
  auto col = central_character_tableau({1, 1, 1});
  EXPECT_EQ(col[2], RationalPoly::ks() - RationalPoly(Rational(2)) * RationalPoly::kl());
  auto v = central_character_tableau({2, 1});
  EXPECT_EQ(v, (CentralVector{RationalPoly::ks(), RationalPoly::ks() + RationalPoly::kl(),
                              RationalPoly::ks() - RationalPoly::kl()}));
}

TEST(TypeB, CandidatesAndT2) {
  // delta = 0: equal rectangles always admissible
  for (int d = 1; d <= 2; ++d)
    for (int m = 1; m <= 2; ++m) EXPECT_TRUE(t2_admissible({d, m, d, m}, 0, 1));
  auto c = type_b_candidates(2, 0, 1);
  EXPECT_TRUE(std::count(c.begin(), c.end(), Bipartition{{1}, {1}}));
  auto c1 = type_b_candidates(2, 1, 1);  // delta = 2
  EXPECT_FALSE(std::count(c1.begin(), c1.end(), Bipartition{{1}, {1}}));
}

TEST(TypeB, T2OrbitCriterion) {
  // vertical and horizontal gluings give one orbit iff (T2) holds; under (T2) all
  // partitions of the rectangular rule give one orbit
  const Rational kl = 2;
  for (int ks = -4; ks <= 6; ++ks)
    for (int d1 = 1; d1 <= 3; ++d1)
      for (int m1 = 1; m1 <= 3; ++m1)
        for (int d2 = 1; d2 <= 3; ++d2)
          for (int m2 = 1; m2 <= 3; ++m2) {
            Partition L = rectangle(d1, m1), Rt = transpose(rectangle(d2, m2));
            auto key = [&](const Partition& p) { return bn_orbit_key(specialize(central_character_tableau(p), ks, kl)); };
            bool t2 = t2_admissible({d1, m1, d2, m2}, ks, kl);
            EXPECT_EQ(key(glue_vertical(L, Rt)) == key(glue_horizontal(L, Rt)), t2);
            if (t2) {
              for (const auto& lam : rectangular_lr_partitions(d1, m1, d2, m2)) EXPECT_EQ(key(lam), key(glue_vertical(L, Rt)));
            }
          }
}

TEST(SchurDegrees, SumOfSquares) {
  // sum over strict partitions, associates counted twice
  for (int n = 2; n <= 9; ++n) {
    Integer total = 0, fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    for (const auto& p : partitions(n)) {
      if (!is_strict(p)) continue;
      Integer g = schur_spin_degree(p);
      total += g * g * (is_odd_strict(p) ? 2 : 1);
    }
    EXPECT_EQ(total, fact) << n;
  }
}
