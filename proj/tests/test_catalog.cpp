#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "onewtype/catalog.hpp"

using namespace onewtype;

TEST(Catalog, ParseConstituents) {
  auto c = parse_constituents("112_ss+2*560_s+448_s");
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[1].first, "560_s");
  EXPECT_EQ(c[1].second, 2);
  EXPECT_EQ(label_dimension("448_s"), 448);
  EXPECT_EQ(w_label_dimension("(84,12)"), 84);
  EXPECT_THROW(parse_constituents("a_s"), std::invalid_argument);
}

TEST(Catalog, LoadTablesDimensionIdentity) {
  auto rows = load_tables();
  std::map<std::string, int> count;
  for (const auto& r : rows) ++count[r.cartan_type];
  EXPECT_EQ(count["G2"], 5);
  EXPECT_EQ(count["F4"], 14);
  EXPECT_EQ(count["E6"], 7);
  EXPECT_EQ(count["E7"], 18);
  EXPECT_EQ(count["E8"], 17);
  bool found = false;
  for (const auto& r : rows)
    if (r.cartan_type == "E8" && r.sigma == "(420,20)") {
      long total = 0;
      for (const auto& [l, m] : r.constituents) total += m * label_dimension(l);
      EXPECT_EQ(total, 6720);
      found = true;
    }
  EXPECT_TRUE(found);
}

TEST(Catalog, CorruptedTableRejected) {
  auto dir = std::filesystem::temp_directory_path() / "onewtype_bad_tables";
  std::filesystem::create_directories(dir / "tables");
  std::ofstream(dir / "tables" / "G2.tsv") << "1\t(1,0)\t2_s+2_ss\tG2\tkl;ks\n";
  EXPECT_THROW(load_table("G2", dir.string()), std::runtime_error);
  auto rep = verify_dims_only("G2", dir.string());
  EXPECT_FALSE(rep.pass());
}

TEST(Catalog, NuPolynomialTrivialRow) {
  auto rs = build_root_system("G2");
  auto nu = nu_value(rs, {parse_linear_form("kl"), parse_linear_form("ks")}, {1, 1});
  Vec rho(rs.dim);
  for (std::size_t a = 0; a < rs.num_positive(); ++a) rho = axpy(Rational(1, 2), rs.coroot(a), rho);
  EXPECT_EQ(rs.dominant(nu), rs.dominant(rho));
}

TEST(Catalog, G2Full) {
  LabelledGroup L("G2");
  auto rep = verify_full(L, "G2");
  for (const auto& r : rep.rows)
    EXPECT_TRUE(r.pass) << r.sigma << ": " << (r.notes.empty() ? "" : r.notes.back());
  EXPECT_EQ(rep.groups_passed(), 3u);
}

TEST(Catalog, F4Full) {
  LabelledGroup L("F4");
  auto rep = verify_full(L, "F4");
  for (const auto& r : rep.rows)
    EXPECT_TRUE(r.pass) << r.sigma << ": " << (r.notes.empty() ? "" : r.notes.back());
  EXPECT_EQ(rep.groups_passed(), 8u);
}

TEST(Catalog, F4WedgeSquareDoesNotExtend) {
  LabelledGroup L("F4");
  auto wedge = split_irrep(L.weyl(), L.w_character("(6,6)''"), "(6,6)''");
  auto other = split_irrep(L.weyl(), L.w_character("(6,6)'"), "(6,6)'");
  EXPECT_FALSE(commutator_test(wedge, {1, 1}));
  EXPECT_TRUE(commutator_test(other, {1, 1}));
}

TEST(Catalog, E6Decompositions) {
  LabelledGroup L("E6");
  auto rep = verify_full(L, "E6");
  for (const auto& r : rep.rows)
    EXPECT_TRUE(r.pass) << r.sigma << ": " << (r.notes.empty() ? "" : r.notes.back());
}

TEST(Catalog, E7E8DimsOnly) {
  for (auto t : {"E7", "E8"}) {
    auto rep = verify_dims_only(t);
    EXPECT_TRUE(rep.pass()) << t;
  }
}

TEST(Catalog, CharacterTableCacheRoundTrip) {
  auto dir = std::filesystem::temp_directory_path() / "onewtype_cache_test";
  std::filesystem::remove_all(dir);
  ::setenv("ONEWTYPE_CACHE", dir.c_str(), 1);
  WeylGroup W(build_root_system("G2"));
  PinCover cover(W);
  auto fresh = dixon_schneider(cover.group());
  auto first = cached_character_table(cover.group());
  auto second = cached_character_table(cover.group());
  EXPECT_EQ(first.irreps, fresh.irreps);
  EXPECT_EQ(second.irreps, fresh.irreps);
  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    ++files;
    std::ofstream(e.path()) << "onewtype-chartab\t1\n1@1\n";
  }
  EXPECT_EQ(files, 1u);
  EXPECT_EQ(cached_character_table(cover.group()).irreps, fresh.irreps);
  ::unsetenv("ONEWTYPE_CACHE");
  std::filesystem::remove_all(dir);
}
