#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <fstream>
#include <sstream>
#include <string>

#include "onewtype/chartab.hpp"
#include "onewtype/group.hpp"

namespace onewtype {

// FNV-1a over the order, the generator count and the right-multiplication table.
inline std::uint64_t group_hash(const FiniteGroup& G) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(G.size());
  mix(static_cast<std::uint64_t>(G.ngens()));
  for (std::size_t x = 0; x < G.size(); ++x)
    for (int g = 0; g < G.ngens(); ++g) mix(G.right(static_cast<FiniteGroup::Index>(x), g));
  return h;
}

inline std::string cache_directory() {
  const char* env = std::getenv("ONEWTYPE_CACHE");
  return env ? env : "";
}

namespace detail {

inline bool plausible_table(const CharacterTable& T) {
  if (T.irreps.size() != T.num_classes()) return false;
  Rational total = 0;
  for (const auto& chi : T.irreps) {
    if (chi.size() != T.num_classes() || !chi[0].is_rational()) return false;
    total += chi[0].rational_value() * chi[0].rational_value();
    if (T.inner(chi, chi) != Cyclotomic(1)) return false;
  }
  return total == Rational(static_cast<long>(T.order));
}

}  // namespace detail

inline void save_character_table(const CharacterTable& T, const std::string& path) {
  std::ofstream out(path);
  out << "onewtype-chartab\t" << T.num_classes() << "\n";
  for (const auto& chi : T.irreps) {
    for (std::size_t c = 0; c < chi.size(); ++c) out << (c ? "\t" : "") << chi[c].to_string();
    out << "\n";
  }
}

inline std::optional<CharacterTable> load_character_table(const FiniteGroup& G, const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  CharacterTable T = class_data(G);
  std::string line;
  if (!std::getline(in, line) || line != "onewtype-chartab\t" + std::to_string(T.num_classes())) return std::nullopt;
  try {
    while (std::getline(in, line)) {
      ClassFunction chi;
      std::istringstream is(line);
      std::string cell;
      while (std::getline(is, cell, '\t')) chi.push_back(Cyclotomic::parse(cell));
      T.irreps.push_back(chi);
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (!detail::plausible_table(T)) return std::nullopt;
  return T;
}

// Dixon-Schneider table, reloaded from $ONEWTYPE_CACHE when a matching file exists.
inline CharacterTable cached_character_table(const FiniteGroup& G, std::size_t gate = kDefaultGroupGate) {
  const std::string dir = cache_directory();
  if (dir.empty()) return dixon_schneider(G, gate);
  std::ostringstream name;
  name << std::hex << group_hash(G) << ".tsv";
  const auto path = (std::filesystem::path(dir) / name.str()).string();
  if (auto T = load_character_table(G, path)) return *T;
  auto T = dixon_schneider(G, gate);
  std::filesystem::create_directories(dir);
  save_character_table(T, path);
  return T;
}

}  // namespace onewtype
