#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "onewtype/chartab.hpp"
#include "onewtype/combinat.hpp"
#include "onewtype/rootsystem.hpp"

namespace onewtype {

struct OrbitLabel {
  std::variant<Partition, std::string> kind;  // Jordan form or Bala-Carter string
  std::optional<Vec> middle_h;

  std::string to_string() const {
    if (const auto* p = std::get_if<Partition>(&kind)) return onewtype::to_string(*p);
    return std::get<std::string>(kind);
  }
};

// Concatenated sl2 strings (p-1, p-3, ..., 1-p), sorted decreasingly.
inline Vec middle_element_type_a(const Partition& lam) {
  if (!is_partition(lam)) throw std::invalid_argument("not a partition: " + to_string(lam));
  Vec h;
  for (int p : lam)
    for (int j = p - 1; j >= 1 - p; j -= 2) h.push_back(Rational(j));
  std::sort(h.begin(), h.end(), std::greater<>());
  return h;
}

inline OrbitLabel type_a_orbit(const Partition& lam) { return {lam, middle_element_type_a(lam)}; }

// chi = h / 2
inline Vec identcc(const OrbitLabel& label) {
  if (!label.middle_h) throw std::invalid_argument("no middle element stored for " + label.to_string());
  return scaled(Rational(1, 2), *label.middle_h);
}

// sigma~(Omega_{W~,1}) = (h, h)
inline bool casimir_matches_hh(const ClassFunction& chi, const OrbitLabel& label, const PinCover& cover) {
  if (!label.middle_h) throw std::invalid_argument("no middle element stored for " + label.to_string());
  Cyclotomic c = casimir_scalar(chi, cover).evaluate(Cyclotomic(1), Cyclotomic(1));
  return c == Cyclotomic(dot(*label.middle_h, *label.middle_h));
}

}  // namespace onewtype
