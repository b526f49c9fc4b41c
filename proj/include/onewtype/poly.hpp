#pragma once

// Polynomials in the two Hecke parameters k_s (short roots) and k_l (long roots).

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "onewtype/cyclotomic.hpp"
#include "onewtype/rational.hpp"

namespace onewtype {

template <class T>
class ParamPoly {
 public:
  using Exponent = std::pair<int, int>;  // (deg k_s, deg k_l)

  ParamPoly() = default;
  ParamPoly(const T& c) { add_term({0, 0}, c); }  // NOLINT

  static ParamPoly ks() { return monomial(1, 0); }
  static ParamPoly kl() { return monomial(0, 1); }
  static ParamPoly monomial(int a, int b, const T& c = T(1)) {
    ParamPoly p;
    p.add_term({a, b}, c);
    return p;
  }

  const std::map<Exponent, T>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  T coefficient(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? T(0) : it->second;
  }

  template <class S>
  S evaluate(const S& ks_value, const S& kl_value) const {
    S total(0);
    for (const auto& [e, c] : terms_) {
      S term = S(c);
      for (int t = 0; t < e.first; ++t) term *= ks_value;
      for (int t = 0; t < e.second; ++t) term *= kl_value;
      total += term;
    }
    return total;
  }

  ParamPoly& operator+=(const ParamPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  ParamPoly& operator-=(const ParamPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  ParamPoly operator-() const {
    ParamPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return r;
  }
  ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return (a - b).is_zero(); }
  friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      os << coef_string(it->second);
      const auto [a, b] = it->first;
      if (a) os << "*ks" << (a > 1 ? "^" + std::to_string(a) : "");
      if (b) os << "*kl" << (b > 1 ? "^" + std::to_string(b) : "");
    }
    return os.str();
  }

 private:
  static bool coef_zero(const T& c) {
    if constexpr (std::is_same_v<T, Cyclotomic>)
      return c.is_zero();
    else
      return c == 0;
  }
  static std::string coef_string(const T& c) {
    if constexpr (std::is_same_v<T, Cyclotomic>) {
      if (c.is_rational()) return c.rational_value().get_str();
      return "(" + c.to_string() + ")";
    } else {
      return c.get_str();
    }
  }
  void add_term(Exponent e, const T& c) {
    if (coef_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
      return;
    }
    it->second += c;
    if (coef_zero(it->second)) terms_.erase(it);
  }

  std::map<Exponent, T> terms_;
};

using RationalPoly = ParamPoly<Rational>;
using CyclotomicPoly = ParamPoly<Cyclotomic>;

inline CyclotomicPoly to_cyclotomic(const RationalPoly& p) {
  CyclotomicPoly r;
  for (const auto& [e, c] : p.terms()) r += CyclotomicPoly::monomial(e.first, e.second, Cyclotomic(c));
  return r;
}

// Parse linear forms such as "kl", "-2kl+ks", "3/2*ks - kl", "0".
inline RationalPoly parse_linear_form(const std::string& text) {
  RationalPoly out;
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '*' && ch != '_') s.push_back(ch);
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -sign;
      ++pos;
    }
    std::size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
    Rational coef = (pos > start) ? parse_rational(s.substr(start, pos - start)) : Rational(1);
    coef *= sign;
    if (s.compare(pos, 2, "ks") == 0) {
      out += RationalPoly::monomial(1, 0, coef);
      pos += 2;
    } else if (s.compare(pos, 2, "kl") == 0) {
      out += RationalPoly::monomial(0, 1, coef);
      pos += 2;
    } else {
      out += RationalPoly(coef);
    }
  }
  return out;
}

}  // namespace onewtype
