#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A value is stored as coordinates in the power basis 1, z, ..., z^(phi(N)-1)
// of Q(zeta_N), reduced modulo the N-th cyclotomic polynomial. Conductors are
// kept off 2 mod 4 (Q(zeta_2m) = Q(zeta_m) for odd m), so the stored form of a
// value at a given conductor is unique.

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "onewtype/rational.hpp"

namespace onewtype {

namespace detail {

struct CyclotomicField {
  long conductor = 1;
  long degree = 1;           // phi(conductor)
  std::vector<long> phi;     // monic cyclotomic polynomial, phi[degree] == 1
};

inline std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long>& den) {
  // den monic
  const std::size_t dn = den.size() - 1;
  if (num.size() <= dn) return {1};
  std::vector<long> q(num.size() - dn, 0);
  for (std::size_t k = num.size() - 1; k + 1 > dn; --k) {
    long c = num[k];
    q[k - dn] = c;
    if (c != 0)
      for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
    if (k == dn) break;
  }
  return q;
}

inline std::vector<long> cyclotomic_polynomial(long n) {
  // x^n - 1 divided by phi_d for all proper divisors d of n
  std::vector<long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) p = poly_divide_exact(p, cyclotomic_polynomial(d));
  return p;
}

inline const CyclotomicField& field(long n) {
  static std::mutex mu;
  static std::map<long, std::unique_ptr<CyclotomicField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  auto f = std::make_unique<CyclotomicField>();
  f->conductor = n;
  f->phi = cyclotomic_polynomial(n);
  f->degree = static_cast<long>(f->phi.size()) - 1;
  auto& ref = *f;
  cache.emplace(n, std::move(f));
  return ref;
}

inline long normalize_conductor(long n) { return (n % 4 == 2) ? n / 2 : n; }

inline int legendre(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  long r = 1, base = a, e = (p - 1) / 2;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

}  // namespace detail

class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coords_{Rational(0)} {}
  Cyclotomic(long v) : conductor_(1), coords_{Rational(v)} {}  // NOLINT
  Cyclotomic(const Rational& v) : conductor_(1), coords_{v} {}  // NOLINT

  // zeta_n^k with zeta_n = exp(2 pi i / n)
  static Cyclotomic zeta(long n, long k = 1) {
    if (n <= 0) throw std::invalid_argument("zeta: conductor must be positive");
    k %= n;
    if (k < 0) k += n;
    if (n % 4 == 2) {
      // zeta_{2m} = -zeta_m^{(m+1)/2} for odd m
      long m = n / 2;
      Cyclotomic z = zeta(m, (k * ((m + 1) / 2)) % m);
      return (k % 2 == 1) ? -z : z;
    }
    std::vector<Rational> raw(static_cast<std::size_t>(n), Rational(0));
    raw[static_cast<std::size_t>(k)] = 1;
    return from_powers(n, std::move(raw));
  }

  static Cyclotomic i() { return zeta(4); }

  // Principal square root of a rational: nonnegative real, or i times one.
  static Cyclotomic sqrt(const Rational& q) {
    if (q < 0) return i() * sqrt(Rational(-q));
    if (q == 0) return Cyclotomic(0);
    Integer ab = q.get_num() * q.get_den();
    if (!ab.fits_slong_p()) throw std::overflow_error("sqrt: radicand too large");
    long m = ab.get_si();
    long square = 1, free = 1;
    for (auto [p, e] : factorize(m)) {
      for (int t = 0; t < e / 2; ++t) square *= p;
      if (e % 2) free *= p;
    }
    Cyclotomic r(Rational(square, 1) / Rational(q.get_den()));
    for (auto [p, e] : factorize(free)) r *= sqrt_prime(p);
    return r;
  }

  static Cyclotomic sqrt2() { return sqrt(Rational(2)); }
  static Cyclotomic sqrt3() { return sqrt(Rational(3)); }

  long conductor() const { return conductor_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
  }
  bool is_rational() const {
    return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& c) { return c == 0; });
  }
  Rational rational_value() const {
    if (!is_rational()) throw std::domain_error("cyclotomic value is not rational: " + to_string());
    return coords_[0];
  }

  // Embed into Q(zeta_m); m must be a multiple of the conductor.
  Cyclotomic in_conductor(long m) const {
    m = detail::normalize_conductor(m);
    if (m == conductor_) return *this;
    if (m % conductor_ != 0) throw std::invalid_argument("in_conductor: not a multiple");
    const long step = m / conductor_;
    std::vector<Rational> raw(static_cast<std::size_t>(m), Rational(0));
    for (std::size_t j = 0; j < coords_.size(); ++j)
      raw[static_cast<std::size_t>(j * step)] = coords_[j];
    return from_powers(m, std::move(raw));
  }

  // Galois automorphism zeta -> zeta^a, gcd(a, N) = 1.
  Cyclotomic galois(long a) const {
    const long n = conductor_;
    if (n == 1) return *this;
    a %= n;
    if (a < 0) a += n;
    if (gcd_long(a, n) != 1) throw std::invalid_argument("galois: exponent not a unit");
    std::vector<Rational> raw(static_cast<std::size_t>(n), Rational(0));
    for (std::size_t j = 0; j < coords_.size(); ++j)
      raw[static_cast<std::size_t>((static_cast<long>(j) * a) % n)] += coords_[j];
    return from_powers(n, std::move(raw));
  }

  Cyclotomic conj() const { return galois(conductor_ - 1); }

  // Smallest conductor whose field contains this value.
  Cyclotomic minimized() const {
    if (is_rational()) return Cyclotomic(coords_[0]);
    const long n = conductor_;
    for (long d = 1; d < n; ++d) {
      if (n % d != 0 || d % 4 == 2) continue;
      bool fixed = true;
      for (long a = 1; a < n && fixed; a += d)
        if (gcd_long(a, n) == 1 && a != 1 && !(galois(a) == *this)) fixed = false;
      if (!fixed) continue;
      return project_to(d);
    }
    return *this;
  }

  Cyclotomic inverse() const {
    if (is_zero()) throw std::domain_error("cyclotomic division by zero");
    if (is_rational()) return Cyclotomic(Rational(1) / coords_[0]);
    Cyclotomic a = minimized();
    const auto& f = detail::field(a.conductor_);
    const std::size_t d = static_cast<std::size_t>(f.degree);
    // columns: a * z^k
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1, Rational(0)));
    for (std::size_t k = 0; k < d; ++k) {
      Cyclotomic col = a * zeta(a.conductor_, static_cast<long>(k));
      for (std::size_t r = 0; r < d; ++r) m[r][k] = col.coords_[r];
    }
    m[0][d] = 1;
    for (std::size_t c = 0; c < d; ++c) {
      std::size_t p = c;
      while (p < d && m[p][c] == 0) ++p;
      if (p == d) throw std::logic_error("cyclotomic inverse: singular multiplication matrix");
      std::swap(m[p], m[c]);
      Rational inv = Rational(1) / m[c][c];
      for (std::size_t j = c; j <= d; ++j) m[c][j] *= inv;
      for (std::size_t r = 0; r < d; ++r) {
        if (r == c || m[r][c] == 0) continue;
        Rational s = m[r][c];
        for (std::size_t j = c; j <= d; ++j) m[r][j] -= s * m[c][j];
      }
    }
    std::vector<Rational> coords(d);
    for (std::size_t r = 0; r < d; ++r) coords[r] = m[r][d];
    return Cyclotomic(a.conductor_, std::move(coords));
  }

  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
  }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    if (o.conductor_ == conductor_) {
      for (std::size_t j = 0; j < coords_.size(); ++j) coords_[j] += o.coords_[j];
      return *this;
    }
    long m = lcm_long(conductor_, o.conductor_);
    *this = in_conductor(m);
    Cyclotomic b = o.in_conductor(m);
    for (std::size_t j = 0; j < coords_.size(); ++j) coords_[j] += b.coords_[j];
    return *this;
  }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this += -o; }

  Cyclotomic& operator*=(const Cyclotomic& o) {
    if (o.conductor_ == 1) {
      for (auto& c : coords_) c *= o.coords_[0];
      return *this;
    }
    if (conductor_ == 1) {
      Rational s = coords_[0];
      *this = o;
      for (auto& c : coords_) c *= s;
      return *this;
    }
    long m = lcm_long(conductor_, o.conductor_);
    Cyclotomic a = in_conductor(m);
    Cyclotomic b = o.in_conductor(m);
    const std::size_t d = a.coords_.size();
    std::vector<Rational> raw(2 * d - 1, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
      if (a.coords_[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j)
        if (b.coords_[j] != 0) raw[i + j] += a.coords_[i] * b.coords_[j];
    }
    *this = from_powers(m, std::move(raw));
    return *this;
  }
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor_ == b.conductor_) return a.coords_ == b.coords_;
    long m = lcm_long(a.conductor_, b.conductor_);
    return a.in_conductor(m).coords_ == b.in_conductor(m).coords_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  std::complex<double> to_complex() const {
    std::complex<double> s = 0;
    for (std::size_t j = 0; j < coords_.size(); ++j) {
      if (coords_[j] == 0) continue;
      double ang = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(conductor_);
      s += coords_[j].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return s;
  }

  // "c0 + c1*z + c3*z^3@N" at the minimal conductor; "0@1" for zero.
  std::string to_string() const {
    Cyclotomic m = minimized();
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < m.coords_.size(); ++j) {
      if (m.coords_[j] == 0) continue;
      if (!first) os << " + ";
      first = false;
      os << m.coords_[j].get_str();
      if (j == 1) os << "*z";
      if (j > 1) os << "*z^" << j;
    }
    if (first) os << "0";
    os << "@" << m.conductor_;
    return os.str();
  }

  static Cyclotomic parse(const std::string& text) {
    auto at = text.rfind('@');
    if (at == std::string::npos) return Cyclotomic(parse_rational(text));
    long n = std::stol(text.substr(at + 1));
    std::string body = text.substr(0, at);
    Cyclotomic r(0);
    std::size_t pos = 0;
    while (pos <= body.size()) {
      std::size_t next = body.find(" + ", pos);
      std::string term = body.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      long k = 0;
      auto star = term.find("*z");
      std::string coef = term.substr(0, star);
      if (star != std::string::npos) {
        k = 1;
        auto caret = term.find('^', star);
        if (caret != std::string::npos) k = std::stol(term.substr(caret + 1));
      }
      r += Cyclotomic(parse_rational(coef)) * zeta(n, k);
      if (next == std::string::npos) break;
      pos = next + 3;
    }
    return r;
  }

  // Total order on canonical (minimized) forms; used only for deterministic sorting.
  friend bool canonical_less(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic x = a.minimized(), y = b.minimized();
    if (x.conductor_ != y.conductor_) return x.conductor_ < y.conductor_;
    for (std::size_t j = 0; j < x.coords_.size(); ++j)
      if (x.coords_[j] != y.coords_[j]) return x.coords_[j] < y.coords_[j];
    return false;
  }

 private:
  Cyclotomic(long n, std::vector<Rational> coords) : conductor_(n), coords_(std::move(coords)) {}

  // Value sum_k raw[k] zeta_n^k with arbitrary length raw (exponents taken as-is).
  static Cyclotomic from_powers(long n, std::vector<Rational> raw) {
    n = detail::normalize_conductor(n);
    const auto& f = detail::field(n);
    const std::size_t d = static_cast<std::size_t>(f.degree);
    if (raw.size() < d) raw.resize(d, Rational(0));
    for (std::size_t k = raw.size() - 1; k >= d; --k) {
      if (raw[k] != 0) {
        Rational c = raw[k];
        for (std::size_t j = 0; j < d; ++j)
          if (f.phi[j] != 0) raw[k - d + j] -= c * f.phi[j];
        raw[k] = 0;
      }
    }
    raw.resize(d);
    return Cyclotomic(n, std::move(raw));
  }

  static Cyclotomic sqrt_prime(long p) {
    if (p == 2) return zeta(8, 1) + zeta(8, 7);
    Cyclotomic g(0);
    for (long a = 1; a < p; ++a) g += Cyclotomic(detail::legendre(a, p)) * zeta(p, a);
    // g^2 = p for p = 1 mod 4, g = i sqrt(p) for p = 3 mod 4
    return (p % 4 == 1) ? g : -i() * g;
  }

  // Coordinates in Q(zeta_d) of a value known to lie there.
  Cyclotomic project_to(long d) const {
    const auto& fd = detail::field(d);
    const std::size_t k = static_cast<std::size_t>(fd.degree);
    const std::size_t rows = coords_.size();
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(k + 1, Rational(0)));
    for (std::size_t j = 0; j < k; ++j) {
      Cyclotomic b = zeta(d, static_cast<long>(j)).in_conductor(conductor_);
      for (std::size_t r = 0; r < rows; ++r) m[r][j] = b.coords_[r];
    }
    for (std::size_t r = 0; r < rows; ++r) m[r][k] = coords_[r];
    std::size_t row = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < k && row < rows; ++c) {
      std::size_t p = row;
      while (p < rows && m[p][c] == 0) ++p;
      if (p == rows) continue;
      std::swap(m[p], m[row]);
      Rational inv = Rational(1) / m[row][c];
      for (std::size_t j = c; j <= k; ++j) m[row][j] *= inv;
      for (std::size_t r = 0; r < rows; ++r) {
        if (r == row || m[r][c] == 0) continue;
        Rational s = m[r][c];
        for (std::size_t j = c; j <= k; ++j) m[r][j] -= s * m[row][j];
      }
      pivots.push_back(c);
      ++row;
    }
    std::vector<Rational> out(k, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) out[pivots[r]] = m[r][k];
    return Cyclotomic(d, std::move(out));
  }

  long conductor_;
  std::vector<Rational> coords_;
};

inline std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

}  // namespace onewtype
