#pragma once

// Character tables of finite groups by the Dixon-Schneider method over a prime
// field, lifted to cyclotomic values through eigenvalue multiplicities.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "onewtype/clifford.hpp"
#include "onewtype/cyclotomic.hpp"
#include "onewtype/group.hpp"
#include "onewtype/poly.hpp"

namespace onewtype {

using ClassFunction = std::vector<Cyclotomic>;

namespace modp {

using u64 = std::uint64_t;

inline u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>((__uint128_t)a * b % p); }
inline u64 pow(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}
inline u64 inv(u64 a, u64 p) { return pow(a, p - 2, p); }
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline u64 primitive_root(u64 p) {
  std::vector<u64> qs;
  u64 m = p - 1;
  for (u64 d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      qs.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) qs.push_back(m);
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (u64 q : qs)
      if (pow(g, (p - 1) / q, p) == 1) ok = false;
    if (ok) return g;
  }
}

using Mat = std::vector<std::vector<u64>>;

// Column basis of the kernel of a (rows x cols).
inline Mat kernel(Mat a, std::size_t cols, u64 p) {
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t k = row;
    while (k < a.size() && a[k][c] == 0) ++k;
    if (k == a.size()) continue;
    std::swap(a[k], a[row]);
    u64 iv = inv(a[row][c], p);
    for (auto& x : a[row]) x = mul(x, iv, p);
    for (std::size_t r = 0; r < a.size(); ++r)
      if (r != row && a[r][c]) {
        u64 f = a[r][c];
        for (std::size_t j = 0; j < cols; ++j) a[r][j] = sub(a[r][j], mul(f, a[row][j], p), p);
      }
    piv.push_back(c);
    ++row;
  }
  std::vector<bool> is_piv(cols, false);
  for (auto c : piv) is_piv[c] = true;
  Mat basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<u64> v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = (p - a[r][f]) % p;
    basis.push_back(v);
  }
  return basis;  // each entry is one basis vector
}

// Characteristic polynomial (monic, low degree first) via Hessenberg reduction.
inline std::vector<u64> charpoly(Mat h, u64 p) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n + 1 && m < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][i], h[r][m]);
    }
    u64 iv = inv(h[m][m - 1], p);
    for (std::size_t r = m + 1; r < n; ++r) {
      u64 f = mul(h[r][m - 1], iv, p);
      if (!f) continue;
      for (std::size_t c = 0; c < n; ++c) h[r][c] = sub(h[r][c], mul(f, h[m][c], p), p);
      for (std::size_t c = 0; c < n; ++c) h[c][m] = (h[c][m] + mul(f, h[c][r], p)) % p;
    }
  }
  std::vector<std::vector<u64>> P(n + 1);
  P[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    // P_m = (x - h[m-1][m-1]) P_{m-1} - sum_{i<m} h[i-1][m-1] prod_{j=i+1}^{m-1} h[j-1][j-2] P_{i-1}
    std::vector<u64> next(m + 1, 0);
    for (std::size_t k = 0; k < P[m - 1].size(); ++k) {
      next[k + 1] = (next[k + 1] + P[m - 1][k]) % p;
      next[k] = sub(next[k], mul(h[m - 1][m - 1], P[m - 1][k], p), p);
    }
    u64 t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t = mul(t, h[i][i - 1], p);
      if (!t) break;
      u64 f = mul(t, h[i - 1][m - 1], p);
      for (std::size_t k = 0; k < P[i - 1].size(); ++k) next[k] = sub(next[k], mul(f, P[i - 1][k], p), p);
    }
    P[m] = next;
  }
  return P[n];
}

inline u64 eval(const std::vector<u64>& poly, u64 x, u64 p) {
  u64 r = 0;
  for (std::size_t k = poly.size(); k-- > 0;) r = (mul(r, x, p) + poly[k]) % p;
  return r;
}

}  // namespace modp

struct CharacterTable {
  std::size_t order = 0;
  std::vector<std::size_t> class_sizes;
  std::vector<int> class_orders;
  std::vector<std::vector<int>> class_words;
  std::vector<std::size_t> inverse_class;
  std::vector<ClassFunction> irreps;  // canonical order: degree, then values
  std::uint64_t prime = 0;

  std::size_t num_classes() const { return class_sizes.size(); }
  long degree(std::size_t i) const { return to_long(irreps[i][0].rational_value()); }

  Cyclotomic inner(const ClassFunction& a, const ClassFunction& b) const {
    Cyclotomic s;
    for (std::size_t k = 0; k < num_classes(); ++k)
      if (!a[k].is_zero() && !b[k].is_zero()) s += Cyclotomic(static_cast<long>(class_sizes[k])) * a[k] * b[k].conj();
    return s / Cyclotomic(static_cast<long>(order));
  }

  // <a, b> certified to be a non-negative integer
  long multiplicity(const ClassFunction& a, const ClassFunction& b) const {
    Cyclotomic v = inner(a, b);
    if (!v.is_rational() || !is_integer(v.rational_value()) || v.rational_value() < 0)
      throw std::domain_error("inner product is not a non-negative integer: " + v.to_string());
    return to_long(v.rational_value());
  }

  std::vector<long> decompose(const ClassFunction& f) const {
    std::vector<long> out;
    for (const auto& chi : irreps) out.push_back(multiplicity(f, chi));
    return out;
  }

  static ClassFunction product(const ClassFunction& a, const ClassFunction& b) {
    ClassFunction r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] * b[k];
    return r;
  }

  std::size_t find(const ClassFunction& chi) const {
    for (std::size_t i = 0; i < irreps.size(); ++i)
      if (irreps[i] == chi) return i;
    throw std::out_of_range("character not in table");
  }
};

// Class sizes only, for inner products of arbitrary class functions.
inline CharacterTable class_data(const FiniteGroup& G) {
  CharacterTable T;
  T.order = G.size();
  for (const auto& c : G.classes()) {
    T.class_sizes.push_back(c.size);
    T.class_orders.push_back(c.order);
    T.class_words.push_back(c.word);
  }
  for (std::size_t k = 0; k < T.class_sizes.size(); ++k) T.inverse_class.push_back(G.inverse_class(k));
  return T;
}

inline bool canonical_less(const ClassFunction& a, const ClassFunction& b) {
  if (a[0] != b[0]) return canonical_less(a[0], b[0]);
  for (std::size_t k = 1; k < a.size(); ++k)
    if (a[k] != b[k]) return canonical_less(a[k], b[k]);
  return false;
}

inline CharacterTable dixon_schneider(const FiniteGroup& G, std::size_t gate = kDefaultGroupGate) {
  using namespace modp;
  if (G.size() > gate) throw std::length_error("group order exceeds the character-table gate");
  const auto& cls = G.classes();
  const std::size_t r = cls.size();
  const u64 n = G.size();
  const u64 e = static_cast<u64>(G.exponent());

  u64 bound = static_cast<u64>(2 * std::sqrt(static_cast<double>(n))) + 2;
  u64 p = e + 1;
  while (p <= bound || !is_prime(p)) p += e;
  const u64 zeta_e = pow(primitive_root(p), (p - 1) / e, p);

  // a[j][k][l] = #{x in C_j : x^{-1} g_l in C_k}
  std::vector<std::vector<std::vector<u64>>> a(r, std::vector<std::vector<u64>>(r, std::vector<u64>(r, 0)));
  for (FiniteGroup::Index x = 0; x < n; ++x) {
    std::size_t j = G.class_of(x);
    FiniteGroup::Index xi = G.inverse(x);
    for (std::size_t l = 0; l < r; ++l) ++a[j][G.class_of(G.mul(xi, cls[l].rep))][l];
  }
  for (auto& mj : a)
    for (auto& row : mj)
      for (auto& v : row) v %= p;

  // Simultaneous eigenspaces of the class matrices M_j = (a[j][k][l])_{k,l}.
  std::vector<Mat> spaces;  // each a list of basis vectors
  {
    Mat id;
    for (std::size_t k = 0; k < r; ++k) {
      std::vector<u64> v(r, 0);
      v[k] = 1;
      id.push_back(v);
    }
    spaces.push_back(id);
  }
  std::vector<std::size_t> order(r);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return cls[x].size < cls[y].size; });
  for (std::size_t j : order) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Mat& s) { return s.size() == 1; })) break;
    std::vector<Mat> next;
    for (const Mat& B : spaces) {
      const std::size_t d = B.size();
      if (d == 1) {
        next.push_back(B);
        continue;
      }
      // images M_j b for each basis vector b
      Mat img(d, std::vector<u64>(r, 0));
      for (std::size_t t = 0; t < d; ++t)
        for (std::size_t k = 0; k < r; ++k) {
          u64 s = 0;
          for (std::size_t l = 0; l < r; ++l)
            if (a[j][k][l] && B[t][l]) s = (s + mul(a[j][k][l], B[t][l], p)) % p;
          img[t][k] = s;
        }
      // restricted matrix R with img[t] = sum_u R[u][t] B[u]: solve via kernel of [B^T | img^T]
      Mat R(d, std::vector<u64>(d, 0));
      {
        Mat sys(r, std::vector<u64>(d + d, 0));
        for (std::size_t k = 0; k < r; ++k) {
          for (std::size_t u = 0; u < d; ++u) sys[k][u] = B[u][k];
          for (std::size_t t = 0; t < d; ++t) sys[k][d + t] = img[t][k];
        }
        // reduce and read off coordinates
        std::size_t row = 0;
        std::vector<std::size_t> piv;
        for (std::size_t c = 0; c < d && row < r; ++c) {
          std::size_t q = row;
          while (q < r && sys[q][c] == 0) ++q;
          if (q == r) throw std::logic_error("degenerate subspace basis");
          std::swap(sys[q], sys[row]);
          u64 iv = inv(sys[row][c], p);
          for (auto& x : sys[row]) x = mul(x, iv, p);
          for (std::size_t q2 = 0; q2 < r; ++q2)
            if (q2 != row && sys[q2][c]) {
              u64 f = sys[q2][c];
              for (std::size_t c2 = 0; c2 < 2 * d; ++c2) sys[q2][c2] = sub(sys[q2][c2], mul(f, sys[row][c2], p), p);
            }
          piv.push_back(c);
          ++row;
        }
        for (std::size_t u = 0; u < d; ++u)
          for (std::size_t t = 0; t < d; ++t) R[u][t] = sys[u][d + t];
      }
      auto cp = charpoly(R, p);
      std::vector<u64> roots;
      for (u64 lam = 0; lam < p; ++lam)
        if (eval(cp, lam, p) == 0) roots.push_back(lam);
      if (roots.size() == 1) {
        next.push_back(B);
        continue;
      }
      for (u64 lam : roots) {
        Mat shifted = R;  // rows u, cols t
        for (std::size_t u = 0; u < d; ++u) shifted[u][u] = sub(shifted[u][u], lam, p);
        Mat ker = kernel(shifted, d, p);
        Mat sub_basis;
        for (const auto& c : ker) {
          std::vector<u64> v(r, 0);
          for (std::size_t u = 0; u < d; ++u)
            if (c[u])
              for (std::size_t k = 0; k < r; ++k) v[k] = (v[k] + mul(c[u], B[u][k], p)) % p;
          sub_basis.push_back(v);
        }
        next.push_back(sub_basis);
      }
    }
    spaces = next;
  }
  if (spaces.size() != r) throw std::logic_error("class matrices failed to separate characters");

  CharacterTable T;
  T.order = n;
  T.prime = p;
  for (const auto& c : cls) {
    T.class_sizes.push_back(c.size);
    T.class_orders.push_back(c.order);
    T.class_words.push_back(c.word);
  }
  for (std::size_t k = 0; k < r; ++k) T.inverse_class.push_back(G.inverse_class(k));
  std::vector<std::vector<std::size_t>> powers(r);  // powers[k][i] = class of g_k^i
  for (std::size_t k = 0; k < r; ++k)
    for (int i = 0; i < cls[k].order; ++i) powers[k].push_back(G.power_class(k, i));

  for (const Mat& s : spaces) {
    std::vector<u64> w = s[0];
    u64 iv = inv(w[0], p);
    for (auto& x : w) x = mul(x, iv, p);
    u64 S = 0;
    for (std::size_t k = 0; k < r; ++k)
      S = (S + mul(mul(w[k], w[T.inverse_class[k]], p), inv(cls[k].size % p, p), p)) % p;
    u64 d2 = mul(n % p, inv(S, p), p);
    u64 deg = 0;
    for (u64 d = 1; d * d <= n; ++d)
      if (mul(d, d, p) == d2) {
        deg = d;
        break;
      }
    if (!deg) throw std::logic_error("no valid character degree");
    std::vector<u64> chi(r);
    for (std::size_t k = 0; k < r; ++k) chi[k] = mul(mul(w[k], deg, p), inv(cls[k].size % p, p), p);
    ClassFunction row(r);
    for (std::size_t k = 0; k < r; ++k) {
      const u64 o = static_cast<u64>(cls[k].order);
      const u64 zo = pow(zeta_e, e / o, p);
      const u64 io = inv(o % p, p);
      Cyclotomic val;
      for (u64 t = 0; t < o; ++t) {
        u64 m = 0;
        for (u64 i = 0; i < o; ++i) m = (m + mul(chi[powers[k][i]], pow(zo, (o - t) % o * i % o, p), p)) % p;
        m = mul(m, io, p);
        if (m > deg) throw std::logic_error("eigenvalue multiplicity out of range");
        if (m) val += Cyclotomic(static_cast<long>(m)) * Cyclotomic::zeta(static_cast<long>(o), static_cast<long>(t));
      }
      row[k] = val.minimized();
    }
    T.irreps.push_back(row);
  }
  std::sort(T.irreps.begin(), T.irreps.end(), [](const ClassFunction& x, const ClassFunction& y) {
    return canonical_less(x, y);
  });
  return T;
}

// Smallest i with chi occurring in S^i(V): the b-value of the (d, b) labels.
inline int b_value(const WeylGroup& W, const ClassFunction& chi) {
  const auto& G = W.group();
  const int r = W.roots().rank;
  const int top = static_cast<int>(W.roots().num_positive());
  std::vector<std::vector<Rational>> series;
  for (const auto& c : G.classes()) {
    Matrix<Rational> m(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) m(i, j) = W.coords_matrix(c.rep)[i * r + j];
    // Faddeev-LeVerrier: coef[j] is the coefficient of x^{r-j} in det(x - m)
    std::vector<Rational> coef(r + 1, Rational(0));
    coef[0] = 1;
    Matrix<Rational> mk(r, r);
    for (int k = 1; k <= r; ++k) {
      mk = m * mk + Matrix<Rational>::identity(r) * coef[k - 1];
      coef[k] = -(m * mk).trace() / k;
    }
    // 1 / det(1 - t m) = sum_i tr(S^i m) t^i
    std::vector<Rational> s(top + 1, Rational(0));
    s[0] = 1;
    for (int i = 1; i <= top; ++i)
      for (int j = 1; j <= std::min(i, r); ++j) s[i] -= coef[j] * s[i - j];
    series.push_back(std::move(s));
  }
  for (int i = 0; i <= top; ++i) {
    Cyclotomic total;
    for (std::size_t c = 0; c < series.size(); ++c)
      total += Cyclotomic(series[c][i] * static_cast<long>(G.classes()[c].size)) * chi[c];
    if (!total.is_zero()) return i;
  }
  throw std::logic_error("b-value exceeds the number of positive roots");
}

// Weyl-group class function pulled back along the projection of the cover.
inline ClassFunction inflate(const ClassFunction& f, const PinCover& cover) {
  const auto& cls = cover.group().classes();
  ClassFunction out;
  for (const auto& c : cls) out.push_back(f[cover.weyl().group().class_of(cover.project(c.rep))]);
  return out;
}

inline ClassFunction spin_class_function(const PinCover& cover, SpinVariant variant) {
  ClassFunction out;
  for (const auto& c : cover.group().classes()) out.push_back(spin_character(cover, variant, c.rep).minimized());
  return out;
}

inline bool is_genuine(const ClassFunction& chi, const PinCover& cover) {
  return chi[cover.group().class_of(cover.z())] == -chi[0];
}

// chi(Omega)/chi(1) for Omega = z (sum_a k_a c_a s~_a)^2 with c_a = |a^vee| = 2/|a|.
inline CyclotomicPoly casimir_scalar(const ClassFunction& chi, const PinCover& cover) {
  const auto& rs = cover.weyl().roots();
  const auto& G = cover.group();
  const std::size_t np = rs.num_positive();
  std::vector<FiniteGroup::Index> lifts, zlifts;
  for (std::size_t a = 0; a < np; ++a) {
    lifts.push_back(cover.reflection_lift(a));
    zlifts.push_back(cover.times_z(lifts.back()));
  }
  // sums[la][lb] over ordered pairs with the given length types
  Cyclotomic sums[2][2];
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = 0; b < np; ++b) {
      auto x = G.mul(zlifts[a], lifts[b]);
      const Cyclotomic& v = chi[G.class_of(x)];
      if (v.is_zero()) continue;
      Cyclotomic c = Cyclotomic(4) * Cyclotomic::sqrt(rs.norm2[a] * rs.norm2[b]).inverse();
      sums[rs.is_long[a]][rs.is_long[b]] += c * v;
    }
  CyclotomicPoly out;
  const Cyclotomic inv_deg = chi[0].inverse();
  for (int la = 0; la < 2; ++la)
    for (int lb = 0; lb < 2; ++lb) {
      if (sums[la][lb].is_zero()) continue;
      int ks = (la == 0) + (lb == 0), kl = la + lb;
      out += CyclotomicPoly::monomial(ks, kl, (sums[la][lb] * inv_deg).minimized());
    }
  return out;
}

}  // namespace onewtype
