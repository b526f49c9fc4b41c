#pragma once

// Partitions, bipartitions, Littlewood-Richardson coefficients, symmetric and
// hyperoctahedral group characters, and the one-W-type combinatorics of types A and B.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "onewtype/poly.hpp"
#include "onewtype/rational.hpp"

namespace onewtype {

using Partition = std::vector<int>;

inline int size_of(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

inline Partition normalized(Partition p) {
  std::sort(p.rbegin(), p.rend());
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] <= 0 || (i && p[i] > p[i - 1])) return false;
  return true;
}

inline Partition transpose(const Partition& p) {
  Partition t;
  for (int j = 0; !p.empty() && j < p[0]; ++j) {
    int c = 0;
    for (int x : p)
      if (x > j) ++c;
    t.push_back(c);
  }
  return t;
}

inline bool is_strict(const Partition& p) {
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i] == p[i - 1]) return false;
  return true;
}

inline int distinct_parts(const Partition& p) { return static_cast<int>(std::set<int>(p.begin(), p.end()).size()); }

inline bool is_rectangle(const Partition& p) { return distinct_parts(p) <= 1; }

// d x m: m rows of length d
inline Partition rectangle(int d, int m) { return d > 0 && m > 0 ? Partition(m, d) : Partition{}; }

inline std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ")";
  return os.str();
}

inline Partition parse_partition(const std::string& text) {
  Partition p;
  std::string tok;
  for (char c : text + ",") {
    if (c == '(' || c == ')' || c == ' ') continue;
    if (c == ',') {
      if (!tok.empty()) p.push_back(std::stoi(tok));
      tok.clear();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      tok.push_back(c);
    } else {
      throw std::invalid_argument("bad partition: " + text);
    }
  }
  if (!is_partition(p)) throw std::invalid_argument("not a partition: " + text);
  return p;
}

// All partitions of n, in reverse lexicographic order.
inline std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, maxpart); k >= 1; --k) {
      cur.push_back(k);
      self(self, rest - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

inline Partition hook_partition(int d, int k) {
  if (d < 1 || k < 1) throw std::invalid_argument("hook of an empty rectangle");
  Partition p;
  for (int part = d + k - 1; part >= std::abs(d - k) + 1; part -= 2) p.push_back(part);
  return p;
}

// Number of Littlewood-Richardson tableaux of shape lambda/mu and content nu.
inline long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (size_of(lambda) != size_of(mu) + size_of(nu)) throw std::invalid_argument("lr_coefficient: size mismatch");
  if (mu.size() > lambda.size()) return 0;
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu[i] > lambda[i]) return 0;
  const std::size_t rows = lambda.size();
  std::vector<int> start(rows, 0);
  for (std::size_t i = 0; i < rows; ++i) start[i] = i < mu.size() ? mu[i] : 0;
  // cells in reading order: rows top to bottom, each right to left
  std::vector<std::pair<int, int>> cells;
  for (std::size_t i = 0; i < rows; ++i)
    for (int j = lambda[i] - 1; j >= start[i]; --j) cells.emplace_back(static_cast<int>(i), j);
  std::vector<std::vector<int>> fill(rows);
  for (std::size_t i = 0; i < rows; ++i) fill[i].assign(lambda[i], 0);
  std::vector<int> count(nu.size() + 1, 0);
  long total = 0;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      ++total;
      return;
    }
    auto [i, j] = cells[idx];
    for (int v = 1; v <= static_cast<int>(nu.size()); ++v) {
      if (count[v] >= nu[v - 1]) continue;
      if (v > 1 && count[v] >= count[v - 1]) continue;  // lattice condition
      if (j + 1 < lambda[i] && fill[i][j + 1] && fill[i][j + 1] < v) continue;  // rows weakly increase
      if (i > 0 && j < lambda[i - 1] && j >= start[i - 1] && fill[i - 1][j] >= v) continue;  // columns strictly increase
      fill[i][j] = v;
      ++count[v];
      self(self, idx + 1);
      --count[v];
      fill[i][j] = 0;
    }
  };
  rec(rec, 0);
  return total;
}

// Partitions lambda with c^lambda_{lambda_L, lambda_R^t} != 0 for lambda_L = d1 x m1, lambda_R = d2 x m2,
// by the rectangular rules (i)-(iii); every coefficient equals 1.
inline std::vector<Partition> rectangular_lr_partitions(int d1, int m1, int d2, int m2) {
  // lambda_L has m1 rows of length d1; lambda_R^t has d2 rows of length m2.
  if (m1 < d2) {
    std::swap(d1, m2);
    std::swap(m1, d2);
  }
  if (d2 == 0 || m2 == 0) return {rectangle(d1, m1)};
  if (d1 == 0 || m1 == 0) return {rectangle(m2, d2)};
  const int len = m1 + d2, total = d1 + m2, lo = std::max(d1, m2);
  std::vector<Partition> out;
  Partition top(d2);
  auto rec = [&](auto&& self, int j, int maxv) -> void {
    if (j == d2) {
      Partition lam(len, 0);
      for (int t = 0; t < d2; ++t) {
        lam[t] = top[t];
        lam[len - 1 - t] = total - top[t];
      }
      for (int t = d2; t < m1; ++t) lam[t] = d1;
      for (int t = 1; t < len; ++t)
        if (lam[t] > lam[t - 1]) return;
      out.push_back(normalized(lam));
      return;
    }
    for (int v = maxv; v >= lo; --v) {
      top[j] = v;
      self(self, j + 1, v);
    }
  };
  rec(rec, 0, total);
  std::sort(out.rbegin(), out.rend());
  return out;
}

// lambda_L and lambda_R^t glued vertically and horizontally
inline Partition glue_vertical(const Partition& a, const Partition& b) {
  Partition p = a;
  p.insert(p.end(), b.begin(), b.end());
  return normalized(p);
}
inline Partition glue_horizontal(const Partition& a, const Partition& b) {
  Partition p(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
  return normalized(p);
}

// ---- symmetric group characters (Murnaghan-Nakayama) ----

namespace detail {

// Rim hooks of length r: returns (new partition, leg length) pairs.
inline std::vector<std::pair<Partition, int>> remove_rim_hooks(const Partition& lam, int r) {
  // beta numbers
  const int L = static_cast<int>(lam.size());
  std::vector<int> beta(L);
  for (int i = 0; i < L; ++i) beta[i] = lam[i] + (L - 1 - i);
  std::set<int> bs(beta.begin(), beta.end());
  std::vector<std::pair<Partition, int>> out;
  for (int i = 0; i < L; ++i) {
    int b = beta[i] - r;
    if (b < 0 || bs.count(b)) continue;
    int leg = 0;
    for (int x : beta)
      if (x > b && x < beta[i]) ++leg;
    std::vector<int> nb = beta;
    nb[i] = b;
    std::sort(nb.rbegin(), nb.rend());
    Partition mu(L);
    for (int k = 0; k < L; ++k) mu[k] = nb[k] - (L - 1 - k);
    out.emplace_back(normalized(mu), leg);
  }
  return out;
}

}  // namespace detail

// chi^lambda at cycle type mu
inline long sn_character(const Partition& lambda, const Partition& mu) {
  static thread_local std::map<std::pair<Partition, Partition>, long> memo;
  if (lambda.empty()) return mu.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, mu);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Partition rest(mu.begin() + 1, mu.end());
  long s = 0;
  for (const auto& [nu, leg] : detail::remove_rim_hooks(lambda, mu[0]))
    s += (leg % 2 ? -1 : 1) * sn_character(nu, rest);
  memo[key] = s;
  return s;
}

inline long sn_degree(const Partition& lambda) { return sn_character(lambda, Partition(size_of(lambda), 1)); }

// Degree of the genuine S~_n representation(s) attached to a strict partition.
inline Integer schur_spin_degree(const Partition& lam) {
  const int n = size_of(lam);
  const int l = static_cast<int>(lam.size());
  Rational d = 1;
  for (int k = 2; k <= n; ++k) d *= k;
  for (int x : lam)
    for (int k = 2; k <= x; ++k) d /= k;
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) d *= make_rational(lam[i] - lam[j], lam[i] + lam[j]);
  d *= Rational(Integer(1) << ((n - l) / 2));
  if (!is_integer(d)) throw std::logic_error("non-integral spin degree");
  return d.get_num();
}

// A strict partition is odd when n - length is odd (two associate representations).
inline bool is_odd_strict(const Partition& lam) { return (size_of(lam) - static_cast<int>(lam.size())) % 2 == 1; }

// ---- bipartitions and W(B_n) characters ----

struct Bipartition {
  Partition left, right;
  int size() const { return size_of(left) + size_of(right); }
  friend bool operator<(const Bipartition& a, const Bipartition& b) {
    return std::tie(a.left, a.right) < std::tie(b.left, b.right);
  }
  friend bool operator==(const Bipartition& a, const Bipartition& b) { return a.left == b.left && a.right == b.right; }
};

inline std::string to_string(const Bipartition& b) {
  auto part = [](const Partition& p) { return p.empty() ? std::string("0") : to_string(p); };
  return part(b.left) + "x" + part(b.right);
}

inline std::vector<Bipartition> bipartitions(int n) {
  std::vector<Bipartition> out;
  for (int a = n; a >= 0; --a)
    for (const auto& l : partitions(a))
      for (const auto& r : partitions(n - a)) out.push_back({l, r});
  return out;
}

// Signed cycle type of W(B_n): positive and negative cycle lengths (each sorted decreasing).
struct SignedCycleType {
  Partition positive, negative;
  friend bool operator<(const SignedCycleType& a, const SignedCycleType& b) {
    return std::tie(a.positive, a.negative) < std::tie(b.positive, b.negative);
  }
};

// chi^{(L,R)} by the hyperoctahedral Murnaghan-Nakayama rule: removing a negative
// cycle from the right diagram contributes an extra sign.
inline long bn_character(const Bipartition& b, const SignedCycleType& t) {
  if (t.positive.empty() && t.negative.empty()) return b.left.empty() && b.right.empty() ? 1 : 0;
  SignedCycleType rest = t;
  int r;
  bool neg;
  if (!t.negative.empty()) {
    r = t.negative[0];
    neg = true;
    rest.negative.erase(rest.negative.begin());
  } else {
    r = t.positive[0];
    neg = false;
    rest.positive.erase(rest.positive.begin());
  }
  long s = 0;
  for (const auto& [nu, leg] : detail::remove_rim_hooks(b.left, r))
    s += (leg % 2 ? -1 : 1) * bn_character({nu, b.right}, rest);
  for (const auto& [nu, leg] : detail::remove_rim_hooks(b.right, r))
    s += (leg % 2 ? -1 : 1) * (neg ? -1 : 1) * bn_character({b.left, nu}, rest);
  return s;
}

inline long bn_degree(const Bipartition& b) {
  return bn_character(b, SignedCycleType{Partition(b.size(), 1), {}});
}

// Bipartitions reached by moving one box between the two diagrams.
inline std::vector<Bipartition> refl_tensor_b(const Bipartition& b) {
  auto removals = [](const Partition& p) {
    std::vector<Partition> out;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (i + 1 == p.size() || p[i + 1] < p[i]) {
        Partition q = p;
        --q[i];
        out.push_back(normalized(q));
      }
    return out;
  };
  auto additions = [](const Partition& p) {
    std::vector<Partition> out;
    for (std::size_t i = 0; i <= p.size(); ++i)
      if (i == 0 || (i < p.size() ? p[i] : 0) < p[i - 1]) {
        Partition q = p;
        if (i == p.size()) q.push_back(0);
        ++q[i];
        out.push_back(q);
      }
    return out;
  };
  std::set<Bipartition> out;
  for (const auto& l : removals(b.left))
    for (const auto& r : additions(b.right)) out.insert({l, r});
  for (const auto& r : removals(b.right))
    for (const auto& l : additions(b.left)) out.insert({l, r});
  return {out.begin(), out.end()};
}

// ---- one-W-type combinatorics ----

using CentralVector = std::vector<RationalPoly>;

// Box (i, j) of the diagram carries k_s + j k_l - i k_l.
inline CentralVector central_character_tableau(const Partition& lam) {
  CentralVector out;
  for (std::size_t i = 0; i < lam.size(); ++i)
    for (int j = 0; j < lam[i]; ++j)
      out.push_back(RationalPoly::ks() + RationalPoly(Rational(j) - Rational(static_cast<long>(i))) * RationalPoly::kl());
  return out;
}

inline std::vector<Rational> specialize(const CentralVector& v, const Rational& ks, const Rational& kl) {
  std::vector<Rational> out;
  for (const auto& p : v) out.push_back(p.evaluate(ks, kl));
  return out;
}

// W(B_n) orbit invariant: sorted absolute values.
inline std::vector<Rational> bn_orbit_key(std::vector<Rational> v) {
  for (auto& x : v)
    if (x < 0) x = -x;
  std::sort(v.begin(), v.end());
  return v;
}

inline bool same_bn_orbit(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return bn_orbit_key(a) == bn_orbit_key(b);
}

struct RectanglePair {
  int d1, m1, d2, m2;
};

// (T2) admissibility m1 - d1 = m2 - d2 + delta, delta = 2 k_s / k_l.
inline bool t2_admissible(const RectanglePair& r, const Rational& ks, const Rational& kl) {
  if (kl == 0) throw std::invalid_argument("k_l must be nonzero");
  return Rational(r.m1 - r.d1) == Rational(r.m2 - r.d2) + 2 * ks / kl;
}

// Rectangles d x k with dk = n (type A one-W-type candidates).
inline std::vector<Partition> type_a_candidates(int n) {
  std::vector<Partition> out;
  for (int k = 1; k <= n; ++k)
    if (n % k == 0) out.push_back(rectangle(n / k, k));
  return out;
}

inline std::vector<Bipartition> type_b_candidates(int n, const Rational& ks, const Rational& kl) {
  std::set<Bipartition> out;
  for (const auto& p : partitions(n)) {
    out.insert({p, {}});
    out.insert({{}, p});
  }
  for (int a = 1; a < n; ++a)
    for (int d1 = 1; d1 <= a; ++d1) {
      if (a % d1) continue;
      for (int d2 = 1; d2 <= n - a; ++d2) {
        if ((n - a) % d2) continue;
        RectanglePair r{d1, a / d1, d2, (n - a) / d2};
        if (t2_admissible(r, ks, kl)) out.insert({rectangle(r.d1, r.m1), rectangle(r.d2, r.m2)});
      }
    }
  return {out.begin(), out.end()};
}

struct SpinConstituent {
  Partition label;
  int variant = 0;  // 0 unique, +1 / -1 associates
  long mult = 0;
};

// Decomposition of sigma_{d x k} (k rows of length d) tensor S^eps over S~_n,
// with S the spin module of the ambient R^n (eps = +1/-1 for n odd, 0 for n even).
inline std::vector<SpinConstituent> type_a_spin_tensor(int d, int k, int eps) {
  const int n = d * k;
  Partition h = hook_partition(d, k);
  long mult = 1L << (std::min(d, k) / 2);
  if (!is_odd_strict(h)) return {{h, 0, mult}};
  if (n % 2 == 0) return {{h, 1, mult}, {h, -1, mult}};
  return {{h, eps, mult}};
}

// (L x R) tensor S^eps = sum_lambda c^lambda_{L, R^t} (lambda x 0) tensor S^{eps'}.
struct TypeBTerm {
  Partition lambda;
  int variant = 0;
  long mult = 0;
};

inline int type_b_variant(int n, int s, int eps) {
  if (n % 2 == 0) return 0;
  return s % 2 == 0 ? eps : -eps;
}

inline std::vector<TypeBTerm> type_b_spin_decomposition(const Bipartition& b, int eps) {
  const int n = b.size(), s = size_of(b.right);
  Partition rt = transpose(b.right);
  std::vector<TypeBTerm> out;
  for (const auto& lam : partitions(n)) {
    long c = lr_coefficient(lam, b.left, rt);
    if (c) out.push_back({lam, type_b_variant(n, s, eps), c});
  }
  return out;
}

}  // namespace onewtype
