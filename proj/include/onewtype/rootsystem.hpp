#pragma once

// Crystallographic root systems in rational ambient coordinates and their Weyl groups.
// Weyl group elements are stored as integer matrices in the basis of simple roots
// (column j is w(alpha_j)); ambient matrices are recovered from words.

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "onewtype/group.hpp"
#include "onewtype/matrix.hpp"
#include "onewtype/rational.hpp"

namespace onewtype {

using Vec = std::vector<Rational>;
using IVec = std::vector<int>;

inline Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
inline Vec axpy(const Rational& c, const Vec& x, Vec y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += c * x[i];
  return y;
}
inline Vec scaled(const Rational& c, Vec x) {
  for (auto& v : x) v *= c;
  return x;
}

struct IVecHash {
  std::size_t operator()(const IVec& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 1000)) * 1099511628211ull;
    return h;
  }
};

struct RootSystem {
  std::string name;   // e.g. "B3", "E6"
  char family = 'A';
  int rank = 0;
  int dim = 0;        // ambient dimension
  std::vector<Vec> simple;
  std::vector<IVec> cartan;        // cartan[i][j] = 2(a_i,a_j)/(a_i,a_i)
  std::vector<IVec> positive;      // simple-root coordinates
  std::vector<Vec> positive_ambient;
  std::vector<Rational> norm2;     // (a,a) per positive root
  std::vector<bool> is_long;       // simply-laced: all long

  std::size_t num_positive() const { return positive.size(); }
  bool two_lengths() const { return std::find(is_long.begin(), is_long.end(), false) != is_long.end(); }
  bool simple_is_long(int i) const { return is_long[find_positive(unit(i))]; }

  IVec unit(int i) const {
    IVec e(rank, 0);
    e[i] = 1;
    return e;
  }

  Vec to_ambient(const IVec& c) const {
    Vec v(dim, Rational(0));
    for (int i = 0; i < rank; ++i)
      if (c[i]) v = axpy(Rational(c[i]), simple[i], v);
    return v;
  }

  Vec coroot(std::size_t a) const { return scaled(Rational(2) / norm2[a], positive_ambient[a]); }

  // <beta, alpha_i^vee> for beta in simple-root coordinates
  int pairing_coroot(const IVec& beta, int i) const {
    int s = 0;
    for (int j = 0; j < rank; ++j) s += beta[j] * cartan[i][j];
    return s;
  }

  std::size_t find_positive(const IVec& c) const {
    for (std::size_t a = 0; a < positive.size(); ++a)
      if (positive[a] == c) return a;
    throw std::invalid_argument("not a positive root");
  }

  Matrix<Rational> gram() const {
    Matrix<Rational> g(rank, rank);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) g(i, j) = dot(simple[i], simple[j]);
    return g;
  }

  // Basis of V dual to the simple roots: (w_i, a_j) = delta_ij.
  std::vector<Vec> fundamental_coweights() const {
    Matrix<Rational> ginv = inverse(gram());
    std::vector<Vec> out;
    for (int i = 0; i < rank; ++i) {
      Vec v(dim, Rational(0));
      for (int k = 0; k < rank; ++k) v = axpy(ginv(i, k), simple[k], v);
      out.push_back(v);
    }
    return out;
  }

  // <w_i, a_j^vee> = delta_ij
  std::vector<Vec> fundamental_weights() const {
    auto cw = fundamental_coweights();
    for (int i = 0; i < rank; ++i) cw[i] = scaled(dot(simple[i], simple[i]) / 2, cw[i]);
    return cw;
  }

  int coxeter_m(int i, int j) const {
    if (i == j) return 1;
    switch (cartan[i][j] * cartan[j][i]) {
      case 0: return 2;
      case 1: return 3;
      case 2: return 4;
      case 3: return 6;
    }
    throw std::logic_error("non-crystallographic Cartan entry");
  }

  Vec reflect(const Vec& v, std::size_t a) const {
    return axpy(-2 * dot(positive_ambient[a], v) / norm2[a], positive_ambient[a], v);
  }

  Matrix<Rational> ambient_reflection(std::size_t a) const {
    Matrix<Rational> m = Matrix<Rational>::identity(dim);
    const Vec& r = positive_ambient[a];
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) m(i, j) -= 2 * r[i] * r[j] / norm2[a];
    return m;
  }

  // Orthogonal (not normalized) basis of V = span of simple roots, by Gram-Schmidt.
  std::vector<Vec> orthogonal_basis() const {
    std::vector<Vec> out;
    for (int i = 0; i < rank; ++i) {
      Vec v = simple[i];
      for (const auto& u : out) v = axpy(-dot(v, u) / dot(u, u), u, v);
      out.push_back(v);
    }
    return out;
  }

  // Moves v into the closed dominant chamber (v, a_i) >= 0.
  Vec dominant(Vec v) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (int i = 0; i < rank; ++i)
        if (dot(v, simple[i]) < 0) {
          v = axpy(-2 * dot(v, simple[i]) / dot(simple[i], simple[i]), simple[i], v);
          changed = true;
        }
    }
    return v;
  }
  bool same_orbit(const Vec& a, const Vec& b) const { return dominant(a) == dominant(b); }
};

namespace detail {

inline Vec evec(int dim, std::initializer_list<std::pair<int, Rational>> entries) {
  Vec v(dim, Rational(0));
  for (const auto& [i, x] : entries) v[i] = x;
  return v;
}

inline void close_roots(RootSystem& rs) {
  const int r = rs.rank;
  rs.cartan.assign(r, IVec(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Rational c = 2 * dot(rs.simple[i], rs.simple[j]) / dot(rs.simple[i], rs.simple[i]);
      if (!is_integer(c)) throw std::logic_error("simple roots are not crystallographic");
      rs.cartan[i][j] = static_cast<int>(to_long(c));
    }
  std::set<IVec> seen;
  std::vector<IVec> queue;
  for (int i = 0; i < r; ++i) {
    queue.push_back(rs.unit(i));
    seen.insert(queue.back());
  }
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (int i = 0; i < r; ++i) {
      IVec b = queue[q];
      int c = rs.pairing_coroot(b, i);
      b[i] -= c;
      if (seen.insert(b).second) queue.push_back(b);
    }
  std::vector<IVec> pos;
  for (const auto& b : seen)
    if (std::all_of(b.begin(), b.end(), [](int x) { return x >= 0; })) pos.push_back(b);
  std::sort(pos.begin(), pos.end(), [](const IVec& a, const IVec& b) {
    int ha = 0, hb = 0;
    for (int x : a) ha += x;
    for (int x : b) hb += x;
    if (ha != hb) return ha < hb;
    return a > b;
  });
  rs.positive = pos;
  Rational maxn = 0;
  for (const auto& b : pos) {
    rs.positive_ambient.push_back(rs.to_ambient(b));
    rs.norm2.push_back(dot(rs.positive_ambient.back(), rs.positive_ambient.back()));
    maxn = std::max(maxn, rs.norm2.back());
  }
  for (const auto& n : rs.norm2) rs.is_long.push_back(n == maxn);
}

}  // namespace detail

// Names: A<n>, B<n>, C<n>, D<n>, E6, E7, E8, F4, G2.
inline RootSystem build_root_system(const std::string& type) {
  if (type.size() < 2 || !std::isalpha(static_cast<unsigned char>(type[0])))
    throw std::invalid_argument("unsupported root system: " + type);
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(type[0])));
  int n = 0;
  try {
    n = std::stoi(type.substr(1));
  } catch (...) {
    throw std::invalid_argument("unsupported root system: " + type);
  }
  RootSystem rs;
  rs.family = f;
  rs.rank = n;
  rs.name = std::string(1, f) + std::to_string(n);
  using detail::evec;
  const Rational half = make_rational(1, 2);
  switch (f) {
    case 'A':
      if (n < 1) break;
      rs.dim = n + 1;
      for (int i = 0; i < n; ++i) rs.simple.push_back(evec(rs.dim, {{i, 1}, {i + 1, -1}}));
      break;
    case 'B':
    case 'C':
    case 'D':
      if ((f == 'D' && n < 3) || n < 2) break;
      rs.dim = n;
      for (int i = 0; i + 1 < n; ++i) rs.simple.push_back(evec(n, {{i, 1}, {i + 1, -1}}));
      if (f == 'B') rs.simple.push_back(evec(n, {{n - 1, 1}}));
      if (f == 'C') rs.simple.push_back(evec(n, {{n - 1, 2}}));
      if (f == 'D') rs.simple.push_back(evec(n, {{n - 2, 1}, {n - 1, 1}}));
      break;
    case 'G':
      if (n != 2) break;
      rs.dim = 3;
      rs.simple = {evec(3, {{0, -2}, {1, 1}, {2, 1}}), evec(3, {{0, 1}, {1, -1}})};
      break;
    case 'F':
      if (n != 4) break;
      rs.dim = 4;
      rs.simple = {evec(4, {{1, 1}, {2, -1}}), evec(4, {{2, 1}, {3, -1}}), evec(4, {{3, 1}}),
                   evec(4, {{0, half}, {1, -half}, {2, -half}, {3, -half}})};
      break;
    case 'E':
      if (n < 6 || n > 8) break;
      rs.dim = 8;
      rs.simple.push_back(evec(8, {{0, half}, {1, -half}, {2, -half}, {3, -half}, {4, -half}, {5, -half},
                                   {6, -half}, {7, half}}));
      rs.simple.push_back(evec(8, {{0, 1}, {1, 1}}));
      for (int i = 2; i < n; ++i) rs.simple.push_back(evec(8, {{i - 2, -1}, {i - 1, 1}}));
      break;
    default:
      break;
  }
  if (rs.simple.empty()) throw std::invalid_argument("unsupported root system: " + type);
  detail::close_roots(rs);
  return rs;
}

inline long weyl_group_order(const RootSystem& rs) {
  const long n = rs.rank;
  auto fact = [](long k) {
    long f = 1;
    for (long i = 2; i <= k; ++i) f *= i;
    return f;
  };
  switch (rs.family) {
    case 'A': return fact(n + 1);
    case 'B':
    case 'C': return (1L << n) * fact(n);
    case 'D': return (1L << (n - 1)) * fact(n);
    case 'G': return 12;
    case 'F': return 1152;
    case 'E': return n == 6 ? 51840L : n == 7 ? 2903040L : 696729600L;
  }
  return 0;
}

constexpr std::size_t kDefaultGroupGate = 250000;

class WeylGroup {
 public:
  using Index = FiniteGroup::Index;

  explicit WeylGroup(RootSystem rs, std::size_t max_order = kDefaultGroupGate) : rs_(std::move(rs)) {
    if (static_cast<std::size_t>(weyl_group_order(rs_)) > max_order)
      throw std::length_error("Weyl group of " + rs_.name + " exceeds the enumeration gate");
    const int r = rs_.rank;
    std::vector<IVec> gens;
    for (int i = 0; i < r; ++i) gens.push_back(simple_reflection_coords(i));
    IVec id(r * r, 0);
    for (int i = 0; i < r; ++i) id[i * r + i] = 1;
    auto mul = [r](const IVec& a, const IVec& b) {
      IVec c(r * r, 0);
      for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k)
          if (a[i * r + k])
            for (int j = 0; j < r; ++j) c[i * r + j] += a[i * r + k] * b[k * r + j];
      return c;
    };
    group_ = FiniteGroup::closure<IVec, IVecHash>(id, gens, mul, max_order, &mats_);
    for (Index x = 0; x < mats_.size(); ++x) index_.emplace(mats_[x], x);
    for (std::size_t a = 0; a < rs_.num_positive(); ++a) reflections_.push_back(index_.at(reflection_coords(a)));
  }

  const RootSystem& roots() const { return rs_; }
  const FiniteGroup& group() const { return group_; }
  std::size_t size() const { return group_.size(); }

  // r x r integer matrix in simple-root coordinates (row-major)
  const IVec& coords_matrix(Index x) const { return mats_[x]; }
  Index find(const IVec& m) const { return index_.at(m); }
  Index reflection(std::size_t a) const { return reflections_[a]; }
  const std::vector<Index>& reflections() const { return reflections_; }

  Matrix<Rational> ambient_matrix(Index x) const {
    Matrix<Rational> m = Matrix<Rational>::identity(rs_.dim);
    for (int g : group_.word(x)) m = m * rs_.ambient_reflection(rs_.find_positive(rs_.unit(g)));
    return m;
  }

  // Image of a simple-root-coordinate vector.
  IVec act(Index x, const IVec& v) const {
    const int r = rs_.rank;
    IVec out(r, 0);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) out[i] += mats_[x][i * r + j] * v[j];
    return out;
  }

  Vec act_ambient(Index x, const Vec& v) const {
    Vec out = v;
    auto w = group_.word(x);
    for (auto it = w.rbegin(); it != w.rend(); ++it) out = rs_.reflect(out, rs_.find_positive(rs_.unit(*it)));
    return out;
  }

  IVec simple_reflection_coords(int i) const {
    const int r = rs_.rank;
    IVec m(r * r, 0);
    for (int j = 0; j < r; ++j) {
      m[j * r + j] = 1;
      m[i * r + j] -= rs_.cartan[i][j];
    }
    return m;
  }

  // s_a in simple-root coordinates: s_a(b) = b - <b, a^vee> a
  IVec reflection_coords(std::size_t a) const {
    const int r = rs_.rank;
    IVec m(r * r, 0);
    const Vec cor = rs_.coroot(a);
    for (int j = 0; j < r; ++j) {
      m[j * r + j] += 1;
      long c = to_long(dot(rs_.simple[j], cor));
      for (int i = 0; i < r; ++i) m[i * r + j] -= static_cast<int>(c * rs_.positive[a][i]);
    }
    return m;
  }

  Index longest_element() const { return index_.at(longest_coords(rs_)); }

  static IVec longest_coords(const RootSystem& rs, std::vector<int>* word = nullptr) {
    const int r = rs.rank;
    IVec m(r * r, 0);
    for (int i = 0; i < r; ++i) m[i * r + i] = 1;
    for (bool again = true; again;) {
      again = false;
      for (int i = 0; i < r; ++i) {
        bool positive = false;
        for (int k = 0; k < r; ++k)
          if (m[k * r + i] > 0) positive = true;
        if (!positive) continue;
        // column j of m s_i is m(alpha_j) - A_ij m(alpha_i)
        IVec n(r * r, 0);
        for (int k = 0; k < r; ++k)
          for (int j = 0; j < r; ++j) n[k * r + j] = m[k * r + j] - rs.cartan[i][j] * m[k * r + i];
        m = n;
        if (word) word->push_back(i);
        again = true;
        break;
      }
    }
    return m;
  }

  static bool w0_central(const RootSystem& rs) {
    const int r = rs.rank;
    IVec m = longest_coords(rs);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        if (m[i * r + j] != (i == j ? -1 : 0)) return false;
    return true;
  }

 private:
  RootSystem rs_;
  FiniteGroup group_;
  std::vector<IVec> mats_;
  std::unordered_map<IVec, Index, IVecHash> index_;
  std::vector<Index> reflections_;
};

}  // namespace onewtype
