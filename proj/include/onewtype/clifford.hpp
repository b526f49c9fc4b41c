#pragma once

// Clifford algebra of a Euclidean space, the pin double cover of a Weyl group,
// and spin modules with their characters.
//
// Monomials e_A are indexed by bitmasks over an orthonormal basis, with
// e_i e_i = -1 and e_A = e_{a1} ... e_{ak} for a1 < ... < ak.

#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "onewtype/cyclotomic.hpp"
#include "onewtype/group.hpp"
#include "onewtype/matrix.hpp"
#include "onewtype/rootsystem.hpp"

namespace onewtype {

using Mask = std::uint32_t;

// Sign of e_A e_B = sign * e_{A xor B}.
inline int monomial_sign(Mask a, Mask b) {
  int swaps = 0;
  for (Mask t = b; t; t &= t - 1) {
    int j = std::countr_zero(t);
    swaps += std::popcount(a >> (j + 1));
  }
  swaps += std::popcount(a & b);
  return (swaps & 1) ? -1 : 1;
}

// (e_A)^t = sign * e_A for the anti-involution with v^t = -v.
inline int transpose_sign(Mask a) {
  int k = std::popcount(a);
  return ((k * (k + 1) / 2) & 1) ? -1 : 1;
}

template <class T>
class CliffordElement {
 public:
  CliffordElement() = default;
  explicit CliffordElement(int dim) : dim_(dim) {}

  static CliffordElement scalar(int dim, const T& c) {
    CliffordElement x(dim);
    x.add(0, c);
    return x;
  }
  static CliffordElement basis(int dim, int i) {
    CliffordElement x(dim);
    x.add(Mask(1) << i, T(1));
    return x;
  }
  template <class U>
  static CliffordElement vector(const std::vector<U>& v) {
    CliffordElement x(static_cast<int>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) x.add(Mask(1) << i, T(v[i]));
    return x;
  }

  int dim() const { return dim_; }
  const std::map<Mask, T>& terms() const { return terms_; }
  T coefficient(Mask a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? T(0) : it->second;
  }
  T scalar_part() const { return coefficient(0); }

  void add(Mask a, const T& c) {
    if (scalar_is_zero(c)) return;
    auto it = terms_.find(a);
    if (it == terms_.end()) {
      terms_.emplace(a, c);
      return;
    }
    it->second += c;
    if (scalar_is_zero(it->second)) terms_.erase(it);
  }

  CliffordElement& operator+=(const CliffordElement& o) {
    for (const auto& [a, c] : o.terms_) add(a, c);
    return *this;
  }
  CliffordElement& operator-=(const CliffordElement& o) {
    for (const auto& [a, c] : o.terms_) add(a, -c);
    return *this;
  }
  CliffordElement& operator*=(const T& s) {
    CliffordElement r(dim_);
    for (const auto& [a, c] : terms_) r.add(a, c * s);
    return *this = r;
  }
  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
  friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
  friend CliffordElement operator*(CliffordElement a, const T& s) { return a *= s; }
  CliffordElement operator-() const { return *this * T(-1); }

  friend CliffordElement operator*(const CliffordElement& x, const CliffordElement& y) {
    if (x.dim_ != y.dim_) throw std::invalid_argument("clifford product: dimension mismatch");
    CliffordElement r(x.dim_);
    for (const auto& [a, ca] : x.terms_)
      for (const auto& [b, cb] : y.terms_) r.add(a ^ b, T(monomial_sign(a, b)) * ca * cb);
    return r;
  }

  friend bool operator==(const CliffordElement& x, const CliffordElement& y) {
    return x.dim_ == y.dim_ && (x - y).terms_.empty();
  }
  friend bool operator!=(const CliffordElement& x, const CliffordElement& y) { return !(x == y); }

  CliffordElement transpose() const {
    CliffordElement r(dim_);
    for (const auto& [a, c] : terms_) r.add(a, T(transpose_sign(a)) * c);
    return r;
  }
  // Grading automorphism: +1 on even, -1 on odd monomials.
  CliffordElement epsilon() const {
    CliffordElement r(dim_);
    for (const auto& [a, c] : terms_) r.add(a, (std::popcount(a) & 1) ? -c : c);
    return r;
  }
  bool is_vector() const {
    for (const auto& [a, c] : terms_)
      if (std::popcount(a) != 1) return false;
    return true;
  }
  bool is_homogeneous() const {
    int parity = -1;
    for (const auto& [a, c] : terms_) {
      int p = std::popcount(a) & 1;
      if (parity >= 0 && p != parity) return false;
      parity = p;
    }
    return true;
  }

 private:
  int dim_ = 0;
  std::map<Mask, T> terms_;
};

using CliffordCyc = CliffordElement<Cyclotomic>;

inline Cyclotomic norm_of(const Vec& v) { return Cyclotomic::sqrt(dot(v, v)); }

// The pin lift alpha/|alpha| of a reflection.
inline CliffordCyc lift_reflection(const RootSystem& rs, std::size_t a) {
  return CliffordCyc::vector(rs.positive_ambient[a]) * norm_of(rs.positive_ambient[a]).inverse();
}

// p(x)(v) = epsilon(x) v x^{-1} for a pin element x (x^{-1} = x^t)
inline CliffordCyc pin_action(const CliffordCyc& x, const CliffordCyc& v) { return x.epsilon() * v * x.transpose(); }

namespace detail {

// Dense integer multivectors: primitive integer representatives of pin elements
// up to a positive scalar.
struct IntClifford {
  int dim = 0;
  std::vector<std::int8_t> sign;  // sign[a << dim | b]

  explicit IntClifford(int d) : dim(d), sign(std::size_t(1) << (2 * d)) {
    for (Mask a = 0; a < (Mask(1) << d); ++a)
      for (Mask b = 0; b < (Mask(1) << d); ++b) sign[(std::size_t(a) << d) | b] = static_cast<std::int8_t>(monomial_sign(a, b));
  }
  std::size_t size() const { return std::size_t(1) << dim; }

  // x * v for a vector v (integer coordinates)
  std::vector<long long> mul_vector(const std::vector<long long>& x, const std::vector<long long>& v) const {
    std::vector<long long> r(size(), 0);
    for (Mask a = 0; a < size(); ++a) {
      if (!x[a]) continue;
      for (int i = 0; i < dim; ++i) {
        if (!v[i]) continue;
        Mask b = Mask(1) << i;
        r[a ^ b] += sign[(std::size_t(a) << dim) | b] * x[a] * v[i];
      }
    }
    return r;
  }
  std::vector<long long> mul(const std::vector<long long>& x, const std::vector<long long>& y) const {
    std::vector<long long> r(size(), 0);
    for (Mask a = 0; a < size(); ++a) {
      if (!x[a]) continue;
      for (Mask b = 0; b < size(); ++b)
        if (y[b]) r[a ^ b] += sign[(std::size_t(a) << dim) | b] * x[a] * y[b];
    }
    return r;
  }
  static int lead_sign(const std::vector<long long>& x) {
    for (long long c : x)
      if (c) return c > 0 ? 1 : -1;
    return 0;
  }
  static void reduce(std::vector<long long>& x) {
    long long g = 0;
    for (long long c : x) g = std::gcd(g, c < 0 ? -c : c);
    if (g == 0) throw std::logic_error("zero multivector");
    for (auto& c : x) c /= g;
  }
  // Divide by the positive gcd and fix the leading coefficient positive; returns the sign removed.
  static int canonicalize(std::vector<long long>& x) {
    long long g = 0;
    for (long long c : x) g = std::gcd(g, c < 0 ? -c : c);
    int s = lead_sign(x);
    if (g == 0) throw std::logic_error("zero multivector");
    for (auto& c : x) c = c / g * s;
    return s;
  }
  std::vector<long long> transpose(std::vector<long long> x) const {
    for (Mask a = 0; a < size(); ++a) x[a] *= transpose_sign(a);
    return x;
  }
};

inline long long ambient_scale(const RootSystem& rs) {
  long long s = 1;
  for (const auto& v : rs.simple)
    for (const auto& c : v) s = std::lcm(s, static_cast<long long>(c.get_den().get_si()));
  return s;
}

inline std::vector<long long> integer_vector(const Vec& v, long long scale) {
  std::vector<long long> out;
  for (const auto& c : v) out.push_back(to_long(c * static_cast<long>(scale)));
  return out;
}

}  // namespace detail

// The double cover W~ = p^{-1}(W) inside Pin(V). Element indices follow the
// breadth-first order of the generators s~_i = alpha_i/|alpha_i|.
class PinCover {
 public:
  using Index = FiniteGroup::Index;

  explicit PinCover(const WeylGroup& W) : W_(&W), cl_(W.roots().dim) {
    const RootSystem& rs = W.roots();
    const FiniteGroup& G = W.group();
    const int r = rs.rank;
    const std::size_t n = G.size();
    scale_ = detail::ambient_scale(rs);
    for (int i = 0; i < r; ++i) gens_.push_back(detail::integer_vector(rs.simple[i], scale_));

    // old index 2w+b stands for (-1)^b c_w with c_w the canonical lift.
    std::vector<Index> table(2 * n * r);
    std::vector<std::vector<long long>> value(n);
    std::vector<int> remaining(n, 0);
    for (Index w = 1; w < n; ++w) ++remaining[G.parent(w)];
    value[0].assign(cl_.size(), 0);
    value[0][0] = 1;
    for (Index w = 0; w < n; ++w) {
      if (w != 0) {
        Index p = G.parent(w);
        value[w] = cl_.mul_vector(value[p], gens_[G.parent_gen(w)]);
        detail::IntClifford::canonicalize(value[w]);
        if (--remaining[p] == 0) std::vector<long long>().swap(value[p]);
      }
      const auto& x = value[w];
      for (int i = 0; i < r; ++i) {
        int s = detail::IntClifford::lead_sign(cl_.mul_vector(x, gens_[i]));
        Index ws = G.right(w, i);
        for (int b = 0; b < 2; ++b) table[(2 * std::size_t(w) + b) * r + i] = 2 * ws + (b ^ (s < 0 ? 1 : 0));
      }
      if (remaining[w] == 0) std::vector<long long>().swap(value[w]);
    }
    std::vector<Index> relabel;
    group_ = FiniteGroup::from_table(2 * n, r, table, 0, &relabel);
    proj_.assign(2 * n, 0);
    bit_.assign(2 * n, 0);
    new_of_.assign(2 * n, 0);
    for (Index old = 0; old < 2 * n; ++old) {
      proj_[relabel[old]] = old / 2;
      bit_[relabel[old]] = old % 2;
      new_of_[old] = relabel[old];
    }
    z_ = new_of_[1];
  }

  const WeylGroup& weyl() const { return *W_; }
  const FiniteGroup& group() const { return group_; }
  std::size_t size() const { return group_.size(); }
  Index z() const { return z_; }
  Index project(Index x) const { return proj_[x]; }
  // canonical lift c_w (positive leading coefficient); z * c_w is the other preimage
  Index lift(Index w) const { return new_of_[2 * std::size_t(w)]; }
  bool is_canonical(Index x) const { return bit_[x] == 0; }
  Index times_z(Index x) const { return new_of_[2 * std::size_t(proj_[x]) + (1 - bit_[x])]; }

  // s~_alpha = alpha/|alpha|
  Index reflection_lift(std::size_t a) const {
    const Vec& v = W_->roots().positive_ambient[a];
    int lead = 0;
    for (const auto& c : v)
      if (c != 0) {
        lead = c > 0 ? 1 : -1;
        break;
      }
    return new_of_[2 * std::size_t(W_->reflection(a)) + (lead < 0 ? 1 : 0)];
  }

  // Primitive integer multivector proportional (positive factor) to the element.
  std::vector<long long> integer_value(Index x) const {
    std::vector<long long> v(cl_.size(), 0);
    v[0] = 1;
    for (int g : group_.word(x)) {
      v = cl_.mul_vector(v, gens_[g]);
      detail::IntClifford::reduce(v);
    }
    return v;
  }

  // Exact Clifford element of the pin element.
  CliffordCyc value(Index x) const {
    const RootSystem& rs = W_->roots();
    CliffordCyc c = CliffordCyc::scalar(rs.dim, Cyclotomic(1));
    for (int g : group_.word(x)) c = c * lift_reflection(rs, rs.find_positive(rs.unit(g)));
    return c;
  }

  const detail::IntClifford& integer_algebra() const { return cl_; }
  long long scale() const { return scale_; }

 private:
  const WeylGroup* W_;
  detail::IntClifford cl_;
  long long scale_ = 1;
  std::vector<std::vector<long long>> gens_;
  FiniteGroup group_;
  std::vector<Index> proj_, new_of_;
  std::vector<std::uint8_t> bit_;
  Index z_ = 0;
};

enum class SpinVariant { unique, plus, minus };

inline std::string to_string(SpinVariant v) {
  switch (v) {
    case SpinVariant::plus: return "+";
    case SpinVariant::minus: return "-";
    default: return "";
  }
}

// Orthogonal basis of the space whose Clifford algebra carries the spin module.
// Type A uses the ambient R^n (the sum-zero hyperplane plus its normal line);
// all other types use V = span of the simple roots.
inline std::vector<Vec> spin_space_basis(const RootSystem& rs) {
  if (rs.family == 'A') {
    std::vector<Vec> out;
    for (int i = 0; i < rs.dim; ++i) {
      Vec e(rs.dim, Rational(0));
      e[i] = 1;
      out.push_back(e);
    }
    return out;
  }
  return rs.orthogonal_basis();
}

inline int spin_dimension(int space_dim) { return 1 << (space_dim / 2); }

// Scalar by which the volume element acts on S^+ for odd dimension d.
inline Cyclotomic volume_scalar(int d) { return (d % 4 == 3) ? Cyclotomic(1) : Cyclotomic::i(); }

class SpinModule {
 public:
  SpinModule(const RootSystem& rs, SpinVariant variant) : rs_(&rs), basis_(spin_space_basis(rs)), variant_(variant) {
    const int d = static_cast<int>(basis_.size());
    if ((d % 2 == 1) != (variant != SpinVariant::unique))
      throw std::invalid_argument("spin variant does not match the parity of the dimension");
    const int m = d / 2;
    using M = Matrix<Cyclotomic>;
    const Cyclotomic I = Cyclotomic::i();
    M id2 = M::identity(2), X(2, 2), Y(2, 2), Z(2, 2);
    X(0, 1) = X(1, 0) = Cyclotomic(1);
    Y(0, 1) = -I;
    Y(1, 0) = I;
    Z(0, 0) = Cyclotomic(1);
    Z(1, 1) = Cyclotomic(-1);
    auto string = [&](int j, const M& mid) {
      M out = M::identity(1);
      for (int t = 0; t < m; ++t) out = kron(out, t < j ? Z : (t == j ? mid : id2));
      return out;
    };
    for (int j = 0; j < m; ++j) {
      gamma_.push_back(string(j, X * I));
      gamma_.push_back(string(j, Y * I));
    }
    if (d % 2 == 1) {
      M chirality = M::identity(1);
      for (int t = 0; t < m; ++t) chirality = kron(chirality, Z);
      gamma_.push_back(chirality * I);
      M vol = M::identity(1 << m);
      for (const auto& g : gamma_) vol = vol * g;
      Cyclotomic want = volume_scalar(d) * Cyclotomic(variant == SpinVariant::plus ? 1 : -1);
      if (vol(0, 0) != want) gamma_.back() = -gamma_.back();
    }
    for (const auto& u : basis_) inv_len_.push_back(norm_of(u).inverse());
  }

  int space_dim() const { return static_cast<int>(basis_.size()); }
  int dimension() const { return 1 << (space_dim() / 2); }
  SpinVariant variant() const { return variant_; }
  const std::vector<Vec>& basis() const { return basis_; }
  // gamma matrices of the orthonormal basis u_k/|u_k|
  const std::vector<Matrix<Cyclotomic>>& gammas() const { return gamma_; }

  Matrix<Cyclotomic> vector_action(const Vec& v) const {
    Matrix<Cyclotomic> out(dimension(), dimension());
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      Rational c = dot(v, basis_[k]);
      if (c != 0) out += gamma_[k] * (Cyclotomic(c) * inv_len_[k]);
    }
    return out;
  }

  Matrix<Cyclotomic> action(const PinCover& cover, FiniteGroup::Index x) const {
    std::vector<Matrix<Cyclotomic>> gens;
    for (int i = 0; i < rs_->rank; ++i)
      gens.push_back(vector_action(rs_->simple[i]) * norm_of(rs_->simple[i]).inverse());
    Matrix<Cyclotomic> out = Matrix<Cyclotomic>::identity(dimension());
    for (int g : cover.group().word(x)) out = out * gens[g];
    return out;
  }

 private:
  const RootSystem* rs_;
  std::vector<Vec> basis_;
  SpinVariant variant_;
  std::vector<Matrix<Cyclotomic>> gamma_;
  std::vector<Cyclotomic> inv_len_;
};

// Character of a spin module at a cover element, from the scalar and volume
// components of its Clifford value.
inline Cyclotomic spin_character(const PinCover& cover, SpinVariant variant, FiniteGroup::Index x) {
  const RootSystem& rs = cover.weyl().roots();
  const auto basis = spin_space_basis(rs);
  const int d = static_cast<int>(basis.size());
  if ((d % 2 == 1) != (variant != SpinVariant::unique))
    throw std::invalid_argument("spin variant does not match the parity of the dimension");
  const auto& cl = cover.integer_algebra();
  auto n = cover.integer_value(x);
  long long N = 0;
  for (long long c : n) N += c * c;
  Cyclotomic inv_sqrt_n = Cyclotomic::sqrt(Rational(static_cast<long>(N))).inverse();
  Cyclotomic a = Cyclotomic(Rational(static_cast<long>(n[0]))) * inv_sqrt_n;
  if (d % 2 == 0) return Cyclotomic(1L << (d / 2)) * a;
  std::vector<long long> U(cl.size(), 0);
  U[0] = 1;
  Rational norm2 = 1;
  for (const auto& u : basis) {
    long long s = 1;
    for (const auto& c : u) s = std::lcm(s, static_cast<long long>(c.get_den().get_si()));
    auto iu = detail::integer_vector(u, s);
    U = cl.mul_vector(U, iu);
    long long q = 0;
    for (long long c : iu) q += c * c;
    norm2 *= static_cast<long>(q);
  }
  auto Ut = cl.transpose(U);
  long long sp = 0;
  for (Mask A = 0; A < cl.size(); ++A) sp += n[A] * Ut[A] * monomial_sign(A, A);
  Cyclotomic b = Cyclotomic(Rational(static_cast<long>(sp))) * inv_sqrt_n * Cyclotomic::sqrt(norm2).inverse();
  Cyclotomic c = volume_scalar(d) * Cyclotomic(variant == SpinVariant::plus ? 1 : -1);
  return Cyclotomic(1L << ((d - 1) / 2)) * (a + c * b);
}

inline std::vector<SpinVariant> spin_variants(const RootSystem& rs) {
  if (spin_space_basis(rs).size() % 2 == 0) return {SpinVariant::unique};
  return {SpinVariant::plus, SpinVariant::minus};
}

}  // namespace onewtype
