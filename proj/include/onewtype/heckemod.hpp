#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "onewtype/chartab.hpp"
#include "onewtype/clifford.hpp"
#include "onewtype/combinat.hpp"
#include "onewtype/matrix.hpp"
#include "onewtype/rootsystem.hpp"

namespace onewtype {

using RMatrix = Matrix<Rational>;
using CMatrix = Matrix<Cyclotomic>;

struct Parameters {
  Rational ks = 1;
  Rational kl = 1;
  Rational of(const RootSystem& rs, std::size_t a) const { return rs.is_long[a] ? kl : ks; }
};

template <class T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
  return hstack(a.transpose(), b.transpose()).transpose();
}

// Positive definite check by symmetric Gaussian elimination.
inline bool is_positive_definite(RMatrix m) {
  const std::size_t n = m.rows();
  if (m != m.transpose()) return false;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational f = m(i, k) / m(k, k);
      if (f == 0) continue;
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return true;
}

// A representation of W by rational matrices on the simple reflections,
// unitary for a positive definite invariant form.
class WRepresentation {
 public:
  using Index = FiniteGroup::Index;

  WRepresentation(const WeylGroup& W, std::string label, std::vector<RMatrix> generators, RMatrix form)
      : W_(&W), label_(std::move(label)), gens_(std::move(generators)), form_(std::move(form)) {
    if (static_cast<int>(gens_.size()) != W.roots().rank) throw std::invalid_argument("wrong number of generators");
    form_inv_ = inverse(form_);
    for (Index x : W.reflections()) reflections_.push_back(element(x));
  }

  const WeylGroup& weyl() const { return *W_; }
  const std::string& label() const { return label_; }
  std::size_t dimension() const { return form_.rows(); }
  const std::vector<RMatrix>& generators() const { return gens_; }
  const RMatrix& form() const { return form_; }
  const RMatrix& reflection_image(std::size_t a) const { return reflections_[a]; }

  RMatrix element(Index x) const {
    RMatrix m = RMatrix::identity(dimension());
    for (int g : W_->group().word(x)) m = m * gens_[g];
    return m;
  }

  // Adjoint for the invariant form.
  RMatrix adjoint(const RMatrix& a) const { return form_inv_ * a.transpose() * form_; }

  ClassFunction character() const {
    ClassFunction out;
    for (const auto& c : W_->group().classes()) out.push_back(Cyclotomic(element(c.rep).trace()));
    return out;
  }

  bool satisfies_coxeter_relations() const {
    const int r = W_->roots().rank;
    const RMatrix id = RMatrix::identity(dimension());
    for (int i = 0; i < r; ++i)
      for (int j = i; j < r; ++j) {
        RMatrix p = gens_[i] * gens_[j], q = id;
        for (int t = 0; t < W_->roots().coxeter_m(i, j); ++t) q = q * p;
        if (q != id) return false;
      }
    return true;
  }

  bool is_unitary() const {
    if (!is_positive_definite(form_)) return false;
    for (const auto& g : gens_)
      if (g.transpose() * form_ * g != form_) return false;
    return true;
  }

 private:
  const WeylGroup* W_;
  std::string label_;
  std::vector<RMatrix> gens_;
  RMatrix form_, form_inv_;
  std::vector<RMatrix> reflections_;
};

namespace detail {

// Young's seminormal form of S_n on standard tableaux, s_i exchanging i and i + 1.
struct Seminormal {
  std::vector<RMatrix> gens;
  RMatrix form;
};

inline Seminormal seminormal(const Partition& lam) {
  const int n = size_of(lam);
  using Pos = std::vector<std::pair<int, int>>;
  std::vector<Pos> tableaux;
  Pos cur;
  std::vector<int> len(lam.size(), 0);
  auto fill = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == n) {
      tableaux.push_back(cur);
      return;
    }
    for (std::size_t r = 0; r < lam.size(); ++r) {
      if (len[r] >= lam[r] || (r > 0 && len[r] >= len[r - 1])) continue;
      cur.push_back({static_cast<int>(r), len[r]});
      ++len[r];
      self(self);
      --len[r];
      cur.pop_back();
    }
  };
  fill(fill);
  std::map<Pos, std::size_t> index;
  for (std::size_t j = 0; j < tableaux.size(); ++j) index[tableaux[j]] = j;
  const std::size_t dim = tableaux.size();
  Seminormal out;
  // factor[i][j]: ratio g(s_i T_j) / g(T_j) when s_i T_j is standard
  std::vector<std::vector<std::pair<std::size_t, Rational>>> links(dim);
  for (int i = 0; i + 1 < n; ++i) {
    RMatrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      const Pos& t = tableaux[j];
      auto [r1, c1] = t[i];
      auto [r2, c2] = t[i + 1];
      if (r1 == r2) {
        m(j, j) = 1;
      } else if (c1 == c2) {
        m(j, j) = -1;
      } else {
        Rational a = Rational(1) / Rational((c2 - r2) - (c1 - r1));
        Pos s = t;
        std::swap(s[i], s[i + 1]);
        std::size_t k = index.at(s);
        m(j, j) = a;
        if (r2 > r1) {
          m(k, j) = 1;
          links[j].push_back({k, 1 - a * a});
        } else {
          m(k, j) = 1 - a * a;
          links[j].push_back({k, 1 / (1 - a * a)});
        }
      }
    }
    out.gens.push_back(m);
  }
  std::vector<std::optional<Rational>> g(dim);
  g[0] = Rational(1);
  std::vector<std::size_t> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    std::size_t j = queue[q];
    for (auto [k, f] : links[j])
      if (!g[k]) {
        g[k] = *g[j] * f;
        queue.push_back(k);
      }
  }
  out.form = RMatrix(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    if (!g[j]) throw std::logic_error("seminormal form: tableau graph is disconnected");
    out.form(j, j) = *g[j];
  }
  return out;
}

// Matrix of the permutation j -> p[j] from the generator images.
inline RMatrix permutation_image(const Seminormal& s, std::vector<int> p) {
  RMatrix m = RMatrix::identity(s.form.rows());
  std::vector<int> word;
  for (bool again = true; again;) {
    again = false;
    for (std::size_t j = 0; j + 1 < p.size(); ++j)
      if (p[j] > p[j + 1]) {
        std::swap(p[j], p[j + 1]);
        word.push_back(static_cast<int>(j));
        again = true;
        break;
      }
  }
  for (auto it = word.rbegin(); it != word.rend(); ++it) m = m * s.gens[*it];
  return m;
}

struct SignedImage {
  int target;
  int sign;
};

}  // namespace detail

inline WRepresentation trivial_representation(const WeylGroup& W) {
  return WRepresentation(W, "triv", std::vector<RMatrix>(W.roots().rank, RMatrix::identity(1)), RMatrix::identity(1));
}

inline WRepresentation sign_representation(const WeylGroup& W) {
  return WRepresentation(W, "sgn", std::vector<RMatrix>(W.roots().rank, -RMatrix::identity(1)), RMatrix::identity(1));
}

inline WRepresentation sn_irrep(const WeylGroup& W, const Partition& lam) {
  if (W.roots().family != 'A' || size_of(lam) != W.roots().rank + 1 || !is_partition(lam))
    throw std::invalid_argument("partition does not label an irreducible representation of this Weyl group");
  auto s = detail::seminormal(lam);
  return WRepresentation(W, to_string(lam), s.gens, s.form);
}

// (L x R): induced from W(B_a) x W(B_b), sign changes acting trivially on the
// first factor and by -1 on the second.
inline WRepresentation bn_irrep(const WeylGroup& W, const Bipartition& b) {
  const char f = W.roots().family;
  const int n = W.roots().rank;
  if ((f != 'B' && f != 'C') || b.size() != n || !is_partition(b.left) || !is_partition(b.right))
    throw std::invalid_argument("bipartition does not label an irreducible representation of this Weyl group");
  const int a = size_of(b.left);
  const auto L = detail::seminormal(b.left), R = detail::seminormal(b.right);
  const std::size_t dl = L.form.rows(), dr = R.form.rows(), block = dl * dr;
  std::vector<std::vector<int>> subsets;
  {
    std::vector<int> sel(n, 0);
    std::fill(sel.begin(), sel.begin() + a, 1);
    do {
      std::vector<int> s;
      for (int j = 0; j < n; ++j)
        if (sel[j]) s.push_back(j);
      subsets.push_back(s);
    } while (std::prev_permutation(sel.begin(), sel.end()));
  }
  std::map<std::vector<int>, std::size_t> subset_index;
  for (std::size_t t = 0; t < subsets.size(); ++t) subset_index[subsets[t]] = t;
  // coset representative: first block onto A, second block onto the complement, increasing
  auto coset = [&](const std::vector<int>& A) {
    std::vector<int> g;
    std::vector<bool> in(n, false);
    for (int j : A) {
      g.push_back(j);
      in[j] = true;
    }
    for (int j = 0; j < n; ++j)
      if (!in[j]) g.push_back(j);
    return g;
  };
  const std::size_t dim = subsets.size() * block;
  std::vector<RMatrix> gens;
  for (int i = 0; i < n; ++i) {
    std::vector<detail::SignedImage> w(n);
    for (int j = 0; j < n; ++j) w[j] = {j, 1};
    if (i + 1 < n)
      std::swap(w[i].target, w[i + 1].target);
    else
      w[i].sign = -1;
    RMatrix m(dim, dim);
    for (std::size_t t = 0; t < subsets.size(); ++t) {
      auto gA = coset(subsets[t]);
      std::vector<int> A2;
      for (int j : subsets[t]) A2.push_back(w[j].target);
      std::sort(A2.begin(), A2.end());
      const std::size_t t2 = subset_index.at(A2);
      auto gA2 = coset(A2);
      std::vector<int> inv(n);
      for (int j = 0; j < n; ++j) inv[gA2[j]] = j;
      std::vector<int> pl(a), pr(n - a);
      int sign = 1;
      for (int j = 0; j < n; ++j) {
        auto img = w[gA[j]];
        int h = inv[img.target];
        if (j < a) {
          pl[j] = h;
        } else {
          pr[j - a] = h - a;
          sign *= img.sign;
        }
      }
      RMatrix blk = kron(detail::permutation_image(L, pl), detail::permutation_image(R, pr)) * Rational(sign);
      for (std::size_t r = 0; r < block; ++r)
        for (std::size_t c = 0; c < block; ++c) m(t2 * block + r, t * block + c) = blk(r, c);
    }
    gens.push_back(m);
  }
  RMatrix form(dim, dim), gf = kron(L.form, R.form);
  for (std::size_t t = 0; t < subsets.size(); ++t)
    for (std::size_t r = 0; r < block; ++r)
      for (std::size_t c = 0; c < block; ++c) form(t * block + r, t * block + c) = gf(r, c);
  return WRepresentation(W, to_string(b), gens, form);
}

// Irreducible constituent of the regular representation cut out by e_chi e_psi,
// with psi a linear character of a parabolic subgroup occurring once in chi.
inline WRepresentation split_irrep(const WeylGroup& W, const ClassFunction& chi, const std::string& label) {
  using Index = FiniteGroup::Index;
  const FiniteGroup& G = W.group();
  const int r = W.roots().rank;
  if (!chi[0].is_rational()) throw std::invalid_argument("character degree is not rational");
  const long d = to_long(chi[0].rational_value());
  for (const auto& v : chi)
    if (!v.is_rational()) throw std::invalid_argument("split_irrep needs a rational character");
  std::vector<Rational> chi_q;
  for (const auto& v : chi) chi_q.push_back(v.rational_value());

  // parabolic subgroup W_J with sign character psi
  std::vector<Index> h_elems;
  std::vector<int> h_sign;
  bool found = false;
  for (unsigned J = 0; J < (1u << r) && !found; ++J) {
    for (unsigned S = 0; S < (1u << r) && !found; ++S) {
      if (S & ~J) continue;
      bool consistent = true;
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
          if ((J >> i & 1) && (J >> j & 1) && W.roots().coxeter_m(i, j) % 2 == 1 && ((S >> i & 1) != (S >> j & 1)))
            consistent = false;
      if (!consistent) continue;
      std::vector<Index> elems{0};
      std::vector<int> sign{1};
      std::vector<int> seen(G.size(), 0);
      seen[0] = 1;
      for (std::size_t q = 0; q < elems.size(); ++q)
        for (int g = 0; g < r; ++g) {
          if (!(J >> g & 1)) continue;
          Index y = G.right(elems[q], g);
          if (seen[y]) continue;
          seen[y] = 1;
          elems.push_back(y);
          sign.push_back(sign[q] * ((S >> g & 1) ? -1 : 1));
        }
      Rational m = 0;
      for (std::size_t q = 0; q < elems.size(); ++q) m += chi_q[G.class_of(elems[q])] * sign[q];
      m /= static_cast<long>(elems.size());
      if (m == 1) {
        h_elems = elems;
        h_sign = sign;
        found = true;
      }
    }
  }
  if (!found) throw std::runtime_error("no parabolic character of multiplicity one for " + label);

  // f = sum_g chi(g^-1) g * sum_h psi(h) h
  const std::size_t n = G.size();
  std::vector<Rational> f(n, Rational(0));
  for (Index g = 0; g < n; ++g) {
    const Rational& c = chi_q[G.class_of(G.inverse(g))];
    if (c == 0) continue;
    for (std::size_t q = 0; q < h_elems.size(); ++q) f[G.mul(g, h_elems[q])] += c * h_sign[q];
  }
  std::vector<Index> support;
  for (Index y = 0; y < n; ++y)
    if (f[y] != 0) support.push_back(y);
  auto translate = [&](Index x) {
    std::vector<Rational> v(n, Rational(0));
    for (Index y : support) v[G.mul(x, y)] = f[y];
    return v;
  };

  // basis x_j f with echelon bookkeeping
  std::vector<Index> xs;
  std::vector<std::vector<Rational>> basis, echelon;
  std::vector<std::size_t> pivots;
  for (Index x = 0; x < n && static_cast<long>(basis.size()) < d; ++x) {
    auto v = translate(x);
    auto e = v;
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      if (e[pivots[k]] == 0) continue;
      Rational c = e[pivots[k]] / echelon[k][pivots[k]];
      for (std::size_t y = 0; y < n; ++y)
        if (echelon[k][y] != 0) e[y] -= c * echelon[k][y];
    }
    std::size_t p = 0;
    while (p < n && e[p] == 0) ++p;
    if (p == n) continue;
    xs.push_back(x);
    basis.push_back(std::move(v));
    echelon.push_back(std::move(e));
    pivots.push_back(p);
  }
  if (static_cast<long>(basis.size()) != d) throw std::logic_error("split_irrep: submodule has the wrong dimension");
  const std::size_t dim = basis.size();
  RMatrix Bp(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) Bp(i, j) = basis[j][pivots[i]];
  const RMatrix Bp_inv = inverse(Bp);
  std::vector<RMatrix> gens;
  for (int g = 0; g < r; ++g) {
    RMatrix img(dim, dim);
    const Index s = G.generator(g);
    for (std::size_t j = 0; j < dim; ++j) {
      // (s x_j f)(y) = f((s x_j)^-1 y)
      const Index sx_inv = G.inverse(G.mul(s, xs[j]));
      for (std::size_t i = 0; i < dim; ++i) img(i, j) = f[G.mul(sx_inv, pivots[i])];
    }
    gens.push_back(Bp_inv * img);
  }
  RMatrix form(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j) {
      Rational s = 0;
      for (std::size_t y = 0; y < n; ++y)
        if (basis[i][y] != 0 && basis[j][y] != 0) s += basis[i][y] * basis[j][y];
      form(i, j) = form(j, i) = s;
    }
  return WRepresentation(W, label, gens, form);
}

// Trace of w on V.
inline ClassFunction reflection_character(const WeylGroup& W) {
  const int r = W.roots().rank;
  ClassFunction out;
  for (const auto& c : W.group().classes()) {
    long t = 0;
    for (int i = 0; i < r; ++i) t += W.coords_matrix(c.rep)[i * r + i];
    out.push_back(Cyclotomic(t));
  }
  return out;
}

// dim Hom_W[sigma x refl, sigma]
inline long refl_tensor_mult(const ClassFunction& chi, const CharacterTable& table, const ClassFunction& refl) {
  return table.multiplicity(CharacterTable::product(chi, refl), chi);
}

// Character of sigma x S on the cover.
inline ClassFunction spin_tensor_character(const ClassFunction& chi, const PinCover& cover, SpinVariant variant) {
  return CharacterTable::product(inflate(chi, cover), spin_class_function(cover, variant));
}

// p_omega = 1/2 sum_{a > 0} k_a <omega, a^vee> s_a
inline RMatrix p_omega(const WRepresentation& sigma, const Vec& omega, const Parameters& k) {
  const RootSystem& rs = sigma.weyl().roots();
  RMatrix out(sigma.dimension(), sigma.dimension());
  for (std::size_t a = 0; a < rs.num_positive(); ++a) {
    Rational c = k.of(rs, a) * dot(rs.positive_ambient[a], omega) / rs.norm2[a];
    if (c != 0) out += sigma.reflection_image(a) * c;
  }
  return out;
}

inline bool commutator_test(const WRepresentation& sigma, const Parameters& k) {
  const RootSystem& rs = sigma.weyl().roots();
  std::vector<RMatrix> p;
  for (int i = 0; i < rs.rank; ++i) p.push_back(p_omega(sigma, rs.simple[i], k));
  for (int i = 0; i < rs.rank; ++i)
    for (int j = i + 1; j < rs.rank; ++j)
      if (p[i] * p[j] != p[j] * p[i]) return false;
  return true;
}

// Coordinates in the simple roots of the orthogonal projection of v onto V.
inline Vec simple_coordinates(const RootSystem& rs, const Vec& v) {
  RMatrix rhs(rs.rank, 1);
  for (int i = 0; i < rs.rank; ++i) rhs(i, 0) = dot(rs.simple[i], v);
  auto c = solve(rs.gram(), rhs);
  Vec out;
  for (int i = 0; i < rs.rank; ++i) out.push_back((*c)(i, 0));
  return out;
}

struct OneWTypeModule {
  const WRepresentation* sigma = nullptr;
  Parameters k;
  std::vector<RMatrix> omega;  // images of the simple roots

  RMatrix pi(const Vec& v) const {
    const RootSystem& rs = sigma->weyl().roots();
    Vec c = simple_coordinates(rs, v);
    RMatrix out(sigma->dimension(), sigma->dimension());
    for (int i = 0; i < rs.rank; ++i)
      if (c[i] != 0) out += omega[i] * c[i];
    return out;
  }

  RMatrix omega_tilde(const Vec& v) const { return pi(v) - p_omega(*sigma, v, k); }
};

// Relations of the graded Hecke algebra with t_w -> sigma(w), and omega~ = 0.
inline bool check_hecke_relations(const OneWTypeModule& X) {
  const WRepresentation& s = *X.sigma;
  const RootSystem& rs = s.weyl().roots();
  const RMatrix id = RMatrix::identity(s.dimension());
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) {
      if (X.omega[i] * X.omega[j] != X.omega[j] * X.omega[i]) return false;
      const std::size_t ai = rs.find_positive(rs.unit(i));
      const Vec& w = rs.simple[j];
      Rational pair = 2 * dot(w, rs.simple[i]) / rs.norm2[ai];
      RMatrix lhs = X.pi(w) * s.generators()[i] - s.generators()[i] * X.pi(rs.reflect(w, ai));
      if (lhs != id * (X.k.of(rs, ai) * pair)) return false;
    }
  for (int i = 0; i < rs.rank; ++i)
    if (!X.omega_tilde(rs.simple[i]).is_zero()) return false;
  return true;
}

inline OneWTypeModule extend_to_hecke(const WRepresentation& sigma, const Parameters& k) {
  if (!commutator_test(sigma, k))
    throw std::invalid_argument("the operators p_omega do not commute on " + sigma.label());
  const RootSystem& rs = sigma.weyl().roots();
  OneWTypeModule X{&sigma, k, {}};
  for (int i = 0; i < rs.rank; ++i) X.omega.push_back(p_omega(sigma, rs.simple[i], k));
  if (!check_hecke_relations(X)) throw std::logic_error("Hecke relations fail on " + sigma.label());
  return X;
}

// pi(omega)^dagger = pi(omega^*) with omega^* = -t_{w0} w0(omega) t_{w0}.
inline bool verify_star_hermitian(const OneWTypeModule& X) {
  const WRepresentation& s = *X.sigma;
  if (!s.is_unitary()) return false;
  const WeylGroup& W = s.weyl();
  const RootSystem& rs = W.roots();
  const auto w0 = W.longest_element();
  const RMatrix t = s.element(w0);
  for (int i = 0; i < rs.rank; ++i) {
    RMatrix star = -(t * X.pi(W.act_ambient(w0, rs.simple[i])) * t);
    if (s.adjoint(X.pi(rs.simple[i])) != star) return false;
  }
  return true;
}

struct DiracData {
  CMatrix op;
  CMatrix kernel;
  CMatrix kernel_image;
  std::size_t dimension = 0;
  std::size_t kernel_dim() const { return kernel.cols(); }
  std::size_t kernel_image_dim() const { return kernel_image.cols(); }
};

// D = sum_j omega~(f_j) x gamma(f_j) for the orthonormal basis f_j = sum_k R_jk u_k/|u_k|.
inline DiracData dirac_operator(const OneWTypeModule& X, const SpinModule& S, const RMatrix* rotation = nullptr) {
  const auto& basis = S.basis();
  const std::size_t m = basis.size();
  const RMatrix R = rotation ? *rotation : RMatrix::identity(m);
  if (R.rows() != m || R * R.transpose() != RMatrix::identity(m)) throw std::invalid_argument("rotation is not orthogonal");
  std::vector<CMatrix> tilde;
  for (const auto& u : basis) tilde.push_back(CMatrix::convert(X.omega_tilde(u)) * norm_of(u).inverse());
  const std::size_t dx = X.sigma->dimension(), ds = S.dimension();
  DiracData out;
  out.dimension = dx * ds;
  out.op = CMatrix(dx * ds, dx * ds);
  for (std::size_t j = 0; j < m; ++j) {
    CMatrix a(dx, dx), g(ds, ds);
    for (std::size_t k = 0; k < m; ++k) {
      if (R(j, k) == 0) continue;
      a += tilde[k] * Cyclotomic(R(j, k));
      g += S.gammas()[k] * Cyclotomic(R(j, k));
    }
    out.op += kron(a, g);
  }
  out.kernel = kernel(out.op);
  CMatrix im = image(out.op);
  out.kernel_image = (out.kernel.cols() && im.cols()) ? intersect(out.kernel, im) : CMatrix(out.dimension, 0);
  return out;
}

// W~-character of ker D / (ker D cap im D).
inline ClassFunction cohomology_character(const OneWTypeModule& X, const SpinModule& S, const PinCover& cover,
                                          const DiracData& D) {
  ClassFunction out;
  for (const auto& c : cover.group().classes()) {
    CMatrix g = kron(CMatrix::convert(X.sigma->element(cover.project(c.rep))), S.action(cover, c.rep));
    Cyclotomic t = restricted_trace(g, D.kernel);
    if (D.kernel_image_dim()) t -= restricted_trace(g, D.kernel_image);
    out.push_back(t.minimized());
  }
  return out;
}

struct CentralCharacter {
  Vec nu;                                        // dominant representative
  std::vector<std::pair<Vec, std::size_t>> weights;  // generalized weights with multiplicities
  Rational casimir;                              // (nu, nu)
};

namespace detail {

inline Rational rationalize(double x, long max_den = 100000) {
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double y = x;
  for (int it = 0; it < 64; ++it) {
    double a = std::floor(y);
    long ai = static_cast<long>(a);
    long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
    if (std::abs(x - static_cast<double>(h1) / static_cast<double>(k1)) < 1e-9 * (1 + std::abs(x))) break;
    double frac = y - a;
    if (frac < 1e-12) break;
    y = 1 / frac;
  }
  return Rational(h1) / Rational(k1);
}

inline RMatrix power(const RMatrix& a, std::size_t e) {
  RMatrix out = RMatrix::identity(a.rows()), b = a;
  for (; e; e >>= 1) {
    if (e & 1) out = out * b;
    b = b * b;
  }
  return out;
}

inline std::optional<std::vector<std::pair<Rational, RMatrix>>> spectral_split(const RMatrix& A) {
  const std::size_t n = A.rows();
  Eigen::MatrixXd M(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) M(i, j) = A(i, j).get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> es(M, false);
  std::vector<std::complex<double>> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);
  for (const auto& e : ev)
    if (std::abs(e.imag()) > 1e-3 * (1 + std::abs(e.real()))) throw std::runtime_error("central character: non-real eigenvalue");
  std::sort(ev.begin(), ev.end(), [](auto a, auto b) { return a.real() < b.real(); });
  std::vector<std::pair<Rational, std::size_t>> clusters;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    double sum = 0;
    while (j < n && std::abs(ev[j].real() - ev[i].real()) < 1e-3 * (1 + std::abs(ev[i].real()))) sum += ev[j++].real();
    clusters.push_back({rationalize(sum / static_cast<double>(j - i)), j - i});
    i = j;
  }
  std::vector<std::pair<Rational, RMatrix>> out;
  std::size_t total = 0;
  for (auto [lam, mult] : clusters) {
    RMatrix E = kernel(power(A - RMatrix::identity(n) * lam, mult));
    if (E.cols() != mult) return std::nullopt;
    total += mult;
    out.push_back({lam, E});
  }
  if (total != n) return std::nullopt;
  return out;
}

}  // namespace detail

// Joint generalized spectrum of pi(alpha_i), certified exactly.
inline CentralCharacter central_character(const OneWTypeModule& X) {
  const RootSystem& rs = X.sigma->weyl().roots();
  const std::size_t n = X.sigma->dimension();
  const auto coweights = rs.fundamental_coweights();
  static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  for (int attempt = 0; attempt < 6; ++attempt) {
    RMatrix A(n, n);
    for (int i = 0; i < rs.rank; ++i) A += X.omega[i] * Rational(primes[(i + attempt * 3) % 16] + attempt * (i + 1) * 97);
    auto split = detail::spectral_split(A);
    if (!split) continue;
    CentralCharacter out;
    bool ok = true;
    for (const auto& [lam, E] : *split) {
      Vec c;
      for (int i = 0; i < rs.rank && ok; ++i) {
        auto restricted = solve(E, X.omega[i] * E);
        if (!restricted) throw std::logic_error("central character: generalized eigenspace is not invariant");
        Rational ci = restricted->trace() / static_cast<long>(E.cols());
        if (!detail::power(*restricted - RMatrix::identity(E.cols()) * ci, E.cols()).is_zero()) ok = false;
        c.push_back(ci);
      }
      if (!ok) break;
      Vec nu(rs.dim, Rational(0));
      for (int i = 0; i < rs.rank; ++i) nu = axpy(c[i], coweights[i], nu);
      out.weights.push_back({nu, E.cols()});
    }
    if (!ok) continue;
    out.nu = rs.dominant(out.weights.front().first);
    for (const auto& [w, m] : out.weights)
      if (rs.dominant(w) != out.nu) throw std::logic_error("central character: weights lie in different orbits");
    out.casimir = dot(out.nu, out.nu);
    RMatrix omega2(n, n);
    for (const auto& u : rs.orthogonal_basis()) {
      RMatrix p = X.pi(u);
      omega2 += p * p * (Rational(1) / dot(u, u));
    }
    if (omega2 != RMatrix::identity(n) * out.casimir) throw std::logic_error("central character: Casimir is not scalar");
    return out;
  }
  throw std::runtime_error("central character: spectrum could not be certified over the rationals");
}

struct ModuleCertificate {
  bool extends = false;
  bool star_hermitian = false;
  bool dirac_zero = true;
  bool kernel_image_zero = true;
  bool cohomology_is_full = true;
  bool casimir_consistent = true;
  CentralCharacter central;
  std::vector<std::pair<SpinVariant, std::vector<long>>> cohomology;  // multiplicities over the cover table

  bool pass() const {
    return extends && star_hermitian && dirac_zero && kernel_image_zero && cohomology_is_full && casimir_consistent;
  }
};

// Builds the one-W-type module on sigma (if it exists) and checks D = 0, H^D = X x S and 4(nu,nu) = Casimir.
inline ModuleCertificate certify_module(const WRepresentation& sigma, const Parameters& k, const PinCover& cover,
                                        const CharacterTable& cover_table) {
  ModuleCertificate out;
  if (!commutator_test(sigma, k)) return out;
  out.extends = true;
  const auto X = extend_to_hecke(sigma, k);
  out.star_hermitian = verify_star_hermitian(X);
  out.central = central_character(X);
  const auto& rs = sigma.weyl().roots();
  for (auto v : spin_variants(rs)) {
    SpinModule S(rs, v);
    auto D = dirac_operator(X, S);
    out.dirac_zero = out.dirac_zero && D.op.is_zero();
    out.kernel_image_zero = out.kernel_image_zero && D.kernel_image_dim() == 0;
    auto H = cohomology_character(X, S, cover, D);
    out.cohomology_is_full = out.cohomology_is_full && H == spin_tensor_character(sigma.character(), cover, v);
    auto mult = cover_table.decompose(H);
    for (std::size_t j = 0; j < mult.size(); ++j)
      if (mult[j] && casimir_scalar(cover_table.irreps[j], cover).evaluate(Cyclotomic(k.ks), Cyclotomic(k.kl)) !=
                         Cyclotomic(Rational(4) * out.central.casimir))
        out.casimir_consistent = false;
    out.cohomology.push_back({v, mult});
  }
  return out;
}

}  // namespace onewtype
