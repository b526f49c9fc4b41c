#pragma once

// Finite groups given by a right-multiplication table on generators.
// Element 0 is the identity; indices follow breadth-first order from the
// identity, so the stored word of each element is the shortlex-least one.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace onewtype {

struct ConjugacyClass {
  std::uint32_t rep = 0;
  std::size_t size = 0;
  int order = 1;
  std::vector<int> word;
};

class FiniteGroup {
 public:
  using Index = std::uint32_t;

  FiniteGroup() = default;

  // right[x * ngens + g] = x * gen_g; elements must already be in BFS order.
  FiniteGroup(std::size_t n, int ngens, std::vector<Index> right, std::vector<Index> inverse)
      : n_(n), ngens_(ngens), right_(std::move(right)), inverse_(std::move(inverse)) {
    if (right_.size() != n_ * ngens_ || inverse_.size() != n_) throw std::invalid_argument("group table size mismatch");
    build_tree();
  }

  // Relabels an arbitrary table into BFS order; returns the permutation old -> new.
  static FiniteGroup from_table(std::size_t n, int ngens, const std::vector<Index>& right, Index identity,
                                std::vector<Index>* relabel = nullptr) {
    std::vector<Index> order, pos(n, UINT32_MAX);
    order.reserve(n);
    order.push_back(identity);
    pos[identity] = 0;
    for (std::size_t q = 0; q < order.size(); ++q)
      for (int g = 0; g < ngens; ++g) {
        Index y = right[static_cast<std::size_t>(order[q]) * ngens + g];
        if (pos[y] == UINT32_MAX) {
          pos[y] = static_cast<Index>(order.size());
          order.push_back(y);
        }
      }
    if (order.size() != n) throw std::invalid_argument("generators do not generate the group");
    std::vector<Index> r(n * ngens);
    for (std::size_t i = 0; i < n; ++i)
      for (int g = 0; g < ngens; ++g) r[i * ngens + g] = pos[right[static_cast<std::size_t>(order[i]) * ngens + g]];
    FiniteGroup G;
    G.n_ = n;
    G.ngens_ = ngens;
    G.right_ = std::move(r);
    G.build_tree();
    G.compute_inverses();
    if (relabel) *relabel = pos;
    return G;
  }

  // Closure of generators under multiplication for any hashable element type.
  template <class Elem, class Hash, class Mul>
  static FiniteGroup closure(const Elem& identity, const std::vector<Elem>& gens, Mul mul, std::size_t max_order,
                             std::vector<Elem>* elements = nullptr) {
    std::vector<Elem> elems{identity};
    std::unordered_map<Elem, Index, Hash> index{{identity, 0}};
    std::vector<Index> right;
    for (std::size_t q = 0; q < elems.size(); ++q)
      for (const auto& g : gens) {
        Elem y = mul(elems[q], g);
        auto it = index.find(y);
        if (it == index.end()) {
          if (elems.size() >= max_order) throw std::length_error("group order exceeds gate");
          it = index.emplace(y, static_cast<Index>(elems.size())).first;
          elems.push_back(std::move(y));
        }
        right.push_back(it->second);
      }
    FiniteGroup G;
    G.n_ = elems.size();
    G.ngens_ = static_cast<int>(gens.size());
    G.right_ = std::move(right);
    G.build_tree();
    G.compute_inverses();
    if (elements) *elements = std::move(elems);
    return G;
  }

  std::size_t size() const { return n_; }
  int ngens() const { return ngens_; }
  Index right(Index x, int g) const { return right_[static_cast<std::size_t>(x) * ngens_ + g]; }
  Index inverse(Index x) const { return inverse_[x]; }
  Index generator(int g) const { return right(0, g); }

  std::vector<int> word(Index x) const {
    std::vector<int> w;
    while (x != 0) {
      w.push_back(parent_gen_[x]);
      x = parent_[x];
    }
    std::reverse(w.begin(), w.end());
    return w;
  }
  std::size_t length(Index x) const { return depth_[x]; }
  Index parent(Index x) const { return parent_[x]; }
  int parent_gen(Index x) const { return parent_gen_[x]; }

  Index mul(Index x, Index y) const {
    for (int g : word(y)) x = right(x, g);
    return x;
  }
  Index from_word(const std::vector<int>& w) const {
    Index x = 0;
    for (int g : w) x = right(x, g);
    return x;
  }
  Index power(Index x, long k) const {
    if (k < 0) return power(inverse(x), -k);
    Index r = 0, b = x;
    while (k) {
      if (k & 1) r = mul(r, b);
      b = mul(b, b);
      k >>= 1;
    }
    return r;
  }
  // g^{-1} x g for generator g
  Index conj_by_gen(Index x, int g) const { return inverse(right(inverse(right(x, g)), g)); }
  Index conj(Index x, Index y) const { return mul(mul(inverse(y), x), y); }

  int element_order(Index x) const {
    int o = 1;
    for (Index y = x; y != 0; y = mul(y, x)) ++o;
    return o;
  }

  long exponent() const {
    ensure_classes();
    long e = 1;
    for (const auto& c : classes_) e = std::lcm(e, static_cast<long>(c.order));
    return e;
  }

  const std::vector<ConjugacyClass>& classes() const {
    ensure_classes();
    return classes_;
  }
  std::size_t class_of(Index x) const {
    ensure_classes();
    return class_of_[x];
  }
  std::size_t num_classes() const { return classes().size(); }

  // Class of the k-th power of class c.
  std::size_t power_class(std::size_t c, long k) const {
    ensure_classes();
    return class_of_[power(classes_[c].rep, k)];
  }
  std::size_t inverse_class(std::size_t c) const { return power_class(c, -1); }

  std::vector<Index> class_members(std::size_t c) const {
    ensure_classes();
    std::vector<Index> out;
    for (Index x = 0; x < n_; ++x)
      if (class_of_[x] == c) out.push_back(x);
    return out;
  }

 private:
  void build_tree() {
    parent_.assign(n_, 0);
    parent_gen_.assign(n_, -1);
    depth_.assign(n_, 0);
    std::vector<bool> seen(n_, false);
    seen[0] = true;
    std::vector<Index> queue{0};
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (int g = 0; g < ngens_; ++g) {
        Index y = right(queue[q], g);
        if (seen[y]) continue;
        seen[y] = true;
        parent_[y] = queue[q];
        parent_gen_[y] = g;
        depth_[y] = depth_[queue[q]] + 1;
        queue.push_back(y);
      }
    if (queue.size() != n_) throw std::invalid_argument("generators do not generate the group");
  }

  void compute_inverses() {
    std::vector<int> gorder(ngens_);
    for (int g = 0; g < ngens_; ++g) {
      int o = 1;
      for (Index y = right(0, g); y != 0; y = right(y, g)) ++o;
      gorder[g] = o;
    }
    inverse_.assign(n_, 0);
    for (Index x = 0; x < n_; ++x) {
      auto w = word(x);
      Index y = 0;
      for (auto it = w.rbegin(); it != w.rend(); ++it)
        for (int t = 0; t < gorder[*it] - 1; ++t) y = right(y, *it);
      inverse_[x] = y;
    }
  }

  void ensure_classes() const {
    if (!class_of_.empty()) return;
    const std::size_t none = SIZE_MAX;
    std::vector<std::size_t> cls(n_, none);
    std::vector<ConjugacyClass> raw;
    for (Index x = 0; x < n_; ++x) {
      if (cls[x] != none) continue;
      std::size_t id = raw.size();
      std::vector<Index> orbit{x};
      cls[x] = id;
      for (std::size_t q = 0; q < orbit.size(); ++q)
        for (int g = 0; g < ngens_; ++g) {
          Index y = conj_by_gen(orbit[q], g);
          if (cls[y] == none) {
            cls[y] = id;
            orbit.push_back(y);
          }
        }
      ConjugacyClass c;
      c.rep = x;  // smallest BFS index, hence shortlex-least word
      c.size = orbit.size();
      c.order = element_order(x);
      c.word = word(x);
      raw.push_back(std::move(c));
    }
    std::vector<std::size_t> perm(raw.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      const auto& A = raw[a];
      const auto& B = raw[b];
      return std::make_tuple(A.order, A.size, A.word.size(), A.word) <
             std::make_tuple(B.order, B.size, B.word.size(), B.word);
    });
    std::vector<std::size_t> where(raw.size());
    classes_.clear();
    for (std::size_t k = 0; k < perm.size(); ++k) {
      where[perm[k]] = k;
      classes_.push_back(raw[perm[k]]);
    }
    class_of_.resize(n_);
    for (Index x = 0; x < n_; ++x) class_of_[x] = where[cls[x]];
  }

  std::size_t n_ = 0;
  int ngens_ = 0;
  std::vector<Index> right_, inverse_, parent_;
  std::vector<int> parent_gen_;
  std::vector<std::uint32_t> depth_;
  mutable std::vector<ConjugacyClass> classes_;
  mutable std::vector<std::size_t> class_of_;
};

}  // namespace onewtype
