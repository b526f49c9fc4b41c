#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "onewtype/cache.hpp"
#include "onewtype/chartab.hpp"
#include "onewtype/heckemod.hpp"
#include "onewtype/poly.hpp"

#ifndef ONEWTYPE_DATA_DIR
#define ONEWTYPE_DATA_DIR "data"
#endif

namespace onewtype {

inline std::string default_data_dir() {
  if (const char* env = std::getenv("ONEWTYPE_DATA")) return env;
  return ONEWTYPE_DATA_DIR;
}

struct GoldenRow {
  std::string cartan_type;
  int group = 0;
  std::string sigma;
  std::vector<std::pair<std::string, long>> constituents;
  std::string orbit;
  std::optional<std::vector<RationalPoly>> chi;  // coefficients of the fundamental weights
  bool chi_no = false;                           // the table marks the column "no"
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

inline std::vector<std::vector<std::string>> read_tsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    rows.push_back(split(line, '\t'));
  }
  return rows;
}

inline long leading_integer(const std::string& s, std::size_t pos = 0) {
  std::size_t end = pos;
  while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
  if (end == pos) throw std::invalid_argument("expected a number in '" + s + "'");
  return std::stol(s.substr(pos, end - pos));
}

}  // namespace detail

// "560_s" -> 560
inline long label_dimension(const std::string& label) { return detail::leading_integer(label); }

// "(84,12)" -> 84
inline long w_label_dimension(const std::string& label) {
  if (label.empty() || label[0] != '(') throw std::invalid_argument("bad W-type label '" + label + "'");
  return detail::leading_integer(label, 1);
}

// "112_ss+2*560_s+448_s"
inline std::vector<std::pair<std::string, long>> parse_constituents(const std::string& text) {
  std::vector<std::pair<std::string, long>> out;
  for (const auto& term : detail::split(text, '+')) {
    if (term.empty()) throw std::invalid_argument("empty constituent in '" + text + "'");
    long mult = 1;
    std::string label = term;
    if (auto star = term.find('*'); star != std::string::npos) {
      mult = detail::leading_integer(term);
      label = term.substr(star + 1);
    }
    label_dimension(label);
    out.push_back({label, mult});
  }
  return out;
}

inline int spin_module_dimension(const std::string& type) {
  return spin_dimension(static_cast<int>(spin_space_basis(build_root_system(type)).size()));
}

inline std::vector<GoldenRow> load_table(const std::string& type, const std::string& dir = default_data_dir()) {
  std::vector<GoldenRow> out;
  const long ds = spin_module_dimension(type);
  for (const auto& f : detail::read_tsv(dir + "/tables/" + type + ".tsv")) {
    if (f.size() != 5) throw std::runtime_error(type + " table: expected 5 columns");
    GoldenRow r;
    r.cartan_type = type;
    r.group = static_cast<int>(detail::leading_integer(f[0]));
    r.sigma = f[1];
    r.constituents = parse_constituents(f[2]);
    r.orbit = f[3];
    if (f[4] == "no") {
      r.chi_no = true;
    } else if (f[4] != "-") {
      std::vector<RationalPoly> c;
      for (const auto& t : detail::split(f[4], ';')) c.push_back(parse_linear_form(t));
      r.chi = c;
    }
    long total = 0;
    for (const auto& [label, m] : r.constituents) total += m * label_dimension(label);
    if (total != w_label_dimension(r.sigma) * ds)
      throw std::runtime_error(type + " table: dimension identity fails for " + r.sigma);
    out.push_back(r);
  }
  return out;
}

inline std::vector<GoldenRow> load_tables(const std::string& dir = default_data_dir()) {
  std::vector<GoldenRow> out;
  for (auto t : {"G2", "F4", "E6", "E7", "E8"}) {
    auto rows = load_table(t, dir);
    out.insert(out.end(), rows.begin(), rows.end());
  }
  return out;
}

// Character tables of W and W~ with the table labels pinned by data/labels.
class LabelledGroup {
 public:
  LabelledGroup(const std::string& type, const std::string& dir = default_data_dir())
      : W_(std::make_unique<WeylGroup>(build_root_system(type))), cover_(std::make_unique<PinCover>(*W_)) {
    T_ = cached_character_table(W_->group());
    CT_ = cached_character_table(cover_->group());
    const auto& rs = W_->roots();
    variant_ = spin_variants(rs).front();
    spin_ = spin_class_function(*cover_, variant_);
    std::optional<std::size_t> cl_long, cl_short;
    for (std::size_t a = 0; a < rs.num_positive(); ++a)
      (rs.is_long[a] ? cl_long : cl_short) = W_->group().class_of(W_->reflection(a));
    const auto refl = reflection_character(*W_);
    ClassFunction wedge2;
    for (std::size_t c = 0; c < refl.size(); ++c) {
      auto sq = W_->group().power_class(c, 2);
      wedge2.push_back(((refl[c] * refl[c] - refl[sq]) * Cyclotomic(Rational(1, 2))).minimized());
    }
    std::vector<int> b;
    for (const auto& chi : T_.irreps) b.push_back(b_value(*W_, chi));
    for (const auto& f : detail::read_tsv(dir + "/labels/" + type + ".tsv")) {
      if (f[0] == "w") {
        const long d = detail::leading_integer(f[2]), bv = detail::leading_integer(f[3]);
        const std::string& rule = f[4];
        std::vector<std::size_t> cand;
        for (std::size_t i = 0; i < T_.irreps.size(); ++i) {
          if (T_.degree(i) != d || b[i] != bv) continue;
          const auto& chi = T_.irreps[i];
          bool ok = true;
          if (rule == "long>short" || rule == "long<short") {
            if (!cl_long || !cl_short) throw std::runtime_error("rule " + rule + " needs two root lengths");
            Rational l = chi[*cl_long].rational_value(), s = chi[*cl_short].rational_value();
            ok = rule == "long>short" ? l > s : l < s;
          } else if (rule == "wedge2" || rule == "not-wedge2") {
            ok = (chi == wedge2) == (rule == "wedge2");
          } else if (rule != "unique") {
            throw std::runtime_error("unknown W-type rule " + rule);
          }
          if (ok) cand.push_back(i);
        }
        if (cand.size() != 1) throw std::runtime_error(type + " labels: " + f[1] + " matches " + std::to_string(cand.size()) + " characters");
        w_[f[1]] = cand[0];
      } else if (f[0] == "g") {
        const long d = detail::leading_integer(f[2]);
        const std::string& rule = f[3];
        std::set<std::size_t> taken;
        for (const auto& [l, j] : g_) taken.insert(j);
        std::vector<std::size_t> cand;
        std::vector<long> pool(CT_.irreps.size(), 1);
        if (rule == "spin") {
          pool = CT_.decompose(spin_);
        } else if (rule != "rest" && rule != "first") {
          pool = CT_.decompose(spin_tensor_character(T_.irreps[w_.at(rule)], *cover_, variant_));
        }
        for (std::size_t j = 0; j < CT_.irreps.size(); ++j)
          if (pool[j] && CT_.degree(j) == d && is_genuine(CT_.irreps[j], *cover_) && !taken.count(j)) cand.push_back(j);
        if (rule == "first" && !cand.empty()) cand.resize(1);
        if (cand.size() != 1) throw std::runtime_error(type + " labels: " + f[1] + " matches " + std::to_string(cand.size()) + " characters");
        g_[f[1]] = cand[0];
      } else {
        throw std::runtime_error("bad label line kind " + f[0]);
      }
    }
  }

  const WeylGroup& weyl() const { return *W_; }
  const PinCover& cover() const { return *cover_; }
  const CharacterTable& table() const { return T_; }
  const CharacterTable& cover_table() const { return CT_; }
  SpinVariant variant() const { return variant_; }
  const ClassFunction& spin() const { return spin_; }

  std::size_t w_index(const std::string& label) const {
    auto it = w_.find(label);
    if (it == w_.end()) throw std::invalid_argument("unknown W-type " + label);
    return it->second;
  }
  const ClassFunction& w_character(const std::string& label) const { return T_.irreps[w_index(label)]; }
  std::size_t genuine_index(const std::string& label) const {
    auto it = g_.find(label);
    if (it == g_.end()) throw std::invalid_argument("unknown W~-type " + label);
    return it->second;
  }
  std::string genuine_label(std::size_t j) const {
    for (const auto& [l, k] : g_)
      if (k == j) return l;
    return "#" + std::to_string(j) + "(" + std::to_string(CT_.degree(j)) + ")";
  }
  std::vector<std::string> w_labels() const {
    std::vector<std::string> out;
    for (const auto& [l, i] : w_) out.push_back(l);
    return out;
  }

  // sigma x S as (label, multiplicity), sorted by label
  std::vector<std::pair<std::string, long>> decompose_spin(const std::string& sigma) const {
    auto m = CT_.decompose(spin_tensor_character(w_character(sigma), *cover_, variant_));
    std::vector<std::pair<std::string, long>> out;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[j]) out.push_back({genuine_label(j), m[j]});
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::unique_ptr<WeylGroup> W_;
  std::unique_ptr<PinCover> cover_;
  CharacterTable T_, CT_;
  SpinVariant variant_;
  ClassFunction spin_;
  std::map<std::string, std::size_t> w_, g_;
};

// nu = sum_i c_i varpi_i with (varpi_i, alpha_j) = delta_ij
inline std::vector<RationalPoly> nu_polynomial(const RootSystem& rs, const std::vector<RationalPoly>& coeffs) {
  if (static_cast<int>(coeffs.size()) != rs.rank) throw std::invalid_argument("chi needs one coefficient per simple root");
  const auto cw = rs.fundamental_coweights();
  std::vector<RationalPoly> nu(rs.dim);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.dim; ++j)
      if (cw[i][j] != 0) nu[j] += coeffs[i] * RationalPoly(cw[i][j]);
  return nu;
}

inline Vec nu_value(const RootSystem& rs, const std::vector<RationalPoly>& coeffs, const Parameters& k) {
  Vec out;
  for (const auto& p : nu_polynomial(rs, coeffs)) out.push_back(p.evaluate(k.ks, k.kl));
  return out;
}

inline RationalPoly four_nu_squared(const RootSystem& rs, const std::vector<RationalPoly>& coeffs) {
  auto nu = nu_polynomial(rs, coeffs);
  RationalPoly s;
  for (const auto& x : nu) s += x * x;
  return s * RationalPoly(Rational(4));
}

struct RowReport {
  std::string sigma;
  int group = 0;
  bool pass = true;
  std::vector<std::string> notes;
  std::string computed;

  void fail(const std::string& why) {
    pass = false;
    notes.push_back(why);
  }
};

struct TableReport {
  std::string cartan_type;
  std::string mode;
  std::vector<RowReport> rows;

  std::size_t rows_passed() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const RowReport& r) { return r.pass; }));
  }
  std::size_t groups() const {
    std::set<int> g;
    for (const auto& r : rows) g.insert(r.group);
    return g.size();
  }
  std::size_t groups_passed() const {
    std::map<int, bool> g;
    for (const auto& r : rows) g[r.group] = (g.count(r.group) ? g[r.group] : true) && r.pass;
    return static_cast<std::size_t>(std::count_if(g.begin(), g.end(), [](const auto& p) { return p.second; }));
  }
  bool pass() const { return !rows.empty() && rows_passed() == rows.size(); }
  const RowReport* first_mismatch() const {
    for (const auto& r : rows)
      if (!r.pass) return &r;
    return nullptr;
  }
};

inline std::string constituents_string(const std::vector<std::pair<std::string, long>>& c) {
  std::string out;
  for (const auto& [l, m] : c) {
    if (!out.empty()) out += "+";
    if (m != 1) out += std::to_string(m) + "*";
    out += l;
  }
  return out;
}

// Generic unequal parameters used to test the rows marked "no".
inline std::vector<Parameters> sample_unequal_parameters() {
  return {{3, 1}, {Rational(2, 7), 1}, {Rational(5, 3), 2}, {-1, 3}};
}

// Dimension identities and identical constituents within sgn-paired groups.
inline TableReport verify_dims_only(const std::string& type, const std::string& dir = default_data_dir()) {
  TableReport rep{type, "dims-only", {}};
  std::vector<GoldenRow> rows;
  try {
    rows = load_table(type, dir);
  } catch (const std::exception& e) {
    rep.rows.push_back({"", 0, false, {e.what()}, ""});
    return rep;
  }
  const long ds = spin_module_dimension(type);
  std::map<int, std::vector<std::pair<std::string, long>>> group_first;
  for (const auto& r : rows) {
    RowReport rr{r.sigma, r.group, true, {}, constituents_string(r.constituents)};
    long total = 0;
    for (const auto& [l, m] : r.constituents) total += m * label_dimension(l);
    if (total != w_label_dimension(r.sigma) * ds) rr.fail("dimension identity");
    auto sorted = r.constituents;
    std::sort(sorted.begin(), sorted.end());
    auto [it, fresh] = group_first.insert({r.group, sorted});
    if (!fresh && it->second != sorted) rr.fail("paired rows differ");
    rr.notes.push_back(std::to_string(w_label_dimension(r.sigma)) + "*" + std::to_string(ds) + " = " + std::to_string(total));
    rep.rows.push_back(rr);
  }
  return rep;
}

inline TableReport verify_full(const LabelledGroup& L, const std::string& type, const std::string& dir = default_data_dir()) {
  TableReport rep{type, "full", {}};
  const auto rows = load_table(type, dir);
  const WeylGroup& W = L.weyl();
  const RootSystem& rs = W.roots();
  const bool explicit_models = W.size() <= 2000;
  for (const auto& r : rows) {
    RowReport rr{r.sigma, r.group, true, {}, ""};
    try {
      auto got = L.decompose_spin(r.sigma);
      rr.computed = constituents_string(got);
      auto want = r.constituents;
      std::sort(want.begin(), want.end());
      if (got != want) rr.fail("decomposition " + rr.computed + " != " + constituents_string(want));
      // constituents agree at k = 1; a chi entry matches every constituent as a polynomial
      std::vector<CyclotomicPoly> cas;
      for (const auto& [l, m] : got) cas.push_back(casimir_scalar(L.cover_table().irreps[L.genuine_index(l)], L.cover()));
      std::optional<Cyclotomic> cas_one;
      for (const auto& c : cas) {
        auto v = c.evaluate(Cyclotomic(1), Cyclotomic(1));
        if (cas_one && *cas_one != v) rr.fail("constituents have different Casimir scalars at k = 1");
        cas_one = v;
      }
      if (r.chi) {
        auto target = to_cyclotomic(four_nu_squared(rs, *r.chi));
        if (std::any_of(cas.begin(), cas.end(), [&](const auto& c) { return c != target; }))
          rr.fail("4(nu,nu) differs from a constituent Casimir scalar");
        else rr.notes.push_back("4(nu,nu) = " + target.to_string());
      }
      if (explicit_models) {
        auto sigma = split_irrep(W, L.w_character(r.sigma), r.sigma);
        const Parameters one{1, 1};
        if (!commutator_test(sigma, one)) {
          rr.fail("does not extend at k = 1");
        } else {
          auto X = extend_to_hecke(sigma, one);
          if (!verify_star_hermitian(X)) rr.fail("star check fails");
          auto cc = central_character(X);
          if (cas_one && *cas_one != Cyclotomic(Rational(4) * cc.casimir))
            rr.fail("central character at k = 1 disagrees with the Casimir scalar");
          if (r.chi && rs.dominant(nu_value(rs, *r.chi, one)) != cc.nu) rr.fail("central character at k = 1 differs from chi");
        }
        for (const auto& k : sample_unequal_parameters()) {
          bool ext = commutator_test(sigma, k);
          if (r.chi_no && ext) rr.fail("row marked no extends at sampled unequal parameters");
          if (r.chi) {
            if (!ext) {
              rr.fail("does not extend at unequal parameters");
              continue;
            }
            auto cc = central_character(extend_to_hecke(sigma, k));
            if (rs.dominant(nu_value(rs, *r.chi, k)) != cc.nu) rr.fail("central character differs from chi at unequal parameters");
          }
        }
      }
    } catch (const std::exception& e) {
      rr.fail(e.what());
    }
    rep.rows.push_back(rr);
  }
  return rep;
}

}  // namespace onewtype
