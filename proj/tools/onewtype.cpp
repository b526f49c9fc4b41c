#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "onewtype/catalog.hpp"
#include "onewtype/orbits.hpp"

using namespace onewtype;
using json = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, mismatch = 1, invalid = 2, gate = 3 };

struct GateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string cyc(const Rational& q) { return Cyclotomic(q).to_string(); }

json vec_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(cyc(x));
  return a;
}

std::string tuple_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

Rational parse_param(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad parameter value " + s);
  }
}

bool is_exceptional(const std::string& type) { return type == "G2" || type == "F4" || type == "E6" || type == "E7" || type == "E8"; }

void require_long(const std::string& type, bool long_run) {
  if (type == "E6" && !long_run) throw GateError("E6 cover computations need --long");
  if (type == "E7" || type == "E8") throw GateError(type + " exceeds the group-order gate");
}

// "2,1x1" -> ((2,1),(1)); an empty side is written "" or "0"
Bipartition parse_bipartition(const std::string& text) {
  auto x = text.find('x');
  if (x == std::string::npos) throw std::invalid_argument("bipartition needs the form L x R: " + text);
  auto side = [](const std::string& t) { return t.empty() || t == "0" ? Partition{} : parse_partition(t); };
  return {side(text.substr(0, x)), side(text.substr(x + 1))};
}

WRepresentation classical_irrep(const WeylGroup& W, const std::string& label) {
  const auto& rs = W.roots();
  if (rs.family == 'A') {
    auto lam = parse_partition(label);
    if (size_of(lam) != rs.rank + 1) throw std::invalid_argument("partition size must be rank + 1");
    return sn_irrep(W, lam);
  }
  if (rs.family == 'B' || rs.family == 'C') {
    auto b = parse_bipartition(label);
    if (b.size() != rs.rank) throw std::invalid_argument("bipartition size must equal the rank");
    return bn_irrep(W, b);
  }
  throw std::invalid_argument("sigma labels are supported for types A, B, C, G2, F4, E6");
}

std::string genuine_name(const CharacterTable& CT, std::size_t j) {
  return "#" + std::to_string(j) + "(" + std::to_string(CT.degree(j)) + ")";
}

int cmd_roots(const std::string& type) {
  auto rs = build_root_system(type);
  json j;
  j["type"] = rs.name;
  j["rank"] = rs.rank;
  j["simple_roots"] = json::array();
  for (const auto& v : rs.simple) j["simple_roots"].push_back(vec_json(v));
  j["positive_roots"] = json::array();
  j["coroots"] = json::array();
  for (std::size_t a = 0; a < rs.num_positive(); ++a) {
    j["positive_roots"].push_back(vec_json(rs.positive_ambient[a]));
    j["coroots"].push_back(vec_json(rs.coroot(a)));
  }
  j["fundamental_weights"] = json::array();
  for (const auto& v : rs.fundamental_weights()) j["fundamental_weights"].push_back(vec_json(v));
  auto g = rs.gram();
  j["inner_product"] = json::array();
  for (std::size_t r = 0; r < g.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < g.cols(); ++c) row.push_back(cyc(g(r, c)));
    j["inner_product"].push_back(row);
  }
  std::cout << j.dump(2) << "\n";
  return ok;
}

void print_words(const std::vector<int>& w) {
  for (std::size_t i = 0; i < w.size(); ++i) std::cout << (i ? "," : "") << w[i] + 1;
  if (w.empty()) std::cout << "e";
}

int cmd_weyl_classes(const std::string& type) {
  WeylGroup W(build_root_system(type));
  std::cout << "class\tsize\torder\tword\n";
  const auto& cls = W.group().classes();
  for (std::size_t c = 0; c < cls.size(); ++c) {
    std::cout << c << "\t" << cls[c].size << "\t" << cls[c].order << "\t";
    print_words(cls[c].word);
    std::cout << "\n";
  }
  return ok;
}

void print_table(const CharacterTable& T) {
  std::cout << "class";
  for (std::size_t c = 0; c < T.num_classes(); ++c) std::cout << "\t" << c;
  std::cout << "\nsize";
  for (auto s : T.class_sizes) std::cout << "\t" << s;
  std::cout << "\norder";
  for (auto o : T.class_orders) std::cout << "\t" << o;
  std::cout << "\n";
  for (std::size_t i = 0; i < T.irreps.size(); ++i) {
    std::cout << "chi" << i;
    for (const auto& v : T.irreps[i]) std::cout << "\t" << v.to_string();
    std::cout << "\n";
  }
}

int cmd_chartab(const std::string& type, bool cover, bool long_run) {
  WeylGroup W(build_root_system(type));
  if (!cover) {
    print_table(cached_character_table(W.group()));
    return ok;
  }
  require_long(type, long_run);
  PinCover C(W);
  print_table(cached_character_table(C.group()));
  return ok;
}

int cmd_pin_cover(const std::string& type) {
  WeylGroup W(build_root_system(type));
  PinCover C(W);
  json j;
  j["type"] = W.roots().name;
  j["order"] = C.size();
  j["classes"] = C.group().num_classes();
  if (C.size() <= kDefaultGroupGate) {
    auto CT = cached_character_table(C.group());
    std::vector<long> dims;
    for (std::size_t i = 0; i < CT.irreps.size(); ++i)
      if (is_genuine(CT.irreps[i], C)) dims.push_back(CT.degree(i));
    std::sort(dims.begin(), dims.end());
    j["genuine_dimensions"] = dims;
  }
  std::cout << j.dump(2) << "\n";
  return ok;
}

SpinVariant parse_variant(const RootSystem& rs, const std::string& v) {
  auto vs = spin_variants(rs);
  if (v.empty()) return vs.front();
  if (vs.size() == 1) throw std::invalid_argument("this type has a single spin module");
  if (v == "+" || v == "plus") return SpinVariant::plus;
  if (v == "-" || v == "minus") return SpinVariant::minus;
  throw std::invalid_argument("variant must be + or -");
}

int cmd_decompose_spin(const std::string& type, const std::string& sigma, const std::string& variant, bool long_run) {
  json j;
  j["type"] = type;
  j["sigma"] = sigma;
  j["constituents"] = json::array();
  if (is_exceptional(type)) {
    require_long(type, long_run);
    LabelledGroup L(type);
    if (!variant.empty() && parse_variant(L.weyl().roots(), variant) != L.variant())
      throw std::invalid_argument("exceptional labels refer to the first spin module");
    for (const auto& [label, m] : L.decompose_spin(sigma)) j["constituents"].push_back({{"label", label}, {"mult", m}});
  } else {
    WeylGroup W(build_root_system(type));
    auto rep = classical_irrep(W, sigma);
    auto v = parse_variant(W.roots(), variant);
    PinCover C(W);
    auto CT = cached_character_table(C.group());
    auto m = CT.decompose(spin_tensor_character(rep.character(), C, v));
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) j["constituents"].push_back({{"label", genuine_name(CT, i)}, {"mult", m[i]}});
  }
  std::cout << j.dump(2) << "\n";
  return ok;
}

int cmd_one_wtype(const std::string& family, int rank, const Rational& ks, const Rational& kl) {
  const std::string type = family + std::to_string(rank);
  WeylGroup W(build_root_system(type));
  const Parameters k{ks, kl};
  json j;
  j["type"] = W.roots().name;
  j["ks"] = ks.get_str();
  j["kl"] = kl.get_str();
  j["candidates"] = json::array();
  auto emit = [&](const std::string& label, const WRepresentation& rep, const json& orbit) {
    json c{{"sigma", label}, {"dimension", rep.dimension()}};
    c["extends"] = commutator_test(rep, k);
    if (c["extends"]) c["central_character"] = tuple_string(central_character(extend_to_hecke(rep, k)).nu);
    if (!orbit.is_null()) c["orbit"] = orbit;
    j["candidates"].push_back(c);
  };
  if (family == "A") {
    if (ks != kl) throw std::invalid_argument("type A has a single parameter; pass equal --ks and --kl");
    for (const auto& lam : type_a_candidates(rank + 1)) {
      int d = lam.empty() ? 0 : lam[0], m = static_cast<int>(lam.size());
      emit(to_string(lam), sn_irrep(W, lam), type_a_orbit(hook_partition(d, m)).to_string());
    }
  } else if (family == "B" || family == "C") {
    for (const auto& b : type_b_candidates(rank, ks, kl)) emit(to_string(b), bn_irrep(W, b), json());
  } else {
    throw std::invalid_argument("one-wtype enumerates types A and B; use one-wtype-build for G2 and F4");
  }
  std::cout << j.dump(2) << "\n";
  return ok;
}

int cmd_one_wtype_build(const std::string& type, const std::string& sigma, const Rational& ks, const Rational& kl) {
  const Parameters k{ks, kl};
  json j;
  j["type"] = type;
  j["sigma"] = sigma;
  j["ks"] = ks.get_str();
  j["kl"] = kl.get_str();
  std::unique_ptr<LabelledGroup> L;
  std::unique_ptr<WeylGroup> Wc;
  std::unique_ptr<PinCover> Cc;
  CharacterTable CTc;
  const WeylGroup* W;
  const PinCover* C;
  const CharacterTable* CT;
  std::optional<WRepresentation> rep;
  if (is_exceptional(type)) {
    if (type != "G2" && type != "F4") throw GateError("explicit modules are built for G2 and F4 only");
    L = std::make_unique<LabelledGroup>(type);
    W = &L->weyl();
    C = &L->cover();
    CT = &L->cover_table();
    rep = split_irrep(*W, L->w_character(sigma), sigma);
  } else {
    Wc = std::make_unique<WeylGroup>(build_root_system(type));
    Cc = std::make_unique<PinCover>(*Wc);
    CTc = cached_character_table(Cc->group());
    W = Wc.get();
    C = Cc.get();
    CT = &CTc;
    rep = classical_irrep(*W, sigma);
  }
  auto cert = certify_module(*rep, k, *C, *CT);
  j["extends"] = cert.extends;
  if (cert.extends) {
    j["central_character"] = tuple_string(cert.central.nu);
    j["nu_squared"] = cert.central.casimir.get_str();
    j["dirac_zero"] = cert.dirac_zero;
    j["kernel_image_zero"] = cert.kernel_image_zero;
    j["star_hermitian"] = cert.star_hermitian;
    j["casimir_consistent"] = cert.casimir_consistent;
    j["cohomology_is_full"] = cert.cohomology_is_full;
    j["dirac_cohomology"] = json::array();
    for (const auto& [v, mult] : cert.cohomology) {
      json h{{"spin_module", to_string(v).empty() ? "S" : "S" + to_string(v)}, {"constituents", json::array()}};
      for (std::size_t i = 0; i < mult.size(); ++i)
        if (mult[i]) h["constituents"].push_back({{"label", L ? L->genuine_label(i) : genuine_name(*CT, i)}, {"mult", mult[i]}});
      j["dirac_cohomology"].push_back(h);
    }
  }
  std::cout << j.dump(2) << "\n";
  return !cert.extends || cert.pass() ? ok : mismatch;
}

int cmd_central_character(const std::string& type, const std::string& lambda, const Rational& ks, const Rational& kl) {
  auto lam = parse_partition(lambda);
  if (type == "B" || type == "C") {
    std::cout << tuple_string(specialize(central_character_tableau(lam), ks, kl)) << "\n";
  } else if (type == "A") {
    if (!is_rectangle(lam) || lam.empty()) throw std::invalid_argument("type A one-W-types are rectangles");
    if (ks != kl) throw std::invalid_argument("type A has a single parameter; pass equal --ks and --kl");
    Vec nu = identcc(type_a_orbit(hook_partition(lam[0], static_cast<int>(lam.size()))));
    for (auto& x : nu) x *= kl;
    std::cout << tuple_string(nu) << "\n";
  } else {
    throw std::invalid_argument("central-character supports types A and B");
  }
  return ok;
}

int cmd_verify_table(const std::string& type, bool full, bool dims_only, bool long_run) {
  if (full == dims_only) throw std::invalid_argument("pass exactly one of --full and --dims-only");
  if (!is_exceptional(type)) throw std::invalid_argument("tables exist for G2, F4, E6, E7, E8");
  TableReport rep;
  if (dims_only) {
    rep = verify_dims_only(type);
  } else {
    if (type == "E7" || type == "E8") throw std::invalid_argument(type + " tables are verified with --dims-only");
    require_long(type, long_run);
    LabelledGroup L(type);
    rep = verify_full(L, type);
  }
  json j;
  j["type"] = type;
  j["mode"] = rep.mode;
  j["rows"] = rep.rows.size();
  j["rows_passed"] = rep.rows_passed();
  j["groups"] = rep.groups();
  j["groups_passed"] = rep.groups_passed();
  j["pass"] = rep.pass();
  if (auto* bad = rep.first_mismatch()) j["first_mismatch"] = {{"sigma", bad->sigma}, {"reasons", bad->notes}};
  j["details"] = json::array();
  for (const auto& r : rep.rows)
    j["details"].push_back({{"group", r.group}, {"sigma", r.sigma}, {"pass", r.pass}, {"computed", r.computed}, {"notes", r.notes}});
  std::cout << j.dump(2) << "\n";
  return rep.pass() ? ok : mismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"one-W-type Hecke modules and Dirac cohomology"};
  app.require_subcommand(1);
  std::string type, sigma, variant, lambda, ks_text = "1", kl_text = "1";
  int rank = 0;
  bool cover = false, full = false, dims_only = false, long_run = false;

  auto* roots = app.add_subcommand("roots", "root system data as JSON");
  roots->add_option("type", type)->required();
  auto* classes = app.add_subcommand("weyl-classes", "conjugacy classes of W as TSV");
  classes->add_option("type", type)->required();
  auto* chartab = app.add_subcommand("chartab", "character table as TSV");
  chartab->add_option("type", type)->required();
  chartab->add_flag("--cover", cover, "table of the pin cover");
  chartab->add_flag("--long", long_run, "allow long computations");
  auto* pin = app.add_subcommand("pin-cover", "order, classes and genuine dimensions of the pin cover");
  pin->add_option("type", type)->required();
  auto* dec = app.add_subcommand("decompose-spin", "constituents of sigma x S");
  dec->add_option("type", type)->required();
  dec->add_option("--sigma", sigma)->required();
  dec->add_option("--variant", variant, "+ or - in odd dimension");
  dec->add_flag("--long", long_run, "allow long computations");
  auto* one = app.add_subcommand("one-wtype", "candidate one-W-types with central characters");
  one->add_option("family", type)->required();
  one->add_option("rank", rank)->required()->check(CLI::Range(1, 6));
  one->add_option("--ks", ks_text);
  one->add_option("--kl", kl_text);
  auto* build = app.add_subcommand("one-wtype-build", "build and certify the module on one W-type");
  build->add_option("--type", type)->required();
  build->add_option("--sigma", sigma)->required();
  build->add_option("--ks", ks_text);
  build->add_option("--kl", kl_text);
  auto* cc = app.add_subcommand("central-character", "central character from the combinatorial rule");
  cc->add_option("--type", type)->required();
  cc->add_option("--lambda", lambda)->required();
  cc->add_option("--ks", ks_text);
  cc->add_option("--kl", kl_text);
  auto* vt = app.add_subcommand("verify-table", "check a golden table");
  vt->add_option("type", type)->required();
  vt->add_flag("--full", full);
  vt->add_flag("--dims-only", dims_only);
  vt->add_flag("--long", long_run, "allow long computations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : invalid;
  }

  try {
    const Rational ks = parse_param(ks_text), kl = parse_param(kl_text);
    if (*roots) return cmd_roots(type);
    if (*classes) return cmd_weyl_classes(type);
    if (*chartab) return cmd_chartab(type, cover, long_run);
    if (*pin) return cmd_pin_cover(type);
    if (*dec) return cmd_decompose_spin(type, sigma, variant, long_run);
    if (*one) return cmd_one_wtype(type, rank, ks, kl);
    if (*build) return cmd_one_wtype_build(type, sigma, ks, kl);
    if (*cc) return cmd_central_character(type, lambda, ks, kl);
    if (*vt) return cmd_verify_table(type, full, dims_only, long_run);
  } catch (const GateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return gate;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return gate;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return invalid;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return invalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return mismatch;
  }
  return invalid;
}
