// Command line front end: verification, reduction, even-set decomposition,
// constructions, Boolean function checks, code enumerators and search.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fsd/boolfn.hpp"
#include "fsd/codes.hpp"
#include "fsd/constructions.hpp"
#include "fsd/duality.hpp"
#include "fsd/evenset.hpp"
#include "fsd/oddfield.hpp"
#include "fsd/search.hpp"
#include "fsd/serialize.hpp"

using namespace fsd;

namespace {

struct GlobalOpts {
  std::string format = "text";
  int threads = 1;
  bool verify_exact = true;
};

std::vector<std::vector<long>> parse_matrix_json(const std::string &text) {
  auto j = nlohmann::json::parse(text);
  std::vector<std::vector<long>> m;
  for (const auto &row : j) m.push_back(row.get<std::vector<long>>());
  return m;
}

Pairing load_pairing(const Group &g, const std::string &spec) {
  if (spec == "standard") return standard_pairing(g);
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("cannot open pairing file: " + spec);
  std::stringstream buf;
  buf << in.rdbuf();
  Pairing p(g, parse_matrix_json(buf.str()));
  if (!p.is_well_defined())
    throw std::invalid_argument("pairing matrix is not well defined on " +
                                g.to_string());
  return p;
}

std::string matrix_json(const std::vector<std::vector<long>> &m) {
  return nlohmann::json(m).dump();
}

// bundle format, one entry per line: group, pairing matrix, set literal
struct Bundle {
  Group group;
  Pairing pairing;
  SetInGroup set;
};

void emit_bundle(std::ostream &os, const Pairing &p, const SetInGroup &s) {
  os << "group: " << p.group().to_string() << "\n";
  os << "pairing: " << matrix_json(p.matrix()) << "\n";
  os << "set: " << s.to_string() << "\n";
}

Bundle read_bundle(std::istream &in) {
  std::string gline, pline, sline;
  auto field = [](const std::string &line, const char *key) {
    std::string prefix = std::string(key) + ":";
    if (line.rfind(prefix, 0) != 0)
      throw std::invalid_argument("bundle line must start with '" + prefix +
                                  "'");
    size_t pos = prefix.size();
    while (pos < line.size() && line[pos] == ' ') ++pos;
    return line.substr(pos);
  };
  if (!std::getline(in, gline) || !std::getline(in, pline) ||
      !std::getline(in, sline))
    throw std::invalid_argument("bundle needs group, pairing and set lines");
  Group g = Group::parse(field(gline, "group"));
  Pairing p(g, parse_matrix_json(field(pline, "pairing")));
  if (!p.is_well_defined())
    throw std::invalid_argument("bundle pairing is not well defined");
  SetInGroup s = SetInGroup::parse(g, field(sline, "set"));
  return {g, p, s};
}

// every well defined nondegenerate pairing matrix mod the exponent
std::vector<Pairing> all_pairings(const Group &g) {
  if (g.order() > 16)
    throw std::domain_error("pairing enumeration is limited to |G| <= 16");
  long m = static_cast<long>(g.moduli().size());
  long n = g.exponent();
  long cells = m * m;
  std::vector<Pairing> out;
  std::vector<long> digits(cells, 0);
  while (true) {
    std::vector<std::vector<long>> b(m, std::vector<long>(m));
    for (long i = 0; i < cells; ++i) b[i / m][i % m] = digits[i];
    Pairing p(g, b);
    if (p.is_well_defined() && p.is_nondegenerate()) out.push_back(std::move(p));
    long i = 0;
    while (i < cells && ++digits[i] == n) digits[i++] = 0;
    if (i == cells) break;
  }
  return out;
}

CodeSet load_code(const std::string &path, long q) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open code file: " + path);
  auto alphabet = q == 4 ? CodeSet::Alphabet::Z4 : CodeSet::Alphabet::Prime;
  return read_code_words(in, alphabet, q);
}

std::vector<long> parse_int_list(const std::string &text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
  return out;
}

int run_verify(const GlobalOpts &opt, const std::string &group,
               const std::string &pairing, const std::string &set,
               const std::string &set_t, const std::string &bundle) {
  std::optional<Bundle> loaded;
  if (!bundle.empty()) {
    if (bundle == "-") {
      loaded = read_bundle(std::cin);
    } else {
      std::ifstream in(bundle);
      if (!in) throw std::invalid_argument("cannot open bundle: " + bundle);
      loaded = read_bundle(in);
    }
  }
  Pairing p = loaded ? loaded->pairing
                     : load_pairing(Group::parse(group), pairing);
  SetInGroup s = loaded ? loaded->set : SetInGroup::parse(p.group(), set);

  DualityCertificate cert;
  const char *label;
  if (!set_t.empty()) {
    SetInGroup t = SetInGroup::parse(p.group(), set_t);
    cert = is_formally_dual_pair(p, s, t);
    label = "formally dual pair";
  } else {
    cert = is_formally_self_dual(p, s);
    label = "formally self dual";
  }
  if (opt.format == "json")
    std::cout << certificate_to_json(cert) << "\n";
  else
    std::cout << label << ": " << (cert.verdict ? "true" : "false") << "\n";
  return cert.verdict ? 0 : 1;
}

int run_reduce(const GlobalOpts &opt, const std::string &group,
               const std::string &pairing, const std::string &set) {
  Group g = Group::parse(group);
  Pairing p = load_pairing(g, pairing);
  SetInGroup s = SetInGroup::parse(g, set);
  ReductionResult r = reduce_to_primitive(p, s);
  if (opt.format == "json") {
    std::cout << reduction_to_json(r) << "\n";
  } else {
    long i = 0;
    for (const auto &step : r.trace) {
      std::cout << "step " << ++i << ": in " << step.group.to_string()
                << " shift " << step.group.format_element(step.shift)
                << ", coset subgroup of order " << step.h.order() << "\n";
    }
    std::cout << "final group: " << r.set.group.to_string() << "\n";
    std::cout << "final set: " << r.set.to_string() << "\n";
    std::cout << "final pairing: " << matrix_json(r.pairing.matrix()) << "\n";
  }
  return 0;
}

int run_evenset(const GlobalOpts &opt, const std::string &group,
                const std::string &set, const std::string &pairing) {
  Group g = Group::parse(group);
  SetInGroup s = SetInGroup::parse(g, set);
  auto mu = even_decomposition(s);
  if (!mu) {
    std::cout << "even: false\n";
    return 1;
  }
  if (opt.format == "json") {
    std::cout << combination_to_json(g, *mu) << "\n";
  } else {
    std::cout << "even: true\n";
    for (const auto &[h, lam] : mu->terms) {
      std::cout << "subgroup order " << h.order() << " generators {";
      for (size_t i = 0; i < h.generators.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << g.format_element(h.generators[i]);
      }
      std::cout << "} lambda " << to_string(lam) << "\n";
    }
  }
  if (!pairing.empty()) {
    Pairing p = load_pairing(g, pairing);
    bool z = zero_sum_check(p, s, *mu);
    std::cout << "zero sum check (formally self dual): "
              << (z ? "true" : "false") << "\n";
    return z ? 0 : 1;
  }
  return 0;
}

int run_boolfn_check(const GlobalOpts &opt, int n, uint64_t exponent) {
  BinaryField f(n);
  auto fn = VectorialFunction::from_exponent(f, exponent);
  DualityCertificate cert = graph_fsd_check(fn);
  if (opt.format == "json")
    std::cout << certificate_to_json(cert) << "\n";
  else
    std::cout << "graph formally self dual: "
              << (cert.verdict ? "true" : "false") << "\n";
  return cert.verdict ? 0 : 1;
}

int run_search(const GlobalOpts &opt, const std::string &group, long size,
               const std::string &pairing, long budget,
               const std::string &seed, const std::string &cert_dir) {
  Group g = Group::parse(group);
  std::vector<Pairing> pairings;
  if (pairing == "all")
    pairings = all_pairings(g);
  else
    pairings.push_back(load_pairing(g, pairing));

  bool all_complete = true;
  long hit_counter = 0;
  nlohmann::ordered_json jout = nlohmann::ordered_json::array();
  for (const Pairing &p : pairings) {
    SearchSpec spec;
    spec.group = g;
    spec.pairing = p;
    spec.size = size;
    spec.budget_nodes = budget;
    if (!seed.empty()) spec.seed_prefix = SetInGroup::parse(g, seed).members;
    SearchResult r = search_fsd(spec);
    all_complete = all_complete && r.complete;
    if (opt.format == "json") {
      auto j = nlohmann::ordered_json::parse(search_result_to_json(g, r));
      j["pairing_matrix"] = p.matrix();
      jout.push_back(std::move(j));
    } else {
      if (pairings.size() > 1)
        std::cout << "pairing: " << matrix_json(p.matrix()) << "\n";
      for (const auto &h : r.hits)
        std::cout << "hit: " << h.set.to_string()
                  << (h.primitive ? " primitive" : " not primitive") << "\n";
      std::cout << "complete: " << (r.complete ? "true" : "false") << "\n";
      std::cout << "nodes: " << r.nodes << "\n";
    }
    if (!cert_dir.empty()) {
      std::filesystem::create_directories(cert_dir);
      for (const auto &h : r.hits) {
        DualityCertificate cert = is_formally_self_dual(p, h.set);
        std::ofstream out(cert_dir + "/hit_" + std::to_string(hit_counter++) +
                          ".json");
        out << certificate_to_json(cert) << "\n";
      }
    }
  }
  if (opt.format == "json") std::cout << jout.dump(2) << "\n";
  return all_complete ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"workbench for formally dual and formally self dual sets"};
  app.require_subcommand(1);

  GlobalOpts opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--threads", opt.threads,
                 "worker hint (current kernels are sequential)")
      ->capture_default_str();
  app.add_flag("--verify-exact,!--no-verify-exact", opt.verify_exact,
               "exact certification (cannot be disabled)");

  // verify
  std::string v_group, v_pairing = "standard", v_set, v_set_t, v_bundle;
  auto *verify = app.add_subcommand("verify", "check formal (self) duality");
  verify->add_option("--group", v_group, "group literal, e.g. Z4 or Z2^3xZ8");
  verify->add_option("--pairing", v_pairing, "'standard' or a matrix file");
  verify->add_option("--set", v_set, "set literal, e.g. \"{0,1}\"");
  verify->add_option("--set-t", v_set_t, "partner set for a pair check");
  verify->add_option("--bundle", v_bundle, "bundle file, or '-' for stdin");

  // reduce
  std::string r_group, r_pairing = "standard", r_set;
  auto *reduce = app.add_subcommand("reduce", "reduce to a primitive set");
  reduce->add_option("--group", r_group)->required();
  reduce->add_option("--pairing", r_pairing);
  reduce->add_option("--set", r_set)->required();

  // evenset
  std::string e_group, e_set, e_pairing;
  auto *evenset =
      app.add_subcommand("evenset", "decompose S S^(-1) over subgroups");
  evenset->add_option("--group", e_group)->required();
  evenset->add_option("--set", e_set)->required();
  evenset->add_option("--pairing", e_pairing,
                      "also run the zero sum duality check");

  // construct
  auto *construct =
      app.add_subcommand("construct", "emit a (pairing, set) bundle");
  construct->require_subcommand(1);
  auto *c_tito = construct->add_subcommand("tito", "{0,1} in Z_4");
  long c_n = 2;
  auto *c_lattice =
      construct->add_subcommand("lattice", "multiples of n in Z_{n^2}");
  c_lattice->add_option("--n", c_n)->required();
  long c_p = 5, c_alpha = 2;
  auto *c_gauss = construct->add_subcommand(
      "gaussian", "{(k, k*alpha)} in Z_p^2 with alpha^2 = -1");
  c_gauss->add_option("--p", c_p)->required();
  c_gauss->add_option("--alpha", c_alpha)->required();
  long s_p = 3, s_m = 1, s_alpha = 1, s_beta = 2;
  auto *c_shds = construct->add_subcommand(
      "shds", "self dual set from the Paley difference set of F_{p^m}");
  c_shds->add_option("--p", s_p)->required();
  c_shds->add_option("--m", s_m);
  c_shds->add_option("--alpha", s_alpha);
  c_shds->add_option("--beta", s_beta);
  long sp_index = 0;
  auto *c_sporadic =
      construct->add_subcommand("sporadic", "order 64 primitive sets");
  c_sporadic->add_option("--index", sp_index)->check(CLI::Range(0, 1));

  // boolfn
  auto *boolfn = app.add_subcommand("boolfn", "vectorial Boolean functions");
  boolfn->require_subcommand(1);
  std::string gs_ns = "3,5,7";
  auto *gold = boolfn->add_subcommand("gold-scan",
                                      "graph self duality of x^(2^i+1)");
  gold->add_option("--n", gs_ns, "comma separated field degrees");
  int bf_n = 3;
  uint64_t bf_exp = 3;
  auto *bcheck = boolfn->add_subcommand("check", "graph duality of x^d");
  bcheck->add_option("--n", bf_n)->required();
  bcheck->add_option("--exponent", bf_exp)->required();

  // codes
  auto *codes = app.add_subcommand("codes", "code enumerators");
  codes->require_subcommand(1);
  std::string mw_input;
  long mw_q = 2;
  bool mw_distance = false;
  auto *mw = codes->add_subcommand("macwilliams",
                                   "transformed weight enumerator");
  mw->add_option("--input", mw_input, "code file, one word per line")
      ->required();
  mw->add_option("--q", mw_q, "alphabet size");
  mw->add_flag("--distance", mw_distance, "transform the distance enumerator");
  std::string dc_a, dc_b;
  long dc_q = 2;
  auto *dc = codes->add_subcommand("dual-check", "formal dual codes test");
  dc->add_option("--input", dc_a)->required();
  dc->add_option("--input-b", dc_b)->required();
  dc->add_option("--q", dc_q);

  // search
  std::string sg_group, sg_pairing = "standard", sg_seed, sg_dir;
  long sg_size = 0, sg_budget = 50'000'000;
  auto *search = app.add_subcommand("search", "find formally self dual sets");
  search->add_option("--group", sg_group)->required();
  search->add_option("--size", sg_size)->required();
  search->add_option("--pairing", sg_pairing, "standard, all, or matrix file");
  search->add_option("--budget-nodes", sg_budget);
  search->add_option("--seed-prefix", sg_seed, "set literal, must start at 0");
  search->add_option("--emit-certificates", sg_dir, "directory for hit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!opt.verify_exact) {
      std::cerr << "exact verification cannot be disabled\n";
      return 2;
    }
    if (verify->parsed()) {
      if (v_bundle.empty() && (v_group.empty() || v_set.empty())) {
        std::cerr << "verify needs --group and --set, or --bundle\n";
        return 2;
      }
      return run_verify(opt, v_group, v_pairing, v_set, v_set_t, v_bundle);
    }
    if (reduce->parsed()) return run_reduce(opt, r_group, r_pairing, r_set);
    if (evenset->parsed()) return run_evenset(opt, e_group, e_set, e_pairing);
    if (construct->parsed()) {
      std::pair<Pairing, SetInGroup> bundle = [&]() {
        if (c_tito->parsed()) return tito();
        if (c_lattice->parsed()) return lattice_example(c_n);
        if (c_gauss->parsed()) return gaussian_example(c_p, c_alpha);
        if (c_shds->parsed()) {
          OddField f(s_p, s_m);
          ShdsResult r = shds_pair(f, paley_set(f), s_alpha, s_beta);
          return std::make_pair(r.composed_pairing, r.s);
        }
        return sporadic_order64().at(sp_index);
      }();
      emit_bundle(std::cout, bundle.first, bundle.second);
      return 0;
    }
    if (boolfn->parsed()) {
      if (gold->parsed()) {
        std::vector<int> ns;
        for (long v : parse_int_list(gs_ns)) ns.push_back(int(v));
        std::cout << "n i fsd\n";
        for (const auto &v : gold_scan(ns))
          std::cout << v.n << " " << v.i << " " << (v.fsd ? "true" : "false")
                    << "\n";
        return 0;
      }
      return run_boolfn_check(opt, bf_n, bf_exp);
    }
    if (codes->parsed()) {
      if (mw->parsed()) {
        CodeSet c = load_code(mw_input, mw_q);
        EnumeratorPoly e = mw_distance ? distance_enumerator_poly(c)
                                       : weight_enumerator_poly(c);
        EnumeratorPoly t =
            macwilliams_transform(e, c.q, Rat(Int(c.words.size())));
        std::cout << t.to_string() << "\n";
        return 0;
      }
      CodeSet a = load_code(dc_a, dc_q);
      CodeSet b = load_code(dc_b, dc_q);
      CodeDualCheck r = formal_dual_codes_check(a, b);
      std::cout << "dual weight enumerators: "
                << (r.weight_dual ? "true" : "false") << "\n";
      std::cout << "dual distance enumerators: "
                << (r.distance_dual ? "true" : "false") << "\n";
      return (r.weight_dual && r.distance_dual) ? 0 : 1;
    }
    if (search->parsed())
      return run_search(opt, sg_group, sg_size, sg_pairing, sg_budget, sg_seed,
                        sg_dir);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
