#include "fsd/serialize.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace fsd {

namespace {

using json = nlohmann::ordered_json;

json set_literal(const Group &g, const std::vector<long> &members) {
  json arr = json::array();
  for (long m : members) arr.push_back(g.format_element(m));
  return arr;
}

json certificate_json(const DualityCertificate &c) {
  json j;
  j["verdict"] = c.verdict;
  j["size_condition"] = c.size_condition;
  j["group"] = c.group.to_string();
  j["pairing_matrix"] = c.pairing_matrix;
  j["set_s"] = set_literal(c.group, c.set_s);
  j["set_t"] = set_literal(c.group, c.set_t);
  if (c.first_violation)
    j["first_violation"] = c.group.format_element(*c.first_violation);
  json rows = json::array();
  for (const CertificateRow &r : c.table) {
    json row;
    row["g"] = c.group.format_element(r.g);
    row["nu"] = r.nu;
    if (r.char_sq_rational)
      row["char_sq"] = to_string(r.char_sq);
    else
      row["char_sq"] = r.char_sq_poly;
    row["ok"] = r.ok;
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  return j;
}

} // namespace

std::string certificate_to_json(const DualityCertificate &c) {
  return certificate_json(c).dump(2);
}

std::string reduction_to_json(const ReductionResult &r) {
  json j;
  j["final_group"] = r.set.group.to_string();
  j["final_set"] = set_literal(r.set.group, r.set.members);
  j["final_pairing_matrix"] = r.pairing.matrix();
  json steps = json::array();
  for (const ReductionStep &s : r.trace) {
    json step;
    step["group"] = s.group.to_string();
    step["shift"] = s.group.format_element(s.shift);
    step["coset_subgroup"] = set_literal(s.group, s.h.members);
    step["annihilator"] = set_literal(s.group, s.h_tilde.members);
    steps.push_back(std::move(step));
  }
  j["steps"] = std::move(steps);
  return j.dump(2);
}

std::string combination_to_json(const Group &g, const SubgroupCombination &c) {
  json terms = json::array();
  for (const auto &[h, lam] : c.terms) {
    json t;
    json gens = json::array();
    for (long m : h.generators) gens.push_back(g.format_element(m));
    t["generators"] = std::move(gens);
    t["order"] = h.order();
    t["lambda"] = to_string(lam);
    terms.push_back(std::move(t));
  }
  json j;
  j["group"] = g.to_string();
  j["terms"] = std::move(terms);
  return j.dump(2);
}

std::string search_result_to_json(const Group &g, const SearchResult &r) {
  json hits = json::array();
  for (const SearchHit &h : r.hits) {
    json hit;
    hit["set"] = set_literal(g, h.set.members);
    hit["primitive"] = h.primitive;
    hits.push_back(std::move(hit));
  }
  json j;
  j["group"] = g.to_string();
  j["complete"] = r.complete;
  j["nodes"] = r.nodes;
  j["hits"] = std::move(hits);
  return j.dump(2);
}

CodeSet read_code_words(std::istream &in, CodeSet::Alphabet alphabet, long q) {
  std::vector<std::vector<long>> words;
  std::string line;
  long length = -1;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::vector<long> w;
    long v;
    while (ls >> v) w.push_back(v);
    if (w.empty()) continue;
    if (length < 0) length = static_cast<long>(w.size());
    words.push_back(std::move(w));
  }
  if (length < 0) throw std::invalid_argument("empty code file");
  return CodeSet::make(alphabet, q, length, std::move(words));
}

void write_code_words(std::ostream &out, const CodeSet &c) {
  for (const auto &w : c.words) {
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) out << " ";
      out << w[i];
    }
    out << "\n";
  }
}

} // namespace fsd
