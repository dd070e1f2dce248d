#include "fsd/subgroup.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "fsd/linalg.hpp"

namespace fsd {

bool Subgroup::contains(long idx) const {
  return std::binary_search(members.begin(), members.end(), idx);
}

Subgroup generated_subgroup(const Group &g, std::vector<long> generators) {
  std::set<long> seen{0};
  std::vector<long> worklist;
  std::vector<long> list{0};
  for (long gen : generators)
    if (seen.insert(gen).second) {
      list.push_back(gen);
      worklist.push_back(gen);
    }
  while (!worklist.empty()) {
    long u = worklist.back();
    worklist.pop_back();
    size_t sz = list.size();
    for (size_t i = 0; i < sz; ++i) {
      long p = g.add(u, list[i]);
      if (seen.insert(p).second) {
        list.push_back(p);
        worklist.push_back(p);
      }
    }
  }
  Subgroup h;
  h.generators = std::move(generators);
  h.members.assign(seen.begin(), seen.end());
  return h;
}

bool is_subgroup(const Group &g, const Subgroup &h) {
  if (h.members.empty() || h.members[0] != 0) return false;
  for (long a : h.members) {
    if (!h.contains(g.neg(a))) return false;
    for (long b : h.members)
      if (!h.contains(g.add(a, b))) return false;
  }
  return true;
}

Subgroup trivial_subgroup() { return Subgroup{{}, {0}}; }

Subgroup full_subgroup(const Group &g) {
  Subgroup h;
  h.members.resize(g.order());
  for (long i = 0; i < g.order(); ++i) h.members[i] = i;
  for (int j = 0; j < g.rank(); ++j) {
    Coords c(g.rank(), 0);
    c[j] = 1;
    h.generators.push_back(g.index_of(c));
  }
  return h;
}

std::vector<Subgroup> enumerate_subgroups(const Group &g, long bound) {
  if (g.order() > bound)
    throw std::length_error("group order exceeds subgroup enumeration bound");
  std::map<std::vector<long>, Subgroup> found;
  Subgroup triv = trivial_subgroup();
  found.emplace(triv.members, triv);
  std::queue<Subgroup> work;
  work.push(triv);
  while (!work.empty()) {
    Subgroup h = std::move(work.front());
    work.pop();
    for (long x = 1; x < g.order(); ++x) {
      if (h.contains(x)) continue;
      std::vector<long> gens = h.generators;
      gens.push_back(x);
      Subgroup k = generated_subgroup(g, std::move(gens));
      auto it = found.find(k.members);
      if (it == found.end()) {
        found.emplace(k.members, k);
        work.push(std::move(k));
      }
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto &kv : found) out.push_back(std::move(kv.second));
  return out;
}

Subgroup annihilator(const Pairing &p, const Subgroup &h) {
  const Group &g = p.group();
  if (!is_subgroup(g, h)) throw std::invalid_argument("annihilator: not a subgroup");
  const std::vector<long> &gens =
      h.generators.empty() ? h.members : h.generators;
  std::vector<long> ann;
  for (long x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (long hm : gens)
      if (p.exponent_of(x, hm) != 0) {
        ok = false;
        break;
      }
    if (ok) ann.push_back(x);
  }
  Subgroup out;
  out.members = std::move(ann);
  out.generators = out.members; // explicit; fine at desk scale
  return out;
}

std::pair<Subgroup, long> smallest_containing_coset(const Group &g,
                                                    const std::vector<long> &set) {
  if (set.empty())
    throw std::domain_error("smallest_containing_coset: empty set");
  long s0 = set[0];
  std::vector<long> gens;
  for (long s : set)
    if (s != s0) gens.push_back(g.sub(s, s0));
  return {generated_subgroup(g, std::move(gens)), s0};
}

namespace {

// Small generating set of a subgroup, greedy closure growth.
std::vector<long> small_generating_set(const Group &g, const Subgroup &h) {
  std::vector<long> gens;
  Subgroup cur = trivial_subgroup();
  for (long m : h.members) {
    if (cur.contains(m)) continue;
    gens.push_back(m);
    cur = generated_subgroup(g, gens);
    if (cur.order() == h.order()) break;
  }
  return gens;
}

// Expressions of every member of H as an integer combination of the
// generators, found by BFS.
std::map<long, std::vector<Int>> dlog_table(const Group &g,
                                            const std::vector<long> &gens) {
  std::map<long, std::vector<Int>> expr;
  expr[0] = std::vector<Int>(gens.size(), 0);
  std::queue<long> work;
  work.push(0);
  while (!work.empty()) {
    long u = work.front();
    work.pop();
    for (size_t i = 0; i < gens.size(); ++i) {
      long v = g.add(u, gens[i]);
      if (expr.count(v)) continue;
      auto e = expr[u];
      e[i] += 1;
      expr[v] = std::move(e);
      work.push(v);
    }
  }
  return expr;
}

} // namespace

Quotient quotient_group(const Group &g, const Subgroup &h, const Subgroup &k) {
  for (long m : k.members)
    if (!h.contains(m)) throw std::domain_error("quotient: K not contained in H");

  std::vector<long> gens = small_generating_set(g, h);
  size_t r = gens.size();
  if (r == 0) {
    // H trivial (then K trivial too): quotient is the trivial group.
    Quotient q{Group({1}), std::vector<long>(g.order(), -1)};
    q.proj[0] = 0;
    return q;
  }
  auto expr = dlog_table(g, gens);
  if (expr.size() != static_cast<size_t>(h.order()))
    throw std::logic_error("quotient: generating set does not span H");

  int m = g.rank();
  // Relations of the generators inside G: kernel of [A | -N] projected to
  // the first r coordinates, A the coordinate matrix of the generators.
  IntMat an(m, std::vector<Int>(r + m, 0));
  for (size_t j = 0; j < r; ++j) {
    Coords c = g.coords_of(gens[j]);
    for (int i = 0; i < m; ++i) an[i][j] = c[i];
  }
  for (int i = 0; i < m; ++i) an[i][r + i] = -g.moduli()[i];
  auto ker = integer_kernel(an);

  // Relation lattice of H/K: generator relations plus expressions of K.
  std::vector<std::vector<Int>> rel_cols;
  for (auto &col : ker) rel_cols.emplace_back(col.begin(), col.begin() + r);
  for (long km : k.members) rel_cols.push_back(expr.at(km));

  IntMat rel(r, std::vector<Int>(rel_cols.size()));
  for (size_t j = 0; j < rel_cols.size(); ++j)
    for (size_t i = 0; i < r; ++i) rel[i][j] = rel_cols[j][i];

  SmithForm f = smith_normal_form(rel);
  std::vector<long> divisors(r, 0);
  for (size_t i = 0; i < r; ++i) {
    if (i < f.d[i].size() && f.d[i][i] != 0) divisors[i] = f.d[i][i].get_si();
    else
      throw std::logic_error("quotient: relation lattice not full rank");
  }
  std::vector<long> moduli;
  std::vector<size_t> kept;
  for (size_t i = 0; i < r; ++i)
    if (divisors[i] > 1) {
      moduli.push_back(divisors[i]);
      kept.push_back(i);
    }
  Group q = moduli.empty() ? Group({1}) : Group(moduli);

  Quotient out{q, std::vector<long>(g.order(), -1)};
  for (long hm : h.members) {
    const auto &e = expr.at(hm);
    Coords c(kept.size(), 0);
    for (size_t t = 0; t < kept.size(); ++t) {
      Int y = 0;
      for (size_t j = 0; j < r; ++j) y += f.u[kept[t]][j] * e[j];
      Int red = y % divisors[kept[t]];
      if (red < 0) red += divisors[kept[t]];
      c[t] = red.get_si();
    }
    out.proj[hm] = kept.empty() ? 0 : out.group.index_of(c);
  }
  if (static_cast<long>(h.order()) != q.order() * k.order())
    throw std::logic_error("quotient: order mismatch");
  return out;
}

} // namespace fsd
