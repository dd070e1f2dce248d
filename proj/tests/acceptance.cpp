// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <random>
#include <set>
#include <vector>

#include "fsd/boolfn.hpp"
#include "fsd/codes.hpp"
#include "fsd/constructions.hpp"
#include "fsd/duality.hpp"
#include "fsd/evenset.hpp"
#include "fsd/fwht.hpp"
#include "fsd/search.hpp"
#include "../tests/z4_fixture.hpp"

using namespace fsd;

namespace {

int failures = 0;

void report(int idx, const char *name, bool ok) {
  std::printf("criterion %2d (%s): %s\n", idx, name, ok ? "pass" : "FAIL");
  if (!ok) ++failures;
}

bool check_tito() {
  auto [p, s] = tito();
  return is_formally_self_dual(p, s).verdict;
}

bool check_sporadics() {
  bool ok = true;
  for (auto &[p, s] : sporadic_order64()) {
    ok = ok && is_formally_self_dual(p, s).verdict;
    ok = ok && is_primitive(s).primitive;
    // seeded search rediscovers the set from a two element prefix
    SearchSpec spec;
    spec.group = p.group();
    spec.pairing = p;
    spec.size = 8;
    spec.seed_prefix.assign(s.members.begin(), s.members.begin() + 2);
    SearchResult r = search_fsd(spec);
    bool found = false;
    for (const auto &h : r.hits) found = found || h.set.members == s.members;
    ok = ok && r.complete && found;
  }
  return ok;
}

bool check_boolean_sporadic() {
  BinaryField f8(3);
  auto fn = VectorialFunction::from_exponent(f8, 3);
  DualityCertificate table_oracle = graph_fsd_check(fn);
  DualityCertificate group_oracle =
      is_formally_self_dual(graph_trace_pairing(f8), graph_set(fn));
  return table_oracle.verdict && group_oracle.verdict &&
         table_oracle.verdict == group_oracle.verdict;
}

bool check_gold_scan() {
  bool ok = true;
  long n3 = 0;
  for (const auto &v : gold_scan({3, 5, 7})) {
    ok = ok && (v.fsd == (v.n == 3));
    n3 += (v.n == 3);
  }
  return ok && n3 == 2;
}

bool check_paley_pipeline() {
  bool ok = true;
  for (auto [p, m] : std::vector<std::pair<long, long>>{
           {3, 1}, {7, 1}, {11, 1}, {3, 3}}) {
    OddField f(p, m);
    auto d = paley_set(f);
    auto dstar = dual_set_Dstar(f, trace_pairing(f), d);
    std::vector<long> ds(d), dinv, got(dstar);
    for (long x : d) dinv.push_back(f.neg(x));
    std::sort(ds.begin(), ds.end());
    std::sort(dinv.begin(), dinv.end());
    std::sort(got.begin(), got.end());
    ok = ok && (got == ds || got == dinv);
    // the constructor re-verifies the dual pair, T = pi(S), and formal self
    // duality under the composed pairing; any failure throws
    ShdsResult r = shds_pair(f, d, 1, 2);
    ok = ok && is_formally_self_dual(r.composed_pairing, r.s).verdict;
  }
  return ok;
}

const std::vector<std::vector<long>> kF3Words = {
    {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 2, 0, 1}, {1, 0, 0, 2}, {1, 1, 2, 0},
    {1, 2, 1, 0}, {2, 0, 0, 2}, {2, 1, 1, 0}, {2, 2, 2, 0}};

bool check_f3_counterexample() {
  CodeSet c = CodeSet::make(CodeSet::Alphabet::Prime, 3, 4, kF3Words);
  std::vector<std::vector<long>> shuffled;
  for (const auto &w : kF3Words)
    shuffled.push_back({w[2], (3 - w[3]) % 3, w[0], (3 - w[1]) % 3});
  CodeSet cp = CodeSet::make(CodeSet::Alphabet::Prime, 3, 4, shuffled);

  bool ok = weight_enumerator_poly(c).coeffs == std::vector<Rat>{1, 0, 4, 4, 0};
  EnumeratorPoly t = macwilliams_transform(weight_enumerator_poly(c), 3, Rat(9));
  ok = ok && t.coeffs == std::vector<Rat>{Rat(1), Rat(4, 3), Rat(0), Rat(4),
                                          Rat(8, 3)};
  ok = ok && !formal_dual_codes_check(c, cp).weight_dual;

  Group g({3, 3, 3, 3});
  auto to_set = [&](const CodeSet &code) {
    std::vector<long> m;
    for (const auto &word : code.words) m.push_back(g.index_of(word));
    return SetInGroup::make(g, std::move(m));
  };
  ok = ok &&
       is_formally_dual_pair(standard_pairing(g), to_set(c), to_set(cp)).verdict;
  return ok;
}

bool check_z4_counterexample() {
  CodeSet c = z4_span(4, kZ4GenC);
  CodeSet cp = z4_dual(c);
  CodeSet gc = gray_map(c);
  CodeSet gcp = gray_map(cp);
  bool ok = gc.words.size() == 16 && gcp.words.size() == 16;
  ok = ok &&
       gc.words == CodeSet::make(CodeSet::Alphabet::Prime, 2, 8, kGrayC).words;
  ok = ok && gcp.words ==
                 CodeSet::make(CodeSet::Alphabet::Prime, 2, 8, kGrayCp).words;
  auto r = formal_dual_codes_check(gc, gcp);
  ok = ok && r.weight_dual && r.distance_dual;
  auto [zero_char, zero_nu] = count_zero_charsums_and_zero_nu(gc, gcp);
  ok = ok && zero_char == 216 && zero_nu == 228 && zero_char != zero_nu;
  return ok;
}

// find the coefficient of a subgroup (by member list) in a combination
Rat coeff_of(const SubgroupCombination &c, const std::vector<long> &members) {
  for (const auto &[h, lam] : c.terms)
    if (h.members == members) return lam;
  return Rat(0);
}

bool canonical_laws_hold(const Pairing &p, const SetInGroup &s) {
  auto mu = even_decomposition(s);
  if (!mu) return false;
  SubgroupCombination lam = canonical_fsd_coefficients(p, s, *mu);
  // the canonical coefficients still decompose S S^(-1)
  if (!(lam.expand(s.group) == ss_inverse(s))) return false;
  std::vector<long> sigma = p.sigma();
  for (const auto &[h, l] : lam.terms) {
    std::vector<long> sh;
    for (long m : h.members) sh.push_back(sigma[m]);
    std::sort(sh.begin(), sh.end());
    if (coeff_of(lam, sh) != l) return false;
    Subgroup ann = annihilator(p, h);
    Rat ratio(Int(h.order()), Int(s.size()));
    ratio.canonicalize();
    if (coeff_of(lam, ann.members) != ratio * l) return false;
  }
  return true;
}

bool check_even_set_triangle() {
  std::mt19937 rng(20260823);
  long evens = 0;
  bool ok = true;

  std::vector<Group> groups = {Group({4}),    Group({2, 2}), Group({9}),
                               Group({3, 3}), Group({16}),   Group({2, 8}),
                               Group({4, 4}), Group({2, 2, 4}),
                               Group({2, 2, 2, 2}), Group({25}), Group({5, 5}),
                               Group({36}),   Group({6, 6})};
  for (const Group &g : groups) {
    long n = g.order();
    long k = 1;
    while (k * k < n) ++k;
    Pairing p = standard_pairing(g);
    long trials = n <= 16 ? 1200 : 400;
    std::vector<long> pool(n);
    for (long i = 0; i < n; ++i) pool[i] = i;
    std::set<std::vector<long>> seen;
    for (long t = 0; t < trials; ++t) {
      std::shuffle(pool.begin(), pool.end(), rng);
      std::vector<long> members(pool.begin(), pool.begin() + k);
      std::sort(members.begin(), members.end());
      if (!seen.insert(members).second) continue;
      SetInGroup s = SetInGroup::make(g, members);
      auto mu = even_decomposition(s);
      if (!mu) continue;
      ++evens;
      bool direct = is_formally_self_dual(p, s).verdict;
      bool zs = zero_sum_check(p, s, *mu);
      ok = ok && (zs == direct);
      if (direct) ok = ok && canonical_laws_hold(p, s);
    }
  }
  std::printf("  even sets exercised: %ld\n", evens);
  ok = ok && evens >= 100;

  // canonical coefficient laws on the stock self dual examples
  {
    auto [p, s] = tito();
    ok = ok && canonical_laws_hold(p, s);
  }
  for (long n : {2, 3, 4, 5, 6}) {
    auto [p, s] = lattice_example(n);
    ok = ok && canonical_laws_hold(p, s);
  }
  {
    auto [p, s] = gaussian_example(5, 2);
    ok = ok && canonical_laws_hold(p, s);
  }
  return ok;
}

bool reduces_to_trivial(const Pairing &p, const SetInGroup &s) {
  ReductionResult r = reduce_to_primitive(p, s);
  return r.set.group.order() == 1 && r.set.members == std::vector<long>{0};
}

bool check_reduction() {
  bool ok = true;
  for (long n : {2, 3, 4}) {
    auto [p, s] = lattice_example(n);
    ok = ok && reduces_to_trivial(p, s);
  }
  for (auto [pp, alpha] :
       std::vector<std::pair<long, long>>{{5, 2}, {13, 5}}) {
    auto [p, s] = gaussian_example(pp, alpha);
    ok = ok && reduces_to_trivial(p, s);
  }
  return ok;
}

bool check_oracle_equivalence() {
  bool ok = true;
  for (auto [g, k] : std::vector<std::pair<Group, long>>{
           {Group({4}), 2}, {Group({9}), 3}, {Group({16}), 4}}) {
    SearchSpec spec;
    spec.group = g;
    spec.size = k;
    std::vector<std::vector<long>> pruned, brute;
    for (const auto &h : search_fsd(spec).hits) pruned.push_back(h.set.members);
    for (const auto &s : brute_force_fsd(standard_pairing(g), k))
      brute.push_back(s.members);
    std::sort(brute.begin(), brute.end());
    ok = ok && pruned == brute;
  }
  return ok;
}

bool check_numeric_identities() {
  bool ok = true;

  // fast transform equals the definition, exhaustive on delta inputs
  for (int n = 0; n <= 6 && ok; ++n) {
    size_t len = size_t(1) << n;
    for (size_t d = 0; d < len && ok; ++d) {
      std::vector<int32_t> v(len, 0);
      v[d] = 1;
      fwht(v);
      for (size_t a = 0; a < len; ++a) {
        int32_t expect = (__builtin_popcountll(a & d) & 1) ? -1 : 1;
        ok = ok && v[a] == expect;
      }
    }
  }

  // Parseval on random data
  std::mt19937 rng(7);
  std::uniform_int_distribution<int32_t> dist(-100, 100);
  for (int n : {5, 8}) {
    size_t len = size_t(1) << n;
    std::vector<int32_t> v(len);
    for (auto &x : v) x = dist(rng);
    int64_t before = 0, after = 0;
    for (int32_t x : v) before += int64_t(x) * x;
    fwht(v);
    for (int32_t x : v) after += int64_t(x) * x;
    ok = ok && after == int64_t(len) * before;
  }

  // weight enumerator symmetry and mass on random sets
  for (const Group &g : {Group({12}), Group({2, 2, 4}), Group({5, 5})}) {
    std::uniform_int_distribution<long> pick(0, g.order() - 1);
    for (int t = 0; t < 20; ++t) {
      std::set<long> m;
      while (static_cast<long>(m.size()) < 4) m.insert(pick(rng));
      SetInGroup s = SetInGroup::make(g, {m.begin(), m.end()});
      std::vector<long> nu = weight_enumerator(s);
      long mass = 0;
      for (long x = 0; x < g.order(); ++x) {
        ok = ok && nu[x] == nu[g.neg(x)];
        mass += nu[x];
      }
      ok = ok && mass == s.size() * s.size();
    }
  }

  // MacWilliams involution: transforming twice scales back to the original
  std::vector<std::vector<long>> parabola;
  for (long x = 0; x < 3; ++x) parabola.push_back({x, x * x % 3});
  CodeSet codes[] = {
      CodeSet::make(CodeSet::Alphabet::Prime, 3, 2, parabola),
      CodeSet::make(CodeSet::Alphabet::Prime, 3, 4, kF3Words),
      gray_map(z4_span(4, kZ4GenC)),
      gray_map(z4_dual(z4_span(4, kZ4GenC)))};
  for (const CodeSet &c : codes) {
    Int total = 1;
    for (long i = 0; i < c.length; ++i) total *= c.q;
    Rat size(Int(c.words.size()));
    EnumeratorPoly w = weight_enumerator_poly(c);
    EnumeratorPoly once = macwilliams_transform(w, c.q, size);
    EnumeratorPoly twice = macwilliams_transform(once, c.q, Rat(total) / size);
    ok = ok && twice == w;
    // distance transform identity against exact character sums
    ok = ok && char_sum_distance_identity_check(c);
  }
  return ok;
}

} // namespace

int main() {
  report(1, "TITO self dual in Z_4", check_tito());
  report(2, "order 64 sporadic sets, verified and rediscovered",
         check_sporadics());
  report(3, "cube map graph: table and group oracles agree",
         check_boolean_sporadic());
  report(4, "gold scan true only at n=3", check_gold_scan());
  report(5, "Paley pipeline for q in {3,7,11,27}", check_paley_pipeline());
  report(6, "F_3^4: dual sets yet not dual codes", check_f3_counterexample());
  report(7, "Z4 Gray pair: dual codes yet not dual sets",
         check_z4_counterexample());
  report(8, "even set triangle and canonical coefficients",
         check_even_set_triangle());
  report(9, "reduction of lattice and diagonal examples", check_reduction());
  report(10, "pruned search equals brute force", check_oracle_equivalence());
  report(11, "transform, enumerator and MacWilliams identities",
         check_numeric_identities());
  return failures == 0 ? 0 : 1;
}
