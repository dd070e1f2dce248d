#include "fsd/duality.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fsd {

bool SetInGroup::contains(long idx) const {
  return std::binary_search(members.begin(), members.end(), idx);
}

std::string SetInGroup::to_string() const {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < members.size(); ++i) {
    if (i) os << ",";
    os << group.format_element(members[i]);
  }
  os << "}";
  return os.str();
}

SetInGroup SetInGroup::make(Group g, std::vector<long> members) {
  if (members.empty()) throw std::domain_error("empty set");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (long m : members)
    if (m < 0 || m >= g.order())
      throw std::invalid_argument("set member outside the group");
  return SetInGroup{std::move(g), std::move(members)};
}

SetInGroup SetInGroup::parse(const Group &g, const std::string &literal) {
  std::string body = literal;
  auto strip = [](std::string s) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  body = strip(body);
  if (body.size() < 2 || body.front() != '{' || body.back() != '}')
    throw std::invalid_argument("set literal must be brace-delimited");
  body = body.substr(1, body.size() - 2);
  std::vector<long> members;
  size_t i = 0;
  while (i < body.size()) {
    size_t end;
    if (body[i] == '(') {
      end = body.find(')', i);
      if (end == std::string::npos)
        throw std::invalid_argument("unbalanced tuple in set literal");
      ++end;
    } else {
      end = body.find(',', i);
      if (end == std::string::npos) end = body.size();
    }
    std::string tok = strip(body.substr(i, end - i));
    if (!tok.empty()) members.push_back(g.parse_element(tok));
    i = end;
    while (i < body.size() && (body[i] == ',' || body[i] == ' ')) ++i;
  }
  return make(g, std::move(members));
}

std::vector<long> weight_enumerator(const SetInGroup &s) {
  std::vector<long> nu(s.group.order(), 0);
  for (long a : s.members)
    for (long b : s.members) ++nu[s.group.sub(a, b)];
  return nu;
}

Cyclo char_sum(const Pairing &p, long g, const SetInGroup &s) {
  check_same_group(p.group(), s.group);
  long n = p.modulus();
  // Accumulate exponent multiplicities, reduce once.
  std::vector<long> counts(n, 0);
  for (long x : s.members) ++counts[p.exponent_of(g, x)];
  Cyclo acc(n);
  for (long e = 0; e < n; ++e)
    if (counts[e])
      acc += Cyclo::root(n, e) * Cyclo::integer(n, counts[e]);
  return acc;
}

namespace {

constexpr long kFullTableLimit = 256;

// One direction of the duality identity: |<g,S>|^2 * |T| == |S|^2 * nu_T(g).
bool check_direction(const Pairing &p, const SetInGroup &s,
                     const std::vector<long> &nu_t, long t_size,
                     std::vector<CertificateRow> *table,
                     std::optional<long> *first_violation) {
  const Group &g = p.group();
  long n = p.modulus();
  bool verdict = true;
  bool keep_all = g.order() <= kFullTableLimit;
  for (long x = 0; x < g.order(); ++x) {
    Cyclo cs = char_sum(p, x, s);
    Cyclo lhs = cyclo_norm(cs) * Cyclo::integer(n, t_size);
    Cyclo rhs = Cyclo::integer(n, Int(s.size()) * s.size() * nu_t[x]);
    bool ok = lhs == rhs;
    if (!ok && !*first_violation) *first_violation = x;
    if (!ok) verdict = false;
    if (table && (keep_all || !ok)) {
      CertificateRow row;
      row.g = x;
      row.nu = nu_t[x];
      Cyclo norm = cyclo_norm(cs);
      if (auto r = norm.as_rational()) {
        row.char_sq_rational = true;
        row.char_sq = *r;
      } else {
        row.char_sq_poly = norm.to_string();
      }
      row.ok = ok;
      table->push_back(row);
      if (!keep_all && !ok) table = nullptr; // first violation only
    }
  }
  return verdict;
}

} // namespace

DualityCertificate is_formally_dual_pair(const Pairing &p, const SetInGroup &s,
                                         const SetInGroup &t) {
  check_same_group(p.group(), s.group);
  check_same_group(p.group(), t.group);
  if (!p.is_well_defined() || !p.is_nondegenerate())
    throw std::domain_error("pairing must be well defined and nondegenerate");

  DualityCertificate cert;
  cert.group = p.group();
  cert.pairing_matrix = p.matrix();
  cert.set_s = s.members;
  cert.set_t = t.members;

  std::vector<long> nu_t = weight_enumerator(t);
  cert.verdict = check_direction(p, s, nu_t, t.size(), &cert.table,
                                 &cert.first_violation);

  // Mirrored form: |<g,T>_adj|^2 * |S| == |T|^2 * nu_S(g).
  std::vector<long> nu_s = weight_enumerator(s);
  std::optional<long> mirror_violation;
  bool mirror = check_direction(p.adjoint(), t, nu_s, s.size(), nullptr,
                                &mirror_violation);
  if (mirror != cert.verdict)
    throw std::logic_error("duality check: the two equivalent forms disagree");

  cert.size_condition =
      Int(s.size()) * t.size() == p.group().order() && s.size() == t.size();
  return cert;
}

DualityCertificate is_formally_self_dual(const Pairing &p, const SetInGroup &s) {
  DualityCertificate cert = is_formally_dual_pair(p, s, s);
  cert.size_condition = Int(s.size()) * s.size() == p.group().order();
  return cert;
}

PrimitivityReport is_primitive(const SetInGroup &s) {
  const Group &g = s.group;
  PrimitivityReport rep;

  auto [h, rep_elem] = smallest_containing_coset(g, s.members);
  (void)rep_elem;
  if (h.order() < g.order()) {
    rep.primitive = false;
    rep.reason = PrimitivityFailure::Coset;
    rep.witness = h;
    return rep;
  }

  // Union of cosets of a nontrivial K: equivalently S + k = S for the
  // generator k; checking cyclic subgroups of prime order suffices, but the
  // straight scan over all elements is cheap and obviously right.
  for (long k = 1; k < g.order(); ++k) {
    bool stable = true;
    for (long m : s.members)
      if (!s.contains(g.add(m, k))) {
        stable = false;
        break;
      }
    if (stable) {
      rep.primitive = false;
      rep.reason = PrimitivityFailure::UnionOfCosets;
      rep.witness = generated_subgroup(g, {k});
      return rep;
    }
  }
  rep.primitive = true;
  return rep;
}

namespace {

// Induced pairing on H/H~ with <aH~, bH~>' = <a,b>.
Pairing induced_pairing(const Pairing &p, const Subgroup &h,
                        const Quotient &q) {
  const Group &qg = q.group;
  long nq = qg.exponent();
  int mq = qg.rank();
  // Representatives of the quotient basis vectors.
  std::vector<long> reps(mq, -1);
  for (int t = 0; t < mq; ++t) {
    Coords unit(mq, 0);
    unit[t] = 1;
    long target = qg.index_of(unit);
    for (long hm : h.members)
      if (q.proj[hm] == target) {
        reps[t] = hm;
        break;
      }
    if (reps[t] < 0) throw std::logic_error("induced pairing: no representative");
  }
  std::vector<std::vector<long>> b(mq, std::vector<long>(mq));
  long n = p.modulus();
  for (int j = 0; j < mq; ++j)
    for (int k = 0; k < mq; ++k) {
      long e = p.exponent_of(reps[j], reps[k]);
      Int scaled = Int(e) * nq;
      if (scaled % n != 0)
        throw std::domain_error(
            "induced pairing ill-defined: set was not formally self dual");
      b[j][k] = Int(scaled / n).get_si() % nq;
    }
  return Pairing(qg, std::move(b));
}

} // namespace

ReductionResult reduce_to_primitive(const Pairing &p, const SetInGroup &s) {
  if (!is_formally_self_dual(p, s).verdict)
    throw std::domain_error("reduction requires a formally self dual input");

  Pairing cur_p = p;
  SetInGroup cur_s = s;
  std::vector<ReductionStep> trace;

  for (;;) {
    auto rep = is_primitive(cur_s);
    if (rep.primitive) break;

    const Group &g = cur_s.group;
    auto [h, s0] = smallest_containing_coset(g, cur_s.members);
    if (h.order() == g.order())
      // Union of cosets but not coset-contained cannot happen for a
      // formally self dual set.
      throw std::domain_error(
          "reduction: set is a union of cosets but fills no proper coset; "
          "it is not formally self dual");
    // Translate into H; formal self duality is translation invariant.
    std::vector<long> shifted;
    for (long m : cur_s.members) shifted.push_back(g.sub(m, s0));
    Subgroup ht = annihilator(cur_p, h);
    for (long m : ht.members)
      if (!h.contains(m))
        throw std::domain_error(
            "reduction: annihilator not inside H; set was not formally self dual");

    Quotient q = quotient_group(g, h, ht);
    Pairing next_p = induced_pairing(cur_p, h, q);
    std::vector<long> projected;
    for (long m : shifted) projected.push_back(q.proj[m]);
    SetInGroup next_s = SetInGroup::make(q.group, std::move(projected));

    if (!is_formally_self_dual(next_p, next_s).verdict)
      throw std::domain_error(
          "reduction step broke self duality; input was not formally self dual");

    trace.push_back(ReductionStep{g, s0, h, ht});
    cur_p = next_p;
    cur_s = next_s;
  }
  return ReductionResult{cur_p, cur_s, std::move(trace)};
}

} // namespace fsd
