#include "fsd/evenset.hpp"

#include <map>
#include <stdexcept>

#include "fsd/linalg.hpp"

namespace fsd {

GroupAlgebraElement GroupAlgebraElement::zero(const Group &g) {
  return GroupAlgebraElement{g, std::vector<Rat>(g.order(), Rat(0))};
}

GroupAlgebraElement GroupAlgebraElement::identity(const Group &g) {
  auto e = zero(g);
  e.coeffs[0] = 1;
  return e;
}

GroupAlgebraElement GroupAlgebraElement::indicator(const Group &g,
                                                   const std::vector<long> &members) {
  auto e = zero(g);
  for (long m : members) e.coeffs[m] = 1;
  return e;
}

bool GroupAlgebraElement::is_zero() const {
  for (const Rat &c : coeffs)
    if (c != 0) return false;
  return true;
}

GroupAlgebraElement GroupAlgebraElement::reversed() const {
  auto e = zero(group);
  for (long i = 0; i < group.order(); ++i) e.coeffs[group.neg(i)] = coeffs[i];
  return e;
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement &o) const {
  check_same_group(group, o.group);
  auto e = *this;
  for (long i = 0; i < group.order(); ++i) e.coeffs[i] += o.coeffs[i];
  return e;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement &o) const {
  check_same_group(group, o.group);
  auto e = *this;
  for (long i = 0; i < group.order(); ++i) e.coeffs[i] -= o.coeffs[i];
  return e;
}

bool GroupAlgebraElement::operator==(const GroupAlgebraElement &o) const {
  return group == o.group && coeffs == o.coeffs;
}

GroupAlgebraElement group_algebra_product(const GroupAlgebraElement &a,
                                          const GroupAlgebraElement &b) {
  check_same_group(a.group, b.group);
  auto e = GroupAlgebraElement::zero(a.group);
  for (long i = 0; i < a.group.order(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (long j = 0; j < b.group.order(); ++j) {
      if (b.coeffs[j] == 0) continue;
      e.coeffs[a.group.add(i, j)] += a.coeffs[i] * b.coeffs[j];
    }
  }
  return e;
}

GroupAlgebraElement ss_inverse(const SetInGroup &s) {
  auto ind = GroupAlgebraElement::indicator(s.group, s.members);
  auto prod = group_algebra_product(ind, ind.reversed());
  // Coefficients must equal the weight enumerator.
  auto nu = weight_enumerator(s);
  for (long i = 0; i < s.group.order(); ++i)
    if (prod.coeffs[i] != Rat(nu[i]))
      throw std::logic_error("ss_inverse: convolution disagrees with nu");
  return prod;
}

GroupAlgebraElement SubgroupCombination::expand(const Group &g) const {
  auto e = GroupAlgebraElement::zero(g);
  for (const auto &[h, lambda] : terms)
    for (long m : h.members) e.coeffs[m] += lambda;
  return e;
}

std::optional<SubgroupCombination> even_decomposition(const SetInGroup &s,
                                                      long bound) {
  const Group &g = s.group;
  auto subs = enumerate_subgroups(g, bound);
  auto target = ss_inverse(s);

  RatMat a(g.order(), std::vector<Rat>(subs.size(), Rat(0)));
  for (size_t j = 0; j < subs.size(); ++j)
    for (long m : subs[j].members) a[m][j] = 1;
  auto sol = solve_rational(std::move(a), target.coeffs);
  if (!sol) return std::nullopt;

  SubgroupCombination comb;
  for (size_t j = 0; j < subs.size(); ++j)
    if ((*sol)[j] != 0) comb.terms.emplace_back(subs[j], (*sol)[j]);
  if (!(comb.expand(g) == target))
    throw std::logic_error("even_decomposition: re-expansion mismatch");
  return comb;
}

namespace {

// Permutation order of sigma as a map on group elements.
long permutation_order(const std::vector<long> &sigma) {
  long order = 1;
  std::vector<bool> seen(sigma.size(), false);
  for (size_t i = 0; i < sigma.size(); ++i) {
    if (seen[i]) continue;
    long len = 0;
    for (long j = static_cast<long>(i); !seen[j]; j = sigma[j]) {
      seen[j] = true;
      ++len;
    }
    order = lcm_long(order, len);
  }
  return order;
}

std::vector<long> apply_sigma(const std::vector<long> &sigma,
                              const std::vector<long> &members) {
  std::vector<long> out;
  out.reserve(members.size());
  for (long m : members) out.push_back(sigma[m]);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

SubgroupCombination canonical_fsd_coefficients(const Pairing &p,
                                               const SetInGroup &s,
                                               const SubgroupCombination &mu) {
  const Group &g = p.group();
  check_same_group(g, s.group);
  if (Int(s.size()) * s.size() != g.order())
    throw std::domain_error("canonical coefficients need |S|^2 = |G|");

  auto subs = enumerate_subgroups(g);
  std::map<std::vector<long>, size_t> index;
  for (size_t j = 0; j < subs.size(); ++j) index.emplace(subs[j].members, j);

  std::vector<Rat> mu_vec(subs.size(), Rat(0));
  for (const auto &[h, v] : mu.terms) {
    auto it = index.find(h.members);
    if (it == index.end())
      throw std::invalid_argument("mu term is not a subgroup of the group");
    mu_vec[it->second] += v;
  }

  std::vector<long> sigma = p.sigma();
  long s_ord = permutation_order(sigma);

  // sigma and annihilator as permutations of the subgroup list.
  std::vector<size_t> sig_of(subs.size()), ann_of(subs.size());
  for (size_t j = 0; j < subs.size(); ++j) {
    sig_of[j] = index.at(apply_sigma(sigma, subs[j].members));
    ann_of[j] = index.at(annihilator(p, subs[j]).members);
  }

  SubgroupCombination out;
  for (size_t j = 0; j < subs.size(); ++j) {
    Rat ratio(Int(s.size()), Int(subs[j].order()));
    ratio.canonicalize();
    Rat acc(0);
    size_t cur = j;
    for (long i = 0; i < s_ord; ++i) {
      acc += mu_vec[cur];
      acc += ratio * mu_vec[ann_of[cur]];
      cur = sig_of[cur];
    }
    acc /= 2 * s_ord;
    if (acc != 0) out.terms.emplace_back(subs[j], acc);
  }
  return out;
}

bool zero_sum_check(const Pairing &p, const SetInGroup &s,
                    const SubgroupCombination &mu) {
  // |S|^2 = |G| is necessary; without it no canonical comparison exists.
  if (s.size() * s.size() != p.group().order()) return false;
  SubgroupCombination lambda = canonical_fsd_coefficients(p, s, mu);
  const Group &g = p.group();
  auto diff = mu.expand(g) - lambda.expand(g);
  return diff.is_zero();
}

} // namespace fsd
