#include "fsd/search.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>

namespace fsd {

namespace {

void validate_common(const SearchSpec &spec) {
  if (spec.size < 1) throw std::domain_error("set size must be positive");
  if (spec.budget_nodes < 1) throw std::domain_error("budget must be positive");
  if (spec.pairing && spec.pairing->group() != spec.group)
    throw std::invalid_argument("pairing group mismatch");
  if (!spec.seed_prefix.empty()) {
    if (spec.seed_prefix.front() != 0)
      throw std::domain_error("seed prefix must start at the identity");
    for (size_t i = 1; i < spec.seed_prefix.size(); ++i)
      if (spec.seed_prefix[i] <= spec.seed_prefix[i - 1])
        throw std::domain_error("seed prefix must be strictly increasing");
    if (static_cast<long>(spec.seed_prefix.size()) > spec.size)
      throw std::domain_error("seed prefix longer than the set size");
  }
}

} // namespace

SearchResult search_fsd(const SearchSpec &spec) {
  validate_common(spec);
  const Group &g = spec.group;
  long k = spec.size;
  if (k * k != g.order())
    throw std::domain_error("self-dual search needs size^2 = |G|");
  Pairing p = spec.pairing ? *spec.pairing : standard_pairing(g);

  long n = g.order();
  long modulus = p.modulus();

  SearchResult result;
  std::vector<long> members;
  std::vector<long> nu(n, 0);

  // Partial character sums in floating point, used only to prune branches
  // that are provably dead and to pre-filter leaves; every emitted hit still
  // passes the exact verifier. The table is skipped for very large groups.
  bool track_sums = n <= 1024;
  std::vector<std::complex<double>> roots(modulus);
  for (long e = 0; e < modulus; ++e)
    roots[e] = std::polar(1.0, 2.0 * M_PI * double(e) / double(modulus));
  std::vector<std::complex<double>> wsum(track_sums ? n : 0);
  // exponent_of is modular arithmetic per coordinate; cache it per element
  std::vector<std::vector<long>> expo;
  if (track_sums) {
    expo.resize(n, std::vector<long>(n));
    for (long gg = 0; gg < n; ++gg)
      for (long x = 0; x < n; ++x) expo[gg][x] = p.exponent_of(gg, x);
  }

  std::vector<long> seed = spec.seed_prefix.empty() ? std::vector<long>{0}
                                                    : spec.seed_prefix;

  auto push = [&](long x) {
    for (long y : members) {
      ++nu[g.sub(x, y)];
      ++nu[g.sub(y, x)];
    }
    ++nu[0];
    members.push_back(x);
    if (track_sums)
      for (long gg = 0; gg < n; ++gg) wsum[gg] += roots[expo[gg][x]];
  };
  auto pop = [&]() {
    long x = members.back();
    members.pop_back();
    for (long y : members) {
      --nu[g.sub(x, y)];
      --nu[g.sub(y, x)];
    }
    --nu[0];
    if (track_sums)
      for (long gg = 0; gg < n; ++gg) wsum[gg] -= roots[expo[gg][x]];
  };

  auto prunable = [&]() {
    long r = k - static_cast<long>(members.size());
    for (long gg = 0; gg < n; ++gg) {
      if (nu[gg] > k) return true;
      if (track_sums) {
        // nu only grows, so k*nu[gg] is a lower bound for the final
        // |char sum|^2, while |partial| + remaining bounds it from above
        double reach = std::abs(wsum[gg]) + double(r);
        if (reach * reach < double(k) * double(nu[gg]) - 1e-6) return true;
      }
    }
    return false;
  };

  auto emit = [&]() {
    if (track_sums) {
      // cheap rejection: both sides are within 1e-9 of the true values, so
      // a gap of 0.25 certifies a violation without exact arithmetic
      for (long gg = 0; gg < n; ++gg) {
        double lhs = std::norm(wsum[gg]);
        if (std::abs(lhs - double(k) * double(nu[gg])) > 0.25) return;
      }
    }
    SetInGroup s = SetInGroup::make(g, members);
    if (is_formally_self_dual(p, s).verdict)
      result.hits.push_back({s, is_primitive(s).primitive});
  };

  for (long x : seed) push(x);

  bool budget_hit = false;
  auto dfs = [&](auto &&self, long next_min) -> void {
    if (budget_hit) return;
    if (++result.nodes > spec.budget_nodes) {
      budget_hit = true;
      return;
    }
    if (static_cast<long>(members.size()) == k) {
      emit();
      return;
    }
    long remaining = k - static_cast<long>(members.size());
    for (long x = next_min; x <= n - remaining; ++x) {
      push(x);
      if (!prunable()) self(self, x + 1);
      pop();
      if (budget_hit) return;
    }
  };
  if (!prunable()) dfs(dfs, seed.back() + 1);
  result.complete = !budget_hit;
  std::sort(result.hits.begin(), result.hits.end(),
            [](const SearchHit &a, const SearchHit &b) {
              return a.set.members < b.set.members;
            });
  return result;
}

std::vector<SetInGroup> brute_force_fsd(const Pairing &p, long k) {
  const Group &g = p.group();
  long n = g.order();
  std::vector<SetInGroup> hits;
  std::vector<long> members{0};
  auto rec = [&](auto &&self, long next_min) -> void {
    if (static_cast<long>(members.size()) == k) {
      SetInGroup s = SetInGroup::make(g, members);
      if (is_formally_self_dual(p, s).verdict) hits.push_back(s);
      return;
    }
    long remaining = k - static_cast<long>(members.size());
    for (long x = next_min; x <= n - remaining; ++x) {
      members.push_back(x);
      self(self, x + 1);
      members.pop_back();
    }
  };
  rec(rec, 1);
  return hits;
}

PairSearchResult search_fd_pairs(const SearchSpec &spec) {
  validate_common(spec);
  const Group &g = spec.group;
  long n = g.order();
  long s_size = spec.size;
  if (n % s_size != 0)
    throw std::domain_error("set size must divide the group order");
  long t_size = n / s_size;
  if (n > 64) throw std::domain_error("pair search is limited to |G| <= 64");
  Pairing p = spec.pairing ? *spec.pairing : standard_pairing(g);

  PairSearchResult result;

  // enumerate candidate sets containing the identity, keyed by their
  // weight enumerator
  auto collect = [&](long k) {
    std::vector<SetInGroup> out;
    std::vector<long> members{0};
    auto rec = [&](auto &&self, long next_min) -> void {
      ++result.nodes;
      if (static_cast<long>(members.size()) == k) {
        out.push_back(SetInGroup::make(g, members));
        return;
      }
      long remaining = k - static_cast<long>(members.size());
      for (long x = next_min; x <= n - remaining; ++x) {
        members.push_back(x);
        self(self, x + 1);
        members.pop_back();
      }
    };
    rec(rec, 1);
    return out;
  };

  std::vector<SetInGroup> s_cands = collect(s_size);
  std::vector<SetInGroup> t_cands =
      t_size == s_size ? s_cands : collect(t_size);

  std::map<std::vector<long>, std::vector<const SetInGroup *>> t_by_nu;
  for (const SetInGroup &t : t_cands) t_by_nu[weight_enumerator(t)].push_back(&t);

  for (const SetInGroup &s : s_cands) {
    // required nu_T(g) = (t/s^2) |<g,S>|^2; must be a nonnegative integer
    std::vector<long> need(n, -1);
    bool feasible = true;
    for (long gg = 0; gg < n && feasible; ++gg) {
      auto val = cyclo_norm(char_sum(p, gg, s)).as_rational();
      if (!val) {
        feasible = false;
        break;
      }
      Rat r = *val * Rat(Int(t_size), Int(s_size) * Int(s_size));
      r.canonicalize();
      if (r.get_den() != 1 || r < 0 || r.get_num() > t_size * t_size) {
        feasible = false;
        break;
      }
      need[gg] = r.get_num().get_si();
    }
    if (!feasible) continue;
    auto it = t_by_nu.find(need);
    if (it == t_by_nu.end()) continue;
    for (const SetInGroup *t : it->second)
      if (is_formally_dual_pair(p, s, *t).verdict) result.hits.push_back({s, *t});
  }
  return result;
}

} // namespace fsd
