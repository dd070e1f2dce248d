#include "fsd/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace fsd {

namespace {

long modinv_p(long a, long p) {
  a = ((a % p) + p) % p;
  if (a == 0) throw std::domain_error("no inverse mod p");
  long r = 1;
  for (long e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
  }
  return r;
}

void require_verified(const DualityCertificate &c, const char *what) {
  if (!c.verdict) throw std::logic_error(std::string(what) + ": verification failed");
}

} // namespace

std::pair<Pairing, SetInGroup> tito() {
  Group g({4});
  return {standard_pairing(g), SetInGroup::make(g, {0, 1})};
}

std::pair<Pairing, SetInGroup> lattice_example(long n) {
  if (n < 1) throw std::domain_error("n must be >= 1");
  Group g({n * n});
  std::vector<long> members;
  for (long k = 0; k < n; ++k) members.push_back(n * k);
  Pairing p = standard_pairing(g);
  SetInGroup s = SetInGroup::make(g, std::move(members));
  require_verified(is_formally_self_dual(p, s), "lattice example");
  return {p, s};
}

std::pair<Pairing, SetInGroup> gaussian_example(long p, long alpha) {
  if (p < 2) throw std::domain_error("p must be prime");
  alpha = ((alpha % p) + p) % p;
  if ((alpha * alpha + 1) % p != 0)
    throw std::domain_error("alpha^2 must be -1 mod p");
  Group g({p, p});
  std::vector<long> members;
  for (long k = 0; k < p; ++k) members.push_back(g.index_of({k, k * alpha % p}));
  Pairing pr = standard_pairing(g);
  SetInGroup s = SetInGroup::make(g, std::move(members));
  require_verified(is_formally_self_dual(pr, s), "gaussian example");
  return {pr, s};
}

std::pair<bool, long> is_relative_difference_set(const SetInGroup &s,
                                                 const Subgroup &n) {
  const Group &g = s.group;
  std::vector<long> nu = weight_enumerator(s);
  long lambda = -1;
  for (long x = 1; x < g.order(); ++x) {
    if (n.contains(x)) {
      if (nu[x] != 0) return {false, 0};
    } else {
      if (lambda < 0) lambda = nu[x];
      if (nu[x] != lambda) return {false, 0};
    }
  }
  return {true, lambda < 0 ? 0 : lambda};
}

std::vector<long> paley_set(const OddField &f) {
  if (f.size() % 4 != 3)
    throw std::domain_error("Paley set needs p^m = 3 mod 4");
  std::vector<long> d;
  for (long a = 1; a < f.size(); ++a)
    if (f.eta(a) == 1) d.push_back(a);
  return d;
}

bool is_skew_hadamard(const Group &g, const std::vector<long> &d) {
  if (d.empty()) return false;
  std::vector<int> tag(g.order(), 0); // 1 in D, 2 in D^(-1)
  for (long x : d) {
    if (x == 0 || tag[x]) return false;
    tag[x] = 1;
  }
  for (long x : d) {
    long nx = g.neg(x);
    if (tag[nx]) return false;
    tag[nx] = 2;
  }
  for (long x = 1; x < g.order(); ++x)
    if (!tag[x]) return false; // partition fails
  SetInGroup s = SetInGroup::make(g, d);
  std::vector<long> nu = weight_enumerator(s);
  for (long x = 2; x < g.order(); ++x)
    if (nu[x] != nu[1]) return false; // DD^(-1) not flat off the identity
  return true;
}

Pairing trace_pairing(const OddField &f) {
  long m = f.m();
  std::vector<std::vector<long>> b(m, std::vector<long>(m));
  for (long j = 0; j < m; ++j)
    for (long k = 0; k < m; ++k) {
      Coords cj(m, 0), ck(m, 0);
      cj[j] = 1;
      ck[k] = 1;
      b[j][k] = f.trace(f.mul(f.additive_group().index_of(cj),
                              f.additive_group().index_of(ck)));
    }
  return Pairing(f.additive_group(), b);
}

Cyclo i_sqrt_q(const OddField &f) {
  long p = f.p();
  if (p % 4 != 3 || f.m() % 2 != 1)
    throw std::domain_error("i*sqrt(q) in Z[zeta_p] needs p^m = 3 mod 4");
  // quadratic Gauss sum: sum of legendre(x) zeta_p^x equals i*sqrt(p)
  Cyclo gauss(p);
  for (long x = 1; x < p; ++x) {
    long leg = 1, base = x % p;
    long sq = 1;
    for (long e = (p - 1) / 2; e > 0; e >>= 1) {
      if (e & 1) sq = sq * base % p;
      base = base * base % p;
    }
    leg = (sq == 1) ? 1 : -1;
    gauss += Cyclo::integer(p, leg) * Cyclo::root(p, x);
  }
  // i*sqrt(p^m) = p^{(m-1)/2} * i*sqrt(p) for odd m
  Int scale = 1;
  for (long k = 0; k < (f.m() - 1) / 2; ++k) scale *= p;
  return Cyclo::integer(p, scale) * gauss;
}

std::vector<long> dual_set_Dstar(const OddField &f, const Pairing &p,
                                 const std::vector<long> &d) {
  if (!p.is_nondegenerate()) throw std::domain_error("pairing is degenerate");
  Cyclo target = i_sqrt_q(f); // 2<a,D> + 1 must equal i*sqrt(q)
  SetInGroup s = SetInGroup::make(f.additive_group(), d);
  std::vector<long> out;
  for (long a = 0; a < f.size(); ++a) {
    Cyclo cs = char_sum(p, a, s);
    if (cs + cs + Cyclo::integer(p.modulus(), 1) == target) out.push_back(a);
  }
  return out;
}

ShdsResult shds_pair(const OddField &f, const std::vector<long> &d, long alpha,
                     long beta) {
  long p = f.p(), m = f.m();
  alpha = ((alpha % p) + p) % p;
  beta = ((beta % p) + p) % p;
  if (alpha == 0 || beta == 0 || alpha == beta)
    throw std::domain_error("alpha, beta must be distinct and nonzero mod p");
  if (!is_skew_hadamard(f.additive_group(), d))
    throw std::domain_error("D is not a skew Hadamard difference set");

  Pairing tr = trace_pairing(f);
  std::vector<long> dstar = dual_set_Dstar(f, tr, d);

  std::vector<long> d_sorted(d), dinv, dstar_inv;
  std::sort(d_sorted.begin(), d_sorted.end());
  for (long x : d) dinv.push_back(f.neg(x));
  for (long x : dstar) dstar_inv.push_back(f.neg(x));
  std::sort(dinv.begin(), dinv.end());
  std::sort(dstar_inv.begin(), dstar_inv.end());
  std::vector<long> dstar_sorted(dstar);
  std::sort(dstar_sorted.begin(), dstar_sorted.end());

  bool dstar_is_d = dstar_sorted == d_sorted;
  if (!dstar_is_d && dstar_sorted != dinv)
    throw std::logic_error("D* is neither D nor D^(-1)");

  Group g2(std::vector<long>(2 * m, p));
  auto pack = [&](long x, long y) {
    Coords cx = f.additive_group().coords_of(x);
    Coords cy = f.additive_group().coords_of(y);
    Coords c(2 * m);
    for (long j = 0; j < m; ++j) {
      c[j] = cx[j];
      c[m + j] = cy[j];
    }
    return g2.index_of(c);
  };

  std::vector<long> s_members{pack(0, 0)};
  for (long x : d) s_members.push_back(pack(x, f.scalar_mul(alpha, x)));
  for (long x : dinv) s_members.push_back(pack(x, f.scalar_mul(beta, x)));

  long c = modinv_p(alpha - beta, p);        // 1/(alpha-beta)
  long cm = (p - c) % p;                     // 1/(beta-alpha)
  std::vector<long> t_members{pack(0, 0)};
  for (long x : dstar)
    t_members.push_back(
        pack(f.scalar_mul(alpha * c % p, x), f.scalar_mul(cm, x)));
  for (long x : dstar_inv)
    t_members.push_back(
        pack(f.scalar_mul(beta * c % p, x), f.scalar_mul(cm, x)));

  // product trace pairing on Z_p^m x Z_p^m
  std::vector<std::vector<long>> bprod(2 * m, std::vector<long>(2 * m, 0));
  const auto &bt = tr.matrix();
  for (long j = 0; j < m; ++j)
    for (long k = 0; k < m; ++k) {
      bprod[j][k] = bt[j][k];
      bprod[m + j][m + k] = bt[j][k];
    }
  Pairing prod(g2, bprod);

  SetInGroup s = SetInGroup::make(g2, s_members);
  SetInGroup t = SetInGroup::make(g2, t_members);
  require_verified(is_formally_dual_pair(prod, s, t), "shds dual pair");

  // pi matrix acting on the second argument; composed matrix is B * P
  std::vector<std::vector<long>> pm(2 * m, std::vector<long>(2 * m, 0));
  if (dstar_is_d) {
    // pi(x,y) = (c*y, -c*x)
    for (long j = 0; j < m; ++j) {
      pm[j][m + j] = c;
      pm[m + j][j] = cm;
    }
  } else {
    // pi(x,y) = ((alpha+beta)c*x - c*y, -c*x)
    for (long j = 0; j < m; ++j) {
      pm[j][j] = (alpha + beta) % p * c % p;
      pm[j][m + j] = cm;
      pm[m + j][j] = cm;
    }
  }
  // check T = pi(S)
  {
    std::vector<long> pi_s;
    for (long idx : s.members) {
      Coords v = g2.coords_of(idx);
      Coords w(2 * m, 0);
      for (long r = 0; r < 2 * m; ++r)
        for (long k = 0; k < 2 * m; ++k) w[r] = (w[r] + pm[r][k] * v[k]) % p;
      pi_s.push_back(g2.index_of(w));
    }
    std::sort(pi_s.begin(), pi_s.end());
    if (pi_s != t.members) throw std::logic_error("T != pi(S)");
  }

  std::vector<std::vector<long>> bcomp(2 * m, std::vector<long>(2 * m, 0));
  for (long j = 0; j < 2 * m; ++j)
    for (long k = 0; k < 2 * m; ++k) {
      long acc = 0;
      for (long l = 0; l < 2 * m; ++l) acc = (acc + bprod[j][l] * pm[l][k]) % p;
      bcomp[j][k] = acc;
    }
  Pairing comp(g2, bcomp);
  require_verified(is_formally_self_dual(comp, s), "shds self dual");

  return {prod, s, t, comp, dstar_is_d};
}

std::vector<std::pair<Pairing, SetInGroup>> sporadic_order64() {
  std::vector<std::pair<Pairing, SetInGroup>> out;
  {
    Group g({2, 4, 8});
    SetInGroup s = SetInGroup::parse(
        g, "{(0,0,0),(0,0,1),(0,0,2),(0,0,5),(0,1,0),(0,3,0),(1,0,0),(1,2,6)}");
    out.emplace_back(standard_pairing(g), s);
  }
  {
    Group g({2, 2, 2, 8});
    SetInGroup s = SetInGroup::parse(g,
                                     "{(0,0,0,0),(0,0,0,1),(0,0,0,2),(0,0,0,5),"
                                     "(0,0,1,0),(0,1,0,0),(1,0,0,0),(1,1,1,6)}");
    out.emplace_back(standard_pairing(g), s);
  }
  return out;
}

} // namespace fsd
