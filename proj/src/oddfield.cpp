#include "fsd/oddfield.hpp"

#include <stdexcept>

namespace fsd {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// polynomial remainder of a by monic b, coefficients mod p
std::vector<long> poly_mod(std::vector<long> a, const std::vector<long> &b,
                           long p) {
  long db = static_cast<long>(b.size()) - 1;
  while (static_cast<long>(a.size()) > db) {
    long lead = a.back() % p;
    long da = static_cast<long>(a.size()) - 1;
    if (lead != 0)
      for (long i = 0; i <= db; ++i) {
        long &c = a[da - db + i];
        c = ((c - lead * b[i]) % p + p) % p;
      }
    a.pop_back();
  }
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  return a;
}

std::vector<long> poly_mulmod(const std::vector<long> &a,
                              const std::vector<long> &b,
                              const std::vector<long> &f, long p) {
  std::vector<long> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(prod), f, p);
}

bool poly_is_zero(const std::vector<long> &a) {
  for (long c : a)
    if (c != 0) return false;
  return true;
}

std::vector<long> poly_gcd(std::vector<long> a, std::vector<long> b, long p) {
  while (!poly_is_zero(b)) {
    // make b monic before taking the remainder
    long lead = b.back();
    long inv = 1;
    while (inv * lead % p != 1) ++inv;
    std::vector<long> bm = b;
    for (long &c : bm) c = c * inv % p;
    auto r = poly_mod(std::move(a), bm, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// f irreducible over F_p iff x^{p^m} = x mod f and gcd(x^{p^{m/r}} - x, f)
// is constant for every prime r | m.
bool poly_irreducible(const std::vector<long> &f, long p) {
  long m = static_cast<long>(f.size()) - 1;
  if (m < 1) return false;
  auto frob_pow = [&](long k) {
    // x^{p^k} mod f by repeated p-th powering
    std::vector<long> x{0, 1};
    std::vector<long> cur = poly_mod(std::move(x), f, p);
    for (long step = 0; step < k; ++step) {
      std::vector<long> acc{1};
      std::vector<long> base = cur;
      long e = p;
      while (e > 0) {
        if (e & 1) acc = poly_mulmod(acc, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
      }
      cur = std::move(acc);
    }
    return cur;
  };
  std::vector<long> xm = frob_pow(m);
  std::vector<long> x{0, 1};
  std::vector<long> diff(std::max(xm.size(), x.size()), 0);
  for (size_t i = 0; i < xm.size(); ++i) diff[i] = xm[i];
  for (size_t i = 0; i < x.size(); ++i) diff[i] = ((diff[i] - x[i]) % p + p) % p;
  if (!poly_is_zero(poly_mod(std::move(diff), f, p))) return false;
  for (long r = 2; r <= m; ++r) {
    if (m % r != 0 || !is_prime(r)) continue;
    std::vector<long> xr = frob_pow(m / r);
    std::vector<long> d(std::max<size_t>(xr.size(), 2), 0);
    for (size_t i = 0; i < xr.size(); ++i) d[i] = xr[i];
    d[1] = ((d[1] - 1) % p + p) % p;
    auto g = poly_gcd(f, poly_mod(std::move(d), f, p), p);
    size_t deg = g.size();
    while (deg > 1 && g[deg - 1] == 0) --deg;
    if (deg > 1) return false;
  }
  return true;
}

} // namespace

std::vector<long> OddField::first_irreducible(long p, long m) {
  if (m == 1) return {0, 1}; // x itself; never used for reduction at m=1
  // candidates ordered lexicographically by (c_0, ..., c_{m-1}), monic
  std::vector<long> c(m, 0);
  for (;;) {
    std::vector<long> f(c);
    f.push_back(1);
    if (poly_irreducible(f, p)) return f;
    long j = m - 1;
    while (j >= 0 && c[j] == p - 1) c[j--] = 0;
    if (j < 0) throw std::logic_error("no irreducible polynomial found");
    ++c[j];
  }
}

OddField::OddField(long p, long m) : OddField(p, m, first_irreducible(p, m)) {}

OddField::OddField(long p, long m, std::vector<long> irreducible)
    : p_(p), m_(m), q_(1), group_(std::vector<long>(m, p)),
      poly_(std::move(irreducible)) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  for (long i = 0; i < m; ++i) q_ *= p;
  if (static_cast<long>(poly_.size()) != m + 1 || poly_.back() != 1)
    throw std::invalid_argument("irreducible must be monic of degree m");
  for (long &c : poly_) c = ((c % p) + p) % p;
  if (m > 1 && !poly_irreducible(poly_, p))
    throw std::invalid_argument("polynomial is reducible");
  one_ = group_.index_of([&] {
    Coords u(m, 0);
    u[0] = 1;
    return u;
  }());
  build_tables();
}

long OddField::from_prime_residue(long r) const {
  Coords u(m_, 0);
  u[0] = ((r % p_) + p_) % p_;
  return group_.index_of(u);
}

std::vector<long> OddField::reduce(std::vector<long> prod) const {
  if (m_ == 1) {
    return {((prod[0] % p_) + p_) % p_};
  }
  return poly_mod(std::move(prod), poly_, p_);
}

long OddField::mul(long a, long b) const {
  Coords ca = group_.coords_of(a), cb = group_.coords_of(b);
  std::vector<long> prod(2 * m_ - 1, 0);
  for (long i = 0; i < m_; ++i)
    for (long j = 0; j < m_; ++j)
      prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
  std::vector<long> r = reduce(std::move(prod));
  r.resize(m_, 0);
  return group_.index_of(r);
}

long OddField::pow(long a, long e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  long acc = one_, base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

long OddField::inv(long a) const {
  if (a == 0) throw std::domain_error("zero has no inverse");
  return pow(a, q_ - 2);
}

long OddField::trace(long a) const { return trace_table_[a]; }

int OddField::eta(long a) const { return eta_table_[a]; }

void OddField::build_tables() {
  trace_table_.assign(q_, 0);
  eta_table_.assign(q_, -1);
  for (long a = 0; a < q_; ++a) {
    long acc = 0, t = a;
    for (long i = 0; i < m_; ++i) {
      acc = group_.add(acc, t);
      t = pow(t, p_);
    }
    Coords c = group_.coords_of(acc);
    for (long i = 1; i < m_; ++i)
      if (c[i] != 0) throw std::logic_error("trace left the prime subfield");
    trace_table_[a] = c[0];
  }
  eta_table_[0] = 0;
  for (long a = 1; a < q_; ++a) eta_table_[mul(a, a)] = 1;
}

} // namespace fsd
