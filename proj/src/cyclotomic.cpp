#include "fsd/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fsd {

namespace {

// Exact division of polynomials over Z, divisor monic. Returns quotient.
std::vector<Int> poly_div_exact(const std::vector<Int> &num,
                                const std::vector<Int> &den) {
  std::vector<Int> r = num;
  int dn = static_cast<int>(r.size()) - 1;
  int dd = static_cast<int>(den.size()) - 1;
  std::vector<Int> q(dn - dd + 1, 0);
  for (int i = dn; i >= dd; --i) {
    Int f = r[i];
    if (f == 0) continue;
    q[i - dd] = f;
    for (int j = 0; j <= dd; ++j) r[i - dd + j] -= f * den[j];
  }
  for (const Int &c : r)
    if (c != 0) throw std::logic_error("inexact polynomial division");
  return q;
}

std::map<long, std::vector<Int>> g_phi_cache;
std::mutex g_phi_mutex;

std::vector<Int> compute_phi(long n);

const std::vector<Int> &phi_cached(long n) {
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  auto it = g_phi_cache.find(n);
  if (it != g_phi_cache.end()) return it->second;
  auto r = g_phi_cache.emplace(n, compute_phi(n));
  return r.first->second;
}

std::vector<Int> compute_phi(long n) {
  // x^n - 1 divided by the product of Phi_d over proper divisors d.
  std::vector<Int> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = poly_div_exact(num, g_phi_cache.at(d)); // d < n already cached
  }
  return num;
}

} // namespace

const std::vector<Int> &cyclotomic_polynomial(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
  // Fill the cache bottom-up so compute_phi sees all proper divisors.
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) phi_cached(d);
  return phi_cached(n);
}

Cyclo::Cyclo(long order) : n_(order) {
  c_.assign(cyclotomic_polynomial(order).size() - 1, 0);
}

Cyclo Cyclo::integer(long order, Int v) {
  Cyclo z(order);
  z.c_[0] = std::move(v);
  return z;
}

Cyclo Cyclo::root(long order, long e) {
  e %= order;
  if (e < 0) e += order;
  Cyclo z(order);
  std::vector<Int> poly(e + 1, 0);
  poly[e] = 1;
  z.reduce_from(std::move(poly));
  return z;
}

bool Cyclo::is_zero() const {
  for (const Int &v : c_)
    if (v != 0) return false;
  return true;
}

void Cyclo::reduce_from(std::vector<Int> poly) {
  const std::vector<Int> &phi = cyclotomic_polynomial(n_);
  int deg = static_cast<int>(phi.size()) - 1;
  for (int i = static_cast<int>(poly.size()) - 1; i >= deg; --i) {
    Int f = poly[i];
    if (f == 0) continue;
    poly[i] = 0;
    for (int j = 0; j < deg; ++j) poly[i - deg + j] -= f * phi[j];
  }
  c_.assign(deg, 0);
  for (int i = 0; i < deg && i < static_cast<int>(poly.size()); ++i)
    c_[i] = poly[i];
}

Cyclo Cyclo::operator+(const Cyclo &o) const {
  if (n_ != o.n_) throw std::invalid_argument("cyclotomic order mismatch");
  Cyclo z(n_);
  for (size_t i = 0; i < c_.size(); ++i) z.c_[i] = c_[i] + o.c_[i];
  return z;
}

Cyclo Cyclo::operator-(const Cyclo &o) const {
  if (n_ != o.n_) throw std::invalid_argument("cyclotomic order mismatch");
  Cyclo z(n_);
  for (size_t i = 0; i < c_.size(); ++i) z.c_[i] = c_[i] - o.c_[i];
  return z;
}

Cyclo Cyclo::operator-() const {
  Cyclo z(n_);
  for (size_t i = 0; i < c_.size(); ++i) z.c_[i] = -c_[i];
  return z;
}

Cyclo Cyclo::operator*(const Cyclo &o) const {
  if (n_ != o.n_) throw std::invalid_argument("cyclotomic order mismatch");
  std::vector<Int> conv(2 * c_.size(), 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) conv[i + j] += c_[i] * o.c_[j];
  }
  Cyclo z(n_);
  z.reduce_from(std::move(conv));
  return z;
}

Cyclo Cyclo::galois(long k) const {
  k %= n_;
  if (k < 0) k += n_;
  if (std::gcd(k, n_) != 1)
    throw std::invalid_argument("galois exponent not coprime to order");
  std::vector<Int> poly(n_, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    poly[(static_cast<long>(i) * k) % n_] += c_[i];
  Cyclo z(n_);
  z.reduce_from(std::move(poly));
  return z;
}

std::optional<Rat> Cyclo::as_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return std::nullopt;
  return Rat(c_[0]);
}

std::string Cyclo::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << c_[i].get_str();
    if (i >= 1) os << "*z^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Cyclo cyclo_norm(const Cyclo &z) { return z * z.conj(); }

} // namespace fsd
