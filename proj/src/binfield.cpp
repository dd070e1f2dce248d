#include "fsd/binfield.hpp"

#include <stdexcept>

namespace fsd {

namespace {

int degree(uint64_t p) {
  int d = -1;
  while (p) {
    ++d;
    p >>= 1;
  }
  return d;
}

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t poly, int n) {
  uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> n) a ^= poly;
  }
  return r;
}

uint64_t poly_gcd2(uint64_t a, uint64_t b) {
  while (b) {
    int shift;
    while ((shift = degree(a) - degree(b)) >= 0) {
      a ^= b << shift;
      if (a == 0) break;
    }
    std::swap(a, b);
  }
  return a;
}

bool is_prime_int(int v) {
  if (v < 2) return false;
  for (int d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

// Rabin test: f irreducible of degree n over F_2 iff x^{2^n} = x (mod f)
// and gcd(x^{2^{n/r}} - x, f) = 1 for every prime r dividing n.
bool irreducible(uint64_t f, int n) {
  if (n == 1) return f == 2 || f == 3;
  auto frob_steps = [&](int k) {
    uint64_t cur = 2; // the element "x"
    for (int i = 0; i < k; ++i) cur = mul_mod(cur, cur, f, n);
    return cur;
  };
  if (frob_steps(n) != 2) return false;
  for (int r = 2; r <= n; ++r) {
    if (n % r != 0 || !is_prime_int(r)) continue;
    uint64_t d = frob_steps(n / r) ^ 2;
    if (poly_gcd2(f, d) != 1) return false;
  }
  return true;
}

} // namespace

uint64_t BinaryField::default_poly(int n) {
  for (uint64_t f = (uint64_t(1) << n) + 1; f < (uint64_t(2) << n); f += 2)
    if (irreducible(f, n)) return f;
  throw std::logic_error("no irreducible polynomial found");
}

BinaryField::BinaryField(int n) : BinaryField(n, default_poly(n)) {}

BinaryField::BinaryField(int n, uint64_t poly) : n_(n), poly_(poly) {
  if (n < 1 || n > 24) throw std::invalid_argument("field degree out of range");
  if (degree(poly) != n || !irreducible(poly, n))
    throw std::invalid_argument("modulus is not irreducible of degree n");
  trace_table_.assign(size_t(1) << n_, 0);
  for (uint64_t a = 0; a < size(); ++a) {
    uint64_t acc = 0, t = a;
    for (int i = 0; i < n_; ++i) {
      acc ^= t;
      t = mul(t, t);
    }
    if (acc > 1) throw std::logic_error("trace left F_2");
    trace_table_[a] = static_cast<int8_t>(acc);
  }
}

uint64_t BinaryField::mul(uint64_t a, uint64_t b) const {
  return mul_mod(a, b, poly_, n_);
}

uint64_t BinaryField::pow(uint64_t a, uint64_t e) const {
  uint64_t acc = 1, base = a;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

uint64_t BinaryField::inv(uint64_t a) const {
  if (a == 0) throw std::domain_error("zero has no inverse");
  return pow(a, size() - 2);
}

int BinaryField::trace(uint64_t a) const { return trace_table_[a]; }

} // namespace fsd
