#include "fsd/codes.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fsd/binfield.hpp"
#include "fsd/cyclotomic.hpp"

namespace fsd {

namespace {

long hamming_weight(const std::vector<long> &w) {
  long c = 0;
  for (long s : w) c += (s != 0);
  return c;
}

long hamming_distance(const std::vector<long> &a, const std::vector<long> &b) {
  long c = 0;
  for (size_t i = 0; i < a.size(); ++i) c += (a[i] != b[i]);
  return c;
}

int log2_exact(long q) {
  int k = 0;
  while ((1L << k) < q) ++k;
  if ((1L << k) != q) throw std::invalid_argument("alphabet size not a power of 2");
  return k;
}

} // namespace

CodeSet CodeSet::make(Alphabet a, long q, long length,
                      std::vector<std::vector<long>> words) {
  CodeSet c{a, q, length, std::move(words)};
  if (c.q < 2) throw std::invalid_argument("alphabet too small");
  if (a == Alphabet::Z4 && q != 4) throw std::invalid_argument("Z4 means q=4");
  std::set<std::vector<long>> seen;
  for (auto &w : c.words) {
    if (static_cast<long>(w.size()) != length)
      throw std::invalid_argument("word of wrong length");
    for (long &s : w) {
      s %= c.q;
      if (s < 0) s += c.q;
    }
    if (!seen.insert(w).second) throw std::invalid_argument("duplicate word");
  }
  std::sort(c.words.begin(), c.words.end());
  return c;
}

std::string EnumeratorPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (long w = 0; w <= length; ++w) {
    const Rat &a = coeffs[w];
    if (a == 0) continue;
    if (!first) os << " + ";
    first = false;
    long xp = length - w;
    if (a != 1 || (xp == 0 && w == 0)) os << fsd::to_string(a);
    bool printed = a != 1;
    if (xp > 0) {
      if (printed) os << "*";
      os << "X" << (xp > 1 ? "^" + std::to_string(xp) : "");
      printed = true;
    }
    if (w > 0) {
      if (printed) os << "*";
      os << "Y" << (w > 1 ? "^" + std::to_string(w) : "");
    }
  }
  if (first) os << "0";
  return os.str();
}

std::string EnumeratorPoly::coeff_line() const {
  std::ostringstream os;
  for (long w = 0; w <= length; ++w) {
    if (w) os << " ";
    os << fsd::to_string(coeffs[w]);
  }
  return os.str();
}

EnumeratorPoly weight_enumerator_poly(const CodeSet &c) {
  EnumeratorPoly e{c.length, std::vector<Rat>(c.length + 1, Rat(0))};
  for (const auto &w : c.words) e.coeffs[hamming_weight(w)] += 1;
  return e;
}

EnumeratorPoly distance_enumerator_poly(const CodeSet &c) {
  EnumeratorPoly e{c.length, std::vector<Rat>(c.length + 1, Rat(0))};
  if (c.words.empty()) return e;
  Rat inv_size(Int(1), Int(c.words.size()));
  for (const auto &a : c.words)
    for (const auto &b : c.words)
      e.coeffs[hamming_distance(a, b)] += inv_size;
  return e;
}

EnumeratorPoly macwilliams_transform(const EnumeratorPoly &e, long q,
                                     const Rat &size) {
  if (q < 2 || size <= 0) throw std::invalid_argument("bad transform parameters");
  long n = e.length;
  // binomial table
  std::vector<std::vector<Int>> binom(n + 1, std::vector<Int>(n + 1, 0));
  for (long i = 0; i <= n; ++i) {
    binom[i][0] = 1;
    for (long j = 1; j <= i; ++j)
      binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : Int(0));
  }
  EnumeratorPoly out{n, std::vector<Rat>(n + 1, Rat(0))};
  for (long w = 0; w <= n; ++w) {
    if (e.coeffs[w] == 0) continue;
    // (X+(q-1)Y)^{n-w} (X-Y)^w: coefficient of X^{n-v}Y^v
    for (long i = 0; i <= n - w; ++i)
      for (long j = 0; j <= w; ++j) {
        long v = i + j;
        Int coef = binom[n - w][i] * binom[w][j];
        Int qpow = 1;
        for (long t = 0; t < i; ++t) qpow *= (q - 1);
        Rat term = e.coeffs[w] * Rat(coef * qpow);
        if (j % 2 == 1) term = -term;
        out.coeffs[v] += term;
      }
  }
  for (Rat &a : out.coeffs) a /= size;
  return out;
}

CodeDualCheck formal_dual_codes_check(const CodeSet &c, const CodeSet &cp) {
  if (c.length != cp.length || c.q != cp.q)
    throw std::invalid_argument("codes must share length and alphabet size");
  CodeDualCheck r;
  Rat size(Int(c.words.size()));
  r.weight_dual =
      macwilliams_transform(weight_enumerator_poly(c), c.q, size) ==
      weight_enumerator_poly(cp);
  r.distance_dual =
      macwilliams_transform(distance_enumerator_poly(c), c.q, size) ==
      distance_enumerator_poly(cp);
  return r;
}

std::vector<long> gray_map(const std::vector<long> &word) {
  static const int b1[4] = {0, 0, 1, 1};
  static const int b2[4] = {0, 1, 1, 0};
  size_t n = word.size();
  std::vector<long> out(2 * n);
  for (size_t i = 0; i < n; ++i) {
    long s = ((word[i] % 4) + 4) % 4;
    out[i] = b1[s];
    out[n + i] = b2[s];
  }
  return out;
}

CodeSet gray_map(const CodeSet &c) {
  if (c.alphabet != CodeSet::Alphabet::Z4)
    throw std::invalid_argument("Gray map applies to Z4 codes");
  std::vector<std::vector<long>> words;
  for (const auto &w : c.words) words.push_back(gray_map(w));
  return CodeSet::make(CodeSet::Alphabet::Prime, 2, 2 * c.length,
                       std::move(words));
}

CodeSet z4_span(long length, const std::vector<std::vector<long>> &generators) {
  std::set<std::vector<long>> words{std::vector<long>(length, 0)};
  for (const auto &g : generators) {
    if (static_cast<long>(g.size()) != length)
      throw std::invalid_argument("generator of wrong length");
    std::set<std::vector<long>> next;
    for (const auto &w : words)
      for (long k = 0; k < 4; ++k) {
        std::vector<long> v(w);
        for (long i = 0; i < length; ++i) v[i] = (v[i] + k * g[i]) % 4;
        next.insert(std::move(v));
      }
    words = std::move(next);
  }
  return CodeSet::make(CodeSet::Alphabet::Z4, 4, length,
                       {words.begin(), words.end()});
}

CodeSet z4_dual(const CodeSet &c) {
  if (c.alphabet != CodeSet::Alphabet::Z4)
    throw std::invalid_argument("Z4 dual applies to Z4 codes");
  long n = c.length;
  long total = 1;
  for (long i = 0; i < n; ++i) total *= 4;
  std::vector<std::vector<long>> words;
  for (long idx = 0; idx < total; ++idx) {
    std::vector<long> x(n);
    long t = idx;
    for (long i = 0; i < n; ++i) {
      x[i] = t % 4;
      t /= 4;
    }
    bool ok = true;
    for (const auto &cw : c.words) {
      long dot = 0;
      for (long i = 0; i < n; ++i) dot = (dot + x[i] * cw[i]) % 4;
      if (dot != 0) {
        ok = false;
        break;
      }
    }
    if (ok) words.push_back(std::move(x));
  }
  return CodeSet::make(CodeSet::Alphabet::Z4, 4, n, std::move(words));
}

bool char_sum_distance_identity_check(const CodeSet &c) {
  if (c.alphabet == CodeSet::Alphabet::Z4)
    throw std::invalid_argument("identity requires a field alphabet");
  long n = c.length, q = c.q;
  EnumeratorPoly lhs =
      macwilliams_transform(distance_enumerator_poly(c), q, Rat(1));

  // right side: per weight class, the exact sum of |char sum|^2
  std::vector<Rat> rhs(n + 1, Rat(0));
  long total = 1;
  for (long i = 0; i < n; ++i) total *= q;

  bool binary_field = c.alphabet == CodeSet::Alphabet::Binary && q > 2;
  BinaryField bf = binary_field ? BinaryField(log2_exact(q)) : BinaryField(1);
  long p = binary_field ? 2 : q;

  std::vector<Cyclo> class_sum(n + 1, Cyclo(p));
  std::vector<long> x(n, 0);
  for (long idx = 0; idx < total; ++idx) {
    long t = idx;
    for (long i = 0; i < n; ++i) {
      x[i] = t % q;
      t /= q;
    }
    Cyclo cs(p);
    for (const auto &cw : c.words) {
      long e = 0;
      if (binary_field) {
        long acc = 0;
        for (long i = 0; i < n; ++i) acc ^= bf.mul(x[i], cw[i]);
        e = bf.trace(acc);
      } else {
        for (long i = 0; i < n; ++i) e = (e + x[i] * cw[i]) % p;
      }
      cs += Cyclo::root(p, e);
    }
    class_sum[hamming_weight(x)] += cyclo_norm(cs);
  }
  Rat inv_size(Int(1), Int(c.words.size()));
  for (long w = 0; w <= n; ++w) {
    auto r = class_sum[w].as_rational();
    if (!r) return false; // cannot happen for a genuine identity
    if (lhs.coeffs[w] != *r * inv_size) return false;
  }
  return true;
}

std::pair<long, long> count_zero_charsums_and_zero_nu(const CodeSet &c,
                                                      const CodeSet &cp) {
  if (c.q != 2 || cp.q != 2 || c.length != cp.length)
    throw std::invalid_argument("binary codes of equal length required");
  long n = c.length;
  std::vector<uint64_t> cw, cpw;
  for (const auto &w : c.words) {
    uint64_t b = 0;
    for (long i = 0; i < n; ++i)
      if (w[i]) b |= uint64_t(1) << i;
    cw.push_back(b);
  }
  for (const auto &w : cp.words) {
    uint64_t b = 0;
    for (long i = 0; i < n; ++i)
      if (w[i]) b |= uint64_t(1) << i;
    cpw.push_back(b);
  }
  long zero_char = 0;
  for (uint64_t x = 0; x < (uint64_t(1) << n); ++x) {
    long s = 0;
    for (uint64_t w : cw) s += (__builtin_popcountll(x & w) & 1) ? -1 : 1;
    if (s == 0) ++zero_char;
  }
  std::vector<long> nu(size_t(1) << n, 0);
  for (uint64_t a : cpw)
    for (uint64_t b : cpw) ++nu[a ^ b];
  long zero_nu = 0;
  for (long v : nu) zero_nu += (v == 0);
  return {zero_char, zero_nu};
}

} // namespace fsd
