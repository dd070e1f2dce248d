#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fsd/numeric.hpp"

namespace fsd {

// Coefficients of the N-th cyclotomic polynomial, low degree first, monic.
const std::vector<Int> &cyclotomic_polynomial(long n);

// Element of Z[zeta_N] = Z[x]/Phi_N(x), stored fully reduced mod Phi_N.
// Equality is coefficient-wise on the reduced representative.
class Cyclo {
public:
  Cyclo() : Cyclo(1) {}
  explicit Cyclo(long order);

  static Cyclo integer(long order, Int v);
  static Cyclo root(long order, long e); // zeta_N^e

  long order() const { return n_; }
  const std::vector<Int> &coeffs() const { return c_; }

  bool is_zero() const;

  Cyclo operator+(const Cyclo &o) const;
  Cyclo operator-(const Cyclo &o) const;
  Cyclo operator*(const Cyclo &o) const;
  Cyclo operator-() const;
  Cyclo &operator+=(const Cyclo &o) { return *this = *this + o; }
  Cyclo &operator-=(const Cyclo &o) { return *this = *this - o; }
  Cyclo &operator*=(const Cyclo &o) { return *this = *this * o; }
  bool operator==(const Cyclo &o) const { return n_ == o.n_ && c_ == o.c_; }
  bool operator!=(const Cyclo &o) const { return !(*this == o); }

  // Galois action zeta -> zeta^k for gcd(k, N) = 1.
  Cyclo galois(long k) const;
  Cyclo conj() const { return n_ == 1 ? *this : galois(n_ - 1); }

  // Rational (here: integer) value when the reduced representative is
  // constant; nullopt otherwise.
  std::optional<Rat> as_rational() const;

  std::string to_string() const; // polynomial in z = zeta_N

private:
  long n_;
  std::vector<Int> c_; // size deg Phi_N

  void reduce_from(std::vector<Int> poly); // arbitrary degree -> canonical
};

// z * conj(z); fixed by conjugation.
Cyclo cyclo_norm(const Cyclo &z);

} // namespace fsd
