#pragma once

#include <vector>

#include "fsd/group.hpp"

namespace fsd {

// F_{p^m} for odd prime p. Elements are identified with the indices of the
// additive group Z_p^m: the element sum d_i x^i has coordinates
// (d_0, ..., d_{m-1}). For m = 1 the element id is just the residue.
class OddField {
public:
  OddField(long p, long m); // lexicographically first monic irreducible
  OddField(long p, long m, std::vector<long> irreducible);

  long p() const { return p_; }
  long m() const { return m_; }
  long size() const { return q_; }
  const Group &additive_group() const { return group_; }
  // monic, length m+1, constant term first
  const std::vector<long> &irreducible() const { return poly_; }

  long zero() const { return 0; }
  long one() const { return one_; }
  long from_prime_residue(long r) const; // image of r in Z_p
  long add(long a, long b) const { return group_.add(a, b); }
  long sub(long a, long b) const { return group_.sub(a, b); }
  long neg(long a) const { return group_.neg(a); }
  long mul(long a, long b) const;
  long pow(long a, long e) const;
  long inv(long a) const; // a != 0
  long scalar_mul(long c, long a) const { return group_.scale(c, a); }

  long trace(long a) const; // value in [0, p)
  // quadratic character: 0 at zero, +1 on nonzero squares, -1 otherwise
  int eta(long a) const;

  static std::vector<long> first_irreducible(long p, long m);

private:
  long p_, m_, q_;
  Group group_;
  std::vector<long> poly_;
  long one_;
  std::vector<long> trace_table_;
  std::vector<int> eta_table_;

  std::vector<long> reduce(std::vector<long> prod) const;
  void build_tables();
};

} // namespace fsd
