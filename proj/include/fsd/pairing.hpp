#pragma once

#include <vector>

#include "fsd/cyclotomic.hpp"
#include "fsd/group.hpp"

namespace fsd {

// Nondegenerate bilinear form G x G -> roots of unity, encoded by an
// integer matrix B with <a,b> = zeta_N ^ (sum_{j,k} a_j B_{jk} b_k), N the
// group exponent. Stands in for an isomorphism G -> dual(G).
class Pairing {
public:
  Pairing(Group g, std::vector<std::vector<long>> matrix);

  const Group &group() const { return g_; }
  const std::vector<std::vector<long>> &matrix() const { return b_; }
  long modulus() const { return n_; }

  // Well-definedness: N | n_j * B_{jk} and N | n_k * B_{jk} for all j,k.
  bool is_well_defined() const;

  // Exponent e with <a,b> = zeta_N^e, e in [0, N).
  long exponent_of(long a, long b) const;
  Cyclo eval(long a, long b) const { return Cyclo::root(n_, exponent_of(a, b)); }

  // Exponents of <a, e_k> on the coordinate generators; two elements induce
  // the same character iff their rows agree mod N.
  std::vector<long> character_row(long a) const;

  bool is_nondegenerate() const;

  Pairing adjoint() const; // <a,b>_adj = <b,a>

  // sigma with <sigma(x), y> = <y, x> for all y, found by exhaustive
  // matching of character rows; index-to-index map over the whole group.
  std::vector<long> sigma() const;

private:
  Group g_;
  std::vector<std::vector<long>> b_;
  long n_;
};

Pairing standard_pairing(const Group &g);

} // namespace fsd
