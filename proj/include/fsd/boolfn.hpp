#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fsd/binfield.hpp"
#include "fsd/duality.hpp"

namespace fsd {

// F: F_{2^n} -> F_{2^n}, given by its full value table.
struct VectorialFunction {
  BinaryField field;
  std::vector<uint64_t> values; // values[x] = F(x), length 2^n

  static VectorialFunction from_exponent(const BinaryField &f, uint64_t d);
  // univariate polynomial sum coeffs[k] x^k over F_{2^n}
  static VectorialFunction from_poly(const BinaryField &f,
                                     const std::vector<uint64_t> &coeffs);
};

// The graph {(x, F(x))} as a set in Z_2^{2n}: first the n bits of x, then
// the n bits of F(x).
SetInGroup graph_set(const VectorialFunction &f);
// <(x,y),(a,b)> = (-1)^{Tr(ax+by)} on Z_2^{2n}
Pairing graph_trace_pairing(const BinaryField &f);

// walsh[b][a] = W_F(a,b), computed by one Walsh-Hadamard transform per b.
std::vector<std::vector<int32_t>> walsh_table(const VectorialFunction &f);
// diff[a][b] = delta_F(a,b)
std::vector<std::vector<int32_t>> differential_table(const VectorialFunction &f);

struct Classification {
  bool bijective = false;
  bool apn = false;
  bool ab = false;
  std::string note;
};

Classification classify(const VectorialFunction &f);

// 2^n * delta_F(a,b) == W_F(a,b)^2 for all a,b; cross-checked against the
// group-level verifier on the graph set for small n.
DualityCertificate graph_fsd_check(const VectorialFunction &f);
bool walsh_divisibility_check(const VectorialFunction &f);
// zero-set comparison of the two tables; needs bijective AB with n odd
bool ab_fsd_criterion(const VectorialFunction &f);

struct GoldZeros {
  bool walsh_zero = false;
  bool delta_zero = false;
};

// closed-form zero predicates for F(x) = x^{2^i+1}, a,b != 0
GoldZeros gold_zero_predicates(const BinaryField &f, int i, uint64_t a,
                               uint64_t b);

struct GoldVerdict {
  int n;
  int i;
  bool fsd;
};

std::vector<GoldVerdict> gold_scan(const std::vector<int> &ns);

// L(x) = sum coeffs[i] x^{2^i}
struct LinearizedPolynomial {
  BinaryField field;
  std::vector<uint64_t> coeffs; // length n

  uint64_t eval(uint64_t x) const;
  static LinearizedPolynomial identity(const BinaryField &f);
};

LinearizedPolynomial linpoly_adjoint(const LinearizedPolynomial &l);
std::optional<LinearizedPolynomial> linpoly_inverse(const LinearizedPolynomial &l);
// coefficient conditions for L = (L^{-1})*, cross-checked against L* o L = id
bool selfdual_condition(const LinearizedPolynomial &l);

// F' = L2 o F o L1; both maps must be invertible and satisfy
// selfdual_condition
VectorialFunction transform_graph(const VectorialFunction &f,
                                  const LinearizedPolynomial &l1,
                                  const LinearizedPolynomial &l2);
VectorialFunction compositional_inverse(const VectorialFunction &f);

} // namespace fsd
