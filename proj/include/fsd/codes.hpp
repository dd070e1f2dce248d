#pragma once

#include <string>
#include <vector>

#include "fsd/numeric.hpp"

namespace fsd {

// Block code as an explicit duplicate-free word list. Alphabets: the prime
// field F_p, the ring Z_4, or the field F_{2^k} (symbols are bit patterns).
struct CodeSet {
  enum class Alphabet { Prime, Z4, Binary };
  Alphabet alphabet = Alphabet::Prime;
  long q = 2;      // alphabet size
  long length = 0; // word length
  std::vector<std::vector<long>> words;

  static CodeSet make(Alphabet a, long q, long length,
                      std::vector<std::vector<long>> words);
};

// sum A_w X^{n-w} Y^w with exact rational coefficients
struct EnumeratorPoly {
  long length = 0;
  std::vector<Rat> coeffs; // A_0 .. A_n

  bool operator==(const EnumeratorPoly &o) const {
    return length == o.length && coeffs == o.coeffs;
  }
  std::string to_string() const;    // pretty polynomial
  std::string coeff_line() const;   // "A_0 A_1 ... A_n"
};

EnumeratorPoly weight_enumerator_poly(const CodeSet &c);
EnumeratorPoly distance_enumerator_poly(const CodeSet &c);

// E(X+(q-1)Y, X-Y) / size, expanded exactly
EnumeratorPoly macwilliams_transform(const EnumeratorPoly &e, long q,
                                     const Rat &size);

struct CodeDualCheck {
  bool weight_dual = false;
  bool distance_dual = false;
};

CodeDualCheck formal_dual_codes_check(const CodeSet &c, const CodeSet &cp);

// Z_4 -> F_2^2 per symbol (0,1,2,3 -> 00,01,11,10), block-interleaved:
// all first components, then all second components.
std::vector<long> gray_map(const std::vector<long> &word);
CodeSet gray_map(const CodeSet &c);

CodeSet z4_span(long length, const std::vector<std::vector<long>> &generators);
CodeSet z4_dual(const CodeSet &c);

// D_C(X+(q-1)Y, X-Y) == (1/|C|) sum_x |sum_c chi_x(c)|^2 X^{n-wt(x)}Y^{wt(x)},
// an identity; evaluated exactly on both sides.
bool char_sum_distance_identity_check(const CodeSet &c);

// (#x with char sum over C zero, #x with nu_{C'}(x) = 0), binary codes
std::pair<long, long> count_zero_charsums_and_zero_nu(const CodeSet &c,
                                                      const CodeSet &cp);

} // namespace fsd
