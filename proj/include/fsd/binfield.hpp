#pragma once

#include <cstdint>
#include <vector>

namespace fsd {

// F_{2^n}, elements as bit patterns in [0, 2^n): bit i is the coefficient of
// x^i in the polynomial basis. The default modulus is the irreducible
// polynomial with the smallest value when read as a binary number (for n=3
// that is 0b1011 = x^3 + x + 1), so all tables are reproducible.
class BinaryField {
public:
  explicit BinaryField(int n);
  BinaryField(int n, uint64_t poly);

  int n() const { return n_; }
  uint64_t size() const { return uint64_t(1) << n_; }
  uint64_t poly() const { return poly_; }

  uint64_t mul(uint64_t a, uint64_t b) const;
  uint64_t pow(uint64_t a, uint64_t e) const;
  uint64_t inv(uint64_t a) const; // a != 0
  int trace(uint64_t a) const;    // 0 or 1

  static uint64_t default_poly(int n);

private:
  int n_;
  uint64_t poly_;
  std::vector<int8_t> trace_table_;
};

} // namespace fsd
