#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fsd {

// Element of a finite abelian group, as a tuple of residues.
using Coords = std::vector<long>;

// Finite abelian group Z_{n_1} x ... x Z_{n_m}. Elements are addressed
// either by residue tuple or by mixed-radix index in [0, order).
class Group {
public:
  Group() = default;
  explicit Group(std::vector<long> moduli);

  const std::vector<long> &moduli() const { return moduli_; }
  int rank() const { return static_cast<int>(moduli_.size()); }
  long order() const { return order_; }
  long exponent() const { return exponent_; }
  bool is_trivial() const { return order_ == 1; }

  long index_of(const Coords &c) const;
  Coords coords_of(long idx) const;

  long add(long a, long b) const;
  long neg(long a) const;
  long sub(long a, long b) const { return add(a, neg(b)); }
  long scale(long k, long a) const;

  // Additive order of the element with index a.
  long element_order(long a) const;

  bool operator==(const Group &o) const { return moduli_ == o.moduli_; }
  bool operator!=(const Group &o) const { return !(*this == o); }

  // "Z4xZ2^3" style literal.
  std::string to_string() const;
  static Group parse(const std::string &literal);

  // "(1,0,0,5)" style element literal; bare integers allowed at rank 1.
  std::string format_element(long idx) const;
  long parse_element(const std::string &literal) const;

private:
  std::vector<long> moduli_;
  std::vector<long> strides_;
  long order_ = 1;
  long exponent_ = 1;
};

inline const Group &check_same_group(const Group &a, const Group &b) {
  if (a != b) throw std::invalid_argument("group mismatch");
  return a;
}

long gcd_long(long a, long b);
long lcm_long(long a, long b);

} // namespace fsd
