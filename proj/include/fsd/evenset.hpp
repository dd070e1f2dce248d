#pragma once

#include <optional>
#include <vector>

#include "fsd/duality.hpp"
#include "fsd/group.hpp"
#include "fsd/pairing.hpp"
#include "fsd/subgroup.hpp"

namespace fsd {

// Rational formal sum over the group, dense coefficient vector.
struct GroupAlgebraElement {
  Group group;
  std::vector<Rat> coeffs; // size |G|

  static GroupAlgebraElement zero(const Group &g);
  static GroupAlgebraElement identity(const Group &g);
  static GroupAlgebraElement indicator(const Group &g,
                                       const std::vector<long> &members);

  bool is_zero() const;
  GroupAlgebraElement reversed() const; // A^(-1): g -> -g

  GroupAlgebraElement operator+(const GroupAlgebraElement &o) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement &o) const;
  bool operator==(const GroupAlgebraElement &o) const;
};

// Convolution product.
GroupAlgebraElement group_algebra_product(const GroupAlgebraElement &a,
                                          const GroupAlgebraElement &b);

// S * S^(-1); coefficients equal the weight enumerator (cross-checked).
GroupAlgebraElement ss_inverse(const SetInGroup &s);

struct SubgroupCombination {
  std::vector<std::pair<Subgroup, Rat>> terms; // distinct subgroups

  GroupAlgebraElement expand(const Group &g) const;
};

// Exact rational solution of sum_H lambda_H * 1_H = S S^(-1), over the full
// subgroup lattice; nullopt when no decomposition exists.
std::optional<SubgroupCombination> even_decomposition(const SetInGroup &s,
                                                      long bound = 4096);

// Canonical coefficients of a formally self dual decomposition:
// lambda_H = (1/2s) * sum_i (mu_{sigma^i H} + (|S|/|H|) mu_{sigma^i ann(H)}).
// Output satisfies lambda_{sigma H} = lambda_H and
// lambda_{ann(H)} = (|H|/|S|) lambda_H by construction.
SubgroupCombination canonical_fsd_coefficients(const Pairing &p,
                                               const SetInGroup &s,
                                               const SubgroupCombination &mu);

// True iff the mu-minus-lambda combination expands to zero; equivalent to
// formal self duality when mu is a valid decomposition.
bool zero_sum_check(const Pairing &p, const SetInGroup &s,
                    const SubgroupCombination &mu);

} // namespace fsd
