#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fsd/pairing.hpp"
#include "fsd/subgroup.hpp"

namespace fsd {

// Nonempty subset of a finite abelian group, sorted element indices.
struct SetInGroup {
  Group group;
  std::vector<long> members; // sorted, duplicate-free

  long size() const { return static_cast<long>(members.size()); }
  bool contains(long idx) const;
  std::string to_string() const;

  static SetInGroup make(Group g, std::vector<long> members);
  // "{0,1}" or "{(0,0,0),(0,0,1)}" literals.
  static SetInGroup parse(const Group &g, const std::string &literal);
};

// nu_S(g) = #{(a,b) in SxS : a-b = g}, indexed by element index.
std::vector<long> weight_enumerator(const SetInGroup &s);

// sum_{x in S} <g,x>
Cyclo char_sum(const Pairing &p, long g, const SetInGroup &s);

struct CertificateRow {
  long g = 0;
  long nu = 0;
  bool char_sq_rational = false;
  Rat char_sq;          // valid when char_sq_rational
  std::string char_sq_poly; // reduced cyclotomic rep otherwise
  bool ok = false;
};

struct DualityCertificate {
  bool verdict = false;
  bool size_condition = false; // |S|^2 == |G| (self-dual runs only)
  Group group;
  std::vector<std::vector<long>> pairing_matrix;
  std::vector<long> set_s;
  std::vector<long> set_t;
  std::vector<CertificateRow> table; // full for |G| <= 256
  std::optional<long> first_violation;
};

// Checks |<g,S>|^2 * |T| == |S|^2 * nu_T(g) for all g, and cross-checks the
// mirrored form on S; the two verdicts must agree.
DualityCertificate is_formally_dual_pair(const Pairing &p, const SetInGroup &s,
                                         const SetInGroup &t);

DualityCertificate is_formally_self_dual(const Pairing &p, const SetInGroup &s);

enum class PrimitivityFailure { None, Coset, UnionOfCosets };

struct PrimitivityReport {
  bool primitive = false;
  PrimitivityFailure reason = PrimitivityFailure::None;
  Subgroup witness; // the offending subgroup when not primitive
};

PrimitivityReport is_primitive(const SetInGroup &s);

struct ReductionStep {
  Group group;
  long shift;       // representative subtracted before projecting
  Subgroup h;       // minimal coset subgroup
  Subgroup h_tilde; // annihilator, contained in h
};

struct ReductionResult {
  Pairing pairing;
  SetInGroup set;
  std::vector<ReductionStep> trace;
};

// Iterates coset reduction until the set is primitive; every intermediate
// set is re-verified formally self dual under the induced pairing.
ReductionResult reduce_to_primitive(const Pairing &p, const SetInGroup &s);

} // namespace fsd
