#pragma once

#include <vector>

#include "fsd/group.hpp"
#include "fsd/pairing.hpp"

namespace fsd {

// Subgroup given by generators plus its explicit, sorted member list
// (element indices into the ambient group).
struct Subgroup {
  std::vector<long> generators;
  std::vector<long> members; // sorted, duplicate-free, contains 0

  long order() const { return static_cast<long>(members.size()); }
  bool contains(long idx) const;
  bool operator==(const Subgroup &o) const { return members == o.members; }
  bool operator<(const Subgroup &o) const { return members < o.members; }
};

// Closure of a generator set under the group operation.
Subgroup generated_subgroup(const Group &g, std::vector<long> generators);

bool is_subgroup(const Group &g, const Subgroup &h);

Subgroup trivial_subgroup();
Subgroup full_subgroup(const Group &g);

// Complete duplicate-free list, by breadth-first closure over extended
// generator sets. Throws on |G| > bound.
std::vector<Subgroup> enumerate_subgroups(const Group &g, long bound = 4096);

// {x : <x,h> = 1 for all h in H}; order |G|/|H| for nondegenerate pairings.
Subgroup annihilator(const Pairing &p, const Subgroup &h);

// Minimal subgroup H with S contained in s0 + H, plus the representative s0
// (the first element of S).
std::pair<Subgroup, long> smallest_containing_coset(const Group &g,
                                                    const std::vector<long> &set);

struct Quotient {
  Group group;            // invariant-factor form
  std::vector<long> proj; // ambient index -> quotient index; -1 off H
};

// H/K with the projection map, via Smith normal form of the relation
// lattice of a small generating set of H.
Quotient quotient_group(const Group &g, const Subgroup &h, const Subgroup &k);

} // namespace fsd
