#pragma once

#include <optional>
#include <vector>

#include "fsd/duality.hpp"

namespace fsd {

struct SearchSpec {
  Group group;
  std::optional<Pairing> pairing; // defaults to the standard pairing
  long size = 0;                  // |S|; self-dual mode needs size^2 = |G|
  long budget_nodes = 50'000'000;
  std::vector<long> seed_prefix;  // forced leading elements, must start at 0
};

struct SearchHit {
  SetInGroup set;
  bool primitive = false;
};

struct SearchResult {
  std::vector<SearchHit> hits; // lexicographic order of member lists
  bool complete = true;        // false when the node budget ran out
  long nodes = 0;
};

// Depth-first search over sets containing the identity, with weight-
// enumerator pruning; every hit is re-verified with the exact checker.
SearchResult search_fsd(const SearchSpec &spec);

struct PairHit {
  SetInGroup s;
  SetInGroup t;
};

struct PairSearchResult {
  std::vector<PairHit> hits;
  bool complete = true;
  long nodes = 0;
};

// Pairs S, T with 0 in both, |S| = spec.size and |T| = |G| / |S|.
PairSearchResult search_fd_pairs(const SearchSpec &spec);

// Oracle: checks every k-subset containing the identity directly.
std::vector<SetInGroup> brute_force_fsd(const Pairing &p, long k);

} // namespace fsd
