#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fsd/search.hpp"

using namespace fsd;

namespace {

std::vector<std::vector<long>> hit_sets(const SearchResult &r) {
  std::vector<std::vector<long>> out;
  for (const auto &h : r.hits) out.push_back(h.set.members);
  return out;
}

std::vector<std::vector<long>> oracle_sets(const Group &g, long k) {
  std::vector<std::vector<long>> out;
  for (const auto &s : brute_force_fsd(standard_pairing(g), k))
    out.push_back(s.members);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

TEST_CASE("all size two hits in the cyclic group of order four") {
  SearchSpec spec;
  spec.group = Group({4});
  spec.size = 2;
  SearchResult r = search_fsd(spec);
  CHECK(r.complete);
  CHECK(hit_sets(r) == std::vector<std::vector<long>>{{0, 1}, {0, 2}, {0, 3}});
  // {0,2} is the subgroup of order two: self dual but not primitive
  for (const auto &h : r.hits)
    CHECK(h.primitive == (h.set.members != std::vector<long>{0, 2}));
}

TEST_CASE("search agrees with the exhaustive oracle") {
  struct Case {
    Group g;
    long k;
  };
  for (const Case &c : {Case{Group({4}), 2}, Case{Group({9}), 3},
                        Case{Group({16}), 4}, Case{Group({2, 2}), 2},
                        Case{Group({2, 8}), 4}}) {
    SearchSpec spec;
    spec.group = c.g;
    spec.size = c.k;
    CHECK(hit_sets(search_fsd(spec)) == oracle_sets(c.g, c.k));
  }
}

TEST_CASE("the subgroup of index three in Z_9 is found") {
  SearchSpec spec;
  spec.group = Group({9});
  spec.size = 3;
  auto sets = hit_sets(search_fsd(spec));
  CHECK(std::find(sets.begin(), sets.end(), std::vector<long>{0, 3, 6}) !=
        sets.end());
}

TEST_CASE("Z_16 has no primitive size four hit under the standard pairing") {
  // recorded as observed data from the exhaustive run, not as a theorem
  SearchSpec spec;
  spec.group = Group({16});
  spec.size = 4;
  SearchResult r = search_fsd(spec);
  REQUIRE(r.complete);
  CHECK_FALSE(r.hits.empty());
  for (const auto &h : r.hits) CHECK_FALSE(h.primitive);
}

TEST_CASE("node budget exhaustion is reported") {
  SearchSpec spec;
  spec.group = Group({16});
  spec.size = 4;
  spec.budget_nodes = 3;
  SearchResult r = search_fsd(spec);
  CHECK_FALSE(r.complete);
  CHECK(r.nodes > spec.budget_nodes);
}

TEST_CASE("seed prefix restricts and validates") {
  SearchSpec spec;
  spec.group = Group({16});
  spec.size = 4;
  spec.seed_prefix = {0, 4};
  SearchResult r = search_fsd(spec);
  CHECK(r.complete);
  for (const auto &h : r.hits) {
    CHECK(h.set.contains(0));
    CHECK(h.set.contains(4));
  }
  // seeded hits are exactly the oracle hits containing the prefix
  auto all = oracle_sets(spec.group, 4);
  std::vector<std::vector<long>> expect;
  for (auto &s : all)
    if (std::find(s.begin(), s.end(), 4L) != s.end()) expect.push_back(s);
  CHECK(hit_sets(r) == expect);

  spec.seed_prefix = {1, 2};
  CHECK_THROWS_AS(search_fsd(spec), std::domain_error);
  spec.seed_prefix = {0, 3, 3};
  CHECK_THROWS_AS(search_fsd(spec), std::domain_error);
  spec.seed_prefix = {0, 1, 2, 3, 4};
  CHECK_THROWS_AS(search_fsd(spec), std::domain_error);
}

TEST_CASE("domain checks") {
  SearchSpec spec;
  spec.group = Group({6});
  spec.size = 2; // 4 != 6
  CHECK_THROWS_AS(search_fsd(spec), std::domain_error);
  spec.group = Group({4});
  spec.size = 0;
  CHECK_THROWS_AS(search_fsd(spec), std::domain_error);
}

TEST_CASE("repeated runs are deterministic") {
  SearchSpec spec;
  spec.group = Group({2, 8});
  spec.size = 4;
  SearchResult a = search_fsd(spec);
  SearchResult b = search_fsd(spec);
  CHECK(hit_sets(a) == hit_sets(b));
  CHECK(a.nodes == b.nodes);
}

TEST_CASE("pair search against a direct pair scan") {
  Group g({4});
  SearchSpec spec;
  spec.group = g;
  spec.size = 2;
  PairSearchResult r = search_fd_pairs(spec);

  // naive scan over all pairs of two element sets containing the identity
  Pairing p = standard_pairing(g);
  std::vector<std::pair<std::vector<long>, std::vector<long>>> expect, got;
  for (long a = 1; a < 4; ++a)
    for (long b = 1; b < 4; ++b) {
      SetInGroup s = SetInGroup::make(g, {0, a});
      SetInGroup t = SetInGroup::make(g, {0, b});
      if (is_formally_dual_pair(p, s, t).verdict)
        expect.push_back({s.members, t.members});
    }
  for (const auto &h : r.hits) got.push_back({h.s.members, h.t.members});
  std::sort(expect.begin(), expect.end());
  std::sort(got.begin(), got.end());
  CHECK(got == expect);
  CHECK_FALSE(expect.empty());
}

TEST_CASE("pair search with a singleton side") {
  Group g({2});
  SearchSpec spec;
  spec.group = g;
  spec.size = 1;
  PairSearchResult r = search_fd_pairs(spec);
  REQUIRE(r.hits.size() == 1);
  CHECK(r.hits[0].s.members == std::vector<long>{0});
  CHECK(r.hits[0].t.members == std::vector<long>{0, 1});
}
