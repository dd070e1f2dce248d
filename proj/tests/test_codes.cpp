#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fsd/codes.hpp"
#include "fsd/duality.hpp"
#include "z4_fixture.hpp"

using namespace fsd;

namespace {

CodeSet parabola_code(long p) {
  std::vector<std::vector<long>> words;
  for (long x = 0; x < p; ++x) words.push_back({x, x * x % p});
  return CodeSet::make(CodeSet::Alphabet::Prime, p, 2, std::move(words));
}

// 9 words in F_3^4, closed under the coordinate shuffle below
const std::vector<std::vector<long>> kF3Words = {
    {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 2, 0, 1}, {1, 0, 0, 2}, {1, 1, 2, 0},
    {1, 2, 1, 0}, {2, 0, 0, 2}, {2, 1, 1, 0}, {2, 2, 2, 0}};

std::vector<long> delta_map(const std::vector<long> &x) {
  // (x1,x2,x3,x4) -> (x3,-x4,x1,-x2) over F_3
  return {x[2], (3 - x[3]) % 3, x[0], (3 - x[1]) % 3};
}

} // namespace

TEST_CASE("well-formedness checks in the constructor") {
  CHECK_THROWS_AS(CodeSet::make(CodeSet::Alphabet::Prime, 2, 2,
                                {{0, 1}, {0, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(CodeSet::make(CodeSet::Alphabet::Prime, 2, 2, {{0, 1, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(CodeSet::make(CodeSet::Alphabet::Z4, 3, 1, {{0}}),
                  std::invalid_argument);
  // symbols are reduced mod q
  auto c = CodeSet::make(CodeSet::Alphabet::Prime, 3, 2, {{-1, 4}});
  CHECK(c.words == std::vector<std::vector<long>>{{2, 1}});
}

TEST_CASE("parabola code is formally self dual as a code") {
  for (long p : {3, 5}) {
    CodeSet c = parabola_code(p);
    EnumeratorPoly w = weight_enumerator_poly(c);
    // X^2 + (p-1) Y^2
    CHECK(w.coeffs[0] == 1);
    CHECK(w.coeffs[1] == 0);
    CHECK(w.coeffs[2] == p - 1);
    CHECK(macwilliams_transform(w, p, Rat(Int(p))) == w);
    // the code is nonlinear, so the distance enumerator is a different
    // polynomial; it is self dual in its own right
    EnumeratorPoly d = distance_enumerator_poly(c);
    CHECK(macwilliams_transform(d, p, Rat(Int(p))) == d);
    auto r = formal_dual_codes_check(c, c);
    CHECK(r.weight_dual);
    CHECK(r.distance_dual);
    CHECK(char_sum_distance_identity_check(c));
  }
}

TEST_CASE("nine word code in F_3^4: dual sets but not dual codes") {
  CodeSet c = CodeSet::make(CodeSet::Alphabet::Prime, 3, 4, kF3Words);
  std::vector<std::vector<long>> shuffled;
  for (const auto &w : kF3Words) shuffled.push_back(delta_map(w));
  CodeSet cp = CodeSet::make(CodeSet::Alphabet::Prime, 3, 4, shuffled);

  EnumeratorPoly w = weight_enumerator_poly(c);
  CHECK(w.coeffs == std::vector<Rat>{1, 0, 4, 4, 0});
  CHECK(weight_enumerator_poly(cp) == w); // the shuffle preserves weight

  EnumeratorPoly t = macwilliams_transform(w, 3, Rat(9));
  CHECK(t.coeffs == std::vector<Rat>{Rat(1), Rat(4, 3), Rat(0), Rat(4),
                                     Rat(8, 3)});
  auto r = formal_dual_codes_check(c, cp);
  CHECK_FALSE(r.weight_dual);

  // yet as subsets of Z_3^4 under the standard pairing they are formal duals
  Group g({3, 3, 3, 3});
  auto to_set = [&](const CodeSet &code) {
    std::vector<long> m;
    for (const auto &word : code.words) m.push_back(g.index_of(word));
    return SetInGroup::make(g, std::move(m));
  };
  CHECK(is_formally_dual_pair(standard_pairing(g), to_set(c), to_set(cp))
            .verdict);
  CHECK(char_sum_distance_identity_check(c));
}

TEST_CASE("MacWilliams transform is an involution") {
  CodeSet c = CodeSet::make(CodeSet::Alphabet::Prime, 3, 4, kF3Words);
  EnumeratorPoly w = weight_enumerator_poly(c);
  EnumeratorPoly once = macwilliams_transform(w, 3, Rat(9));
  EnumeratorPoly twice = macwilliams_transform(once, 3, Rat(81) / Rat(9));
  CHECK(twice == w);
}

TEST_CASE("symbol-wise Gray images") {
  CHECK(gray_map(std::vector<long>{0}) == std::vector<long>{0, 0});
  CHECK(gray_map(std::vector<long>{1}) == std::vector<long>{0, 1});
  CHECK(gray_map(std::vector<long>{2}) == std::vector<long>{1, 1});
  CHECK(gray_map(std::vector<long>{3}) == std::vector<long>{1, 0});
  CHECK(gray_map(std::vector<long>{2, 1, 3, 1}) ==
        std::vector<long>{1, 0, 1, 0, 1, 1, 0, 1});
}

TEST_CASE("Z4 pair: dual codes over Z4, Gray images are formal dual codes") {
  CodeSet c = z4_span(4, kZ4GenC);
  CHECK(c.words.size() == 16);
  CodeSet cp = z4_dual(c);
  CHECK(cp.words == z4_span(4, kZ4GenCp).words);

  CodeSet gc = gray_map(c);
  CodeSet gcp = gray_map(cp);
  CHECK(gc.words == CodeSet::make(CodeSet::Alphabet::Prime, 2, 8, kGrayC).words);
  CHECK(gcp.words ==
        CodeSet::make(CodeSet::Alphabet::Prime, 2, 8, kGrayCp).words);

  auto r = formal_dual_codes_check(gc, gcp);
  CHECK(r.weight_dual);
  CHECK(r.distance_dual);
  CHECK(char_sum_distance_identity_check(gc));
  CHECK(char_sum_distance_identity_check(gcp));
}

TEST_CASE("Gray images are not formal dual sets: zero counts differ") {
  CodeSet gc = gray_map(z4_span(4, kZ4GenC));
  CodeSet gcp = gray_map(z4_dual(z4_span(4, kZ4GenC)));
  auto [zero_char, zero_nu] = count_zero_charsums_and_zero_nu(gc, gcp);
  CHECK(zero_char == 216);
  CHECK(zero_nu == 228);
}

TEST_CASE("zero count helper on the trivial code") {
  CodeSet z = CodeSet::make(CodeSet::Alphabet::Prime, 2, 3, {{0, 0, 0}});
  auto [zero_char, zero_nu] = count_zero_charsums_and_zero_nu(z, z);
  CHECK(zero_char == 0);
  CHECK(zero_nu == 7);
}

TEST_CASE("distance transform identity over a quartic binary field") {
  // symbols are elements of F_4, characters go through the trace
  CodeSet c = CodeSet::make(CodeSet::Alphabet::Binary, 4, 2,
                            {{0, 0}, {1, 2}, {2, 3}, {3, 3}});
  CHECK(char_sum_distance_identity_check(c));
  CHECK_THROWS_AS(char_sum_distance_identity_check(z4_span(1, {{1}})),
                  std::invalid_argument);
}

TEST_CASE("enumerator pretty printing") {
  CodeSet c = parabola_code(3);
  EnumeratorPoly w = weight_enumerator_poly(c);
  CHECK(w.to_string() == "X^2 + 2*Y^2");
  CHECK(w.coeff_line() == "1 0 2");
  EnumeratorPoly t = macwilliams_transform(
      weight_enumerator_poly(CodeSet::make(CodeSet::Alphabet::Prime, 3, 4,
                                           kF3Words)),
      3, Rat(9));
  CHECK(t.coeff_line() == "1 4/3 0 4 8/3");
}
