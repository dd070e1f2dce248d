#pragma once

#include <utility>
#include <vector>

#include "fsd/duality.hpp"
#include "fsd/oddfield.hpp"

namespace fsd {

// {0,1} in Z_4 under the standard pairing
std::pair<Pairing, SetInGroup> tito();

// multiples of n in Z_{n^2} under the standard pairing
std::pair<Pairing, SetInGroup> lattice_example(long n);

// {(k, k*alpha)} in Z_p^2; requires alpha^2 = -1 mod p
std::pair<Pairing, SetInGroup> gaussian_example(long p, long alpha);

// (|S|, 0, lambda) difference structure relative to N: nu_S is |S| at the
// identity, 0 on N off the identity, and a constant lambda off N.
std::pair<bool, long> is_relative_difference_set(const SetInGroup &s,
                                                 const Subgroup &n);

// nonzero squares of F; requires p^m = 3 mod 4
std::vector<long> paley_set(const OddField &f);

// D D^(-1) = lambda G + k and G is partitioned by D, D^(-1), {0}
bool is_skew_hadamard(const Group &g, const std::vector<long> &d);

// <a,b> = zeta_p^{Tr(ab)} on the additive group Z_p^m
Pairing trace_pairing(const OddField &f);

// exact i*sqrt(p^m) in Z[zeta_p] via the quadratic Gauss sum; p^m = 3 mod 4
Cyclo i_sqrt_q(const OddField &f);

// all a with <a,D> = (-1 + i*sqrt(p^m))/2, compared exactly in Z[zeta_p]
std::vector<long> dual_set_Dstar(const OddField &f, const Pairing &p,
                                 const std::vector<long> &d);

struct ShdsResult {
  Pairing product_pairing;  // trace pairing on each factor of Z_p^m x Z_p^m
  SetInGroup s;
  SetInGroup t;
  Pairing composed_pairing; // product pairing composed with pi; S is
                            // formally self dual under it (verified)
  bool dstar_is_d;          // which branch of pi was taken
};

// S = {(0,0)} u {(x,ax) : x in D} u {(x,bx) : x in D^(-1)} and its partner
// set T; every claim is re-verified before returning.
ShdsResult shds_pair(const OddField &f, const std::vector<long> &d, long alpha,
                     long beta);

// the two known order-64 primitive sets under standard pairings
std::vector<std::pair<Pairing, SetInGroup>> sporadic_order64();

} // namespace fsd
