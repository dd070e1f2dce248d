#include "fsd/pairing.hpp"

#include <map>
#include <stdexcept>

namespace fsd {

Pairing::Pairing(Group g, std::vector<std::vector<long>> matrix)
    : g_(std::move(g)), b_(std::move(matrix)), n_(g_.exponent()) {
  int m = g_.rank();
  if (static_cast<int>(b_.size()) != m)
    throw std::invalid_argument("pairing matrix has wrong shape");
  for (auto &row : b_) {
    if (static_cast<int>(row.size()) != m)
      throw std::invalid_argument("pairing matrix has wrong shape");
    for (long &v : row) {
      v %= n_;
      if (v < 0) v += n_;
    }
  }
}

bool Pairing::is_well_defined() const {
  const auto &mod = g_.moduli();
  int m = g_.rank();
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) {
      if ((mod[j] * b_[j][k]) % n_ != 0) return false;
      if ((mod[k] * b_[j][k]) % n_ != 0) return false;
    }
  return true;
}

long Pairing::exponent_of(long a, long b) const {
  Coords ca = g_.coords_of(a), cb = g_.coords_of(b);
  int m = g_.rank();
  long e = 0;
  for (int j = 0; j < m; ++j) {
    if (ca[j] == 0) continue;
    for (int k = 0; k < m; ++k)
      e = (e + ca[j] % n_ * (b_[j][k] * (cb[k] % n_) % n_)) % n_;
  }
  return e;
}

std::vector<long> Pairing::character_row(long a) const {
  Coords ca = g_.coords_of(a);
  int m = g_.rank();
  std::vector<long> row(m, 0);
  for (int k = 0; k < m; ++k) {
    long e = 0;
    for (int j = 0; j < m; ++j)
      e = (e + ca[j] % n_ * b_[j][k]) % n_;
    row[k] = e;
  }
  return row;
}

bool Pairing::is_nondegenerate() const {
  std::map<std::vector<long>, long> seen;
  for (long a = 0; a < g_.order(); ++a)
    if (!seen.emplace(character_row(a), a).second) return false;
  return true;
}

Pairing Pairing::adjoint() const {
  int m = g_.rank();
  std::vector<std::vector<long>> t(m, std::vector<long>(m));
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) t[j][k] = b_[k][j];
  return Pairing(g_, std::move(t));
}

std::vector<long> Pairing::sigma() const {
  // <sigma(x), y> = <y, x>, i.e. sigma(x) has the character row of x under
  // the adjoint matrix. Nondegeneracy makes the row lookup unique.
  Pairing adj = adjoint();
  std::map<std::vector<long>, long> by_row;
  for (long a = 0; a < g_.order(); ++a) {
    if (!by_row.emplace(character_row(a), a).second)
      throw std::domain_error("sigma requires a nondegenerate pairing");
  }
  std::vector<long> s(g_.order());
  for (long x = 0; x < g_.order(); ++x) {
    auto it = by_row.find(adj.character_row(x));
    if (it == by_row.end())
      throw std::domain_error("sigma: no matching character row");
    s[x] = it->second;
  }
  return s;
}

Pairing standard_pairing(const Group &g) {
  int m = g.rank();
  long n = g.exponent();
  std::vector<std::vector<long>> b(m, std::vector<long>(m, 0));
  for (int j = 0; j < m; ++j) b[j][j] = n / g.moduli()[j];
  return Pairing(g, std::move(b));
}

} // namespace fsd
