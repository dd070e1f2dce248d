#include "fsd/linalg.hpp"

#include <stdexcept>

namespace fsd {

namespace {

IntMat identity(size_t n) {
  IntMat m(n, std::vector<Int>(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

} // namespace

SmithForm smith_normal_form(IntMat a) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  SmithForm f{identity(rows), {}, identity(cols)};

  auto swap_rows = [&](size_t i, size_t j) {
    std::swap(a[i], a[j]);
    std::swap(f.u[i], f.u[j]);
  };
  auto swap_cols = [&](size_t i, size_t j) {
    for (size_t r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
    for (size_t r = 0; r < cols; ++r) std::swap(f.v[r][i], f.v[r][j]);
  };
  auto add_row = [&](size_t dst, size_t src, const Int &c) {
    for (size_t k = 0; k < cols; ++k) a[dst][k] += c * a[src][k];
    for (size_t k = 0; k < rows; ++k) f.u[dst][k] += c * f.u[src][k];
  };
  auto add_col = [&](size_t dst, size_t src, const Int &c) {
    for (size_t r = 0; r < rows; ++r) a[r][dst] += c * a[r][src];
    for (size_t r = 0; r < cols; ++r) f.v[r][dst] += c * f.v[r][src];
  };
  auto negate_row = [&](size_t i) {
    for (size_t k = 0; k < cols; ++k) a[i][k] = -a[i][k];
    for (size_t k = 0; k < rows; ++k) f.u[i][k] = -f.u[i][k];
  };

  auto diagonalize = [&]() {
    size_t t = 0;
    while (t < rows && t < cols) {
      // Find a nonzero pivot.
      size_t pi = t, pj = t;
      bool found = false;
      for (size_t i = t; i < rows && !found; ++i)
        for (size_t j = t; j < cols && !found; ++j)
          if (a[i][j] != 0) {
            pi = i;
            pj = j;
            found = true;
          }
      if (!found) break;
      swap_rows(t, pi);
      swap_cols(t, pj);

      for (;;) {
        bool clean = true;
        for (size_t i = t + 1; i < rows; ++i) {
          if (a[i][t] == 0) continue;
          Int q = a[i][t] / a[t][t];
          add_row(i, t, -q);
          if (a[i][t] != 0) { // remainder smaller than pivot: swap up
            swap_rows(t, i);
            clean = false;
          }
        }
        if (!clean) continue;
        for (size_t j = t + 1; j < cols; ++j) {
          if (a[t][j] == 0) continue;
          Int q = a[t][j] / a[t][t];
          add_col(j, t, -q);
          if (a[t][j] != 0) {
            swap_cols(t, j);
            clean = false;
          }
        }
        if (clean) break;
      }
      if (a[t][t] < 0) negate_row(t);
      ++t;
    }
    return t;
  };

  size_t rank = diagonalize();
  // Enforce the divisibility chain d_i | d_{i+1}: fold an offending entry
  // back into the pivot column and re-diagonalize. Each pass strictly
  // decreases the pivot, so this terminates.
  for (;;) {
    bool ok = true;
    for (size_t i = 0; i + 1 < rank && ok; ++i)
      if (a[i + 1][i + 1] % a[i][i] != 0) {
        add_col(i, i + 1, 1);
        ok = false;
      }
    if (ok) break;
    rank = diagonalize();
  }

  f.d = std::move(a);
  return f;
}

std::vector<std::vector<Int>> integer_kernel(const IntMat &a) {
  SmithForm f = smith_normal_form(a);
  size_t rows = f.d.size();
  size_t cols = rows ? f.d[0].size() : 0;
  std::vector<std::vector<Int>> basis;
  for (size_t j = 0; j < cols; ++j) {
    bool zero_col = j >= rows || f.d[j][j] == 0;
    if (!zero_col) continue;
    std::vector<Int> col(cols);
    for (size_t r = 0; r < cols; ++r) col[r] = f.v[r][j];
    basis.push_back(std::move(col));
  }
  return basis;
}

std::optional<std::vector<Rat>> solve_rational(RatMat a, std::vector<Rat> b) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  std::vector<long> pivot_col(rows, -1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pr = r;
    while (pr < rows && a[pr][c] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(a[r], a[pr]);
    std::swap(b[r], b[pr]);
    Rat inv = 1 / a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col[r] = static_cast<long>(c);
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rat> x(cols, Rat(0));
  for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

} // namespace fsd
