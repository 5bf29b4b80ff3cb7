#include "equichow/linalg.hpp"

#include <algorithm>
#include <utility>

#include "equichow/error.hpp"

namespace equichow {

namespace {

std::size_t column_count(const IntegerMatrix& m) { return m.empty() ? 0 : m[0].size(); }

void check_rectangular(const IntegerMatrix& m) {
  auto cols = column_count(m);
  for (const auto& row : m)
    if (row.size() != cols) throw InvalidArgument("ragged matrix");
}

// Diagonalizes m in place by unimodular row and column operations. Row
// operations are mirrored onto `left` (if given) so that left * m_in * V = D.
// Returns the number of nonzero diagonal entries.
std::size_t diagonalize(IntegerMatrix& m, IntegerMatrix* left) {
  const std::size_t rows = m.size();
  const std::size_t cols = column_count(m);
  std::size_t r = 0;
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    std::swap(m[a], m[b]);
    if (left) std::swap((*left)[a], (*left)[b]);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const Integer& f) {  // row dst += f*row src
    for (std::size_t j = 0; j < cols; ++j) m[dst][j] += f * m[src][j];
    if (left)
      for (std::size_t j = 0; j < left->at(0).size(); ++j) (*left)[dst][j] += f * (*left)[src][j];
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Integer& f) {
    for (auto& row : m) row[dst] += f * row[src];
  };

  while (r < rows && r < cols) {
    // Pivot: smallest nonzero absolute value in the trailing block.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = r; i < rows; ++i)
      for (std::size_t j = r; j < cols; ++j)
        if (m[i][j] != 0 && (pi == rows || abs(m[i][j]) < abs(m[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    swap_rows(r, pi);
    swap_cols(r, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (m[i][r] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][r].get_mpz_t(), m[r][r].get_mpz_t());
        add_row(i, r, -q);
        if (m[i][r] != 0) {
          swap_rows(r, i);
          clean = false;
        }
      }
      for (std::size_t j = r + 1; j < cols; ++j) {
        if (m[r][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[r][j].get_mpz_t(), m[r][r].get_mpz_t());
        add_col(j, r, -q);
        if (m[r][j] != 0) {
          swap_cols(r, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: pivot must divide the whole trailing block.
      for (std::size_t i = r + 1; i < rows && clean; ++i)
        for (std::size_t j = r + 1; j < cols; ++j)
          if (m[i][j] % m[r][r] != 0) {
            add_row(r, i, Integer(1));
            clean = false;
            break;
          }
    }
    if (m[r][r] < 0) {
      for (std::size_t j = 0; j < cols; ++j) m[r][j] = -m[r][j];
      if (left)
        for (auto& x : (*left)[r]) x = -x;
    }
    ++r;
  }
  return r;
}

}  // namespace

SmithForm smith_normal_form(IntegerMatrix m) {
  check_rectangular(m);
  SmithForm out;
  out.rows = m.size();
  out.cols = column_count(m);
  auto rank = diagonalize(m, nullptr);
  for (std::size_t i = 0; i < rank; ++i) out.invariant_factors.push_back(m[i][i]);
  return out;
}

std::size_t rational_rank(RationalMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::size_t rational_rank(const IntegerMatrix& m) {
  RationalMatrix q;
  q.reserve(m.size());
  for (const auto& row : m) q.emplace_back(row.begin(), row.end());
  return rational_rank(std::move(q));
}

bool integer_span_contains(const IntegerMatrix& m, const std::vector<Integer>& target) {
  check_rectangular(m);
  if (target.size() != m.size()) throw InvalidArgument("target length does not match rows");
  const std::size_t rows = m.size();
  if (rows == 0) return true;
  // U m V = D with U unimodular; m x = b is solvable iff D y = U b is.
  IntegerMatrix left(rows, std::vector<Integer>(rows, 0));
  for (std::size_t i = 0; i < rows; ++i) left[i][i] = 1;
  IntegerMatrix d = m;
  auto rank = diagonalize(d, &left);
  for (std::size_t i = 0; i < rows; ++i) {
    Integer ub = 0;
    for (std::size_t j = 0; j < rows; ++j) ub += left[i][j] * target[j];
    if (i < rank) {
      if (ub % d[i][i] != 0) return false;
    } else if (ub != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace equichow
