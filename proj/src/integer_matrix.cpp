#include "liefix/integer_matrix.hpp"

#include <algorithm>
#include <utility>

#include "liefix/errors.hpp"

namespace liefix {

namespace {

void axpy_row(IntRow& dst, const Integer& q, const IntRow& src)
{
  for (std::size_t j = 0; j < dst.size(); ++j) dst[j] -= q * src[j];
}

Integer trunc_div(const Integer& a, const Integer& b)
{
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor_div(const Integer& a, const Integer& b)
{
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

IntMatrix hermite_basis(IntMatrix a)
{
  if (a.empty()) return a;
  const std::size_t m = a.size();
  const std::size_t n = a.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    while (true) {
      // smallest nonzero pivot candidate at or below `row`
      std::size_t piv = m;
      for (std::size_t r = row; r < m; ++r)
        if (a[r][col] != 0 && (piv == m || abs(a[r][col]) < abs(a[piv][col]))) piv = r;
      if (piv == m) break;
      std::swap(a[row], a[piv]);
      bool clean = true;
      for (std::size_t r = row + 1; r < m; ++r) {
        if (a[r][col] == 0) continue;
        axpy_row(a[r], trunc_div(a[r][col], a[row][col]), a[row]);
        if (a[r][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[row][col] == 0) continue;
    if (a[row][col] < 0)
      for (auto& x : a[row]) x = -x;
    for (std::size_t r = 0; r < row; ++r) axpy_row(a[r], floor_div(a[r][col], a[row][col]), a[row]);
    ++row;
  }
  a.resize(row);
  return a;
}

std::vector<Integer> smith_invariants(IntMatrix a)
{
  std::vector<Integer> out;
  if (a.empty()) return out;
  const std::size_t m = a.size();
  const std::size_t n = a.front().size();
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // bring the smallest nonzero entry of the trailing block to (t, t)
    std::size_t pr = m, pc = n;
    for (std::size_t r = t; r < m; ++r)
      for (std::size_t c = t; c < n; ++c)
        if (a[r][c] != 0 && (pr == m || abs(a[r][c]) < abs(a[pr][pc]))) {
          pr = r;
          pc = c;
        }
    if (pr == m) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);

    while (true) {
      bool done = true;
      for (std::size_t r = t + 1; r < m; ++r) {
        if (a[r][t] == 0) continue;
        axpy_row(a[r], trunc_div(a[r][t], a[t][t]), a[t]);
        if (a[r][t] != 0) done = false;
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        if (a[t][c] == 0) continue;
        const Integer q = trunc_div(a[t][c], a[t][t]);
        for (std::size_t r = 0; r < m; ++r) a[r][c] -= q * a[r][t];
        if (a[t][c] != 0) done = false;
      }
      if (!done) {
        // move the smallest remaining nonzero entry of row/column t to the pivot
        for (std::size_t r = t + 1; r < m; ++r)
          if (a[r][t] != 0 && abs(a[r][t]) < abs(a[t][t])) std::swap(a[t], a[r]);
        for (std::size_t c = t + 1; c < n; ++c)
          if (a[t][c] != 0 && abs(a[t][c]) < abs(a[t][t]))
            for (auto& row : a) std::swap(row[t], row[c]);
        continue;
      }
      bool divisible = true;
      for (std::size_t r = t + 1; r < m && divisible; ++r)
        for (std::size_t c = t + 1; c < n; ++c)
          if (a[r][c] % a[t][t] != 0) {
            for (std::size_t j = 0; j < n; ++j) a[t][j] += a[r][j];
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    out.push_back(abs(a[t][t]));
  }
  return out;
}

IntRow to_int_row(const RatVector& v)
{
  IntRow r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_integer(v[i])) throw InvalidArgument("expected an integral vector, got " + to_string(v));
    r[i] = v[i].get_num();
  }
  return r;
}

RatVector to_rat_vector(const IntRow& r)
{
  RatVector v(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) v[i] = Rational(r[i]);
  return v;
}

}  // namespace liefix
