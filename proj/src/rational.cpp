#include "liefix/rational.hpp"

#include <sstream>
#include <utility>

namespace liefix {

std::string to_string(const Rational& q)
{
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text)
{
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s)
      if (ch < '0' || ch > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den)
{
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer floor(const Rational& q)
{
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q)
{
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

RatVector RatVector::from_ints(std::initializer_list<long> nums, long den)
{
  RatVector v(nums.size());
  std::size_t i = 0;
  for (long x : nums) {
    v[i] = make_rational(x, den);
    ++i;
  }
  return v;
}

RatVector RatVector::unit(std::size_t n, std::size_t i)
{
  RatVector v(n);
  v[i] = 1;
  return v;
}

bool RatVector::is_zero() const
{
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

RatVector& RatVector::operator+=(const RatVector& o)
{
  if (o.size() != size()) throw std::invalid_argument("vector dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

RatVector& RatVector::operator-=(const RatVector& o)
{
  if (o.size() != size()) throw std::invalid_argument("vector dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

RatVector& RatVector::operator*=(const Rational& s)
{
  for (auto& x : c_) x *= s;
  return *this;
}

RatVector operator-(RatVector a)
{
  for (auto& x : a.c_) x = -x;
  return a;
}

Rational dot(const RatVector& a, const RatVector& b)
{
  if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational norm_sq(const RatVector& v) { return dot(v, v); }

std::ostream& operator<<(std::ostream& os, const RatVector& v)
{
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << to_string(v[i]);
  }
  return os << ')';
}

std::string to_string(const RatVector& v)
{
  std::ostringstream os;
  os << v;
  return os.str();
}

namespace {

std::size_t hash_mpz(mpz_srcptr z)
{
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z)) + 0x9e3779b9u;
  const auto n = mpz_size(z);
  for (std::size_t i = 0; i < n && i < 2; ++i)
    h ^= static_cast<std::size_t>(mpz_getlimbn(z, i)) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

std::size_t RatVectorHash::operator()(const RatVector& v) const noexcept
{
  std::size_t h = v.size();
  for (const auto& x : v) {
    h ^= hash_mpz(x.get_num_mpz_t()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= hash_mpz(x.get_den_mpz_t()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

RatMatrix RatMatrix::identity(std::size_t n)
{
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::gram(std::span<const RatVector> vs)
{
  RatMatrix g(vs.size(), vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i; j < vs.size(); ++j) {
      g(i, j) = dot(vs[i], vs[j]);
      g(j, i) = g(i, j);
    }
  return g;
}

RatMatrix RatMatrix::from_rows(std::span<const RatVector> rows)
{
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatVector RatMatrix::row(std::size_t i) const
{
  RatVector r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

RatMatrix RatMatrix::transpose() const
{
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b)
{
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

RatVector row_times(const RatVector& x, const RatMatrix& m)
{
  if (x.size() != m.rows()) throw std::invalid_argument("matrix dimension mismatch");
  RatVector r(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] += x[i] * m(i, j);
  }
  return r;
}

RatVector times_col(const RatMatrix& m, const RatVector& x)
{
  if (x.size() != m.cols()) throw std::invalid_argument("matrix dimension mismatch");
  RatVector r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j) * x[j];
  return r;
}

Rational determinant(RatMatrix m)
{
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const Rational f = m(r, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return det;
}

RatMatrix inverse(RatMatrix m)
{
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col) == 0) ++piv;
    if (piv == n) throw std::domain_error("singular matrix");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(piv, j), m(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    const Rational p = m(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) -= f * m(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace liefix
