#include "liefix/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <unordered_set>

#include "liefix/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace liefix {

int max_threads()
{
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

QuadraticForm::QuadraticForm(const RatMatrix& gram) : q_(gram)
{
  const std::size_t n = q_.rows();
  if (q_.cols() != n) throw InvalidArgument("Gram matrix must be square");
  for (std::size_t i = 0; i < n; ++i) {
    if (q_(i, i) <= 0) throw InvalidArgument("Gram matrix is not positive definite");
    for (std::size_t j = i + 1; j < n; ++j) {
      q_(j, i) = q_(i, j);
      q_(i, j) /= q_(i, i);
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q_(k, l) -= q_(k, i) * q_(i, l);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) q_(i, j) = 0;
}

namespace {

// Depth-first Fincke-Pohst enumeration. Levels run from dim-1 down to 0;
// at each level the admissible integers form an interval around the
// projected center, scanned outward from floor(center).
class Enumerator {
public:
  explicit Enumerator(const QuadraticForm& q) : q_(q), x_(q.dim(), 0) {}

  // Admissible values at level i given x_{i+1..} and the remaining budget.
  std::vector<long> candidates(std::size_t i, const Rational& remaining, Rational& center) const
  {
    center = 0;
    for (std::size_t j = i + 1; j < q_.dim(); ++j)
      if (x_[j] != 0) center -= q_.mu(i, j) * x_[j];
    std::vector<long> out;
    const long start = floor(center).get_si();
    for (long x = start;; --x) {
      Rational d = x - center;
      if (q_.diag(i) * d * d > remaining) break;
      out.push_back(x);
    }
    for (long x = start + 1;; ++x) {
      Rational d = x - center;
      if (q_.diag(i) * d * d > remaining) break;
      out.push_back(x);
    }
    return out;
  }

  template <class Visit>
  bool descend(std::size_t level, const Rational& remaining, const Rational& bound, Visit& visit)
  {
    Rational center;
    for (long x : candidates(level, remaining, center)) {
      x_[level] = x;
      Rational d = x - center;
      Rational rest = remaining - q_.diag(level) * d * d;
      if (level == 0) {
        if (std::any_of(x_.begin(), x_.end(), [](long v) { return v != 0; }))
          if (!visit(x_, bound - rest)) return false;
      } else if (!descend(level - 1, rest, bound, visit)) {
        return false;
      }
    }
    x_[level] = 0;
    return true;
  }

  // Enumerates the subtree with the top coordinate fixed to `top`.
  template <class Visit>
  bool run_top(long top, const Rational& bound, Visit& visit)
  {
    const std::size_t n = q_.dim();
    std::fill(x_.begin(), x_.end(), 0);
    Rational center;
    (void)candidates(n - 1, bound, center);
    x_[n - 1] = top;
    Rational d = top - center;
    Rational rest = bound - q_.diag(n - 1) * d * d;
    if (rest < 0) return true;
    if (n == 1) {
      if (top != 0) return visit(x_, bound - rest);
      return true;
    }
    return descend(n - 2, rest, bound, visit);
  }

  std::vector<long> top_candidates(const Rational& bound)
  {
    std::fill(x_.begin(), x_.end(), 0);
    Rational center;
    return candidates(q_.dim() - 1, bound, center);
  }

private:
  const QuadraticForm& q_;
  std::vector<long> x_;
};

Rational pairing(const std::vector<long>& x, const RatVector& ub)
{
  Rational s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) s += x[i] * ub[i];
  return s;
}

[[noreturn]] void throw_enumeration_cap(std::size_t cap)
{
  throw CapExceeded("short-vector enumeration exceeded cap of " + std::to_string(cap) + " vectors");
}

[[noreturn]] void throw_orbit_cap(std::size_t cap)
{
  throw CapExceeded("Weyl orbit exceeded cap of " + std::to_string(cap) + " elements");
}

std::vector<RatVector> images(const std::vector<RatVector>& rows, const RatVector& c)
{
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (c[i] == 0) continue;
    out.push_back(c - c[i] * rows[i]);
  }
  return out;
}

}  // namespace

namespace kernels::serial {

std::vector<ShortVector> short_vectors(const QuadraticForm& q, const Rational& bound, std::size_t cap)
{
  std::vector<ShortVector> out;
  if (bound < 0 || q.dim() == 0) return out;
  Enumerator en(q);
  auto visit = [&](const std::vector<long>& x, const Rational& norm) {
    if (out.size() >= cap) throw_enumeration_cap(cap);
    out.push_back({x, norm});
    return true;
  };
  for (long top : en.top_candidates(bound)) en.run_top(top, bound, visit);
  return out;
}

std::optional<std::vector<long>> voronoi_violator(const QuadraticForm& q, const Rational& bound, const RatVector& ub)
{
  std::optional<std::vector<long>> found;
  if (bound < 0 || q.dim() == 0) return found;
  Enumerator en(q);
  auto visit = [&](const std::vector<long>& x, const Rational& norm) {
    if (2 * pairing(x, ub) > norm) {
      found = x;
      return false;
    }
    return true;
  };
  for (long top : en.top_candidates(bound))
    if (!en.run_top(top, bound, visit)) break;
  return found;
}

std::vector<RatVector> weight_orbit(const std::vector<RatVector>& rows, const RatVector& start, std::size_t cap)
{
  std::unordered_set<RatVector, RatVectorHash> seen{start};
  std::vector<RatVector> frontier{start};
  while (!frontier.empty()) {
    std::vector<RatVector> next;
    for (const auto& c : frontier)
      for (auto& img : images(rows, c))
        if (seen.insert(img).second) {
          if (seen.size() > cap) throw_orbit_cap(cap);
          next.push_back(std::move(img));
        }
    frontier = std::move(next);
  }
  std::vector<RatVector> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kernels::serial

namespace kernels::omp {

std::vector<ShortVector> short_vectors(const QuadraticForm& q, const Rational& bound, std::size_t cap)
{
  if (bound < 0 || q.dim() == 0) return {};
  const std::vector<long> tops = Enumerator(q).top_candidates(bound);
  std::vector<std::vector<ShortVector>> parts(tops.size());
  std::atomic<std::size_t> total{0};
  std::atomic<bool> overflow{false};

#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t t = 0; t < tops.size(); ++t) {
    if (overflow.load(std::memory_order_relaxed)) continue;
    Enumerator en(q);
    auto& part = parts[t];
    auto visit = [&](const std::vector<long>& x, const Rational& norm) {
      if (total.fetch_add(1, std::memory_order_relaxed) >= cap) {
        overflow.store(true, std::memory_order_relaxed);
        return false;
      }
      part.push_back({x, norm});
      return true;
    };
    en.run_top(tops[t], bound, visit);
  }
  if (overflow) throw_enumeration_cap(cap);

  std::vector<ShortVector> out;
  out.reserve(total.load());
  for (auto& p : parts)
    for (auto& v : p) out.push_back(std::move(v));
  return out;
}

std::optional<std::vector<long>> voronoi_violator(const QuadraticForm& q, const Rational& bound, const RatVector& ub)
{
  if (bound < 0 || q.dim() == 0) return std::nullopt;
  const std::vector<long> tops = Enumerator(q).top_candidates(bound);
  std::vector<std::optional<std::vector<long>>> found(tops.size());
  std::atomic<bool> stop{false};

#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t t = 0; t < tops.size(); ++t) {
    if (stop.load(std::memory_order_relaxed)) continue;
    Enumerator en(q);
    auto visit = [&](const std::vector<long>& x, const Rational& norm) {
      if (stop.load(std::memory_order_relaxed)) return false;
      if (2 * pairing(x, ub) > norm) {
        found[t] = x;
        stop.store(true, std::memory_order_relaxed);
        return false;
      }
      return true;
    };
    en.run_top(tops[t], bound, visit);
  }
  for (auto& f : found)
    if (f) return f;
  return std::nullopt;
}

std::vector<RatVector> weight_orbit(const std::vector<RatVector>& rows, const RatVector& start, std::size_t cap)
{
  std::unordered_set<RatVector, RatVectorHash> seen{start};
  std::vector<RatVector> frontier{start};
  while (!frontier.empty()) {
    std::vector<std::vector<RatVector>> produced(frontier.size());
#pragma omp parallel for schedule(static)
    for (std::size_t k = 0; k < frontier.size(); ++k) produced[k] = images(rows, frontier[k]);

    std::vector<RatVector> next;
    for (auto& batch : produced)
      for (auto& img : batch)
        if (seen.insert(img).second) {
          if (seen.size() > cap) throw_orbit_cap(cap);
          next.push_back(std::move(img));
        }
    frontier = std::move(next);
  }
  std::vector<RatVector> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kernels::omp

}  // namespace liefix
