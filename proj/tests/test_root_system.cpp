#include <doctest.h>

#include <algorithm>
#include <set>

#include "liefix/errors.hpp"
#include "liefix/weyl.hpp"
#include "support.hpp"

using namespace liefix;
using test::all_types;

namespace {

using Coeffs = std::vector<int>;

// Positive roots from a Cartan matrix alone, by root strings:
// beta + alpha_i is a root iff q > 0, where q = p - <beta, alpha_i^*> and p
// is the length of the alpha_i-string below beta.
std::set<Coeffs> positive_roots_from_cartan(const std::vector<std::vector<int>>& cm)
{
  const int n = static_cast<int>(cm.size());
  std::set<Coeffs> roots;
  std::vector<Coeffs> layer;
  for (int i = 0; i < n; ++i) {
    Coeffs e(n, 0);
    e[i] = 1;
    roots.insert(e);
    layer.push_back(e);
  }
  while (!layer.empty()) {
    std::vector<Coeffs> next;
    for (const auto& b : layer)
      for (int i = 0; i < n; ++i) {
        int p = 0;
        Coeffs down = b;
        while (true) {
          --down[i];
          if (!roots.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += b[j] * cm[j][i];
        if (p - pairing > 0) {
          Coeffs up = b;
          ++up[i];
          if (roots.insert(up).second) next.push_back(up);
        }
      }
    layer = std::move(next);
  }
  return roots;
}

std::vector<std::vector<int>> simply_laced(int n, const std::vector<std::pair<int, int>>& edges)
{
  std::vector<std::vector<int>> cm(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) cm[i][i] = 2;
  for (auto [a, b] : edges) cm[a - 1][b - 1] = cm[b - 1][a - 1] = -1;
  return cm;
}

// Textbook Cartan matrices, entry [i][j] = alpha_j^*(alpha_i), node order of
// the standard planches.
std::vector<std::vector<int>> textbook_cartan(SimpleType t)
{
  const int n = t.rank;
  std::vector<std::pair<int, int>> chain;
  for (int i = 1; i < n; ++i) chain.emplace_back(i, i + 1);
  switch (t.family) {
    case Family::A: return simply_laced(n, chain);
    case Family::B: {
      auto cm = simply_laced(n, chain);
      cm[n - 2][n - 1] = -2;  // alpha_n short
      return cm;
    }
    case Family::C: {
      auto cm = simply_laced(n, chain);
      cm[n - 1][n - 2] = -2;  // alpha_n long
      return cm;
    }
    case Family::D: {
      std::vector<std::pair<int, int>> e;
      for (int i = 1; i < n - 1; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(n - 2, n);
      return simply_laced(n, e);
    }
    case Family::E: {
      std::vector<std::pair<int, int>> e{{1, 3}, {3, 4}, {2, 4}};
      for (int i = 4; i < n; ++i) e.emplace_back(i, i + 1);
      return simply_laced(n, e);
    }
    case Family::F: return {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
    case Family::G: return {{2, -1}, {-3, 2}};
  }
  return {};
}

Coeffs pos_coeffs(const RootSystem& rs, std::size_t k) { return rs.root_coeffs()[k]; }

}  // namespace

TEST_CASE("root counts match the closed forms for every type")
{
  for (auto conv : {Convention::standard, Convention::paper_dual})
    for (const auto& t : all_types()) {
      CAPTURE(t.name());
      const RootSystem rs = RootSystem::build(t, conv);
      const int n = t.rank;
      int expected = 0;
      switch (t.family) {
        case Family::A: expected = n * (n + 1); break;
        case Family::B:
        case Family::C: expected = 2 * n * n; break;
        case Family::D: expected = 2 * n * (n - 1); break;
        case Family::E: expected = n == 6 ? 72 : n == 7 ? 126 : 240; break;
        case Family::F: expected = 48; break;
        case Family::G: expected = 12; break;
      }
      CHECK(static_cast<int>(rs.roots().size()) == expected);
      // 2m = dim G - n
      CHECK(static_cast<int>(rs.roots().size()) == t.group_dimension() - n);
    }
}

TEST_CASE("standard Cartan matrices match the textbook ones")
{
  for (const auto& t : all_types()) {
    CAPTURE(t.name());
    const RootSystem rs = RootSystem::build(t, Convention::standard);
    CHECK(rs.cartan_matrix() == textbook_cartan(t));
  }
}

TEST_CASE("positive roots agree with the root-string construction")
{
  for (auto conv : {Convention::standard, Convention::paper_dual})
    for (const auto& t : all_types()) {
      CAPTURE(t.name());
      const RootSystem rs = RootSystem::build(t, conv);
      std::set<Coeffs> got;
      for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) got.insert(pos_coeffs(rs, k));
      CHECK(got == positive_roots_from_cartan(rs.cartan_matrix()));
    }
}

TEST_CASE("paper_dual swaps B and C and transposes the Cartan matrix")
{
  for (const auto& t : all_types()) {
    CAPTURE(t.name());
    const RootSystem std_rs = RootSystem::build(t, Convention::standard);
    const RootSystem dual = RootSystem::build(t, Convention::paper_dual);
    const auto& a = std_rs.cartan_matrix();
    const auto& b = dual.cartan_matrix();
    const int n = t.rank;
    // F4 and G2 list their nodes in reverse order
    const bool reversed = t.family == Family::F || t.family == Family::G;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const int ii = reversed ? n - 1 - i : i, jj = reversed ? n - 1 - j : j;
        CHECK(b[ii][jj] == a[j][i]);
      }
    if (t.family == Family::B) CHECK(dual.root_type().family == Family::C);
    if (t.family == Family::C && t.rank > 2) CHECK(dual.root_type().family == Family::B);
    CHECK(dual.type() == t);
  }
}

TEST_CASE("simply laced types are unchanged by the convention")
{
  for (const auto& t : all_types()) {
    if (t.family != Family::A && t.family != Family::D && t.family != Family::E) continue;
    CAPTURE(t.name());
    const RootSystem a = RootSystem::build(t, Convention::standard);
    const RootSystem b = RootSystem::build(t, Convention::paper_dual);
    CHECK(a.roots() == b.roots());
    CHECK(a.fundamental_weights() == b.fundamental_weights());
  }
}

TEST_CASE("closure, weight duality and positivity for all types")
{
  for (auto conv : {Convention::standard, Convention::paper_dual})
    for (const auto& t : all_types()) {
      CAPTURE(t.name());
      const RootSystem rs = RootSystem::build(t, conv);
      const int n = t.rank;
      std::set<RatVector> all(rs.roots().begin(), rs.roots().end());
      bool closed = true;
      for (const auto& a : rs.roots())
        for (const auto& g : rs.roots())
          if (!all.count(reflect(rs, a, g))) closed = false;
      CHECK(closed);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          CHECK(inverse_root_apply(rs, rs.simple_roots()[j], rs.fundamental_weights()[i]) == (i == j ? 1 : 0));
          CHECK(dot(rs.fundamental_weights()[i], rs.fundamental_weights()[j]) > 0);
          CHECK(rs.weight_gram()(i, j) == dot(rs.fundamental_weights()[i], rs.fundamental_weights()[j]));
          CHECK(rs.cartan_matrix()[i][j] == inverse_root_apply(rs, rs.simple_roots()[j], rs.simple_roots()[i]));
          const int c = rs.cartan_matrix()[i][j];
          if (i == j) CHECK(c == 2);
          else CHECK((c <= 0 && c >= -3));
        }
    }
}

TEST_CASE("maximal short root dominates every short root")
{
  for (auto conv : {Convention::standard, Convention::paper_dual})
    for (const auto& t : all_types()) {
      CAPTURE(t.name());
      const RootSystem rs = RootSystem::build(t, conv);
      const RatVector& beta = maximal_short_root(rs);
      CHECK(rs.is_root(beta));
      CHECK(rs.is_short(beta));
      CHECK(is_dominant(rs, beta));
      for (const auto& a : rs.roots())
        if (rs.is_short(a)) CHECK(dominance_leq(rs, a, beta));
      RatVector sum(rs.ambient_dim());
      for (int i = 0; i < t.rank; ++i) sum += Rational(rs.max_short_coeffs()[i]) * rs.simple_roots()[i];
      CHECK(sum == beta);
      // the cell functional on weight coordinates is beta^* of omega_i
      for (int i = 0; i < t.rank; ++i)
        CHECK(rs.max_short_dual_on_weights()[i] == inverse_root_apply(rs, beta, rs.fundamental_weights()[i]));
    }
}

TEST_CASE("maximal short root coefficients of E6, E7, E8")
{
  auto coeffs = [](int n) { return RootSystem::build(SimpleType::make(Family::E, n)).max_short_coeffs(); };
  CHECK(coeffs(6) == std::vector<int>{1, 2, 2, 3, 2, 1});
  CHECK(coeffs(7) == std::vector<int>{2, 2, 3, 4, 3, 2, 1});
  const auto e8 = coeffs(8);
  CHECK(e8[0] == 2);
  CHECK(e8[7] == 2);
  for (int k = 1; k < 7; ++k) CHECK(e8[k] >= 3);
}

TEST_CASE("rank one")
{
  const RootSystem rs = RootSystem::build(SimpleType::make(Family::A, 1), Convention::standard);
  REQUIRE(rs.roots().size() == 2);
  const RatVector& a = rs.simple_roots()[0];
  CHECK(rs.roots()[1] == -a);
  CHECK(rs.fundamental_weights()[0] == Rational(1, 2) * a);
  CHECK(maximal_short_root(rs) == a);
  CHECK(rs.max_short_coeffs() == std::vector<int>{1});
}

TEST_CASE("small exceptional counts")
{
  CHECK(RootSystem::build(SimpleType::make(Family::G, 2), Convention::standard).roots().size() == 12);
  CHECK(RootSystem::build(SimpleType::make(Family::E, 8), Convention::standard).roots().size() == 240);
}

TEST_CASE("inverse roots")
{
  const RootSystem f4 = RootSystem::build(SimpleType::make(Family::F, 4));
  for (const auto& a : f4.roots()) CHECK(inverse_root_apply(f4, a, a) == 2);
  const RootSystem e7 = RootSystem::build(SimpleType::make(Family::E, 7));
  const RatVector half6 = Rational(1, 2) * e7.fundamental_weights()[5];
  CHECK(inverse_root_apply(e7, maximal_short_root(e7), half6) == 1);
  CHECK_THROWS_AS(inverse_root_apply(e7, RatVector(e7.ambient_dim()), half6), InvalidArgument);
  CHECK_THROWS_AS(inverse_root_apply(e7, RatVector(3), half6), InvalidArgument);
}

TEST_CASE("cell membership")
{
  const RootSystem f4 = RootSystem::build(SimpleType::make(Family::F, 4));
  const RootSystem e6 = RootSystem::build(SimpleType::make(Family::E, 6));
  CHECK(in_weyl_cell(f4, RatVector(f4.ambient_dim())));
  CHECK(in_weyl_cell(f4, Rational(1, 2) * f4.fundamental_weights()[3]));
  CHECK(in_weyl_cell(f4, Rational(1, 2) * f4.fundamental_weights()[0]));
  CHECK_FALSE(in_weyl_cell(f4, Rational(1, 2) * f4.fundamental_weights()[1]));
  CHECK(in_weyl_cell(e6, Rational(1, 2) * (e6.fundamental_weights()[0] + e6.fundamental_weights()[5])));
  CHECK_FALSE(in_weyl_cell(e6, -Rational(1, 2) * e6.fundamental_weights()[0]));
  CHECK_FALSE(in_weyl_cell(e6, e6.fundamental_weights()[1]));
  // a vector off the span of the E6 roots
  RatVector off(e6.ambient_dim());
  off[off.size() - 1] = 1;
  off[off.size() - 2] = 1;
  CHECK_FALSE(e6.in_span(off));
}

TEST_CASE("dominance order on E6 fundamental weights")
{
  const RootSystem e6 = RootSystem::build(SimpleType::make(Family::E, 6));
  const auto& om = e6.fundamental_weights();
  CHECK(dominance_leq(e6, om[2], om[2]));
  CHECK(dominance_leq(e6, om[5], om[2]));        // omega_3 above omega_6
  CHECK_FALSE(dominance_leq(e6, om[0], om[2]));  // but not above omega_1
  CHECK_FALSE(dominance_leq(e6, om[5], om[0]));
  CHECK_FALSE(dominance_leq(e6, om[0], om[5]));
  CHECK(dominance_leq(e6, RatVector(e6.ambient_dim()), om[1]));
}

TEST_CASE("weight coordinates round trip")
{
  for (const auto& t : all_types()) {
    CAPTURE(t.name());
    const RootSystem rs = RootSystem::build(t);
    for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
      const RatVector c = rs.weight_coords(rs.roots()[k]);
      CHECK(rs.from_weight_coords(c) == rs.roots()[k]);
      const RatVector r = rs.root_coords_from_weights(c);
      for (int i = 0; i < t.rank; ++i) CHECK(r[i] == rs.root_coeffs()[k][i]);
    }
    for (int i = 0; i < t.rank; ++i) CHECK(rs.simple_root_in_weights(i) == rs.weight_coords(rs.simple_roots()[i]));
  }
}

TEST_CASE("invalid ranks are rejected")
{
  CHECK_THROWS_AS(RootSystem::build(SimpleType{Family::E, 5}), InvalidGroup);
  CHECK_THROWS_AS(RootSystem::build(SimpleType{Family::G, 3}), InvalidGroup);
  CHECK_THROWS_AS(RootSystem::build(SimpleType{Family::B, 1}), InvalidGroup);
}
