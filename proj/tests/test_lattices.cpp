#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "liefix/errors.hpp"
#include "liefix/fixset.hpp"
#include "liefix/lattice.hpp"
#include "support.hpp"

using namespace liefix;
using test::group;

namespace {

// Every v with 0 < (v,v) <= bound, from a coefficient box. |x_i|^2 <= bound * (G^-1)_ii
// bounds each coordinate independently of any triangular factorisation.
std::set<RatVector> box_enumeration(const LatticeBasis& L, const Rational& bound)
{
  const std::size_t n = L.rank();
  const RatMatrix ginv = inverse(L.gram());
  std::vector<long> lim(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational cap = bound * ginv(i, i);
    long b = 0;
    while (Rational((b + 1) * (b + 1)) <= cap) ++b;
    lim[i] = b;
  }
  std::set<RatVector> out;
  std::vector<long> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -lim[i];
  while (true) {
    const RatVector v = L.combine(x);
    const Rational nn = norm_sq(v);
    if (nn > 0 && nn <= bound) out.insert(v);
    std::size_t i = 0;
    while (i < n && x[i] == lim[i]) {
      x[i] = -lim[i];
      ++i;
    }
    if (i == n) break;
    ++x[i];
  }
  return out;
}

std::vector<CenterSelector> all_selectors(const SimpleGroup& sc)
{
  std::vector<CenterSelector> out{CenterSelector::simply_connected(), CenterSelector::adjoint()};
  for (int p : sc.weights().pi) out.push_back(CenterSelector::subgroup({p}));
  return out;
}

}  // namespace

TEST_CASE("short vectors agree with box enumeration up to rank 4")
{
  for (const auto& t : test::all_types(4)) {
    CAPTURE(t.name());
    const SimpleGroup sc(GroupFactor{t, {}});
    const SimpleGroup adj(GroupFactor{t, CenterSelector::adjoint()});
    for (const LatticeBasis* L : {&sc.root_lattice(), &sc.weight_lattice(), &adj.unit_lattice()}) {
      for (const Rational bound : {Rational(1, 2), Rational(2), Rational(9, 2), Rational(8)}) {
        CAPTURE(to_string(bound));
        const auto got = short_vectors(*L, bound);
        const std::set<RatVector> got_set(got.begin(), got.end());
        CHECK(got_set.size() == got.size());
        CHECK(got_set == box_enumeration(*L, bound));
      }
    }
  }
}

TEST_CASE("short vectors of small bound")
{
  const SimpleGroup a1 = group("A1");
  const auto v = short_vectors(a1.root_lattice(), Rational(2));
  const RatVector& alpha = a1.roots().simple_roots()[0];
  REQUIRE(v.size() == 2);
  CHECK(std::set<RatVector>(v.begin(), v.end()) == std::set<RatVector>{alpha, -alpha});
  CHECK(short_vectors(a1.root_lattice(), Rational(1)).empty());

  const SimpleGroup e8 = group("E8");
  const auto minimal = short_vectors(e8.unit_lattice(), Rational(2));
  CHECK(minimal.size() == 240);
  CHECK(std::set<RatVector>(minimal.begin(), minimal.end()) ==
        std::set<RatVector>(e8.roots().roots().begin(), e8.roots().roots().end()));
  CHECK(short_vectors(e8.unit_lattice(), Rational(19, 10)).empty());

  ComputeOptions tiny;
  tiny.enumeration_cap = 100;
  CHECK_THROWS_AS(short_vectors(e8.unit_lattice(), Rational(2), tiny), CapExceeded);
}

TEST_CASE("lattice indices")
{
  CHECK(lattice_index(group("E6").weight_lattice(), group("E6").root_lattice()) == 3);
  CHECK(lattice_index(group("E7*").unit_lattice(), group("E7").unit_lattice()) == 2);
  CHECK(lattice_index(group("E8").weight_lattice(), group("E8").root_lattice()) == 1);
  CHECK(lattice_index(group("D6").weight_lattice(), group("D6").root_lattice()) == 4);
  CHECK(lattice_index(group("A7").weight_lattice(), group("A7:sub=2").unit_lattice()) == 2);
  CHECK(lattice_index(group("A7:sub=2").unit_lattice(), group("A7").root_lattice()) == 4);

  const SimpleGroup a1 = group("A1");
  CHECK(a1.weight_lattice().basis().front() == Rational(1, 2) * a1.roots().simple_roots()[0]);
}

TEST_CASE("unit lattice for each selector")
{
  for (const char* name : {"E8", "E8*", "F4", "G2*"}) {
    const SimpleGroup g = group(name);
    CHECK(g.center_order() == 1);
    CHECK(g.fundamental_group_order() == 1);
  }
  const SimpleGroup e7adj = group("E7*");
  CHECK(lattice_index(e7adj.unit_lattice(), e7adj.root_lattice()) == 2);
  CHECK(lattice_index(e7adj.weight_lattice(), e7adj.unit_lattice()) == 1);

  const SimpleGroup e6sub = group("E6:sub=1");
  CHECK(e6sub.centerless());
  CHECK(e6sub.name() == "E6*");
  CHECK(lattice_index(e6sub.weight_lattice(), e6sub.unit_lattice()) == 1);

  CHECK(group("D6:sub=6").quotient_invariants() == std::vector<Integer>{2});
  CHECK(group("D5").quotient_invariants() == std::vector<Integer>{4});
  CHECK(group("D6").quotient_invariants() == std::vector<Integer>{2, 2});
  CHECK_THROWS_AS(group("E6:sub=2"), InvalidSelector);
}

TEST_CASE("membership")
{
  const SimpleGroup e7 = group("E7");
  const SimpleGroup e7adj = group("E7*");
  const RatVector w7 = e7.roots().fundamental_weights()[6];
  CHECK(member(e7.unit_lattice(), RatVector(w7.size())));
  CHECK_FALSE(member(e7.unit_lattice(), w7));
  CHECK(member(e7.unit_lattice(), Rational(2) * w7));
  CHECK(member(e7adj.unit_lattice(), w7));
  for (const auto& a : e7.roots().roots()) CHECK(member(e7.weight_lattice(), a));
  CHECK_FALSE(member(e7.weight_lattice(), Rational(1, 2) * w7));
  CHECK(e7.in_unit_lattice_w(test::w({0, 0, 0, 0, 0, 0, 2})));
  CHECK_FALSE(e7.in_unit_lattice_w(test::w({0, 0, 0, 0, 0, 0, 1})));
}

TEST_CASE("lattice inclusions for every type and selector")
{
  for (const auto& t : test::all_types()) {
    const SimpleGroup sc(GroupFactor{t, {}});
    for (const auto& sel : all_selectors(sc)) {
      const SimpleGroup g(GroupFactor{t, sel});
      CAPTURE(g.name());
      for (const auto& b : g.root_lattice().basis()) CHECK(member(g.unit_lattice(), b));
      for (const auto& b : g.unit_lattice().basis()) CHECK(member(g.weight_lattice(), b));
      CHECK(g.center_order() * g.fundamental_group_order() == lattice_index(g.weight_lattice(), g.root_lattice()));
      CHECK(g.center_order() == lattice_index(g.weight_lattice(), g.unit_lattice()));
    }
  }
}

TEST_CASE("deficiency")
{
  const SimpleGroup e6 = group("E6");
  const auto& om = e6.roots().fundamental_weights();
  CHECK(deficiency(e6, om[1]) == 1);
  CHECK(deficiency(e6, om[0]) == 3);
  CHECK(deficiency(e6, om[3]) == 1);
  CHECK(deficiency(e6, RatVector(om[0].size())) == 1);
  CHECK_THROWS_AS(deficiency(e6, Rational(1, 2) * om[0]), InvalidArgument);
  CHECK(deficiency(group("E6*"), om[0]) == 1);
}

TEST_CASE("deficiency is minimal")
{
  for (const auto& t : test::all_types()) {
    const SimpleGroup sc(GroupFactor{t, {}});
    for (const auto& sel : all_selectors(sc)) {
      const SimpleGroup g(GroupFactor{t, sel});
      CAPTURE(g.name());
      for (const auto& x : g.roots().fundamental_weights()) {
        const int k = deficiency(g, x);
        CHECK(member(g.unit_lattice(), Rational(k) * x));
        for (int j = 1; j < k; ++j) CHECK_FALSE(member(g.unit_lattice(), Rational(j) * x));
      }
    }
  }
}

TEST_CASE("omega partition")
{
  const auto e7 = omega_partition(group("E7"));
  CHECK(e7.omega1 == std::vector<int>{0, 2, 3, 5});
  CHECK(e7.omega2 == std::vector<int>{1, 4, 6});
  for (const char* name : {"E7*", "E6*", "D5*", "A4*", "B3*", "C4*", "E8", "F4", "G2"})
    CHECK(omega_partition(group(name)).omega2.empty());
  // Spin(9): even indices
  const auto b4 = omega_partition(group("B4"));
  CHECK(b4.omega1 == std::vector<int>{1, 3});
  const auto e6 = omega_partition(group("E6"));
  CHECK(e6.omega1 == std::vector<int>{1, 3});
}

TEST_CASE("Voronoi cell membership")
{
  const SimpleGroup e7adj = group("E7*");
  const SimpleGroup e6adj = group("E6*");
  CHECK(voronoi_contains(e7adj.unit_lattice(), RatVector(e7adj.roots().ambient_dim())));
  const RatVector u7 = e7adj.roots().from_weight_coords(test::half(7, 6));
  const RatVector u6 = e6adj.roots().from_weight_coords(test::half(6, 3));
  CHECK_FALSE(voronoi_contains(e7adj.unit_lattice(), u7));
  CHECK_FALSE(voronoi_contains(e6adj.unit_lattice(), u6));
  CHECK(voronoi_contains(e7adj.unit_lattice(), e7adj.roots().from_weight_coords(test::half(7, 1))));

  // the witnesses: omega_7 and omega_1 are closer
  const RatVector w7 = e7adj.roots().fundamental_weights()[6];
  const RatVector w1 = e6adj.roots().fundamental_weights()[0];
  CHECK(norm_sq(u7 - w7) < norm_sq(u7));
  CHECK(norm_sq(u6 - w1) < norm_sq(u6));
}

TEST_CASE("Voronoi violators are shorter than twice |u|")
{
  // any v with 2(u,v) > (v,v) found under a much larger bound already has (v,v) < 4(u,u)
  for (const char* name : {"E6*", "E7*", "D6:sub=6", "A5*", "B4*"}) {
    const SimpleGroup g = group(name);
    CAPTURE(name);
    for (const auto& c : g.roots().fundamental_weights()) {
      const RatVector u = Rational(1, 2) * c;
      const Rational uu = norm_sq(u);
      for (const auto& v : short_vectors(g.unit_lattice(), Rational(5) * uu))
        if (Rational(2) * dot(u, v) > norm_sq(v)) CHECK(norm_sq(v) < Rational(4) * uu);
    }
  }
}

TEST_CASE("Voronoi test is centrally symmetric")
{
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-6, 6);
  for (const char* name : {"E6*", "E7*", "D5*", "A4", "C3*", "G2", "F4"}) {
    const SimpleGroup g = group(name);
    CAPTURE(name);
    const int n = g.rank();
    for (int trial = 0; trial < 12; ++trial) {
      RatVector c(n);
      for (int i = 0; i < n; ++i) c[i] = make_rational(d(rng), 4);
      const RatVector u = g.roots().from_weight_coords(c);
      CHECK(voronoi_contains(g.unit_lattice(), u) == voronoi_contains(g.unit_lattice(), -u));
    }
    for (const auto& c : candidate_set(g)) {
      const RatVector u = g.roots().from_weight_coords(c);
      CHECK(voronoi_contains(g.unit_lattice(), u) == voronoi_contains(g.unit_lattice(), -u));
    }
  }
}

TEST_CASE("cell candidates of simply connected groups lie in the Voronoi cell")
{
  for (const char* name : {"G2", "F4", "E6", "E7", "E8"}) {
    const SimpleGroup g = group(name);
    CAPTURE(name);
    for (const auto& c : candidate_set(g))
      CHECK(voronoi_contains(g.unit_lattice(), g.roots().from_weight_coords(c)));
  }
}

TEST_CASE("lattice basis checks")
{
  CHECK_THROWS_AS(LatticeBasis::from_basis({RatVector::from_ints({1, 0}), RatVector::from_ints({2, 0})}),
                  InvalidArgument);
  const LatticeBasis L = LatticeBasis::from_basis({RatVector::from_ints({1, 1}), RatVector::from_ints({1, -1})});
  CHECK(L.coordinates(RatVector::from_ints({2, 0})) == RatVector::from_ints({1, 1}));
  CHECK_FALSE(member(L, RatVector::from_ints({1, 0})));
  CHECK(L.combine({1, -1}) == RatVector::from_ints({0, 2}));
}
