#include <doctest.h>

#include <map>

#include "liefix/errors.hpp"
#include "liefix/lattice.hpp"
#include "liefix/weights.hpp"
#include "support.hpp"

using namespace liefix;
using test::group;

namespace {

// 1-based index lists
using Idx = std::vector<int>;

Idx one_based(const std::vector<int>& v)
{
  Idx out;
  for (int k : v) out.push_back(k + 1);
  return out;
}

Idx range(int lo, int hi, int step = 1)
{
  Idx out;
  for (int k = lo; k <= hi; k += step) out.push_back(k);
  return out;
}

struct Expected {
  Idx omega1, pi;
  std::map<int, int> tau_r;
};

// Closed forms for the classical families, indexed by group label (Sp(n) is
// C_n, Spin(2n+1) is B_n, SU(n+1) is A_n).
Expected classical(Family f, int n)
{
  Expected e;
  switch (f) {
    case Family::A:
      e.pi = range(1, n);
      for (int k = 1; k <= n; ++k) e.tau_r[k] = n + 1 - k;
      break;
    case Family::C:
      e.omega1 = range(1, n - 1);
      e.pi = {n};
      e.tau_r[n] = n;
      break;
    case Family::B:
      e.omega1 = range(2, n, 2);
      e.pi = {1};
      for (int k = 1; k <= n; k += 2) e.tau_r[k] = 1;
      break;
    case Family::D:
      e.omega1 = range(2, n - 2, 2);
      e.pi = {1, n - 1, n};
      for (int k = 1; k <= n - 2; k += 2) e.tau_r[k] = 1;
      e.tau_r[n - 1] = n % 2 ? n : n - 1;
      e.tau_r[n] = n % 2 ? n - 1 : n;
      break;
    default: break;
  }
  return e;
}

Idx complement(const Idx& a, int n)
{
  Idx out;
  for (int k = 1; k <= n; ++k)
    if (std::find(a.begin(), a.end(), k) == a.end()) out.push_back(k);
  return out;
}

}  // namespace

TEST_CASE("classical omega partitions, minimal weights and tau o r")
{
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int n = f == Family::D ? 3 : 2; n <= 8; ++n) {
      const SimpleGroup g(GroupFactor{SimpleType::make(f, n), {}});
      CAPTURE(g.name());
      const Expected e = classical(f, n);
      const auto part = omega_partition(g);
      CHECK(one_based(part.omega1) == e.omega1);
      CHECK(one_based(part.omega2) == complement(e.omega1, n));
      CHECK(one_based(g.weights().pi) == e.pi);
      std::map<int, int> tr;
      for (int k : g.weights().omega2) tr[k + 1] = g.weights().tau_r(k) + 1;
      CHECK(tr == e.tau_r);
    }
}

TEST_CASE("exceptional tables")
{
  const SimpleGroup e6 = group("E6");
  CHECK(one_based(omega_partition(e6).omega1) == Idx{2, 4});
  CHECK(one_based(e6.weights().pi) == Idx{1, 6});
  std::map<int, int> tr6;
  for (int k : e6.weights().omega2) tr6[k + 1] = e6.weights().tau_r(k) + 1;
  CHECK(tr6 == std::map<int, int>{{1, 6}, {3, 1}, {5, 6}, {6, 1}});

  const SimpleGroup e7 = group("E7");
  CHECK(one_based(e7.weights().pi) == Idx{7});
  std::map<int, int> tr7;
  for (int k : e7.weights().omega2) tr7[k + 1] = e7.weights().tau_r(k) + 1;
  CHECK(tr7 == std::map<int, int>{{2, 7}, {5, 7}, {7, 7}});

  for (const char* name : {"G2", "F4", "E8"}) {
    const SimpleGroup g = group(name);
    CHECK(omega_partition(g).omega2.empty());
    CHECK(g.weights().pi.empty());
    CHECK(g.weights().omega2.empty());
  }
}

TEST_CASE("vector forms")
{
  const SimpleGroup e6 = group("E6");
  const auto& om = e6.roots().fundamental_weights();
  CHECK(minimal_weights(e6) == std::vector<RatVector>{om[0], om[5]});
  CHECK(center_elements(e6).size() == 2);
  CHECK(tau(e6, om[0]) == om[5]);
  CHECK(retraction(e6, om[2]) == om[5]);
  CHECK(tau_r(e6, om[2]) == om[0]);
  CHECK(tau_r(e6, om[4]) == om[5]);
  CHECK(retraction(e6, om[0]) == om[0]);
  CHECK_THROWS_AS(retraction(e6, om[1]), InvalidArgument);
  CHECK_THROWS_AS(tau(e6, om[2]), InvalidArgument);
  CHECK_THROWS_AS(tau(e6, Rational(2) * om[0]), InvalidArgument);

  const SimpleGroup e7 = group("E7");
  const auto& om7 = e7.roots().fundamental_weights();
  CHECK(minimal_weights(e7) == std::vector<RatVector>{om7[6]});
  CHECK(tau(e7, om7[6]) == om7[6]);
  CHECK(retraction(e7, om7[1]) == om7[6]);
  CHECK(tau_r(e7, om7[4]) == om7[6]);
  CHECK(center_elements(group("E8")).empty());

  const SimpleGroup d5 = group("D5");
  const auto& omd = d5.roots().fundamental_weights();
  CHECK(minimal_weights(d5) == std::vector<RatVector>{omd[0], omd[3], omd[4]});
  const SimpleGroup d6 = group("D6");
  CHECK(tau(d6, d6.roots().fundamental_weights()[5]) == d6.roots().fundamental_weights()[5]);
}

TEST_CASE("weight table invariants for every type")
{
  for (const auto& t : test::all_types()) {
    const SimpleGroup g(GroupFactor{t, {}});
    CAPTURE(g.name());
    const auto& tab = g.weights();
    const auto& rs = g.roots();
    const auto part = omega_partition(g);
    CHECK(tab.omega2 == part.omega2);
    // Pi inside Omega_2, one per nontrivial center element
    for (int p : tab.pi) CHECK(std::find(tab.omega2.begin(), tab.omega2.end(), p) != tab.omega2.end());
    CHECK(Integer(static_cast<long>(tab.pi.size()) + 1) == lattice_index(g.weight_lattice(), g.root_lattice()));
    for (int p : tab.pi) {
      CHECK(tab.tau.at(tab.tau.at(p)) == p);
      CHECK(tab.retraction.at(p) == p);
      CHECK(g.in_root_lattice_w(test::omega(g.rank(), p + 1) + test::omega(g.rank(), tab.tau.at(p) + 1)));
    }
    for (int k : tab.omega2) {
      const int r = tab.retraction.at(k);
      CHECK(dominance_leq(rs, rs.fundamental_weights()[r], rs.fundamental_weights()[k]));
      CHECK(g.in_root_lattice_w(test::omega(g.rank(), k + 1) + test::omega(g.rank(), tab.tau_r(k) + 1)));
    }
    // distinct minimal weights lie in distinct classes of Lambda / Lambda_r
    for (int p : tab.pi)
      for (int q : tab.pi)
        if (p != q) CHECK_FALSE(g.in_root_lattice_w(test::omega(g.rank(), p + 1) - test::omega(g.rank(), q + 1)));
  }
}

TEST_CASE("minimal weights are exactly the minuscule fundamental weights")
{
  // omega is minuscule iff |alpha^*(omega)| <= 1 for every root
  for (auto conv : {Convention::standard, Convention::paper_dual})
    for (const auto& t : test::all_types()) {
      const RootSystem rs = RootSystem::build(t, conv);
      CAPTURE(t.name());
      std::vector<int> minuscule;
      for (int k = 0; k < t.rank; ++k) {
        bool ok = true;
        for (const auto& a : rs.roots())
          if (abs(inverse_root_apply(rs, a, rs.fundamental_weights()[k])) > 1) ok = false;
        if (ok) minuscule.push_back(k);
      }
      CHECK(minimal_weight_indices(rs) == minuscule);
      for (int k = 0; k < t.rank; ++k) {
        const bool in_pi = std::find(minuscule.begin(), minuscule.end(), k) != minuscule.end();
        const bool in_root = [&] {
          for (const auto& c : rs.root_coords_from_weights(test::omega(t.rank, k + 1)))
            if (!is_integer(c)) return false;
          return true;
        }();
        if (!in_root) CHECK(has_dominant_weight_below(rs, k) == !in_pi);
      }
    }
}
