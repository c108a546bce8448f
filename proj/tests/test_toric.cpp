#include <random>

#include "doctest.h"
#include "mckay/toric.hpp"

using namespace mckay;

namespace {

using Z = CyclotomicNumber;

Polynomial xy(int p, int q, const Z& c = 1) {
  return Polynomial::monomial(Monomial{{p, q}}, c, MonomialOrder::GradedLex);
}

GaloisForm cyclic_form(int n, FormKind kind) {
  return GaloisForm(GroupId::cyclic(n), FieldSpec::real_cyclotomic(n), kind);
}

}  // namespace

TEST_CASE("fan rays, charts and unimodularity") {
  Fan f2 = build_fan(2);
  CHECK(f2.rays == std::vector<Exponent>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(f2.curves() == 1);
  CHECK(f2.charts[0][0] == Exponent{1, -1});  // s_0 = x / y
  CHECK(f2.charts[0][1] == Exponent{0, 2});   // t_0 = y^2
  for (int n = 2; n <= 12; ++n) {
    CAPTURE(n);
    Fan f = build_fan(n);
    auto rep = verify_fan(f);
    INFO(rep.to_text());
    CHECK(rep.passed());
    CHECK(f.cones.size() == static_cast<std::size_t>(n));
  }
  auto c = lattice_coordinates(4, Rational(3, 4), Rational(1, 4));
  CHECK(c[0] == 0);
  CHECK(c[1] == 1);
}

TEST_CASE("self-intersections are -2") {
  for (int n = 2; n <= 12; ++n) {
    Fan f = build_fan(n);
    auto self = self_intersections(f);
    CHECK(self.size() == static_cast<std::size_t>(n - 1));
    for (int i = 1; i < n; ++i) {
      // the same relation on the raw rays in Q^2
      const auto& a = f.rays[i - 1];
      const auto& b = f.rays[i];
      const auto& c = f.rays[i + 1];
      CHECK(a[0] + c[0] == -self[i - 1] * b[0]);
      CHECK(a[1] + c[1] == -self[i - 1] * b[1]);
      CHECK(self[i - 1] == -2);
    }
  }
}

TEST_CASE("intersection graphs") {
  Fan f5 = build_fan(5);
  auto split = intersection_graph(f5);
  CHECK(split.size() == 4);
  CHECK(classify(split).name == "(A_4)");
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(split.loops(i) == 0);
    for (std::size_t j = 0; j < 4; ++j) CHECK(split.adjacency[i][j] == ((i > j ? i - j : j - i) == 1 ? 1 : 0));
  }
  auto folded = intersection_graph(f5, ray_action(f5, FormKind::Constant));
  CHECK(folded.size() == 2);
  CHECK(folded.vertices[0].mult == 2);
  CHECK(folded.vertices[1].mult == 2);
  CHECK(folded.vertices[1].label == "E_2+E_3");
  CHECK(folded.loops(1) == 1);  // E_2.E_3 = 1 inside the orbit
  CHECK(classify(folded).name == "(A_4)'");

  auto single = intersection_graph(build_fan(2));
  CHECK(single.size() == 1);
  CHECK(single.loops(0) == 0);
  CHECK(intersection_graph(build_fan(2), ray_action(build_fan(2), FormKind::Constant)) == single);

  CHECK(ray_action(f5, FormKind::MuCyclic) == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(ray_action(f5, FormKind::Constant) == std::vector<int>{5, 4, 3, 2, 1, 0});
  CHECK_THROWS_AS(ray_action(f5, FormKind::TwistedBD), std::invalid_argument);
}

TEST_CASE("coordinate change diagonalizes the companion matrix") {
  for (int n : {3, 4, 5, 7, 12}) {
    CAPTURE(n);
    auto rep = check_coordinate_change(n);
    INFO(rep.to_text());
    CHECK(rep.passed());
  }
  CHECK_THROWS_AS(check_coordinate_change(2), std::invalid_argument);
}

TEST_CASE("cluster ideals and restrictions") {
  IdealBasis origin = cluster_ideal_at(3, 1, 0, 0);
  CHECK(origin.groebner_basis() == buchberger({xy(2, 0), xy(1, 1), xy(0, 2)}));
  IdealBasis e1 = restrict_to_E(3, 1, 1, 1);
  CHECK(e1.generators == std::vector<Polynomial>{xy(1, 0) - xy(0, 2), xy(1, 1), xy(0, 3), xy(2, 0)});
  IdealBasis c0 = cluster_ideal_at(4, 0, 2, 3);
  CHECK(c0.generators[0] == xy(1, 0) - xy(0, 3, 2));
  CHECK(c0.generators[1] == xy(1, 1) - xy(0, 0, 6));
  CHECK(c0.generators[2] == xy(0, 4) - xy(0, 0, 3));
  CHECK_THROWS_AS(restrict_to_E(3, 1, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(restrict_to_E(3, 3, 1, 1), std::invalid_argument);
  // b = 0 is the origin of the upper chart
  IdealBasis alt = restrict_to_E(5, 2, 2, 0);
  CHECK(alt.groebner_basis() == buchberger({xy(3, 0), xy(1, 1), xy(0, 3)}));
}

TEST_CASE("clusters carry the regular character") {
  IdealBasis origin = cluster_ideal_at(3, 1, 0, 0);
  CHECK(quotient_character(origin, 3) == std::vector<int>{1, 1, 1});
  CHECK(verify_cluster(origin, 3).passed());
  IdealBasis e1 = restrict_to_E(3, 1, 1, 1);
  CHECK(verify_cluster(e1, 3).passed());
  IdealBasis generic = cluster_ideal_at(4, 0, 2, 3);
  CHECK(verify_cluster(generic, 4).passed());

  IdealBasis fat{{xy(2, 0), xy(0, 2)}, {}};
  auto rep = verify_cluster(fat, 3);
  CHECK_FALSE(rep.passed());
  IdealBasis line{{xy(1, 0)}, {}};
  CHECK_FALSE(verify_cluster(line, 3).passed());

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-7, 7);
  for (int n = 2; n <= 8; ++n)
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < 5; ++k) {
        IdealBasis ideal = cluster_ideal_at(n, i, d(rng), d(rng));
        CAPTURE(n);
        CHECK(verify_cluster(ideal, n).passed());
      }
}

TEST_CASE("V(I) at chart origins and interior points") {
  for (int n = 2; n <= 9; ++n) {
    CAPTURE(n);
    for (int i = 0; i < n; ++i) {
      IdealBasis origin = cluster_ideal_at(n, i, 0, 0);
      auto v = v_of_I(origin, n);
      std::vector<int> expected;
      if (i >= 1) expected.push_back(i);
      if (i + 1 <= n - 1) expected.push_back(i + 1);
      CHECK(v.support() == expected);
      CHECK(v.dichotomy());
    }
    for (int i = 1; i < n; ++i) {
      IdealBasis ideal = restrict_to_E(n, i, 1, 1);
      auto v = v_of_I(ideal, n);
      CHECK(v.support() == std::vector<int>{i});
      CHECK(v.basis.size() == 1);
    }
  }
  IdealBasis off = cluster_ideal_at(4, 1, 2, 3);
  CHECK_THROWS_AS(v_of_I(off, 4), std::invalid_argument);
}

TEST_CASE("V(I) of monomial ideals matches minimal generators") {
  // for a monomial ideal containing (x^n, y^n, xy), V(I) is spanned by the
  // minimal generators x^a, y^b with a, b < n
  for (int n = 2; n <= 7; ++n)
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        IdealBasis ideal{{xy(a, 0), xy(0, b), xy(1, 1), xy(n, 0), xy(0, n)}, {}};
        std::vector<int> expected(static_cast<std::size_t>(n), 0);
        if (a < n) ++expected[a];
        if (b < n) ++expected[n - b];
        CAPTURE(n);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(v_of_I(ideal, n).decomposition == expected);
      }
}

TEST_CASE("tautological degrees") {
  CHECK(tautological_degrees(2) == IntMatrix{{1}});
  CHECK(tautological_degrees(3) == IntMatrix{{1, 0}, {0, 1}});
  for (int n = 2; n <= 12; ++n) {
    auto deg = tautological_degrees(n);
    for (int i = 0; i < n - 1; ++i)
      for (int j = 0; j < n - 1; ++j) CHECK(deg[i][j] == (i == j ? 1 : 0));
  }
  auto g = chart_generators(4, 1);
  CHECK(g[1] == Monomial{{1, 0}});
  CHECK(g[2] == Monomial{{0, 2}});
  CHECK(g[3] == Monomial{{0, 1}});
}

TEST_CASE("McKay correspondence for cyclic groups") {
  for (int n = 2; n <= 12; ++n)
    for (auto kind : {FormKind::MuCyclic, FormKind::Constant}) {
      CAPTURE(n);
      CAPTURE(to_string(kind));
      auto rep = verify_mckay_cyclic(cyclic_form(n, kind));
      INFO(rep.to_text());
      CHECK(rep.passed());
    }
  CHECK_THROWS_AS(
      verify_mckay_cyclic(GaloisForm(GroupId::binary_dihedral(2), FieldSpec::cyclotomic(4), FormKind::Constant)),
      std::invalid_argument);
}
