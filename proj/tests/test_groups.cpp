#include <map>

#include "doctest.h"
#include "mckay/expression.hpp"
#include "mckay/groups.hpp"

using namespace mckay;

namespace {

using Z = CyclotomicNumber;

std::vector<GroupId> shipped_groups() {
  std::vector<GroupId> gs;
  for (int n = 1; n <= 12; ++n) gs.push_back(GroupId::cyclic(n));
  for (int n = 2; n <= 8; ++n) gs.push_back(GroupId::binary_dihedral(n));
  gs.push_back(GroupId::bt());
  gs.push_back(GroupId::bo());
  gs.push_back(GroupId::bi());
  return gs;
}

struct M2 {
  Z a, b, c, d;
  friend M2 operator*(const M2& x, const M2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const M2& x, const M2& y) { return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d; }
};

std::vector<M2> closure(const std::vector<M2>& gens) {
  std::vector<M2> elems{{1, 0, 0, 1}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      M2 p = elems[i] * g;
      bool seen = false;
      for (const auto& e : elems) seen = seen || e == p;
      if (!seen) elems.push_back(p);
    }
  return elems;
}

// Multiset of traces of the explicit matrix group, keyed by display string.
std::map<std::string, int> trace_multiset(const std::vector<M2>& elems) {
  std::map<std::string, int> out;
  for (const auto& e : elems) ++out[to_display_string(e.a + e.d)];
  return out;
}

std::map<std::string, int> natural_multiset(const CharacterTable& t) {
  std::map<std::string, int> out;
  Character v = natural_character(t);
  for (std::size_t c = 0; c < v.size(); ++c) out[to_display_string(v[c])] += t.classes[c].size;
  return out;
}

}  // namespace

TEST_CASE("group syntax") {
  CHECK(GroupId::parse("cyclic:5") == GroupId::cyclic(5));
  CHECK(GroupId::parse("bd:3").order() == 12);
  CHECK(GroupId::parse("bi").order() == 120);
  CHECK_THROWS(GroupId::parse("bd:1"));
  CHECK_THROWS(GroupId::parse("cyclic:0"));
  CHECK_THROWS(GroupId::parse("cyclic:x"));
  CHECK_THROWS(GroupId::parse("e8"));
  for (const auto& g : shipped_groups()) CHECK(GroupId::parse(g.to_string()) == g);
}

TEST_CASE("every shipped table passes all checks exactly") {
  for (const auto& g : shipped_groups()) {
    CAPTURE(g.to_string());
    auto t = character_table(g);
    auto rep = verify_table(t);
    INFO(rep.to_text());
    CHECK(rep.passed());
  }
}

TEST_CASE("class and row counts") {
  for (int n = 1; n <= 12; ++n) CHECK(character_table(GroupId::cyclic(n)).size() == static_cast<std::size_t>(n));
  for (int n = 2; n <= 8; ++n)
    CHECK(character_table(GroupId::binary_dihedral(n)).size() == static_cast<std::size_t>(n + 3));
  CHECK(character_table(GroupId::bt()).size() == 7);
  CHECK(character_table(GroupId::bo()).size() == 8);
  CHECK(character_table(GroupId::bi()).size() == 9);
  auto c1 = character_table(GroupId::cyclic(1));
  CHECK(c1.size() == 1);
  CHECK(c1.chars[0][0] == Z(1));
}

TEST_CASE("printed table values") {
  auto bo = character_table(GroupId::bo());
  CHECK(bo.chars[bo.row_index("2")][bo.class_index("b")] == Z::zeta(8) + Z::zeta(8, -1));
  auto bi = character_table(GroupId::bi());
  std::vector<int> sizes;
  for (const auto& c : bi.classes) sizes.push_back(c.size);
  CHECK(sizes == std::vector<int>{1, 1, 20, 20, 12, 12, 12, 12, 30});
  auto bt = character_table(GroupId::bt());
  CHECK(bt.chars[bt.row_index("1'")][bt.class_index("a")] == Z::zeta(3));
  CHECK(natural_character(GroupId::bt())[bt.class_index("-id")] == Z(-2));
  Rational sq = 0;
  for (std::size_t r = 0; r < bt.size(); ++r) sq += bt.degree(r) * bt.degree(r);
  CHECK(sq == 24);
  auto bd3 = character_table(GroupId::binary_dihedral(3));
  CHECK(natural_character(bd3)[bd3.class_index("sigma^1")] == Z::zeta(6) + Z::zeta(6, -1));
  // mu+ mu- = -1 and mu+ + mu- = 1
  auto mp = bi.chars[bi.row_index("2")][bi.class_index("b")];
  auto mm = bi.chars[bi.row_index("2'")][bi.class_index("b")];
  CHECK(mp * mm == Z(-1));
  CHECK(mp + mm == Z(1));
}

TEST_CASE("the 5-dimensional BI character is 1 on the class of ab") {
  auto bi = character_table(GroupId::bi());
  auto r5 = bi.row_index("5");
  auto ab = bi.class_index("ab");
  CHECK(bi.chars[r5][ab] == Z(1));
  // With 0 in that position the row is not orthogonal to the trivial character.
  auto printed = bi;
  printed.chars[r5][ab] = Z(0);
  CHECK(inner_product(printed.chars[0], printed.chars[r5], printed) == Z(Rational(-1, 4)));
  CHECK_FALSE(verify_table(printed).passed());
}

TEST_CASE("cyclic natural character is rho_1 + rho_{n-1}") {
  auto t = character_table(GroupId::cyclic(4));
  auto v = natural_character(t);
  // rows summed by hand: rho_1 = (1, i, -1, -i), rho_3 = (1, -i, -1, i)
  CHECK(v == Character{Z(2), Z(0), Z(-2), Z(0)});
  CHECK(natural_character(GroupId::cyclic(1)) == Character{Z(2)});
  CHECK(natural_character(GroupId::cyclic(2)) == Character{Z(2), Z(-2)});
}

TEST_CASE("negative control: perturbed table is rejected") {
  auto t = character_table(GroupId::bt());
  t.chars[5][2] = t.chars[5][2] + Z(1);
  auto rep = verify_table(t);
  CHECK_FALSE(rep.passed());
  bool row_failed = false;
  for (const auto& c : rep.checks)
    if (c.name == "row orthogonality") row_failed = !c.passed;
  CHECK(row_failed);
}

TEST_CASE("natural character matches traces of explicit matrix groups") {
  // Cyclic: diag(xi, xi^-1).
  for (int n = 1; n <= 9; ++n) {
    auto elems = closure({{Z::zeta(n), 0, 0, Z::zeta(n, -1)}});
    CHECK(elems.size() == static_cast<std::size_t>(n));
    CHECK(trace_multiset(elems) == natural_multiset(character_table(GroupId::cyclic(n))));
  }
  // Binary dihedral: sigma = diag(xi, xi^-1), tau = [[0,-1],[1,0]], xi of order 2n.
  for (int n = 2; n <= 8; ++n) {
    M2 sigma{Z::zeta(2 * n), 0, 0, Z::zeta(2 * n, -1)};
    M2 tau{0, -1, 1, 0};
    auto elems = closure({sigma, tau});
    CHECK(elems.size() == static_cast<std::size_t>(4 * n));
    CHECK(trace_multiset(elems) == natural_multiset(character_table(GroupId::binary_dihedral(n))));
  }
  // Binary tetrahedral inside the unit quaternions over Q(i): a = -(1 + i + j + k)/2.
  const Z i = Z::zeta(4), h(Rational(1, 2));
  M2 qi{i, 0, 0, -i}, qj{0, 1, -1, 0};
  M2 a{h * (Z(-1) - i), h * Z(-1) + h * Z(-1) * i, h * Z(1) - h * i, h * (Z(-1) + i)};
  auto elems = closure({a, qi, qj});
  CHECK(elems.size() == 24);
  CHECK(trace_multiset(elems) == natural_multiset(character_table(GroupId::bt())));
}

TEST_CASE("inner products and formatting") {
  auto t = character_table(GroupId::bt());
  auto v = natural_character(t);
  CHECK(inner_product(v * t.chars[4], t.chars[3], t) == Z(1));
  auto text = format_table(t);
  CHECK(text.find("ab") != std::string::npos);
  CHECK(text.find("z(3)") != std::string::npos);
}
