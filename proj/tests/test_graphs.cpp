#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "mckay/graphs.hpp"

using namespace mckay;

namespace {

std::vector<GroupId> shipped_groups() {
  std::vector<GroupId> gs;
  for (int n = 1; n <= 12; ++n) gs.push_back(GroupId::cyclic(n));
  for (int n = 2; n <= 8; ++n) gs.push_back(GroupId::binary_dihedral(n));
  gs.push_back(GroupId::bt());
  gs.push_back(GroupId::bo());
  gs.push_back(GroupId::bi());
  return gs;
}

std::vector<GaloisForm> shipped_forms() {
  std::vector<GaloisForm> forms;
  for (int n = 2; n <= 12; ++n) {
    forms.emplace_back(GroupId::cyclic(n), FieldSpec::real_cyclotomic(n), FormKind::MuCyclic);
    forms.emplace_back(GroupId::cyclic(n), FieldSpec::real_cyclotomic(n), FormKind::Constant);
  }
  for (int n = 2; n <= 8; ++n) {
    forms.emplace_back(GroupId::binary_dihedral(n), FieldSpec::real_cyclotomic(4 * n), FormKind::TwistedBD);
    forms.emplace_back(GroupId::binary_dihedral(n), FieldSpec::real_cyclotomic(2 * n), FormKind::Constant);
  }
  forms.emplace_back(GroupId::bt(), FieldSpec::rationals(), FormKind::Constant);
  forms.emplace_back(GroupId::bt(), FieldSpec::cyclotomic(3), FormKind::Constant);
  forms.emplace_back(GroupId::bo(), FieldSpec(8, {7}), FormKind::Constant);
  forms.emplace_back(GroupId::bi(), FieldSpec(5, {4}), FormKind::Constant);
  return forms;
}

std::string split_name(const GroupId& g) {
  switch (g.family) {
    case Family::Cyclic: return "(A_" + std::to_string(g.n - 1) + ")";
    case Family::BinaryDihedral: return "(D_" + std::to_string(g.n + 2) + ")";
    case Family::BinaryTetrahedral: return "(E_6)";
    case Family::BinaryOctahedral: return "(E_7)";
    case Family::BinaryIcosahedral: return "(E_8)";
  }
  return {};
}

}  // namespace

TEST_CASE("hom dimensions") {
  auto bt = character_table(GroupId::bt());
  auto v = natural_character(bt);
  CHECK(hom_dimension(bt.chars[0], bt.chars[bt.row_index("2")], v, bt) == 1);
  CHECK(hom_dimension(bt.chars[0], bt.chars[bt.row_index("3")], v, bt) == 0);
  auto c3 = character_table(GroupId::cyclic(3));
  CHECK(hom_dimension(c3.chars[0], c3.chars[1], natural_character(c3), c3) == 1);
  // V must be the natural character.
  CHECK_THROWS_AS(hom_dimension(bt.chars[1], bt.chars[1], bt.chars[0], bt), std::invalid_argument);
  CHECK_THROWS_AS(hom_dimension(bt.chars[1], bt.chars[1], bt.chars[3], bt), std::invalid_argument);
  // symmetry from self-duality of V
  for (std::size_t i = 0; i < bt.size(); ++i)
    for (std::size_t j = 0; j < bt.size(); ++j)
      CHECK(hom_dimension(bt.chars[i], bt.chars[j], v, bt) == hom_dimension(bt.chars[j], bt.chars[i], v, bt));
}

TEST_CASE("split extended graphs are the affine diagrams") {
  for (const auto& gid : shipped_groups()) {
    CAPTURE(gid.to_string());
    auto t = character_table(gid);
    auto g = build_graph(t, true);
    for (const auto& v : g.vertices) CHECK(v.mult == 1);
    auto lab = classify(g);
    CHECK(lab.name == split_name(gid));
    // (2 Id - A) d = 0
    auto defect = null_vector_defect(g);
    CHECK(std::all_of(defect.begin(), defect.end(), [](int x) { return x == 0; }));
    // non-extended graph carries the same name
    CHECK(classify(build_graph(t, false)).name == lab.name);
  }
  CHECK(classify(build_graph(character_table(GroupId::bo()), true)).dynkin_name() == "E7");
}

TEST_CASE("E8 degrees along the chain") {
  auto t = character_table(GroupId::bi());
  auto g = build_graph(t, true);
  // walk from the trivial vertex along the long arm
  std::vector<int> walk{g.vertices[0].degree};
  std::size_t prev = g.size(), cur = 0;
  for (;;) {
    std::size_t next = g.size();
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (j == cur || j == prev || g.adjacency[cur][j] == 0) continue;
      // at the branch point prefer the longer arm (degree 4 over 3)
      if (next == g.size() || g.vertices[j].degree > g.vertices[next].degree) next = j;
    }
    if (next == g.size()) break;
    prev = cur;
    cur = next;
    walk.push_back(g.vertices[cur].degree);
  }
  CHECK(walk == std::vector<int>{1, 2, 3, 4, 5, 6, 4, 2});
}

TEST_CASE("folded cyclic graphs") {
  for (int n = 3; n <= 8; ++n) {
    CAPTURE(n);
    auto mu = build_graph(GaloisForm(GroupId::cyclic(n), FieldSpec::real_cyclotomic(n), FormKind::MuCyclic), true);
    CHECK(classify(mu).name == "(A_" + std::to_string(n - 1) + ")");
    auto c = build_graph(GaloisForm(GroupId::cyclic(n), FieldSpec::real_cyclotomic(n), FormKind::Constant), true);
    auto lab = classify(c);
    CHECK(lab.name == "(A_" + std::to_string(n - 1) + ")'");
    CHECK(lab.dynkin_name() == "C" + std::to_string(n / 2));
  }
  // n = 5: two doubled vertices, one loop on the far one
  auto g = build_graph(GaloisForm(GroupId::cyclic(5), FieldSpec::real_cyclotomic(5), FormKind::Constant), true);
  REQUIRE(g.size() == 3);
  CHECK(g.vertices[1].label == "rho_1+rho_4");
  CHECK(g.vertices[2].mult == 2);
  CHECK(g.loops(1) == 0);
  CHECK(g.loops(2) == 1);
  CHECK(g.adjacency[0][1] == 2);
  CHECK(g.adjacency[1][2] == 2);
  CHECK(g.vertices[2].degree == 2);
}

TEST_CASE("twisted binary dihedral folds") {
  for (int n = 2; n <= 8; ++n) {
    CAPTURE(n);
    auto form = GaloisForm(GroupId::binary_dihedral(n), FieldSpec::real_cyclotomic(4 * n), FormKind::TwistedBD);
    auto lab = classify(build_graph(form, true));
    const std::string d = "(D_" + std::to_string(n + 2) + ")";
    if (n % 2 == 0) {
      CHECK(lab.name == d + "'");
      CHECK(lab.dynkin_name() == "B" + std::to_string(n + 1));
    } else {
      CHECK(lab.name == d);
    }
  }
}

TEST_CASE("binary tetrahedral over Q and over Q(zeta_3)") {
  auto q = classify(build_graph(GaloisForm(GroupId::bt(), FieldSpec::rationals(), FormKind::Constant), true));
  CHECK(q.name == "(E_6)'");
  CHECK(q.dynkin_name() == "F4");
  auto q3 = classify(build_graph(GaloisForm(GroupId::bt(), FieldSpec::cyclotomic(3), FormKind::Constant), true));
  CHECK(q3.name == "(E_6)");
  CHECK(q3.dynkin_name() == "E6");
}

TEST_CASE("the quaternion group folded by S_3 gives (D_4)''") {
  auto t = character_table(GroupId::binary_dihedral(2));
  const auto a = t.row_index("1'"), b = t.row_index("1''"), c = t.row_index("1'''");
  std::vector<std::size_t> rot(t.size());
  std::iota(rot.begin(), rot.end(), 0);
  rot[a] = b, rot[b] = c, rot[c] = a;
  CharacterAction act{{0}, {rot}};
  auto g = build_graph(t, act, true);
  auto lab = classify(g);
  CHECK(lab.name == "(D_4)''");
  CHECK(lab.dynkin_name() == "G2");
  CHECK(check_fold_consistency(t, orbits(act, t)).passed());
  CHECK(isomorphic(g, catalog_graph(Shape::DDoublePrime, 4, true)));
}

TEST_CASE("fold consistency and symmetry on every shipped form") {
  for (const auto& form : shipped_forms()) {
    CAPTURE(form.group().to_string());
    CAPTURE(form.field().to_string());
    auto t = character_table(form.group());
    auto part = orbits(character_action(form, t), t);
    auto rep = check_fold_consistency(t, part);
    INFO(rep.to_text());
    CHECK(rep.passed());
    auto g = build_graph(form, true);
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j) CHECK(g.adjacency[i][j] == g.adjacency[j][i]);
    CHECK_NOTHROW(classify(g));
    CHECK_NOTHROW(classify(build_graph(form, false)));
    auto form_ids = check_form_identities(bilinear_form(t, part), g);
    INFO(form_ids.to_text());
    CHECK(form_ids.passed());
  }
}

TEST_CASE("bilinear form") {
  auto bt = character_table(GroupId::bt());
  auto f = bilinear_form(bt, split_partition(bt));
  const auto two = bt.row_index("2");
  CHECK(f.matrix[two][two] == -2);
  CHECK(is_finite_type(f, bt.trivial_index));
  CHECK_FALSE(is_finite_type(f, bt.size()));  // the affine form is only semidefinite
  auto part = orbits(character_action(GaloisForm(GroupId::bt(), FieldSpec::rationals(), FormKind::Constant), bt), bt);
  auto fq = bilinear_form(bt, part);
  const auto w = part.orbit_of(bt.row_index("1'"));
  CHECK(fq.matrix[w][w] == -4);
  auto bo = character_table(GroupId::bo());
  auto fo = bilinear_form(bo, split_partition(bo));
  CHECK(fo.matrix[bo.trivial_index][bo.row_index("2")] == 1);
  for (const auto& gid : shipped_groups()) {
    if (gid.family == Family::Cyclic && gid.n <= 2) continue;  // (A_0), (A_1) have doubled edges at o
    auto t = character_table(gid);
    CHECK(is_finite_type(bilinear_form(t, split_partition(t)), t.trivial_index));
  }
}

TEST_CASE("decomposition multiplicities") {
  auto t = character_table(GroupId::bi());
  auto a = multiplicity_matrix(t, split_partition(t));
  auto g = build_graph(t, true);
  CHECK(a == g.adjacency);  // over C both definitions agree (no loops for E8)
  auto bt = character_table(GroupId::bt());
  auto part = orbits(character_action(GaloisForm(GroupId::bt(), FieldSpec::rationals(), FormKind::Constant), bt), bt);
  auto aq = multiplicity_matrix(bt, part);
  auto gq = build_graph(bt, character_action(GaloisForm(GroupId::bt(), FieldSpec::rationals(), FormKind::Constant), bt), true);
  bool strict = false;
  for (std::size_t i = 0; i < aq.size(); ++i)
    for (std::size_t j = 0; j < aq.size(); ++j) {
      if (i == j) continue;
      CHECK(aq[i][j] <= gq.adjacency[i][j]);
      strict = strict || aq[i][j] < gq.adjacency[i][j];
    }
  CHECK(strict);
}

TEST_CASE("classification is stable under vertex permutations") {
  std::mt19937 rng(7);
  std::vector<McKayGraph> graphs;
  for (const auto& form : shipped_forms()) graphs.push_back(build_graph(form, true));
  for (const auto& g : graphs) {
    auto base = classify(g).name;
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<std::size_t> perm(g.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      auto p = permute(g, perm);
      CHECK(classify(p).name == base);
      CHECK(isomorphic(p, g));
    }
  }
}

TEST_CASE("catalog") {
  CHECK(catalog_graph(Shape::D, 6, true).size() == 7);
  CHECK(catalog_graph(Shape::DPrime, 6, true).size() == 6);
  CHECK(catalog_graph(Shape::E8, 8, true).size() == 9);
  CHECK(catalog_graph(Shape::E7, 7, true).size() == 8);
  CHECK(catalog_graph(Shape::E6Prime, 6, true).size() == 5);
  CHECK(catalog_graph(Shape::APrime, 5, false).size() == 3);
  CHECK_THROWS_AS(catalog_graph(Shape::D, 3, true), std::invalid_argument);
  CHECK(make_label(Shape::APrime, 2).dynkin_name() == "C1");
  CHECK(make_label(Shape::APrime, 7).dynkin_name() == "C4");
  CHECK(make_label(Shape::APrime, 8).dynkin_name() == "C4");
  CHECK(make_label(Shape::DPrime, 5).dynkin_name() == "B4");
  // every catalog entry classifies as itself
  std::vector<std::pair<Shape, int>> all{{Shape::A, 0},      {Shape::A, 1},      {Shape::A, 5},
                                         {Shape::APrime, 2}, {Shape::APrime, 3}, {Shape::APrime, 6},
                                         {Shape::D, 4},      {Shape::D, 9},      {Shape::DPrime, 4},
                                         {Shape::DPrime, 7}, {Shape::DDoublePrime, 4}, {Shape::E6, 6},
                                         {Shape::E6Prime, 6}, {Shape::E7, 7},    {Shape::E8, 8}};
  for (auto [s, n] : all) {
    CHECK(classify(catalog_graph(s, n, true)).name == make_label(s, n).name);
    CHECK(classify(catalog_graph(s, n, false)).name == make_label(s, n).name);
  }
}

TEST_CASE("unrecognized graphs are reported") {
  auto g = catalog_graph(Shape::E8, 8, true);
  g.adjacency[1][1] = 1;
  CHECK_THROWS_AS(classify(g), UnrecognizedGraph);
  auto h = catalog_graph(Shape::D, 5, true);
  h.vertices[2].mult = 2;
  try {
    classify(h);
    CHECK(false);
  } catch (const UnrecognizedGraph& e) {
    CHECK(std::string(e.what()).find("6 vertices") != std::string::npos);
  }
}

TEST_CASE("emission") {
  auto g = build_graph(character_table(GroupId::cyclic(2)), true);
  g.label = classify(g).name;
  auto dot = to_dot(g);
  CHECK(dot.find("v0 -- v1 [count=2]") != std::string::npos);
  CHECK(dot.find("multiplicity=1") != std::string::npos);
  CHECK(dot.find("loops=0") != std::string::npos);
  for (const auto& form : shipped_forms()) {
    for (bool ext : {true, false}) {
      auto h = build_graph(form, ext);
      h.label = classify(h).name;
      CHECK(graph_from_json(to_json(h)) == h);
      auto again = build_graph(form, ext);
      again.label = classify(again).name;
      CHECK(to_dot(again) == to_dot(h));
    }
  }
  CHECK_THROWS_AS(graph_from_json("{\"vertices\": 3}"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json("not json"), std::invalid_argument);
}
