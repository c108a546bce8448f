#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "mckay/galois.hpp"
#include "mckay/modular.hpp"

using namespace mckay;

namespace {

using Z = CyclotomicNumber;
using Perm = std::vector<std::size_t>;

Perm compose(const Perm& a, const Perm& b) {  // a after b
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm identity(std::size_t k) {
  Perm p(k);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::vector<std::vector<std::string>> labelled(const OrbitPartition& p, const CharacterTable& t) {
  std::vector<std::vector<std::string>> out;
  for (const auto& o : p.orbits) {
    out.emplace_back();
    for (auto r : o) out.back().push_back(t.row_labels[r]);
  }
  return out;
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
  forms.emplace_back(GroupId::bt(), FieldSpec::cyclotomic(4), FormKind::Constant);
  forms.emplace_back(GroupId::bo(), FieldSpec(8, {7}), FormKind::Constant);
  forms.emplace_back(GroupId::bi(), FieldSpec(5, {4}), FormKind::Constant);
  return forms;
}

}  // namespace

TEST_CASE("field syntax") {
  auto q = FieldSpec::parse("m=1,H=");
  CHECK(q.degree() == 1);
  CHECK(q.same_field(FieldSpec::rationals()));
  auto qi = FieldSpec::parse("m=4,H=");
  CHECK(qi.degree() == 2);
  CHECK_FALSE(qi.is_real());
  auto r2 = FieldSpec::parse("m=8,H=7");
  CHECK(r2.degree() == 2);
  CHECK(r2.is_real());
  CHECK(r2.contains(Z::zeta(8) + Z::zeta(8, -1)));
  CHECK_FALSE(r2.contains(Z::zeta(4)));
  CHECK(FieldSpec::parse("m=20,H=9").degree() == 4);
  CHECK(FieldSpec::parse("m=12,H=5,7").to_string() == "m=12,H=5,7");
  CHECK_THROWS(FieldSpec::parse("m=8,H=2"));
  CHECK_THROWS(FieldSpec::parse("m=0,H="));
  CHECK_THROWS(FieldSpec::parse("m=8"));
  CHECK_THROWS(FieldSpec::parse("m=8,H=3,"));
  CHECK_THROWS(FieldSpec::parse("m=x,H="));
  // Q(sqrt 2) presented two ways; Q presented at conductor 4 through the real subfield.
  CHECK(FieldSpec(8, {7}).same_field(FieldSpec(16, {7, 15})));
  CHECK(FieldSpec::real_cyclotomic(4).same_field(FieldSpec::rationals()));
  CHECK(FieldSpec::real_cyclotomic(6).same_field(FieldSpec::rationals()));
  CHECK_FALSE(FieldSpec(8, {7}).same_field(FieldSpec(8, {3})));
}

TEST_CASE("field bases and embeddings") {
  for (auto f : {FieldSpec::rationals(), FieldSpec(8, {7}), FieldSpec(20, {9}), FieldSpec::cyclotomic(12), FieldSpec(5, {4})}) {
    auto b = f.basis();
    CHECK(static_cast<int>(b.size()) == f.degree());
    for (const auto& x : b) CHECK(f.contains(x));
    CHECK(static_cast<int>(f.embeddings().size()) == f.degree());
  }
  // sqrt 5 in Q(zeta_5 + zeta_5^-1): positive under one embedding, negative under the other.
  FieldSpec k5(5, {4});
  Z r5 = Z(2) * (Z::zeta(5) + Z::zeta(5, 4)) + 1;
  std::vector<int> signs;
  for (int k : k5.embeddings()) signs.push_back(k5.sign(r5, k));
  CHECK(signs == std::vector<int>{1, -1});
  // An element of Q(sqrt 2) written at a larger conductor.
  FieldSpec k2(8, {7});
  Z r2 = (Z::zeta(8) + Z::zeta(8, -1)).lift(24);
  CHECK(k2.sign(r2, 3) == -1);
  CHECK(k2.embed(r2, 1, 20).value.lower > Rational(14142, 10000));
}

TEST_CASE("constant cyclic action is rho_j -> rho_{n-j}") {
  auto form = GaloisForm(GroupId::cyclic(5), FieldSpec::real_cyclotomic(5), FormKind::Constant);
  auto t = character_table(GroupId::cyclic(5));
  auto act = character_action(form, t);
  REQUIRE(act.generators.size() == 1);
  CHECK(act.generators[0] == 4);
  CHECK(act.permutations[0] == Perm{0, 4, 3, 2, 1});
  auto p = orbits(act, t);
  CHECK(p.orbits == std::vector<std::vector<std::size_t>>{{0}, {1, 4}, {2, 3}});
  CHECK(p.multiplicity_free);
}

TEST_CASE("mu cyclic action is trivial") {
  for (int n = 2; n <= 12; ++n) {
    auto form = GaloisForm(GroupId::cyclic(n), FieldSpec::real_cyclotomic(n), FormKind::MuCyclic);
    auto t = character_table(GroupId::cyclic(n));
    auto p = orbits(character_action(form, t), t);
    CHECK(p.orbits.size() == static_cast<std::size_t>(n));
  }
  CHECK_THROWS(GaloisForm(GroupId::cyclic(5), FieldSpec::rationals(), FormKind::MuCyclic));
  CHECK_THROWS(GaloisForm(GroupId::bt(), FieldSpec::rationals(), FormKind::MuCyclic));
}

TEST_CASE("twisted binary dihedral action") {
  for (int n = 2; n <= 8; ++n) {
    CAPTURE(n);
    auto form = GaloisForm(GroupId::binary_dihedral(n), FieldSpec::real_cyclotomic(4 * n), FormKind::TwistedBD);
    auto t = character_table(GroupId::binary_dihedral(n));
    auto act = character_action(form, t);
    auto p = orbits(act, t);
    CHECK(p.multiplicity_free);
    auto lab = labelled(p, t);
    if (n % 2 == 0) {
      CHECK(lab[2] == std::vector<std::string>{"1''", "1'''"});
      CHECK(p.orbits.size() == static_cast<std::size_t>(n + 2));
    } else {
      CHECK(p.orbits.size() == static_cast<std::size_t>(n + 3));
    }
  }
  auto t4 = character_table(GroupId::binary_dihedral(4));
  auto f4 = GaloisForm(GroupId::binary_dihedral(4), FieldSpec::real_cyclotomic(16), FormKind::TwistedBD);
  CHECK(labelled(orbits(character_action(f4, t4), t4), t4) ==
        std::vector<std::vector<std::string>>{{"1"}, {"1'"}, {"1''", "1'''"}, {"2^1"}, {"2^2"}, {"2^3"}});
  CHECK_THROWS(GaloisForm(GroupId::binary_dihedral(4), FieldSpec::real_cyclotomic(8), FormKind::TwistedBD));
  // Same field presented at another conductor is accepted.
  CHECK_NOTHROW(GaloisForm(GroupId::binary_dihedral(2), FieldSpec(8, {7}), FormKind::TwistedBD));
}

TEST_CASE("constant BT over Q") {
  auto t = character_table(GroupId::bt());
  auto form = GaloisForm(GroupId::bt(), FieldSpec::rationals(), FormKind::Constant);
  auto p = orbits(character_action(form, t), t);
  CHECK(labelled(p, t) ==
        std::vector<std::vector<std::string>>{{"1"}, {"1'", "1''"}, {"3"}, {"2"}, {"2'", "2''"}});
  auto chi = rational_character(p.orbits[1], t, form);
  CHECK(chi == Character{Z(2), Z(2), Z(-1), Z(-1), Z(-1), Z(-1), Z(2)});
  // over Q(zeta_3) nothing moves
  auto f3 = GaloisForm(GroupId::bt(), FieldSpec::cyclotomic(3), FormKind::Constant);
  CHECK(orbits(character_action(f3, t), t).orbits.size() == 7);
}

TEST_CASE("trace condition guards constant forms") {
  CHECK_THROWS(GaloisForm(GroupId::bo(), FieldSpec::rationals(), FormKind::Constant));
  CHECK_THROWS(GaloisForm(GroupId::bi(), FieldSpec::cyclotomic(4), FormKind::Constant));
  CHECK_THROWS(GaloisForm(GroupId::cyclic(5), FieldSpec::rationals(), FormKind::Constant));
  CHECK_NOTHROW(GaloisForm(GroupId::cyclic(6), FieldSpec::rationals(), FormKind::Constant));
  // a misspecified orbit is caught by the fixed field check
  auto t = character_table(GroupId::bt());
  auto form = GaloisForm(GroupId::bt(), FieldSpec::rationals(), FormKind::Constant);
  CHECK_THROWS_AS(rational_character({1}, t, form), std::domain_error);
  CHECK(rational_character({3}, t, form) == t.chars[3]);
}

TEST_CASE("action properties on every shipped form") {
  for (const auto& form : shipped_forms()) {
    CAPTURE(form.group().to_string());
    CAPTURE(form.field().to_string());
    CAPTURE(to_string(form.kind()));
    auto t = character_table(form.group());
    const std::size_t k = t.size();
    for (int g : form.gamma()) {
      auto p = row_permutation(form, t, g);
      auto sorted = p;
      std::sort(sorted.begin(), sorted.end());
      CHECK(sorted == identity(k));
      CHECK(p[t.trivial_index] == t.trivial_index);
      for (auto r : t.natural_index) CHECK((p[r] == r || form.group().family == Family::Cyclic));
      int inv = inverse_mod(g, form.conductor());
      CHECK(compose(row_permutation(form, t, inv), p) == identity(k));
      for (int h : form.gamma()) {
        int gh = static_cast<int>(static_cast<std::int64_t>(g) * h % form.conductor());
        CHECK(compose(p, row_permutation(form, t, h)) == row_permutation(form, t, gh));
      }
    }
    auto part = orbits(character_action(form, t), t);
    CHECK(part.multiplicity_free);
    // The natural character is a single K-irreducible (one orbit, or the pair rho_1, rho_{n-1}).
    std::set<std::size_t> nat_orbits;
    for (auto r : t.natural_index) nat_orbits.insert(part.orbit_of(r));
    if (form.kind() != FormKind::MuCyclic) CHECK(nat_orbits.size() == 1);
    for (const auto& o : part.orbits) CHECK_NOTHROW(rational_character(o, t, form));
  }
}
