#include "mckay/acceptance.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "mckay/cli.hpp"
#include "mckay/graphs.hpp"
#include "mckay/realizability.hpp"
#include "mckay/toric.hpp"

namespace mckay {

namespace {

// Collects failures and a count of passed checks for one criterion.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++total_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }

  template <class F>
  void guard(const std::string& what, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      check(false, what + " threw: " + e.what());
    }
  }

  CriterionResult result(int id, std::string title) const {
    CriterionResult r{id, std::move(title), failed_ == 0, {}};
    if (failed_ == 0) {
      r.detail = std::to_string(total_) + " checks";
    } else {
      r.detail = std::to_string(failed_) + "/" + std::to_string(total_) + " failed";
      for (const auto& f : failures_) r.detail += "; " + f;
    }
    return r;
  }

 private:
  int total_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

std::vector<GroupId> table_groups() {
  std::vector<GroupId> out;
  for (int n = 1; n <= 12; ++n) out.push_back(GroupId::cyclic(n));
  for (int n = 2; n <= 8; ++n) out.push_back(GroupId::binary_dihedral(n));
  out.push_back(GroupId::bt());
  out.push_back(GroupId::bo());
  out.push_back(GroupId::bi());
  return out;
}

std::string a_name(int k) { return "(A_" + std::to_string(k) + ")"; }
std::string d_name(int k) { return "(D_" + std::to_string(k) + ")"; }

CriterionResult tables() {
  Tally t;
  for (const auto& g : table_groups())
    t.guard(g.to_string(), [&] {
      auto table = character_table(g);
      auto rep = verify_table(table);
      t.check(rep.passed(), g.to_string() + ": " + rep.to_text());
      int sum = 0;
      for (std::size_t r = 0; r < table.size(); ++r) sum += table.degree(r) * table.degree(r);
      t.check(sum == g.order(), g.to_string() + " sum of squared degrees " + std::to_string(sum));
    });
  return t.result(1, "character tables");
}

CriterionResult split_graphs() {
  Tally t;
  for (const auto& g : table_groups())
    t.guard(g.to_string(), [&] {
      auto graph = build_graph(character_table(g), true);
      std::string expected;
      switch (g.family) {
        case Family::Cyclic: expected = a_name(g.n - 1); break;
        case Family::BinaryDihedral: expected = d_name(g.n + 2); break;
        case Family::BinaryTetrahedral: expected = "(E_6)"; break;
        case Family::BinaryOctahedral: expected = "(E_7)"; break;
        case Family::BinaryIcosahedral: expected = "(E_8)"; break;
      }
      auto label = classify(graph);
      t.check(label.name == expected, g.to_string() + " classified as " + label.name);
      auto defect = null_vector_defect(graph);
      t.check(std::all_of(defect.begin(), defect.end(), [](int x) { return x == 0; }),
              g.to_string() + " (2I - A) d != 0");
    });
  return t.result(2, "split graphs");
}

struct FoldScenario {
  GaloisForm form;
  std::string name;
  std::string dynkin;
};

std::vector<FoldScenario> fold_scenarios() {
  std::vector<FoldScenario> out;
  for (int n = 3; n <= 8; ++n) {
    const FieldSpec k = FieldSpec::real_cyclotomic(n);
    out.push_back({GaloisForm(GroupId::cyclic(n), k, FormKind::MuCyclic), a_name(n - 1), "A" + std::to_string(n - 1)});
    out.push_back({GaloisForm(GroupId::cyclic(n), k, FormKind::Constant), a_name(n - 1) + "'", "C" + std::to_string(n / 2)});
  }
  for (int n = 2; n <= 8; ++n) {
    GaloisForm f(GroupId::binary_dihedral(n), FieldSpec::real_cyclotomic(4 * n), FormKind::TwistedBD);
    if (n % 2 == 0) out.push_back({f, d_name(n + 2) + "'", "B" + std::to_string(n + 1)});
    else out.push_back({f, d_name(n + 2), "D" + std::to_string(n + 2)});
  }
  out.push_back({GaloisForm(GroupId::bt(), FieldSpec::rationals(), FormKind::Constant), "(E_6)'", "F4"});
  out.push_back({GaloisForm(GroupId::bt(), FieldSpec::cyclotomic(3), FormKind::Constant), "(E_6)", "E6"});
  return out;
}

// S_3 permuting the three nontrivial one-dimensional characters of BD_2.
CharacterAction quaternion_triality(const CharacterTable& t) {
  const auto a = t.row_index("1'"), b = t.row_index("1''"), c = t.row_index("1'''");
  std::vector<std::size_t> rot(t.size());
  std::iota(rot.begin(), rot.end(), 0);
  rot[a] = b, rot[b] = c, rot[c] = a;
  return {{0}, {rot}};
}

CriterionResult folds() {
  Tally t;
  for (const auto& s : fold_scenarios()) {
    const std::string what = s.form.group().to_string() + " " + to_string(s.form.kind()) + " over " +
                             s.form.field().to_string();
    t.guard(what, [&] {
      auto label = classify(build_graph(s.form, true));
      t.check(label.name == s.name, what + " gave " + label.name + ", expected " + s.name);
      t.check(label.dynkin_name() == s.dynkin, what + " relabelled " + label.dynkin_name() + ", expected " + s.dynkin);
    });
  }
  t.guard("BD_2 triality", [&] {
    auto table = character_table(GroupId::binary_dihedral(2));
    auto label = classify(build_graph(table, quaternion_triality(table), true));
    t.check(label.name == "(D_4)''" && label.dynkin_name() == "G2", "BD_2 triality gave " + label.to_string());
  });
  t.guard("BT orbits", [&] {
    auto table = character_table(GroupId::bt());
    auto part = orbits(character_action(GaloisForm(GroupId::bt(), FieldSpec::rationals(), FormKind::Constant), table),
                       table);
    auto orbit_of = [&](const char* label) { return part.orbits[part.orbit_of(table.row_index(label))]; };
    t.check(orbit_of("1'") == orbit_of("1''") && orbit_of("1'").size() == 2, "BT over Q: 1' and 1'' not one orbit");
    t.check(orbit_of("2'") == orbit_of("2''") && orbit_of("2'").size() == 2, "BT over Q: 2' and 2'' not one orbit");
  });
  return t.result(3, "folded graphs and Dynkin relabelling");
}

CriterionResult fold_consistency() {
  Tally t;
  for (const auto& s : fold_scenarios()) {
    const std::string what = s.form.group().to_string() + " " + to_string(s.form.kind());
    t.guard(what, [&] {
      auto table = character_table(s.form.group());
      auto rep = check_fold_consistency(table, orbits(character_action(s.form, table), table));
      t.check(rep.passed(), what + ": " + rep.to_text());
    });
  }
  t.guard("BD_2 triality", [&] {
    auto table = character_table(GroupId::binary_dihedral(2));
    auto rep = check_fold_consistency(table, orbits(quaternion_triality(table), table));
    t.check(rep.passed(), "BD_2 triality: " + rep.to_text());
  });
  return t.result(4, "fold consistency");
}

CriterionResult hilbert_and_realizability() {
  Tally t;
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 50);
  auto random_rational = [&] {
    int n = 0;
    while (n == 0) n = num(rng);
    Rational q(n, den(rng));
    q.canonicalize();
    return q;
  };
  for (int i = 0; i < 100; ++i) {
    Rational a = random_rational(), b = random_rational();
    int prod = 1;
    for (long p : bad_places(a, b)) prod *= hilbert_symbol_local(a, b, p);
    t.check(prod == 1, "product formula fails for (" + a.get_str() + ", " + b.get_str() + ")");
  }
  t.check(hilbert_symbol_Q(-1, -1).value == -1, "(-1,-1)_Q != -1");

  auto verified = [&](const GroupId& g, const FieldSpec& k) {
    const std::string what = g.to_string() + " over " + k.to_string();
    t.guard(what, [&] {
      auto v = realizable(g, k);
      t.check(v.status == Status::Realizable && v.witness.has_value(), what + ": " + to_string(v.status));
      if (v.witness) {
        auto rep = verify_witness(g, *v.witness, k);
        t.check(rep.passed(), what + ": " + rep.to_text());
      }
    });
  };
  t.guard("BD_2 over Q", [&] {
    t.check(realizable(GroupId::binary_dihedral(2), FieldSpec::rationals()).status == Status::NotRealizable,
            "BD_2 realizable over Q");
  });
  verified(GroupId::binary_dihedral(2), FieldSpec::cyclotomic(4));
  t.guard("BD_2 relations", [&] {
    auto v = realizable(GroupId::binary_dihedral(2), FieldSpec::cyclotomic(4));
    const Matrix2 tau = v.witness->generators.at(0).second, sigma = v.witness->generators.at(1).second;
    const Matrix2 minus = Matrix2::scalar(-1);
    t.check(tau * tau == minus && sigma * sigma == minus && (tau * sigma) * (tau * sigma) == minus,
            "BD_2 witness relations");
  });
  for (int n = 1; n <= 12; ++n) verified(GroupId::cyclic(n), FieldSpec::real_cyclotomic(n));
  for (auto [g, k] : {std::pair{GroupId::bo(), FieldSpec(8, {7})}, std::pair{GroupId::bi(), FieldSpec(5, {4})}})
    t.guard(g.to_string(), [&] {
      auto v = realizable(g, k);
      t.check(v.status == Status::NotRealizable && v.certificate.find("positive definite") != std::string::npos,
              g.to_string() + " over " + k.to_string() + ": " + v.certificate);
    });
  // Q(i) adjoined to the trace fields Q, Q(sqrt 2), Q(sqrt 5)
  verified(GroupId::bt(), FieldSpec::cyclotomic(4));
  verified(GroupId::bo(), FieldSpec::cyclotomic(8));
  verified(GroupId::bi(), FieldSpec(20, {9}));
  return t.result(5, "Hilbert symbols and realizability");
}

CriterionResult toric() {
  Tally t;
  for (int n = 2; n <= 12; ++n)
    for (auto kind : {FormKind::MuCyclic, FormKind::Constant}) {
      const std::string what = "n=" + std::to_string(n) + " " + to_string(kind);
      t.guard(what, [&] {
        auto rep = verify_mckay_cyclic(GaloisForm(GroupId::cyclic(n), FieldSpec::real_cyclotomic(n), kind));
        t.check(rep.passed(), what + ": " + rep.to_text());
      });
    }
  return t.result(6, "toric resolution of cyclic quotients");
}

struct Run {
  int code;
  std::string out, err;
  bool operator==(const Run&) const = default;
};

Run invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

CriterionResult determinism() {
  Tally t;
  const std::string twisted = FieldSpec::real_cyclotomic(16).to_string();
  const std::vector<std::vector<std::string>> commands{
      {"info", "bt"},
      {"info", "cyclic:5", "--output", "json"},
      {"graph", "bi", "--output", "json"},
      {"graph", "bd:3", "--output", "dot"},
      {"fold", "bt", "--field", "m=4,H="},
      {"fold", "bd:4", "--field", twisted, "--form", "twisted", "--output", "json"},
      {"fold", "cyclic:6", "--field", "m=6,H=5", "--aij"},
      {"realizable", "bd:2", "--field", "m=1,H="},
      {"realizable", "bt", "--field", "m=4,H=", "--output", "json"},
      {"resolve-cyclic", "5", "--form", "constant", "--output", "json"},
      {"resolve-cyclic", "4", "--output", "dot"},
      {"verify-mckay", "6", "--form", "mu"},
  };
  for (const auto& args : commands) {
    std::string what;
    for (const auto& a : args) what += (what.empty() ? "" : " ") + a;
    t.guard(what, [&] {
      Run first = invoke(args), second = invoke(args);
      t.check(first == second, what + " not byte-identical");
      t.check(!first.out.empty(), what + " printed nothing");
    });
  }
  t.guard("examples", [&] {
    Run e8 = invoke({"graph", "bi", "--output", "json"});
    t.check(e8.code == 0 && graph_from_json(e8.out).label.value_or("").rfind("(E_8)", 0) == 0, "graph bi label");
    Run bt = invoke({"fold", "bt", "--field", "m=4,H="});
    t.check(bt.code == 0 && bt.out.find("(E_6)' ~ F4") != std::string::npos, "fold bt over Q(i) label");
    Run bd = invoke({"realizable", "bd:2", "--field", "m=1,H="});
    t.check(bd.code == cli::kFailure && bd.out.find("NotRealizable") != std::string::npos, "realizable bd:2 over Q");
  });
  return t.result(7, "deterministic CLI output");
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
  return {tables(), split_graphs(), folds(), fold_consistency(), hilbert_and_realizability(), toric(), determinism()};
}

std::string format_acceptance(const std::vector<CriterionResult>& results) {
  std::string out;
  for (const auto& r : results)
    out += (r.passed ? "PASS " : "FAIL ") + std::to_string(r.id) + " " + r.title + ": " + r.detail + "\n";
  return out;
}

}  // namespace mckay
