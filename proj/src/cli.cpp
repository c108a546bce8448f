#include "mckay/cli.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "mckay/acceptance.hpp"
#include "mckay/expression.hpp"
#include "mckay/graphs.hpp"
#include "mckay/realizability.hpp"
#include "mckay/toric.hpp"

namespace mckay::cli {

namespace {

using Json = nlohmann::ordered_json;

// Input errors detected after parsing; reported like parse errors.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string group;
  int n = 0;
  std::string field = "m=1,H=";
  bool field_given = false;
  std::string form = "constant";
  std::string output = "text";
  int bound = 50;
  bool reduced = false;
  bool aij = false;
};

template <class F>
auto as_usage(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

GroupId parse_group(const Options& o) {
  return as_usage([&] { return GroupId::parse(o.group); });
}
FieldSpec parse_field(const Options& o) {
  return as_usage([&] { return FieldSpec::parse(o.field); });
}

Json report_json(const Report& r) {
  Json out = Json::array();
  for (const auto& c : r.checks) out.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return out;
}

Json matrix_json(const IntMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(row);
  return out;
}

std::string matrix_text(const IntMatrix& m) {
  std::ostringstream out;
  for (const auto& row : m) {
    out << " ";
    for (int x : row) out << ' ' << x;
    out << "\n";
  }
  return out.str();
}

void emit_graph(const McKayGraph& g, const std::string& output, std::ostream& out) {
  if (output == "json") out << to_json(g);
  else if (output == "dot") out << to_dot(g);
  else out << to_text(g);
}

void set_label(McKayGraph& g, std::ostream& err) {
  try {
    g.label = classify(g).to_string();
  } catch (const UnrecognizedGraph& e) {
    err << "warning: " << e.what() << "\n";
  }
}

int cmd_info(const Options& o, std::ostream& out) {
  auto t = character_table(parse_group(o));
  auto rep = verify_table(t);
  if (o.output == "json") {
    Json j;
    j["group"] = t.group.to_string();
    j["order"] = t.group_order();
    Json classes = Json::array();
    for (const auto& c : t.classes) classes.push_back({{"label", c.label}, {"size", c.size}});
    j["classes"] = classes;
    Json rows = Json::array();
    for (std::size_t r = 0; r < t.size(); ++r) {
      Json values = Json::array();
      for (const auto& v : t.chars[r]) values.push_back(to_string(v));
      rows.push_back({{"label", t.row_labels[r]}, {"degree", t.degree(r)}, {"values", values}});
    }
    j["characters"] = rows;
    j["checks"] = report_json(rep);
    out << j.dump(2) << "\n";
  } else {
    out << t.group.to_string() << ", order " << t.group_order() << ", " << t.size() << " irreducibles\n"
        << format_table(t) << rep.to_text();
  }
  return rep.passed() ? kSuccess : kFailure;
}

int cmd_graph(const Options& o, std::ostream& out, std::ostream& err) {
  auto g = build_graph(character_table(parse_group(o)), !o.reduced);
  set_label(g, err);
  emit_graph(g, o.output, out);
  return kSuccess;
}

int cmd_fold(const Options& o, std::ostream& out, std::ostream& err) {
  GaloisForm form = as_usage([&] { return GaloisForm(parse_group(o), parse_field(o), parse_form_kind(o.form)); });
  auto t = character_table(form.group());
  auto part = orbits(character_action(form, t), t);
  auto consistency = check_fold_consistency(t, part);
  if (o.aij) {
    auto a = multiplicity_matrix(t, part);
    if (o.output == "json") {
      Json labels = Json::array();
      for (const auto& orbit : part.orbits) {
        std::string label;
        for (std::size_t k = 0; k < orbit.size(); ++k) label += (k ? "+" : "") + t.row_labels[orbit[k]];
        labels.push_back(label);
      }
      out << Json{{"labels", labels}, {"a_ij", matrix_json(a)}}.dump(2) << "\n";
    } else {
      out << "a_ij = multiplicity of W_i in V (x) W_j\n" << matrix_text(a);
    }
    return consistency.passed() ? kSuccess : kFailure;
  }
  auto g = build_graph(form, !o.reduced);
  set_label(g, err);
  emit_graph(g, o.output, out);
  if (o.output == "text") out << "fold consistency\n" << consistency.to_text();
  if (!consistency.passed()) err << consistency.to_text();
  return consistency.passed() ? kSuccess : kFailure;
}

int cmd_realizable(const Options& o, std::ostream& out) {
  if (o.output == "dot") throw UsageError("realizable supports --output text or json");
  const GroupId g = parse_group(o);
  const FieldSpec k = parse_field(o);
  Verdict v = realizable(g, k, o.bound);
  std::optional<Report> check;
  if (v.witness) check = verify_witness(g, *v.witness, k);
  if (o.output == "json") {
    Json j;
    j["group"] = g.to_string();
    j["field"] = k.to_string();
    j["verdict"] = to_string(v.status);
    j["certificate"] = v.certificate;
    if (v.witness) {
      Json w;
      for (const auto& [name, m] : v.witness->generators) w[name] = to_string(m);
      j["witness"] = w;
      j["checks"] = report_json(*check);
    }
    out << j.dump(2) << "\n";
  } else {
    out << "group: " << g.to_string() << "\nfield: " << k.to_string() << "\nverdict: " << to_string(v.status)
        << "\ncertificate: " << v.certificate << "\n";
    if (v.witness) {
      for (const auto& [name, m] : v.witness->generators) out << name << " = " << to_string(m) << "\n";
      out << check->to_text();
    }
  }
  if (check && !check->passed()) return kFailure;
  switch (v.status) {
    case Status::Realizable: return kSuccess;
    case Status::NotRealizable: return kFailure;
    case Status::Unknown: return kUnknown;
  }
  return kUnknown;
}

GaloisForm cyclic_form(const Options& o) {
  if (o.n < 2) throw UsageError("the cyclic order must be at least 2");
  const FormKind kind = as_usage([&] { return parse_form_kind(o.form); });
  if (kind == FormKind::TwistedBD) throw UsageError("the toric resolution covers the mu and constant forms");
  FieldSpec k = o.field_given ? parse_field(o) : FieldSpec::real_cyclotomic(o.n);
  return as_usage([&] { return GaloisForm(GroupId::cyclic(o.n), k, kind); });
}

int cmd_resolve(const Options& o, std::ostream& out, std::ostream& err) {
  const GaloisForm form = cyclic_form(o);
  const int n = o.n;
  Fan fan = build_fan(n);
  auto fan_report = verify_fan(fan);
  auto self = self_intersections(fan);
  auto action = ray_action(fan, form.kind());
  auto g = intersection_graph(fan, action);
  set_label(g, err);
  auto deg = tautological_degrees(n);
  bool ok = fan_report.passed() && std::all_of(self.begin(), self.end(), [](int s) { return s == -2; });
  if (o.output == "json") {
    Json j;
    j["n"] = n;
    j["form"] = to_string(form.kind());
    j["field"] = form.field().to_string();
    Json rays = Json::array(), gens = Json::array(), charts = Json::array();
    for (const auto& r : fan.rays) rays.push_back(r);
    for (const auto& r : fan.generators) gens.push_back(r);
    for (const auto& [s, t] : fan.charts) charts.push_back({{"s", s}, {"t", t}});
    j["rays"] = rays;
    j["lattice_generators"] = gens;
    j["charts"] = charts;
    j["self_intersections"] = self;
    j["ray_action"] = action;
    j["intersection_graph"] = Json::parse(to_json(g));
    j["tautological_degrees"] = matrix_json(deg);
    j["checks"] = report_json(fan_report);
    out << j.dump(2) << "\n";
  } else if (o.output == "dot") {
    out << to_dot(g);
  } else {
    out << "cyclic quotient of order " << n << ", " << to_string(form.kind()) << " form over "
        << form.field().to_string() << "\nrays";
    for (const auto& r : fan.rays) out << " (" << r[0] << "," << r[1] << ")";
    out << "\ncharts (exponents of x, y)\n";
    for (std::size_t i = 0; i < fan.charts.size(); ++i) {
      const auto& [s, t] = fan.charts[i];
      out << "  U_" << i << ": s = (" << s[0] << "," << s[1] << ") t = (" << t[0] << "," << t[1] << ")\n";
    }
    out << "self-intersections";
    for (int s : self) out << ' ' << s;
    out << "\nray action";
    for (int a : action) out << ' ' << a;
    out << "\n" << to_text(g) << "tautological degrees deg(F_j on E_i)\n" << matrix_text(deg) << fan_report.to_text();
  }
  return ok ? kSuccess : kFailure;
}

int cmd_verify(const Options& o, std::ostream& out) {
  auto rep = verify_mckay_cyclic(cyclic_form(o));
  if (o.output == "json") out << Json{{"n", o.n}, {"checks", report_json(rep)}}.dump(2) << "\n";
  else out << rep.to_text();
  return rep.passed() ? kSuccess : kFailure;
}

int cmd_selftest(std::ostream& out) {
  auto results = run_acceptance();
  out << format_acceptance(results);
  bool ok = std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed; });
  return ok ? kSuccess : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"McKay correspondence over non-closed fields", "mckay"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> outputs{"text", "dot", "json"};
  const std::string group_help = "cyclic:n | bd:n | bt | bo | bi";
  const std::string field_help = "m=<m>,H=<k,...>: fixed field of <H> in Q(zeta_m); m=1,H= is Q";

  auto* info = app.add_subcommand("info", "character table and its exact checks");
  info->add_option("group", o.group, group_help)->required();

  auto* graph = app.add_subcommand("graph", "split representation graph over C");
  graph->add_option("group", o.group, group_help)->required();
  graph->add_flag("--reduced", o.reduced, "drop the trivial representation");

  auto* fold = app.add_subcommand("fold", "representation graph of a K-form");
  fold->add_option("group", o.group, group_help)->required();
  fold->add_option("--field", o.field, field_help);
  fold->add_option("--form", o.form, "constant | mu | twisted")->check(CLI::IsMember({"constant", "mu", "twisted"}));
  fold->add_flag("--reduced", o.reduced, "drop the trivial representation");
  fold->add_flag("--aij", o.aij, "print the multiplicities a_ij of W_i in V (x) W_j instead");

  auto* real = app.add_subcommand("realizable", "is the group realizable inside SL(2,K)");
  real->add_option("group", o.group, group_help)->required();
  real->add_option("--field", o.field, field_help);
  real->add_option("--bound", o.bound, "height bound of the conic search")->check(CLI::PositiveNumber);

  auto* resolve = app.add_subcommand("resolve-cyclic", "toric resolution of A^2 / (Z/n)");
  auto* verify = app.add_subcommand("verify-mckay", "full cross-check of the cyclic correspondence");
  for (auto* sub : {resolve, verify}) {
    sub->add_option("n", o.n, "group order")->required()->check(CLI::Range(2, 1000));
    sub->add_option("--form", o.form, "constant | mu")->check(CLI::IsMember({"constant", "mu"}));
    sub->add_option("--field", o.field, field_help + " (default Q(zeta_n + zeta_n^-1))");
  }

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");

  for (auto* sub : {info, graph, fold, real, resolve, verify})
    sub->add_option("--output", o.output, "text | dot | json")->check(CLI::IsMember(outputs));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }
  for (auto* sub : {fold, real, resolve, verify})
    if (sub->parsed() && sub->count("--field") > 0) o.field_given = true;

  try {
    if (info->parsed()) return cmd_info(o, out);
    if (graph->parsed()) return cmd_graph(o, out, err);
    if (fold->parsed()) return cmd_fold(o, out, err);
    if (real->parsed()) return cmd_realizable(o, out);
    if (resolve->parsed()) return cmd_resolve(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out);
    if (selftest->parsed()) return cmd_selftest(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\nRun with --help for more information.\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace mckay::cli
