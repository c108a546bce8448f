#include "mckay/groups.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mckay/expression.hpp"

namespace mckay {

namespace {

using Z = CyclotomicNumber;

Z zeta(int m, std::int64_t k = 1) { return Z::zeta(m, k); }

int parse_positive(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("invalid " + std::string(what) + " parameter '" + std::string(s) + "'");
  return v;
}

CharacterTable cyclic_table(int n) {
  CharacterTable t;
  t.group = GroupId::cyclic(n);
  for (int i = 0; i < n; ++i) t.classes.push_back({std::to_string(i), 1});
  for (int j = 0; j < n; ++j) {
    t.row_labels.push_back("rho_" + std::to_string(j));
    Character row;
    for (int i = 0; i < n; ++i) row.push_back(zeta(n, static_cast<std::int64_t>(j) * i));
    t.chars.push_back(row);
  }
  t.trivial_index = 0;
  t.natural_index = {static_cast<std::size_t>(1 % n), static_cast<std::size_t>((n - 1) % n)};
  return t;
}

CharacterTable binary_dihedral_table(int n) {
  CharacterTable t;
  t.group = GroupId::binary_dihedral(n);
  t.classes.push_back({"id", 1});
  t.classes.push_back({"-id", 1});
  for (int k = 1; k < n; ++k) t.classes.push_back({"sigma^" + std::to_string(k), 2});
  t.classes.push_back({"tau", n});
  t.classes.push_back({"tau*sigma", n});

  const bool odd = n % 2 == 1;
  const Z i = zeta(4);
  auto sign = [](int k) { return Z(k % 2 == 0 ? 1 : -1); };
  auto linear = [&](const Z& minus_id, bool alternate, const Z& at_tau, const Z& at_tau_sigma) {
    Character row{Z(1), minus_id};
    for (int k = 1; k < n; ++k) row.push_back(alternate ? sign(k) : Z(1));
    row.push_back(at_tau);
    row.push_back(at_tau_sigma);
    return row;
  };
  t.row_labels = {"1", "1'", "1''", "1'''"};
  t.chars.push_back(linear(1, false, 1, 1));
  t.chars.push_back(linear(1, false, -1, -1));
  if (odd) {
    t.chars.push_back(linear(-1, true, i, -i));
    t.chars.push_back(linear(-1, true, -i, i));
  } else {
    t.chars.push_back(linear(1, true, 1, -1));
    t.chars.push_back(linear(1, true, -1, 1));
  }
  for (int j = 1; j < n; ++j) {
    t.row_labels.push_back("2^" + std::to_string(j));
    Character row{Z(2), Z(j % 2 == 0 ? 2 : -2)};
    for (int k = 1; k < n; ++k)
      row.push_back(zeta(2 * n, static_cast<std::int64_t>(k) * j) + zeta(2 * n, -static_cast<std::int64_t>(k) * j));
    row.push_back(0);
    row.push_back(0);
    t.chars.push_back(row);
  }
  t.trivial_index = 0;
  t.natural_index = {4};
  return t;
}

CharacterTable binary_tetrahedral_table() {
  CharacterTable t;
  t.group = GroupId::bt();
  t.classes = {{"id", 1}, {"-id", 1}, {"a", 4}, {"-a", 4}, {"b", 4}, {"-b", 4}, {"ab", 6}};
  const Z w = zeta(3), w2 = zeta(3, 2);
  t.row_labels = {"1", "1'", "1''", "3", "2", "2'", "2''"};
  t.chars = {
      {1, 1, 1, 1, 1, 1, 1},
      {1, 1, w, w, w2, w2, 1},
      {1, 1, w2, w2, w, w, 1},
      {3, 3, 0, 0, 0, 0, -1},
      {2, -2, 1, -1, 1, -1, 0},
      {2, -2, w, -w, w2, -w2, 0},
      {2, -2, w2, -w2, w, -w, 0},
  };
  t.trivial_index = 0;
  t.natural_index = {4};
  return t;
}

CharacterTable binary_octahedral_table() {
  CharacterTable t;
  t.group = GroupId::bo();
  t.classes = {{"id", 1}, {"-id", 1}, {"ab", 12}, {"a", 8}, {"-a", 8}, {"b", 6}, {"-b", 6}, {"b^2", 6}};
  const Z r2 = zeta(8) + zeta(8, -1);
  t.row_labels = {"1", "1'", "2'''", "3", "3'", "2", "2'", "4"};
  t.chars = {
      {1, 1, 1, 1, 1, 1, 1, 1},
      {1, 1, -1, 1, 1, -1, -1, 1},
      {2, 2, 0, -1, -1, 0, 0, 2},
      {3, 3, 1, 0, 0, -1, -1, -1},
      {3, 3, -1, 0, 0, 1, 1, -1},
      {2, -2, 0, 1, -1, r2, -r2, 0},
      {2, -2, 0, 1, -1, -r2, r2, 0},
      {4, -4, 0, -1, 1, 0, 0, 0},
  };
  t.trivial_index = 0;
  t.natural_index = {5};
  return t;
}

CharacterTable binary_icosahedral_table() {
  CharacterTable t;
  t.group = GroupId::bi();
  t.classes = {{"id", 1},  {"-id", 1}, {"a", 20},    {"-a", 20}, {"b", 12},
               {"-b", 12}, {"b^2", 12}, {"-b^2", 12}, {"ab", 30}};
  const Z r5 = Z(2) * (zeta(5) + zeta(5, 4)) + 1;
  const Z half(Rational(1, 2));
  const Z mp = half * (Z(1) + r5), mm = half * (Z(1) - r5);
  t.row_labels = {"1", "3", "3'", "4'", "5", "2", "2'", "4", "6"};
  t.chars = {
      {1, 1, 1, 1, 1, 1, 1, 1, 1},
      {3, 3, 0, 0, mp, mp, mm, mm, -1},
      {3, 3, 0, 0, mm, mm, mp, mp, -1},
      {4, 4, 1, 1, -1, -1, -1, -1, 0},
      {5, 5, -1, -1, 0, 0, 0, 0, 1},  // ab acts as an involution in A_5
      {2, -2, 1, -1, mp, -mp, -mm, mm, 0},
      {2, -2, 1, -1, mm, -mm, -mp, mp, 0},
      {4, -4, -1, 1, 1, -1, -1, 1, 0},
      {6, -6, 0, 0, -1, 1, 1, -1, 0},
  };
  t.trivial_index = 0;
  t.natural_index = {5};
  return t;
}

}  // namespace

GroupId GroupId::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
  return {Family::Cyclic, n};
}

GroupId GroupId::binary_dihedral(int n) {
  if (n < 2) throw std::invalid_argument("binary dihedral parameter must be >= 2");
  return {Family::BinaryDihedral, n};
}

GroupId GroupId::parse(std::string_view text) {
  if (text == "bt") return bt();
  if (text == "bo") return bo();
  if (text == "bi") return bi();
  auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    std::string_view head = text.substr(0, colon), arg = text.substr(colon + 1);
    if (head == "cyclic") return cyclic(parse_positive(arg, "cyclic"));
    if (head == "bd") return binary_dihedral(parse_positive(arg, "bd"));
  }
  throw std::invalid_argument("unknown group '" + std::string(text) + "' (expected cyclic:n, bd:n, bt, bo or bi)");
}

int GroupId::order() const {
  switch (family) {
    case Family::Cyclic: return n;
    case Family::BinaryDihedral: return 4 * n;
    case Family::BinaryTetrahedral: return 24;
    case Family::BinaryOctahedral: return 48;
    case Family::BinaryIcosahedral: return 120;
  }
  return 0;
}

int GroupId::exponent() const {
  switch (family) {
    case Family::Cyclic: return n;
    case Family::BinaryDihedral: return std::lcm(2 * n, 4);
    case Family::BinaryTetrahedral: return 12;
    case Family::BinaryOctahedral: return 24;
    case Family::BinaryIcosahedral: return 60;
  }
  return 0;
}

std::string GroupId::to_string() const {
  switch (family) {
    case Family::Cyclic: return "cyclic:" + std::to_string(n);
    case Family::BinaryDihedral: return "bd:" + std::to_string(n);
    case Family::BinaryTetrahedral: return "bt";
    case Family::BinaryOctahedral: return "bo";
    case Family::BinaryIcosahedral: return "bi";
  }
  return {};
}

int CharacterTable::group_order() const { return group.order(); }

int CharacterTable::degree(std::size_t row) const {
  return static_cast<int>(chars.at(row).front().to_rational().get_num().get_si());
}

std::size_t CharacterTable::class_index(std::string_view label) const {
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (classes[c].label == label) return c;
  throw std::out_of_range("no class '" + std::string(label) + "'");
}

std::size_t CharacterTable::row_index(std::string_view label) const {
  for (std::size_t r = 0; r < row_labels.size(); ++r)
    if (row_labels[r] == label) return r;
  throw std::out_of_range("no irreducible '" + std::string(label) + "'");
}

CharacterTable character_table(const GroupId& g) {
  switch (g.family) {
    case Family::Cyclic: return cyclic_table(GroupId::cyclic(g.n).n);
    case Family::BinaryDihedral: return binary_dihedral_table(GroupId::binary_dihedral(g.n).n);
    case Family::BinaryTetrahedral: return binary_tetrahedral_table();
    case Family::BinaryOctahedral: return binary_octahedral_table();
    case Family::BinaryIcosahedral: return binary_icosahedral_table();
  }
  throw std::invalid_argument("unknown family");
}

Character natural_character(const CharacterTable& t) {
  Character v(t.classes.size(), Z(0));
  for (std::size_t r : t.natural_index) v = v + t.chars[r];
  return v;
}

Character natural_character(const GroupId& g) { return natural_character(character_table(g)); }

Character operator+(const Character& a, const Character& b) {
  if (a.size() != b.size()) throw std::invalid_argument("character length mismatch");
  Character r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Character operator*(const Character& a, const Character& b) {
  if (a.size() != b.size()) throw std::invalid_argument("character length mismatch");
  Character r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * b[i];
  return r;
}

CyclotomicNumber inner_product(const Character& chi, const Character& psi, const CharacterTable& t) {
  if (chi.size() != t.classes.size() || psi.size() != t.classes.size())
    throw std::invalid_argument("character length does not match the table");
  Z sum;
  for (std::size_t c = 0; c < chi.size(); ++c) sum += Z(t.classes[c].size) * chi[c] * psi[c].conj();
  return sum * Z(Rational(1, t.group_order()));
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void Report::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& c : checks) {
    out += (c.passed ? "PASS " : "FAIL ") + c.name;
    if (!c.detail.empty()) out += ": " + c.detail;
    out += "\n";
  }
  return out;
}

Report verify_table(const CharacterTable& t) {
  Report rep;
  const std::size_t k = t.classes.size();
  const int order = t.group_order();

  int class_sum = 0;
  for (const auto& c : t.classes) class_sum += c.size;
  rep.add("class sizes sum to |G|", class_sum == order,
          std::to_string(class_sum) + " vs " + std::to_string(order));
  rep.add("square table", t.chars.size() == k && t.row_labels.size() == k,
          std::to_string(t.chars.size()) + " rows, " + std::to_string(k) + " classes");
  bool lengths = std::all_of(t.chars.begin(), t.chars.end(), [&](const Character& c) { return c.size() == k; });
  rep.add("row lengths", lengths);
  if (!lengths || t.chars.size() != k) return rep;

  bool degrees_ok = true;
  Rational sum_sq = 0;
  for (const auto& row : t.chars) {
    if (!row[0].is_rational() || row[0].to_rational().get_den() != 1 || row[0].to_rational() <= 0) {
      degrees_ok = false;
      continue;
    }
    sum_sq += row[0].to_rational() * row[0].to_rational();
  }
  rep.add("degrees are positive integers", degrees_ok);
  rep.add("sum of squared degrees equals |G|", degrees_ok && sum_sq == order, sum_sq.get_str());

  bool trivial_ok = t.trivial_index < k &&
                    std::all_of(t.chars[t.trivial_index].begin(), t.chars[t.trivial_index].end(),
                                [](const Z& v) { return v == Z(1); });
  rep.add("trivial row", trivial_ok);

  std::string row_fail;
  for (std::size_t i = 0; i < k && row_fail.empty(); ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (!(inner_product(t.chars[i], t.chars[j], t) == Z(i == j ? 1 : 0))) {
        row_fail = "<" + t.row_labels[i] + ", " + t.row_labels[j] + "> = " +
                   to_display_string(inner_product(t.chars[i], t.chars[j], t));
        break;
      }
  rep.add("row orthogonality", row_fail.empty(), row_fail);

  std::string col_fail;
  for (std::size_t c = 0; c < k && col_fail.empty(); ++c)
    for (std::size_t d = 0; d < k; ++d) {
      Z s;
      for (std::size_t i = 0; i < k; ++i) s += t.chars[i][c] * t.chars[i][d].conj();
      Z expected = c == d ? Z(Rational(order, t.classes[c].size)) : Z(0);
      if (!(s == expected)) {
        col_fail = "columns " + t.classes[c].label + ", " + t.classes[d].label + " give " + to_display_string(s);
        break;
      }
    }
  rep.add("column orthogonality", col_fail.empty(), col_fail);

  const int e = t.group.exponent();
  bool field_ok = true;
  for (const auto& row : t.chars)
    for (const auto& v : row)
      if (e % minimize_conductor(v).conductor() != 0) field_ok = false;
  rep.add("values lie in Q(zeta_" + std::to_string(e) + ")", field_ok);

  Character nat = natural_character(t);
  bool nat_ok = nat[0] == Z(2) &&
                std::all_of(nat.begin(), nat.end(), [](const Z& v) { return v.conj() == v; });
  rep.add("natural character is two-dimensional and self-dual", nat_ok);
  return rep;
}

std::string format_table(const CharacterTable& t) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  for (const auto& c : t.classes) header.push_back(c.label);
  cells.push_back(header);
  for (std::size_t r = 0; r < t.chars.size(); ++r) {
    std::vector<std::string> line{t.row_labels[r]};
    for (const auto& v : t.chars[r]) line.push_back(to_display_string(v));
    cells.push_back(line);
  }
  std::vector<std::string> sizes{"#"};
  for (const auto& c : t.classes) sizes.push_back(std::to_string(c.size));

  std::vector<std::size_t> width(header.size(), 0);
  auto widen = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  };
  for (const auto& line : cells) widen(line);
  widen(sizes);

  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      out << line[i] << std::string(width[i] - line[i].size(), ' ');
      out << (i == 0 ? " | " : (i + 1 < line.size() ? "  " : ""));
    }
    out << "\n";
  };
  std::size_t total = 0;
  for (std::size_t w : width) total += w + 2;
  emit(cells[0]);
  out << std::string(total + 1, '-') << "\n";
  for (std::size_t r = 1; r < cells.size(); ++r) emit(cells[r]);
  out << std::string(total + 1, '-') << "\n";
  emit(sizes);
  return out.str();
}

}  // namespace mckay
