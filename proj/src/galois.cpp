#include "mckay/galois.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <stdexcept>

#include "mckay/expression.hpp"
#include "mckay/linalg.hpp"
#include "mckay/modular.hpp"

namespace mckay {

namespace {

int parse_int(std::string_view s, std::string_view context) {
  int v = 0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  if (begin != end && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (s.empty() || ec != std::errc() || ptr != end)
    throw std::invalid_argument("invalid integer '" + std::string(s) + "' in " + std::string(context));
  return v;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && s[a] == ' ') ++a;
  while (b > a && s[b - 1] == ' ') --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

FieldSpec::FieldSpec(int m, std::vector<int> generators) : m_(m) {
  if (m < 1) throw std::invalid_argument("field modulus must be positive");
  for (int h : generators) {
    int r = mod(h, m);
    if (m > 1 && std::gcd(r, m) != 1)
      throw std::invalid_argument("H generator " + std::to_string(h) + " is not a unit mod " + std::to_string(m));
    generators_.push_back(r);
  }
  subgroup_ = subgroup_closure(m, generators_);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  const std::string context = "field '" + std::string(text) + "'";
  std::string s(text);
  auto hpos = s.find(",H=");
  if (s.rfind("m=", 0) != 0 || hpos == std::string::npos)
    throw std::invalid_argument("expected m=<m>,H=<k1,k2,...> in " + context);
  int m = parse_int(trim(std::string_view(s).substr(2, hpos - 2)), context);
  if (m < 1) throw std::invalid_argument("modulus must be positive in " + context);
  std::vector<int> gens;
  std::string_view rest = std::string_view(s).substr(hpos + 3);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    gens.push_back(parse_int(trim(rest.substr(0, comma)), context));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
    if (rest.empty()) throw std::invalid_argument("trailing comma in " + context);
  }
  return FieldSpec(m, gens);
}

FieldSpec FieldSpec::real_cyclotomic(int m) {
  if (m <= 2) return rationals();
  return FieldSpec(m, {m - 1});
}

std::string FieldSpec::to_string() const {
  std::string out = "m=" + std::to_string(m_) + ",H=";
  for (std::size_t i = 0; i < generators_.size(); ++i) out += (i ? "," : "") + std::to_string(generators_[i]);
  return out;
}

std::vector<int> FieldSpec::galois_group_at(int L) const { return lift_subgroup(m_, subgroup_, L); }

int FieldSpec::degree() const { return euler_phi(m_) / static_cast<int>(subgroup_.size()); }

bool FieldSpec::contains(const CyclotomicNumber& a) const { return is_in_fixed_field(a, m_, generators_); }

bool FieldSpec::is_real() const {
  if (m_ <= 2) return true;
  return std::binary_search(subgroup_.begin(), subgroup_.end(), m_ - 1);
}

std::vector<int> FieldSpec::embeddings() const {
  if (m_ <= 2) return {1};
  std::set<int> covered;
  std::vector<int> reps;
  for (int k : units_mod(m_)) {
    if (covered.count(k)) continue;
    reps.push_back(k);
    for (int h : subgroup_) covered.insert(mod(static_cast<std::int64_t>(k) * h, m_));
  }
  return reps;
}

namespace {

// A residue mod L that reduces to k mod m and is a unit mod L.
int lift_residue(int k, int m, int L) {
  for (int c = mod(k, m); c < L + m; c += m)
    if (c > 0 && std::gcd(c, L) == 1) return c;
  throw std::logic_error("no unit lift of embedding index");
}

}  // namespace

RealEmbedding FieldSpec::embed(const CyclotomicNumber& a, int k, int precision_bits) const {
  const int L = std::lcm(a.conductor(), m_);
  return embed_real(a.lift(L), lift_residue(k, m_, L), precision_bits);
}

int FieldSpec::sign(const CyclotomicNumber& a, int k) const {
  const int L = std::lcm(a.conductor(), m_);
  return certified_sign(a.lift(L), lift_residue(k, m_, L));
}

std::vector<CyclotomicNumber> FieldSpec::basis() const {
  const int target = degree();
  std::vector<CyclotomicNumber> out;
  CycMatrix rows;
  for (int j = 0; j < m_ && static_cast<int>(out.size()) < target; ++j) {
    CyclotomicNumber tr;
    for (int h : subgroup_) tr += CyclotomicNumber::zeta(m_, static_cast<std::int64_t>(j) * h);
    tr = tr.lift(m_);
    std::vector<CyclotomicNumber> coords(tr.coeffs().begin(), tr.coeffs().end());
    CycMatrix trial = rows;
    trial.push_back(coords);
    if (rank(trial) == rows.size() + 1) {
      rows.push_back(coords);
      out.push_back(minimize_conductor(tr));
    }
  }
  return out;
}

bool FieldSpec::same_field(const FieldSpec& other) const {
  const int L = std::lcm(m_, other.m_);
  return galois_group_at(L) == other.galois_group_at(L);
}

FormKind parse_form_kind(std::string_view text) {
  if (text == "constant") return FormKind::Constant;
  if (text == "mu") return FormKind::MuCyclic;
  if (text == "twisted") return FormKind::TwistedBD;
  throw std::invalid_argument("unknown form '" + std::string(text) + "' (expected constant, mu or twisted)");
}

std::string to_string(FormKind k) {
  switch (k) {
    case FormKind::Constant: return "constant";
    case FormKind::MuCyclic: return "mu";
    case FormKind::TwistedBD: return "twisted";
  }
  return {};
}

GaloisForm::GaloisForm(GroupId group, FieldSpec field, FormKind kind)
    : group_(group), field_(std::move(field)), kind_(kind) {
  conductor_ = std::lcm(field_.modulus(), group_.exponent());
  switch (kind_) {
    case FormKind::Constant: {
      for (const auto& v : natural_character(group_))
        if (!field_.contains(v))
          throw std::invalid_argument("trace condition fails: natural character value " + to_display_string(v) +
                                      " is not in K = " + field_.to_string());
      break;
    }
    case FormKind::MuCyclic:
      if (group_.family != Family::Cyclic) throw std::invalid_argument("the mu form exists only for cyclic groups");
      if (!field_.same_field(FieldSpec::real_cyclotomic(group_.n)))
        throw std::invalid_argument("the mu form is supported only over Q(zeta_n + zeta_n^-1)");
      break;
    case FormKind::TwistedBD:
      if (group_.family != Family::BinaryDihedral)
        throw std::invalid_argument("the twisted form exists only for binary dihedral groups");
      if (!field_.same_field(FieldSpec::real_cyclotomic(4 * group_.n)))
        throw std::invalid_argument("the twisted form requires K = Q(eps + eps^-1), eps a primitive 4n-th root");
      conductor_ = std::lcm(conductor_, 4 * group_.n);
      break;
  }
}

std::vector<int> GaloisForm::gamma() const { return field_.galois_group_at(conductor_); }

std::vector<int> GaloisForm::gamma_generators() const { return generating_set(conductor_, gamma()); }

std::vector<std::size_t> GaloisForm::class_permutation(int gamma, const CharacterTable& t) const {
  std::vector<std::size_t> p(t.classes.size());
  std::iota(p.begin(), p.end(), 0);
  if (kind_ == FormKind::TwistedBD && mod(gamma, 4 * group_.n) == 4 * group_.n - 1) {
    // sigma -> sigma^-1 keeps every class; tau -> tau*sigma swaps the two reflection classes
    std::swap(p[t.class_index("tau")], p[t.class_index("tau*sigma")]);
  }
  return p;
}

std::vector<std::size_t> row_permutation(const GaloisForm& form, const CharacterTable& t, int gamma) {
  const std::size_t k = t.size();
  std::vector<std::size_t> perm(k);
  if (form.kind() == FormKind::MuCyclic) {
    std::iota(perm.begin(), perm.end(), 0);
    return perm;
  }
  auto p = form.class_permutation(gamma, t);
  std::vector<std::size_t> p_inv(p.size());
  for (std::size_t c = 0; c < p.size(); ++c) p_inv[p[c]] = c;
  for (std::size_t r = 0; r < k; ++r) {
    Character twisted(t.classes.size());
    for (std::size_t c = 0; c < twisted.size(); ++c) {
      const CyclotomicNumber& v = t.chars[r][p_inv[c]];
      twisted[c] = v.lift(std::lcm(v.conductor(), form.conductor())).galois(gamma);
    }
    auto it = std::find(t.chars.begin(), t.chars.end(), twisted);
    if (it == t.chars.end())
      throw std::logic_error("twist of " + t.row_labels[r] + " by " + std::to_string(gamma) + " is not an irreducible");
    perm[r] = static_cast<std::size_t>(it - t.chars.begin());
  }
  return perm;
}

CharacterAction character_action(const GaloisForm& form, const CharacterTable& t) {
  CharacterAction a;
  for (int g : form.gamma_generators()) {
    a.generators.push_back(g);
    a.permutations.push_back(row_permutation(form, t, g));
  }
  return a;
}

std::size_t OrbitPartition::orbit_of(std::size_t row) const {
  for (std::size_t o = 0; o < orbits.size(); ++o)
    if (std::find(orbits[o].begin(), orbits[o].end(), row) != orbits[o].end()) return o;
  throw std::out_of_range("row not in any orbit");
}

OrbitPartition orbits(const CharacterAction& action, const CharacterTable& t) {
  const std::size_t k = t.size();
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& perm : action.permutations)
    for (std::size_t r = 0; r < k; ++r) {
      std::size_t a = find(r), b = find(perm[r]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  OrbitPartition out;
  std::vector<std::size_t> slot(k, k);
  for (std::size_t r = 0; r < k; ++r) {
    std::size_t root = find(r);
    if (slot[root] == k) {
      slot[root] = out.orbits.size();
      out.orbits.emplace_back();
    }
    out.orbits[slot[root]].push_back(r);
  }
  out.multiplicity_free = true;
  for (const auto& o : out.orbits) {
    Character sum(t.classes.size(), CyclotomicNumber(0));
    for (std::size_t r : o) sum = sum + t.chars[r];
    if (!(inner_product(sum, sum, t) == CyclotomicNumber(static_cast<long>(o.size())))) out.multiplicity_free = false;
  }
  return out;
}

Character rational_character(const std::vector<std::size_t>& orbit, const CharacterTable& t, const GaloisForm& form) {
  Character sum(t.classes.size(), CyclotomicNumber(0));
  for (std::size_t r : orbit) sum = sum + t.chars.at(r);
  if (form.kind() == FormKind::Constant)
    for (std::size_t c = 0; c < sum.size(); ++c)
      if (!form.field().contains(sum[c]))
        throw std::domain_error("orbit character value " + to_display_string(sum[c]) + " at class " +
                                t.classes[c].label + " is not in K; the form is misspecified");
  return sum;
}

}  // namespace mckay
