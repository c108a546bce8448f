#include "mckay/toric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mckay/expression.hpp"
#include "mckay/linalg.hpp"

namespace mckay {

namespace {

constexpr MonomialOrder kOrder = MonomialOrder::GradedLex;
const std::vector<std::string> kNames{"x", "y"};

using Z = CyclotomicNumber;

Polynomial mono(long p, long q, const Z& c = 1) {
  return Polynomial::monomial(Monomial{{static_cast<int>(p), static_cast<int>(q)}}, c, kOrder);
}

int grade(const Monomial& m, int n) {
  return ((m.exponents[0] - m.exponents[1]) % n + n) % n;
}

std::string join(const std::vector<int>& v, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::string matrix_text(const IntMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) out += (i ? ", [" : "[") + join(m[i]) + "]";
  return out + "]";
}

// Q^2 vector of a point given in N' coordinates.
std::array<Rational, 2> ambient(int n, const Exponent& c) {
  std::array<Rational, 2> v{Rational(c[0]) + Rational(c[1] * (n - 1), n), Rational(c[1], n)};
  for (auto& q : v) q.canonicalize();
  return v;
}

Rational pairing(const Exponent& m, const std::array<Rational, 2>& v) { return m[0] * v[0] + m[1] * v[1]; }

void require_n(int n) {
  if (n < 2) throw std::invalid_argument("the cyclic group order must be at least 2");
}

// Orbits of a permutation of the rays restricted to the interior rays 1..n-1.
std::vector<std::vector<int>> curve_orbits(int n, const std::vector<int>& action) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(static_cast<std::size_t>(n + 1), 0);
  for (int i = 1; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit;
    for (int j = i; !seen[j]; j = action.empty() ? j : action[j]) {
      if (j < 1 || j > n - 1) throw std::invalid_argument("ray action moves an exceptional ray to the boundary");
      seen[j] = 1;
      orbit.push_back(j);
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(orbit);
  }
  return out;
}

// Coordinates in S/(x^n, y^n, xy): index 0 is 1, k is x^k, n - 1 + k is y^k.
using SVec = std::vector<Z>;

int s_index(long p, long q, int n) {
  if (p > 0 && q > 0) return -1;
  if (p >= n || q >= n) return -1;
  if (p == 0 && q == 0) return 0;
  return p > 0 ? static_cast<int>(p) : static_cast<int>(n - 1 + q);
}

Monomial s_monomial(int k, int n) {
  if (k == 0) return Monomial::one(2);
  return k < n ? Monomial{{k, 0}} : Monomial{{0, k - n + 1}};
}

SVec to_svec(const Polynomial& f, int n) {
  SVec v(static_cast<std::size_t>(2 * n - 1));
  for (const auto& term : f.terms()) {
    int k = s_index(term.monomial.exponents[0], term.monomial.exponents[1], n);
    if (k >= 0) v[k] += term.coeff;
  }
  return v;
}

SVec shift(const SVec& v, int var, int n) {
  SVec out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    Monomial m = s_monomial(static_cast<int>(k), n);
    m.exponents[var] += 1;
    int t = s_index(m.exponents[0], m.exponents[1], n);
    if (t >= 0) out[t] += v[k];
  }
  return out;
}

// Rows restricted to the coordinates of grade j.
CycMatrix graded_part(const std::vector<SVec>& rows, int j, int n) {
  CycMatrix out;
  for (const auto& r : rows) {
    SVec part(r.size());
    bool any = false;
    for (std::size_t k = 0; k < r.size(); ++k)
      if (grade(s_monomial(static_cast<int>(k), n), n) == j && !r[k].is_zero()) {
        part[k] = r[k];
        any = true;
      }
    if (any) out.push_back(part);
  }
  return out;
}

std::string svec_text(const SVec& v, int n) {
  Polynomial p(2, kOrder);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) p = p + Polynomial::monomial(s_monomial(static_cast<int>(k), n), v[k], kOrder);
  return to_string(p, kNames);
}

std::string ideal_text(const std::vector<Polynomial>& gens) {
  std::string out = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? ", " : "") + to_string(gens[i], kNames);
  return out + ">";
}

Rational random_nonzero(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  int a = 0;
  while (a == 0) a = num(rng);
  Rational q(a, den(rng));
  q.canonicalize();
  return q;
}

std::set<int> parse_orbit(const std::string& label, const std::string& prefix) {
  std::set<int> out;
  std::stringstream ss(label);
  std::string part;
  while (std::getline(ss, part, '+')) {
    if (part.rfind(prefix, 0) != 0) throw std::logic_error("unexpected vertex label " + label);
    out.insert(std::stoi(part.substr(prefix.size())));
  }
  return out;
}

}  // namespace

std::array<Rational, 2> lattice_coordinates(int n, const Rational& p, const Rational& q) {
  Rational beta = n * q;
  Rational alpha = p - (n - 1) * q;
  alpha.canonicalize();
  beta.canonicalize();
  return {alpha, beta};
}

Fan build_fan(int n) {
  require_n(n);
  Fan f;
  f.n = n;
  for (int i = 0; i <= n; ++i) {
    f.rays.push_back({n - i, i});
    auto c = lattice_coordinates(n, n - i, i);
    long a = c[0].get_num().get_si(), b = c[1].get_num().get_si();
    long g = std::gcd(a, b);
    f.generators.push_back({a / g, b / g});
  }
  for (int i = 0; i < n; ++i) {
    f.cones.push_back({i, i + 1});
    f.charts.push_back({Exponent{i + 1, -(n - i - 1)}, Exponent{-i, n - i}});
  }
  return f;
}

Report verify_fan(const Fan& fan) {
  Report r;
  const int n = fan.n;
  bool rays_ok = static_cast<int>(fan.rays.size()) == n + 1;
  for (int i = 0; rays_ok && i <= n; ++i) rays_ok = fan.rays[i] == Exponent{n - i, i};
  r.add("rays v_i = (n-i, i)", rays_ok);
  for (std::size_t c = 0; c < fan.cones.size(); ++c) {
    const auto& u = fan.generators[fan.cones[c][0]];
    const auto& v = fan.generators[fan.cones[c][1]];
    long det = u[0] * v[1] - u[1] * v[0];
    r.add("cone " + std::to_string(c) + " unimodular", det == 1 || det == -1, "det " + std::to_string(det));
    const auto& [s, t] = fan.charts[c];
    // pairing against the N' basis must be integral
    bool integral = true;
    for (const auto& basis : {Exponent{1, 0}, Exponent{0, 1}})
      for (const auto& m : {s, t}) {
        Rational val = pairing(m, ambient(n, basis));
        val.canonicalize();
        integral = integral && val.get_den() == 1;
      }
    r.add("chart " + std::to_string(c) + " monomials in M'", integral);
    bool dual = pairing(s, ambient(n, u)) == 1 && pairing(s, ambient(n, v)) == 0 && pairing(t, ambient(n, u)) == 0 &&
                pairing(t, ambient(n, v)) == 1;
    r.add("chart " + std::to_string(c) + " dual to its cone", dual);
  }
  return r;
}

std::vector<int> self_intersections(const Fan& fan) {
  std::vector<int> out;
  for (int i = 1; i < fan.n; ++i) {
    const auto& a = fan.generators[i - 1];
    const auto& b = fan.generators[i];
    const auto& c = fan.generators[i + 1];
    Exponent sum{a[0] + c[0], a[1] + c[1]};
    std::size_t axis = b[0] != 0 ? 0 : 1;
    if (sum[axis] % b[axis] != 0) throw std::logic_error("non-integral lattice relation at ray " + std::to_string(i));
    long k = sum[axis] / b[axis];
    if (sum[0] != k * b[0] || sum[1] != k * b[1])
      throw std::logic_error("rays around " + std::to_string(i) + " are not related by a multiple");
    out.push_back(static_cast<int>(-k));
  }
  return out;
}

std::vector<int> ray_action(const Fan& fan, FormKind kind) {
  std::vector<int> perm(static_cast<std::size_t>(fan.n + 1));
  std::iota(perm.begin(), perm.end(), 0);
  if (kind == FormKind::TwistedBD) throw std::invalid_argument("the toric resolution covers cyclic forms only");
  if (kind == FormKind::MuCyclic || fan.n < 3) return perm;
  // gamma interchanges x_1' and x_2', so (p, q) -> (q, p) on exponents
  for (int i = 0; i <= fan.n; ++i) {
    Exponent swapped{fan.rays[i][1], fan.rays[i][0]};
    auto it = std::find(fan.rays.begin(), fan.rays.end(), swapped);
    if (it == fan.rays.end()) throw std::logic_error("swap does not preserve the fan");
    perm[i] = static_cast<int>(it - fan.rays.begin());
  }
  return perm;
}

McKayGraph intersection_graph(const Fan& fan, const std::vector<int>& action) {
  const int n = fan.n;
  const auto self = self_intersections(fan);
  auto dot = [&](int i, int j) {
    if (i == j) return self[i - 1];
    return std::abs(i - j) == 1 ? 1 : 0;
  };
  const auto orbits = curve_orbits(n, action);
  McKayGraph g;
  g.extended = false;
  const std::size_t size = orbits.size();
  g.adjacency.assign(size, std::vector<int>(size, 0));
  for (std::size_t a = 0; a < size; ++a) {
    Vertex v;
    for (std::size_t k = 0; k < orbits[a].size(); ++k) v.label += (k ? "+E_" : "E_") + std::to_string(orbits[a][k]);
    v.mult = static_cast<int>(orbits[a].size());
    v.degree = v.mult;
    g.vertices.push_back(v);
    for (std::size_t b = 0; b < size; ++b) {
      int sum = 0;
      for (int i : orbits[a])
        for (int j : orbits[b]) sum += dot(i, j);
      if (a != b) {
        g.adjacency[a][b] = sum;
        continue;
      }
      // loops = E.E / 2 + multiplicity
      if (sum % 2 != 0 || sum / 2 + v.mult < 0) throw std::logic_error("inconsistent self-intersection on " + v.label);
      g.adjacency[a][a] = sum / 2 + v.mult;
    }
  }
  return g;
}

Report check_coordinate_change(int n) {
  if (n < 3) throw std::invalid_argument("the companion form needs n >= 3");
  Report r;
  const Z xi = Z::zeta(n), xi_inv = Z::zeta(n, -1);
  const Z c = xi + xi_inv;
  // coefficient vectors of x_1' and x_2' in the basis x_1, x_2
  const std::array<Z, 2> v1{1, -xi}, v2{1, -xi_inv};
  auto apply = [&](const std::array<Z, 2>& v) { return std::array<Z, 2>{-v[1], v[0] + c * v[1]}; };
  auto scaled = [](const std::array<Z, 2>& v, const Z& s) { return std::array<Z, 2>{s * v[0], s * v[1]}; };
  r.add("companion entries fixed by gamma", c.galois(-1) == c, "xi + xi^-1 = " + to_display_string(c));
  r.add("x_1' is a xi-eigenvector", apply(v1) == scaled(v1, xi));
  r.add("x_2' is a xi^-1-eigenvector", apply(v2) == scaled(v2, xi_inv));
  r.add("x_1', x_2' independent", !(v1[0] * v2[1] - v1[1] * v2[0]).is_zero());
  bool swap = v1[0].galois(-1) == v2[0] && v1[1].galois(-1) == v2[1] && v2[0].galois(-1) == v1[0] &&
              v2[1].galois(-1) == v1[1];
  r.add("gamma interchanges x_1' and x_2'", swap);
  // the induced action on rays is i -> n - i
  Fan fan = build_fan(n);
  auto perm = ray_action(fan, FormKind::Constant);
  bool reflect = true;
  for (int i = 0; i <= n; ++i) reflect = reflect && perm[i] == n - i;
  r.add("induced ray action i -> n - i", reflect, join(perm));
  return r;
}

IdealBasis cluster_ideal_at(int n, int chart, const Z& s, const Z& t) {
  require_n(n);
  if (chart < 0 || chart >= n) throw std::invalid_argument("chart index must lie in 0..n-1");
  const int i = chart;
  IdealBasis ideal;
  ideal.generators = {mono(i + 1, 0) - mono(0, n - i - 1, s), mono(1, 1) - mono(0, 0, s * t),
                      mono(0, n - i) - mono(i, 0, t)};
  return ideal;
}

IdealBasis restrict_to_E(int n, int curve, const Z& a, const Z& b) {
  require_n(n);
  const int i = curve;
  if (i < 1 || i > n - 1) throw std::invalid_argument("curve index must lie in 1..n-1");
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("(a : b) needs a nonzero coordinate");
  IdealBasis ideal;
  Polynomial lead = b.is_zero() ? mono(i, 0, b / a) - mono(0, n - i) : mono(i, 0) - mono(0, n - i, a / b);
  ideal.generators = {lead, mono(1, 1), mono(0, n - i + 1), mono(i + 1, 0)};
  return ideal;
}

std::vector<int> quotient_character(IdealBasis& ideal, int n) {
  auto qb = quotient_basis(ideal.groebner_basis());
  if (qb.infinite) return {};
  std::vector<int> chi(static_cast<std::size_t>(n), 0);
  for (const auto& m : qb.monomials) ++chi[grade(m, n)];
  return chi;
}

Report verify_cluster(IdealBasis& ideal, int n) {
  Report r;
  auto qb = quotient_basis(ideal.groebner_basis());
  const std::string gb = ideal_text(ideal.groebner_basis());
  r.add("finite quotient", !qb.infinite, gb);
  if (qb.infinite) return r;
  r.add("quotient dimension n", static_cast<int>(qb.dimension()) == n,
        "dimension " + std::to_string(qb.dimension()) + " for " + gb);
  auto chi = quotient_character(ideal, n);
  bool regular = std::all_of(chi.begin(), chi.end(), [](int c) { return c == 1; });
  r.add("regular character", regular, "multiplicities [" + join(chi) + "]");
  return r;
}

bool VofI::dichotomy() const {
  auto s = support();
  int total = std::accumulate(decomposition.begin(), decomposition.end(), 0);
  return (total == 1) || (total == 2 && s.size() == 2);
}

std::vector<int> VofI::support() const {
  std::vector<int> out;
  for (std::size_t j = 0; j < decomposition.size(); ++j)
    if (decomposition[j] > 0) out.push_back(static_cast<int>(j));
  return out;
}

VofI v_of_I(IdealBasis& ideal, int n) {
  require_n(n);
  for (const auto& g : {mono(n, 0), mono(0, n), mono(1, 1)})
    if (!ideal.contains(g))
      throw std::invalid_argument("ideal does not contain " + to_string(g, kNames) +
                                  "; the point is off the exceptional fiber");
  std::vector<SVec> ibar;
  for (const auto& g : ideal.generators)
    for (int k = 0; k < 2 * n - 1; ++k) {
      auto v = to_svec(g * Polynomial::monomial(s_monomial(k, n), 1, kOrder), n);
      if (std::any_of(v.begin(), v.end(), [](const Z& z) { return !z.is_zero(); })) ibar.push_back(v);
    }
  std::vector<SVec> mibar;
  for (const auto& v : ibar)
    for (int var : {0, 1}) mibar.push_back(shift(v, var, n));

  // the cluster ideals are graded, so Ibar splits into its graded parts
  std::size_t graded_rank = 0;
  for (int j = 0; j < n; ++j) graded_rank += rank(graded_part(ibar, j, n));
  if (graded_rank != rank(CycMatrix(ibar.begin(), ibar.end())))
    throw std::invalid_argument("ideal is not homogeneous for the grading by characters");

  VofI out;
  out.decomposition.assign(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < n; ++j) {
    CycMatrix sub = graded_part(mibar, j, n);
    std::size_t base = rank(sub);
    for (const auto& v : graded_part(ibar, j, n)) {
      CycMatrix trial = sub;
      trial.push_back(v);
      if (rank(trial) == base) continue;
      sub.push_back(v);
      ++base;
      out.basis.push_back(svec_text(v, n));
      out.grades.push_back(j);
      ++out.decomposition[j];
    }
  }
  return out;
}

std::vector<Monomial> chart_generators(int n, int chart) {
  IdealBasis origin = cluster_ideal_at(n, chart, 0, 0);
  auto qb = quotient_basis(origin.groebner_basis());
  std::vector<Monomial> out(static_cast<std::size_t>(n), Monomial::one(2));
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (const auto& m : qb.monomials) {
    out[grade(m, n)] = m;
    ++seen[grade(m, n)];
  }
  if (qb.infinite || std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; }))
    throw std::logic_error("chart origin cluster is not regular");
  return out;
}

IntMatrix tautological_degrees(int n) {
  require_n(n);
  IntMatrix deg(static_cast<std::size_t>(n - 1), std::vector<int>(static_cast<std::size_t>(n - 1), 0));
  const Fan fan = build_fan(n);
  for (int i = 1; i < n; ++i) {
    // E_i is {t_{i-1} = 0} in U_{i-1} and {s_i = 0} in U_i, with s_{i-1} = 1 / t_i along it
    auto lower = chart_generators(n, i - 1);
    auto upper = chart_generators(n, i);
    const auto& [s, t] = fan.charts[i - 1];
    for (int j = 1; j < n; ++j) {
      // upper / lower = s^alpha t^beta
      long p = upper[j].exponents[0] - lower[j].exponents[0];
      long q = upper[j].exponents[1] - lower[j].exponents[1];
      long det = s[0] * t[1] - s[1] * t[0];
      long alpha_num = p * t[1] - q * t[0], beta_num = s[0] * q - s[1] * p;
      if (alpha_num % det != 0 || beta_num % det != 0) throw std::logic_error("transition is not a chart monomial");
      if (beta_num / det != 0) throw std::logic_error("transition vanishes or has a pole along the curve");
      deg[i - 1][j - 1] = static_cast<int>(alpha_num / det);
    }
  }
  return deg;
}

Report verify_mckay_cyclic(const GaloisForm& form) {
  const GroupId& g = form.group();
  if (g.family != Family::Cyclic || form.kind() == FormKind::TwistedBD)
    throw std::invalid_argument("verify_mckay_cyclic needs a mu or constant form of a cyclic group");
  const int n = g.n;
  require_n(n);
  Report r;
  Fan fan = build_fan(n);
  for (const auto& c : verify_fan(fan).checks) r.add(c.name, c.passed, c.detail);
  auto self = self_intersections(fan);
  r.add("self-intersections -2", std::all_of(self.begin(), self.end(), [](int k) { return k == -2; }), join(self));
  if (form.kind() == FormKind::Constant && n >= 3)
    for (const auto& c : check_coordinate_change(n).checks) r.add(c.name, c.passed, c.detail);

  // orbit compatibility: the ray action matches the character action under V_j <-> E_j
  auto action = ray_action(fan, form.kind());
  CharacterTable table = character_table(g);
  CharacterAction chars = character_action(form, table);
  bool compatible = true;
  for (const auto& perm : chars.permutations)
    for (int j = 1; j < n; ++j) {
      std::size_t row = table.row_index("rho_" + std::to_string(j));
      std::size_t image = table.row_index("rho_" + std::to_string(action[j]));
      compatible = compatible && perm[row] == image;
    }
  if (form.kind() == FormKind::MuCyclic)
    compatible = compatible && std::all_of(action.begin(), action.end(), [&, k = 0](int v) mutable { return v == k++; });
  r.add("ray action matches character action", compatible, join(action));

  // graphs under V_i <-> E_i
  McKayGraph rep = build_graph(form, false);
  McKayGraph inter = intersection_graph(fan, action);
  bool same = rep.size() == inter.size();
  std::vector<std::size_t> perm(rep.size());
  for (std::size_t a = 0; same && a < rep.size(); ++a) {
    auto orbit = parse_orbit(rep.vertices[a].label, "rho_");
    std::size_t b = 0;
    while (b < inter.size() && parse_orbit(inter.vertices[b].label, "E_") != orbit) ++b;
    if (b == inter.size()) {
      same = false;
      break;
    }
    perm[a] = b;
    same = rep.vertices[a].mult == inter.vertices[b].mult;
  }
  for (std::size_t a = 0; same && a < rep.size(); ++a)
    for (std::size_t b = 0; b < rep.size(); ++b) same = same && rep.adjacency[a][b] == inter.adjacency[perm[a]][perm[b]];
  r.add("representation graph = intersection graph via V_i <-> E_i", same,
        same ? std::string{} : "representation " + to_json(rep) + "intersection " + to_json(inter));
  if (n >= 3) {
    auto label_rep = classify(rep), label_int = classify(inter);
    r.add("same diagram", label_rep.name == label_int.name, label_rep.to_string() + " / " + label_int.to_string());
  }

  // tautological degrees against dim Hom(rho_i, rho_j)
  auto deg = tautological_degrees(n);
  bool identity = true;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) identity = identity && deg[i - 1][j - 1] == (i == j ? 1 : 0);
  r.add("tautological degree matrix = Hom(rho_i, rho_j)", identity, matrix_text(deg));

  // clusters and stratification: origins, interior points of every curve, random chart points
  bool clusters = true, strata = true, dichotomy = true, restriction = true, off_fiber = true;
  std::string bad;
  for (int i = 0; i < n; ++i) {
    IdealBasis origin = cluster_ideal_at(n, i, 0, 0);
    clusters = clusters && verify_cluster(origin, n).passed();
    auto v = v_of_I(origin, n);
    std::vector<int> expected;
    if (i >= 1) expected.push_back(i);
    if (i + 1 <= n - 1) expected.push_back(i + 1);
    dichotomy = dichotomy && v.dichotomy();
    if (v.support() != expected) {
      strata = false;
      bad += " origin of U_" + std::to_string(i) + ": [" + join(v.support()) + "]";
    }
  }
  const std::vector<std::pair<int, int>> samples{{1, 1}, {1, 2}, {2, 1}};
  for (int i = 1; i < n; ++i)
    for (const auto& [a, b] : samples) {
      IdealBasis ideal = restrict_to_E(n, i, a, b);
      clusters = clusters && verify_cluster(ideal, n).passed();
      IdealBasis lower = cluster_ideal_at(n, i - 1, Z(Rational(a, b)), 0);
      IdealBasis upper = cluster_ideal_at(n, i, 0, Z(Rational(b, a)));
      restriction = restriction && ideal.groebner_basis() == lower.groebner_basis() &&
                    ideal.groebner_basis() == upper.groebner_basis();
      auto v = v_of_I(ideal, n);
      dichotomy = dichotomy && v.dichotomy();
      if (v.support() != std::vector<int>{i}) {
        strata = false;
        bad += " (" + std::to_string(a) + ":" + std::to_string(b) + ") on E_" + std::to_string(i) + ": [" +
               join(v.support()) + "]";
      }
    }
  std::mt19937 rng(20240601);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < 5; ++k) {
      IdealBasis ideal = cluster_ideal_at(n, i, random_nonzero(rng), random_nonzero(rng));
      clusters = clusters && verify_cluster(ideal, n).passed();
      try {
        v_of_I(ideal, n);
        off_fiber = false;
      } catch (const std::invalid_argument&) {
      }
    }
  r.add("clusters have dimension n and the regular character", clusters);
  r.add("restrictions agree with both charts", restriction);
  r.add("V(I) meets rho_j exactly on E_j", strata, bad);
  r.add("V(I) irreducible or two distinct irreducibles", dichotomy);
  r.add("points off the exceptional fiber rejected", off_fiber);
  return r;
}

}  // namespace mckay
