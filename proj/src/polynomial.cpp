#include "mckay/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "mckay/expression.hpp"

namespace mckay {

Monomial Monomial::variable(int nvars, int index, int power) {
  Monomial m = one(nvars);
  m.exponents[static_cast<std::size_t>(index)] = power;
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (int e : exponents) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] > other.exponents[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exponents.size(); ++i) r.exponents[i] += b.exponents[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exponents.size(); ++i) {
    r.exponents[i] -= b.exponents[i];
    if (r.exponents[i] < 0) throw std::invalid_argument("monomial division is not exact");
  }
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exponents.size(); ++i)
    r.exponents[i] = std::max(a.exponents[i], b.exponents[i]);
  return r;
}

bool monomial_less(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (order == MonomialOrder::GradedLex) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
  }
  return a.exponents < b.exponents;
}

Polynomial Polynomial::constant(int nvars, MonomialOrder order, const CyclotomicNumber& c) {
  return monomial(Monomial::one(nvars), c, order);
}

Polynomial Polynomial::monomial(const Monomial& m, const CyclotomicNumber& c, MonomialOrder order) {
  Polynomial p(m.nvars(), order);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.front();
}

void Polynomial::add_term(const Monomial& m, const CyclotomicNumber& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [this](const Term& t, const Monomial& key) {
    return monomial_less(key, t.monomial, order_);
  });
  if (it != terms_.end() && it->monomial == m) {
    it->coeff += c;
    if (it->coeff.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, Term{m, c});
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

void check_compatible(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars() || a.order() != b.order())
    throw std::invalid_argument("polynomials live in different rings");
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  check_compatible(a, b);
  Polynomial r = a;
  for (const auto& t : b.terms_) r.add_term(t.monomial, t.coeff);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  check_compatible(a, b);
  Polynomial r = a;
  for (const auto& t : b.terms_) r.add_term(t.monomial, -t.coeff);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_compatible(a, b);
  Polynomial r(a.nvars_, a.order_);
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) r.add_term(s.monomial * t.monomial, s.coeff * t.coeff);
  return r;
}

Polynomial Polynomial::scaled(const CyclotomicNumber& c, const Monomial& m) const {
  Polynomial r(nvars_, order_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().coeff.inverse(), Monomial::one(nvars_));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  return true;
}

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& basis) {
  DivisionResult out{{}, Polynomial(f.nvars(), f.order())};
  for (const auto& g : basis) {
    check_compatible(f, g);
    out.quotients.emplace_back(f.nvars(), f.order());
  }
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term lt = p.leading();
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].is_zero()) continue;
      const Term& lg = basis[i].leading();
      if (!lg.monomial.divides(lt.monomial)) continue;
      CyclotomicNumber c = lt.coeff / lg.coeff;
      Monomial m = lt.monomial / lg.monomial;
      out.quotients[i] = out.quotients[i] + Polynomial::monomial(m, c, f.order());
      p = p - basis[i].scaled(c, m);
      reduced = true;
      break;
    }
    if (!reduced) {
      Polynomial head = Polynomial::monomial(lt.monomial, lt.coeff, f.order());
      out.remainder = out.remainder + head;
      p = p - head;
    }
  }
  return out;
}

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Term& lf = f.leading();
  const Term& lg = g.leading();
  Monomial l = lcm(lf.monomial, lg.monomial);
  return f.scaled(lf.coeff.inverse(), l / lf.monomial) - g.scaled(lg.coeff.inverse(), l / lg.monomial);
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exponents.size(); ++i)
    if (a.exponents[i] > 0 && b.exponents[i] > 0) return false;
  return true;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw std::invalid_argument("buchberger needs at least one generator");
  const MonomialOrder order = gens.front().order();
  std::vector<Polynomial> g;
  for (const auto& p : gens) {
    check_compatible(gens.front(), p);
    if (!p.is_zero()) g.push_back(p.monic());
  }
  if (g.empty()) return {};

  std::vector<Pair> pairs;
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      pairs.push_back({i, j, lcm(g[i].leading().monomial, g[j].leading().monomial)});
  };
  for (std::size_t j = 1; j < g.size(); ++j) add_pairs(j);

  // Normal strategy: smallest lcm first, ties broken by the pair's leading monomials.
  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    if (!(a.lcm == b.lcm)) return monomial_less(a.lcm, b.lcm, order);
    const auto& ai = g[a.i].leading().monomial.exponents;
    const auto& bi = g[b.i].leading().monomial.exponents;
    if (ai != bi) return ai < bi;
    const auto& aj = g[a.j].leading().monomial.exponents;
    const auto& bj = g[b.j].leading().monomial.exponents;
    if (aj != bj) return aj < bj;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
    Pair p = *it;
    pairs.erase(it);
    if (coprime(g[p.i].leading().monomial, g[p.j].leading().monomial)) continue;
    Polynomial r = divide(s_polynomial(g[p.i], g[p.j]), g).remainder;
    if (r.is_zero()) continue;
    g.push_back(r.monic());
    add_pairs(g.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mi = g[i].leading().monomial;
      const Monomial& mj = g[j].leading().monomial;
      if (mj.divides(mi) && (!(mi == mj) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }

  // Interreduce tails.
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const Term& lt = minimal[i].leading();
    Polynomial head = Polynomial::monomial(lt.monomial, lt.coeff, order);
    Polynomial tail = divide(minimal[i] - head, others).remainder;
    reduced.push_back((head + tail).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return monomial_less(a.leading().monomial, b.leading().monomial, order);
  });
  return reduced;
}

const std::vector<Polynomial>& IdealBasis::groebner_basis() {
  if (!groebner) groebner = buchberger(generators);
  return *groebner;
}

bool IdealBasis::contains(const Polynomial& f) { return divide(f, groebner_basis()).remainder.is_zero(); }

QuotientBasis quotient_basis(const std::vector<Polynomial>& gb) {
  QuotientBasis out;
  if (gb.empty()) {
    out.infinite = true;
    return out;
  }
  const int nvars = gb.front().nvars();
  const MonomialOrder order = gb.front().order();
  std::vector<Monomial> leads;
  for (const auto& p : gb) leads.push_back(p.leading().monomial);

  // Each variable needs a pure power among the leading monomials.
  std::vector<int> bound(static_cast<std::size_t>(nvars), -1);
  for (const auto& m : leads) {
    int support = -1, count = 0;
    for (int v = 0; v < nvars; ++v)
      if (m.exponents[static_cast<std::size_t>(v)] > 0) {
        support = v;
        ++count;
      }
    if (count == 0) {
      return out;  // unit ideal: zero-dimensional quotient
    }
    if (count == 1) {
      int& b = bound[static_cast<std::size_t>(support)];
      int e = m.exponents[static_cast<std::size_t>(support)];
      if (b < 0 || e < b) b = e;
    }
  }
  for (int b : bound)
    if (b < 0) {
      out.infinite = true;
      return out;
    }

  Monomial cur = Monomial::one(nvars);
  for (;;) {
    bool standard = std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(cur); });
    if (standard) out.monomials.push_back(cur);
    int v = 0;
    for (; v < nvars; ++v) {
      auto& e = cur.exponents[static_cast<std::size_t>(v)];
      if (++e < bound[static_cast<std::size_t>(v)]) break;
      e = 0;
    }
    if (v == nvars) break;
  }
  std::sort(out.monomials.begin(), out.monomials.end(),
            [&](const Monomial& a, const Monomial& b) { return monomial_less(a, b, order); });
  return out;
}

std::string to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t v = 0; v < m.exponents.size(); ++v) {
    int e = m.exponents[v];
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += names.at(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    CyclotomicNumber c = minimize_conductor(t.coeff);
    bool constant_monomial = t.monomial.degree() == 0;
    bool negative = c.is_rational() && c.to_rational() < 0;
    if (negative) c = -c;
    if (!first) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    first = false;
    std::string cs = to_string(c);
    if (!c.is_rational()) cs = "(" + cs + ")";
    if (constant_monomial)
      out += cs;
    else if (c == CyclotomicNumber(1))
      out += to_string(t.monomial, names);
    else
      out += cs + "*" + to_string(t.monomial, names);
  }
  return out;
}

}  // namespace mckay
