#include "mckay/modular.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace mckay {

int mod(std::int64_t a, int m) {
  std::int64_t r = a % m;
  if (r < 0) r += m;
  return static_cast<int>(r);
}

int euler_phi(int m) {
  if (m < 1) throw std::invalid_argument("euler_phi: m must be positive");
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<int> divisors(int m) {
  std::vector<int> out;
  for (int d = 1; d <= m; ++d)
    if (m % d == 0) out.push_back(d);
  return out;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  if (n == 0) throw std::invalid_argument("prime_factors: zero");
  if (n < 0) n = -n;
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<int> units_mod(int m) {
  if (m == 1) return {0};
  std::vector<int> out;
  for (int k = 1; k < m; ++k)
    if (std::gcd(k, m) == 1) out.push_back(k);
  return out;
}

int inverse_mod(int k, int m) {
  k = mod(k, m);
  for (int j : units_mod(m))
    if (mod(static_cast<std::int64_t>(j) * k, m) == mod(1, m)) return j;
  throw std::invalid_argument("inverse_mod: " + std::to_string(k) + " is not a unit mod " +
                              std::to_string(m));
}

std::vector<int> subgroup_closure(int m, std::span<const int> gens) {
  std::set<int> elems{mod(1, m)};
  std::vector<int> frontier{mod(1, m)};
  std::vector<int> g;
  for (int h : gens) {
    int r = mod(h, m);
    if (std::gcd(r, m) != 1 && m != 1)
      throw std::invalid_argument("generator " + std::to_string(h) + " is not a unit mod " +
                                  std::to_string(m));
    g.push_back(r);
  }
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int e : frontier)
      for (int h : g) {
        int p = mod(static_cast<std::int64_t>(e) * h, m);
        if (elems.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return {elems.begin(), elems.end()};
}

std::vector<int> lift_subgroup(int m, std::span<const int> sub, int L) {
  if (L % m != 0) throw std::invalid_argument("lift_subgroup: modulus must divide L");
  std::set<int> target;
  for (int h : sub) target.insert(mod(h, m));
  std::vector<int> out;
  for (int k : units_mod(L))
    if (target.count(mod(k, m))) out.push_back(k);
  return out;
}

std::vector<int> generating_set(int m, std::span<const int> sub) {
  std::vector<int> gens;
  std::vector<int> generated = subgroup_closure(m, gens);
  for (int h : sub) {
    if (std::binary_search(generated.begin(), generated.end(), mod(h, m))) continue;
    gens.push_back(mod(h, m));
    generated = subgroup_closure(m, gens);
  }
  return gens;
}

}  // namespace mckay
