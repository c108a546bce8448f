#pragma once

// Elementary arithmetic modulo m: units, subgroups of (Z/m)^*, divisors.

#include <cstdint>
#include <span>
#include <vector>

namespace mckay {

/// Non-negative residue of a modulo m (m >= 1).
int mod(std::int64_t a, int m);

int euler_phi(int m);

/// Positive divisors of m in increasing order.
std::vector<int> divisors(int m);

/// Prime factors of |n| without multiplicity, increasing. n != 0.
std::vector<std::int64_t> prime_factors(std::int64_t n);

/// Residues in [0, m) coprime to m. For m = 1 this is {0}.
std::vector<int> units_mod(int m);

/// Inverse of a unit k modulo m.
int inverse_mod(int k, int m);

/// The subgroup of (Z/m)^* generated by gens, sorted. Always contains 1 mod m.
/// Throws std::invalid_argument if a generator is not a unit.
std::vector<int> subgroup_closure(int m, std::span<const int> gens);

/// Preimage of the subgroup `sub` of (Z/m)^* under reduction (Z/L)^* -> (Z/m)^*.
/// Requires m | L.
std::vector<int> lift_subgroup(int m, std::span<const int> sub, int L);

/// A small deterministic generating set of a subgroup of (Z/m)^*: scans the
/// elements in increasing order and keeps those not already generated.
std::vector<int> generating_set(int m, std::span<const int> sub);

}  // namespace mckay
