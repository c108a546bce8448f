#pragma once

// Toric resolution of A^2 / (Z/n): the fan, the exceptional curves and their
// intersection graph, the cluster families on the affine charts, the
// representation V(I) attached to a point of the exceptional fiber and the
// degrees of the tautological sheaves on the exceptional curves.

#include <array>
#include <string>
#include <vector>

#include "mckay/galois.hpp"
#include "mckay/graphs.hpp"
#include "mckay/groups.hpp"
#include "mckay/polynomial.hpp"

namespace mckay {

using Exponent = std::array<long, 2>;

struct Fan {
  int n = 2;
  std::vector<Exponent> rays;                     // v_i = (n - i, i), i = 0..n
  std::vector<Exponent> generators;               // primitive generator of ray i in N' coordinates
  std::vector<std::array<int, 2>> cones;          // sigma_i = (v_i, v_{i+1}), i = 0..n-1
  std::vector<std::array<Exponent, 2>> charts;    // (s_i, t_i) as exponents of (x, y)

  int curves() const { return n - 1; }
};

/// Fan of the cyclic quotient singularity of order n >= 2.
Fan build_fan(int n);

/// Coordinates of a vector of Q^2 in the basis (1,0), (1/n)(n-1,1) of N'.
std::array<Rational, 2> lattice_coordinates(int n, const Rational& p, const Rational& q);

/// Unimodular cones, integral chart monomials and the duality between the
/// chart monomials and the cone generators.
Report verify_fan(const Fan& fan);

/// -k for v_{i-1} + v_{i+1} = k v_i, one entry per interior ray i = 1..n-1.
/// Throws std::logic_error when the relation is not integral.
std::vector<int> self_intersections(const Fan& fan);

/// Permutation of the rays 0..n induced by the Galois action of the form:
/// identity for the mu form, i -> n - i for the constant form with n >= 3.
std::vector<int> ray_action(const Fan& fan, FormKind kind);

/// Intersection graph of the exceptional curves E_1..E_{n-1}, folded along the
/// orbits of ray_action (empty for the split graph).
McKayGraph intersection_graph(const Fan& fan, const std::vector<int>& ray_action = {});

/// x_1' = x_1 - xi x_2 and x_2' = x_1 - xi^-1 x_2 diagonalize the companion
/// matrix [[0, -1], [1, xi + xi^-1]] and are interchanged by xi -> xi^-1.
Report check_coordinate_change(int n);

/// <x^{i+1} - s y^{n-i-1}, xy - st, y^{n-i} - t x^i> on the chart U_i.
IdealBasis cluster_ideal_at(int n, int chart, const CyclotomicNumber& s, const CyclotomicNumber& t);

/// Cluster over the point (a : b) of E_i, (a, b) != (0, 0).
/// Throws std::invalid_argument for (0, 0) or a curve index outside 1..n-1.
IdealBasis restrict_to_E(int n, int curve, const CyclotomicNumber& a, const CyclotomicNumber& b);

/// Multiplicity of rho_j in the quotient K[x,y]/I, grading x^p y^q by
/// rho_{(p - q) mod n}; empty when the quotient is infinite.
std::vector<int> quotient_character(IdealBasis& ideal, int n);

/// Finite quotient of dimension n carrying the regular character.
Report verify_cluster(IdealBasis& ideal, int n);

struct VofI {
  std::vector<std::string> basis;  // representatives of a basis of V(I)
  std::vector<int> grades;         // rho index of each representative
  std::vector<int> decomposition;  // multiplicity of rho_j, j = 0..n-1

  /// Irreducible, or two non-isomorphic irreducibles.
  bool dichotomy() const;
  /// Indices j with Hom(V(I), rho_j) != 0.
  std::vector<int> support() const;
};

/// V(I) = Ibar / mbar Ibar inside S/(x^n, y^n, xy). Throws
/// std::invalid_argument if I does not contain (x^n, y^n, xy).
VofI v_of_I(IdealBasis& ideal, int n);

/// Monomials generating the rho_j part of O_Z over the chart U_i,
/// read off the monomial cluster at the chart origin; index j = 0..n-1.
std::vector<Monomial> chart_generators(int n, int chart);

/// deg(F_j restricted to E_i) for i, j = 1..n-1 from the transition
/// exponents of the chart generators along E_i.
IntMatrix tautological_degrees(int n);

/// Folded representation graph against folded intersection graph under
/// V_i <-> E_i, orbit compatibility, self-intersections, degree matrix, and
/// cluster dimensions and the stratification criterion at sampled points.
/// Throws std::invalid_argument unless the form is a cyclic mu or constant form.
Report verify_mckay_cyclic(const GaloisForm& form);

}  // namespace mckay
