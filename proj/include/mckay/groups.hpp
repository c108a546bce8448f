#pragma once

// The finite subgroups of SL(2,C): cyclic, binary dihedral, binary
// tetrahedral, binary octahedral and binary icosahedral groups, with their
// conjugacy classes and exact character tables.

#include <string>
#include <string_view>
#include <vector>

#include "mckay/cyclotomic.hpp"

namespace mckay {

enum class Family { Cyclic, BinaryDihedral, BinaryTetrahedral, BinaryOctahedral, BinaryIcosahedral };

struct GroupId {
  Family family = Family::Cyclic;
  int n = 1;  // cyclic order or binary dihedral parameter; unused otherwise

  /// Syntax `cyclic:n | bd:n | bt | bo | bi`. Throws std::invalid_argument.
  static GroupId parse(std::string_view text);

  static GroupId cyclic(int n);
  static GroupId binary_dihedral(int n);
  static GroupId bt() { return {Family::BinaryTetrahedral, 0}; }
  static GroupId bo() { return {Family::BinaryOctahedral, 0}; }
  static GroupId bi() { return {Family::BinaryIcosahedral, 0}; }

  int order() const;
  /// Least common multiple of element orders; all character values lie in Q(zeta_exponent).
  int exponent() const;
  std::string to_string() const;

  friend bool operator==(const GroupId&, const GroupId&) = default;
};

struct ConjugacyClass {
  std::string label;
  int size = 1;
};

using Character = std::vector<CyclotomicNumber>;

struct CharacterTable {
  GroupId group;
  std::vector<ConjugacyClass> classes;
  std::vector<std::string> row_labels;
  std::vector<Character> chars;
  std::size_t trivial_index = 0;
  /// Rows summing to the natural character: one row, or (rho_1, rho_{n-1}) for
  /// cyclic groups, where both indices are taken mod n and may coincide.
  std::vector<std::size_t> natural_index;

  std::size_t size() const { return chars.size(); }
  int group_order() const;
  int degree(std::size_t row) const;
  std::size_t class_index(std::string_view label) const;
  std::size_t row_index(std::string_view label) const;
};

CharacterTable character_table(const GroupId& g);

/// Trace character of the defining two-dimensional representation.
Character natural_character(const CharacterTable& t);
Character natural_character(const GroupId& g);

/// (1/|G|) sum_c |c| chi(c) conj(psi(c)).
CyclotomicNumber inner_product(const Character& chi, const Character& psi, const CharacterTable& t);

Character operator+(const Character& a, const Character& b);
/// Pointwise product (tensor product of representations).
Character operator*(const Character& a, const Character& b);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;

  bool passed() const;
  void add(std::string name, bool ok, std::string detail = {});
  std::string to_text() const;
};

/// Row and column orthogonality, sum of squared degrees, class sizes,
/// integrality of degrees and the value field.
Report verify_table(const CharacterTable& t);

/// Text layout: class headers, one line per irreducible, class sizes last.
std::string format_table(const CharacterTable& t);

}  // namespace mckay
