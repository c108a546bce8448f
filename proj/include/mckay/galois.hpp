#pragma once

// Abelian number fields K inside Q(zeta_m), presented as fixed fields of a
// subgroup H of (Z/m)^*, and the Galois actions on character tables that
// describe the K-forms of the finite subgroup schemes of SL(2).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mckay/groups.hpp"
#include "mckay/real_interval.hpp"

namespace mckay {

class FieldSpec {
 public:
  /// Q.
  FieldSpec() = default;
  /// Fixed field of <generators> in Q(zeta_m). Throws std::invalid_argument on non-units.
  FieldSpec(int m, std::vector<int> generators);

  /// Syntax `m=<m>,H=<k1,k2,...>`; `m=1,H=` is Q, an empty H with m > 1 is Q(zeta_m).
  static FieldSpec parse(std::string_view text);
  static FieldSpec rationals() { return {}; }
  static FieldSpec cyclotomic(int m) { return FieldSpec(m, {}); }
  /// Q(zeta_m + zeta_m^-1).
  static FieldSpec real_cyclotomic(int m);

  int modulus() const { return m_; }
  const std::vector<int>& generators() const { return generators_; }
  std::string to_string() const;

  /// The subgroup <H> of (Z/m)^*, sorted.
  const std::vector<int>& subgroup() const { return subgroup_; }
  /// Gal(Q(zeta_L)/K) for a multiple L of the modulus.
  std::vector<int> galois_group_at(int L) const;
  /// [K : Q].
  int degree() const;
  bool contains(const CyclotomicNumber& a) const;
  /// K is totally real (equivalently, has a real embedding, K being Galois).
  bool is_real() const;
  /// One residue k per embedding of K into C: coset representatives of <H>.
  std::vector<int> embeddings() const;
  /// Image of an element of K under the embedding indexed by k, as a real enclosure.
  RealEmbedding embed(const CyclotomicNumber& a, int k, int precision_bits) const;
  /// Certified sign of a nonzero real element of K under embedding k.
  int sign(const CyclotomicNumber& a, int k) const;
  /// A Q-basis of K made of traces of roots of unity.
  std::vector<CyclotomicNumber> basis() const;

  /// Equality of the fields, independent of presentation.
  bool same_field(const FieldSpec& other) const;

 private:
  int m_ = 1;
  std::vector<int> generators_;
  std::vector<int> subgroup_{0};
};

enum class FormKind { Constant, MuCyclic, TwistedBD };

FormKind parse_form_kind(std::string_view text);
std::string to_string(FormKind k);

class GaloisForm {
 public:
  /// Validates the form invariants; throws std::invalid_argument when violated.
  GaloisForm(GroupId group, FieldSpec field, FormKind kind);

  const GroupId& group() const { return group_; }
  const FieldSpec& field() const { return field_; }
  FormKind kind() const { return kind_; }

  /// Conductor at which Gamma = Aut_K(L) is represented.
  int conductor() const { return conductor_; }
  /// All of Gamma, as residues mod conductor().
  std::vector<int> gamma() const;
  /// A small generating set of Gamma.
  std::vector<int> gamma_generators() const;
  /// Permutation of conjugacy classes induced by gamma on the points.
  std::vector<std::size_t> class_permutation(int gamma, const CharacterTable& t) const;

 private:
  GroupId group_;
  FieldSpec field_;
  FormKind kind_;
  int conductor_ = 1;
};

/// chi -> chi^gamma as a permutation of table rows. Throws std::logic_error
/// when a twisted character is not a row of the table.
std::vector<std::size_t> row_permutation(const GaloisForm& form, const CharacterTable& t, int gamma);

struct CharacterAction {
  std::vector<int> generators;
  std::vector<std::vector<std::size_t>> permutations;  // one per generator
};

CharacterAction character_action(const GaloisForm& form, const CharacterTable& t);

struct OrbitPartition {
  std::vector<std::vector<std::size_t>> orbits;  // sorted, ordered by least element
  bool multiplicity_free = false;

  std::size_t orbit_of(std::size_t row) const;
};

/// Orbits of the generated permutation group; checks <chi_O, chi_O> = |O|.
OrbitPartition orbits(const CharacterAction& action, const CharacterTable& t);

/// Sum of the orbit's rows. For constant forms every value must lie in K;
/// throws std::domain_error otherwise.
Character rational_character(const std::vector<std::size_t>& orbit, const CharacterTable& t, const GaloisForm& form);

}  // namespace mckay
