#pragma once

// Extended and non-extended representation graphs of the finite subgroup
// schemes of SL(2,K), the bilinear form they determine, folding along
// Galois orbits, classification against the finite catalog and emission.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mckay/galois.hpp"
#include "mckay/groups.hpp"

namespace mckay {

using IntMatrix = std::vector<std::vector<int>>;

struct Vertex {
  std::string label;
  int mult = 1;
  int degree = 1;  // dimension over K; 0 for catalog templates
  bool trivial = false;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct McKayGraph {
  std::vector<Vertex> vertices;
  IntMatrix adjacency;  // off-diagonal edge counts, diagonal loop counts
  bool extended = true;
  std::optional<std::string> label;

  std::size_t size() const { return vertices.size(); }
  int loops(std::size_t v) const { return adjacency[v][v]; }

  friend bool operator==(const McKayGraph&, const McKayGraph&) = default;
};

/// dim Hom^G(W_i, V (x) W_j) as <chi_i, chi_V chi_j>. V must be the natural
/// character of t (std::invalid_argument otherwise); a value that is not a
/// non-negative integer throws std::domain_error.
int hom_dimension(const Character& i, const Character& j, const Character& v, const CharacterTable& t);

/// Split graph over C.
McKayGraph build_graph(const CharacterTable& t, bool extended);
/// Graph over K: vertices are the orbits of the action, multiplicities the
/// orbit sizes, edges summed over the orbits, loops from the orbit characters.
McKayGraph build_graph(const CharacterTable& t, const CharacterAction& action, bool extended);
McKayGraph build_graph(const GaloisForm& form, bool extended);

/// Folded edge counts by orbit summation against hom_dimension on orbit sums.
Report check_fold_consistency(const CharacterTable& t, const OrbitPartition& part);

/// Relabel vertices: vertex perm[i] of the result is vertex i of g.
McKayGraph permute(const McKayGraph& g, const std::vector<std::size_t>& perm);

/// (2 Id - A) d with A carrying 2 * loops on the diagonal and d the degrees.
std::vector<int> null_vector_defect(const McKayGraph& g);

/// a_ij = multiplicity of W_i in V (x) W_j over K, the alternative edge count.
IntMatrix multiplicity_matrix(const CharacterTable& t, const OrbitPartition& part);

struct BilinearForm {
  IntMatrix matrix;  // indexed by the orbits, trivial included
};

BilinearForm bilinear_form(const CharacterTable& t, const OrbitPartition& part);
/// Orbit partition into singletons.
OrbitPartition split_partition(const CharacterTable& t);

/// <V_i,V_j> = edges for i != j and <V_i,V_i>/2 = loops - multiplicity,
/// checked against the extended graph on the same orbits.
Report check_form_identities(const BilinearForm& form, const McKayGraph& extended_graph);

/// -form restricted to the non-trivial vertices is positive definite
/// (leading principal minors).
bool is_finite_type(const BilinearForm& form, std::size_t trivial_index);

enum class Shape { A, APrime, D, DPrime, DDoublePrime, E6, E6Prime, E7, E8 };

struct DiagramLabel {
  Shape shape = Shape::A;
  int n = 0;            // subscript of the catalog name
  std::string name;     // e.g. "(D_6)'"
  std::string dynkin;   // A, B, C, D, E, F or G
  int rank = 0;

  std::string dynkin_name() const;  // e.g. "B5", "F4"
  std::string to_string() const;    // "(D_6)' ~ B5"
};

/// Catalog graph for a shape. Throws std::invalid_argument for shapes the
/// catalog does not contain.
McKayGraph catalog_graph(Shape shape, int n, bool extended);
DiagramLabel make_label(Shape shape, int n);

class UnrecognizedGraph : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Backtracking isomorphism respecting trivial flags, multiplicities, loops
/// and edge counts.
bool isomorphic(const McKayGraph& a, const McKayGraph& b);

/// Match against the catalog; throws UnrecognizedGraph with the invariants.
DiagramLabel classify(const McKayGraph& g);

std::string to_dot(const McKayGraph& g);
std::string to_json(const McKayGraph& g);
std::string to_text(const McKayGraph& g);
/// Inverse of to_json; throws std::invalid_argument on malformed input.
McKayGraph graph_from_json(std::string_view text);

}  // namespace mckay
