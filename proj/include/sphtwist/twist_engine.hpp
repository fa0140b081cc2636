#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sphtwist/artin_groups.hpp"
#include "sphtwist/mesh_model.hpp"

namespace sphtwist {

/// Where the twist along a sequence sends member i: T_E(E_i) = E_index[shift].
struct MemberImage {
  std::size_t index = 0;
  int shift = 0;

  friend bool operator==(const MemberImage&, const MemberImage&) = default;
};

MemberImage twist_on_member(const SphericalSequenceSpec& spec, std::size_t i);

/// An autoequivalence recorded by where it sends each window vertex.
///
/// The map is defined on a subset of the window (all of it for the builtin
/// and derived twists); images may leave the window. The model is shared.
class QuiverAutomorphism {
 public:
  QuiverAutomorphism(std::shared_ptr<const MeshModel> model, std::map<Vertex, Vertex> vertex_map,
                     std::string label);

  static QuiverAutomorphism identity(std::shared_ptr<const MeshModel> model);

  const MeshModel& model() const { return *model_; }
  const std::shared_ptr<const MeshModel>& model_ptr() const { return model_; }
  const std::map<Vertex, Vertex>& vertex_map() const { return map_; }
  const std::string& label() const { return label_; }
  std::size_t domain_size() const { return map_.size(); }

  bool defined_at(const Vertex& v) const { return map_.count(v) > 0; }
  std::optional<Vertex> try_apply(const Vertex& v) const;
  /// Throws InsufficientWindow outside the domain.
  Vertex operator()(const Vertex& v) const;

  /// Vertices v in the domain with shift(v), serre(v) also in the domain
  /// where T(shift v) != shift(T v) or T(serre v) != serre(T v).
  std::vector<Vertex> compatibility_failures() const;
  /// Some arrow x -> y between domain vertices whose images are not joined
  /// by an arrow.
  std::vector<std::pair<Vertex, Vertex>> broken_arrows() const;

 private:
  std::shared_ptr<const MeshModel> model_;
  std::map<Vertex, Vertex> map_;
  std::string label_;
};

/// a after b, on {v : b(v) defined and a defined at b(v)}. Throws
/// InsufficientWindow when fewer than min_domain vertices survive.
QuiverAutomorphism compose(const QuiverAutomorphism& a, const QuiverAutomorphism& b,
                           std::size_t min_domain = 0);
/// Inverse on the images that fall inside the window.
QuiverAutomorphism invert(const QuiverAutomorphism& a);

/// Number of vertices in one period of the shift functor (all rows).
std::size_t shift_period_size(const MeshModel& model);

struct D4Actions {
  QuiverAutomorphism t_e;
  QuiverAutomorphism t_e2;
};

/// The vertex tables of T_E (row 1 sequence) and T_E' (row 2 sequence) on ZD4:
/// both fix rows 0 and move pos by one; T_E swaps rows 2 and 3, T_E' swaps
/// rows 1 and 3. Throws UnsupportedDiagram for other diagrams.
D4Actions builtin_d4_actions(std::shared_ptr<const MeshModel> model);

/// The vertex action of the twist along spec.
///
/// Members go where twist_on_member says. The rest is propagated along
/// arrows and tau: an image of a neighbour must be the matching neighbour
/// of the image, and among those candidates only ones whose Euler pairings
/// with probe vertices match [y] - sum_i chi(E_i, y) [E_i] survive.
/// Throws AmbiguousAction when several candidates survive or none does,
/// InsufficientWindow when the window cannot host the probes, and
/// InvalidInput for a sequence that fails check_spherical.
QuiverAutomorphism derive_automorphism(std::shared_ptr<const MeshModel> model,
                                       const SphericalSequenceSpec& spec);

/// Evaluates a word, rightmost letter first; generator i is gens.at(i).
QuiverAutomorphism evaluate_word(const GroupWord& word, const std::map<int, QuiverAutomorphism>& gens,
                                 std::size_t min_domain = 0);

/// True iff lhs and rhs act identically on their common domain. The common
/// domain must contain at least min_domain vertices; 0 selects one shift
/// period of the model.
bool verify_relation(const GroupWord& lhs, const GroupWord& rhs,
                     const std::map<int, QuiverAutomorphism>& gens, std::size_t min_domain = 0);

/// Class of an object up to shifting each member: the sorted shift-orbit
/// representatives.
struct SphClass {
  std::vector<Vertex> key;

  friend auto operator<=>(const SphClass&, const SphClass&) = default;
};

SphClass sph_class(const MeshModel& model, const std::vector<Vertex>& members);
std::string to_string(const SphClass& c);

/// Image of a class: each member is shifted into the map's domain first.
/// Throws InsufficientWindow when no shift of a member lies in the domain.
SphClass act_on_class(const QuiverAutomorphism& a, const SphClass& c);

struct LabelledGenerator {
  std::string name;
  QuiverAutomorphism action;
};

struct OrbitEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::string label;  // generator name, with "^-1" for inverses
};

struct OrbitGraph {
  std::vector<SphClass> nodes;  // seeds first, then BFS order
  std::vector<std::size_t> depth;
  std::vector<OrbitEdge> edges;

  std::optional<std::size_t> find(const SphClass& c) const;
};

/// Breadth-first closure of seeds under the generators and their inverses.
OrbitGraph orbit_sph(const std::vector<LabelledGenerator>& gens, const std::vector<SphClass>& seeds,
                     int max_depth);

/// Adjacency listing, one line per node.
std::string orbit_to_text(const OrbitGraph& g);
/// {"nodes":[{"id","depth","members":[[row,pos],...]}],"edges":[{"from","to","label"}]}
std::string orbit_to_json(const OrbitGraph& g);

enum class ExceptionalCase { A, B };

/// A: class(T_E'^2 E) == class(E). B: class(T_E E') == class(E').
/// Throws InvalidInput when E ~ E'.
bool detect_exceptional(std::shared_ptr<const MeshModel> model, const SphericalSequenceSpec& e,
                        const SphericalSequenceSpec& e2, ExceptionalCase which);

/// A finite piece of a group action with a partition into ping-pong sets.
struct PingPongSystem {
  std::size_t generator_count = 2;
  std::vector<std::string> element_names;
  /// Set index per element: i means the set of generator i, -1 none.
  std::vector<int> membership;
  /// Index of g^s x, or nothing when it lies outside the explored part.
  std::function<std::optional<std::size_t>(std::size_t g, long s, std::size_t x)> image;
};

struct PingPongViolation {
  std::size_t generator = 0;
  long power = 0;
  std::size_t element = 0;
  std::size_t image = 0;
};

/// Outcome of pingpong_certify. A certificate covers only the explored
/// elements and powers; it is bounded evidence, never a proof.
struct PingPongResult {
  bool certified = false;
  std::string status;  // "bounded evidence" or "refuted"
  std::size_t checks = 0;
  std::size_t unexplored = 0;
  std::optional<PingPongViolation> witness;
};

/// For every generator g, element x in a set other than g's and 1 <= |s| <=
/// exponent_bound, requires g^s x to lie in the set of g. Images outside the
/// explored part are counted, not held against the certificate. Also fails
/// when some generator's set is empty.
PingPongResult pingpong_certify(const PingPongSystem& system, long exponent_bound);

std::string to_json(const PingPongSystem& system, const PingPongResult& r);

/// The free group of the given rank acting on its reduced words of length
/// <= depth; set i holds the words starting with a power of generator i.
PingPongSystem free_group_pingpong(int depth, int rank = 2);
/// Z = <t> acting on [-radius, radius] by translation, with both generators
/// equal to t; sets are the positives and the negatives.
PingPongSystem integer_line_pingpong(int radius);
/// States (u_E, u_E') in [0, bound]^2 with T_E^s (p, q) = (p, |s| a p - q)
/// and T_E'^s (p, q) = (|s| a2 q - p, q); set 0 is u_E' > (a/2) u_E and set 1
/// is u_E > (a2/2) u_E'.
PingPongSystem u_table_pingpong(long a, long a2, long bound);

/// Lower bounds from the twist-growth lemma.
struct BoundState {
  long a = 0;    // a_{E,E'}
  long a2 = 0;   // a_{E',E}
  long u_e = 0;  // u_E(X)
  long u_e2 = 0; // u_E'(X)
  bool strict = false;  // X ~ E': the bounds are strict
  std::vector<long> A;  // A_1, A_2, ...
  std::vector<long> B;

  /// a u_E(X) - u_E'(X), plus one when strict.
  long floor() const;
};

/// Appends steps entries to A and B. Throws HypothesisViolated unless
/// a a2 >= 4 and a2 u_E'(X) <= (a a2 - 2) u_E(X).
BoundState lower_bound_propagate(BoundState state, int steps);

}  // namespace sphtwist
