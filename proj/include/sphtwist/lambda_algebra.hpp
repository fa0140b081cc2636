#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sphtwist/linalg.hpp"

namespace sphtwist {

/// A vertex of Q_k: bar i in Z/k or i in Z/3k.
struct LambdaVertex {
  bool bar = false;
  int index = 0;

  friend auto operator<=>(const LambdaVertex&, const LambdaVertex&) = default;
};

/// "bar2" or "5".
std::string to_string(const LambdaVertex& v);
/// Accepts "bar2", "bar 2" and "5".
LambdaVertex parse_lambda_vertex(std::string_view text);

struct LambdaArrow {
  std::string name;  // alpha_i or beta_i
  int source = 0;    // vertex ids
  int target = 0;
};

/// A basis path; arrows are listed in the order they are traversed, so the
/// path alpha_{i+1} beta_i of the paper is {beta_i, alpha_{i+1}}.
struct BasisPath {
  std::vector<int> arrows;
  int source = 0;
  int target = 0;
  std::size_t degree() const { return arrows.size(); }
};

using SparseVector = std::map<std::size_t, linalg::Rational>;

/// The algebra kQ_k / I_k with a monomial basis and its multiplication.
///
/// Vertex ids: bar i is i (0 <= i < k) and i is k + i (0 <= i < 3k).
/// Arrow ids: alpha_i is i and beta_i is 3k + i.
class AlgebraModel {
 public:
  int k() const { return k_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<LambdaVertex>& vertices() const { return vertices_; }
  int vertex_id(const LambdaVertex& v) const;
  const std::vector<LambdaArrow>& arrows() const { return arrows_; }

  const std::vector<BasisPath>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  /// Highest degree with a nonzero basis element.
  std::size_t top_degree() const { return top_degree_; }

  /// Coordinates of a traversal-ordered path in the basis; zero for paths
  /// that do not compose or lie in the ideal.
  SparseVector reduce(const std::vector<int>& path) const;
  /// Basis element a followed by basis element b (the product b a of the paper).
  SparseVector multiply(std::size_t a, std::size_t b) const;
  SparseVector multiply(const SparseVector& a, const SparseVector& b) const;

  /// Generators of I_k as traversal-ordered paths with coefficients.
  const std::vector<std::vector<std::pair<std::vector<int>, int>>>& relations() const { return relations_; }

  std::string path_name(const std::vector<int>& path, int source) const;

  friend AlgebraModel build_lambda(int k, std::size_t max_degree);

 private:
  struct DegreeBlock {
    std::vector<std::vector<int>> paths;  // all paths of this degree, source and target
    std::map<std::vector<int>, std::size_t> index;
    linalg::Matrix ideal{0, 0};           // RREF of the ideal's span
    std::vector<std::size_t> pivots;
    std::map<std::size_t, std::size_t> basis_of_path;  // path index -> basis index
  };

  int k_ = 1;
  std::vector<LambdaVertex> vertices_;
  std::vector<LambdaArrow> arrows_;
  std::vector<BasisPath> basis_;
  std::size_t top_degree_ = 0;
  std::vector<DegreeBlock> blocks_;  // by degree, from 1
  std::vector<std::vector<std::pair<std::vector<int>, int>>> relations_;
};

/// Throws InvalidInput for k < 1 and InternalError when the quotient has
/// not vanished by max_degree.
AlgebraModel build_lambda(int k, std::size_t max_degree = 12);

/// dim Hom(P_x, P_y) = dim e_y Lambda e_x: basis paths from x to y.
int hom_dim_proj(const AlgebraModel& model, int x, int y);

/// C[x][y] = hom_dim_proj(x, y).
std::vector<std::vector<int>> cartan_matrix(const AlgebraModel& model);

/// Every relation reduces to zero.
bool relations_vanish(const AlgebraModel& model);

/// Dimension of the socle of P_x = e_x Lambda and the vertex y with
/// socle = top(P_y) when it is simple (-1 otherwise).
struct SocleData {
  std::size_t dimension = 0;
  int vertex = -1;
};
SocleData socle_of_projective(const AlgebraModel& model, int x);

/// nu(e_i) = e_{i-1}, nu(e_bar i) = e_bar(i-1), nu(alpha_i) = alpha_{i-1},
/// nu(beta_i) = beta_{i-1}.
struct NakayamaAuto {
  std::vector<int> vertex_perm;
  std::vector<int> arrow_perm;
  int order = 0;
};

/// Builds nu, checks that it preserves the relations and that the socle of
/// every P_x is simple and isomorphic to top(P_{nu(x)}); throws
/// SelfinjectivityViolation otherwise.
NakayamaAuto nakayama(const AlgebraModel& model);

/// A sequence of indecomposable projectives with its spherical data.
struct ProjectiveSequence {
  std::string label;
  int sphericity = 0;
  std::vector<int> degrees;
  std::vector<int> members;  // vertex ids
};

struct LambdaSphericalData {
  ProjectiveSequence e;   // P_bar0 .. P_bar(k-1)
  ProjectiveSequence e2;  // P_0 .. P_(3k-1)
  int a = 0;              // a_{E,E'}
  int a2 = 0;             // a_{E',E}
};

/// Throws ValidationFailure when the Cartan data break the spherical pattern
/// Hom(E_i, E_j) = [j = i] + [j = i + 1] for either sequence.
LambdaSphericalData spherical_data(const AlgebraModel& model);

/// Matrix of the twist along seq on K_0 in the basis [P_x] (columns are images):
/// [X] -> [X] - sum_i chi(E_i, X) [E_i].
std::vector<std::vector<long>> k0_twist(const AlgebraModel& model, const ProjectiveSequence& seq);

/// Index and shift of the central element (T_E T_E')^r' on member i of a
/// sequence when sum_l dim Hom(E, E'[l]) = k' = r k: the index moves by -3
/// (r = 1, 3) or -2 (r = 2, plus k for E') and the shift is
/// c - m_{i-1} - ... with c = 4, 3, 5.
struct CentralMemberAction {
  int index_shift = 0;
  int shift = 0;
};
CentralMemberAction central_member_action(int r, const ProjectiveSequence& seq, std::size_t i, bool primed,
                                          int k);

/// Checks the symbolic action above against K_0: (T_E T_E')^3 sends each
/// [P_x] to (-1)^shift [P_{x'}] with x' the moved index, on both sequences.
bool central_action_matches_k0(const AlgebraModel& model);

}  // namespace sphtwist
