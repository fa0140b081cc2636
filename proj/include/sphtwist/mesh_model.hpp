#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sphtwist {

/// A vertex (row, pos) of a translation quiver ZΓ, i.e. an indecomposable
/// object of the bounded derived category of a Dynkin quiver.
struct Vertex {
  int row = 0;
  int pos = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

std::string to_string(const Vertex& v);

/// Parses "(row,pos)" with optional whitespace.
Vertex parse_vertex(std::string_view text);

/// Objects are isomorphism classes of direct sums of indecomposables.
using Object = std::vector<Vertex>;

enum class DiagramKind { A, D4 };

struct Diagram {
  DiagramKind kind = DiagramKind::D4;
  int rank = 4;

  static Diagram d4() { return {DiagramKind::D4, 4}; }
  static Diagram a(int n) { return {DiagramKind::A, n}; }

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

std::string to_string(const Diagram& d);

/// Accepts "d4" and "a<n>" (case-insensitive).
Diagram parse_diagram(std::string_view text);

struct Window {
  int lo = 0;
  int hi = 0;

  int length() const { return hi - lo + 1; }
};

struct Arrow {
  Vertex source;
  Vertex target;
  std::string label;
};

/// Finite window of ZΓ together with its Serre and shift rules.
///
/// Coordinates: ZD4 has rows {0,1,2,3} with arrows (0,s)->(r,s) and
/// (r,s)->(0,s+1); ZA3 has rows {-1,0,1} with the same pattern around the
/// middle row 0. Every other ZA_n uses the linear layout: rows 1..n with
/// arrows (i,s)->(i+1,s) and (i,s)->(i-1,s+1). In all layouts the
/// Auslander-Reiten translation is tau(r,s) = (r,s-1).
///
/// Immutable after build.
class MeshModel {
 public:
  static MeshModel build(Diagram diagram, Window window);

  const Diagram& diagram() const { return diagram_; }
  const Window& window() const { return window_; }

  /// Rows in an order compatible with arrows inside one position.
  const std::vector<int>& rows() const { return rows_; }
  std::size_t row_count() const { return rows_.size(); }
  bool has_row(int row) const;

  bool contains(const Vertex& v) const;

  /// All window vertices ordered by (pos, row order); every arrow inside the
  /// window goes forward in this order.
  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t index_of(const Vertex& v) const;

  /// Arrows of the infinite quiver, not clipped to the window.
  std::vector<Vertex> successors(const Vertex& v) const;
  std::vector<Vertex> predecessors(const Vertex& v) const;
  std::string arrow_label(const Vertex& source, const Vertex& target) const;

  /// Arrows with both ends in the window.
  std::vector<Arrow> arrows() const;

  /// Number of meshes tau^{-1}x <- ... <- x lying entirely in the window.
  std::size_t complete_meshes() const;

  Vertex tau(const Vertex& v, int power = 1) const { return {v.row, v.pos - power}; }
  Vertex serre(const Vertex& v, int power = 1) const;
  Vertex shift(const Vertex& v, int power = 1) const;

  /// The unique shift of v with pos >= 0 whose predecessor in the shift
  /// orbit has pos < 0.
  Vertex shift_orbit_representative(const Vertex& v) const;

 private:
  MeshModel(Diagram d, Window w);

  int order_of(int row) const;

  Diagram diagram_;
  Window window_;
  std::vector<int> rows_;
  std::vector<Vertex> vertices_;
  std::map<Vertex, std::size_t> index_;
};

/// The data of a spherical sequence: members E_0..E_{k-1}, per-step degrees
/// m_i, and sphericity m.
struct SphericalSequenceSpec {
  std::string label;
  int sphericity = 0;
  std::vector<int> degrees;
  std::vector<Vertex> members;

  std::size_t length() const { return members.size(); }
};

struct SphericalReport {
  bool valid = true;
  int sphericity = 0;
  std::vector<std::string> violations;
};

/// dim Hom(x, y) in the mesh category, by knitting forward from x.
int hom_dim(const MeshModel& model, const Vertex& x, const Vertex& y);

/// Same value by exact linear algebra on the path spaces of the window
/// modulo the mesh ideal.
int hom_dim_oracle(const MeshModel& model, const Vertex& x, const Vertex& y);

/// Dimensions of Hom(x, v) for every window vertex v, by knitting.
std::vector<int> knit_from(const MeshModel& model, const Vertex& x);

/// Dimensions of Hom(x, v) for every window vertex v, by the oracle.
std::vector<int> path_space_dims_from(const MeshModel& model, const Vertex& x);

/// Sum over l of dim Hom(x, y[l]). Requires the hammock [x, S x] of x to lie
/// in the window.
int total_hom(const MeshModel& model, const Vertex& x, const Vertex& y);

/// Sum over l of (-1)^l dim Hom(x, y[l]).
int euler_form(const MeshModel& model, const Vertex& x, const Vertex& y);

/// u_F(G): total Hom dimension from the members of F into all shifts of G.
int u_stat(const MeshModel& model, const SphericalSequenceSpec& f, const Object& g);

/// a_{E,E'}: total Hom dimension from one member of E into all of E'.
int a_value(const MeshModel& model, const SphericalSequenceSpec& e, const SphericalSequenceSpec& e2);

SphericalReport check_spherical(const MeshModel& model, const SphericalSequenceSpec& spec);

/// u-statistics and pairwise a-values for a family of labelled sequences.
struct DimensionStatistics {
  std::map<std::pair<std::string, std::string>, int> u_values;
  std::map<std::pair<std::string, std::string>, int> a_values;
  std::map<std::string, std::size_t> lengths;

  /// k * a_{E,E'} == k' * a_{E',E} for every stored pair.
  bool lengths_balance() const;
};

DimensionStatistics dimension_statistics(const MeshModel& model,
                                         const std::vector<SphericalSequenceSpec>& specs);

}  // namespace sphtwist
