#include "sphtwist/mesh_model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "sphtwist/errors.hpp"
#include "sphtwist/linalg.hpp"

namespace sphtwist {

namespace {

bool bipartite_layout(const Diagram& d) { return d.kind == DiagramKind::D4 || d.rank == 3; }

void skip_space(std::string_view text, std::size_t& i) {
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
}

int parse_int(std::string_view text, std::size_t& i) {
  skip_space(text, i);
  const std::size_t start = i;
  if (start >= text.size()) throw ParseError("expected integer", start);
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  int value = 0;
  const char* first = text.data() + start + (text[start] == '+' ? 1 : 0);
  auto [ptr, ec] = std::from_chars(first, text.data() + i, value);
  if (ec != std::errc() || ptr != text.data() + i) throw ParseError("expected integer", start);
  return value;
}

void expect(std::string_view text, std::size_t& i, char c) {
  skip_space(text, i);
  if (i >= text.size() || text[i] != c) throw ParseError(std::string("expected '") + c + "'", i);
  ++i;
}

}  // namespace

std::string to_string(const Vertex& v) {
  return "(" + std::to_string(v.row) + "," + std::to_string(v.pos) + ")";
}

Vertex parse_vertex(std::string_view text) {
  std::size_t i = 0;
  expect(text, i, '(');
  const int row = parse_int(text, i);
  expect(text, i, ',');
  const int pos = parse_int(text, i);
  expect(text, i, ')');
  skip_space(text, i);
  if (i != text.size()) throw ParseError("trailing characters after vertex", i);
  return {row, pos};
}

std::string to_string(const Diagram& d) {
  return d.kind == DiagramKind::D4 ? "d4" : "a" + std::to_string(d.rank);
}

Diagram parse_diagram(std::string_view text) {
  std::string lower;
  for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "d4") return Diagram::d4();
  if (lower.size() >= 2 && lower[0] == 'a') {
    int n = 0;
    auto [ptr, ec] = std::from_chars(lower.data() + 1, lower.data() + lower.size(), n);
    if (ec == std::errc() && ptr == lower.data() + lower.size()) return Diagram::a(n);
  }
  throw UnsupportedDiagram("unsupported diagram '" + std::string(text) + "'");
}

MeshModel::MeshModel(Diagram d, Window w) : diagram_(d), window_(w) {}

MeshModel MeshModel::build(Diagram diagram, Window window) {
  if (diagram.kind == DiagramKind::A && diagram.rank < 1)
    throw UnsupportedDiagram("A_n requires n >= 1");
  if (diagram.kind == DiagramKind::D4 && diagram.rank != 4)
    throw UnsupportedDiagram("only D4 is supported among type D");
  if (window.length() < 1) throw InvalidInput("window must contain at least one position");

  MeshModel m(diagram, window);
  if (diagram.kind == DiagramKind::D4) {
    m.rows_ = {0, 1, 2, 3};
  } else if (diagram.rank == 3) {
    m.rows_ = {0, -1, 1};
  } else {
    for (int i = 1; i <= diagram.rank; ++i) m.rows_.push_back(i);
  }
  for (int s = window.lo; s <= window.hi; ++s)
    for (int r : m.rows_) {
      m.index_.emplace(Vertex{r, s}, m.vertices_.size());
      m.vertices_.push_back({r, s});
    }
  return m;
}

bool MeshModel::has_row(int row) const {
  return std::find(rows_.begin(), rows_.end(), row) != rows_.end();
}

bool MeshModel::contains(const Vertex& v) const {
  return v.pos >= window_.lo && v.pos <= window_.hi && has_row(v.row);
}

std::size_t MeshModel::index_of(const Vertex& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw InsufficientWindow("vertex " + to_string(v) + " is outside the window");
  return it->second;
}

int MeshModel::order_of(int row) const {
  return static_cast<int>(std::find(rows_.begin(), rows_.end(), row) - rows_.begin());
}

std::vector<Vertex> MeshModel::successors(const Vertex& v) const {
  std::vector<Vertex> out;
  if (bipartite_layout(diagram_)) {
    if (v.row == 0) {
      for (int r : rows_)
        if (r != 0) out.push_back({r, v.pos});
    } else {
      out.push_back({0, v.pos + 1});
    }
  } else {
    if (v.row < diagram_.rank) out.push_back({v.row + 1, v.pos});
    if (v.row > 1) out.push_back({v.row - 1, v.pos + 1});
  }
  return out;
}

std::vector<Vertex> MeshModel::predecessors(const Vertex& v) const {
  std::vector<Vertex> out;
  if (bipartite_layout(diagram_)) {
    if (v.row == 0) {
      for (int r : rows_)
        if (r != 0) out.push_back({r, v.pos - 1});
    } else {
      out.push_back({0, v.pos});
    }
  } else {
    if (v.row < diagram_.rank) out.push_back({v.row + 1, v.pos - 1});
    if (v.row > 1) out.push_back({v.row - 1, v.pos});
  }
  return out;
}

std::string MeshModel::arrow_label(const Vertex& source, const Vertex& target) const {
  const auto succ = successors(source);
  if (std::find(succ.begin(), succ.end(), target) == succ.end())
    throw InvalidInput("no arrow " + to_string(source) + " -> " + to_string(target));
  if (bipartite_layout(diagram_)) {
    if (source.row == 0)
      return "alpha_{" + std::to_string(target.row) + "," + std::to_string(target.pos) + "}";
    return "beta_{" + std::to_string(source.row) + "," + std::to_string(source.pos) + "}";
  }
  if (target.pos == source.pos)
    return "a_{" + std::to_string(source.row) + "," + std::to_string(source.pos) + "}";
  return "b_{" + std::to_string(source.row) + "," + std::to_string(source.pos) + "}";
}

std::vector<Arrow> MeshModel::arrows() const {
  std::vector<Arrow> out;
  for (const auto& v : vertices_)
    for (const auto& w : successors(v))
      if (contains(w)) out.push_back({v, w, arrow_label(v, w)});
  return out;
}

std::size_t MeshModel::complete_meshes() const {
  std::size_t n = 0;
  for (const auto& v : vertices_)
    if (contains(tau(v, -1))) ++n;
  return n;
}

Vertex MeshModel::shift(const Vertex& v, int power) const {
  Vertex out = v;
  if (diagram_.kind == DiagramKind::D4) return {v.row, v.pos + 3 * power};
  if (diagram_.rank == 3) {
    if (power % 2 != 0) out.row = -out.row;
    out.pos += 2 * power;
    return out;
  }
  const int n = diagram_.rank;
  for (; power > 0; --power) out = {n + 1 - out.row, out.pos + out.row};
  for (; power < 0; ++power) out = {n + 1 - out.row, out.pos - (n + 1 - out.row)};
  return out;
}

Vertex MeshModel::serre(const Vertex& v, int power) const {
  // S = tau o [1] on indecomposables.
  return tau(shift(v, power), power);
}

Vertex MeshModel::shift_orbit_representative(const Vertex& v) const {
  Vertex cur = v;
  while (cur.pos < 0) cur = shift(cur, 1);
  while (shift(cur, -1).pos >= 0) cur = shift(cur, -1);
  return cur;
}

std::vector<int> knit_from(const MeshModel& model, const Vertex& x) {
  const auto& verts = model.vertices();
  const std::size_t start = model.index_of(x);
  std::vector<int> h(verts.size(), 0);
  h[start] = 1;
  auto value = [&](const Vertex& v) -> int {
    if (!model.contains(v)) return 0;
    const std::size_t i = model.index_of(v);
    return i < start ? 0 : h[i];
  };
  for (std::size_t i = start + 1; i < verts.size(); ++i) {
    const Vertex& v = verts[i];
    int sum = 0;
    for (const auto& z : model.predecessors(v)) sum += value(z);
    sum -= value(model.tau(v));
    h[i] = std::max(sum, 0);
  }
  return h;
}

int hom_dim(const MeshModel& model, const Vertex& x, const Vertex& y) {
  const std::size_t ix = model.index_of(x);
  const std::size_t iy = model.index_of(y);
  if (iy < ix) return 0;
  return knit_from(model, x)[iy];
}

std::vector<int> path_space_dims_from(const MeshModel& model, const Vertex& x) {
  using linalg::Matrix;
  const auto& verts = model.vertices();
  const std::size_t start = model.index_of(x);
  std::vector<int> dims(verts.size(), 0);
  // Matrix of "compose with the arrow z -> v" from Hom(x,z) to Hom(x,v).
  std::map<std::pair<std::size_t, std::size_t>, Matrix> compose;
  dims[start] = 1;

  auto reachable = [&](const Vertex& v, std::size_t& idx) {
    if (!model.contains(v)) return false;
    idx = model.index_of(v);
    return idx >= start && dims[idx] > 0;
  };

  for (std::size_t i = start + 1; i < verts.size(); ++i) {
    const Vertex& v = verts[i];
    std::vector<std::size_t> preds;
    std::vector<std::size_t> offsets;
    std::size_t total = 0;
    for (const auto& z : model.predecessors(v)) {
      std::size_t iz = 0;
      if (!reachable(z, iz)) continue;
      preds.push_back(iz);
      offsets.push_back(total);
      total += static_cast<std::size_t>(dims[iz]);
    }
    if (total == 0) continue;

    // Image of Hom(x, tau v) under the mesh relation ending at v.
    Matrix relation(total, 0);
    std::size_t it = 0;
    if (reachable(model.tau(v), it)) {
      relation = Matrix(total, static_cast<std::size_t>(dims[it]));
      for (std::size_t p = 0; p < preds.size(); ++p) {
        auto found = compose.find({it, preds[p]});
        if (found == compose.end()) continue;
        const Matrix& m = found->second;
        for (std::size_t r = 0; r < m.rows(); ++r)
          for (std::size_t c = 0; c < m.cols(); ++c) relation(offsets[p] + r, c) = m(r, c);
      }
    }
    Matrix projection =
        relation.cols() == 0 ? Matrix::identity(total) : linalg::left_null_space(relation);
    dims[i] = static_cast<int>(projection.rows());
    if (dims[i] == 0) continue;
    for (std::size_t p = 0; p < preds.size(); ++p) {
      Matrix block(projection.rows(), static_cast<std::size_t>(dims[preds[p]]));
      for (std::size_t r = 0; r < block.rows(); ++r)
        for (std::size_t c = 0; c < block.cols(); ++c) block(r, c) = projection(r, offsets[p] + c);
      compose.emplace(std::make_pair(preds[p], i), std::move(block));
    }
  }
  return dims;
}

int hom_dim_oracle(const MeshModel& model, const Vertex& x, const Vertex& y) {
  const std::size_t ix = model.index_of(x);
  const std::size_t iy = model.index_of(y);
  if (iy < ix) return 0;
  return path_space_dims_from(model, x)[iy];
}

namespace {

void require_hammock(const MeshModel& model, const Vertex& x) {
  if (!model.contains(x) || !model.contains(model.serre(x)))
    throw InsufficientWindow("hammock of " + to_string(x) + " (up to " + to_string(model.serre(x)) +
                             ") leaves the window");
}

// Calls fn(l, dim Hom(x, y[l])) for every l with y[l] inside the hammock of x.
template <typename Fn>
void for_each_shift_in_hammock(const MeshModel& model, const Vertex& x, const Vertex& y, Fn fn) {
  require_hammock(model, x);
  if (!model.has_row(y.row)) throw InvalidInput("vertex " + to_string(y) + " has an unknown row");
  const int lo = x.pos;
  const int hi = model.serre(x).pos;
  int l = 0;
  while (model.shift(y, l).pos >= lo) --l;
  const auto dims = knit_from(model, x);
  for (;; ++l) {
    const Vertex s = model.shift(y, l);
    if (s.pos > hi) break;
    if (s.pos < lo) continue;
    fn(l, dims[model.index_of(s)]);
  }
}

}  // namespace

int total_hom(const MeshModel& model, const Vertex& x, const Vertex& y) {
  int total = 0;
  for_each_shift_in_hammock(model, x, y, [&](int, int d) { total += d; });
  return total;
}

int euler_form(const MeshModel& model, const Vertex& x, const Vertex& y) {
  int total = 0;
  for_each_shift_in_hammock(model, x, y, [&](int l, int d) { total += (l % 2 == 0 ? d : -d); });
  return total;
}

int u_stat(const MeshModel& model, const SphericalSequenceSpec& f, const Object& g) {
  int total = 0;
  for (const auto& member : f.members)
    for (const auto& v : g) total += total_hom(model, member, v);
  return total;
}

int a_value(const MeshModel& model, const SphericalSequenceSpec& e, const SphericalSequenceSpec& e2) {
  if (e.members.empty()) throw InvalidInput("empty spherical sequence");
  int total = 0;
  for (const auto& v : e2.members) total += total_hom(model, e.members.front(), v);
  return total;
}

SphericalReport check_spherical(const MeshModel& model, const SphericalSequenceSpec& spec) {
  SphericalReport report;
  report.sphericity = spec.sphericity;
  auto violate = [&](std::string msg) {
    report.valid = false;
    report.violations.push_back(std::move(msg));
  };
  const std::size_t k = spec.members.size();
  if (k == 0) {
    violate("sequence has no members");
    return report;
  }
  if (spec.degrees.size() != k) {
    violate("expected " + std::to_string(k) + " degrees, got " + std::to_string(spec.degrees.size()));
    return report;
  }
  int sum = 0;
  for (int d : spec.degrees) sum += d;
  if (sum != spec.sphericity)
    violate("degrees sum to " + std::to_string(sum) + " but sphericity is " +
            std::to_string(spec.sphericity));

  for (std::size_t i = 0; i < k; ++i) {
    const Vertex& ei = spec.members[i];
    const Vertex& next = spec.members[(i + 1) % k];
    if (!model.has_row(ei.row)) {
      violate("member " + std::to_string(i) + " " + to_string(ei) + " has an unknown row");
      return report;
    }
    // O E_i = S E_i[-1] must be E_{i+1}[m_i - 1].
    const Vertex lhs = model.serre(model.shift(ei, -1));
    const Vertex rhs = model.shift(next, spec.degrees[i] - 1);
    if (lhs != rhs)
      violate("orbit condition fails at i=" + std::to_string(i) + ": O E_i = " + to_string(lhs) +
              " but E_{i+1}[m_i-1] = " + to_string(rhs));
  }

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      // Expected dim Hom(E_i, E_j[l]) (= dim Hom(E_i[-l], E_j)).
      std::map<int, int> expected;
      if (j == i) expected[0] += 1;
      if (j == (i + 1) % k) expected[spec.degrees[i]] += 1;
      std::set<int> seen;
      for_each_shift_in_hammock(model, spec.members[i], spec.members[j], [&](int l, int d) {
        seen.insert(l);
        const int want = expected.count(l) ? expected[l] : 0;
        if (d != want)
          violate("dim Hom(E_" + std::to_string(i) + ", E_" + std::to_string(j) + "[" +
                  std::to_string(l) + "]) = " + std::to_string(d) + ", expected " +
                  std::to_string(want));
      });
      for (const auto& [l, want] : expected)
        if (want != 0 && !seen.count(l))
          violate("dim Hom(E_" + std::to_string(i) + ", E_" + std::to_string(j) + "[" +
                  std::to_string(l) + "]) = 0, expected " + std::to_string(want));
    }
  }
  if (k == 2 && spec.sphericity == 0 && spec.members[0] == spec.members[1])
    violate("length-2 0-spherical sequence needs non-isomorphic members");
  report.valid = report.violations.empty();
  return report;
}

bool DimensionStatistics::lengths_balance() const {
  for (const auto& [key, a] : a_values) {
    auto back = a_values.find({key.second, key.first});
    if (back == a_values.end()) continue;
    if (lengths.at(key.first) * static_cast<std::size_t>(a) !=
        lengths.at(key.second) * static_cast<std::size_t>(back->second))
      return false;
  }
  return true;
}

DimensionStatistics dimension_statistics(const MeshModel& model,
                                         const std::vector<SphericalSequenceSpec>& specs) {
  DimensionStatistics stats;
  for (const auto& f : specs) {
    stats.lengths[f.label] = f.length();
    for (const auto& g : specs) {
      stats.u_values[{f.label, g.label}] = u_stat(model, f, g.members);
      if (f.label != g.label) stats.a_values[{f.label, g.label}] = a_value(model, f, g);
    }
  }
  return stats;
}

}  // namespace sphtwist
