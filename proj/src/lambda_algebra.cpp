#include "sphtwist/lambda_algebra.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

#include "sphtwist/errors.hpp"

namespace sphtwist {

using linalg::Matrix;
using linalg::Rational;

std::string to_string(const LambdaVertex& v) { return (v.bar ? "bar" : "") + std::to_string(v.index); }

LambdaVertex parse_lambda_vertex(std::string_view text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  LambdaVertex v;
  if (text.substr(i, 3) == "bar") {
    v.bar = true;
    i += 3;
    skip();
  }
  const std::size_t start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (start == i) throw ParseError("expected vertex index", start);
  std::from_chars(text.data() + start, text.data() + i, v.index);
  skip();
  if (i != text.size()) throw ParseError("trailing characters in vertex", i);
  return v;
}

int AlgebraModel::vertex_id(const LambdaVertex& v) const {
  const int n = v.bar ? k_ : 3 * k_;
  if (v.index < 0 || v.index >= n)
    throw InvalidInput("vertex " + to_string(v) + " does not exist for k = " + std::to_string(k_));
  return v.bar ? v.index : k_ + v.index;
}

std::string AlgebraModel::path_name(const std::vector<int>& path, int source) const {
  if (path.empty()) return "e_" + to_string(vertices_.at(source));
  std::string out;
  // Composition order: the last traversed arrow comes first.
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    if (!out.empty()) out += ' ';
    out += arrows_.at(*it).name;
  }
  return out;
}

namespace {

std::vector<std::vector<int>> paths_of_degree(const std::vector<LambdaArrow>& arrows,
                                              const std::vector<std::vector<int>>& shorter) {
  std::vector<std::vector<int>> out;
  for (const auto& p : shorter)
    for (std::size_t a = 0; a < arrows.size(); ++a)
      if (arrows[p.back()].target == arrows[a].source) {
        auto q = p;
        q.push_back(static_cast<int>(a));
        out.push_back(std::move(q));
      }
  return out;
}

}  // namespace

AlgebraModel build_lambda(int k, std::size_t max_degree) {
  if (k < 1) throw InvalidInput("k must be at least 1");
  AlgebraModel m;
  m.k_ = k;
  const int n = 3 * k;
  for (int i = 0; i < k; ++i) m.vertices_.push_back({true, i});
  for (int i = 0; i < n; ++i) m.vertices_.push_back({false, i});
  auto mod = [](int a, int b) { return ((a % b) + b) % b; };
  auto bar = [&](int i) { return mod(i, k); };
  auto plain = [&](int i) { return k + mod(i, n); };
  for (int i = 0; i < n; ++i) m.arrows_.push_back({"alpha_" + std::to_string(i), bar(i), plain(i)});
  for (int i = 0; i < n; ++i) m.arrows_.push_back({"beta_" + std::to_string(i), plain(i), bar(i + 1)});
  auto alpha = [&](int i) { return mod(i, n); };
  auto beta = [&](int i) { return n + mod(i, n); };

  // alpha_{i+k+1} beta_i, alpha_{i+2k+1} beta_i, beta_i alpha_i - beta_{i+k} alpha_{i+k},
  // beta_i alpha_i - beta_{i+2k} alpha_{i+2k}; traversal order puts the right factor first.
  for (int i = 0; i < n; ++i) {
    m.relations_.push_back({{{beta(i), alpha(i + k + 1)}, 1}});
    m.relations_.push_back({{{beta(i), alpha(i + 2 * k + 1)}, 1}});
    m.relations_.push_back({{{alpha(i), beta(i)}, 1}, {{alpha(i + k), beta(i + k)}, -1}});
    m.relations_.push_back({{{alpha(i), beta(i)}, 1}, {{alpha(i + 2 * k), beta(i + 2 * k)}, -1}});
  }

  for (std::size_t v = 0; v < m.vertices_.size(); ++v)
    m.basis_.push_back({{}, static_cast<int>(v), static_cast<int>(v)});

  m.blocks_.emplace_back();  // degree 0 is handled by the idempotents
  std::vector<std::vector<int>> current;
  for (std::size_t a = 0; a < m.arrows_.size(); ++a) current.push_back({static_cast<int>(a)});

  for (std::size_t d = 1;; ++d) {
    if (d > max_degree) throw InternalError("Lambda_k basis did not terminate by degree " + std::to_string(max_degree));
    AlgebraModel::DegreeBlock block;
    block.paths = current;
    for (std::size_t p = 0; p < current.size(); ++p) block.index.emplace(current[p], p);

    // Ideal in degree d: u r v for every relation r placed at every position.
    std::vector<std::vector<std::pair<std::size_t, int>>> gens;
    if (d >= 2)
      for (const auto& path : current)
        for (std::size_t t = 0; t + 2 <= d; ++t)
          for (const auto& rel : m.relations_) {
            const auto& lead = rel.front().first;
            if (m.arrows_[lead[0]].source != m.arrows_[path[t]].source ||
                m.arrows_[lead[1]].target != m.arrows_[path[t + 1]].target)
              continue;
            std::vector<std::pair<std::size_t, int>> g;
            for (const auto& [two, coeff] : rel) {
              auto q = path;
              q[t] = two[0];
              q[t + 1] = two[1];
              g.emplace_back(block.index.at(q), coeff);
            }
            gens.push_back(std::move(g));
          }
    Matrix ideal(gens.size(), current.size());
    for (std::size_t r = 0; r < gens.size(); ++r)
      for (const auto& [c, coeff] : gens[r]) ideal(r, c) += coeff;
    block.pivots = linalg::row_reduce(ideal);
    Matrix trimmed(block.pivots.size(), current.size());
    for (std::size_t r = 0; r < block.pivots.size(); ++r)
      for (std::size_t c = 0; c < current.size(); ++c) trimmed(r, c) = ideal(r, c);
    block.ideal = std::move(trimmed);

    std::vector<bool> is_pivot(current.size(), false);
    for (auto p : block.pivots) is_pivot[p] = true;
    bool any = false;
    for (std::size_t p = 0; p < current.size(); ++p)
      if (!is_pivot[p]) {
        any = true;
        block.basis_of_path.emplace(p, m.basis_.size());
        m.basis_.push_back({current[p], m.arrows_[current[p].front()].source, m.arrows_[current[p].back()].target});
      }
    m.blocks_.push_back(std::move(block));
    if (!any) break;
    m.top_degree_ = d;
    current = paths_of_degree(m.arrows_, current);
  }
  return m;
}

SparseVector AlgebraModel::reduce(const std::vector<int>& path) const {
  SparseVector out;
  for (std::size_t t = 0; t + 1 < path.size(); ++t)
    if (arrows_.at(path[t]).target != arrows_.at(path[t + 1]).source) return out;
  if (path.empty()) throw InvalidInput("use the vertex idempotent for the empty path");
  if (path.size() > top_degree_) return out;
  const DegreeBlock& block = blocks_.at(path.size());
  const std::size_t p = block.index.at(path);
  if (const auto it = block.basis_of_path.find(p); it != block.basis_of_path.end()) {
    out[it->second] = 1;
    return out;
  }
  // p is a pivot column: p = -(rest of its RREF row), all of which are basis paths.
  for (std::size_t r = 0; r < block.pivots.size(); ++r) {
    if (block.pivots[r] != p) continue;
    for (std::size_t c = 0; c < block.ideal.cols(); ++c) {
      if (c == p || block.ideal(r, c) == 0) continue;
      out[block.basis_of_path.at(c)] = -block.ideal(r, c);
    }
    return out;
  }
  throw InternalError("path neither basis nor pivot");
}

SparseVector AlgebraModel::multiply(std::size_t a, std::size_t b) const {
  const BasisPath& x = basis_.at(a);
  const BasisPath& y = basis_.at(b);
  if (x.target != y.source) return {};
  if (x.arrows.empty()) return {{b, 1}};
  if (y.arrows.empty()) return {{a, 1}};
  auto path = x.arrows;
  path.insert(path.end(), y.arrows.begin(), y.arrows.end());
  return reduce(path);
}

SparseVector AlgebraModel::multiply(const SparseVector& a, const SparseVector& b) const {
  SparseVector out;
  for (const auto& [i, ca] : a)
    for (const auto& [j, cb] : b)
      for (const auto& [t, c] : multiply(i, j)) {
        out[t] += ca * cb * c;
        if (out[t] == 0) out.erase(t);
      }
  return out;
}

int hom_dim_proj(const AlgebraModel& model, int x, int y) {
  const int n = static_cast<int>(model.vertex_count());
  if (x < 0 || y < 0 || x >= n || y >= n) throw InvalidInput("vertex id out of range");
  int count = 0;
  for (const auto& b : model.basis())
    if (b.source == x && b.target == y) ++count;
  return count;
}

std::vector<std::vector<int>> cartan_matrix(const AlgebraModel& model) {
  const std::size_t n = model.vertex_count();
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (const auto& b : model.basis()) ++c[b.source][b.target];
  return c;
}

bool relations_vanish(const AlgebraModel& model) {
  for (const auto& rel : model.relations()) {
    SparseVector sum;
    for (const auto& [path, coeff] : rel)
      for (const auto& [i, c] : model.reduce(path)) sum[i] += c * coeff;
    for (const auto& [i, c] : sum)
      if (c != 0) return false;
  }
  return true;
}

SocleData socle_of_projective(const AlgebraModel& model, int x) {
  // P_x = e_x Lambda is spanned by the basis paths ending at x; the right
  // action of an arrow a prepends a to the path.
  std::vector<std::size_t> elems;
  for (std::size_t i = 0; i < model.basis().size(); ++i)
    if (model.basis()[i].target == x) elems.push_back(i);
  const auto& basis = model.basis();
  const std::size_t arrows = model.arrows().size();
  // Matrix of p -> (a p)_a for all arrows a; columns index (arrow, basis).
  Matrix act(elems.size(), arrows * basis.size());
  for (std::size_t r = 0; r < elems.size(); ++r) {
    const BasisPath& p = basis[elems[r]];
    for (std::size_t a = 0; a < arrows; ++a) {
      if (model.arrows()[a].target != p.source) continue;
      std::vector<int> path{static_cast<int>(a)};
      path.insert(path.end(), p.arrows.begin(), p.arrows.end());
      for (const auto& [t, c] : model.reduce(path)) act(r, a * basis.size() + t) = c;
    }
  }
  const Matrix socle = linalg::left_null_space(act);
  SocleData out;
  out.dimension = socle.rows();
  if (out.dimension != 1) return out;
  int vertex = -1;
  for (std::size_t r = 0; r < elems.size(); ++r) {
    if (socle(0, r) == 0) continue;
    const int s = basis[elems[r]].source;
    if (vertex >= 0 && vertex != s) return out;
    vertex = s;
  }
  out.vertex = vertex;
  return out;
}

NakayamaAuto nakayama(const AlgebraModel& model) {
  const int k = model.k();
  const int n = 3 * k;
  NakayamaAuto nu;
  for (const auto& v : model.vertices()) {
    const int m = v.bar ? k : n;
    nu.vertex_perm.push_back(model.vertex_id({v.bar, (v.index + m - 1) % m}));
  }
  for (int a = 0; a < 2 * n; ++a) nu.arrow_perm.push_back(a < n ? (a + n - 1) % n : n + (a - n + n - 1) % n);

  for (std::size_t a = 0; a < nu.arrow_perm.size(); ++a) {
    const auto& src = model.arrows()[a];
    const auto& img = model.arrows()[nu.arrow_perm[a]];
    if (img.source != nu.vertex_perm[src.source] || img.target != nu.vertex_perm[src.target])
      throw SelfinjectivityViolation("nu is not a quiver automorphism at " + src.name);
  }
  for (const auto& rel : model.relations()) {
    SparseVector sum;
    for (const auto& [path, coeff] : rel) {
      std::vector<int> image;
      for (int a : path) image.push_back(nu.arrow_perm[a]);
      for (const auto& [i, c] : model.reduce(image)) sum[i] += c * coeff;
    }
    for (const auto& [i, c] : sum)
      if (c != 0) throw SelfinjectivityViolation("nu does not preserve the relations");
  }

  std::vector<int> cur = nu.vertex_perm;
  nu.order = 1;
  auto is_identity = [](const std::vector<int>& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] != static_cast<int>(i)) return false;
    return true;
  };
  while (!is_identity(cur)) {
    for (auto& v : cur) v = nu.vertex_perm[v];
    ++nu.order;
  }

  for (std::size_t x = 0; x < model.vertex_count(); ++x) {
    const SocleData s = socle_of_projective(model, static_cast<int>(x));
    if (s.dimension != 1 || s.vertex < 0)
      throw SelfinjectivityViolation("socle of P_" + to_string(model.vertices()[x]) + " is not simple");
    if (s.vertex != nu.vertex_perm[x])
      throw SelfinjectivityViolation("socle of P_" + to_string(model.vertices()[x]) + " is top(P_" +
                                     to_string(model.vertices()[s.vertex]) + "), not top(P_nu(x))");
  }
  return nu;
}

namespace {

void check_pattern(const AlgebraModel& model, const ProjectiveSequence& seq) {
  const std::size_t len = seq.members.size();
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = 0; j < len; ++j) {
      const int want = (i == j ? 1 : 0) + (j == (i + 1) % len ? 1 : 0);
      const int got = hom_dim_proj(model, seq.members[i], seq.members[j]);
      if (got != want)
        throw ValidationFailure("dim Hom(" + seq.label + "_" + std::to_string(i) + ", " + seq.label + "_" +
                                std::to_string(j) + ") = " + std::to_string(got) + ", expected " +
                                std::to_string(want));
    }
}

}  // namespace

LambdaSphericalData spherical_data(const AlgebraModel& model) {
  const int k = model.k();
  LambdaSphericalData d;
  d.e.label = "E";
  d.e2.label = "E'";
  for (int i = 0; i < k; ++i) d.e.members.push_back(model.vertex_id({true, i}));
  for (int i = 0; i < 3 * k; ++i) d.e2.members.push_back(model.vertex_id({false, i}));
  d.e.degrees.assign(d.e.members.size(), 0);
  d.e2.degrees.assign(d.e2.members.size(), 0);
  // Projectives have no morphisms to nonzero shifts in the homotopy category,
  // so all of the spherical pattern sits in degree 0.
  check_pattern(model, d.e);
  check_pattern(model, d.e2);
  for (int y : d.e2.members) d.a += hom_dim_proj(model, d.e.members.front(), y);
  for (int y : d.e.members) d.a2 += hom_dim_proj(model, d.e2.members.front(), y);
  int total = 0;
  for (int x : d.e.members)
    for (int y : d.e2.members) total += hom_dim_proj(model, x, y);
  if (total != static_cast<int>(d.e.members.size()) * d.a || total != static_cast<int>(d.e2.members.size()) * d.a2)
    throw ValidationFailure("k a_{E,E'} and k' a_{E',E} disagree with the total Hom dimension");
  return d;
}

std::vector<std::vector<long>> k0_twist(const AlgebraModel& model, const ProjectiveSequence& seq) {
  const std::size_t n = model.vertex_count();
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (std::size_t x = 0; x < n; ++x) {
    m[x][x] += 1;
    for (int e : seq.members) m[e][x] -= hom_dim_proj(model, e, static_cast<int>(x));
  }
  return m;
}

CentralMemberAction central_member_action(int r, const ProjectiveSequence& seq, std::size_t i, bool primed,
                                          int k) {
  const int len = static_cast<int>(seq.degrees.size());
  if (len == 0) throw InvalidInput("empty sequence");
  auto m = [&](int j) { return seq.degrees[((j % len) + len) % len]; };
  const int ii = static_cast<int>(i);
  CentralMemberAction out;
  switch (r) {
    case 1:
      out = {-3, 4 - m(ii - 1) - m(ii - 2) - m(ii - 3)};
      break;
    case 2:
      out = {primed ? k - 2 : -2, 3 - m(ii - 1) - m(ii - 2)};
      break;
    case 3:
      out = {-3, 5 - m(ii - 1) - m(ii - 2) - m(ii - 3)};
      break;
    default:
      throw InvalidInput("r must be 1, 2 or 3");
  }
  return out;
}

bool central_action_matches_k0(const AlgebraModel& model) {
  const auto data = spherical_data(model);
  const auto te = k0_twist(model, data.e);
  const auto te2 = k0_twist(model, data.e2);
  const std::size_t n = model.vertex_count();
  auto mul = [&](const std::vector<std::vector<long>>& a, const std::vector<std::vector<long>>& b) {
    std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (a[i][l] != 0)
          for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][l] * b[l][j];
    return c;
  };
  // T_E T_E' applies T_E' first.
  const auto step = mul(te, te2);
  const auto cube = mul(step, mul(step, step));
  for (const auto* seq : {&data.e, &data.e2}) {
    const int len = static_cast<int>(seq->members.size());
    for (int i = 0; i < len; ++i) {
      const auto act = central_member_action(3, *seq, i, seq == &data.e2, model.k());
      const int target = seq->members[(((i + act.index_shift) % len) + len) % len];
      const long sign = act.shift % 2 == 0 ? 1 : -1;
      const int x = seq->members[i];
      for (std::size_t y = 0; y < n; ++y) {
        const long want = static_cast<int>(y) == target ? sign : 0;
        if (cube[y][x] != want) return false;
      }
    }
  }
  return true;
}

}  // namespace sphtwist
