#include "sphtwist/twist_engine.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sphtwist/errors.hpp"

namespace sphtwist {

MemberImage twist_on_member(const SphericalSequenceSpec& spec, std::size_t i) {
  const std::size_t k = spec.length();
  if (k == 0 || i >= k) throw InvalidInput("member index out of range");
  if (spec.degrees.size() != k) throw InvalidInput("degrees and members differ in length");
  // T_E(E_{i+1}) = E_i[1 - m_i].
  const std::size_t prev = (i + k - 1) % k;
  return {prev, 1 - spec.degrees[prev]};
}

// ---------------------------------------------------------------- automorphisms

QuiverAutomorphism::QuiverAutomorphism(std::shared_ptr<const MeshModel> model,
                                       std::map<Vertex, Vertex> vertex_map, std::string label)
    : model_(std::move(model)), map_(std::move(vertex_map)), label_(std::move(label)) {
  if (!model_) throw InvalidInput("automorphism needs a model");
}

QuiverAutomorphism QuiverAutomorphism::identity(std::shared_ptr<const MeshModel> model) {
  std::map<Vertex, Vertex> m;
  for (const auto& v : model->vertices()) m.emplace(v, v);
  return {std::move(model), std::move(m), "id"};
}

std::optional<Vertex> QuiverAutomorphism::try_apply(const Vertex& v) const {
  const auto it = map_.find(v);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

Vertex QuiverAutomorphism::operator()(const Vertex& v) const {
  const auto it = map_.find(v);
  if (it == map_.end())
    throw InsufficientWindow(label_ + " is not known at " + to_string(v) + " in this window");
  return it->second;
}

std::vector<Vertex> QuiverAutomorphism::compatibility_failures() const {
  std::vector<Vertex> bad;
  const MeshModel& m = *model_;
  for (const auto& [v, img] : map_) {
    const auto s = try_apply(m.shift(v));
    const auto t = try_apply(m.serre(v));
    if ((s && *s != m.shift(img)) || (t && *t != m.serre(img))) bad.push_back(v);
  }
  return bad;
}

std::vector<std::pair<Vertex, Vertex>> QuiverAutomorphism::broken_arrows() const {
  std::vector<std::pair<Vertex, Vertex>> bad;
  for (const auto& [v, img] : map_)
    for (const auto& w : model_->successors(v)) {
      const auto wi = try_apply(w);
      if (!wi) continue;
      const auto succ = model_->successors(img);
      if (std::find(succ.begin(), succ.end(), *wi) == succ.end()) bad.emplace_back(v, w);
    }
  return bad;
}

QuiverAutomorphism compose(const QuiverAutomorphism& a, const QuiverAutomorphism& b, std::size_t min_domain) {
  if (&a.model() != &b.model() && !(a.model().diagram() == b.model().diagram() &&
                                    a.model().window().lo == b.model().window().lo &&
                                    a.model().window().hi == b.model().window().hi))
    throw InvalidInput("composing automorphisms of different models");
  std::map<Vertex, Vertex> m;
  for (const auto& [v, bv] : b.vertex_map())
    if (const auto abv = a.try_apply(bv)) m.emplace(v, *abv);
  if (m.size() < min_domain)
    throw InsufficientWindow("composite " + a.label() + " " + b.label() + " is known on " +
                             std::to_string(m.size()) + " vertices, need " + std::to_string(min_domain));
  return {a.model_ptr(), std::move(m), a.label() + " " + b.label()};
}

QuiverAutomorphism invert(const QuiverAutomorphism& a) {
  std::map<Vertex, Vertex> m;
  for (const auto& [v, img] : a.vertex_map())
    if (a.model().contains(img)) {
      if (!m.emplace(img, v).second)
        throw ValidationFailure(a.label() + " is not injective at " + to_string(img));
    }
  std::string label = a.label();
  if (label.find(' ') != std::string::npos) label = "(" + label + ")";
  return {a.model_ptr(), std::move(m), label + "^-1"};
}

std::size_t shift_period_size(const MeshModel& model) {
  const Vertex v{model.rows().front(), 0};
  const int double_shift = model.shift(v, 2).pos - v.pos;
  return model.row_count() * static_cast<std::size_t>(double_shift) / 2;
}

D4Actions builtin_d4_actions(std::shared_ptr<const MeshModel> model) {
  if (model->diagram().kind != DiagramKind::D4)
    throw UnsupportedDiagram("builtin twist tables exist only for D4, not " + to_string(model->diagram()));
  const std::map<int, int> e_rows{{0, 0}, {1, 1}, {2, 3}, {3, 2}};
  const std::map<int, int> e2_rows{{0, 0}, {1, 3}, {2, 2}, {3, 1}};
  std::map<Vertex, Vertex> te, te2;
  for (const auto& v : model->vertices()) {
    te.emplace(v, Vertex{e_rows.at(v.row), v.pos + 1});
    te2.emplace(v, Vertex{e2_rows.at(v.row), v.pos + 1});
  }
  return {QuiverAutomorphism(model, std::move(te), "T_E"), QuiverAutomorphism(model, std::move(te2), "T_E'")};
}

// ---------------------------------------------------------------- derivation

namespace {

// Euler pairings chi(x, -) for sources x whose hammock lies in the window.
class EulerCache {
 public:
  explicit EulerCache(const MeshModel& model) : model_(model) {}

  bool usable(const Vertex& x) const { return model_.contains(x) && model_.contains(model_.serre(x)); }

  int chi(const Vertex& x, const Vertex& y) {
    if (!usable(x))
      throw InsufficientWindow("hammock of " + to_string(x) + " leaves the window");
    auto it = tables_.find(x);
    if (it == tables_.end()) it = tables_.emplace(x, knit_from(model_, x)).first;
    const auto& dims = it->second;
    const int lo = x.pos;
    const int hi = model_.serre(x).pos;
    int l = 0;
    while (model_.shift(y, l).pos >= lo) --l;
    int total = 0;
    for (;; ++l) {
      const Vertex s = model_.shift(y, l);
      if (s.pos > hi) break;
      if (s.pos < lo) continue;
      const int d = dims[model_.index_of(s)];
      total += (l % 2 == 0) ? d : -d;
    }
    return total;
  }

 private:
  const MeshModel& model_;
  std::map<Vertex, std::vector<int>> tables_;
};

}  // namespace

QuiverAutomorphism derive_automorphism(std::shared_ptr<const MeshModel> model,
                                       const SphericalSequenceSpec& spec) {
  const MeshModel& m = *model;
  const auto report = check_spherical(m, spec);
  if (!report.valid)
    throw InvalidInput("sequence " + spec.label + " is not spherical: " + report.violations.front());
  const std::string label = "T_" + (spec.label.empty() ? std::string("E") : spec.label);

  EulerCache euler(m);
  std::vector<Vertex> probes;
  for (const auto& v : m.vertices())
    if (euler.usable(v) && v.pos < m.window().lo + 2) probes.push_back(v);
  if (probes.size() < m.row_count())
    throw InsufficientWindow("window too small to host Euler probes for " + label);

  // Expected pairings of T(y) with the probes: [T y] = [y] - sum_i chi(E_i, y) [E_i].
  auto expected = [&](const Vertex& y) {
    std::vector<int> out;
    std::vector<int> coeff;
    for (const auto& e : spec.members) coeff.push_back(euler.chi(e, y));
    for (const auto& z : probes) {
      int value = euler.chi(z, y);
      for (std::size_t i = 0; i < spec.members.size(); ++i) value -= coeff[i] * euler.chi(z, spec.members[i]);
      out.push_back(value);
    }
    return out;
  };
  auto pairing = [&](const Vertex& c) {
    std::vector<int> out;
    for (const auto& z : probes) out.push_back(euler.chi(z, c));
    return out;
  };

  std::map<Vertex, Vertex> map;
  std::deque<Vertex> queue;
  auto assign = [&](const Vertex& v, const Vertex& img) {
    const auto [it, inserted] = map.emplace(v, img);
    if (!inserted && it->second != img)
      throw AmbiguousAction(label + " sends " + to_string(v) + " to both " + to_string(it->second) + " and " +
                            to_string(img));
    if (inserted) queue.push_back(v);
  };

  for (std::size_t i = 0; i < spec.length(); ++i) {
    const MemberImage target = twist_on_member(spec, i);
    const Vertex img = m.shift(spec.members[target.index], target.shift);
    if (m.contains(spec.members[i])) assign(spec.members[i], img);
  }

  auto choose = [&](const Vertex& w, const std::vector<Vertex>& candidates) {
    const auto want = expected(w);
    std::vector<Vertex> survivors;
    for (const auto& c : candidates)
      if (pairing(c) == want) survivors.push_back(c);
    if (survivors.size() != 1) {
      std::string msg = label + " at " + to_string(w) + ": " + std::to_string(survivors.size()) +
                        " candidate images satisfy the Euler constraints";
      for (const auto& c : survivors) msg += " " + to_string(c);
      throw AmbiguousAction(msg);
    }
    return survivors.front();
  };

  while (!queue.empty()) {
    const Vertex y = queue.front();
    queue.pop_front();
    const Vertex img = map.at(y);
    for (int d : {-1, 1}) {
      const Vertex w = m.tau(y, d);
      if (m.contains(w)) assign(w, m.tau(img, d));
    }
    for (const auto& w : m.successors(y))
      if (m.contains(w) && !map.count(w)) assign(w, choose(w, m.successors(img)));
    for (const auto& w : m.predecessors(y))
      if (m.contains(w) && !map.count(w)) assign(w, choose(w, m.predecessors(img)));
  }
  if (map.size() != m.vertices().size())
    throw InsufficientWindow(label + " could only be propagated to " + std::to_string(map.size()) + " of " +
                             std::to_string(m.vertices().size()) + " vertices");

  QuiverAutomorphism out(model, std::move(map), label);
  if (!out.compatibility_failures().empty())
    throw ValidationFailure(label + " does not commute with shift and Serre at " +
                            to_string(out.compatibility_failures().front()));
  if (!out.broken_arrows().empty())
    throw ValidationFailure(label + " breaks the arrow " + to_string(out.broken_arrows().front().first) +
                            " -> " + to_string(out.broken_arrows().front().second));
  return out;
}

// ---------------------------------------------------------------- relations

QuiverAutomorphism evaluate_word(const GroupWord& word, const std::map<int, QuiverAutomorphism>& gens,
                                 std::size_t min_domain) {
  if (gens.empty()) throw InvalidInput("no generators supplied");
  QuiverAutomorphism acc = QuiverAutomorphism::identity(gens.begin()->second.model_ptr());
  for (const auto& letter : word.letters()) {
    const auto it = gens.find(letter.gen);
    if (it == gens.end()) throw InvalidInput("no action for generator s" + std::to_string(letter.gen));
    const QuiverAutomorphism step = letter.exp > 0 ? it->second : invert(it->second);
    for (long i = 0; i < std::labs(letter.exp); ++i) acc = compose(acc, step, min_domain);
  }
  return acc;
}

bool verify_relation(const GroupWord& lhs, const GroupWord& rhs,
                     const std::map<int, QuiverAutomorphism>& gens, std::size_t min_domain) {
  if (gens.empty()) throw InvalidInput("no generators supplied");
  if (min_domain == 0) min_domain = shift_period_size(gens.begin()->second.model());
  const auto l = evaluate_word(lhs, gens, min_domain);
  const auto r = evaluate_word(rhs, gens, min_domain);
  std::size_t common = 0;
  bool agree = true;
  for (const auto& [v, img] : l.vertex_map()) {
    const auto other = r.try_apply(v);
    if (!other) continue;
    ++common;
    if (*other != img) agree = false;
  }
  if (common < min_domain)
    throw InsufficientWindow("both sides are known on only " + std::to_string(common) + " vertices, need " +
                             std::to_string(min_domain));
  return agree;
}

// ---------------------------------------------------------------- classes and orbits

SphClass sph_class(const MeshModel& model, const std::vector<Vertex>& members) {
  SphClass c;
  for (const auto& v : members) c.key.push_back(model.shift_orbit_representative(v));
  std::sort(c.key.begin(), c.key.end());
  return c;
}

std::string to_string(const SphClass& c) {
  std::string out = "{";
  for (std::size_t i = 0; i < c.key.size(); ++i) out += (i ? " " : "") + to_string(c.key[i]);
  return out + "}";
}

SphClass act_on_class(const QuiverAutomorphism& a, const SphClass& c) {
  const MeshModel& m = a.model();
  const int reach = m.window().hi - m.window().lo + 1;
  std::vector<Vertex> images;
  for (const auto& v : c.key) {
    std::optional<Vertex> img;
    for (int d = 0; d <= reach && !img; ++d)
      for (int l : {d, -d}) {
        img = a.try_apply(m.shift(v, l));
        if (img) break;
      }
    if (!img) throw InsufficientWindow("no shift of " + to_string(v) + " lies in the domain of " + a.label());
    images.push_back(*img);
  }
  return sph_class(m, images);
}

std::optional<std::size_t> OrbitGraph::find(const SphClass& c) const {
  const auto it = std::find(nodes.begin(), nodes.end(), c);
  if (it == nodes.end()) return std::nullopt;
  return static_cast<std::size_t>(it - nodes.begin());
}

OrbitGraph orbit_sph(const std::vector<LabelledGenerator>& gens, const std::vector<SphClass>& seeds,
                     int max_depth) {
  if (max_depth < 0) throw InvalidInput("orbit depth must be nonnegative");
  std::vector<LabelledGenerator> moves;
  for (const auto& g : gens) {
    moves.push_back(g);
    moves.push_back({g.name + "^-1", invert(g.action)});
  }
  OrbitGraph graph;
  for (const auto& s : seeds)
    if (!graph.find(s)) {
      graph.nodes.push_back(s);
      graph.depth.push_back(0);
    }
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    if (graph.depth[i] >= static_cast<std::size_t>(max_depth)) continue;
    for (const auto& mv : moves) {
      const SphClass image = act_on_class(mv.action, graph.nodes[i]);
      auto j = graph.find(image);
      if (!j) {
        j = graph.nodes.size();
        graph.nodes.push_back(image);
        graph.depth.push_back(graph.depth[i] + 1);
      }
      graph.edges.push_back({i, *j, mv.name});
    }
  }
  return graph;
}

std::string orbit_to_text(const OrbitGraph& g) {
  std::ostringstream out;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    out << "c" << i << " depth " << g.depth[i] << " " << to_string(g.nodes[i]);
    bool first = true;
    for (const auto& e : g.edges)
      if (e.from == i) {
        out << (first ? " : " : ", ") << e.label << " -> c" << e.to;
        first = false;
      }
    out << "\n";
  }
  return out.str();
}

std::string orbit_to_json(const OrbitGraph& g) {
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& v : g.nodes[i].key) members.push_back({v.row, v.pos});
    nodes.push_back({{"id", i}, {"depth", g.depth[i]}, {"members", members}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"label", e.label}});
  return nlohmann::json{{"nodes", nodes}, {"edges", edges}}.dump();
}

bool detect_exceptional(std::shared_ptr<const MeshModel> model, const SphericalSequenceSpec& e,
                        const SphericalSequenceSpec& e2, ExceptionalCase which) {
  const SphClass ce = sph_class(*model, e.members);
  const SphClass ce2 = sph_class(*model, e2.members);
  if (ce == ce2) throw InvalidInput("the two sequences are equivalent up to shifts");
  const auto te = derive_automorphism(model, e);
  const auto te2 = derive_automorphism(model, e2);
  if (which == ExceptionalCase::A) return act_on_class(te2, act_on_class(te2, ce)) == ce;
  return act_on_class(te, ce2) == ce2;
}

// ---------------------------------------------------------------- ping-pong

PingPongResult pingpong_certify(const PingPongSystem& system, long exponent_bound) {
  if (exponent_bound < 1) throw InvalidInput("exponent bound must be positive");
  if (system.membership.size() != system.element_names.size())
    throw InvalidInput("membership and element names differ in size");
  PingPongResult r;
  r.status = "refuted";
  for (std::size_t g = 0; g < system.generator_count; ++g)
    if (std::find(system.membership.begin(), system.membership.end(), static_cast<int>(g)) ==
        system.membership.end())
      return r;
  for (std::size_t g = 0; g < system.generator_count; ++g)
    for (std::size_t x = 0; x < system.membership.size(); ++x) {
      const int set = system.membership[x];
      if (set < 0 || set == static_cast<int>(g)) continue;
      for (long s = -exponent_bound; s <= exponent_bound; ++s) {
        if (s == 0) continue;
        const auto y = system.image(g, s, x);
        if (!y) {
          ++r.unexplored;
          continue;
        }
        ++r.checks;
        if (system.membership.at(*y) != static_cast<int>(g)) {
          r.witness = PingPongViolation{g, s, x, *y};
          return r;
        }
      }
    }
  r.certified = true;
  r.status = "bounded evidence";
  return r;
}

std::string to_json(const PingPongSystem& system, const PingPongResult& r) {
  nlohmann::json j{{"certified", r.certified},
                   {"status", r.status},
                   {"checks", r.checks},
                   {"unexplored", r.unexplored},
                   {"elements", system.element_names.size()}};
  if (r.witness) {
    const auto& w = *r.witness;
    j["witness"] = {{"generator", w.generator},
                    {"power", w.power},
                    {"element", system.element_names.at(w.element)},
                    {"element_set", system.membership.at(w.element)},
                    {"image", system.element_names.at(w.image)},
                    {"image_set", system.membership.at(w.image)}};
  } else {
    j["witness"] = nullptr;
  }
  return j.dump();
}

PingPongSystem free_group_pingpong(int depth, int rank) {
  if (depth < 0) throw InvalidInput("depth must be nonnegative");
  if (rank < 1) throw InvalidInput("rank must be positive");
  std::vector<int> letters;
  for (int g = 1; g <= rank; ++g) letters.insert(letters.end(), {g, -g});
  // Reduced words as letter lists over {1, -1, 2, -2}.
  std::vector<std::vector<int>> words{{}};
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (static_cast<int>(words[i].size()) == depth) continue;
    for (int l : letters)
      if (words[i].empty() || words[i].front() != -l) {
        auto w = words[i];
        w.insert(w.begin(), l);
        words.push_back(w);
      }
  }
  auto name = [](const std::vector<int>& w) {
    GroupWord g;
    for (int l : w) g = g * GroupWord::generator(std::abs(l), l > 0 ? 1 : -1);
    return to_string(g);
  };
  auto index = std::make_shared<std::map<std::vector<int>, std::size_t>>();
  PingPongSystem sys;
  sys.generator_count = static_cast<std::size_t>(rank);
  for (std::size_t i = 0; i < words.size(); ++i) {
    index->emplace(words[i], i);
    sys.element_names.push_back(name(words[i]));
    sys.membership.push_back(words[i].empty() ? -1 : std::abs(words[i].front()) - 1);
  }
  auto store = std::make_shared<std::vector<std::vector<int>>>(std::move(words));
  sys.image = [index, store](std::size_t g, long s, std::size_t x) -> std::optional<std::size_t> {
    std::vector<int> w = (*store)[x];
    const int letter = static_cast<int>(g + 1) * (s > 0 ? 1 : -1);
    for (long i = 0; i < std::labs(s); ++i) {
      if (!w.empty() && w.front() == -letter)
        w.erase(w.begin());
      else
        w.insert(w.begin(), letter);
    }
    const auto it = index->find(w);
    if (it == index->end()) return std::nullopt;
    return it->second;
  };
  return sys;
}

PingPongSystem integer_line_pingpong(int radius) {
  if (radius < 1) throw InvalidInput("radius must be positive");
  PingPongSystem sys;
  for (int x = -radius; x <= radius; ++x) {
    sys.element_names.push_back(std::to_string(x));
    sys.membership.push_back(x > 0 ? 0 : (x < 0 ? 1 : -1));
  }
  sys.image = [radius](std::size_t, long s, std::size_t x) -> std::optional<std::size_t> {
    const long y = static_cast<long>(x) + s;
    if (y < 0 || y > 2L * radius) return std::nullopt;
    return static_cast<std::size_t>(y);
  };
  return sys;
}

PingPongSystem u_table_pingpong(long a, long a2, long bound) {
  if (a < 1 || a2 < 1 || bound < 1) throw InvalidInput("u-table parameters must be positive");
  PingPongSystem sys;
  const long side = bound + 1;
  for (long p = 0; p <= bound; ++p)
    for (long q = 0; q <= bound; ++q) {
      sys.element_names.push_back("(" + std::to_string(p) + "," + std::to_string(q) + ")");
      // 2q > a p: X; 2p > a2 q: X'. Disjoint when a a2 >= 4.
      sys.membership.push_back(2 * q > a * p ? 0 : (2 * p > a2 * q ? 1 : -1));
    }
  sys.image = [a, a2, bound, side](std::size_t g, long s, std::size_t x) -> std::optional<std::size_t> {
    long p = static_cast<long>(x) / side;
    long q = static_cast<long>(x) % side;
    if (g == 0)
      q = std::labs(s) * a * p - q;
    else
      p = std::labs(s) * a2 * q - p;
    if (p < 0 || q < 0 || p > bound || q > bound) return std::nullopt;
    return static_cast<std::size_t>(p * side + q);
  };
  return sys;
}

long BoundState::floor() const { return a * u_e - u_e2 + (strict ? 1 : 0); }

BoundState lower_bound_propagate(BoundState state, int steps) {
  if (steps < 0) throw InvalidInput("steps must be nonnegative");
  if (state.a * state.a2 < 4)
    throw HypothesisViolated("a_{E,E'} a_{E',E} = " + std::to_string(state.a * state.a2) + " < 4");
  if (state.a2 * state.u_e2 > (state.a * state.a2 - 2) * state.u_e)
    throw HypothesisViolated("u_E'(X) exceeds (a a' - 2)/a' u_E(X)");
  for (int i = 0; i < steps; ++i) {
    // A_{s+1} >= A_s >= floor: the best floor carries over unchanged.
    state.A.push_back(state.A.empty() ? state.floor() : std::max(state.A.back(), state.floor()));
    state.B.push_back(state.B.empty() ? state.floor() : std::max(state.B.back(), state.floor()));
  }
  return state;
}

}  // namespace sphtwist
