#include "sphtwist/cli.hpp"

#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sphtwist/artin_groups.hpp"
#include "sphtwist/config.hpp"
#include "sphtwist/errors.hpp"
#include "sphtwist/lambda_algebra.hpp"
#include "sphtwist/mesh_model.hpp"
#include "sphtwist/picard.hpp"
#include "sphtwist/suites.hpp"
#include "sphtwist/twist_engine.hpp"

namespace sphtwist {

namespace {

using nlohmann::json;

json vertex_json(const Vertex& v) { return json::array({v.row, v.pos}); }

// Everything the parser fills in; resolved against the config afterwards.
struct Options {
  std::string config_path;
  std::vector<int> window;
  std::optional<int> depth;
  std::string format;

  // classify
  long k = 0, m = 0, kp = 0, mp = 0, hom = 0;
  // group
  std::string group_spec;
  std::vector<std::string> words;
  // mesh / twist
  std::string diagram;
  std::vector<std::string> vertices;
  bool oracle = false;
  bool builtin = false;
  std::string word = "s1";
  std::string system = "free";
  int rank = 2;
  int radius = 10;
  long a = 0, a2 = 0, ue = 0, ue2 = 0;
  long bound = 3;
  bool strict = false;
  int steps = 4;
  // algebra / picard
  std::optional<int> lambda_k;
  std::string info;
  // Scalars: CLI11 strips [ ] around vector items.
  std::string element1, element2;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {
    if (!o_.config_path.empty()) config_ = load_config(o_.config_path);
  }

  bool json_output() const {
    std::string f = o_.format;
    if (f.empty()) f = config_.get("format").value_or("text");
    if (f != "text" && f != "json") throw InvalidInput("format must be text or json");
    return f == "json";
  }

  Diagram diagram() const {
    if (!o_.diagram.empty()) return parse_diagram(o_.diagram);
    return parse_diagram(config_.get("diagram").value_or("d4"));
  }

  Window window() const {
    if (!o_.window.empty()) {
      if (o_.window[0] > o_.window[1]) throw InvalidInput("window bounds out of order");
      return {o_.window[0], o_.window[1]};
    }
    if (const auto w = config_.get("window")) return parse_window(*w);
    return {-12, 12};
  }

  int depth(int fallback) const {
    if (o_.depth) return *o_.depth;
    if (const auto d = config_.get("depth")) return parse_int(*d, "depth");
    return fallback;
  }

  int lambda_k() const {
    if (o_.lambda_k) return *o_.lambda_k;
    if (const auto k = config_.get("k")) return parse_int(*k, "k");
    throw InvalidInput("--k is required");
  }

  std::vector<SphericalSequenceSpec> sequences() const {
    auto seqs = sequences_from_config(config_);
    if (seqs.empty()) seqs = standard_sequences(diagram());
    return seqs;
  }

  std::shared_ptr<const MeshModel> model() const {
    return std::make_shared<const MeshModel>(MeshModel::build(diagram(), window()));
  }

  // Generator i + 1 is the twist along sequence i.
  std::vector<LabelledGenerator> generators(const std::shared_ptr<const MeshModel>& m,
                                            const std::vector<SphericalSequenceSpec>& seqs) const {
    std::vector<LabelledGenerator> out;
    if (o_.builtin) {
      const auto b = builtin_d4_actions(m);
      return {{"T_E", b.t_e}, {"T_E'", b.t_e2}};
    }
    for (const auto& s : seqs) out.push_back({"T_" + s.label, derive_automorphism(m, s)});
    return out;
  }

  std::map<int, QuiverAutomorphism> generator_map(const std::vector<LabelledGenerator>& gens) const {
    std::map<int, QuiverAutomorphism> out;
    for (std::size_t i = 0; i < gens.size(); ++i) out.emplace(static_cast<int>(i) + 1, gens[i].action);
    return out;
  }

  void emit(const json& j) { out_ << j.dump() << '\n'; }

  int classify() {
    const auto d = classify_twist_group(o_.k, o_.m, o_.kp, o_.mp, o_.hom);
    const bool family = d.tag == DescriptionTag::QuotientFamily;
    if (json_output()) {
      json j{{"tag", to_string(d.tag)}, {"notes", d.notes}};
      j["family"] = family ? json(to_string(d.family)) : json(nullptr);
      j["center_power_multiplier"] = family ? json(d.center_power_multiplier) : json(nullptr);
      emit(j);
    } else {
      out_ << to_string(d.tag) << '\n';
      if (family)
        out_ << "family " << to_string(d.family) << " modulo Delta^(" << d.center_power_multiplier << "t)\n";
      if (!d.notes.empty()) out_ << d.notes << '\n';
    }
    return kExitOk;
  }

  int group_nf() {
    const auto spec = parse_group_spec(o_.group_spec);
    const auto w = parse_word(o_.words.at(0));
    const auto nf = normal_form(w, spec);
    if (json_output()) {
      json syl = json::array();
      for (const auto& l : nf.syllables) syl.push_back({l.gen, l.exp});
      emit({{"group", to_string(spec)},
            {"word", to_string(w)},
            {"center_exponent", nf.center_exponent},
            {"syllables", syl},
            {"normal_form", to_string(nf, spec)}});
    } else {
      out_ << to_string(nf, spec) << '\n';
    }
    return kExitOk;
  }

  int group_eq() {
    const auto spec = parse_group_spec(o_.group_spec);
    const auto lhs = parse_word(o_.words.at(0));
    const auto rhs = parse_word(o_.words.at(1));
    const bool eq = are_equal(lhs, rhs, spec);
    if (json_output())
      emit({{"group", to_string(spec)}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}, {"equal", eq}});
    else
      out_ << (eq ? "true" : "false") << '\n';
    return eq ? kExitOk : kExitFalse;
  }

  int mesh_hom() {
    const auto m = model();
    const Vertex x = parse_vertex(o_.vertices.at(0));
    const Vertex y = parse_vertex(o_.vertices.at(1));
    const int d = hom_dim(*m, x, y);
    std::optional<int> oracle;
    if (o_.oracle) oracle = hom_dim_oracle(*m, x, y);
    if (json_output()) {
      json j{{"diagram", to_string(m->diagram())},
             {"window", {m->window().lo, m->window().hi}},
             {"x", vertex_json(x)},
             {"y", vertex_json(y)},
             {"hom_dim", d}};
      if (oracle) j["oracle"] = *oracle;
      emit(j);
    } else {
      out_ << d << '\n';
      if (oracle) out_ << "oracle " << *oracle << '\n';
    }
    return (oracle && *oracle != d) ? kExitFalse : kExitOk;
  }

  int twist_act() {
    const auto m = model();
    const auto gens = generators(m, sequences());
    const auto word = parse_word(o_.word);
    const auto action = evaluate_word(word, generator_map(gens));
    json images = json::array();
    for (const auto& text : o_.vertices) {
      const Vertex v = parse_vertex(text);
      const Vertex img = action(v);
      if (json_output())
        images.push_back({{"vertex", vertex_json(v)}, {"image", vertex_json(img)}});
      else
        out_ << to_string(v) << " -> " << to_string(img) << '\n';
    }
    if (json_output()) emit({{"word", to_string(word)}, {"images", images}});
    return kExitOk;
  }

  int twist_orbit() {
    const auto m = model();
    const auto seqs = sequences();
    const auto gens = generators(m, seqs);
    std::vector<SphClass> seeds;
    for (const auto& s : seqs) seeds.push_back(sph_class(*m, s.members));
    const int d = depth(4);
    const auto orbit = orbit_sph(gens, seeds, d);
    if (json_output()) {
      json names = json::array();
      for (const auto& g : gens) names.push_back(g.name);
      emit({{"diagram", to_string(m->diagram())},
            {"window", {m->window().lo, m->window().hi}},
            {"depth", d},
            {"generators", names},
            {"orbit", json::parse(orbit_to_json(orbit))}});
    } else {
      out_ << orbit_to_text(orbit);
    }
    return kExitOk;
  }

  int twist_verify() {
    const auto m = model();
    const auto gens = generators(m, sequences());
    const auto lhs = parse_word(o_.words.at(0));
    const auto rhs = parse_word(o_.words.at(1));
    const bool ok = verify_relation(lhs, rhs, generator_map(gens));
    if (json_output())
      emit({{"diagram", to_string(m->diagram())},
            {"window", {m->window().lo, m->window().hi}},
            {"lhs", to_string(lhs)},
            {"rhs", to_string(rhs)},
            {"holds", ok}});
    else
      out_ << (ok ? "true" : "false") << '\n';
    return ok ? kExitOk : kExitFalse;
  }

  int twist_pingpong() {
    PingPongSystem sys;
    if (o_.system == "free")
      sys = free_group_pingpong(depth(6), o_.rank);
    else if (o_.system == "line")
      sys = integer_line_pingpong(o_.radius);
    else if (o_.system == "utable")
      sys = u_table_pingpong(o_.a, o_.a2, o_.radius);
    else
      throw InvalidInput("unknown ping-pong system " + o_.system);
    const auto r = pingpong_certify(sys, o_.bound);
    if (json_output()) {
      emit(json::parse(to_json(sys, r)));
    } else {
      out_ << r.status << '\n' << "checks " << r.checks << '\n' << "unexplored " << r.unexplored << '\n';
      if (r.witness)
        out_ << "witness: generator " << r.witness->generator << " power " << r.witness->power << " sends "
             << sys.element_names[r.witness->element] << " to " << sys.element_names[r.witness->image] << '\n';
    }
    return r.certified ? kExitOk : kExitFalse;
  }

  int twist_bound() {
    BoundState s;
    s.a = o_.a;
    s.a2 = o_.a2;
    s.u_e = o_.ue;
    s.u_e2 = o_.ue2;
    s.strict = o_.strict;
    s = lower_bound_propagate(s, o_.steps);
    if (json_output()) {
      emit({{"a", s.a}, {"a2", s.a2}, {"u_e", s.u_e}, {"u_e2", s.u_e2}, {"strict", s.strict},
            {"floor", s.floor()}, {"A", s.A}, {"B", s.B}});
    } else {
      out_ << "floor " << s.floor() << '\n';
      out_ << "A";
      for (long v : s.A) out_ << ' ' << v;
      out_ << "\nB";
      for (long v : s.B) out_ << ' ' << v;
      out_ << '\n';
    }
    return kExitOk;
  }

  int verify(const std::string& which) {
    const Window w = window();
    const SuiteReport r = which == "d4" ? verify_d4_suite(w) : verify_a3_suite(w);
    std::size_t passed = 0;
    json checks = json::array();
    for (const auto& c : r.checks) {
      passed += c.passed;
      if (json_output()) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      } else {
        out_ << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) out_ << " (" << c.detail << ')';
        out_ << '\n';
      }
    }
    if (json_output())
      emit({{"suite", r.name}, {"window", {w.lo, w.hi}}, {"passed", r.passed()}, {"checks", checks}});
    else
      out_ << r.name << ": " << passed << '/' << r.checks.size() << " checks passed\n";
    return r.passed() ? kExitOk : kExitFalse;
  }

  int algebra() {
    if (!o_.info.empty() && o_.info != "info") throw InvalidInput("unknown algebra report " + o_.info);
    const AlgebraModel alg = build_lambda(lambda_k());
    const auto cartan = cartan_matrix(alg);
    const bool vanish = relations_vanish(alg);
    const auto nu = nakayama(alg);
    const auto data = spherical_data(alg);
    const bool central = central_action_matches_k0(alg);
    std::vector<std::string> names;
    for (const auto& v : alg.vertices()) names.push_back(to_string(v));
    if (json_output()) {
      emit({{"k", alg.k()},
            {"vertices", names},
            {"dimension", alg.dimension()},
            {"top_degree", alg.top_degree()},
            {"relations_vanish", vanish},
            {"cartan", cartan},
            {"nakayama_order", nu.order},
            {"a", data.a},
            {"a2", data.a2},
            {"central_action_matches_k0", central}});
    } else {
      out_ << "Lambda_" << alg.k() << '\n';
      out_ << "vertices " << names.size() << '\n';
      out_ << "dimension " << alg.dimension() << '\n';
      out_ << "top degree " << alg.top_degree() << '\n';
      out_ << "relations vanish " << (vanish ? "yes" : "no") << '\n';
      out_ << "cartan matrix (rows x, columns y: dim Hom(P_x, P_y))\n";
      for (std::size_t x = 0; x < cartan.size(); ++x) {
        out_ << "  " << names[x] << ':';
        for (int d : cartan[x]) out_ << ' ' << d;
        out_ << '\n';
      }
      out_ << "selfinjective yes, nakayama order " << nu.order << '\n';
      out_ << "a(E,E') " << data.a << ", a(E',E) " << data.a2 << '\n';
      out_ << "central action matches K0 " << (central ? "yes" : "no") << '\n';
    }
    return vanish && central ? kExitOk : kExitFalse;
  }

  int picard_nf() {
    const int k = lambda_k();
    const auto el = parse_picard(o_.element1, k);
    const auto nf = pic_normal_form(el);
    if (json_output())
      emit({{"k", k},
            {"input", to_string(el)},
            {"normal_form", to_string(nf)},
            {"word", to_string(nf.w)},
            {"shift", nf.a},
            {"nakayama", nf.b},
            {"unit", to_string(nf.u)}});
    else
      out_ << to_string(nf) << '\n';
    return kExitOk;
  }

  int picard_eq() {
    const int k = lambda_k();
    const auto x = parse_picard(o_.element1, k);
    const auto y = parse_picard(o_.element2, k);
    const bool eq = pic_equal(x, y);
    if (json_output())
      emit({{"k", k}, {"lhs", to_string(x)}, {"rhs", to_string(y)}, {"equal", eq}});
    else
      out_ << (eq ? "true" : "false") << '\n';
    return eq ? kExitOk : kExitFalse;
  }

 private:
  static int parse_int(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size()) throw ParseError("bad integer for " + what, 0);
    return v;
  }

  const Options& o_;
  std::ostream& out_;
  Config config_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Spherical twist groups: classification, word problems and worked examples", "sphtwist"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--config", o.config_path, "key = value settings file");
  app.add_option("--window", o.window, "window of positions LO HI")->expected(2);
  app.add_option("--depth", o.depth, "orbit or ping-pong depth");
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* classify = app.add_subcommand("classify", "group generated by two twists");
  classify->add_option("--k", o.k, "length of E")->required();
  classify->add_option("--m", o.m, "sphericity of E")->required();
  classify->add_option("--kp", o.kp, "length of E'")->required();
  classify->add_option("--mp", o.mp, "sphericity of E'")->required();
  classify->add_option("--hom", o.hom, "sum over l of dim Hom(E, E'[l])")->required();

  auto* group = app.add_subcommand("group", "word problems");
  group->require_subcommand(1);
  auto* group_nf = group->add_subcommand("nf", "normal form of a word");
  group_nf->add_option("spec", o.group_spec, "group")->required();
  group_nf->add_option("word", o.words, "word")->required()->expected(1);
  auto* group_eq = group->add_subcommand("eq", "equality of two words");
  group_eq->add_option("spec", o.group_spec, "group")->required();
  group_eq->add_option("words", o.words, "two words")->required()->expected(2);

  auto* mesh = app.add_subcommand("mesh", "mesh category of ZΓ");
  mesh->require_subcommand(1);
  auto* mesh_hom = mesh->add_subcommand("hom", "dim Hom(X, Y)");
  mesh_hom->add_option("--diagram", o.diagram, "d4 or a<n>");
  mesh_hom->add_flag("--oracle", o.oracle, "also compute by linear algebra and compare");
  mesh_hom->add_option("vertices", o.vertices, "X Y as (row,pos)")->required()->expected(2);

  auto* twist = app.add_subcommand("twist", "twist actions on ZΓ");
  twist->require_subcommand(1);
  const auto add_setup = [&o](CLI::App* sub) {
    sub->add_option("--diagram", o.diagram, "d4 or a<n>");
    sub->add_flag("--builtin", o.builtin, "use the D4 tables instead of deriving");
  };
  auto* twist_act = twist->add_subcommand("act", "images of vertices under a word");
  add_setup(twist_act);
  twist_act->add_option("--word", o.word, "word in s1, s2, ... (default s1)");
  twist_act->add_option("vertices", o.vertices, "(row,pos) ...")->required();
  auto* twist_orbit = twist->add_subcommand("orbit", "orbit of the sequences up to shifts");
  add_setup(twist_orbit);
  auto* twist_verify = twist->add_subcommand("verify-relation", "does LHS = RHS act identically");
  add_setup(twist_verify);
  twist_verify->add_option("words", o.words, "LHS RHS")->required()->expected(2);
  auto* twist_pingpong = twist->add_subcommand("pingpong", "bounded ping-pong certificate");
  twist_pingpong->add_option("--system", o.system, "free, line or utable")
      ->check(CLI::IsMember({"free", "line", "utable"}));
  twist_pingpong->add_option("--rank", o.rank, "free group rank");
  twist_pingpong->add_option("--radius", o.radius, "explored radius for line and utable");
  twist_pingpong->add_option("--a", o.a, "a_{E,E'} for utable");
  twist_pingpong->add_option("--a2", o.a2, "a_{E',E} for utable");
  twist_pingpong->add_option("--bound", o.bound, "largest |power| tried");
  auto* twist_bound = twist->add_subcommand("bound", "lower bounds for twist growth");
  twist_bound->add_option("--a", o.a, "a_{E,E'}")->required();
  twist_bound->add_option("--a2", o.a2, "a_{E',E}")->required();
  twist_bound->add_option("--ue", o.ue, "u_E(X)")->required();
  twist_bound->add_option("--ue2", o.ue2, "u_E'(X)")->required();
  twist_bound->add_flag("--strict", o.strict, "X ~ E'");
  twist_bound->add_option("--steps", o.steps, "number of terms");

  auto* verify = app.add_subcommand("verify", "worked example suites");
  verify->require_subcommand(1);
  auto* verify_d4 = verify->add_subcommand("d4", "the D4 suite");
  auto* verify_a3 = verify->add_subcommand("a3", "the A3 suite");

  auto* algebra = app.add_subcommand("algebra", "the algebras Lambda_k");
  algebra->require_subcommand(1);
  auto* lambda = algebra->add_subcommand("lambda", "report on Lambda_k");
  lambda->add_option("--k", o.lambda_k, "parameter k >= 1");
  lambda->add_option("report", o.info, "info (default)");

  auto* picard = app.add_subcommand("picard", "derived Picard group of Lambda_k");
  picard->require_subcommand(1);
  auto* picard_nf = picard->add_subcommand("nf", "canonical form");
  picard_nf->add_option("--k", o.lambda_k, "parameter k >= 1");
  picard_nf->add_option("element", o.element1, "[word ; shift ; nak ; unit]")->required();
  auto* picard_eq = picard->add_subcommand("eq", "equality");
  picard_eq->add_option("--k", o.lambda_k, "parameter k >= 1");
  picard_eq->add_option("lhs", o.element1, "first element")->required();
  picard_eq->add_option("rhs", o.element2, "second element")->required();

  std::vector<std::string> argv_store{"sphtwist"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Runner run(o, out);
    if (*classify) return run.classify();
    if (*group_nf) return run.group_nf();
    if (*group_eq) return run.group_eq();
    if (*mesh_hom) return run.mesh_hom();
    if (*twist_act) return run.twist_act();
    if (*twist_orbit) return run.twist_orbit();
    if (*twist_verify) return run.twist_verify();
    if (*twist_pingpong) return run.twist_pingpong();
    if (*twist_bound) return run.twist_bound();
    if (*verify_d4) return run.verify("d4");
    if (*verify_a3) return run.verify("a3");
    if (*lambda) return run.algebra();
    if (*picard_nf) return run.picard_nf();
    if (*picard_eq) return run.picard_eq();
    err << "error: no command\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const MismatchedParameter& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ComputationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitComputation;
  }
}

}  // namespace sphtwist
