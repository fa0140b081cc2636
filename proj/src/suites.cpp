#include "sphtwist/suites.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <set>
#include <sstream>

#include "sphtwist/artin_groups.hpp"
#include "sphtwist/config.hpp"
#include "sphtwist/errors.hpp"
#include "sphtwist/twist_engine.hpp"

namespace sphtwist {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

// Runs one check; a computational failure inside it fails the check only.
void run_check(SuiteReport& report, const std::string& name, const std::function<bool(std::string&)>& body) {
  CheckResult r{name, false, ""};
  try {
    r.passed = body(r.detail);
  } catch (const ComputationError& e) {
    r.detail = e.what();
  }
  report.checks.push_back(std::move(r));
}

using Gens = std::map<int, QuiverAutomorphism>;

bool holds(const char* lhs, const char* rhs, const Gens& gens) {
  return verify_relation(parse_word(lhs), parse_word(rhs), gens);
}

std::string periods_text(const MeshModel& m) {
  std::ostringstream s;
  s << m.vertices().size() / shift_period_size(m) << " shift periods";
  return s.str();
}

// Permutation of the orbit nodes induced by a generator.
std::vector<std::size_t> induced(const OrbitGraph& g, const QuiverAutomorphism& a) {
  std::vector<std::size_t> perm;
  for (const auto& node : g.nodes) {
    const auto j = g.find(act_on_class(a, node));
    if (!j) throw ValidationFailure("orbit is not closed under " + a.label());
    perm.push_back(*j);
  }
  return perm;
}

std::size_t generated_order(const std::vector<std::vector<std::size_t>>& gens) {
  std::vector<std::size_t> id(gens.front().size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  std::set<std::vector<std::size_t>> seen{id};
  std::vector<std::vector<std::size_t>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        std::vector<std::size_t> q(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) q[i] = g[p[i]];
        if (seen.insert(q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

void classify_check(SuiteReport& report, const MeshModel& m, const SphericalSequenceSpec& e,
                    const SphericalSequenceSpec& e2, DescriptionTag expected) {
  const long k = static_cast<long>(e.length()), k2 = static_cast<long>(e2.length());
  const long hom = u_stat(m, e, e2.members);
  std::ostringstream name;
  name << "classify (" << k << "," << e.sphericity << "," << k2 << "," << e2.sphericity << "," << hom
       << ") is " << to_string(expected);
  run_check(report, name.str(), [&](std::string& detail) {
    const auto d = classify_twist_group(k, e.sphericity, k2, e2.sphericity, hom);
    detail = "got " + to_string(d.tag);
    return d.tag == expected;
  });
}

void spherical_checks(SuiteReport& report, const MeshModel& m, const std::vector<SphericalSequenceSpec>& seqs) {
  for (const auto& s : seqs)
    run_check(report, s.label + " is spherical", [&](std::string& detail) {
      const auto r = check_spherical(m, s);
      if (!r.valid) detail = r.violations.front();
      return r.valid;
    });
}

}  // namespace

SuiteReport verify_d4_suite(Window window) {
  SuiteReport report{"d4", window, {}};
  const auto model = std::make_shared<const MeshModel>(MeshModel::build(Diagram::d4(), window));
  const MeshModel& m = *model;
  const auto seqs = standard_sequences(Diagram::d4());
  const auto& e = seqs[0];
  const auto& e2 = seqs[1];
  spherical_checks(report, m, seqs);

  const auto builtin = builtin_d4_actions(model);
  const Gens gens{{1, builtin.t_e}, {2, builtin.t_e2}};
  run_check(report, "window covers at least 5 shift periods", [&](std::string& detail) {
    detail = periods_text(m);
    return m.vertices().size() >= 5 * shift_period_size(m);
  });
  run_check(report, "derived T_E matches the table", [&](std::string&) {
    return derive_automorphism(model, e).vertex_map() == builtin.t_e.vertex_map();
  });
  run_check(report, "derived T_E' matches the table", [&](std::string&) {
    return derive_automorphism(model, e2).vertex_map() == builtin.t_e2.vertex_map();
  });
  run_check(report, "s1 s2 s1 = s2 s1 s2", [&](std::string&) { return holds("s1 s2 s1", "s2 s1 s2", gens); });
  run_check(report, "s1^2 = s2^2", [&](std::string&) { return holds("s1^2", "s2^2", gens); });
  run_check(report, "s1^a != e for 1 <= a <= 5", [&](std::string& detail) {
    for (long a = 1; a <= 5; ++a)
      if (verify_relation(GroupWord::generator(1, a), GroupWord(), gens)) {
        detail = "s1^" + std::to_string(a) + " acts trivially";
        return false;
      }
    return true;
  });
  run_check(report, "s1^6 = [2] on row 2", [&](std::string& detail) {
    const auto six = evaluate_word(parse_word("s1^6"), gens);
    std::size_t seen = 0;
    for (const auto& [v, img] : six.vertex_map()) {
      if (v.row != 2) continue;
      ++seen;
      if (img != m.shift(v, 2)) {
        detail = "differs at " + to_string(v);
        return false;
      }
    }
    detail = std::to_string(seen) + " vertices";
    return seen > 0;
  });
  run_check(report, "(s1 s2)^3 = [2]", [&](std::string&) {
    const auto cube = evaluate_word(parse_word("(s1 s2)^3"), gens);
    return cube.domain_size() > 0 &&
           std::all_of(cube.vertex_map().begin(), cube.vertex_map().end(),
                       [&](const auto& p) { return p.second == m.shift(p.first, 2); });
  });
  run_check(report, "orbit of {E, E'} has 3 classes with S3 action", [&](std::string& detail) {
    const std::vector<LabelledGenerator> lg{{"T_E", builtin.t_e}, {"T_E'", builtin.t_e2}};
    const auto orbit = orbit_sph(lg, {sph_class(m, e.members), sph_class(m, e2.members)}, 6);
    const auto order = generated_order({induced(orbit, builtin.t_e), induced(orbit, builtin.t_e2)});
    detail = std::to_string(orbit.nodes.size()) + " classes, group of order " + std::to_string(order);
    return orbit.nodes.size() == 3 && order == 6;
  });
  run_check(report, "exceptional case A", [&](std::string&) {
    return detect_exceptional(model, e, e2, ExceptionalCase::A);
  });
  classify_check(report, m, e, e2, DescriptionTag::ExceptionalA2orS3Z);
  return report;
}

SuiteReport verify_a3_suite(Window window) {
  SuiteReport report{"a3", window, {}};
  const auto model = std::make_shared<const MeshModel>(MeshModel::build(Diagram::a(3), window));
  const MeshModel& m = *model;
  const auto seqs = standard_sequences(Diagram::a(3));
  const auto& e = seqs[0];
  const auto& e2 = seqs[1];
  spherical_checks(report, m, seqs);

  const auto te = derive_automorphism(model, e);
  const auto te2 = derive_automorphism(model, e2);
  const Gens gens{{1, te}, {2, te2}};
  run_check(report, "window covers at least 5 shift periods", [&](std::string& detail) {
    detail = periods_text(m);
    return m.vertices().size() >= 5 * shift_period_size(m);
  });
  run_check(report, "derived twists preserve arrows", [&](std::string&) {
    return te.broken_arrows().empty() && te2.broken_arrows().empty() && te.compatibility_failures().empty() &&
           te2.compatibility_failures().empty();
  });
  run_check(report, "s1 s2 = s2 s1", [&](std::string&) { return holds("s1 s2", "s2 s1", gens); });
  run_check(report, "s1^2 = s2^2", [&](std::string&) { return holds("s1^2", "s2^2", gens); });
  run_check(report, "(s1 s2^-1)^2 = e", [&](std::string&) { return holds("(s1 s2^-1)^2", "e", gens); });
  run_check(report, "s1 s2^-1 != e", [&](std::string&) { return !holds("s1 s2^-1", "e", gens); });
  run_check(report, "T_E E'_0 = E'_1[1] = (-1,1)", [&](std::string& detail) {
    const Vertex img = te(e2.members[0]);
    detail = "got " + to_string(img);
    return img == m.shift(e2.members[1], 1) && img == Vertex{-1, 1};
  });
  run_check(report, "exceptional case B", [&](std::string&) {
    return detect_exceptional(model, e, e2, ExceptionalCase::B);
  });
  classify_check(report, m, e, e2, DescriptionTag::ExceptionalB2orZxZ);
  return report;
}

}  // namespace sphtwist
