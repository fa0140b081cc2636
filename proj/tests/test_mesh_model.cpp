#include <random>

#include "doctest.h"
#include "path_oracle.hpp"
#include "sphtwist/errors.hpp"
#include "sphtwist/mesh_model.hpp"

using namespace sphtwist;

namespace {

SphericalSequenceSpec d4_e() { return {"E", 2, {1, 1, 0}, {{1, 0}, {1, -1}, {1, -2}}}; }
SphericalSequenceSpec d4_e2() { return {"E'", 2, {1, 1, 0}, {{2, 1}, {2, 0}, {2, -1}}}; }
SphericalSequenceSpec a3_e() { return {"E", 1, {1, 0}, {{0, 0}, {0, -1}}}; }
SphericalSequenceSpec a3_e2() { return {"E'", 2, {1, 0, 1, 0}, {{1, 0}, {1, -1}, {-1, 0}, {-1, -1}}}; }

}  // namespace

TEST_CASE("vertex and diagram parsing") {
  CHECK(parse_vertex("(1,-2)") == Vertex{1, -2});
  CHECK(parse_vertex(" ( -1 , 3 ) ") == Vertex{-1, 3});
  CHECK(to_string(Vertex{2, -5}) == "(2,-5)");
  CHECK_THROWS_AS(parse_vertex("(1;2)"), ParseError);
  CHECK_THROWS_AS(parse_vertex("(1,2"), ParseError);
  CHECK_THROWS_AS(parse_vertex(""), ParseError);
  CHECK(parse_diagram("D4") == Diagram::d4());
  CHECK(parse_diagram("a3") == Diagram::a(3));
  CHECK_THROWS_AS(parse_diagram("e6"), UnsupportedDiagram);
  CHECK_THROWS_AS(MeshModel::build(Diagram::a(0), {0, 1}), UnsupportedDiagram);
  CHECK_THROWS_AS(MeshModel::build(Diagram::d4(), {1, 0}), InvalidInput);
}

TEST_CASE("build_mesh windows") {
  const auto d4 = MeshModel::build(Diagram::d4(), {-3, 3});
  CHECK(d4.vertices().size() == 28);
  // Six arrows per position, minus the three beta arrows leaving the last one.
  CHECK(d4.arrows().size() == 6 * 7 - 3);
  bool saw_alpha = false;
  for (const auto& a : d4.arrows())
    if (a.source == Vertex{0, 0} && a.target == Vertex{2, 0}) saw_alpha = a.label == "alpha_{2,0}";
  CHECK(saw_alpha);

  const auto a3 = MeshModel::build(Diagram::a(3), {0, 0});
  CHECK(a3.vertices().size() == 3);
  CHECK(a3.complete_meshes() == 0);

  const auto small = MeshModel::build(Diagram::d4(), {0, 2});
  CHECK(small.serre({1, 0}) == Vertex{1, 2});
  CHECK(small.contains(small.serre({1, 0})));
}

TEST_CASE("serre and shift rules") {
  const auto d4 = MeshModel::build(Diagram::d4(), {-6, 6});
  const auto a3 = MeshModel::build(Diagram::a(3), {-6, 6});
  for (const auto& v : d4.vertices()) {
    CHECK(d4.serre(v) == Vertex{v.row, v.pos + 2});
    CHECK(d4.shift(v) == Vertex{v.row, v.pos + 3});
    CHECK(d4.serre(d4.shift(v)) == d4.shift(d4.serre(v)));
  }
  for (const auto& v : a3.vertices()) {
    CHECK(a3.serre(v) == Vertex{-v.row, v.pos + 1});
    CHECK(a3.shift(v) == Vertex{-v.row, v.pos + 2});
    CHECK(a3.serre(a3.shift(v)) == a3.shift(a3.serre(v)));
    CHECK(a3.shift(a3.shift(v, 3), -3) == v);
  }
  for (int n : {1, 2, 4, 5}) {
    const auto an = MeshModel::build(Diagram::a(n), {-8, 8});
    for (const auto& v : an.vertices()) {
      // [2] = tau^{-(n+1)} in D^b(A_n).
      CHECK(an.shift(v, 2) == an.tau(v, -(n + 1)));
      CHECK(an.shift(an.shift(v, 1), -1) == v);
      CHECK(an.serre(an.shift(v)) == an.shift(an.serre(v)));
    }
  }
}

TEST_CASE("hom_dim examples") {
  const auto d4 = MeshModel::build(Diagram::d4(), {-6, 6});
  CHECK(hom_dim(d4, {1, 0}, {1, 0}) == 1);
  CHECK(hom_dim(d4, {1, 0}, {2, 1}) == 1);
  CHECK(hom_dim(d4, {1, 0}, {1, 3}) == 0);
  CHECK(hom_dim(d4, {1, 0}, {1, 2}) == 1);  // Hom(x, S x) is dual to End(x)
  CHECK(hom_dim(d4, {0, 0}, {0, 1}) == 2);
  CHECK(hom_dim(d4, {1, 2}, {1, 0}) == 0);
  CHECK_THROWS_AS(hom_dim(d4, {1, 0}, {1, 7}), InsufficientWindow);

  CHECK(hom_dim_oracle(d4, {1, 0}, {1, 0}) == 1);
  CHECK(hom_dim_oracle(d4, {0, 0}, {0, 1}) == hom_dim(d4, {0, 0}, {0, 1}));
  const auto a3 = MeshModel::build(Diagram::a(3), {-4, 4});
  CHECK(hom_dim_oracle(a3, {1, -1}, {0, 0}) == 1);
}

TEST_CASE("knitting, cokernel oracle and path enumeration agree") {
  for (Diagram d : {Diagram::d4(), Diagram::a(3), Diagram::a(4), Diagram::a(2), Diagram::a(1)}) {
    const auto m = MeshModel::build(d, {0, 5});
    for (const auto& x : m.vertices()) {
      const auto knit = knit_from(m, x);
      const auto exact = path_space_dims_from(m, x);
      CHECK(knit == exact);
      for (const auto& y : m.vertices()) {
        if (y.pos > x.pos + 3) continue;
        CHECK(testing::brute_force_hom(m, x, y) == exact[m.index_of(y)]);
      }
    }
  }
}

TEST_CASE("Serre functor preserves hom dimensions") {
  const auto d4 = MeshModel::build(Diagram::d4(), {-8, 8});
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, d4.vertices().size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const Vertex x = d4.vertices()[pick(rng)];
    const Vertex y = d4.vertices()[pick(rng)];
    if (!d4.contains(d4.serre(x)) || !d4.contains(d4.serre(y))) continue;
    CHECK(hom_dim(d4, x, y) == hom_dim(d4, d4.serre(x), d4.serre(y)));
    // Serre duality: Hom(x, y) = D Hom(y, S x).
    CHECK(hom_dim(d4, x, y) == hom_dim(d4, y, d4.serre(x)));
  }
}

TEST_CASE("u statistics") {
  const auto d4 = MeshModel::build(Diagram::d4(), {-8, 8});
  CHECK(u_stat(d4, d4_e(), d4_e2().members) == 3);
  CHECK(u_stat(d4, d4_e(), d4_e().members) == 6);
  CHECK(u_stat(d4, d4_e(), {}) == 0);
  CHECK(a_value(d4, d4_e(), d4_e2()) == 1);
  CHECK(a_value(d4, d4_e2(), d4_e()) == 1);

  const auto tiny = MeshModel::build(Diagram::d4(), {0, 1});
  CHECK_THROWS_AS(u_stat(tiny, d4_e(), d4_e2().members), InsufficientWindow);
}

TEST_CASE("check_spherical") {
  const auto d4 = MeshModel::build(Diagram::d4(), {-8, 8});
  auto report = check_spherical(d4, d4_e());
  CHECK(report.valid);
  CHECK(report.sphericity == 2);
  CHECK(check_spherical(d4, d4_e2()).valid);

  auto bad = d4_e();
  bad.degrees = {1, 1, 1};
  bad.sphericity = 3;
  report = check_spherical(d4, bad);
  CHECK_FALSE(report.valid);
  bool orbit_at_2 = false;
  for (const auto& v : report.violations)
    if (v.find("orbit condition fails at i=2") != std::string::npos) orbit_at_2 = true;
  CHECK(orbit_at_2);

  auto wrong_sum = d4_e();
  wrong_sum.sphericity = 3;
  CHECK_FALSE(check_spherical(d4, wrong_sum).valid);

  const auto a3 = MeshModel::build(Diagram::a(3), {-8, 8});
  CHECK(check_spherical(a3, a3_e()).valid);
  report = check_spherical(a3, a3_e2());
  CHECK(report.valid);
  CHECK(report.sphericity == 2);
}

TEST_CASE("dimension statistics balance lengths") {
  const auto d4 = MeshModel::build(Diagram::d4(), {-8, 8});
  auto stats = dimension_statistics(d4, {d4_e(), d4_e2()});
  CHECK(stats.lengths_balance());
  const auto a3 = MeshModel::build(Diagram::a(3), {-8, 8});
  stats = dimension_statistics(a3, {a3_e(), a3_e2()});
  CHECK(stats.a_values.at({"E", "E'"}) == 2);
  CHECK(stats.a_values.at({"E'", "E"}) == 1);
  CHECK(stats.lengths_balance());
}
