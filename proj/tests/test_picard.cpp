#include <random>

#include "doctest.h"
#include "group_oracle.hpp"
#include "sphtwist/errors.hpp"
#include "sphtwist/picard.hpp"

using namespace sphtwist;

namespace {

PicardElement el(int k, const char* word, long a = 0, long b = 0, UnitElement u = {}) {
  return {k, parse_word(word), a, b, u};
}

UnitElement minus_one() { return {-1, {}}; }

PicardElement random_element(std::mt19937& rng, int k) {
  std::uniform_int_distribution<long> shift(-12, 12), nak(-10, 10), eps(-2, 2);
  std::bernoulli_distribution coin(0.5);
  PicardElement x{k, testing::random_word(rng, 2, 6, 3), shift(rng), nak(rng), {}};
  if (coin(rng)) x.u.sign = -1;
  if (const long e = eps(rng)) x.u.free_part["eps"] = e;
  return x;
}

PicardElement power(const PicardElement& x, long n) {
  PicardElement out = pic_identity(x.k);
  const PicardElement base = n < 0 ? pic_invert(x) : x;
  for (long i = 0; i < std::labs(n); ++i) out = pic_multiply(out, base);
  return out;
}

}  // namespace

TEST_CASE("units") {
  CHECK(parse_unit("1").is_one());
  CHECK(parse_unit("(-1)^3").sign == -1);
  CHECK(parse_unit("(-1)^4").sign == 1);
  const auto u = parse_unit("(-1)^1 * eps^2 * eta");
  CHECK(u.sign == -1);
  CHECK(u.free_part.at("eps") == 2);
  CHECK(to_string(u) == "(-1)^1 * eps^2 * eta");
  CHECK((u * u.inverse()).sign == 1);
  CHECK((u * u.inverse()).free_part.empty());
  CHECK(parse_unit("eps * eps^-1").is_one());
  CHECK_THROWS_AS(parse_unit("2eps"), ParseError);
  CHECK_THROWS_AS(parse_unit("eps *"), ParseError);
}

TEST_CASE("normal form examples") {
  for (int k = 1; k <= 4; ++k) {
    const PicardElement delta{k, center_word(BraidType::G2), 0, 0, {}};
    const auto nf = pic_normal_form(delta);
    CHECK(nf.w.empty());
    CHECK(nf.a == 5);
    CHECK(nf.b == 3 % (3 * k));
    CHECK(nf.u.sign == (k % 2 == 0 ? 1 : -1));
    CHECK(pic_equal(delta, {k, GroupWord(), 5, 3, k % 2 ? minus_one() : UnitElement{}}));
    CHECK(pic_equal(pic_relation(k), pic_identity(k)));
    const auto id = pic_normal_form(pic_identity(k));
    CHECK(id.w.empty());
    CHECK(id.a == 0);
    CHECK(id.b == 0);
    CHECK(id.u.is_one());

    // Delta^2 equals (e, 10, 6 mod 3k, (-1)^{2k} = +1).
    const auto sq = pic_multiply(el(k, "(s1 s2)^3"), el(k, "(s1 s2)^3"));
    CHECK(sq.w.empty());
    CHECK(sq.a == 10);
    CHECK(sq.b == 6 % (3 * k));
    CHECK(sq.u.is_one());
  }
}

TEST_CASE("group law") {
  const int k = 2;
  CHECK(pic_equal(pic_multiply(el(k, "s1"), el(k, "s2")), el(k, "s1 s2")));
  CHECK_FALSE(pic_equal(el(k, "e", 1, 0), el(k, "e", 0, 1)));
  CHECK_FALSE(pic_equal(el(k, "s1"), el(k, "s2")));
  CHECK(pic_equal(el(k, "e", 0, 6), pic_identity(k)));
  CHECK_THROWS_AS(pic_multiply(el(1, "s1"), el(2, "s1")), MismatchedParameter);
  CHECK_THROWS_AS(pic_equal(el(1, "s1"), el(2, "s1")), MismatchedParameter);
}

TEST_CASE("random associativity, inverses and coset invariance") {
  std::mt19937 rng(31);
  for (int i = 0; i < 300; ++i) {
    const int k = 1 + i % 3;
    const auto x = random_element(rng, k), y = random_element(rng, k), z = random_element(rng, k);
    CHECK(pic_equal(pic_multiply(pic_multiply(x, y), z), pic_multiply(x, pic_multiply(y, z))));
    CHECK(pic_equal(pic_multiply(x, pic_invert(x)), pic_identity(k)));
    std::uniform_int_distribution<long> t(-3, 3);
    const auto shifted = pic_multiply(x, power(pic_relation(k), t(rng)));
    const auto a = pic_normal_form(x), b = pic_normal_form(shifted);
    CHECK(a.w == b.w);
    CHECK(a.a == b.a);
    CHECK(a.b == b.b);
    CHECK(a.u == b.u);
    // Idempotence.
    const auto again = pic_normal_form(a);
    CHECK(again.w == a.w);
    CHECK(again.a == a.a);
    CHECK(again.b == a.b);
    // 6a + 5 e(w) vanishes on the relation, so it is a class invariant.
    CHECK(6 * x.a + 5 * x.w.total_exponent() == 6 * a.a + 5 * a.w.total_exponent());
  }
}

TEST_CASE("braid part embeds") {
  // w -> (w, 0, 0, 1) is injective on center-free normal forms.
  std::mt19937 rng(32);
  const auto g2 = GroupSpec::braid_group(BraidType::G2);
  for (int i = 0; i < 300; ++i) {
    const auto u = testing::random_word(rng, 2, 6);
    const auto v = testing::random_word(rng, 2, 6);
    NormalForm nu = normal_form(u, g2), nv = normal_form(v, g2);
    nu.center_exponent = nv.center_exponent = 0;
    const auto lu = lift(nu, g2), lv = lift(nv, g2);
    CHECK(pic_equal({3, lu, 0, 0, {}}, {3, lv, 0, 0, {}}) == testing::oracle_equal(lu, lv, g2));
  }
}

TEST_CASE("element syntax") {
  const auto x = parse_picard("[s1 s2^-1 ; 5 ; 3 ; (-1)^1 * eps]", 2);
  CHECK(x.a == 5);
  CHECK(x.b == 3);
  CHECK(x.u.sign == -1);
  CHECK(to_string(x) == "[s1 s2^-1 ; 5 ; 3 ; (-1)^1 * eps]");
  CHECK(parse_picard("[ (s1 s2)^3 ; 0 ; 0 ]", 1).w == center_word(BraidType::G2));
  CHECK(to_string(pic_normal_form(parse_picard("[(s1 s2)^3;0;0;1]", 1))) == "[e ; 5 ; 0 ; (-1)^1]");
  CHECK_THROWS_AS(parse_picard("s1 ; 0 ; 0", 1), ParseError);
  CHECK_THROWS_AS(parse_picard("[s1 ; x ; 0]", 1), ParseError);
  CHECK_THROWS_AS(parse_picard("[s1 ; 0]", 1), ParseError);
  CHECK_THROWS_AS(parse_picard("[s3 ; 0 ; 0]", 1), InvalidInput);
  try {
    parse_picard("[s1 q ; 0 ; 0]", 1);
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}
