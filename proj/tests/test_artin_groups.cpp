#include <random>

#include "doctest.h"
#include "group_oracle.hpp"
#include "sphtwist/artin_groups.hpp"
#include "sphtwist/errors.hpp"

using namespace sphtwist;
using testing::oracle_equal;
using testing::random_word;

namespace {

std::vector<GroupSpec> all_specs() {
  return {GroupSpec::free(2),
          GroupSpec::free(3),
          GroupSpec::braid_group(BraidType::A2),
          GroupSpec::braid_group(BraidType::B2),
          GroupSpec::braid_group(BraidType::G2),
          GroupSpec::braid_mod_center(BraidType::A2, 2),
          GroupSpec::braid_mod_center(BraidType::B2, 3),
          GroupSpec::braid_mod_center(BraidType::G2, 1),
          GroupSpec::s3z(),
          GroupSpec::zxz_mod(1),
          GroupSpec::zxz_mod(3),
          GroupSpec::abelian()};
}

GroupWord w(const char* text) { return parse_word(text); }

}  // namespace

TEST_CASE("word parsing") {
  CHECK(w("s1 s2 s1").letters() == std::vector<Letter>{{1, 1}, {2, 1}, {1, 1}});
  CHECK(w("s1^2 s1^-2").empty());
  CHECK(w("s2^-3").letters() == std::vector<Letter>{{2, -3}});
  CHECK(w("(s1 s2)^3") == w("s1 s2 s1 s2 s1 s2"));
  CHECK(w("(s1 s2)^-1") == w("s2^-1 s1^-1"));
  CHECK(w("e").empty());
  CHECK(w("").empty());
  CHECK(to_string(w("s1^2 s2^-1")) == "s1^2 s2^-1");
  CHECK(to_string(GroupWord()) == "e");
  CHECK_THROWS_AS(w("s1 x"), ParseError);
  CHECK_THROWS_AS(w("s1^"), ParseError);
  CHECK_THROWS_AS(w("(s1"), ParseError);
  CHECK_THROWS_AS(w("s0"), ParseError);
  try {
    w("s1 s2 q");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("group spec names round-trip") {
  for (const auto& spec : all_specs()) CHECK(to_string(parse_group_spec(to_string(spec))) == to_string(spec));
  CHECK(parse_group_spec("g2-mod:4").t == 4);
  CHECK_THROWS_AS(parse_group_spec("e8"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("zxz:-1"), ParseError);
  CHECK_THROWS_AS(normal_form(w("s3"), GroupSpec::braid_group(BraidType::A2)), InvalidInput);
}

TEST_CASE("word problem examples") {
  const auto a2 = GroupSpec::braid_group(BraidType::A2);
  const auto b2 = GroupSpec::braid_group(BraidType::B2);
  const auto g2 = GroupSpec::braid_group(BraidType::G2);
  CHECK(are_equal(w("s1 s2 s1"), w("s2 s1 s2"), a2));
  CHECK(normal_form(w("s1 s2 s1 s2^-1 s1^-1 s2^-1"), a2) == NormalForm{});
  CHECK(are_equal(w("(s1 s2)^2 s1"), w("s1 (s1 s2)^2"), b2));
  CHECK(are_equal(w("(s1 s2)^3"), w("(s2 s1)^3"), g2));
  CHECK_FALSE(are_equal(w("s1 s2"), w("s2 s1"), GroupSpec::free(2)));
  CHECK_FALSE(are_equal(w("s1 s2"), w("s2 s1"), a2));
  // (2t,-2t) = 0 reads s1^2t = s2^2t.
  CHECK(are_equal(w("s1^2"), w("s2^2"), GroupSpec::zxz_mod(1)));
  CHECK_FALSE(are_equal(w("s1^2"), w("s2^-2"), GroupSpec::zxz_mod(1)));
  CHECK_FALSE(are_equal(w("s1^2"), w("s2^-2"), GroupSpec::abelian()));

  const auto s3z = GroupSpec::s3z();
  CHECK(are_equal(w("s1^2"), w("s2^2"), s3z));
  const auto nf = normal_form(w("s1^6"), s3z);
  CHECK(nf.center_exponent == 3);
  CHECK(nf.syllables.empty());
  CHECK_FALSE(are_equal(w("s1^6"), GroupWord(), s3z));

  // Delta is the center generator with exponent 1.
  for (auto t : {BraidType::A2, BraidType::B2, BraidType::G2}) {
    const auto nfd = normal_form(center_word(t), GroupSpec::braid_group(t));
    CHECK(nfd.center_exponent == 1);
    CHECK(nfd.syllables.empty());
  }
  CHECK(to_string(normal_form(w("s1"), a2), a2) == "center Delta^-1 ; b^2 a");
  CHECK(to_string(normal_form(w("s1 s2^-1"), GroupSpec::free(2)), GroupSpec::free(2)) == "s1 s2^-1");
}

TEST_CASE("center quotients") {
  for (auto type : {BraidType::A2, BraidType::B2, BraidType::G2})
    for (long t = 1; t <= 4; ++t) {
      const auto spec = GroupSpec::braid_mod_center(type, t);
      const GroupWord delta = center_word(type);
      CHECK(are_equal(delta.power(t), GroupWord(), spec));
      for (long s = 1; s < t; ++s) CHECK_FALSE(are_equal(delta.power(s), GroupWord(), spec));
      CHECK(normal_form(delta.power(-1), spec).center_exponent == t - 1);
    }
}

TEST_CASE("normal forms are idempotent through lifts") {
  std::mt19937 rng(11);
  for (const auto& spec : all_specs())
    for (int i = 0; i < 200; ++i) {
      const GroupWord x = random_word(rng, spec.generator_count(), 10, 3);
      const NormalForm nf = normal_form(x, spec);
      CHECK(normal_form(lift(nf, spec), spec) == nf);
      CHECK_MESSAGE(oracle_equal(lift(nf, spec), x, spec), to_string(spec), ": ", to_string(x));
    }
}

TEST_CASE("torsion syllable exponents are normalized") {
  std::mt19937 rng(12);
  for (auto t : {BraidType::A2, BraidType::B2, BraidType::G2})
    for (int i = 0; i < 200; ++i) {
      const auto nf = normal_form(random_word(rng, 2, 10, 3), GroupSpec::braid_group(t));
      for (std::size_t j = 0; j < nf.syllables.size(); ++j) {
        const auto& syl = nf.syllables[j];
        if (j > 0) CHECK(syl.gen != nf.syllables[j - 1].gen);
        const long order = t == BraidType::A2 ? (syl.gen == 1 ? 2 : 3) : (syl.gen == 1 ? 0 : (t == BraidType::B2 ? 2 : 3));
        if (order > 0) {
          CHECK(syl.exp >= 1);
          CHECK(syl.exp < order);
        } else {
          CHECK(syl.exp != 0);
        }
      }
    }
}

TEST_CASE("equality is a congruence") {
  std::mt19937 rng(13);
  for (const auto& spec : all_specs())
    for (int i = 0; i < 100; ++i) {
      const int g = spec.generator_count();
      const GroupWord u = random_word(rng, g, 6);
      // v equals u by construction: insert a relator in the middle.
      const auto rels = defining_relations(spec);
      GroupWord v = u;
      if (!rels.empty()) {
        const auto& [lhs, rhs] = rels[i % rels.size()];
        v = u * lhs * rhs.inverse();
      }
      const GroupWord x = random_word(rng, g, 6);
      REQUIRE(are_equal(u, v, spec));
      CHECK(are_equal(u * x, v * x, spec));
      CHECK(are_equal(x * u, x * v, spec));
    }
}

TEST_CASE("relator insertion at every position") {
  std::mt19937 rng(14);
  for (const auto& spec : all_specs()) {
    const auto rels = defining_relations(spec);
    for (const auto& [lhs, rhs] : rels) {
      const GroupWord relator = lhs * rhs.inverse();
      for (int i = 0; i < 30; ++i) {
        const GroupWord x = random_word(rng, spec.generator_count(), 8);
        const auto& letters = x.letters();
        for (std::size_t cut = 0; cut <= letters.size(); ++cut) {
          const GroupWord head(std::vector<Letter>(letters.begin(), letters.begin() + cut));
          const GroupWord tail(std::vector<Letter>(letters.begin() + cut, letters.end()));
          CHECK(are_equal(head * relator * tail, x, spec));
          CHECK(are_equal(head * relator.inverse() * tail, x, spec));
        }
      }
    }
  }
}

TEST_CASE("center is central") {
  std::mt19937 rng(15);
  for (auto t : {BraidType::A2, BraidType::B2, BraidType::G2}) {
    const auto spec = GroupSpec::braid_group(t);
    for (int i = 0; i < 200; ++i) {
      const GroupWord x = random_word(rng, 2, 10);
      CHECK(are_equal(center_word(t) * x, x * center_word(t), spec));
    }
  }
}

TEST_CASE("normal forms agree with the matrix and permutation oracle") {
  std::mt19937 rng(16);
  for (const auto& spec : all_specs()) {
    int equal_pairs = 0;
    for (int i = 0; i < 400; ++i) {
      const GroupWord x = random_word(rng, spec.generator_count(), 8);
      // Bias towards equal pairs by also trying short perturbations of x.
      const GroupWord y = i % 2 ? random_word(rng, spec.generator_count(), 8)
                                : x * random_word(rng, spec.generator_count(), 2, 1);
      const bool expected = oracle_equal(x, y, spec);
      equal_pairs += expected;
      CHECK_MESSAGE(are_equal(x, y, spec) == expected, to_string(spec), ": ", to_string(x), " vs ", to_string(y));
    }
    if (spec.kind != GroupKind::Free && spec.kind != GroupKind::AbelianRank2) CHECK(equal_pairs > 0);
  }
}

TEST_CASE("classify_twist_group") {
  CHECK(classify_twist_group(3, 2, 3, 2, 3).tag == DescriptionTag::ExceptionalA2orS3Z);
  CHECK(classify_twist_group(2, 1, 4, 2, 4).tag == DescriptionTag::ExceptionalB2orZxZ);
  CHECK(classify_twist_group(4, 2, 2, 1, 4).tag == DescriptionTag::ExceptionalB2orZxZ);
  CHECK(classify_twist_group(2, 3, 2, 3, 2).tag == DescriptionTag::BraidA2);
  CHECK(classify_twist_group(2, 1, 2, 1, 5).tag == DescriptionTag::Free2);
  CHECK(classify_twist_group(1, 5, 3, 15, 3).tag == DescriptionTag::BraidG2);
  const auto g = classify_twist_group(3, 5, 9, 15, 9);
  CHECK(g.tag == DescriptionTag::QuotientFamily);
  CHECK(g.family == BraidType::G2);
  CHECK(g.center_power_multiplier == 3);
  const auto a = classify_twist_group(3, 4, 3, 4, 3);
  CHECK(a.tag == DescriptionTag::QuotientFamily);
  CHECK(a.family == BraidType::A2);
  CHECK(a.center_power_multiplier == 1);
  const auto b = classify_twist_group(4, 6, 8, 12, 8);
  CHECK(b.tag == DescriptionTag::QuotientFamily);
  CHECK(b.family == BraidType::B2);
  CHECK(b.center_power_multiplier == 4);
  CHECK(classify_twist_group(1, 0, 3, 0, 3).tag == DescriptionTag::BraidG2);
  CHECK(classify_twist_group(2, 0, 2, 0, 0).tag == DescriptionTag::Abelian);
  CHECK(classify_twist_group(2, 0, 8, 0, 8).tag == DescriptionTag::Free2);
  CHECK_THROWS_AS(classify_twist_group(2, 1, 2, 3, 2), InvalidInput);
  CHECK_THROWS_AS(classify_twist_group(0, 1, 2, 3, 2), InvalidInput);
}
