#pragma once

// Equality oracle for the two-generator groups, independent of the
// free-product normal forms: faithful linear images into SL(2,Z) plus
// exponent sums, and permutations for S3Z.

#include <array>
#include <random>
#include <stdexcept>

#include "sphtwist/artin_groups.hpp"

namespace sphtwist::testing {

using Int = __int128;

struct Mat2 {
  Int a = 1, b = 0, c = 0, d = 1;
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

inline Mat2 mul(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

inline Mat2 inv(const Mat2& x) { return {x.d, -x.b, -x.c, x.a}; }

inline Mat2 mpow(const Mat2& x, long n) {
  Mat2 base = n < 0 ? inv(x) : x;
  Mat2 out;
  for (long i = 0; i < (n < 0 ? -n : n); ++i) out = mul(out, base);
  return out;
}

inline const Mat2 kU{1, 1, 0, 1};
inline const Mat2 kL{1, 0, -1, 1};

/// Image of a generator under the oracle representation for spec.
inline Mat2 generator_image(const GroupSpec& spec, int gen) {
  if (spec.kind == GroupKind::Free) {
    const Mat2 a{1, 2, 0, 1};
    const Mat2 b{1, 0, 2, 1};
    // s3 -> b^2 a b^-2 keeps {a, b a b^-1, b^2 a b^-2} a free basis.
    if (gen == 1) return a;
    if (gen == 2) return mul(mul(b, a), inv(b));
    return mul(mul(mpow(b, 2), a), mpow(b, -2));
  }
  BraidType t = BraidType::A2;
  if (spec.is_braid()) t = spec.braid_type();
  if (gen == 2) return kL;
  return mpow(kU, t == BraidType::A2 ? 1 : (t == BraidType::B2 ? 2 : 3));
}

inline Mat2 matrix_of(const GroupWord& w, const GroupSpec& spec) {
  Mat2 m;
  for (const auto& l : w.letters()) m = mul(m, mpow(generator_image(spec, l.gen), l.exp));
  return m;
}

/// True when w is trivial in the infinite braid group of type t (or a free group).
/// For A2 the generators are conjugate, so only the total exponent is an invariant.
inline bool trivial_in_braid(const GroupWord& w, const GroupSpec& spec) {
  if (matrix_of(w, spec) != Mat2{}) return false;
  if (spec.kind != GroupKind::Free && spec.braid_type() == BraidType::A2) return w.total_exponent() == 0;
  return w.exponent_sum(1) == 0 && w.exponent_sum(2) == 0;
}

inline std::array<int, 3> s3_perm(const GroupWord& w) {
  std::array<int, 3> p{0, 1, 2};
  for (const auto& l : w.letters())
    for (long i = 0; i < (l.exp < 0 ? -l.exp : l.exp); ++i) {
      const int j = l.gen - 1;
      std::swap(p[j], p[j + 1]);
    }
  return p;
}

/// Oracle equality w1 == w2 in spec.
inline bool oracle_equal(const GroupWord& w1, const GroupWord& w2, const GroupSpec& spec) {
  const GroupWord w = w1 * w2.inverse();
  switch (spec.kind) {
    case GroupKind::Free:
    case GroupKind::BraidA2:
    case GroupKind::BraidB2:
    case GroupKind::BraidG2:
      return trivial_in_braid(w, spec);
    case GroupKind::BraidModCenterPower: {
      // w is trivial iff w = Delta^(c t) for some c.
      const GroupWord delta = center_word(spec.braid);
      const long per = delta.total_exponent();
      if (w.total_exponent() % per != 0) return false;
      const long c = w.total_exponent() / per;
      if (!trivial_in_braid(w * delta.power(-c), GroupSpec::braid_group(spec.braid))) return false;
      return spec.t == 0 ? c == 0 : c % spec.t == 0;
    }
    case GroupKind::S3Z:
      // Kernel of S3Z -> S3 x Z(total exponent) is trivial: central s1^2 has exponent 2.
      return s3_perm(w) == std::array<int, 3>{0, 1, 2} && w.total_exponent() == 0;
    case GroupKind::ZxZmod:
    case GroupKind::AbelianRank2: {
      const long a = w.exponent_sum(1);
      const long b = w.exponent_sum(2);
      if (a + b != 0) return false;
      const long t = spec.kind == GroupKind::ZxZmod ? spec.t : 0;
      return t == 0 ? a == 0 : a % (2 * t) == 0;
    }
  }
  throw std::logic_error("unknown group kind");
}

inline GroupWord random_word(std::mt19937& rng, int generators, int max_len, int max_exp = 2) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, generators);
  std::uniform_int_distribution<int> ex(1, max_exp);
  std::bernoulli_distribution sign(0.5);
  GroupWord w;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) w = w * GroupWord::generator(gen(rng), sign(rng) ? ex(rng) : -ex(rng));
  return w;
}

}  // namespace sphtwist::testing
