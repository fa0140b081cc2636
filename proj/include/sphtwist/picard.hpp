#pragma once

#include <map>
#include <string>
#include <string_view>

#include "sphtwist/artin_groups.hpp"

namespace sphtwist {

/// An element of k*: a sign times a monomial in declared unit symbols.
struct UnitElement {
  int sign = 1;
  std::map<std::string, long> free_part;  // symbol -> nonzero exponent

  UnitElement operator*(const UnitElement& rhs) const;
  UnitElement inverse() const;
  bool is_one() const { return sign == 1 && free_part.empty(); }

  friend bool operator==(const UnitElement&, const UnitElement&) = default;
};

/// "1", "-1", "(-1)^e", "eps", "eps^-2", joined by '*'.
UnitElement parse_unit(std::string_view text);
std::string to_string(const UnitElement& u);

/// (w, a, b, u) in B_G2 x Z x Z/3k x k*, modulo (Delta^-1, 5, 3, (-1)^k).
///
/// w is the shift-free braid part; a counts shifts [1], b powers of the
/// Nakayama automorphism nu.
struct PicardElement {
  int k = 1;
  GroupWord w;
  long a = 0;
  long b = 0;
  UnitElement u;
};

/// Canonical representative: the braid part carries no power of Delta and b
/// lies in [0, 3k).
PicardElement pic_normal_form(const PicardElement& el);

/// Throws MismatchedParameter when the k differ.
PicardElement pic_multiply(const PicardElement& x, const PicardElement& y);
PicardElement pic_invert(const PicardElement& x);
bool pic_equal(const PicardElement& x, const PicardElement& y);

/// (Delta^-1, 5, 3, (-1)^k), which is the identity of TrPic.
PicardElement pic_relation(int k);
PicardElement pic_identity(int k);

/// "[s1 s2^-1 ; 5 ; 3 ; (-1)^1 * eps]"; the unit field may be omitted.
PicardElement parse_picard(std::string_view text, int k);
std::string to_string(const PicardElement& el);

}  // namespace sphtwist
