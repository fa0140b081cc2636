#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sphtwist {

/// A letter s_gen^exp of a word.
struct Letter {
  int gen = 1;
  long exp = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word in the standard generators. Adjacent letters always carry
/// distinct generators: construction fuses them and drops zero exponents.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(const std::vector<Letter>& letters);

  static GroupWord generator(int gen, long exp = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  /// Appends with fusion at the junction.
  void append(const Letter& letter);
  GroupWord operator*(const GroupWord& rhs) const;
  GroupWord inverse() const;
  GroupWord power(long n) const;

  /// Sum of exponents of one generator.
  long exponent_sum(int gen) const;
  long total_exponent() const;
  int max_generator() const;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// "s1 s2^-1 (s1 s2)^3"; the identity prints as "e".
std::string to_string(const GroupWord& w);

/// Grammar: items separated by optional whitespace, where an item is
/// `s<digit>`, `e` (identity) or a parenthesized word, optionally followed
/// by `^<integer>`.
GroupWord parse_word(std::string_view text);

enum class BraidType { A2, B2, G2 };

std::string to_string(BraidType t);

enum class GroupKind {
  Free,
  BraidA2,
  BraidB2,
  BraidG2,
  BraidModCenterPower,
  S3Z,
  ZxZmod,
  AbelianRank2,
};

/// A group from the two-twist classification, by presentation.
struct GroupSpec {
  GroupKind kind = GroupKind::Free;
  int rank = 2;                     // Free only
  BraidType braid = BraidType::A2;  // BraidModCenterPower only
  long t = 0;                       // BraidModCenterPower: Delta^t = 1; ZxZmod: (2t,-2t) = 0

  static GroupSpec free(int rank) { return {GroupKind::Free, rank, BraidType::A2, 0}; }
  static GroupSpec braid_group(BraidType b);
  static GroupSpec braid_mod_center(BraidType b, long t) {
    return {GroupKind::BraidModCenterPower, 2, b, t};
  }
  static GroupSpec s3z() { return {GroupKind::S3Z, 2, BraidType::A2, 0}; }
  static GroupSpec zxz_mod(long t) { return {GroupKind::ZxZmod, 2, BraidType::A2, t}; }
  static GroupSpec abelian() { return {GroupKind::AbelianRank2, 2, BraidType::A2, 0}; }

  int generator_count() const { return kind == GroupKind::Free ? rank : 2; }

  /// Braid type of BraidA2/B2/G2 and BraidModCenterPower; throws otherwise.
  BraidType braid_type() const;
  bool is_braid() const;
};

/// free2 | free3 | a2 | b2 | g2 | a2-mod:<t> | b2-mod:<t> | g2-mod:<t> | s3z | zxz:<t> | zxz
GroupSpec parse_group_spec(std::string_view text);
std::string to_string(const GroupSpec& spec);

/// Canonical form of a group element.
///
/// center_exponent counts powers of the central element (Delta for braid
/// kinds, s1^2 for S3Z; 0 otherwise). syllables depend on the kind:
///  - Free: the freely reduced word;
///  - A2: alternating word in a (order 2) = 1 and b (order 3) = 2, the
///    images of s1 s2 s1 and s1 s2 in B/Z;
///  - B2, G2: alternating word in x = 1 (image of s1, infinite order) and
///    y = 2 (image of s1 s2, order 2 resp. 3);
///  - S3Z: one of the six coset representatives e, s1, s2, s1s2, s2s1, s1s2s1;
///  - ZxZmod / AbelianRank2: the reduced pair as s1^a s2^b.
/// Torsion syllable exponents lie in {1} (order 2) or {1,2} (order 3).
struct NormalForm {
  long center_exponent = 0;
  std::vector<Letter> syllables;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

std::string to_string(const NormalForm& nf, const GroupSpec& spec);

/// Throws InvalidInput when the word uses a generator the spec lacks.
NormalForm normal_form(const GroupWord& word, const GroupSpec& spec);

/// A word whose normal form is nf.
GroupWord lift(const NormalForm& nf, const GroupSpec& spec);

bool are_equal(const GroupWord& w1, const GroupWord& w2, const GroupSpec& spec);

/// Generator of the center: (s1 s2)^3 for A2 and G2, (s1 s2)^2 for B2.
GroupWord center_word(BraidType t);

/// Defining relations lhs = rhs of the presentation.
std::vector<std::pair<GroupWord, GroupWord>> defining_relations(const GroupSpec& spec);

enum class DescriptionTag {
  Free2,
  BraidA2,
  BraidB2,
  BraidG2,
  QuotientFamily,
  ExceptionalA2orS3Z,
  ExceptionalB2orZxZ,
  Abelian,
};

std::string to_string(DescriptionTag tag);

/// One outcome of the two-twist classification.
struct GroupDescription {
  DescriptionTag tag = DescriptionTag::Free2;
  /// QuotientFamily: the braid type and the quotient by Delta^(t * multiplier)
  /// for some undetermined integer t.
  BraidType family = BraidType::A2;
  long center_power_multiplier = 0;
  std::string notes;
};

/// Group generated by twists along an m-spherical sequence of length k and
/// an m'-spherical sequence of length k' with total_hom = sum_l dim
/// Hom(E, E'[l]). Arguments with k > k' are swapped.
GroupDescription classify_twist_group(long k, long m, long k2, long m2, long total_hom);

}  // namespace sphtwist
