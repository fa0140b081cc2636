#include "sphtwist/artin_groups.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>

#include "sphtwist/errors.hpp"

namespace sphtwist {

// ---------------------------------------------------------------- words

GroupWord::GroupWord(const std::vector<Letter>& letters) {
  for (const auto& l : letters) append(l);
}

GroupWord GroupWord::generator(int gen, long exp) { return GroupWord({{gen, exp}}); }

void GroupWord::append(const Letter& letter) {
  if (letter.exp == 0) return;
  if (!letters_.empty() && letters_.back().gen == letter.gen) {
    letters_.back().exp += letter.exp;
    if (letters_.back().exp == 0) letters_.pop_back();
    return;
  }
  letters_.push_back(letter);
}

GroupWord GroupWord::operator*(const GroupWord& rhs) const {
  GroupWord out = *this;
  for (const auto& l : rhs.letters_) out.append(l);
  return out;
}

GroupWord GroupWord::inverse() const {
  GroupWord out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.append({it->gen, -it->exp});
  return out;
}

GroupWord GroupWord::power(long n) const {
  const GroupWord base = n < 0 ? inverse() : *this;
  GroupWord out;
  for (long i = 0; i < std::labs(n); ++i) out = out * base;
  return out;
}

long GroupWord::exponent_sum(int gen) const {
  long s = 0;
  for (const auto& l : letters_)
    if (l.gen == gen) s += l.exp;
  return s;
}

long GroupWord::total_exponent() const {
  long s = 0;
  for (const auto& l : letters_) s += l.exp;
  return s;
}

int GroupWord::max_generator() const {
  int g = 0;
  for (const auto& l : letters_) g = std::max(g, l.gen);
  return g;
}

std::string to_string(const GroupWord& w) {
  if (w.empty()) return "e";
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += "s" + std::to_string(l.gen);
    if (l.exp != 1) out += "^" + std::to_string(l.exp);
  }
  return out;
}

namespace {

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  GroupWord parse() {
    GroupWord w = sequence();
    skip();
    if (i_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[i_]) + "'", i_);
    return w;
  }

 private:
  void skip() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
  }

  GroupWord sequence() {
    GroupWord w;
    for (;;) {
      skip();
      if (i_ >= text_.size() || text_[i_] == ')') return w;
      w = w * item();
    }
  }

  GroupWord item() {
    GroupWord base;
    const char c = text_[i_];
    if (c == 's' || c == 'S') {
      ++i_;
      if (i_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[i_])))
        throw ParseError("expected generator index after 's'", i_);
      base = GroupWord::generator(text_[i_] - '0');
      if (text_[i_] == '0') throw ParseError("generator indices start at 1", i_);
      ++i_;
    } else if (c == 'e') {
      ++i_;
    } else if (c == '(') {
      const std::size_t open = i_++;
      base = sequence();
      if (i_ >= text_.size() || text_[i_] != ')') throw ParseError("unbalanced '('", open);
      ++i_;
    } else {
      throw ParseError("unexpected '" + std::string(1, c) + "'", i_);
    }
    skip();
    if (i_ < text_.size() && text_[i_] == '^') {
      ++i_;
      skip();
      return base.power(integer());
    }
    return base;
  }

  long integer() {
    const std::size_t start = i_;
    if (i_ < text_.size() && (text_[i_] == '-' || text_[i_] == '+')) ++i_;
    while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
    long value = 0;
    const char* first = text_.data() + start;
    if (start < text_.size() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, text_.data() + i_, value);
    if (ec != std::errc() || ptr != text_.data() + i_) throw ParseError("expected exponent", start);
    return value;
  }

  std::string_view text_;
  std::size_t i_ = 0;
};

}  // namespace

GroupWord parse_word(std::string_view text) { return WordParser(text).parse(); }

// ---------------------------------------------------------------- specs

std::string to_string(BraidType t) {
  switch (t) {
    case BraidType::A2: return "A2";
    case BraidType::B2: return "B2";
    case BraidType::G2: return "G2";
  }
  return "?";
}

GroupSpec GroupSpec::braid_group(BraidType b) {
  switch (b) {
    case BraidType::A2: return {GroupKind::BraidA2, 2, b, 0};
    case BraidType::B2: return {GroupKind::BraidB2, 2, b, 0};
    case BraidType::G2: return {GroupKind::BraidG2, 2, b, 0};
  }
  return {};
}

bool GroupSpec::is_braid() const {
  return kind == GroupKind::BraidA2 || kind == GroupKind::BraidB2 || kind == GroupKind::BraidG2 ||
         kind == GroupKind::BraidModCenterPower;
}

BraidType GroupSpec::braid_type() const {
  switch (kind) {
    case GroupKind::BraidA2: return BraidType::A2;
    case GroupKind::BraidB2: return BraidType::B2;
    case GroupKind::BraidG2: return BraidType::G2;
    case GroupKind::BraidModCenterPower: return braid;
    default: throw InvalidInput("not a braid group: " + to_string(*this));
  }
}

GroupSpec parse_group_spec(std::string_view text) {
  const std::string s(text);
  auto number = [&](std::size_t from) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + from, s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 0)
      throw ParseError("expected nonnegative integer parameter", from);
    return v;
  };
  if (s == "free2") return GroupSpec::free(2);
  if (s == "free3") return GroupSpec::free(3);
  if (s == "a2") return GroupSpec::braid_group(BraidType::A2);
  if (s == "b2") return GroupSpec::braid_group(BraidType::B2);
  if (s == "g2") return GroupSpec::braid_group(BraidType::G2);
  if (s == "s3z") return GroupSpec::s3z();
  if (s == "zxz") return GroupSpec::abelian();
  if (s.rfind("zxz:", 0) == 0) return GroupSpec::zxz_mod(number(4));
  for (auto [prefix, type] : {std::pair{"a2-mod:", BraidType::A2}, std::pair{"b2-mod:", BraidType::B2},
                              std::pair{"g2-mod:", BraidType::G2}})
    if (s.rfind(prefix, 0) == 0) return GroupSpec::braid_mod_center(type, number(7));
  throw ParseError("unknown group spec '" + s + "'", 0);
}

std::string to_string(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupKind::Free: return "free" + std::to_string(spec.rank);
    case GroupKind::BraidA2: return "a2";
    case GroupKind::BraidB2: return "b2";
    case GroupKind::BraidG2: return "g2";
    case GroupKind::BraidModCenterPower: {
      std::string name = to_string(spec.braid);
      name[0] = static_cast<char>(std::tolower(name[0]));
      return name + "-mod:" + std::to_string(spec.t);
    }
    case GroupKind::S3Z: return "s3z";
    case GroupKind::ZxZmod: return "zxz:" + std::to_string(spec.t);
    case GroupKind::AbelianRank2: return "zxz";
  }
  return "?";
}

GroupWord center_word(BraidType t) {
  const GroupWord s12 = GroupWord({{1, 1}, {2, 1}});
  return s12.power(t == BraidType::B2 ? 2 : 3);
}

// ---------------------------------------------------------------- normal forms

namespace {

// Free product of two cyclic factors; order 0 means infinite.
class FreeProductWord {
 public:
  FreeProductWord(long order1, long order2) : order_{order1, order2} {}

  void multiply(int sym, long exp) {
    const long order = order_[sym - 1];
    if (order > 0) exp = ((exp % order) + order) % order;
    if (exp == 0) return;
    if (!syl_.empty() && syl_.back().gen == sym) {
      long e = syl_.back().exp + exp;
      if (order > 0) e %= order;
      if (e == 0)
        syl_.pop_back();
      else
        syl_.back().exp = e;
      return;
    }
    syl_.push_back({sym, exp});
  }

  void multiply(const std::vector<Letter>& word) {
    for (const auto& l : word) multiply(l.gen, l.exp);
  }

  const std::vector<Letter>& syllables() const { return syl_; }

 private:
  std::array<long, 2> order_;
  std::vector<Letter> syl_;
};

// Images of s1, s2, s1^-1, s2^-1 in B/Z as free-product words.
struct QuotientModel {
  long order1;
  long order2;
  std::vector<Letter> s1, s2, s1inv, s2inv;
  // Canonical lift of each syllable symbol/exponent.
  GroupWord lift_syllable(const Letter& syl) const;
  BraidType type;
  long per_generator_center_sum;  // exponent sum of one generator in Delta
};

QuotientModel quotient_model(BraidType t) {
  switch (t) {
    case BraidType::A2:
      // a = s1 s2 s1 (order 2), b = s1 s2 (order 3); s1 = b^-1 a, s2 = a b^2.
      return {2, 3, {{2, 2}, {1, 1}}, {{1, 1}, {2, 2}}, {{1, 1}, {2, 1}}, {{2, 1}, {1, 1}}, t, 3};
    case BraidType::B2:
      // x = s1, y = s1 s2 (order 2); s2 = x^-1 y.
      return {0, 2, {{1, 1}}, {{1, -1}, {2, 1}}, {{1, -1}}, {{2, 1}, {1, 1}}, t, 2};
    case BraidType::G2:
      return {0, 3, {{1, 1}}, {{1, -1}, {2, 1}}, {{1, -1}}, {{2, 2}, {1, 1}}, t, 3};
  }
  throw InternalError("unknown braid type");
}

GroupWord QuotientModel::lift_syllable(const Letter& syl) const {
  const GroupWord s12({{1, 1}, {2, 1}});
  if (type == BraidType::A2) {
    if (syl.gen == 1) return GroupWord({{1, 1}, {2, 1}, {1, 1}});
    return s12.power(syl.exp);
  }
  if (syl.gen == 1) return GroupWord::generator(1, syl.exp);
  return s12.power(syl.exp);
}

void check_generators(const GroupWord& w, const GroupSpec& spec) {
  for (const auto& l : w.letters())
    if (l.gen < 1 || l.gen > spec.generator_count())
      throw InvalidInput("generator s" + std::to_string(l.gen) + " out of range for " + to_string(spec));
}

long floor_mod(long a, long n) { return ((a % n) + n) % n; }

NormalForm braid_normal_form(const GroupWord& w, BraidType type, long modulus) {
  const QuotientModel q = quotient_model(type);
  FreeProductWord fp(q.order1, q.order2);
  for (const auto& l : w.letters()) {
    const auto& image = l.gen == 1 ? (l.exp > 0 ? q.s1 : q.s1inv) : (l.exp > 0 ? q.s2 : q.s2inv);
    for (long i = 0; i < std::labs(l.exp); ++i) fp.multiply(image);
  }
  NormalForm nf;
  nf.syllables = fp.syllables();
  GroupWord lifted;
  for (const auto& syl : nf.syllables) lifted = lifted * q.lift_syllable(syl);

  const long d = q.per_generator_center_sum;
  if (type == BraidType::A2) {
    const long diff = w.total_exponent() - lifted.total_exponent();
    if (diff % (2 * d) != 0) throw InternalError("A2 exponent sum not divisible by 6");
    nf.center_exponent = diff / (2 * d);
  } else {
    const long d1 = w.exponent_sum(1) - lifted.exponent_sum(1);
    const long d2 = w.exponent_sum(2) - lifted.exponent_sum(2);
    if (d1 % d != 0 || d2 % d != 0 || d1 != d2)
      throw InternalError("per-generator exponent sums give inconsistent center exponents");
    nf.center_exponent = d1 / d;
  }
  if (modulus > 0) nf.center_exponent = floor_mod(nf.center_exponent, modulus);
  return nf;
}

// S3 acting on {0,1,2}; s1 = (0 1), s2 = (1 2).
using Perm = std::array<int, 3>;

Perm perm_of(const GroupWord& w) {
  Perm p{0, 1, 2};
  for (const auto& l : w.letters()) {
    if (std::labs(l.exp) % 2 == 0) continue;
    const int a = l.gen == 1 ? 0 : 1;
    // Right action: apply transposition to the current arrangement.
    std::swap(p[a], p[a + 1]);
  }
  return p;
}

const std::vector<GroupWord>& s3_representatives() {
  static const std::vector<GroupWord> reps = {
      GroupWord(),
      GroupWord({{1, 1}}),
      GroupWord({{2, 1}}),
      GroupWord({{1, 1}, {2, 1}}),
      GroupWord({{2, 1}, {1, 1}}),
      GroupWord({{1, 1}, {2, 1}, {1, 1}}),
  };
  return reps;
}

}  // namespace

NormalForm normal_form(const GroupWord& word, const GroupSpec& spec) {
  check_generators(word, spec);
  NormalForm nf;
  switch (spec.kind) {
    case GroupKind::Free: {
      // Fusion on construction already frees reduces adjacent letters.
      nf.syllables = word.letters();
      return nf;
    }
    case GroupKind::BraidA2:
    case GroupKind::BraidB2:
    case GroupKind::BraidG2:
      return braid_normal_form(word, spec.braid_type(), 0);
    case GroupKind::BraidModCenterPower:
      if (spec.t < 0) throw InvalidInput("center power must be nonnegative");
      return braid_normal_form(word, spec.braid, spec.t);
    case GroupKind::S3Z: {
      const Perm p = perm_of(word);
      for (const auto& rep : s3_representatives()) {
        if (perm_of(rep) != p) continue;
        const long diff = word.total_exponent() - rep.total_exponent();
        if (diff % 2 != 0) throw InternalError("S3Z exponent parity mismatch");
        nf.center_exponent = diff / 2;
        nf.syllables = rep.letters();
        return nf;
      }
      throw InternalError("no S3 coset representative");
    }
    case GroupKind::ZxZmod:
    case GroupKind::AbelianRank2: {
      long a = word.exponent_sum(1);
      long b = word.exponent_sum(2);
      const long t = spec.kind == GroupKind::ZxZmod ? spec.t : 0;
      if (t < 0) throw InvalidInput("ZxZ modulus must be nonnegative");
      if (t > 0) {
        const long reduced = floor_mod(a, 2 * t);
        b += a - reduced;
        a = reduced;
      }
      nf.syllables = GroupWord({{1, a}, {2, b}}).letters();
      return nf;
    }
  }
  throw InternalError("unknown group kind");
}

GroupWord lift(const NormalForm& nf, const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupKind::Free:
    case GroupKind::ZxZmod:
    case GroupKind::AbelianRank2:
      return GroupWord(nf.syllables);
    case GroupKind::S3Z:
      return GroupWord::generator(1, 2 * nf.center_exponent) * GroupWord(nf.syllables);
    default: {
      const BraidType t = spec.braid_type();
      const QuotientModel q = quotient_model(t);
      GroupWord out = center_word(t).power(nf.center_exponent);
      for (const auto& syl : nf.syllables) out = out * q.lift_syllable(syl);
      return out;
    }
  }
}

bool are_equal(const GroupWord& w1, const GroupWord& w2, const GroupSpec& spec) {
  return normal_form(w1, spec) == normal_form(w2, spec);
}

std::string to_string(const NormalForm& nf, const GroupSpec& spec) {
  std::string syl;
  auto symbol = [&](int gen) -> std::string {
    if (!spec.is_braid()) return "s" + std::to_string(gen);
    if (spec.braid_type() == BraidType::A2) return gen == 1 ? "a" : "b";
    return gen == 1 ? "x" : "y";
  };
  for (const auto& l : nf.syllables) {
    if (!syl.empty()) syl += ' ';
    syl += symbol(l.gen);
    if (l.exp != 1) syl += "^" + std::to_string(l.exp);
  }
  if (syl.empty()) syl = "e";
  std::string center = spec.kind == GroupKind::S3Z ? "s1^2" : "Delta";
  if (spec.is_braid() || spec.kind == GroupKind::S3Z)
    return "center " + center + "^" + std::to_string(nf.center_exponent) + " ; " + syl;
  return syl;
}

std::vector<std::pair<GroupWord, GroupWord>> defining_relations(const GroupSpec& spec) {
  const GroupWord s1 = GroupWord::generator(1);
  const GroupWord s2 = GroupWord::generator(2);
  std::vector<std::pair<GroupWord, GroupWord>> rels;
  auto braid_relation = [&](BraidType t) {
    switch (t) {
      case BraidType::A2: rels.emplace_back(s1 * s2 * s1, s2 * s1 * s2); break;
      case BraidType::B2: rels.emplace_back((s1 * s2).power(2), (s2 * s1).power(2)); break;
      case BraidType::G2: rels.emplace_back((s1 * s2).power(3), (s2 * s1).power(3)); break;
    }
  };
  switch (spec.kind) {
    case GroupKind::Free: break;
    case GroupKind::BraidA2:
    case GroupKind::BraidB2:
    case GroupKind::BraidG2: braid_relation(spec.braid_type()); break;
    case GroupKind::BraidModCenterPower:
      braid_relation(spec.braid);
      if (spec.t > 0) rels.emplace_back(center_word(spec.braid).power(spec.t), GroupWord());
      break;
    case GroupKind::S3Z:
      braid_relation(BraidType::A2);
      rels.emplace_back(s1.power(2), s2.power(2));
      break;
    case GroupKind::ZxZmod:
    case GroupKind::AbelianRank2:
      rels.emplace_back(s1 * s2, s2 * s1);
      if (spec.kind == GroupKind::ZxZmod && spec.t > 0)
        rels.emplace_back(s1.power(2 * spec.t), s2.power(2 * spec.t));
      break;
  }
  return rels;
}

// ---------------------------------------------------------------- classifier

std::string to_string(DescriptionTag tag) {
  switch (tag) {
    case DescriptionTag::Free2: return "Free2";
    case DescriptionTag::BraidA2: return "BraidA2";
    case DescriptionTag::BraidB2: return "BraidB2";
    case DescriptionTag::BraidG2: return "BraidG2";
    case DescriptionTag::QuotientFamily: return "QuotientFamily";
    case DescriptionTag::ExceptionalA2orS3Z: return "ExceptionalA2orS3Z";
    case DescriptionTag::ExceptionalB2orZxZ: return "ExceptionalB2orZxZ";
    case DescriptionTag::Abelian: return "Abelian";
  }
  return "?";
}

GroupDescription classify_twist_group(long k, long m, long k2, long m2, long total_hom) {
  if (k < 1 || k2 < 1) throw InvalidInput("sequence lengths must be positive");
  if (total_hom < 0) throw InvalidInput("total Hom dimension must be nonnegative");
  if (k > k2) {
    std::swap(k, k2);
    std::swap(m, m2);
  }
  GroupDescription d;
  if (total_hom == 0) {
    d.tag = DescriptionTag::Abelian;
    d.notes = "no morphisms between the sequences; the twists commute";
    return d;
  }
  if (k2 * m != k * m2)
    throw InvalidInput("k'm != km' forces Hom(E, E'[l]) = 0 for all l, but total_hom > 0");

  if (k2 % k == 0 && total_hom == k2) {
    const long r = k2 / k;
    if (r == 1) {
      if (m == 2 && k == 3) {
        d.tag = DescriptionTag::ExceptionalA2orS3Z;
        d.notes = "braid group of type A2 or the central extension S3^Z";
      } else if (3 * m == 4 * k) {
        d.tag = DescriptionTag::QuotientFamily;
        d.family = BraidType::A2;
        d.center_power_multiplier = k / std::gcd(k, 3L);
        d.notes = "B(A2) / <Delta_A^(t*" + std::to_string(d.center_power_multiplier) + ")> for some t";
      } else {
        d.tag = DescriptionTag::BraidA2;
      }
      return d;
    }
    if (r == 2) {
      if (m == 1 && k == 2) {
        d.tag = DescriptionTag::ExceptionalB2orZxZ;
        d.notes = "braid group of type B2 or (Z x Z)/(2t,-2t) for some t";
      } else if (2 * m == 3 * k) {
        d.tag = DescriptionTag::QuotientFamily;
        d.family = BraidType::B2;
        d.center_power_multiplier = 2 * k / std::gcd(k - 2, 4L);
        d.notes = "B(B2) / <Delta_B^(t*" + std::to_string(d.center_power_multiplier) + ")> for some t";
      } else {
        d.tag = DescriptionTag::BraidB2;
      }
      return d;
    }
    if (r == 3) {
      if (3 * m == 5 * k) {
        d.tag = DescriptionTag::QuotientFamily;
        d.family = BraidType::G2;
        d.center_power_multiplier = k;
        d.notes = "B(G2) / <Delta_G^(t*" + std::to_string(k) + ")> for some t";
      } else {
        d.tag = DescriptionTag::BraidG2;
      }
      return d;
    }
  }
  d.tag = DescriptionTag::Free2;
  d.notes = "a_{E,E'} * a_{E',E} >= 4; ping-pong gives a free group";
  return d;
}

}  // namespace sphtwist
