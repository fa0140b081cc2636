#include "sphtwist/picard.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "sphtwist/errors.hpp"

namespace sphtwist {

namespace {

const GroupSpec& g2() {
  static const GroupSpec spec = GroupSpec::braid_group(BraidType::G2);
  return spec;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

long parse_long(const std::string& s, std::size_t offset) {
  long v = 0;
  const char* first = s.data();
  if (!s.empty() && s[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("expected integer, got '" + s + "'", offset);
  return v;
}

long floor_mod(long a, long n) { return ((a % n) + n) % n; }

}  // namespace

UnitElement UnitElement::operator*(const UnitElement& rhs) const {
  UnitElement out = *this;
  out.sign *= rhs.sign;
  for (const auto& [sym, e] : rhs.free_part) {
    out.free_part[sym] += e;
    if (out.free_part[sym] == 0) out.free_part.erase(sym);
  }
  return out;
}

UnitElement UnitElement::inverse() const {
  UnitElement out = *this;
  for (auto& [sym, e] : out.free_part) e = -e;
  return out;
}

UnitElement parse_unit(std::string_view text) {
  UnitElement u;
  const std::string s(text);
  std::size_t start = 0;
  for (;;) {
    const std::size_t star = s.find('*', start);
    const std::string factor = trim(std::string_view(s).substr(start, star == std::string::npos ? std::string::npos : star - start));
    if (factor.empty()) throw ParseError("empty unit factor", start);
    if (factor == "1" || factor == "+1") {
    } else if (factor == "-1" || factor == "(-1)") {
      u.sign = -u.sign;
    } else if (factor.rfind("(-1)^", 0) == 0) {
      if (floor_mod(parse_long(trim(factor.substr(5)), start), 2) == 1) u.sign = -u.sign;
    } else {
      const std::size_t caret = factor.find('^');
      const std::string sym = trim(factor.substr(0, caret));
      if (sym.empty() || !std::isalpha(static_cast<unsigned char>(sym[0])))
        throw ParseError("bad unit symbol '" + sym + "'", start);
      for (char c : sym)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
          throw ParseError("bad unit symbol '" + sym + "'", start);
      const long e = caret == std::string::npos ? 1 : parse_long(trim(factor.substr(caret + 1)), start);
      u = u * UnitElement{1, e == 0 ? std::map<std::string, long>{} : std::map<std::string, long>{{sym, e}}};
    }
    if (star == std::string::npos) break;
    start = star + 1;
  }
  return u;
}

std::string to_string(const UnitElement& u) {
  std::vector<std::string> parts;
  if (u.sign == -1) parts.push_back("(-1)^1");
  for (const auto& [sym, e] : u.free_part) parts.push_back(e == 1 ? sym : sym + "^" + std::to_string(e));
  if (parts.empty()) return "1";
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " * ") + p;
  return out;
}

PicardElement pic_normal_form(const PicardElement& el) {
  if (el.k < 1) throw InvalidInput("k must be at least 1");
  NormalForm nf = normal_form(el.w, g2());
  const long c = nf.center_exponent;
  nf.center_exponent = 0;
  PicardElement out;
  out.k = el.k;
  out.w = lift(nf, g2());
  // Delta^c ~ (e, 5c, 3c, (-1)^{kc}).
  out.a = el.a + 5 * c;
  out.b = floor_mod(el.b + 3 * c, 3L * el.k);
  out.u = el.u;
  if (floor_mod(static_cast<long>(el.k) * c, 2) == 1) out.u.sign = -out.u.sign;
  return out;
}

namespace {

void same_k(const PicardElement& x, const PicardElement& y) {
  if (x.k != y.k)
    throw MismatchedParameter("elements of TrPic(Lambda_" + std::to_string(x.k) + ") and TrPic(Lambda_" +
                              std::to_string(y.k) + ")");
}

}  // namespace

PicardElement pic_multiply(const PicardElement& x, const PicardElement& y) {
  same_k(x, y);
  return pic_normal_form({x.k, x.w * y.w, x.a + y.a, x.b + y.b, x.u * y.u});
}

PicardElement pic_invert(const PicardElement& x) {
  return pic_normal_form({x.k, x.w.inverse(), -x.a, -x.b, x.u.inverse()});
}

bool pic_equal(const PicardElement& x, const PicardElement& y) {
  same_k(x, y);
  const auto nx = pic_normal_form(x);
  const auto ny = pic_normal_form(y);
  return nx.w == ny.w && nx.a == ny.a && nx.b == ny.b && nx.u == ny.u;
}

PicardElement pic_relation(int k) {
  return {k, center_word(BraidType::G2).inverse(), 5, 3, UnitElement{k % 2 == 0 ? 1 : -1, {}}};
}

PicardElement pic_identity(int k) { return {k, GroupWord(), 0, 0, UnitElement{}}; }

PicardElement parse_picard(std::string_view text, int k) {
  const std::string s = trim(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError("Picard element must be written [word ; shift ; nak ; unit]", 0);
  std::vector<std::string> fields;
  std::vector<std::size_t> offsets;
  std::size_t start = 1;
  for (std::size_t i = 1; i + 1 <= s.size() - 1; ++i)
    if (s[i] == ';') {
      fields.push_back(s.substr(start, i - start));
      offsets.push_back(start);
      start = i + 1;
    }
  fields.push_back(s.substr(start, s.size() - 1 - start));
  offsets.push_back(start);
  if (fields.size() < 3 || fields.size() > 4)
    throw ParseError("expected 3 or 4 ';'-separated fields, got " + std::to_string(fields.size()), 0);
  PicardElement el;
  el.k = k;
  try {
    el.w = parse_word(fields[0]);
  } catch (const ParseError& e) {
    throw ParseError("in braid word: " + e.reason(), offsets[0] + e.position());
  }
  if (el.w.max_generator() > 2) throw InvalidInput("the braid part lives in B(G2): use s1 and s2 only");
  el.a = parse_long(trim(fields[1]), offsets[1]);
  el.b = parse_long(trim(fields[2]), offsets[2]);
  if (fields.size() == 4) el.u = parse_unit(fields[3]);
  return el;
}

std::string to_string(const PicardElement& el) {
  return "[" + (el.w.empty() ? std::string("e") : to_string(el.w)) + " ; " + std::to_string(el.a) + " ; " +
         std::to_string(el.b) + " ; " + to_string(el.u) + "]";
}

}  // namespace sphtwist
