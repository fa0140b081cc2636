#include "sphtwist/config.hpp"

#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include <boost/algorithm/string/trim.hpp>

#include "sphtwist/errors.hpp"

namespace sphtwist {

std::optional<std::string> Config::get(const std::string& key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return v;
  return std::nullopt;
}

void Config::set(const std::string& key, const std::string& value) {
  for (auto& [k, v] : entries_)
    if (k == key) {
      v = value;
      return;
    }
  entries_.emplace_back(key, value);
}

Config parse_config(std::string_view text) {
  Config config;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    boost::algorithm::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected key = value", lineno);
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    boost::algorithm::trim(key);
    boost::algorithm::trim(value);
    if (key.empty()) throw ParseError("empty key", lineno);
    config.set(key, value);
  }
  return config;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read config file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

namespace {

std::vector<int> parse_ints(const std::string& text, const std::string& what) {
  std::istringstream in(text);
  std::vector<int> out;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw ParseError("bad integer '" + token + "' in " + what, 0);
    out.push_back(value);
  }
  return out;
}

std::vector<Vertex> parse_vertices(const std::string& text) {
  std::vector<Vertex> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const auto close = text.find(')', i);
    if (text[i] != '(' || close == std::string::npos) throw ParseError("expected (row,pos)", i);
    out.push_back(parse_vertex(std::string_view(text).substr(i, close - i + 1)));
    i = close + 1;
  }
  return out;
}

}  // namespace

Window parse_window(std::string_view text) {
  const auto v = parse_ints(std::string(text), "window");
  if (v.size() != 2) throw ParseError("window needs two integers", 0);
  if (v[0] > v[1]) throw InvalidInput("window bounds out of order");
  return {v[0], v[1]};
}

std::vector<SphericalSequenceSpec> sequences_from_config(const Config& config) {
  std::vector<SphericalSequenceSpec> out;
  const std::string suffix = ".members";
  for (const auto& [key, value] : config.entries()) {
    if (key.size() <= suffix.size() || key.compare(key.size() - suffix.size(), suffix.size(), suffix) != 0)
      continue;
    SphericalSequenceSpec spec;
    spec.label = key.substr(0, key.size() - suffix.size());
    spec.members = parse_vertices(value);
    const auto degrees = config.get(spec.label + ".degrees");
    if (!degrees) throw InvalidInput("sequence " + spec.label + " has no degrees");
    spec.degrees = parse_ints(*degrees, spec.label + ".degrees");
    if (spec.degrees.size() != spec.members.size() || spec.members.empty())
      throw InvalidInput("sequence " + spec.label + ": degrees and members differ in length");
    if (const auto m = config.get(spec.label + ".sphericity")) {
      const auto v = parse_ints(*m, spec.label + ".sphericity");
      if (v.size() != 1) throw ParseError("sphericity takes one integer", 0);
      spec.sphericity = v.front();
    } else {
      spec.sphericity = std::accumulate(spec.degrees.begin(), spec.degrees.end(), 0);
    }
    out.push_back(std::move(spec));
  }
  return out;
}

std::vector<SphericalSequenceSpec> standard_sequences(const Diagram& diagram) {
  if (diagram == Diagram::d4())
    return {{"E", 2, {1, 1, 0}, {{1, 0}, {1, -1}, {1, -2}}},
            {"E'", 2, {1, 1, 0}, {{2, 1}, {2, 0}, {2, -1}}}};
  if (diagram == Diagram::a(3))
    return {{"E", 1, {1, 0}, {{0, 0}, {0, -1}}},
            {"E'", 2, {1, 0, 1, 0}, {{1, 0}, {1, -1}, {-1, 0}, {-1, -1}}}};
  throw UnsupportedDiagram("no standard sequences on " + to_string(diagram));
}

}  // namespace sphtwist
