#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sphtwist/mesh_model.hpp"

namespace sphtwist {

/// A `key = value` file. Blank lines and lines starting with '#' are
/// skipped; a repeated key overrides the earlier one but keeps its place.
///
///   diagram = d4
///   window = -9 9
///   E.degrees = 1 1 0
///   E.members = (1,0) (1,-1) (1,-2)
///   E.sphericity = 2        # optional, defaults to the sum of degrees
class Config {
 public:
  std::optional<std::string> get(const std::string& key) const;
  bool has(const std::string& key) const { return get(key).has_value(); }
  void set(const std::string& key, const std::string& value);
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

/// ParseError positions are 1-based line numbers.
Config parse_config(std::string_view text);
/// Throws InvalidInput when the file cannot be read.
Config load_config(const std::string& path);

/// "lo hi" with lo <= hi.
Window parse_window(std::string_view text);

/// Every label L with an L.members key, in file order. Throws ParseError for
/// malformed lists and InvalidInput when degrees and members differ in length.
std::vector<SphericalSequenceSpec> sequences_from_config(const Config& config);

/// The two sequences of the worked examples: on D4, E_i = (1,-i) and
/// E'_i = (2,1-i) with degrees (1,1,0); on A3, E = (0,0), (0,-1) with
/// degrees (1,0) and E' = (1,0), (1,-1), (-1,0), (-1,-1) with degrees
/// (1,0,1,0). Throws UnsupportedDiagram otherwise.
std::vector<SphericalSequenceSpec> standard_sequences(const Diagram& diagram);

}  // namespace sphtwist
