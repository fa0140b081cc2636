#pragma once
// Test-only oracle: literal path enumeration in ZΓ and Gaussian elimination
// modulo the span of q * mesh * p. Independent of the knitting and of the
// incremental cokernel construction in the library.

#include <map>
#include <vector>

#include "sphtwist/linalg.hpp"
#include "sphtwist/mesh_model.hpp"

namespace sphtwist::testing {

using Path = std::vector<Vertex>;

inline void enumerate_paths(const MeshModel& m, const Vertex& from, const Vertex& to, Path& cur,
                            std::vector<Path>& out) {
  const Vertex& last = cur.back();
  if (last == to) {
    out.push_back(cur);
    return;
  }
  if (last.pos > to.pos) return;
  for (const auto& w : m.successors(last)) {
    cur.push_back(w);
    enumerate_paths(m, from, to, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Path> all_paths(const MeshModel& m, const Vertex& from, const Vertex& to) {
  std::vector<Path> out;
  Path cur{from};
  enumerate_paths(m, from, to, cur, out);
  return out;
}

inline int brute_force_hom(const MeshModel& m, const Vertex& x, const Vertex& y) {
  const auto paths = all_paths(m, x, y);
  if (paths.empty()) return 0;
  std::map<Path, std::size_t> index;
  for (std::size_t i = 0; i < paths.size(); ++i) index[paths[i]] = i;

  std::vector<std::vector<int>> relations;
  // Mesh starting at w and ending at tau^{-1} w, for every w on some path.
  for (int pos = x.pos; pos <= y.pos; ++pos) {
    for (int row : m.rows()) {
      const Vertex w{row, pos};
      const Vertex end = m.tau(w, -1);
      const auto heads = all_paths(m, x, w);
      const auto tails = all_paths(m, end, y);
      for (const auto& p : heads)
        for (const auto& q : tails) {
          std::vector<int> vec(paths.size(), 0);
          for (const auto& z : m.successors(w)) {
            Path full = p;
            full.push_back(z);
            full.insert(full.end(), q.begin(), q.end());
            vec[index.at(full)] += 1;
          }
          relations.push_back(vec);
        }
    }
  }
  linalg::Matrix mat(relations.size(), paths.size());
  for (std::size_t r = 0; r < relations.size(); ++r)
    for (std::size_t c = 0; c < paths.size(); ++c) mat(r, c) = relations[r][c];
  return static_cast<int>(paths.size() - linalg::rank(mat));
}

}  // namespace sphtwist::testing
