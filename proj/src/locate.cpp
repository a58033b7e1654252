#include "gcs/locate.hpp"

#include <queue>
#include <unordered_set>

#include "gcs/errors.hpp"

namespace gcs {

GroupElement locate(const SurfacePreset& p, std::complex<double> z, int max_steps) {
  if (z.imag() <= 0) throw precondition_error("locate needs a point in the upper half-plane");
  GroupElement g;  // identity
  std::complex<double> w = z;
  for (int step = 0; step < max_steps; ++step) {
    const int bad = p.violated_wall(w);
    if (bad < 0) return g;
    const char move = p.walls[bad].reduce_letter;
    w = p.letter_mat(move).apply(w);
    // w = (m_k ... m_1) z, so g = m_1^-1 ... m_k^-1
    g = p.mul(g, inv_letter(move));
  }
  throw numerical_error("locate: iteration cap exceeded (point too close to the boundary?)");
}

double dist_to_tile(const SurfacePreset& p, std::complex<double> z, const GroupElement& g) {
  const std::complex<double> w = g.m.inverse().apply(z);
  if (w.imag() <= 0) return 1e300;  // numeric overflow of the pullback; tile is far away
  if (p.in_closure(w)) return 0.0;
  const int bad = p.violated_wall(w);
  // the four outside regions are pairwise disjoint, so one wall determines it
  return dist_point_to_geodesic(w, p.walls[bad].geo);
}

std::array<GroupElement, 4> tile_neighbors(const SurfacePreset& p, const GroupElement& g) {
  return {p.mul(g, p.walls[0].cross_letter), p.mul(g, p.walls[1].cross_letter),
          p.mul(g, p.walls[2].cross_letter), p.mul(g, p.walls[3].cross_letter)};
}

std::vector<GroupElement> tiles_meeting_ball(const SurfacePreset& p, std::complex<double> center,
                                             double R) {
  if (R < 0) throw precondition_error("tiles_meeting_ball needs R >= 0");
  const double tol = 1e-9;
  std::vector<GroupElement> out;
  std::unordered_set<std::string> seen;
  std::queue<GroupElement> frontier;
  GroupElement start = locate(p, center);
  seen.insert(start.word);
  frontier.push(start);
  out.push_back(start);
  while (!frontier.empty()) {
    GroupElement g = frontier.front();
    frontier.pop();
    for (auto& nb : tile_neighbors(p, g)) {
      if (seen.count(nb.word)) continue;
      seen.insert(nb.word);
      if (dist_to_tile(p, center, nb) <= R + tol) {
        out.push_back(nb);
        frontier.push(nb);
      }
    }
  }
  return out;
}

}  // namespace gcs
