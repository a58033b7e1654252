#pragma once

#include <complex>
#include <vector>

#include "gcs/preset.hpp"

namespace gcs {

// tile owner of z: returns g with g^-1 z in the half-open fundamental domain
GroupElement locate(const SurfacePreset& p, std::complex<double> z, int max_steps = 10000);

// distance from z to the closed ideal polygon g F
double dist_to_tile(const SurfacePreset& p, std::complex<double> z, const GroupElement& g);

// all tiles h with d(center, h F) <= R, by breadth-first search over the
// side-pairing adjacency starting from locate(center)
std::vector<GroupElement> tiles_meeting_ball(const SurfacePreset& p, std::complex<double> center,
                                             double R);

// the four neighbors of a tile
std::array<GroupElement, 4> tile_neighbors(const SurfacePreset& p, const GroupElement& g);

}  // namespace gcs
