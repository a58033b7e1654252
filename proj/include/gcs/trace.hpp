#pragma once

#include <vector>

#include "gcs/locate.hpp"
#include "gcs/preset.hpp"

namespace gcs {

enum class FixedKind { hyperbolic, parabolic };
struct FixedPoints {
  FixedKind kind;
  BoundaryPoint p1, p2;  // parabolic: p1 == p2
};
// boundary fixed points of a non-elliptic matrix; throws on +-identity and elliptic
FixedPoints fixed_points(const IntMat& m);
FixedPoints fixed_points(const MoebiusMap& m);
Geodesic axis_of(const IntMat& m);

// Wall-level trace: the ordered sequence of tessellation wall edges a geodesic
// crosses.  Ends are cusp tails (parabolic endpoints; finitely many crossings)
// or the trace is periodic (the geodesic is an axis translate; one period is
// returned together with its holonomy).
struct WallTrace {
  Geodesic geo;
  bool periodic = false;
  GroupElement holonomy;            // periodic only; maps the trace one period forward
  std::vector<GroupElement> tiles;  // full path, or one period
  std::vector<int> exit_walls;      // exit wall index of tiles[k]
  std::vector<EdgeRef> crossings;   // canonical edges, aligned with exit_walls
  int back_vertex = -1, fwd_vertex = -1;  // terminal vertex index (finite case)
};

WallTrace trace_geodesic(const SurfacePreset& p, const Geodesic& g);

// tiles crossed by the geodesic between two parabolic points
std::vector<GroupElement> cusp_pair_tiles(const SurfacePreset& p, const BoundaryPoint& x,
                                          const BoundaryPoint& y);

struct AxisPeriod {
  Geodesic axis;
  std::vector<GroupElement> tiles;  // one <g>-period
  GroupElement holonomy;            // the input element
  GroupElement primitive;           // tile-period holonomy from the trace
};
AxisPeriod axis_tiles_period(const SurfacePreset& p, const GroupElement& g);

// Horoball-truncated trace: crossings of truncated wall edges and of
// horocyclic edges, in geodesic order.  Wall crossings inside open horoballs
// are not truncated-domain edges and are omitted.
struct CrossingEvent {
  EdgeRef edge;
  std::complex<double> at;  // global coordinates
  int pos = 0;              // index of the event's tile in the wall-level path
};

struct RefinedTrace {
  Geodesic geo;
  bool periodic = false;
  GroupElement holonomy;
  int path_len = 0;                     // wall-level tile count (one period if periodic)
  std::vector<CrossingEvent> events;    // full list, or one period
  std::vector<std::pair<std::string, int>> presence;  // tiles with a segment outside all
                                                      // horoballs, with path position
  std::vector<std::string> owned_edge_tiles;          // owners of crossed edges (dedup)
};

RefinedTrace refined_trace(const SurfacePreset& p, const TruncatedDomain& t, const Geodesic& g);

}  // namespace gcs
