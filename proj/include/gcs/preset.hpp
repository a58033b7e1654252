#pragma once

#include <array>
#include <complex>
#include <string>

#include "gcs/geodesic.hpp"
#include "gcs/geom.hpp"
#include "gcs/word.hpp"

namespace gcs {

// group element: freely reduced word with its exact matrix
struct GroupElement {
  std::string word;
  IntMat m;

  bool is_identity() const { return word.empty(); }
  bool operator==(const GroupElement& o) const { return word == o.word; }
  bool operator!=(const GroupElement& o) const { return word != o.word; }
};

struct WallData {
  Geodesic geo;        // complete wall geodesic, exact
  bool owned;          // the half-open domain keeps this wall
  char cross_letter;   // tile across this wall of g is g * cross_letter
  char reduce_letter;  // applied to a point beyond this wall during point location
  int pair_wall;       // partner wall under the side pairing
  char pair_letter;    // generator carrying this wall onto the partner
  Arc beyond;          // boundary interval cut off on the non-domain side
  // float form, for plane-point tests
  Geodesic::Shape shape;
  int side_sign;  // sign of the wall function on the domain side
};

// Ideal polygon fundamental domain with side pairings for a free Fuchsian
// group; the standard instance is the Gamma(2) quadrilateral, and conjugated
// copies of it are presets too.
struct SurfacePreset {
  std::string name;
  std::array<IntMat, 4> gen;        // indexed by letter_index: a, A, b, B
  std::array<WallData, 4> walls;
  std::array<BoundaryPoint, 4> vertices;          // ideal vertices of the polygon
  std::array<std::array<int, 2>, 4> vertex_walls; // incident walls per vertex
  std::array<std::string, 4> vertex_parabolic;    // stabilizer generator word per vertex
  std::complex<double> interior_sample;

  static int letter_index(char c);
  const IntMat& letter_mat(char c) const { return gen[letter_index(c)]; }

  GroupElement elem(const std::string& word) const;
  GroupElement mul(const GroupElement& g, char letter) const;
  GroupElement mul(const GroupElement& g, const GroupElement& h) const;
  GroupElement inverse(const GroupElement& g) const;

  // half-open membership with the edge-ownership convention
  bool in_domain(std::complex<double> z) const;
  bool in_closure(std::complex<double> z, double tol = 0.0) const;
  // index of the (unique) violated wall, or -1 when z is in the domain
  int violated_wall(std::complex<double> z) const;
  double wall_fun(int wall, std::complex<double> z) const;

  int vertex_index(const BoundaryPoint& p) const;  // -1 if not a vertex

  std::string hash() const;
};

SurfacePreset preset_gamma2();
// the same surface seen from the h-translated fundamental domain h*F
SurfacePreset conjugate_preset(const SurfacePreset& base, const GroupElement& h);

// throws unless the side pairings satisfy the ping-pong interval conditions
void validate_pingpong(const SurfacePreset& p);

// canonical representative of a tessellation edge: unowned walls are named
// through the neighboring tile that owns them
struct EdgeRef {
  std::string tile;  // reduced word
  int kind;          // 0..3: wall index; 4..7: horocyclic edge at vertex (kind-4)

  bool is_horocyclic() const { return kind >= 4; }
  int vertex() const { return kind - 4; }
  bool operator==(const EdgeRef& o) const { return tile == o.tile && kind == o.kind; }
  std::string key() const { return tile + ":" + std::to_string(kind); }
};

EdgeRef canonical_wall_edge(const SurfacePreset& p, const GroupElement& tile, int wall);
// the two tiles sharing a wall edge; horocyclic edges have one owner
std::array<std::string, 2> edge_tiles(const SurfacePreset& p, const EdgeRef& e);

// per-cusp-class horocycle heights; class 0 holds inf for the standard frame
struct HorocycleParameter {
  std::array<double, 3> class_height{1.0, 0.5, 0.5};

  static HorocycleParameter defaults() { return {}; }
  // strict pairwise disjointness of the induced horoball family
  void validate() const;
  Horoball ball_at(const BoundaryPoint& parabolic) const;
};

// preset + horocycle parameter with cached truncation geometry (floats)
struct TruncatedDomain {
  const SurfacePreset* preset = nullptr;
  HorocycleParameter lambda;

  std::array<Horoball, 4> vertex_ball;  // at the polygon's ideal vertices
  std::array<std::array<std::complex<double>, 2>, 4> horo_corners;
  std::complex<double> cover_center;
  double cover_radius = 0.0;
  double min_edge_gap = 0.0;       // min distance between non-adjacent truncated edges
  double witness_min_len = 0.0;    // certificate threshold for assembled pieces

  bool in_any_vertex_ball(std::complex<double> z) const;
};

TruncatedDomain make_truncated(const SurfacePreset& p, HorocycleParameter lambda);

}  // namespace gcs
