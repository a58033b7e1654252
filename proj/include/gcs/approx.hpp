#pragma once

#include "gcs/currents.hpp"

namespace gcs {

// Round-path: the contiguous sequence of truncated-tessellation edges a
// geodesic crosses inside the radius-r tile ball around a base tile, stored
// for base tile = identity and spread by the group action.  Identified with
// its reversal through the canonical key.
struct RoundPath {
  std::vector<EdgeRef> edges;
  std::vector<std::string> reach;  // ball tiles the realizing geodesic meets outside horoballs
  std::string key;

  static std::string serialize(const std::vector<EdgeRef>& edges);
  static std::string canonical_key(const std::vector<EdgeRef>& edges);
};

struct SourceRef {
  int atom_index;
  std::string translate;  // realizing geodesic = translate * atom geodesic
};

struct WeightRow {
  RoundPath path;
  double weight = 0;                       // extracted cylinder mass
  std::map<int, long long> atom_counts;    // integer translate counts per input atom
  std::vector<SourceRef> sources;
  std::vector<std::complex<double>> source_points;  // event points of the first source
};

struct WeightTable {
  const SurfacePreset* preset = nullptr;
  TruncatedDomain trunc;
  int radius = 0;
  DiscreteCurrent mu;
  std::vector<WeightRow> rows;
  std::map<std::string, int> index;

  const WeightRow* find(const std::string& key) const;
};

// cylinder weights of a discrete current over the identity-ball round-paths
WeightTable roundpaths_of_current(OrbitCache& cache, const TruncatedDomain& trunc,
                                  const DiscreteCurrent& mu, int r);

// the matching constraints between adjacent tile balls; exact in the integer
// per-atom counts
struct MatchReport {
  bool exact = true;
  int classes = 0;
  std::vector<std::string> violations;
};
MatchReport check_matching(const WeightTable& wt);

// disjoint-cylinder selection covering the union of A(h F_lambda) over the
// radius-r0 tile ball; requires r >= 2 r0 for the greedy certificate
struct DisjointCover {
  struct Entry {
    std::string center;  // ball base tile
    std::string key;     // round-path key, base-normalized
    int row = -1;        // row in the weight table
  };
  std::vector<Entry> entries;
  bool certified = false;
};
DisjointCover select_disjoint_O(OrbitCache& cache, const WeightTable& wt, int r0);

// rational approximation theta/M of the weight table satisfying the matching
// equations exactly in integers
struct IntegerTable {
  std::vector<long long> theta;  // aligned with WeightTable rows
  long long M = 1;
  double max_residual = 0;       // max |theta/M - weight|
};
IntegerTable rationalize(const WeightTable& wt, double eps_hat, long long cap = 1000000);

// the copy-matching graph built from theta: vertices are integer-multiplicity
// round-path copies, edges join connectable restrictions across adjacent tiles
struct ComponentGraph {
  struct Component {
    bool periodic = false;
    GroupElement holonomy;                               // periodic only
    std::vector<std::pair<int, GroupElement>> path;      // (row, tile offset) along the walk
    std::vector<EdgeRef> edges;                          // merged edge sequence
    std::vector<std::complex<double>> points;            // witness crossing points
  };
  std::vector<Component> components;
  int max_degree = 0;
  long long total_copies = 0;
};
ComponentGraph build_gamma(const WeightTable& wt, const IntegerTable& theta);

// a component realized as a geodesic with exact endpoints plus the
// piecewise-geodesic witness certificates
struct AssembledLine {
  bool periodic = false;
  GroupElement holonomy;
  Geodesic limit;
  double min_angle = 3.2;       // smallest bending angle of the witness
  double min_piece = 1e300;     // shortest geodesic piece between joints
  double horo_gap = 1e300;      // finite case: distance between the end horocyclic edges
  int joints = 0;
};
AssembledLine assemble(const WeightTable& wt, const ComponentGraph::Component& comp);

struct DensifyReport {
  int radius = 0;
  double eps_hat = 0;
  long long M = 1;
  bool matching_exact = false;
  bool cover_certified = false;
  double max_weight_residual = 0;  // max |theta/M - mu_bar| over table rows
  int max_degree = 0;
  bool half_line_free = true;
  double min_angle = 3.2;
  double min_piece = 1e300;
  double min_horo_gap = 1e300;
  bool certificates_ok = false;
  struct BoxRow {
    std::string name;
    double mu_value = 0, nu_value = 0;
  };
  std::vector<BoxRow> boxes;
  double max_box_discrepancy = 0;
  struct PathRow {
    std::string key;
    double mu_bar = 0;
    long long theta = 0;
    bool in_cover = false;
  };
  std::vector<PathRow> paths;
};

// the full densification pipeline: extract cylinder weights, solve the
// matching system rationally, assemble the copy graph into geodesics, and
// verify the result against the box suite
std::pair<DiscreteCurrent, DensifyReport> densify(OrbitCache& cache, const DiscreteCurrent& mu,
                                                  int r, HorocycleParameter lambda,
                                                  double eps_hat,
                                                  const std::vector<PairBox>* suite = nullptr);

}  // namespace gcs
