#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gcs/trace.hpp"

namespace gcs {

// Atom of a discrete geodesic current: the counting current of a closed
// geodesic (conjugacy class) or of a geodesic connecting two cusps (orbit of
// a parabolic endpoint pair).
struct Atom {
  enum class Kind { closed, cusp_pair };
  Kind kind;
  std::string word;     // closed: canonical conjugacy representative of the primitive root
  int multiplicity = 1; // closed input w = root^multiplicity contributes multiplicity copies
  Geodesic geo;         // axis of the representative / canonical orbit pair

  std::string key() const {
    return (kind == Kind::closed ? "c:" + word : "p:" + geo.key());
  }
};

// canonical atom of the counting current of the closed geodesic of w;
// throws for parabolic or trivial w
Atom eta_closed(const SurfacePreset& p, const std::string& w);
// canonical atom of the counting current of the geodesic between two cusps
Atom eta_cusp_pair(const SurfacePreset& p, const BoundaryPoint& x, const BoundaryPoint& y);

struct WeightedAtom {
  double weight;  // positive; multiplicities already folded in
  Atom atom;
};

struct DiscreteCurrent {
  std::vector<WeightedAtom> atoms;

  void add(double weight, const Atom& a);
  bool empty() const { return atoms.empty(); }
  DiscreteCurrent scaled(double c) const;
};

// per-atom orbit data reused across evaluations
struct AtomOrbit {
  Geodesic geo;
  std::vector<GroupElement> tiles;       // cusp pair: full tile list; closed: one primitive period
  std::vector<IntMat> tile_inverses;
  bool periodic = false;
};

class OrbitCache {
 public:
  explicit OrbitCache(const SurfacePreset& p) : preset_(&p) {}
  const AtomOrbit& get(const Atom& a);
  const SurfacePreset& preset() const { return *preset_; }

 private:
  const SurfacePreset* preset_;
  std::map<std::string, AtomOrbit> data_;
};

struct Window {
  std::complex<double> center{0.0, 1.0};
  double radius = 1.0;
};

// all orbit translates of the atom's geodesic meeting the window, one
// representative per coset, deduplicated by exact endpoints
std::vector<Geodesic> atoms_in_window(OrbitCache& cache, const Atom& a, const Window& w,
                                      const std::vector<GroupElement>* window_tiles = nullptr);

// number of orbit translates with one endpoint in box.I and the other in box.J;
// throws when an enumerated endpoint comes within 1e-9 (chordal) of an arc
// endpoint
long long count_box_atom(OrbitCache& cache, const Atom& a, const PairBox& box,
                         const std::vector<GroupElement>* window_tiles = nullptr);

double evaluate_box(OrbitCache& cache, const DiscreteCurrent& mu, const PairBox& box);

// piecewise-linear bump pair over (I, J): tent in boundary angle with the
// given margin, 1 on the core of each arc
struct BumpPair {
  PairBox box;
  double margin;  // angular ramp width
};
double evaluate_bump(OrbitCache& cache, const DiscreteCurrent& mu, const BumpPair& bump);

// mu(A(K0)) for a compact window K0 covering the truncated fundamental domain
double local_finiteness_check(OrbitCache& cache, const DiscreteCurrent& mu,
                              const TruncatedDomain& trunc);

// the closed-geodesic sequence a^n b^n and the cusp-pair sequence
// {g^-n p, g^n q} used by the convergence experiments
Atom prop51_atom(const SurfacePreset& p, int n);
Atom prop55_atom(const SurfacePreset& p, const std::string& gword, const BoundaryPoint& pp,
                 const BoundaryPoint& qq, int n);

// default five-box evaluation suite; arc endpoints are odd/odd rationals so
// they can never coincide with endpoints of the cusp-pair orbits used in the
// experiments
std::vector<PairBox> default_box_suite(const SurfacePreset& p, std::uint64_t seed = 17);

}  // namespace gcs
