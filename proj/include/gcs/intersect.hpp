#pragma once

#include "gcs/currents.hpp"

namespace gcs {

// one counted transverse crossing inside the fundamental domain
struct CrossingRecord {
  Geodesic rep1, rep2;         // orbit representatives (already pulled into the domain)
  std::complex<double> point;  // their intersection
};

struct CrossingList {
  std::vector<CrossingRecord> records;
  long long tangencies = 0;  // shared-endpoint pairs encountered (counted as zero)
};

// all crossings of orbit representatives of the two atoms whose intersection
// point lies in the half-open fundamental domain; on-wall points are decided
// exactly with the edge-ownership convention
CrossingList crossing_list(OrbitCache& cache, const Atom& a1, const Atom& a2);

// i(mu, nu): sum over atom pairs of weight products times crossing counts
double intersection_number(OrbitCache& cache, const DiscreteCurrent& mu,
                           const DiscreteCurrent& nu);

struct BlowupRow {
  int n;
  long long count;        // i(eta_{a^n b^n}, eta_{{0,inf}})
  bool lower_bound_ok;    // the n+1 straddling translates were found exactly
};
// crossing table of the closed-geodesic sequence against the cusp-to-cusp
// geodesic, with the exact straddling-family verification
std::vector<BlowupRow> blowup_table(OrbitCache& cache, int n_max);

// true iff every atom's orbit avoids all open horoballs of the parameter
bool gc_lambda_membership(const SurfacePreset& p, const DiscreteCurrent& mu,
                          const HorocycleParameter& lambda);

}  // namespace gcs
