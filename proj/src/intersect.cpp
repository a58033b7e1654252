#include "gcs/intersect.hpp"

#include <cmath>

#include "gcs/errors.hpp"

namespace gcs {

namespace {

// half-open domain membership of the crossing point of x and y, with exact
// wall-side decisions whenever the floating point margin is thin
bool crossing_in_domain(const SurfacePreset& p, const Geodesic& x, const Geodesic& y,
                        std::complex<double> z) {
  const double scale = 1.0 + std::norm(z);
  for (int i = 0; i < 4; ++i) {
    const double v = p.wall_fun(i, z) * p.walls[i].side_sign;
    if (v > 1e-9 * scale) continue;
    if (v < -1e-9 * scale) return false;
    const int s = crossing_side_of_wall_exact(x, y, p.walls[i].geo) * p.walls[i].side_sign;
    if (s < 0) return false;
    if (s == 0 && !p.walls[i].owned) return false;
  }
  return true;
}

// orbit representatives whose geodesic meets the closed fundamental domain
std::vector<Geodesic> domain_reps(OrbitCache& cache, const Atom& a) {
  const auto& orbit = cache.get(a);
  std::map<std::string, Geodesic> uniq;
  for (const auto& sinv : orbit.tile_inverses) {
    Geodesic g(sinv.apply(orbit.geo.e1), sinv.apply(orbit.geo.e2));
    uniq.emplace(g.key(), std::move(g));
  }
  std::vector<Geodesic> out;
  out.reserve(uniq.size());
  for (auto& kv : uniq) out.push_back(std::move(kv.second));
  return out;
}

}  // namespace

CrossingList crossing_list(OrbitCache& cache, const Atom& a1, const Atom& a2) {
  const SurfacePreset& p = cache.preset();
  CrossingList out;
  const auto l1 = domain_reps(cache, a1);
  const auto l2 = domain_reps(cache, a2);
  for (const auto& x : l1) {
    for (const auto& y : l2) {
      if (x == y) continue;  // diagonal pairs are not transverse crossings
      const CrossKind ck = geodesics_cross(x, y);
      if (ck == CrossKind::share_endpoint) {
        ++out.tangencies;
        continue;
      }
      if (ck != CrossKind::cross) continue;
      const auto z = crossing_point(x, y);
      if (crossing_in_domain(p, x, y, z)) out.records.push_back({x, y, z});
    }
  }
  return out;
}

double intersection_number(OrbitCache& cache, const DiscreteCurrent& mu,
                           const DiscreteCurrent& nu) {
  double total = 0;
  for (const auto& r1 : mu.atoms)
    for (const auto& r2 : nu.atoms)
      total += r1.weight * r2.weight *
               static_cast<double>(crossing_list(cache, r1.atom, r2.atom).records.size());
  return total;
}

std::vector<BlowupRow> blowup_table(OrbitCache& cache, int n_max) {
  if (n_max < 1) throw precondition_error("blowup_table needs n_max >= 1");
  const SurfacePreset& p = cache.preset();
  const Atom line = eta_cusp_pair(p, BoundaryPoint::integer(0), BoundaryPoint::infinity());
  std::vector<BlowupRow> out;
  for (int n = 1; n <= n_max; ++n) {
    const Atom an = prop51_atom(p, n);
    const auto cl = crossing_list(cache, an, line);
    // exact straddling family: a^-k Ax(a^n b^n) has endpoints n - 2k +- sqrt(n^2+1)
    // on opposite sides of 0 for k = 0..n, and each must be among the records
    bool ok = true;
    const Int disc = Int(n) * n + 1;
    std::map<std::string, bool> rep_keys;
    for (const auto& rec : cl.records) rep_keys[rec.rep1.key()] = true;
    for (int k = 0; k <= n && ok; ++k) {
      const Int off = Int(n) - 2 * k;
      if (!(surd_sign(off, -1, disc) < 0 && surd_sign(off, 1, disc) > 0)) ok = false;
      Geodesic tr(BoundaryPoint::surd(off, 1, 1, disc), BoundaryPoint::surd(off, -1, 1, disc));
      if (!rep_keys.count(tr.key())) ok = false;
    }
    out.push_back({n, static_cast<long long>(cl.records.size()), ok});
  }
  return out;
}

bool gc_lambda_membership(const SurfacePreset& p, const DiscreteCurrent& mu,
                          const HorocycleParameter& lambda) {
  if (mu.empty()) return true;
  const TruncatedDomain trunc = make_truncated(p, lambda);
  for (const auto& row : mu.atoms) {
    if (row.atom.kind == Atom::Kind::cusp_pair) return false;  // dives into its end horoballs
    const RefinedTrace rt = refined_trace(p, trunc, row.atom.geo);
    for (const auto& ev : rt.events)
      if (ev.edge.is_horocyclic()) return false;
  }
  return true;
}

}  // namespace gcs
