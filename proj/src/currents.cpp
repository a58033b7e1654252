#include "gcs/currents.hpp"

#include <algorithm>
#include <cmath>

#include "gcs/errors.hpp"

namespace gcs {

Atom eta_closed(const SurfacePreset& p, const std::string& w) {
  const std::string reduced = free_reduce(w);
  if (reduced.empty()) throw precondition_error("eta_closed of the trivial word");
  const std::string cyc = cyclic_reduce(reduced);
  std::string root;
  const int mult = primitive_root(cyc, &root);
  const std::string key = conjugacy_key(root);
  const GroupElement g = p.elem(key);
  const Int tr = g.m.trace();
  if (tr * tr <= 4)
    throw precondition_error("eta_closed of a parabolic word (zero measure by convention)");
  Atom a;
  a.kind = Atom::Kind::closed;
  a.word = key;
  a.multiplicity = mult;
  a.geo = axis_of(g.m);
  return a;
}

Atom eta_cusp_pair(const SurfacePreset& p, const BoundaryPoint& x, const BoundaryPoint& y) {
  if (x.is_surd() || y.is_surd())
    throw precondition_error("eta_cusp_pair needs parabolic points (rational or inf)");
  if (x == y) throw precondition_error("eta_cusp_pair needs two distinct points");
  const auto tiles = cusp_pair_tiles(p, x, y);
  // canonical orbit representative: smallest key among translates meeting the
  // base tile (that set is orbit-invariant)
  std::optional<Geodesic> best;
  for (const auto& s : tiles) {
    const IntMat inv = s.m.inverse();
    Geodesic cand(inv.apply(x), inv.apply(y));
    if (!best || cand.key() < best->key()) best = cand;
  }
  Atom a;
  a.kind = Atom::Kind::cusp_pair;
  a.multiplicity = 1;
  a.geo = *best;
  return a;
}

void DiscreteCurrent::add(double weight, const Atom& a) {
  if (weight <= 0) throw precondition_error("current weights must be positive");
  const double eff = weight * a.multiplicity;
  const std::string key = a.key();
  for (auto& row : atoms) {
    if (row.atom.key() == key) {
      row.weight += eff;
      return;
    }
  }
  Atom normalized = a;
  normalized.multiplicity = 1;
  atoms.push_back({eff, normalized});
}

DiscreteCurrent DiscreteCurrent::scaled(double c) const {
  if (c <= 0) throw precondition_error("scale factor must be positive");
  DiscreteCurrent out = *this;
  for (auto& row : out.atoms) row.weight *= c;
  return out;
}

const AtomOrbit& OrbitCache::get(const Atom& a) {
  auto it = data_.find(a.key());
  if (it != data_.end()) return it->second;
  AtomOrbit orbit;
  orbit.geo = a.geo;
  if (a.kind == Atom::Kind::closed) {
    orbit.periodic = true;
    orbit.tiles = axis_tiles_period(*preset_, preset_->elem(a.word)).tiles;
  } else {
    orbit.periodic = false;
    orbit.tiles = cusp_pair_tiles(*preset_, a.geo.e1, a.geo.e2);
  }
  orbit.tile_inverses.reserve(orbit.tiles.size());
  for (const auto& t : orbit.tiles) orbit.tile_inverses.push_back(t.m.inverse());
  return data_.emplace(a.key(), std::move(orbit)).first->second;
}

std::vector<Geodesic> atoms_in_window(OrbitCache& cache, const Atom& a, const Window& w,
                                      const std::vector<GroupElement>* window_tiles) {
  const auto& orbit = cache.get(a);
  std::vector<GroupElement> local_tiles;
  if (!window_tiles) {
    local_tiles = tiles_meeting_ball(cache.preset(), w.center, w.radius);
    window_tiles = &local_tiles;
  }
  std::map<std::string, Geodesic> found;
  for (const auto& t : *window_tiles) {
    for (const auto& sinv : orbit.tile_inverses) {
      const IntMat g = t.m.mul(sinv);
      Geodesic cand(g.apply(orbit.geo.e1), g.apply(orbit.geo.e2));
      if (dist_point_to_geodesic(w.center, cand) > w.radius + 1e-9) continue;
      found.emplace(cand.key(), std::move(cand));
    }
  }
  std::vector<Geodesic> out;
  out.reserve(found.size());
  for (auto& kv : found) out.push_back(std::move(kv.second));
  return out;
}

long long count_box_atom(OrbitCache& cache, const Atom& a, const PairBox& box,
                         const std::vector<GroupElement>* window_tiles) {
  Window w;
  w.center = {0.0, 1.0};
  w.radius = box_window_radius(box) + 0.05;
  const auto reps = atoms_in_window(cache, a, w, window_tiles);
  const BoundaryPoint* corners[4] = {&box.I.from, &box.I.to, &box.J.from, &box.J.to};
  long long count = 0;
  for (const auto& g : reps) {
    for (const BoundaryPoint* e : {&g.e1, &g.e2})
      for (const BoundaryPoint* c : corners)
        if (chordal_dist(*e, *c) < 1e-9)
          throw numerical_error("box boundary touches an orbit endpoint; perturb the box");
    const bool i1 = box.I.contains(g.e1), i2 = box.I.contains(g.e2);
    const bool j1 = box.J.contains(g.e1), j2 = box.J.contains(g.e2);
    if ((i1 && j2) || (i2 && j1)) ++count;
  }
  return count;
}

double evaluate_box(OrbitCache& cache, const DiscreteCurrent& mu, const PairBox& box) {
  double total = 0;
  for (const auto& row : mu.atoms)
    total += row.weight * static_cast<double>(count_box_atom(cache, row.atom, box));
  return total;
}

namespace {

double mod_two_pi(double t) {
  const double tau = 2.0 * M_PI;
  t = std::fmod(t, tau);
  if (t < 0) t += tau;
  return t;
}

double tent(const Arc& arc, double margin, const BoundaryPoint& x) {
  const double len = arc.angular_length();
  const double s = mod_two_pi(cayley_angle(x) - cayley_angle(arc.from));
  if (s >= len) return 0.0;
  const double edge = std::min(s, len - s);
  return std::min(1.0, edge / margin);
}

}  // namespace

double evaluate_bump(OrbitCache& cache, const DiscreteCurrent& mu, const BumpPair& bump) {
  if (bump.margin <= 0) throw precondition_error("bump margin must be positive");
  Window w;
  w.center = {0.0, 1.0};
  w.radius = box_window_radius(bump.box) + 0.05;
  const BoundaryPoint* corners[4] = {&bump.box.I.from, &bump.box.I.to, &bump.box.J.from,
                                     &bump.box.J.to};
  double total = 0;
  for (const auto& row : mu.atoms) {
    const auto reps = atoms_in_window(cache, row.atom, w);
    for (const auto& g : reps) {
      for (const BoundaryPoint* e : {&g.e1, &g.e2})
        for (const BoundaryPoint* c : corners)
          if (chordal_dist(*e, *c) < 1e-9)
            throw numerical_error("bump support touches an orbit endpoint; perturb the box");
      const double f = tent(bump.box.I, bump.margin, g.e1) * tent(bump.box.J, bump.margin, g.e2) +
                       tent(bump.box.I, bump.margin, g.e2) * tent(bump.box.J, bump.margin, g.e1);
      total += row.weight * f;
    }
  }
  return total;
}

double local_finiteness_check(OrbitCache& cache, const DiscreteCurrent& mu,
                              const TruncatedDomain& trunc) {
  Window w{trunc.cover_center, trunc.cover_radius};
  double total = 0;
  for (const auto& row : mu.atoms)
    total += row.weight * static_cast<double>(atoms_in_window(cache, row.atom, w).size());
  return total;
}

Atom prop51_atom(const SurfacePreset& p, int n) {
  if (n < 1) throw precondition_error("prop51_atom needs n >= 1");
  return eta_closed(p, std::string(n, 'a') + std::string(n, 'b'));
}

Atom prop55_atom(const SurfacePreset& p, const std::string& gword, const BoundaryPoint& pp,
                 const BoundaryPoint& qq, int n) {
  if (n < 1) throw precondition_error("prop55_atom needs n >= 1");
  const GroupElement g = p.elem(gword);
  const Geodesic axis = axis_of(g.m);  // throws unless hyperbolic
  if (geodesics_cross(Geodesic(pp, qq), axis) != CrossKind::cross)
    throw precondition_error("prop55_atom: [p,q] must cross the axis of g");
  IntMat gn = IntMat::identity();
  for (int i = 0; i < n; ++i) gn = gn.mul(g.m);
  return eta_cusp_pair(p, gn.inverse().apply(pp), gn.apply(qq));
}

std::vector<PairBox> default_box_suite(const SurfacePreset& p, std::uint64_t seed) {
  auto rat = [](long a, long b) { return BoundaryPoint::rational(a, b); };
  const PairBox base1(Arc(rat(-1, 9), rat(1, 9)), Arc(rat(19, 5), rat(-19, 5)), 0.2, "cusp-pair");
  const PairBox base2(Arc(rat(-5, 9), rat(-1, 3)), Arc(rat(9, 5), rat(13, 5)), 0.2, "axis");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 256; ++attempt) {
    const std::string hw = random_reduced_word(rng, 3);
    const GroupElement h = p.elem(hw);
    const GroupElement hi = p.inverse(h);
    try {
      PairBox b3 = apply(h.m, base1, 0.2);
      PairBox b4 = apply(h.m, base2, 0.2);
      PairBox b5 = apply(hi.m, base1, 0.2);
      b3.name = hw + "*cusp-pair";
      b4.name = hw + "*axis";
      b5.name = word_inverse(hw) + "*cusp-pair";
      if (box_window_radius(b3) > 4.2 || box_window_radius(b4) > 4.2 ||
          box_window_radius(b5) > 4.2)
        continue;
      return {base1, base2, b3, b4, b5};
    } catch (const precondition_error&) {
      continue;  // translated arcs fell below the angular floor; next word
    }
  }
  throw numerical_error("no admissible translate boxes found for the suite");
}

}  // namespace gcs
