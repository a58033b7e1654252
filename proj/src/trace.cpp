#include "gcs/trace.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "gcs/errors.hpp"

namespace gcs {

FixedPoints fixed_points(const IntMat& m) {
  if (m.is_plus_minus_identity()) throw precondition_error("fixed points of the identity");
  const Int tr = m.trace();
  const Int disc = tr * tr - 4;
  if (disc < 0)
    throw precondition_error("elliptic element (|trace| < 2) signals preset corruption");
  if (m.c == 0) {
    if (disc == 0) {
      auto oo = BoundaryPoint::infinity();
      return {FixedKind::parabolic, oo, oo};
    }
    return {FixedKind::hyperbolic, BoundaryPoint::infinity(),
            BoundaryPoint::rational(m.b, m.d - m.a)};
  }
  if (disc == 0) {
    auto x = BoundaryPoint::rational(m.a - m.d, 2 * m.c);
    return {FixedKind::parabolic, x, x};
  }
  return {FixedKind::hyperbolic, BoundaryPoint::surd(m.a - m.d, 1, 2 * m.c, disc),
          BoundaryPoint::surd(m.a - m.d, -1, 2 * m.c, disc)};
}

FixedPoints fixed_points(const MoebiusMap& m) { return fixed_points(m.scaled_int()); }

Geodesic axis_of(const IntMat& m) {
  auto fp = fixed_points(m);
  if (fp.kind != FixedKind::hyperbolic)
    throw precondition_error("axis of a non-hyperbolic element");
  return Geodesic(fp.p1, fp.p2);
}

namespace {

constexpr int kTraceCap = 200000;

// exit wall for the oriented local geodesic u -> v, or -1 for a cusp tail at v
int exit_wall_of(const SurfacePreset& p, const BoundaryPoint& u, const BoundaryPoint& v) {
  const Geodesic d(u, v);
  int found = -1;
  for (int i = 0; i < 4; ++i) {
    const auto& w = p.walls[i];
    if (d == w.geo)
      throw numerical_error("geodesic lies in a wall orbit; perturb the input");
    if (geodesics_cross(d, w.geo) != CrossKind::cross) continue;
    if (v == w.beyond.from || v == w.beyond.to) continue;
    if (!ccw(w.beyond.from, v, w.beyond.to)) continue;
    if (found >= 0) throw numerical_error("ambiguous exit wall");
    found = i;
  }
  if (found >= 0) return found;
  if (p.vertex_index(v) < 0)
    throw numerical_error("trace stalled: forward endpoint is neither beyond a wall nor a vertex");
  return -1;
}

std::complex<double> sample_point(const Geodesic& g) {
  const auto s = g.shape();
  if (s.is_vertical) return {s.x0, 1.37};
  return {s.center, s.radius};
}

struct DirRun {
  bool periodic = false;
  int period_start = 0;
  GroupElement repeat_tile;  // tile at the moment the state repeated
  std::vector<GroupElement> tiles;
  std::vector<int> exits;
  int end_vertex = -1;
};

DirRun run_direction(const SurfacePreset& p, const GroupElement& start, const BoundaryPoint& u,
                     const BoundaryPoint& v) {
  DirRun run;
  GroupElement g = start;
  const IntMat s_inv = start.m.inverse();
  BoundaryPoint lu = s_inv.apply(u);
  BoundaryPoint lv = s_inv.apply(v);
  std::unordered_map<std::string, int> seen;
  for (int step = 0; step < kTraceCap; ++step) {
    const std::string key = lu.str() + ">" + lv.str();
    auto it = seen.find(key);
    if (it != seen.end()) {
      run.periodic = true;
      run.period_start = it->second;
      run.repeat_tile = g;
      return run;
    }
    seen.emplace(key, static_cast<int>(run.tiles.size()));
    run.tiles.push_back(g);
    const int w = exit_wall_of(p, lu, lv);
    if (w < 0) {
      run.end_vertex = p.vertex_index(lv);
      return run;
    }
    run.exits.push_back(w);
    const char cl = p.walls[w].cross_letter;
    g = p.mul(g, cl);
    const IntMat mi = p.letter_mat(inv_letter(cl));
    lu = mi.apply(lu);
    lv = mi.apply(lv);
  }
  throw numerical_error("trace step cap exceeded (endpoint is neither parabolic nor an axis end?)");
}

}  // namespace

WallTrace trace_geodesic(const SurfacePreset& p, const Geodesic& geo) {
  WallTrace out;
  out.geo = geo;
  const GroupElement start = locate(p, sample_point(geo));
  DirRun fwd = run_direction(p, start, geo.e1, geo.e2);
  if (fwd.periodic) {
    out.periodic = true;
    const auto& t0 = fwd.tiles[fwd.period_start];
    out.holonomy = p.mul(fwd.repeat_tile, p.inverse(t0));
    out.tiles.assign(fwd.tiles.begin() + fwd.period_start, fwd.tiles.end());
    out.exit_walls.assign(fwd.exits.begin() + fwd.period_start, fwd.exits.end());
    for (std::size_t k = 0; k < out.tiles.size(); ++k)
      out.crossings.push_back(canonical_wall_edge(p, out.tiles[k], out.exit_walls[k]));
    return out;
  }
  DirRun back = run_direction(p, start, geo.e2, geo.e1);
  if (back.periodic) throw numerical_error("inconsistent trace: one end terminal, one periodic");
  // stitch: backward tiles reversed (dropping the shared start), then forward
  for (std::size_t k = back.tiles.size(); k-- > 1;) {
    out.tiles.push_back(back.tiles[k]);
    // forward-oriented exit of a backward tile is its backward entry wall
    out.exit_walls.push_back(p.walls[back.exits[k - 1]].pair_wall);
    out.crossings.push_back(canonical_wall_edge(p, back.tiles[k - 1], back.exits[k - 1]));
  }
  for (std::size_t k = 0; k < fwd.tiles.size(); ++k) {
    out.tiles.push_back(fwd.tiles[k]);
    if (k < fwd.exits.size()) {
      out.exit_walls.push_back(fwd.exits[k]);
      out.crossings.push_back(canonical_wall_edge(p, fwd.tiles[k], fwd.exits[k]));
    }
  }
  out.back_vertex = back.end_vertex;
  out.fwd_vertex = fwd.end_vertex;
  return out;
}

std::vector<GroupElement> cusp_pair_tiles(const SurfacePreset& p, const BoundaryPoint& x,
                                          const BoundaryPoint& y) {
  if (x.is_surd() || y.is_surd())
    throw precondition_error("cusp pair endpoints must be parabolic (rational or inf)");
  if (x == y) throw precondition_error("cusp pair endpoints must be distinct");
  cusp_class(x);
  cusp_class(y);
  WallTrace t = trace_geodesic(p, Geodesic(x, y));
  if (t.periodic) throw numerical_error("cusp pair trace came back periodic");
  return t.tiles;
}

AxisPeriod axis_tiles_period(const SurfacePreset& p, const GroupElement& g) {
  auto fp = fixed_points(g.m);
  if (fp.kind != FixedKind::hyperbolic)
    throw precondition_error("axis_tiles_period needs a hyperbolic element");
  AxisPeriod out;
  out.axis = Geodesic(fp.p1, fp.p2);
  out.holonomy = g;
  WallTrace t = trace_geodesic(p, out.axis);
  if (!t.periodic) throw numerical_error("axis trace did not close up");
  out.primitive = t.holonomy;
  // g = primitive^k (or primitive^-k); cover one <g>-period with k translates
  int k = 0;
  GroupElement acc;  // identity
  const std::string gi = word_inverse(g.word);
  while (true) {
    if (acc.word == g.word || acc.word == gi) break;
    acc = p.mul(acc, t.holonomy);
    if (++k > 10000)
      throw numerical_error("holonomy does not generate the input element");
  }
  if (k == 0) k = 1;  // g equals the identity period guard (unreachable for hyperbolic g)
  GroupElement shift;
  for (int j = 0; j < k; ++j) {
    for (const auto& tile : t.tiles) out.tiles.push_back(p.mul(shift, tile));
    shift = p.mul(shift, t.holonomy);
  }
  return out;
}

namespace {

struct ParamFrame {
  bool vertical;
  double dir;  // +-1: t(z) = dir * (x or y)
  double t(std::complex<double> z) const { return dir * (vertical ? z.imag() : z.real()); }
};

ParamFrame frame_for(const BoundaryPoint& lu, const BoundaryPoint& lv) {
  ParamFrame f{};
  if (lu.inf || lv.inf) {
    f.vertical = true;
    f.dir = lv.inf ? 1.0 : -1.0;
    return f;
  }
  f.vertical = false;
  f.dir = lu.to_double() < lv.to_double() ? 1.0 : -1.0;
  return f;
}

constexpr double kCornerTol = 1e-9;

}  // namespace

RefinedTrace refined_trace(const SurfacePreset& p, const TruncatedDomain& trunc,
                           const Geodesic& geo) {
  WallTrace wt = trace_geodesic(p, geo);
  RefinedTrace out;
  out.geo = geo;
  out.periodic = wt.periodic;
  out.holonomy = wt.holonomy;

  // map wall index -> its endpoint vertex indices
  std::array<std::vector<int>, 4> wall_vertices;
  for (int v = 0; v < 4; ++v)
    for (int k = 0; k < 2; ++k) wall_vertices[p.vertex_walls[v][k]].push_back(v);

  std::unordered_set<std::string> owners;
  const std::size_t n = wt.tiles.size();
  out.path_len = static_cast<int>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const GroupElement& tile = wt.tiles[k];
    const IntMat inv = tile.m.inverse();
    const BoundaryPoint lu = inv.apply(geo.e1);
    const BoundaryPoint lv = inv.apply(geo.e2);
    const Geodesic delta(lu, lv);
    const auto shape = delta.shape();
    const ParamFrame pf = frame_for(lu, lv);

    // entry
    bool ideal_in = false;
    std::complex<double> zin;
    int entry_ball = -1;  // horoball the segment starts inside, if any
    if (k == 0 && !wt.periodic) {
      ideal_in = true;
      entry_ball = wt.back_vertex;
    } else {
      const int prev_exit = wt.periodic && k == 0 ? wt.exit_walls.back()
                                                  : wt.exit_walls[k - 1];
      const int entry_wall = p.walls[prev_exit].pair_wall;
      zin = crossing_point(delta, p.walls[entry_wall].geo);
      for (int v : wall_vertices[entry_wall]) {
        const double r = trunc.vertex_ball[v].boundary_residual(zin);
        if (std::abs(r) <= kCornerTol)
          throw numerical_error("wall crossing at a horocycle corner; perturb lambda");
        if (r > 0) entry_ball = v;
      }
    }
    // exit
    bool ideal_out = false;
    std::complex<double> zout;
    if (k == n - 1 && !wt.periodic) {
      ideal_out = true;
    } else {
      zout = crossing_point(delta, p.walls[wt.exit_walls[k]].geo);
    }
    const double t_in = ideal_in ? -1e300 : pf.t(zin);
    const double t_out = ideal_out ? 1e300 : pf.t(zout);

    // horocycle crossings inside the open segment
    struct HoroEvent {
      double t;
      int vertex;
      std::complex<double> at;
    };
    std::vector<HoroEvent> hevents;
    for (int v = 0; v < 4; ++v) {
      auto pts = horocycle_meet(trunc.vertex_ball[v], shape);
      std::vector<double> ts;
      for (auto q : pts) {
        const double tq = pf.t(q);
        if (!(tq > t_in && tq < t_out)) continue;
        if (tq - t_in <= kCornerTol || t_out - tq <= kCornerTol)
          throw numerical_error("horocycle crossing at a wall corner; perturb lambda");
        for (auto corner : trunc.horo_corners[v])
          if (std::abs(q - corner) <= kCornerTol)
            throw numerical_error("horocycle crossing at an edge corner; perturb lambda");
        ts.push_back(tq);
        hevents.push_back({tq, v, q});
      }
      for (std::size_t i = 0; i + 1 < ts.size(); ++i)
        if (std::abs(ts[i] - ts[i + 1]) <= kCornerTol)
          throw numerical_error("tangent horoball crossing; perturb lambda");
    }
    std::sort(hevents.begin(), hevents.end(),
              [](const HoroEvent& a, const HoroEvent& b) { return a.t < b.t; });

    // region bookkeeping: does the tile keep a segment outside all horoballs?
    int state_ball = entry_ball;
    bool has_surface_segment = (state_ball < 0);
    for (const auto& he : hevents) {
      const EdgeRef edge{tile.word, 4 + he.vertex};
      out.events.push_back({edge, tile.m.apply(he.at), static_cast<int>(k)});
      owners.insert(edge.tile);
      state_ball = (state_ball == he.vertex) ? -1 : he.vertex;
      if (state_ball < 0) has_surface_segment = true;
    }
    if (has_surface_segment) out.presence.emplace_back(tile.word, static_cast<int>(k));

    // truncated wall edge at the exit, when the crossing stays on the surface
    if (!ideal_out) {
      bool inside = false;
      for (int v : wall_vertices[wt.exit_walls[k]]) {
        const double r = trunc.vertex_ball[v].boundary_residual(zout);
        if (std::abs(r) <= kCornerTol)
          throw numerical_error("wall crossing at a horocycle corner; perturb lambda");
        if (r > 0) inside = true;
      }
      if (!inside) {
        const EdgeRef edge = canonical_wall_edge(p, tile, wt.exit_walls[k]);
        out.events.push_back({edge, tile.m.apply(zout), static_cast<int>(k)});
        owners.insert(edge.tile);
      }
    }
  }
  out.owned_edge_tiles.assign(owners.begin(), owners.end());
  std::sort(out.owned_edge_tiles.begin(), out.owned_edge_tiles.end());
  return out;
}

}  // namespace gcs
