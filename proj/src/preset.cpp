#include "gcs/preset.hpp"

#include <cmath>
#include <sstream>

#include "gcs/errors.hpp"

namespace gcs {

int SurfacePreset::letter_index(char c) {
  switch (c) {
    case 'a': return 0;
    case 'A': return 1;
    case 'b': return 2;
    case 'B': return 3;
  }
  throw precondition_error(std::string("bad letter: ") + c);
}

GroupElement SurfacePreset::elem(const std::string& word) const {
  GroupElement g;
  g.word = free_reduce(word);
  g.m = IntMat::identity();
  for (char c : g.word) g.m = g.m.mul(letter_mat(c));
  return g;
}

GroupElement SurfacePreset::mul(const GroupElement& g, char letter) const {
  GroupElement r;
  if (!g.word.empty() && g.word.back() == inv_letter(letter)) {
    r.word = g.word.substr(0, g.word.size() - 1);
    r.m = g.m.mul(letter_mat(letter));
    return r;
  }
  r.word = g.word + letter;
  r.m = g.m.mul(letter_mat(letter));
  return r;
}

GroupElement SurfacePreset::mul(const GroupElement& g, const GroupElement& h) const {
  GroupElement r;
  r.word = word_mul(g.word, h.word);
  r.m = g.m.mul(h.m);
  return r;
}

GroupElement SurfacePreset::inverse(const GroupElement& g) const {
  return {word_inverse(g.word), g.m.inverse()};
}

double SurfacePreset::wall_fun(int wall, std::complex<double> z) const {
  const auto& s = walls[wall].shape;
  if (s.is_vertical) return z.real() - s.x0;
  return std::norm(z - std::complex<double>(s.center, 0.0)) - s.radius * s.radius;
}

bool SurfacePreset::in_domain(std::complex<double> z) const {
  for (int i = 0; i < 4; ++i) {
    const double v = wall_fun(i, z) * walls[i].side_sign;
    if (walls[i].owned ? (v < 0) : (v <= 0)) return false;
  }
  return true;
}

bool SurfacePreset::in_closure(std::complex<double> z, double tol) const {
  for (int i = 0; i < 4; ++i)
    if (wall_fun(i, z) * walls[i].side_sign < -tol) return false;
  return true;
}

int SurfacePreset::violated_wall(std::complex<double> z) const {
  int worst = -1;
  double worst_v = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double v = wall_fun(i, z) * walls[i].side_sign;
    const bool bad = walls[i].owned ? (v < 0) : (v <= 0);
    if (bad && (worst == -1 || v < worst_v)) {
      worst = i;
      worst_v = v;
    }
  }
  return worst;
}

int SurfacePreset::vertex_index(const BoundaryPoint& p) const {
  for (int i = 0; i < 4; ++i)
    if (vertices[i] == p) return i;
  return -1;
}

std::string SurfacePreset::hash() const {
  std::ostringstream os;
  os << name;
  for (const auto& m : gen) os << "|" << m.a << "," << m.b << "," << m.c << "," << m.d;
  std::size_t h = std::hash<std::string>{}(os.str());
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

namespace {

WallData make_wall(Geodesic geo, bool owned, char cross, char reduce, int pair_wall,
                   char pair_letter, Arc beyond, std::complex<double> sample) {
  WallData w;
  w.geo = std::move(geo);
  w.owned = owned;
  w.cross_letter = cross;
  w.reduce_letter = reduce;
  w.pair_wall = pair_wall;
  w.pair_letter = pair_letter;
  w.beyond = std::move(beyond);
  w.shape = w.geo.shape();
  double v;
  if (w.shape.is_vertical)
    v = sample.real() - w.shape.x0;
  else
    v = std::norm(sample - std::complex<double>(w.shape.center, 0.0)) -
        w.shape.radius * w.shape.radius;
  w.side_sign = v >= 0 ? 1 : -1;
  return w;
}

}  // namespace

SurfacePreset preset_gamma2() {
  SurfacePreset p;
  p.name = "gamma2";
  p.gen[0] = IntMat{1, 2, 0, 1};   // a : z -> z + 2
  p.gen[1] = p.gen[0].inverse();
  p.gen[2] = IntMat{1, 0, 2, 1};   // b : z -> z / (2z + 1)
  p.gen[3] = p.gen[2].inverse();

  const auto m1 = BoundaryPoint::integer(-1);
  const auto z0 = BoundaryPoint::integer(0);
  const auto p1 = BoundaryPoint::integer(1);
  const auto oo = BoundaryPoint::infinity();
  p.vertices = {m1, z0, p1, oo};
  p.vertex_walls = {{{0, 2}, {2, 3}, {3, 1}, {0, 1}}};
  p.vertex_parabolic = {"Ab", "b", "bA", "a"};
  p.interior_sample = {0.1, 0.8};

  p.walls[0] = make_wall(Geodesic(m1, oo), true, 'A', 'a', 1, 'a', Arc(oo, m1), p.interior_sample);
  p.walls[1] = make_wall(Geodesic(p1, oo), false, 'a', 'A', 0, 'A', Arc(p1, oo), p.interior_sample);
  p.walls[2] = make_wall(Geodesic(m1, z0), true, 'B', 'b', 3, 'b', Arc(m1, z0), p.interior_sample);
  p.walls[3] = make_wall(Geodesic(z0, p1), false, 'b', 'B', 2, 'B', Arc(z0, p1), p.interior_sample);
  return p;
}

SurfacePreset conjugate_preset(const SurfacePreset& base, const GroupElement& h) {
  SurfacePreset p;
  p.name = base.name + "~" + (h.word.empty() ? std::string("id") : h.word);
  const IntMat hinv = h.m.inverse();
  for (int i = 0; i < 4; ++i) p.gen[i] = h.m.mul(base.gen[i]).mul(hinv);
  for (int i = 0; i < 4; ++i) p.vertices[i] = h.m.apply(base.vertices[i]);
  p.vertex_walls = base.vertex_walls;
  p.vertex_parabolic = base.vertex_parabolic;  // same words over the conjugated letters
  p.interior_sample = h.m.apply(base.interior_sample);
  for (int i = 0; i < 4; ++i) {
    const auto& w = base.walls[i];
    p.walls[i] = make_wall(apply(h.m, w.geo), w.owned, w.cross_letter, w.reduce_letter,
                           w.pair_wall, w.pair_letter, apply(h.m, w.beyond), p.interior_sample);
  }
  return p;
}

void validate_pingpong(const SurfacePreset& p) {
  auto strictly_inside = [](const BoundaryPoint& x, const Arc& a) {
    if (x == a.from || x == a.to) return false;
    return ccw(a.from, x, a.to);
  };
  for (int i = 0; i < 4; ++i) {
    const auto& wi = p.walls[i];
    // involutive pairing carrying walls onto partners
    if (p.walls[wi.pair_wall].pair_wall != i)
      throw precondition_error("side pairing is not involutive");
    const IntMat s = p.letter_mat(wi.pair_letter);
    if (apply(s, wi.geo) != p.walls[wi.pair_wall].geo)
      throw precondition_error("pairing does not carry wall onto partner");
    // ping-pong: the pairing sends the complement of this wall's interval
    // onto the partner's interval
    const auto& tgt = p.walls[wi.pair_wall].beyond;
    if (s.apply(wi.beyond.to) != tgt.from || s.apply(wi.beyond.from) != tgt.to)
      throw precondition_error("pairing does not exchange boundary intervals");
    for (int j = i + 1; j < 4; ++j) {
      const auto& wj = p.walls[j];
      if (geodesics_cross(wi.geo, wj.geo) == CrossKind::cross)
        throw precondition_error("fundamental polygon walls cross");
      if (strictly_inside(wj.beyond.from, wi.beyond) || strictly_inside(wj.beyond.to, wi.beyond) ||
          strictly_inside(wi.beyond.from, wj.beyond) || strictly_inside(wi.beyond.to, wj.beyond))
        throw precondition_error("ping-pong intervals overlap");
    }
  }
}

EdgeRef canonical_wall_edge(const SurfacePreset& p, const GroupElement& tile, int wall) {
  if (p.walls[wall].owned) return {tile.word, wall};
  return {word_mul(tile.word, std::string(1, p.walls[wall].cross_letter)), p.walls[wall].pair_wall};
}

std::array<std::string, 2> edge_tiles(const SurfacePreset& p, const EdgeRef& e) {
  if (e.is_horocyclic()) return {e.tile, e.tile};
  return {e.tile, word_mul(e.tile, std::string(1, p.walls[e.kind].cross_letter))};
}

void HorocycleParameter::validate() const {
  for (double h : class_height)
    if (h <= 0) throw precondition_error("horocycle heights must be positive");
  // tangency bounds: cross-class pairs realize |ps-qr| = 1, same-class pairs 2
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double bound = (i == j) ? 4.0 : 1.0;
      if (class_height[i] * class_height[j] >= bound)
        throw precondition_error("horoball family is not strictly disjoint");
    }
}

Horoball HorocycleParameter::ball_at(const BoundaryPoint& parabolic) const {
  const int c = cusp_class(parabolic);
  if (parabolic.inf) return Horoball(parabolic, 1.0 / class_height[c]);
  return Horoball(parabolic, class_height[c]);
}

bool TruncatedDomain::in_any_vertex_ball(std::complex<double> z) const {
  for (const auto& b : vertex_ball)
    if (b.contains(z)) return true;
  return false;
}

TruncatedDomain make_truncated(const SurfacePreset& p, HorocycleParameter lambda) {
  lambda.validate();
  TruncatedDomain t{&p,
                    lambda,
                    {Horoball(p.vertices[0], 1), Horoball(p.vertices[1], 1),
                     Horoball(p.vertices[2], 1), Horoball(p.vertices[3], 1)},
                    {},
                    {0, 0},
                    0,
                    0,
                    0};
  for (int v = 0; v < 4; ++v) t.vertex_ball[v] = lambda.ball_at(p.vertices[v]);

  for (int v = 0; v < 4; ++v) {
    for (int k = 0; k < 2; ++k) {
      const int w = p.vertex_walls[v][k];
      auto pts = horocycle_meet(t.vertex_ball[v], p.walls[w].shape);
      bool found = false;
      for (auto z : pts) {
        if (p.in_closure(z, 1e-9)) {
          t.horo_corners[v][k] = z;
          found = true;
          break;
        }
      }
      if (!found)
        throw numerical_error("horocyclic edge corner not found; horoball heights degenerate");
    }
  }

  // boundary samples of the truncated domain: wall clips and horocyclic arcs
  std::array<std::vector<std::complex<double>>, 8> edge_samples;  // 0..3 walls, 4..7 horo
  const int N = 48;
  for (int w = 0; w < 4; ++w) {
    // wall w runs between the corners of the horoballs at its two endpoint vertices
    std::vector<std::complex<double>> ends;
    for (int v = 0; v < 4; ++v)
      for (int k = 0; k < 2; ++k)
        if (p.vertex_walls[v][k] == w) ends.push_back(t.horo_corners[v][k]);
    if (ends.size() != 2) throw numerical_error("wall clip corners not resolved");
    const auto& s = p.walls[w].shape;
    for (int i = 0; i <= N; ++i) {
      const double u = double(i) / N;
      if (s.is_vertical) {
        const double y = ends[0].imag() + u * (ends[1].imag() - ends[0].imag());
        edge_samples[w].push_back({s.x0, y});
      } else {
        const double a0 = std::arg(ends[0] - std::complex<double>(s.center, 0));
        const double a1 = std::arg(ends[1] - std::complex<double>(s.center, 0));
        const double ang = a0 + u * (a1 - a0);
        edge_samples[w].push_back(std::complex<double>(s.center, 0) +
                                  s.radius * std::exp(std::complex<double>(0, ang)));
      }
    }
  }
  for (int v = 0; v < 4; ++v) {
    const auto& hb = t.vertex_ball[v];
    const auto c0 = t.horo_corners[v][0];
    const auto c1 = t.horo_corners[v][1];
    if (hb.base.inf) {
      for (int i = 0; i <= N; ++i) {
        const double u = double(i) / N;
        edge_samples[4 + v].push_back(
            {c0.real() + u * (c1.real() - c0.real()), hb.height});
      }
    } else {
      const double q = to_double(Rat(hb.base.c));
      const double rho = 0.5 * hb.height / (q * q);
      const std::complex<double> center(to_double(Rat(hb.base.a, hb.base.c)), rho);
      double a0 = std::arg(c0 - center);
      double a1 = std::arg(c1 - center);
      // take the arc through the top of the horoball (the one inside the polygon)
      const double top = M_PI / 2;
      auto norm = [](double x) { return std::remainder(x, 2 * M_PI); };
      if (!(std::min(a0, a1) <= top && top <= std::max(a0, a1))) {
        if (a0 < a1)
          a0 += 2 * M_PI;
        else
          a1 += 2 * M_PI;
      }
      (void)norm;
      for (int i = 0; i <= N; ++i) {
        const double u = double(i) / N;
        edge_samples[4 + v].push_back(center + rho * std::exp(std::complex<double>(0, a0 + u * (a1 - a0))));
      }
    }
  }

  // covering ball
  t.cover_center = p.interior_sample;
  double r = 0;
  for (const auto& es : edge_samples)
    for (auto z : es) r = std::max(r, hyp_distance(t.cover_center, z));
  t.cover_radius = r + 0.05;

  // minimal gap between non-adjacent truncated edges
  auto adjacent = [&](int e1, int e2) {
    if (e1 > e2) std::swap(e1, e2);
    if (e1 < 4 && e2 >= 4) {
      const int v = e2 - 4;
      return p.vertex_walls[v][0] == e1 || p.vertex_walls[v][1] == e1;
    }
    return false;  // wall-wall and horo-horo pairs never share a corner
  };
  double gap = 1e300;
  for (int e1 = 0; e1 < 8; ++e1)
    for (int e2 = e1 + 1; e2 < 8; ++e2) {
      if (adjacent(e1, e2)) continue;
      for (auto z1 : edge_samples[e1])
        for (auto z2 : edge_samples[e2]) gap = std::min(gap, hyp_distance(z1, z2));
    }
  t.min_edge_gap = gap;
  t.witness_min_len = 0.5 * gap;
  return t;
}

}  // namespace gcs
