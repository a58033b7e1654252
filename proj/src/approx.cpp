#include "gcs/approx.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "gcs/errors.hpp"

namespace gcs {

namespace {

int word_dist(const std::string& u, const std::string& v) {
  return static_cast<int>(word_mul(word_inverse(u), v).size());
}

bool edge_in_tileset(const SurfacePreset& p, const EdgeRef& e, const std::string& center, int r) {
  for (const auto& t : edge_tiles(p, e))
    if (word_dist(center, t) <= r) return true;
  return false;
}

EdgeRef translate_edge(const std::string& prefix, const EdgeRef& e) {
  return {word_mul(prefix, e.tile), e.kind};
}

}  // namespace

std::string RoundPath::serialize(const std::vector<EdgeRef>& edges) {
  std::ostringstream os;
  for (const auto& e : edges) os << e.tile << ":" << e.kind << ";";
  return os.str();
}

std::string RoundPath::canonical_key(const std::vector<EdgeRef>& edges) {
  std::vector<EdgeRef> rev(edges.rbegin(), edges.rend());
  return std::min(serialize(edges), serialize(rev));
}

const WeightRow* WeightTable::find(const std::string& key) const {
  auto it = index.find(key);
  return it == index.end() ? nullptr : &rows[it->second];
}

namespace {

struct BallPiece {
  std::vector<EdgeRef> edges;
  std::vector<std::complex<double>> pts;
  long long pos_lo = 0, pos_hi = 0;
};

// events of the translated geodesic t * geo restricted to the identity ball,
// with the horoball-dive cut rule applied
std::optional<BallPiece> ball_piece(const SurfacePreset& p, const RefinedTrace& rt,
                                    const GroupElement& t, int r) {
  struct Ev {
    EdgeRef edge;
    std::complex<double> at;
    long long pos;
    bool in_ball;
  };
  std::vector<Ev> evs;
  if (!rt.periodic) {
    for (const auto& e : rt.events) {
      EdgeRef te = translate_edge(t.word, e.edge);
      evs.push_back({te, t.m.apply(e.at), e.pos, edge_in_tileset(p, te, "", r)});
    }
  } else {
    int max_tile = 0;
    for (const auto& e : rt.events) max_tile = std::max<int>(max_tile, e.edge.tile.size());
    const int hol_len = std::max<int>(1, rt.holonomy.word.size());
    const int K = (r + static_cast<int>(t.word.size()) + max_tile) / hol_len + 2;
    std::vector<std::pair<long long, GroupElement>> blocks;
    GroupElement shift = t;
    for (int k = 0; k <= K; ++k) {
      blocks.emplace_back(k, shift);
      shift = p.mul(shift, rt.holonomy);
    }
    const GroupElement hinv = p.inverse(rt.holonomy);
    shift = p.mul(t, hinv);
    for (int k = 1; k <= K; ++k) {
      blocks.emplace_back(-k, shift);
      shift = p.mul(shift, hinv);
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [k, off] : blocks) {
      for (const auto& e : rt.events) {
        EdgeRef te = translate_edge(off.word, e.edge);
        evs.push_back(
            {te, off.m.apply(e.at), k * rt.path_len + e.pos, edge_in_tileset(p, te, "", r)});
      }
    }
  }
  int lo = -1, hi = -1;
  for (int i = 0; i < static_cast<int>(evs.size()); ++i) {
    if (!evs[i].in_ball) continue;
    if (lo < 0) lo = i;
    hi = i;
  }
  if (lo < 0) return std::nullopt;
  for (int i = lo; i <= hi; ++i)
    if (!evs[i].in_ball)
      throw numerical_error("in-ball crossings are not contiguous (trace inconsistency)");

  // cut between consecutive horocyclic crossings of distinct non-adjacent tiles
  std::vector<std::pair<int, int>> pieces;
  int start = lo;
  for (int i = lo; i < hi; ++i) {
    const auto& e1 = evs[i].edge;
    const auto& e2 = evs[i + 1].edge;
    if (e1.is_horocyclic() && e2.is_horocyclic() && e1.tile != e2.tile &&
        word_dist(e1.tile, e2.tile) > 1) {
      pieces.emplace_back(start, i);
      start = i + 1;
    }
  }
  pieces.emplace_back(start, hi);
  int best = 0;
  std::string best_key;
  for (int pi = 0; pi < static_cast<int>(pieces.size()); ++pi) {
    std::vector<EdgeRef> es;
    for (int i = pieces[pi].first; i <= pieces[pi].second; ++i) es.push_back(evs[i].edge);
    const std::string key = RoundPath::canonical_key(es);
    const int len1 = pieces[pi].second - pieces[pi].first;
    const int len0 = pieces[best].second - pieces[best].first;
    if (pi == 0 || len1 > len0 || (len1 == len0 && key < best_key)) {
      best = pi;
      best_key = key;
    }
  }
  BallPiece out;
  for (int i = pieces[best].first; i <= pieces[best].second; ++i) {
    out.edges.push_back(evs[i].edge);
    out.pts.push_back(evs[i].at);
  }
  out.pos_lo = evs[pieces[best].first].pos;
  out.pos_hi = evs[pieces[best].second].pos;
  return out;
}

// ball tiles the translated geodesic meets outside the horoballs within the
// position span of the kept piece
std::vector<std::string> piece_reach(const SurfacePreset& p, const RefinedTrace& rt,
                                     const GroupElement& t, int r, const BallPiece& piece) {
  std::set<std::string> reach;
  auto consider = [&](const std::string& word, long long pos) {
    if (pos < piece.pos_lo || pos > piece.pos_hi) return;
    if (static_cast<int>(word.size()) <= r) reach.insert(word);
  };
  if (!rt.periodic) {
    for (const auto& [w, pos] : rt.presence) consider(word_mul(t.word, w), pos);
  } else {
    const int n = std::max(1, rt.path_len);
    const long long kmin = piece.pos_lo / n - 2;
    const long long kmax = piece.pos_hi / n + 2;
    for (long long k = kmin; k <= kmax; ++k) {
      GroupElement off = t;
      const GroupElement pw = (k >= 0) ? rt.holonomy : p.inverse(rt.holonomy);
      for (long long j = 0; j < std::llabs(k); ++j) off = p.mul(off, pw);
      for (const auto& [w, pos] : rt.presence)
        consider(word_mul(off.word, w), k * rt.path_len + pos);
    }
  }
  for (const auto& e : piece.edges)
    if (static_cast<int>(e.tile.size()) <= r) reach.insert(e.tile);
  return {reach.begin(), reach.end()};
}

}  // namespace

WeightTable roundpaths_of_current(OrbitCache& cache, const TruncatedDomain& trunc,
                                  const DiscreteCurrent& mu, int r) {
  if (r < 1) throw precondition_error("round-path radius must be >= 1");
  const SurfacePreset& p = cache.preset();
  WeightTable wt;
  wt.preset = &p;
  wt.trunc = trunc;
  wt.radius = r;
  wt.mu = mu;
  for (int ai = 0; ai < static_cast<int>(mu.atoms.size()); ++ai) {
    const auto& row = mu.atoms[ai];
    const RefinedTrace rt = refined_trace(p, trunc, row.atom.geo);
    std::set<std::string> cands;
    for (const auto& [w, pos] : rt.presence) cands.insert(word_inverse(w));
    for (const auto& w : rt.owned_edge_tiles) cands.insert(word_inverse(w));
    std::set<std::string> seen_geos;
    for (const auto& cw : cands) {
      const GroupElement t = p.elem(cw);
      const Geodesic moved(t.m.apply(row.atom.geo.e1), t.m.apply(row.atom.geo.e2));
      if (!seen_geos.insert(moved.key()).second) continue;
      auto piece = ball_piece(p, rt, t, r);
      if (!piece) continue;
      const std::string key = RoundPath::canonical_key(piece->edges);
      auto reach = piece_reach(p, rt, t, r, *piece);
      auto it = wt.index.find(key);
      if (it == wt.index.end()) {
        WeightRow wr;
        wr.path.edges = piece->edges;
        wr.path.reach = reach;
        wr.path.key = key;
        wr.source_points = piece->pts;
        wt.index.emplace(key, static_cast<int>(wt.rows.size()));
        wt.rows.push_back(std::move(wr));
        it = wt.index.find(key);
      } else if (wt.rows[it->second].path.reach != reach) {
        throw numerical_error("round-path realizers disagree on reach data");
      }
      auto& wr = wt.rows[it->second];
      wr.weight += row.weight;
      wr.atom_counts[ai] += 1;
      wr.sources.push_back({ai, cw});
    }
  }
  return wt;
}

namespace {

bool edge_in_lens(const SurfacePreset& p, const EdgeRef& e, const std::string& c1,
                  const std::string& c2, int r) {
  for (const auto& t : edge_tiles(p, e))
    if (word_dist(c1, t) <= r && word_dist(c2, t) <= r) return true;
  return false;
}

std::vector<EdgeRef> lens_restrict(const SurfacePreset& p, const std::vector<EdgeRef>& edges,
                                   const std::string& c1, const std::string& c2, int r) {
  int lo = -1, hi = -1;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    if (!edge_in_lens(p, edges[i], c1, c2, r)) continue;
    if (lo < 0) lo = i;
    hi = i;
  }
  if (lo < 0) return {};
  for (int i = lo; i <= hi; ++i)
    if (!edge_in_lens(p, edges[i], c1, c2, r))
      throw numerical_error("lens restriction is not contiguous");
  return {edges.begin() + lo, edges.begin() + hi + 1};
}

bool reaches(const WeightRow& row, const std::string& tile) {
  return std::find(row.path.reach.begin(), row.path.reach.end(), tile) != row.path.reach.end();
}

}  // namespace

MatchReport check_matching(const WeightTable& wt) {
  const SurfacePreset& p = *wt.preset;
  MatchReport rep;
  for (char d : {'a', 'b'}) {
    const std::string dw(1, d);
    const std::string di(1, inv_letter(d));
    std::map<std::string, std::map<int, long long>> left, right;
    for (const auto& row : wt.rows) {
      if (reaches(row, dw)) {
        auto sub = lens_restrict(p, row.path.edges, "", dw, wt.radius);
        if (!sub.empty()) {
          auto& acc = left[RoundPath::canonical_key(sub)];
          for (const auto& [ai, c] : row.atom_counts) acc[ai] += c;
        }
      }
      if (reaches(row, di)) {
        auto sub = lens_restrict(p, row.path.edges, "", di, wt.radius);
        if (!sub.empty()) {
          std::vector<EdgeRef> moved;
          moved.reserve(sub.size());
          for (const auto& e : sub) moved.push_back(translate_edge(dw, e));
          auto& acc = right[RoundPath::canonical_key(moved)];
          for (const auto& [ai, c] : row.atom_counts) acc[ai] += c;
        }
      }
    }
    std::set<std::string> keys;
    for (const auto& kv : left) keys.insert(kv.first);
    for (const auto& kv : right) keys.insert(kv.first);
    rep.classes += static_cast<int>(keys.size());
    for (const auto& k : keys)
      if (left[k] != right[k]) {
        rep.exact = false;
        rep.violations.push_back(std::string(1, d) + "-restriction " + k);
      }
  }
  return rep;
}

DisjointCover select_disjoint_O(OrbitCache& cache, const WeightTable& wt, int r0) {
  const SurfacePreset& p = cache.preset();
  if (wt.radius < 2 * r0)
    throw precondition_error("select_disjoint_O needs r >= 2*r0 for the greedy certificate");
  std::vector<std::string> centers{""};
  {
    std::vector<std::string> frontier{""};
    for (int depth = 0; depth < r0; ++depth) {
      std::vector<std::string> next;
      for (const auto& w : frontier)
        for (char c : {'a', 'A', 'b', 'B'}) {
          const std::string nw = word_mul(w, std::string(1, c));
          if (static_cast<int>(nw.size()) == depth + 1) next.push_back(nw);
        }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      centers.insert(centers.end(), next.begin(), next.end());
      frontier = next;
    }
  }

  DisjointCover cover;
  cover.certified = true;
  std::set<std::pair<std::string, std::string>> seen;
  std::map<std::string, RefinedTrace> traces;
  for (const auto& wrow : wt.rows) {
    for (const auto& src : wrow.sources) {
      const auto& atom = wt.mu.atoms[src.atom_index].atom;
      auto tit = traces.find(atom.key());
      if (tit == traces.end())
        tit = traces.emplace(atom.key(), refined_trace(p, wt.trunc, atom.geo)).first;
      const RefinedTrace& rt = tit->second;
      for (const auto& c : centers) {
        const GroupElement tshift = p.elem(word_mul(word_inverse(c), src.translate));
        auto piece = ball_piece(p, rt, tshift, wt.radius);
        if (!piece) continue;
        auto reach = piece_reach(p, rt, tshift, wt.radius, *piece);
        if (std::find(reach.begin(), reach.end(), std::string()) == reach.end()) continue;
        const std::string key = RoundPath::canonical_key(piece->edges);
        if (seen.insert({c, key}).second) {
          int row = -1;
          auto it = wt.index.find(key);
          if (it != wt.index.end()) row = it->second;
          cover.entries.push_back({c, key, row});
        }
        break;  // greedy: keep the first center whose truncated tile is met
      }
    }
  }
  // no later entry's cylinder may meet an earlier center's truncated tile
  for (const auto& ei : cover.entries)
    for (const auto& ej : cover.entries) {
      if (ei.center >= ej.center || ej.row < 0) continue;
      const std::string rel = word_mul(word_inverse(ej.center), ei.center);
      if (reaches(wt.rows[ej.row], rel)) cover.certified = false;
    }
  return cover;
}

IntegerTable rationalize(const WeightTable& wt, double eps_hat, long long cap) {
  if (eps_hat < 0) throw precondition_error("eps_hat must be >= 0");
  const int na = static_cast<int>(wt.mu.atoms.size());
  IntegerTable out;
  double best_res = 1e300;
  long long best_m = 1;
  for (long long M = 1; M <= cap; ++M) {
    std::vector<long long> num(na);
    std::vector<double> err(na);
    bool exact = true;
    for (int i = 0; i < na; ++i) {
      const double c = wt.mu.atoms[i].weight;
      num[i] = std::llround(c * static_cast<double>(M));
      err[i] = std::abs(static_cast<double>(num[i]) / static_cast<double>(M) - c);
      if (err[i] != 0.0) exact = false;
    }
    double res = 0;
    for (const auto& row : wt.rows) {
      double e = 0;
      for (const auto& [ai, cnt] : row.atom_counts) e += err[ai] * static_cast<double>(cnt);
      res = std::max(res, e);
    }
    if (res < best_res) {
      best_res = res;
      best_m = M;
    }
    if (eps_hat == 0.0 ? exact : res < eps_hat) {
      out.M = M;
      out.max_residual = res;
      out.theta.assign(wt.rows.size(), 0);
      for (std::size_t ri = 0; ri < wt.rows.size(); ++ri) {
        long long v = 0;
        for (const auto& [ai, cnt] : wt.rows[ri].atom_counts) v += num[ai] * cnt;
        out.theta[ri] = v;
      }
      return out;
    }
  }
  std::ostringstream os;
  os << "rationalize: denominator sweep cap " << cap << " exceeded; best residual " << best_res
     << " at M = " << best_m;
  throw numerical_error(os.str());
}

ComponentGraph build_gamma(const WeightTable& wt, const IntegerTable& theta) {
  const SurfacePreset& p = *wt.preset;
  ComponentGraph g;
  std::vector<std::pair<int, int>> verts;  // (row, copy)
  std::vector<int> row_first(wt.rows.size(), -1);
  for (int ri = 0; ri < static_cast<int>(wt.rows.size()); ++ri) {
    row_first[ri] = static_cast<int>(verts.size());
    for (long long c = 0; c < theta.theta[ri]; ++c)
      verts.emplace_back(ri, static_cast<int>(c));
  }
  g.total_copies = static_cast<long long>(verts.size());

  struct Slot {
    int peer;
    char letter;
    int edge_id;
  };
  std::vector<std::vector<Slot>> adj(verts.size());
  int edge_id = 0;
  for (char d : {'a', 'b'}) {
    const std::string dw(1, d);
    const std::string di(1, inv_letter(d));
    std::map<std::string, std::vector<int>> left, right;
    for (int ri = 0; ri < static_cast<int>(wt.rows.size()); ++ri) {
      if (theta.theta[ri] == 0) continue;
      const auto& row = wt.rows[ri];
      if (reaches(row, dw)) {
        auto sub = lens_restrict(p, row.path.edges, "", dw, wt.radius);
        if (!sub.empty()) {
          auto& lst = left[RoundPath::canonical_key(sub)];
          for (long long c = 0; c < theta.theta[ri]; ++c)
            lst.push_back(row_first[ri] + static_cast<int>(c));
        }
      }
      if (reaches(row, di)) {
        auto sub = lens_restrict(p, row.path.edges, "", di, wt.radius);
        if (!sub.empty()) {
          std::vector<EdgeRef> moved;
          moved.reserve(sub.size());
          for (const auto& e : sub) moved.push_back(translate_edge(dw, e));
          auto& lst = right[RoundPath::canonical_key(moved)];
          for (long long c = 0; c < theta.theta[ri]; ++c)
            lst.push_back(row_first[ri] + static_cast<int>(c));
        }
      }
    }
    std::set<std::string> keys;
    for (const auto& kv : left) keys.insert(kv.first);
    for (const auto& kv : right) keys.insert(kv.first);
    for (const auto& key : keys) {
      auto& l = left[key];
      auto& r = right[key];
      if (l.size() != r.size())
        throw numerical_error("copy matching failed: theta violates the matching equations");
      for (std::size_t k = 0; k < l.size(); ++k) {
        adj[l[k]].push_back({r[k], d, edge_id});
        adj[r[k]].push_back({l[k], inv_letter(d), edge_id});
        ++edge_id;
      }
    }
  }

  for (const auto& a : adj) g.max_degree = std::max(g.max_degree, static_cast<int>(a.size()));
  if (g.max_degree > 2)
    throw numerical_error("copy graph vertex of degree > 2 (matching corrupted)");

  std::vector<char> visited(verts.size(), 0);
  const long long walk_cap = 2 * static_cast<long long>(verts.size()) + 4;

  auto walk = [&](int v0, int first_slot) {
    // steps of (vertex, offset); never re-traverses the edge it arrived by
    std::vector<std::pair<int, GroupElement>> steps;
    bool cycle = false;
    GroupElement off;
    int cur = v0, came = -1;
    long long count = 0;
    while (true) {
      const Slot* chosen = nullptr;
      if (came < 0) {
        if (first_slot < static_cast<int>(adj[cur].size())) chosen = &adj[cur][first_slot];
      } else {
        for (const auto& s : adj[cur])
          if (s.edge_id != came) {
            chosen = &s;
            break;
          }
      }
      if (!chosen) break;
      off = p.mul(off, chosen->letter);
      came = chosen->edge_id;
      cur = chosen->peer;
      if (cur == v0) {
        cycle = true;
        break;
      }
      steps.emplace_back(cur, off);
      if (++count > walk_cap)
        throw numerical_error("component walk exceeded its bound (half-line?)");
    }
    return std::make_tuple(steps, cycle, off);
  };

  for (int v0 = 0; v0 < static_cast<int>(verts.size()); ++v0) {
    if (visited[v0]) continue;
    ComponentGraph::Component comp;
    auto [fwd, cycle, hol] = walk(v0, 0);
    visited[v0] = 1;
    for (const auto& [v, off] : fwd) visited[v] = 1;
    comp.path.emplace_back(verts[v0].first, GroupElement{});
    for (const auto& [v, off] : fwd) comp.path.emplace_back(verts[v].first, off);
    if (cycle) {
      comp.periodic = true;
      comp.holonomy = hol;
    } else {
      auto [back, cycle2, hol2] = walk(v0, 1);
      (void)hol2;
      if (cycle2) throw numerical_error("one-sided cycle in the copy graph");
      for (const auto& [v, off] : back) visited[v] = 1;
      std::vector<std::pair<int, GroupElement>> path;
      for (auto it = back.rbegin(); it != back.rend(); ++it)
        path.emplace_back(verts[it->first].first, it->second);
      for (const auto& q : comp.path) path.push_back(q);
      if (!back.empty()) {
        const GroupElement base = p.inverse(path.front().second);
        for (auto& q : path) q.second = p.mul(base, q.second);
      }
      comp.path = std::move(path);
    }

    // merge the walk's round-paths into one edge sequence with witness points
    auto edges_of = [&](std::size_t i) {
      std::vector<EdgeRef> es;
      for (const auto& e : wt.rows[comp.path[i].first].path.edges)
        es.push_back(translate_edge(comp.path[i].second.word, e));
      return es;
    };
    auto points_of = [&](std::size_t i) {
      std::vector<std::complex<double>> ps;
      for (const auto& q : wt.rows[comp.path[i].first].source_points)
        ps.push_back(comp.path[i].second.m.apply(q));
      return ps;
    };
    comp.edges = edges_of(0);
    comp.points = points_of(0);
    for (std::size_t i = 1; i < comp.path.size(); ++i) {
      auto es = edges_of(i);
      auto ps = points_of(i);
      const std::string c1 = comp.path[i - 1].second.word;
      const std::string c2 = comp.path[i].second.word;
      int mhi = static_cast<int>(comp.edges.size()) - 1;
      if (!edge_in_lens(p, comp.edges[mhi], c1, c2, wt.radius))
        throw numerical_error("component merge: no overlap at the junction");
      int mlo = mhi;
      while (mlo > 0 && edge_in_lens(p, comp.edges[mlo - 1], c1, c2, wt.radius)) --mlo;
      auto lens_run = [&](const std::vector<EdgeRef>& v) {
        int lo = -1, hi = -1;
        for (int x = 0; x < static_cast<int>(v.size()); ++x) {
          if (!edge_in_lens(p, v[x], c1, c2, wt.radius)) continue;
          if (lo < 0) lo = x;
          hi = x;
        }
        return std::make_pair(lo, hi);
      };
      auto try_match = [&]() {
        auto [nlo, nhi] = lens_run(es);
        if (nlo != 0) return -1;
        const int ov = nhi - nlo + 1;
        if (mhi - mlo + 1 != ov) return -1;
        for (int x = 0; x < ov; ++x)
          if (!(comp.edges[mlo + x] == es[x])) return -1;
        return nhi;
      };
      int nhi = try_match();
      if (nhi < 0) {
        std::reverse(es.begin(), es.end());
        std::reverse(ps.begin(), ps.end());
        nhi = try_match();
        if (nhi < 0) throw numerical_error("component merge: restrictions disagree");
      }
      for (int x = nhi + 1; x < static_cast<int>(es.size()); ++x) {
        comp.edges.push_back(es[x]);
        comp.points.push_back(ps[x]);
      }
    }
    g.components.push_back(std::move(comp));
  }
  return g;
}

namespace {

std::complex<double> tangent_at(const Geodesic& g, std::complex<double> z) {
  const auto s = g.shape();
  if (s.is_vertical) return {0.0, 1.0};
  const std::complex<double> rad = z - std::complex<double>(s.center, 0.0);
  return std::complex<double>(0, 1) * rad / std::abs(rad);
}

double acute_angle(std::complex<double> t1, std::complex<double> t2) {
  const double c = std::abs(t1.real() * t2.real() + t1.imag() * t2.imag());
  return std::acos(std::min(1.0, c));
}

Geodesic::Shape chord_shape(std::complex<double> s, std::complex<double> t) {
  Geodesic::Shape sh{};
  if (std::abs(s.real() - t.real()) < 1e-14) {
    sh.is_vertical = true;
    sh.x0 = s.real();
    return sh;
  }
  sh.is_vertical = false;
  sh.center = (std::norm(t) - std::norm(s)) / (2.0 * (t.real() - s.real()));
  sh.radius = std::abs(s - std::complex<double>(sh.center, 0.0));
  return sh;
}

std::complex<double> shape_tangent(const Geodesic::Shape& s, std::complex<double> z) {
  if (s.is_vertical) return {0.0, 1.0};
  const std::complex<double> rad = z - std::complex<double>(s.center, 0.0);
  return std::complex<double>(0, 1) * rad / std::abs(rad);
}

}  // namespace

AssembledLine assemble(const WeightTable& wt, const ComponentGraph::Component& comp) {
  const SurfacePreset& p = *wt.preset;
  AssembledLine out;
  out.periodic = comp.periodic;
  if (comp.periodic) {
    out.holonomy = comp.holonomy;
    auto fp = fixed_points(comp.holonomy.m);
    if (fp.kind != FixedKind::hyperbolic)
      throw numerical_error("assembled holonomy is parabolic: invalid matching");
    out.limit = Geodesic(fp.p1, fp.p2);
  } else {
    const EdgeRef& e0 = comp.edges.front();
    const EdgeRef& e1 = comp.edges.back();
    if (!e0.is_horocyclic() || !e1.is_horocyclic())
      throw numerical_error("finite component does not end on horocyclic edges");
    const BoundaryPoint q0 = p.elem(e0.tile).m.apply(p.vertices[e0.vertex()]);
    const BoundaryPoint q1 = p.elem(e1.tile).m.apply(p.vertices[e1.vertex()]);
    out.limit = Geodesic(q0, q1);
    out.horo_gap = hyp_distance(comp.points.front(), comp.points.back());
  }

  // realizing geodesic per step; joints appear where consecutive realizers differ
  std::vector<Geodesic> realizers;
  for (const auto& [row, off] : comp.path) {
    const auto& src = wt.rows[row].sources.front();
    const auto& atom_geo = wt.mu.atoms[src.atom_index].atom.geo;
    const GroupElement mover = p.mul(off, p.elem(src.translate));
    realizers.emplace_back(mover.m.apply(atom_geo.e1), mover.m.apply(atom_geo.e2));
  }
  std::vector<std::complex<double>> nodes;
  for (std::size_t i = 1; i < realizers.size(); ++i) {
    const Geodesic& x = realizers[i - 1];
    const Geodesic& y = realizers[i];
    if (x == y) continue;
    if (geodesics_cross(x, y) == CrossKind::cross) {
      const auto z = crossing_point(x, y);
      const double bend = M_PI - acute_angle(tangent_at(x, z), tangent_at(y, z));
      out.min_angle = std::min(out.min_angle, bend);
      nodes.push_back(z);
      ++out.joints;
    } else {
      // bridge between anchor points on the two realizers near the junction
      const std::string c1 = comp.path[i - 1].second.word;
      const std::string c2 = comp.path[i].second.word;
      std::complex<double> s{0, 1}, t{0, 1};
      bool got_s = false;
      for (std::size_t x = 0; x < comp.edges.size(); ++x) {
        if (edge_in_lens(p, comp.edges[x], c1, c2, wt.radius)) {
          if (!got_s) {
            s = comp.points[x];
            got_s = true;
          }
          t = comp.points[x];
        }
      }
      const auto bridge = chord_shape(s, t);
      const double bend_s = M_PI - acute_angle(tangent_at(x, s), shape_tangent(bridge, s));
      const double bend_t = M_PI - acute_angle(shape_tangent(bridge, t), tangent_at(y, t));
      out.min_angle = std::min(out.min_angle, std::min(bend_s, bend_t));
      out.min_piece = std::min(out.min_piece, hyp_distance(s, t));
      nodes.push_back(s);
      nodes.push_back(t);
      out.joints += 2;
    }
  }
  for (std::size_t i = 1; i < nodes.size(); ++i)
    out.min_piece = std::min(out.min_piece, hyp_distance(nodes[i - 1], nodes[i]));
  return out;
}

std::pair<DiscreteCurrent, DensifyReport> densify(OrbitCache& cache, const DiscreteCurrent& mu,
                                                  int r, HorocycleParameter lambda,
                                                  double eps_hat,
                                                  const std::vector<PairBox>* suite) {
  const SurfacePreset& p = cache.preset();
  DensifyReport rep;
  rep.radius = r;
  rep.eps_hat = eps_hat;

  DiscreteCurrent input;
  for (const auto& row : mu.atoms)
    if (row.weight >= 1e-9) input.atoms.push_back(row);

  DiscreteCurrent nu;
  if (input.empty()) {
    rep.matching_exact = true;
    rep.certificates_ok = true;
    return {nu, rep};
  }

  const TruncatedDomain trunc = make_truncated(p, lambda);
  WeightTable wt = roundpaths_of_current(cache, trunc, input, r);
  const MatchReport match = check_matching(wt);
  rep.matching_exact = match.exact;
  if (!match.exact)
    throw numerical_error("extracted weight table violates the matching equations");

  const DisjointCover cover = select_disjoint_O(cache, wt, std::max(1, r / 2));
  rep.cover_certified = cover.certified;

  const IntegerTable it = rationalize(wt, eps_hat);
  rep.M = it.M;
  rep.max_weight_residual = it.max_residual;

  const ComponentGraph graph = build_gamma(wt, it);
  rep.max_degree = graph.max_degree;
  rep.half_line_free = true;  // build_gamma throws when a walk fails to close or end

  for (const auto& comp : graph.components) {
    const AssembledLine line = assemble(wt, comp);
    rep.min_angle = std::min(rep.min_angle, line.min_angle);
    rep.min_piece = std::min(rep.min_piece, line.min_piece);
    if (!line.periodic) rep.min_horo_gap = std::min(rep.min_horo_gap, line.horo_gap);
    if (line.periodic)
      nu.add(1.0 / static_cast<double>(it.M), eta_closed(p, line.holonomy.word));
    else
      nu.add(1.0 / static_cast<double>(it.M), eta_cusp_pair(p, line.limit.e1, line.limit.e2));
  }

  rep.certificates_ok =
      rep.min_angle > M_PI / 2 + 0.01 && rep.min_piece > trunc.witness_min_len &&
      (rep.min_horo_gap >= 1e300 || rep.min_horo_gap > trunc.witness_min_len);

  for (std::size_t ri = 0; ri < wt.rows.size(); ++ri) {
    DensifyReport::PathRow pr;
    pr.key = wt.rows[ri].path.key;
    pr.mu_bar = wt.rows[ri].weight;
    pr.theta = it.theta[ri];
    for (const auto& e : cover.entries)
      if (e.row == static_cast<int>(ri)) pr.in_cover = true;
    rep.paths.push_back(pr);
  }

  std::vector<PairBox> local_suite;
  if (!suite) {
    local_suite = default_box_suite(p);
    suite = &local_suite;
  }
  for (const auto& box : *suite) {
    DensifyReport::BoxRow br;
    br.name = box.name;
    br.mu_value = evaluate_box(cache, input, box);
    br.nu_value = nu.empty() ? 0.0 : evaluate_box(cache, nu, box);
    rep.boxes.push_back(br);
    rep.max_box_discrepancy =
        std::max(rep.max_box_discrepancy, std::abs(br.mu_value - br.nu_value));
  }
  return {nu, rep};
}

}  // namespace gcs
