#include "origamic/crease_pattern.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace origamic {

char assignment_letter(CreaseAssignment a) {
  switch (a) {
    case CreaseAssignment::kMountain: return 'M';
    case CreaseAssignment::kValley: return 'V';
    case CreaseAssignment::kBorder: return 'B';
    case CreaseAssignment::kUnassigned: return 'U';
  }
  return '?';
}

namespace {

std::string describe(PatternErrorCode code, const std::string& detail) {
  const char* name = "";
  switch (code) {
    case PatternErrorCode::kCrossingCreases: name = "CrossingCreases"; break;
    case PatternErrorCode::kDanglingCrease: name = "DanglingCrease"; break;
    case PatternErrorCode::kBorderVertex: name = "BorderVertex"; break;
    case PatternErrorCode::kUnassignedIncidentCrease: name = "UnassignedIncidentCrease"; break;
    case PatternErrorCode::kConflictingAssignment: name = "ConflictingAssignment"; break;
    case PatternErrorCode::kIllegalOverlap: name = "IllegalOverlap"; break;
    case PatternErrorCode::kDisconnectedPattern: name = "DisconnectedPattern"; break;
    case PatternErrorCode::kEulerCheckFailed: name = "EulerCheckFailed"; break;
    case PatternErrorCode::kOffGridAngle: name = "OffGridAngle"; break;
  }
  return std::string(name) + ": " + detail;
}

[[noreturn]] void fail(PatternErrorCode code, const std::string& detail) {
  throw PatternError(code, describe(code, detail));
}

// Angular order of direction vectors around a vertex, counterclockwise from
// the +x axis. Exact.
bool angle_less(const ExactPoint& u, const ExactPoint& v) {
  auto half = [](const ExactPoint& d) {
    int sy = d.y.sign();
    if (sy > 0) return 0;
    if (sy < 0) return 1;
    return d.x.sign() > 0 ? 0 : 1;
  };
  int hu = half(u), hv = half(v);
  if (hu != hv) return hu < hv;
  return cross(u, v).sign() > 0;
}

struct Bbox {
  double xlo, xhi, ylo, yhi;
  bool overlaps(const Bbox& o) const {
    return xlo <= o.xhi && o.xlo <= xhi && ylo <= o.yhi && o.ylo <= yhi;
  }
};

Bbox segment_bbox(const ExactPoint& a, const ExactPoint& b) {
  // Padded so that double rounding can never hide a true intersection.
  const double pad = 1e-6;
  double ax = a.x.to_double(), ay = a.y.to_double();
  double bx = b.x.to_double(), by = b.y.to_double();
  return {std::min(ax, bx) - pad, std::max(ax, bx) + pad,
          std::min(ay, by) - pad, std::max(ay, by) + pad};
}

}  // namespace

std::vector<ExactPoint> CreasePattern::face_polygon(int f) const {
  std::vector<ExactPoint> poly;
  poly.reserve(faces_[f].vertices.size());
  for (int v : faces_[f].vertices) poly.push_back(vertices_[v]);
  return poly;
}

int CreasePattern::find_vertex(const ExactPoint& p) const {
  for (size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] == p) return static_cast<int>(i);
  }
  return -1;
}

int CreasePattern::find_crease(int v1, int v2) const {
  for (size_t i = 0; i < creases_.size(); ++i) {
    const Crease& c = creases_[i];
    if ((c.v1 == v1 && c.v2 == v2) || (c.v1 == v2 && c.v2 == v1)) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

CreasePattern CreasePattern::with_assignment(int c, CreaseAssignment a) const {
  CreasePattern copy = *this;
  copy.creases_[c].assign = a;
  return copy;
}

void CreasePattern::derive_faces() {
  int nv = static_cast<int>(vertices_.size());
  int ne = static_cast<int>(creases_.size());

  // Sorted incidence lists.
  std::vector<std::vector<std::pair<int, int>>> adj(nv);  // (neighbor, crease)
  for (int c = 0; c < ne; ++c) {
    adj[creases_[c].v1].push_back({creases_[c].v2, c});
    adj[creases_[c].v2].push_back({creases_[c].v1, c});
  }
  for (int v = 0; v < nv; ++v) {
    if (adj[v].empty()) fail(PatternErrorCode::kDanglingCrease, "isolated vertex " + std::to_string(v));
    if (adj[v].size() == 1) fail(PatternErrorCode::kDanglingCrease, "degree-1 vertex " + std::to_string(v));
    std::sort(adj[v].begin(), adj[v].end(), [&](const auto& a, const auto& b) {
      return angle_less(vertices_[a.first] - vertices_[v], vertices_[b.first] - vertices_[v]);
    });
  }

  // Connectivity.
  {
    std::vector<bool> seen(nv, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int count = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (auto& [w, c] : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          q.push(w);
        }
      }
    }
    if (count != nv) fail(PatternErrorCode::kDisconnectedPattern, "crease graph is not connected");
  }

  // Face tracing: next directed edge after (u -> v) leaves v toward the
  // clockwise-next neighbor after u, which walks each face with its interior
  // on the left. Bounded faces come out counterclockwise.
  auto edge_id = [&](int c, bool from_v1) { return 2 * c + (from_v1 ? 0 : 1); };
  std::vector<bool> visited(2 * ne, false);
  crease_faces_.assign(ne, {-1, -1});
  faces_.clear();
  int outer_faces = 0;

  for (int c0 = 0; c0 < ne; ++c0) {
    for (int dir0 = 0; dir0 < 2; ++dir0) {
      int start = edge_id(c0, dir0 == 0);
      if (visited[start]) continue;
      Face face;
      int c = c0;
      int u = dir0 == 0 ? creases_[c0].v1 : creases_[c0].v2;
      int v = dir0 == 0 ? creases_[c0].v2 : creases_[c0].v1;
      int guard = 0;
      do {
        visited[edge_id(c, u == creases_[c].v1)] = true;
        face.vertices.push_back(u);
        face.creases.push_back(c);
        const auto& ring = adj[v];
        int deg = static_cast<int>(ring.size());
        int idx = -1;
        for (int i = 0; i < deg; ++i) {
          if (ring[i].first == u && ring[i].second == c) { idx = i; break; }
        }
        auto [w, cw] = ring[(idx + deg - 1) % deg];
        u = v;
        v = w;
        c = cw;
        if (++guard > 4 * ne + 4) {
          fail(PatternErrorCode::kEulerCheckFailed, "face walk did not close");
        }
      } while (edge_id(c, u == creases_[c].v1) != start);

      std::vector<ExactPoint> poly;
      for (int vv : face.vertices) poly.push_back(vertices_[vv]);
      int area_sign = polygon_area2(poly).sign();
      if (area_sign > 0) {
        int f = static_cast<int>(faces_.size());
        for (size_t i = 0; i < face.creases.size(); ++i) {
          int cc = face.creases[i];
          bool along = creases_[cc].v1 == face.vertices[i];
          crease_faces_[cc][along ? 0 : 1] = f;
        }
        faces_.push_back(std::move(face));
      } else {
        ++outer_faces;
      }
    }
  }

  if (outer_faces != 1) {
    fail(PatternErrorCode::kEulerCheckFailed,
         "expected exactly one outer face, found " + std::to_string(outer_faces));
  }
  // V - E + F = 2 counting the outer face.
  long long euler = nv - ne + static_cast<long long>(faces_.size()) + 1;
  if (euler != 2) {
    fail(PatternErrorCode::kEulerCheckFailed,
         "V-E+F = " + std::to_string(euler) + ", expected 2");
  }

  border_vertex_.assign(nv, false);
  for (const Crease& cr : creases_) {
    if (cr.assign == CreaseAssignment::kBorder) {
      border_vertex_[cr.v1] = true;
      border_vertex_[cr.v2] = true;
    }
  }
}

CreasePattern build_pattern(std::vector<ExactPoint> vertices,
                            std::vector<Crease> creases) {
  int nv = static_cast<int>(vertices.size());
  for (int i = 0; i < nv; ++i) {
    for (int j = i + 1; j < nv; ++j) {
      if (vertices[i] == vertices[j]) {
        fail(PatternErrorCode::kDanglingCrease,
             "duplicate vertex coordinates at indices " + std::to_string(i) + "," + std::to_string(j));
      }
    }
  }
  for (const Crease& c : creases) {
    if (c.v1 < 0 || c.v1 >= nv || c.v2 < 0 || c.v2 >= nv) {
      fail(PatternErrorCode::kDanglingCrease, "crease endpoint is not a vertex");
    }
    if (c.v1 == c.v2) fail(PatternErrorCode::kDanglingCrease, "zero-length crease");
  }

  int ne = static_cast<int>(creases.size());
  std::vector<Bbox> boxes;
  boxes.reserve(ne);
  for (const Crease& c : creases) {
    boxes.push_back(segment_bbox(vertices[c.v1], vertices[c.v2]));
  }

  for (int i = 0; i < ne; ++i) {
    for (int j = i + 1; j < ne; ++j) {
      if (!boxes[i].overlaps(boxes[j])) continue;
      const Crease &a = creases[i], &b = creases[j];
      bool share = a.v1 == b.v1 || a.v1 == b.v2 || a.v2 == b.v1 || a.v2 == b.v2;
      SegmentRelation rel = classify_segments(vertices[a.v1], vertices[a.v2],
                                              vertices[b.v1], vertices[b.v2]);
      switch (rel) {
        case SegmentRelation::kDisjoint:
          break;
        case SegmentRelation::kCrossing:
          fail(PatternErrorCode::kCrossingCreases,
               "creases " + std::to_string(i) + " and " + std::to_string(j) + " cross");
        case SegmentRelation::kOverlapping: {
          bool identical = (a.v1 == b.v1 && a.v2 == b.v2) || (a.v1 == b.v2 && a.v2 == b.v1);
          if (identical) break;  // reported as duplicate below
          fail(PatternErrorCode::kIllegalOverlap,
               "creases " + std::to_string(i) + " and " + std::to_string(j) + " overlap collinearly");
        }
        case SegmentRelation::kTouching:
          if (!share) {
            fail(PatternErrorCode::kCrossingCreases,
                 "creases " + std::to_string(i) + " and " + std::to_string(j) +
                     " touch away from a shared vertex");
          }
          break;
      }
      if ((a.v1 == b.v1 && a.v2 == b.v2) || (a.v1 == b.v2 && a.v2 == b.v1)) {
        fail(PatternErrorCode::kIllegalOverlap, "duplicate crease segment");
      }
    }
  }

  // A vertex sitting in the interior of some crease is a T-junction: the
  // crease should have been subdivided there.
  for (int v = 0; v < nv; ++v) {
    for (int c = 0; c < ne; ++c) {
      if (creases[c].v1 == v || creases[c].v2 == v) continue;
      if (on_segment(vertices[v], vertices[creases[c].v1], vertices[creases[c].v2])) {
        fail(PatternErrorCode::kCrossingCreases,
             "vertex " + std::to_string(v) + " lies inside crease " + std::to_string(c));
      }
    }
  }

  CreasePattern p;
  p.vertices_ = std::move(vertices);
  p.creases_ = std::move(creases);
  p.derive_faces();
  return p;
}

namespace {

// Incident crease directions at v, each snapped to the 30-degree grid.
std::vector<std::pair<int, int>> grid_star(const CreasePattern& p, int v) {
  std::vector<std::pair<int, int>> star;  // (grid direction index, crease)
  for (int c = 0; c < static_cast<int>(p.creases().size()); ++c) {
    const Crease& cr = p.crease(c);
    int other;
    if (cr.v1 == v) other = cr.v2;
    else if (cr.v2 == v) other = cr.v1;
    else continue;
    ExactPoint d = p.vertex(other) - p.vertex(v);
    int found = -1;
    for (int k = 0; k < 12; ++k) {
      ExactPoint u = Direction(k).unit();
      if (cross(u, d).sign() == 0 && dot(u, d).sign() > 0) { found = k; break; }
    }
    if (found < 0) {
      fail(PatternErrorCode::kOffGridAngle,
           "crease at vertex " + std::to_string(v) + " leaves the 30-degree grid");
    }
    star.push_back({found, c});
  }
  std::sort(star.begin(), star.end());
  return star;
}

}  // namespace

ExactScalar kawasaki_residual(const CreasePattern& p, int vertex) {
  if (p.vertex_on_border(vertex)) {
    fail(PatternErrorCode::kBorderVertex,
         "kawasaki_residual: vertex " + std::to_string(vertex) + " is on the border");
  }
  auto star = grid_star(p, vertex);
  int n = static_cast<int>(star.size());
  long long sum = 0;
  for (int i = 0; i < n; ++i) {
    int a0 = star[i].first * 30;
    int a1 = (i + 1 < n) ? star[i + 1].first * 30 : star[0].first * 30 + 360;
    long long sector = a1 - a0;
    sum += (i % 2 == 0) ? sector : -sector;
  }
  if (n % 2 != 0) return ExactScalar(Rational(1));  // odd degree can never fold flat
  return ExactScalar(Rational(sum));
}

int maekawa_delta(const CreasePattern& p, int vertex) {
  if (p.vertex_on_border(vertex)) {
    fail(PatternErrorCode::kBorderVertex,
         "maekawa_delta: vertex " + std::to_string(vertex) + " is on the border");
  }
  int m = 0, v = 0;
  for (const Crease& cr : p.creases()) {
    if (cr.v1 != vertex && cr.v2 != vertex) continue;
    switch (cr.assign) {
      case CreaseAssignment::kMountain: ++m; break;
      case CreaseAssignment::kValley: ++v; break;
      default:
        fail(PatternErrorCode::kUnassignedIncidentCrease,
             "maekawa_delta: unassigned crease at vertex " + std::to_string(vertex));
    }
  }
  return m - v;
}

CreasePattern merge(const std::vector<CreasePattern>& patterns,
                    const std::vector<Isometry>& poses) {
  if (patterns.size() != poses.size()) {
    throw std::invalid_argument("merge: patterns and poses size mismatch");
  }
  std::vector<ExactPoint> verts;
  std::map<ExactPoint, int, ExactPoint::KeyLess> vert_index;
  auto intern = [&](const ExactPoint& pt) {
    auto it = vert_index.find(pt);
    if (it != vert_index.end()) return it->second;
    int id = static_cast<int>(verts.size());
    verts.push_back(pt);
    vert_index.emplace(pt, id);
    return id;
  };

  std::vector<Crease> creases;
  std::map<std::pair<int, int>, int> crease_index;
  for (size_t pi = 0; pi < patterns.size(); ++pi) {
    const CreasePattern& p = patterns[pi];
    std::vector<int> remap(p.vertices().size());
    for (size_t v = 0; v < p.vertices().size(); ++v) {
      remap[v] = intern(poses[pi].apply(p.vertex(static_cast<int>(v))));
    }
    for (const Crease& c : p.creases()) {
      int a = remap[c.v1], b = remap[c.v2];
      std::pair<int, int> key = {std::min(a, b), std::max(a, b)};
      auto it = crease_index.find(key);
      if (it == crease_index.end()) {
        crease_index.emplace(key, static_cast<int>(creases.size()));
        creases.push_back({a, b, c.assign, c.role});
      } else {
        Crease& prev = creases[it->second];
        if (prev.assign != c.assign) {
          fail(PatternErrorCode::kConflictingAssignment,
               "segment assigned " + std::string(1, assignment_letter(prev.assign)) +
                   " and " + std::string(1, assignment_letter(c.assign)) +
                   " by different fragments");
        }
        if (c.role == CreaseRole::kTracked) prev.role = CreaseRole::kTracked;
      }
    }
  }
  return build_pattern(std::move(verts), std::move(creases));
}

std::vector<int> interior_vertices(const CreasePattern& p) {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(p.vertices().size()); ++v) {
    if (p.is_interior_vertex(v)) out.push_back(v);
  }
  return out;
}

}  // namespace origamic
