// Crease-pattern data model: a planar straight-line graph of creases with
// mountain/valley/border assignments, derived faces, and the local
// flat-foldability checks (Kawasaki, Maekawa).

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "origamic/geometry.hpp"

namespace origamic {

enum class CreaseAssignment : uint8_t { kMountain, kValley, kBorder, kUnassigned };
enum class CreaseRole : uint8_t { kTracked, kIntermediate, kExtraneous };

char assignment_letter(CreaseAssignment a);  // 'M', 'V', 'B', 'U'

enum class PatternErrorCode {
  kCrossingCreases,
  kDanglingCrease,
  kBorderVertex,
  kUnassignedIncidentCrease,
  kConflictingAssignment,
  kIllegalOverlap,
  kDisconnectedPattern,
  kEulerCheckFailed,
  kOffGridAngle,
};

class PatternError : public std::runtime_error {
 public:
  PatternError(PatternErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  PatternErrorCode code() const { return code_; }

 private:
  PatternErrorCode code_;
};

struct Crease {
  int v1 = -1, v2 = -1;
  CreaseAssignment assign = CreaseAssignment::kUnassigned;
  CreaseRole role = CreaseRole::kIntermediate;
};

struct Face {
  std::vector<int> vertices;  // counterclockwise loop
  std::vector<int> creases;   // creases[i] joins vertices[i] -> vertices[i+1]
};

class CreasePattern {
 public:
  CreasePattern() = default;

  const std::vector<ExactPoint>& vertices() const { return vertices_; }
  const std::vector<Crease>& creases() const { return creases_; }
  const std::vector<Face>& faces() const { return faces_; }

  const ExactPoint& vertex(int i) const { return vertices_[i]; }
  const Crease& crease(int i) const { return creases_[i]; }

  bool vertex_on_border(int v) const { return border_vertex_[v]; }
  bool is_interior_vertex(int v) const { return !border_vertex_[v]; }

  // Face indices to the left/right of crease c oriented v1->v2; -1 = outer.
  int face_left_of(int c) const { return crease_faces_[c][0]; }
  int face_right_of(int c) const { return crease_faces_[c][1]; }

  std::vector<ExactPoint> face_polygon(int f) const;

  int find_vertex(const ExactPoint& p) const;           // -1 if absent
  int find_crease(int v1, int v2) const;                // unordered; -1 if absent

  CreasePattern with_assignment(int c, CreaseAssignment a) const;

  friend CreasePattern build_pattern(std::vector<ExactPoint> vertices,
                                     std::vector<Crease> creases);

 private:
  std::vector<ExactPoint> vertices_;
  std::vector<Crease> creases_;
  std::vector<Face> faces_;
  std::vector<bool> border_vertex_;
  std::vector<std::array<int, 2>> crease_faces_;

  void derive_faces();
};

// Validates the planar straight-line graph and computes faces eagerly.
// Throws PatternError on crossing creases, dangling endpoints, duplicate
// segments, disconnected patterns, or an Euler-characteristic mismatch.
CreasePattern build_pattern(std::vector<ExactPoint> vertices,
                            std::vector<Crease> creases);

// Signed alternating sum of the sector angles around an interior vertex, in
// degrees. Zero is necessary for local flat foldability. All creases in this
// toolchain lie on the 30-degree grid, which keeps the sum an exact integer.
ExactScalar kawasaki_residual(const CreasePattern& p, int vertex);

// (#mountain - #valley) over creases incident to an interior vertex; must be
// +2 or -2 for flat foldability. Requires all incident creases assigned.
int maekawa_delta(const CreasePattern& p, int vertex);

// Composes posed copies of the given patterns into one pattern, deduplicating
// vertices by exact equality and identical segments by matching assignment.
CreasePattern merge(const std::vector<CreasePattern>& patterns,
                    const std::vector<Isometry>& poses);

// Convenience: creases of every assignment except border.
std::vector<int> interior_vertices(const CreasePattern& p);

}  // namespace origamic
