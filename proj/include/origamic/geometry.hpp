// Exact planar geometry over the field Q[sqrt(3)].
//
// All coordinates in this project live in Q[sqrt(3)] = { a + b*sqrt(3) },
// which is closed under rotation by multiples of 30 degrees. Equality is
// exact; there are no tolerances anywhere in the geometric core.

#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace origamic {

using Rational = mpq_class;

// a + b*sqrt(3), with a, b arbitrary-precision rationals.
class ExactScalar {
 public:
  ExactScalar() : a_(0), b_(0) {}
  ExactScalar(int v) : a_(v), b_(0) {}                     // NOLINT(implicit)
  ExactScalar(const Rational& v) : a_(v), b_(0) {}         // NOLINT(implicit)
  ExactScalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }

  static ExactScalar sqrt3() { return ExactScalar(0, 1); }
  static ExactScalar from_fraction(long num, long den) {
    return ExactScalar(Rational(num, den));
  }

  const Rational& rat_part() const { return a_; }
  const Rational& root_part() const { return b_; }

  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  ExactScalar operator-() const { return ExactScalar(-a_, -b_); }
  ExactScalar operator+(const ExactScalar& o) const {
    return ExactScalar(a_ + o.a_, b_ + o.b_);
  }
  ExactScalar operator-(const ExactScalar& o) const {
    return ExactScalar(a_ - o.a_, b_ - o.b_);
  }
  ExactScalar operator*(const ExactScalar& o) const {
    return ExactScalar(a_ * o.a_ + 3 * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
  }
  ExactScalar operator/(const ExactScalar& o) const;

  ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
  ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
  ExactScalar& operator/=(const ExactScalar& o) { return *this = *this / o; }

  bool operator==(const ExactScalar& o) const {
    return a_ == o.a_ && b_ == o.b_;
  }
  bool operator!=(const ExactScalar& o) const { return !(*this == o); }

  // Sign of a + b*sqrt(3), computed exactly.
  int sign() const;

  bool operator<(const ExactScalar& o) const { return (*this - o).sign() < 0; }
  bool operator>(const ExactScalar& o) const { return (*this - o).sign() > 0; }
  bool operator<=(const ExactScalar& o) const { return (*this - o).sign() <= 0; }
  bool operator>=(const ExactScalar& o) const { return (*this - o).sign() >= 0; }

  ExactScalar abs() const { return sign() < 0 ? -*this : *this; }

  double to_double() const;
  std::string to_string() const;  // "a" or "a+b*sqrt(3)" with exact fractions

  // Strict total order usable as a map key (lexicographic on (a, b); this is
  // not the numeric order).
  struct KeyLess {
    bool operator()(const ExactScalar& x, const ExactScalar& y) const {
      int c = cmp(x.a_, y.a_);
      if (c != 0) return c < 0;
      return cmp(x.b_, y.b_) < 0;
    }
  };

 private:
  Rational a_, b_;
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& s);

struct ExactPoint {
  ExactScalar x, y;

  ExactPoint() = default;
  ExactPoint(ExactScalar px, ExactScalar py) : x(std::move(px)), y(std::move(py)) {}

  ExactPoint operator+(const ExactPoint& o) const { return {x + o.x, y + o.y}; }
  ExactPoint operator-(const ExactPoint& o) const { return {x - o.x, y - o.y}; }
  ExactPoint operator*(const ExactScalar& s) const { return {x * s, y * s}; }
  bool operator==(const ExactPoint& o) const { return x == o.x && y == o.y; }
  bool operator!=(const ExactPoint& o) const { return !(*this == o); }

  struct KeyLess {
    bool operator()(const ExactPoint& p, const ExactPoint& q) const {
      ExactScalar::KeyLess less;
      if (less(p.x, q.x)) return true;
      if (less(q.x, p.x)) return false;
      return less(p.y, q.y);
    }
  };
};

std::ostream& operator<<(std::ostream& os, const ExactPoint& p);

inline ExactScalar dot(const ExactPoint& u, const ExactPoint& v) {
  return u.x * v.x + u.y * v.y;
}
inline ExactScalar cross(const ExactPoint& u, const ExactPoint& v) {
  return u.x * v.y - u.y * v.x;
}
inline ExactScalar squared_length(const ExactPoint& u) { return dot(u, u); }

// Sign of the signed area of triangle (p, q, r): +1 counterclockwise.
int orientation(const ExactPoint& p, const ExactPoint& q, const ExactPoint& r);

// Heading quantized to multiples of 30 degrees: k in Z/12, angle = k*30 deg
// measured counterclockwise from +x.
class Direction {
 public:
  Direction() : k_(0) {}
  explicit Direction(int k) : k_(((k % 12) + 12) % 12) {}

  int index() const { return k_; }
  int degrees() const { return k_ * 30; }

  Direction perpendicular() const { return Direction(k_ + 3); }
  Direction reverse() const { return Direction(k_ + 6); }
  Direction rotated(int steps) const { return Direction(k_ + steps); }

  // Unit vector (cos, sin); components lie in (1/2)Z[sqrt(3)].
  ExactPoint unit() const;

  bool operator==(const Direction& o) const { return k_ == o.k_; }
  bool operator!=(const Direction& o) const { return k_ != o.k_; }
  auto operator<=>(const Direction& o) const { return k_ <=> o.k_; }

 private:
  int k_;
};

// Smallest angle between two directions, in degrees (0..180).
int angle_between(Direction d1, Direction d2);

ExactScalar cos30(int k);  // cos(k*30 deg), exact
ExactScalar sin30(int k);  // sin(k*30 deg), exact

// Rotate p about `about` by k*30 degrees (counterclockwise for k > 0).
ExactPoint rotate(const ExactPoint& p, const ExactPoint& about, int k);

// A line through a point with a 30-degree-grid direction.
struct GridLine {
  ExactPoint through;
  Direction dir;
};

// Reflect p across the line.
ExactPoint reflect(const ExactPoint& p, const GridLine& line);

// Signed perpendicular offset of p from the line (positive on the left of
// line.dir). Exact.
ExactScalar line_offset(const ExactPoint& p, const GridLine& line);

// A direct or opposite planar isometry: p -> linear * p + shift, where linear
// is one of the 24 signed 30-degree-grid orthogonal matrices.
class Isometry {
 public:
  Isometry();  // identity

  static Isometry reflection(const GridLine& line);
  static Isometry rotation(const ExactPoint& about, int k);
  static Isometry translation(const ExactPoint& delta);

  ExactPoint apply(const ExactPoint& p) const;
  Isometry compose(const Isometry& then_outer) const;  // outer(inner(p))
  Isometry inverse() const;

  // +1 for orientation-preserving, -1 for reflections.
  int det_sign() const;

  bool operator==(const Isometry& o) const;

 private:
  // Row-major 2x2 linear part and translation.
  std::array<ExactScalar, 4> m_;
  ExactPoint t_;
};

// Exact intersection of two lines given by point pairs; empty if parallel.
std::optional<ExactPoint> line_intersection(const ExactPoint& a1,
                                            const ExactPoint& a2,
                                            const ExactPoint& b1,
                                            const ExactPoint& b2);

enum class SegmentRelation {
  kDisjoint,
  kTouching,        // share exactly one point, an endpoint of at least one
  kCrossing,        // proper interior crossing
  kOverlapping      // collinear with a shared subsegment
};

SegmentRelation classify_segments(const ExactPoint& a1, const ExactPoint& a2,
                                  const ExactPoint& b1, const ExactPoint& b2);

// True if q lies on the closed segment [a, b].
bool on_segment(const ExactPoint& q, const ExactPoint& a, const ExactPoint& b);

// Winding-based point-in-polygon; boundary counts as inside only if
// `closed` is true. Polygon may be concave; must be simple.
bool point_in_polygon(const ExactPoint& q, const std::vector<ExactPoint>& poly,
                      bool closed);

// Twice the signed area of a polygon (counterclockwise positive).
ExactScalar polygon_area2(const std::vector<ExactPoint>& poly);

}  // namespace origamic
