#include "origamic/geometry.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace origamic {

ExactScalar ExactScalar::operator/(const ExactScalar& o) const {
  // 1/(c + d*sqrt3) = (c - d*sqrt3) / (c^2 - 3 d^2); the norm is zero only
  // for c = d = 0 since sqrt(3) is irrational.
  Rational norm = o.a_ * o.a_ - 3 * o.b_ * o.b_;
  if (norm == 0) {
    if (o.a_ == 0 && o.b_ == 0) throw std::domain_error("division by zero ExactScalar");
    throw std::logic_error("ExactScalar norm vanished for nonzero value");
  }
  ExactScalar num = *this * ExactScalar(o.a_, -o.b_);
  return ExactScalar(num.a_ / norm, num.b_ / norm);
}

int ExactScalar::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with 3 b^2.
  Rational a2 = a_ * a_;
  Rational b2 = 3 * b_ * b_;
  int c = cmp(a2, b2);
  if (c == 0) return 0;  // unreachable: would make sqrt(3) rational
  return (c > 0) ? sa : sb;
}

double ExactScalar::to_double() const {
  return a_.get_d() + b_.get_d() * 1.7320508075688772935;
}

std::string ExactScalar::to_string() const {
  std::ostringstream os;
  if (b_ == 0) {
    os << a_;
  } else {
    os << a_ << (sgn(b_) < 0 ? "-" : "+") << abs(b_) << "*sqrt(3)";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& s) {
  return os << s.to_string();
}

std::ostream& operator<<(std::ostream& os, const ExactPoint& p) {
  return os << "(" << p.x << ", " << p.y << ")";
}

int orientation(const ExactPoint& p, const ExactPoint& q, const ExactPoint& r) {
  return cross(q - p, r - p).sign();
}

namespace {
// cos(k*30deg) for k = 0..11, as (num, den, is_sqrt3) triples encoded in
// ExactScalar. Values: 1, s/2, 1/2, 0, -1/2, -s/2, -1, ...
const ExactScalar& cos_table(int k) {
  static const ExactScalar table[12] = {
      ExactScalar(1),
      ExactScalar(Rational(0), Rational(1, 2)),
      ExactScalar(Rational(1, 2)),
      ExactScalar(0),
      ExactScalar(Rational(-1, 2)),
      ExactScalar(Rational(0), Rational(-1, 2)),
      ExactScalar(-1),
      ExactScalar(Rational(0), Rational(-1, 2)),
      ExactScalar(Rational(-1, 2)),
      ExactScalar(0),
      ExactScalar(Rational(1, 2)),
      ExactScalar(Rational(0), Rational(1, 2)),
  };
  return table[((k % 12) + 12) % 12];
}
}  // namespace

ExactScalar cos30(int k) { return cos_table(k); }
ExactScalar sin30(int k) { return cos_table(k - 3); }

ExactPoint Direction::unit() const { return {cos30(k_), sin30(k_)}; }

int angle_between(Direction d1, Direction d2) {
  int d = std::abs(d1.index() - d2.index());
  return std::min(d, 12 - d) * 30;
}

ExactPoint rotate(const ExactPoint& p, const ExactPoint& about, int k) {
  ExactScalar c = cos30(k), s = sin30(k);
  ExactPoint v = p - about;
  return {about.x + c * v.x - s * v.y, about.y + s * v.x + c * v.y};
}

ExactPoint reflect(const ExactPoint& p, const GridLine& line) {
  // Reflection matrix across a line at angle phi: [[cos2phi, sin2phi],
  // [sin2phi, -cos2phi]]; 2phi is a multiple of 60 degrees so stays on grid.
  int k2 = 2 * line.dir.index();
  ExactScalar c = cos30(k2), s = sin30(k2);
  ExactPoint v = p - line.through;
  return {line.through.x + c * v.x + s * v.y, line.through.y + s * v.x - c * v.y};
}

ExactScalar line_offset(const ExactPoint& p, const GridLine& line) {
  ExactPoint u = line.dir.unit();
  return cross(u, p - line.through);
}

Isometry::Isometry() : m_{ExactScalar(1), ExactScalar(0), ExactScalar(0), ExactScalar(1)}, t_() {}

Isometry Isometry::reflection(const GridLine& line) {
  Isometry iso;
  int k2 = 2 * line.dir.index();
  ExactScalar c = cos30(k2), s = sin30(k2);
  iso.m_ = {c, s, s, -c};
  // t = q - M q for a point q on the line.
  const ExactPoint& q = line.through;
  iso.t_ = {q.x - (c * q.x + s * q.y), q.y - (s * q.x - c * q.y)};
  return iso;
}

Isometry Isometry::rotation(const ExactPoint& about, int k) {
  Isometry iso;
  ExactScalar c = cos30(k), s = sin30(k);
  iso.m_ = {c, -s, s, c};
  iso.t_ = {about.x - (c * about.x - s * about.y),
            about.y - (s * about.x + c * about.y)};
  return iso;
}

Isometry Isometry::translation(const ExactPoint& delta) {
  Isometry iso;
  iso.t_ = delta;
  return iso;
}

ExactPoint Isometry::apply(const ExactPoint& p) const {
  return {m_[0] * p.x + m_[1] * p.y + t_.x, m_[2] * p.x + m_[3] * p.y + t_.y};
}

Isometry Isometry::compose(const Isometry& outer) const {
  // Result applies *this first, then outer.
  Isometry r;
  r.m_ = {outer.m_[0] * m_[0] + outer.m_[1] * m_[2],
          outer.m_[0] * m_[1] + outer.m_[1] * m_[3],
          outer.m_[2] * m_[0] + outer.m_[3] * m_[2],
          outer.m_[2] * m_[1] + outer.m_[3] * m_[3]};
  r.t_ = outer.apply(t_);
  return r;
}

Isometry Isometry::inverse() const {
  Isometry r;
  ExactScalar det = m_[0] * m_[3] - m_[1] * m_[2];
  r.m_ = {m_[3] / det, -m_[1] / det, -m_[2] / det, m_[0] / det};
  ExactPoint it = {r.m_[0] * t_.x + r.m_[1] * t_.y, r.m_[2] * t_.x + r.m_[3] * t_.y};
  r.t_ = {-it.x, -it.y};
  return r;
}

int Isometry::det_sign() const {
  return (m_[0] * m_[3] - m_[1] * m_[2]).sign();
}

bool Isometry::operator==(const Isometry& o) const {
  return m_ == o.m_ && t_ == o.t_;
}

std::optional<ExactPoint> line_intersection(const ExactPoint& a1,
                                            const ExactPoint& a2,
                                            const ExactPoint& b1,
                                            const ExactPoint& b2) {
  ExactPoint r = a2 - a1, s = b2 - b1;
  ExactScalar denom = cross(r, s);
  if (denom.sign() == 0) return std::nullopt;
  ExactScalar t = cross(b1 - a1, s) / denom;
  return a1 + r * t;
}

bool on_segment(const ExactPoint& q, const ExactPoint& a, const ExactPoint& b) {
  if (orientation(a, b, q) != 0) return false;
  return dot(q - a, b - a).sign() >= 0 && dot(q - b, a - b).sign() >= 0;
}

SegmentRelation classify_segments(const ExactPoint& a1, const ExactPoint& a2,
                                  const ExactPoint& b1, const ExactPoint& b2) {
  int o1 = orientation(a1, a2, b1);
  int o2 = orientation(a1, a2, b2);
  int o3 = orientation(b1, b2, a1);
  int o4 = orientation(b1, b2, a2);

  if (o1 == 0 && o2 == 0) {
    // Collinear: project on the dominant axis.
    ExactPoint d = a2 - a1;
    auto param = [&](const ExactPoint& p) {
      return (d.x.abs() >= d.y.abs()) ? p.x : p.y;
    };
    ExactScalar lo_a = param(a1), hi_a = param(a2);
    if (lo_a > hi_a) std::swap(lo_a, hi_a);
    ExactScalar lo_b = param(b1), hi_b = param(b2);
    if (lo_b > hi_b) std::swap(lo_b, hi_b);
    ExactScalar lo = lo_a > lo_b ? lo_a : lo_b;
    ExactScalar hi = hi_a < hi_b ? hi_a : hi_b;
    if (lo > hi) return SegmentRelation::kDisjoint;
    if (lo == hi) return SegmentRelation::kTouching;
    return SegmentRelation::kOverlapping;
  }

  bool a_straddles = (o1 * o2 < 0);
  bool b_straddles = (o3 * o4 < 0);
  if (a_straddles && b_straddles) return SegmentRelation::kCrossing;

  // Touching at an endpoint?
  if (o1 == 0 && on_segment(b1, a1, a2)) return SegmentRelation::kTouching;
  if (o2 == 0 && on_segment(b2, a1, a2)) return SegmentRelation::kTouching;
  if (o3 == 0 && on_segment(a1, b1, b2)) return SegmentRelation::kTouching;
  if (o4 == 0 && on_segment(a2, b1, b2)) return SegmentRelation::kTouching;
  return SegmentRelation::kDisjoint;
}

bool point_in_polygon(const ExactPoint& q, const std::vector<ExactPoint>& poly,
                      bool closed) {
  size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    if (on_segment(q, poly[i], poly[(i + 1) % n])) return closed;
  }
  // Crossing number with exact handling of vertices: count edges whose
  // y-interval half-open-contains q.y and that lie strictly right of q.
  int crossings = 0;
  for (size_t i = 0; i < n; ++i) {
    const ExactPoint& a = poly[i];
    const ExactPoint& b = poly[(i + 1) % n];
    bool a_below = a.y <= q.y, b_below = b.y <= q.y;
    if (a_below == b_below) continue;
    // Edge crosses the horizontal line through q; find side.
    int orient = orientation(a, b, q);
    if ((b.y > a.y && orient < 0) || (b.y < a.y && orient > 0)) ++crossings;
  }
  return (crossings % 2) == 1;
}

ExactScalar polygon_area2(const std::vector<ExactPoint>& poly) {
  ExactScalar s(0);
  size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    s += cross(poly[i], poly[(i + 1) % n]);
  }
  return s;
}

}  // namespace origamic
