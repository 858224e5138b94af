#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "arcsys/surface.hpp"

namespace arcsys {

using BigInt = boost::multiprecision::cpp_int;

/// Projective point of the boundary circle, (p, q) ~ p/q.
struct Proj {
  BigInt p, q;
};

struct Mat2 {
  BigInt a, b, c, d;  // [[a, b], [c, d]]

  static Mat2 identity() { return {1, 0, 0, 1}; }
  BigInt det() const { return a * d - b * c; }
  Mat2 inverse_unimodular() const { return {d, -b, -c, a}; }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  }
  Proj apply(const Proj& v) const { return {a * v.p + b * v.q, c * v.p + d * v.q}; }
};

/// Exact positions along a side; compared by cross-multiplication.
struct Fraction {
  BigInt num, den;  // den > 0

  friend int compare(const Fraction& x, const Fraction& y) {
    BigInt l = x.num * y.den, r = y.num * x.den;
    return l < r ? -1 : (l > r ? 1 : 0);
  }
};

/// Realizes the polygon as an ideal Farey polygon and the side pairings as
/// unimodular matrices, so every tile of the universal cover is a concrete
/// hyperbolic polygon with integer vertices.
///
/// Corner 0 sits at infinity and corner k >= 1 at the integer k - 1. Every
/// side is then an edge of the Farey tessellation, and each pairing maps
/// Farey triangles to Farey triangles.
class FareyModel {
 public:
  explicit FareyModel(const SurfaceGluing& g) : n_(g.side_count()) {
    for (int c = 0; c < n_; ++c)
      vertex_.push_back(c == 0 ? Proj{1, 0} : Proj{c - 1, 1});
    for (int s = 0; s < n_; ++s) pairing_.push_back(build_pairing(g, s));
  }

  int side_count() const { return n_; }
  const Proj& vertex(int corner) const { return vertex_[static_cast<std::size_t>(corner)]; }
  /// Maps the base tile onto the tile across side s.
  const Mat2& pairing(int side) const { return pairing_[static_cast<std::size_t>(side)]; }

 private:
  int wrap(int i) const { return ((i % n_) + n_) % n_; }

  // The third vertex of the Farey triangle inside the base polygon on side s.
  Proj inner_third(int s) const {
    if (s == 0) return vertex(2);
    if (s == n_ - 1) return vertex(n_ - 2);
    return vertex(0);
  }

  static bool same_point(const Proj& x, const Proj& y) { return x.p * y.q == x.q * y.p; }

  // Columns (x, e*y) with x + e*y projectively equal to r.
  static Mat2 frame(const Proj& x, const Proj& y, const Proj& r) {
    Proj plus{x.p + y.p, x.q + y.q};
    if (same_point(plus, r)) return {x.p, y.p, x.q, y.q};
    Proj minus{x.p - y.p, x.q - y.q};
    if (same_point(minus, r)) return {x.p, -y.p, x.q, -y.q};
    throw std::logic_error("not a Farey triangle");
  }

  Mat2 build_pairing(const SurfaceGluing& g, int s) const {
    int t = g.partner(s);
    const Proj& x = vertex(t);
    const Proj& y = vertex(wrap(t + 1));
    Mat2 src = frame(x, y, inner_third(t));

    const Proj& u = vertex(wrap(s + 1));
    const Proj& v = vertex(s);
    Proj inner = inner_third(s);
    // The other Farey neighbour of edge (u, v) lies outside the polygon.
    Proj plus{u.p + v.p, u.q + v.q}, minus{u.p - v.p, u.q - v.q};
    Proj outer = same_point(plus, inner) ? minus : plus;
    Mat2 dst = frame(u, v, outer);

    BigInt ds = src.det();
    if (ds != 1 && ds != -1) throw std::logic_error("non-unimodular Farey frame");
    Mat2 src_inv = src.inverse_unimodular();
    if (ds == -1) src_inv = {-src_inv.a, -src_inv.b, -src_inv.c, -src_inv.d};
    Mat2 m = dst * src_inv;
    if (m.det() != 1) throw std::logic_error("side pairing does not preserve orientation");
    return m;
  }

  int n_;
  std::vector<Proj> vertex_;
  std::vector<Mat2> pairing_;
};

namespace detail {

using Vec3 = std::array<BigInt, 3>;

// Points of the boundary circle on the conic of the Klein model; geodesics
// become straight chords.
inline Vec3 veronese(const Proj& v) { return {v.p * v.p, v.p * v.q, v.q * v.q}; }

inline Vec3 cross(const Vec3& x, const Vec3& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

inline BigInt dot(const Vec3& x, const Vec3& y) { return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]; }

}  // namespace detail

/// Where the geodesic from x to y crosses the geodesic from e0 to e1, as a
/// fraction in (0, 1) measured from e0. Throws if they do not cross.
inline Fraction crossing_parameter(const Proj& x, const Proj& y, const Proj& e0, const Proj& e1) {
  using namespace detail;
  Vec3 p1 = veronese(e0), p2 = veronese(e1);
  Vec3 point = cross(cross(veronese(x), veronese(y)), cross(p1, p2));
  Vec3 normal = cross(p1, p2);
  BigInt mu = dot(cross(p1, point), normal);
  BigInt lambda = dot(cross(point, p2), normal);
  if (mu == 0 || lambda == 0 || (mu > 0) != (lambda > 0))
    throw std::logic_error("geodesic does not cross the side transversally");
  BigInt den = lambda + mu;
  if (den < 0) {
    mu = -mu;
    den = -den;
  }
  return {mu, den};
}

}  // namespace arcsys
