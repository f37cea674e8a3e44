#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace obstructor {

template <std::size_t Dim>
using LatticeVector = std::array<std::int64_t, Dim>;

using Vec2 = LatticeVector<2>;

// floor(sqrt(n)) for n >= 0, exact.
inline std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("isqrt of negative value");
  auto x = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

template <std::size_t Dim>
std::int64_t squared_norm(const LatticeVector<Dim>& v) {
  std::int64_t s = 0;
  for (auto c : v) s += c * c;
  return s;
}

/// All integer points of Z^Dim within Euclidean distance `radius` of the
/// origin, in lexicographic order.
template <std::size_t Dim>
std::vector<LatticeVector<Dim>> lattice_ball(std::int64_t radius) {
  static_assert(Dim >= 1 && Dim <= 3, "lattice_ball supports dimensions 1..3");
  if (radius < 0) throw std::invalid_argument("lattice_ball: radius must be >= 0");
  const std::int64_t r2 = radius * radius;
  std::vector<LatticeVector<Dim>> out;
  LatticeVector<Dim> p{};
  auto recurse = [&](auto&& self, std::size_t axis, std::int64_t budget) -> void {
    if (axis == Dim) {
      out.push_back(p);
      return;
    }
    const std::int64_t span = isqrt(budget);
    for (std::int64_t c = -span; c <= span; ++c) {
      p[axis] = c;
      self(self, axis + 1, budget - c * c);
    }
  };
  recurse(recurse, 0, r2);
  return out;
}

// Runtime-dimension front end; rows are coordinate tuples.
inline std::vector<std::vector<std::int64_t>> lattice_ball(int dim, std::int64_t radius) {
  auto convert = [](const auto& points) {
    std::vector<std::vector<std::int64_t>> rows;
    rows.reserve(points.size());
    for (const auto& p : points) rows.emplace_back(p.begin(), p.end());
    return rows;
  };
  switch (dim) {
    case 1: return convert(lattice_ball<1>(radius));
    case 2: return convert(lattice_ball<2>(radius));
    case 3: return convert(lattice_ball<3>(radius));
    default: throw std::invalid_argument("lattice_ball: unsupported dimension " + std::to_string(dim));
  }
}

// Orientation of (b - a) x (c - a): > 0 counter-clockwise, < 0 clockwise.
inline std::int64_t cross(const Vec2& a, const Vec2& b, const Vec2& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

/// The nonnegative-quadrant vertices of the convex hull of the radius-r
/// lattice disk, sorted by first coordinate. Second coordinates strictly
/// decrease along the list.
struct HullSet {
  std::int64_t radius = 0;
  int dim = 2;
  std::vector<Vec2> vectors;

  std::size_t size() const { return vectors.size(); }
  const Vec2& operator[](std::size_t i) const { return vectors[i]; }

  // Index of the member whose first (axis 0) or second (axis 1) coordinate
  // equals value, or size() if none.
  std::size_t index_by_coordinate(int axis, std::int64_t value) const {
    for (std::size_t i = 0; i < vectors.size(); ++i)
      if (vectors[i][axis] == value) return i;
    return vectors.size();
  }
  std::size_t index_of(const Vec2& v) const {
    for (std::size_t i = 0; i < vectors.size(); ++i)
      if (vectors[i] == v) return i;
    return vectors.size();
  }

  friend bool operator==(const HullSet&, const HullSet&) = default;
};

inline HullSet positive_hull(std::int64_t radius) {
  if (radius < 1) throw std::invalid_argument("positive_hull: radius must be >= 1");
  // Only the top point of each column can be a vertex of the upper-right arc.
  std::vector<Vec2> tops;
  tops.reserve(static_cast<std::size_t>(radius) + 1);
  for (std::int64_t x = 0; x <= radius; ++x) tops.push_back({x, isqrt(radius * radius - x * x)});

  // Monotone chain, clockwise from (0, r) to (r, 0); collinear points dropped.
  std::vector<Vec2> chain;
  for (const auto& p : tops) {
    while (chain.size() >= 2 && cross(chain[chain.size() - 2], chain.back(), p) >= 0) chain.pop_back();
    chain.push_back(p);
  }
  return HullSet{radius, 2, std::move(chain)};
}

namespace detail {
// Full convex hull (counter-clockwise, no collinear points) by monotone chain.
inline std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Vec2> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

inline bool on_segment(const Vec2& a, const Vec2& b, const Vec2& p) {
  return cross(a, b, p) == 0 && std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
         std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
}

// True when p lies in the closed convex hull given as a CCW polygon
// (possibly degenerate: a point or a segment).
inline bool in_convex_polygon(const std::vector<Vec2>& poly, const Vec2& p) {
  if (poly.empty()) return false;
  if (poly.size() == 1) return poly[0] == p;
  if (poly.size() == 2) return on_segment(poly[0], poly[1], p);
  for (std::size_t i = 0; i < poly.size(); ++i)
    if (cross(poly[i], poly[(i + 1) % poly.size()], p) < 0) return false;
  return true;
}
}  // namespace detail

struct HullCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct HullVerification {
  std::vector<HullCheck> checks;
  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const HullCheck& c) { return c.pass; });
  }
  const HullCheck* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

inline std::string format_vec(const Vec2& v) {
  return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + ")";
}

// Failures are reported, never thrown.
inline HullVerification verify_hull_properties(const HullSet& h) {
  HullVerification out;

  HullCheck convex{"strict_convexity", true, ""};
  for (std::size_t i = 0; i < h.vectors.size() && convex.pass; ++i) {
    std::vector<Vec2> rest;
    for (std::size_t j = 0; j < h.vectors.size(); ++j)
      if (j != i) rest.push_back(h.vectors[j]);
    // Duplicates count as a convex combination of the remaining copy.
    if (detail::in_convex_polygon(detail::convex_hull(rest), h.vectors[i])) {
      convex.pass = false;
      convex.detail = format_vec(h.vectors[i]) + " is a convex combination of the other members";
    }
  }
  out.checks.push_back(convex);

  HullCheck distinct{"coordinate_distinctness", true, ""};
  for (std::size_t i = 0; i < h.vectors.size() && distinct.pass; ++i)
    for (std::size_t j = i + 1; j < h.vectors.size(); ++j) {
      for (int axis = 0; axis < 2; ++axis)
        if (h.vectors[i][axis] == h.vectors[j][axis]) {
          distinct.pass = false;
          distinct.detail = format_vec(h.vectors[i]) + " and " + format_vec(h.vectors[j]) +
                            " share coordinate " + std::to_string(axis + 1);
          break;
        }
      if (!distinct.pass) break;
    }
  out.checks.push_back(distinct);

  HullCheck monotone{"monotone_second_coordinate", true, ""};
  for (std::size_t i = 1; i < h.vectors.size(); ++i) {
    const auto& a = h.vectors[i - 1];
    const auto& b = h.vectors[i];
    if (!(a[0] < b[0] && a[1] > b[1])) {
      monotone.pass = false;
      monotone.detail = format_vec(a) + " -> " + format_vec(b) + " breaks the decreasing order";
      break;
    }
  }
  out.checks.push_back(monotone);

  HullCheck domain{"nonnegative_in_ball", true, ""};
  for (const auto& v : h.vectors)
    if (v[0] < 0 || v[1] < 0 || squared_norm(v) > h.radius * h.radius) {
      domain.pass = false;
      domain.detail = format_vec(v) + " is outside the nonnegative quarter disk";
      break;
    }
  out.checks.push_back(domain);
  return out;
}

/// Least-squares slope of log|hull(r)| against log r.
inline double hull_growth_exponent(const std::vector<std::int64_t>& radii) {
  if (radii.size() < 4) throw std::invalid_argument("hull_growth_exponent: need at least 4 radii");
  std::vector<double> xs, ys;
  for (auto r : radii) {
    if (r < 1 || r > (std::int64_t{1} << 13))
      throw std::invalid_argument("hull_growth_exponent: radius out of range [1, 8192]");
    xs.push_back(std::log(static_cast<double>(r)));
    ys.push_back(std::log(static_cast<double>(positive_hull(r).size())));
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx <= 0) throw std::invalid_argument("hull_growth_exponent: radii must not all be equal");
  return sxy / sxx;
}

// Text form: "hull r=<r> d=2 size=<s>" then one "x y" line per vector.
inline void write_hull(std::ostream& os, const HullSet& h) {
  os << "hull r=" << h.radius << " d=" << h.dim << " size=" << h.vectors.size() << "\n";
  for (const auto& v : h.vectors) os << v[0] << " " << v[1] << "\n";
}

inline HullSet read_hull(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw std::runtime_error("hull file: missing header");
  std::istringstream hs(header);
  std::string word;
  hs >> word;
  if (word != "hull") throw std::runtime_error("hull file: header must start with 'hull'");
  HullSet h;
  std::int64_t size = -1;
  while (hs >> word) {
    auto eq = word.find('=');
    if (eq == std::string::npos) throw std::runtime_error("hull file: bad header field " + word);
    auto key = word.substr(0, eq);
    auto value = std::stoll(word.substr(eq + 1));
    if (key == "r") h.radius = value;
    else if (key == "d") h.dim = static_cast<int>(value);
    else if (key == "size") size = value;
    else throw std::runtime_error("hull file: unknown header field " + key);
  }
  if (h.dim != 2) throw std::runtime_error("hull file: only d=2 is supported");
  Vec2 v;
  while (is >> v[0] >> v[1]) h.vectors.push_back(v);
  if (size >= 0 && static_cast<std::size_t>(size) != h.vectors.size())
    throw std::runtime_error("hull file: size field does not match the vector count");
  return h;
}

}  // namespace obstructor
