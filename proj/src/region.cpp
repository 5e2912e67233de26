#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "freedom/error.hpp"
#include "freedom/oracle.hpp"

namespace freedom {

namespace {

using Point = std::array<double, 2>;

// a0 * p1 + a1 * p2 <= c
struct HalfPlane {
  double a0, a1, c;
  double slack(const Point& p) const { return c - (a0 * p[0] + a1 * p[1]); }
};

std::vector<Point> clip(const std::vector<Point>& polygon, const HalfPlane& h) {
  std::vector<Point> out;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& cur = polygon[i];
    const Point& nxt = polygon[(i + 1) % n];
    const double sc = h.slack(cur);
    const double sn = h.slack(nxt);
    if (sc >= 0.0) out.push_back(cur);
    if ((sc >= 0.0) != (sn >= 0.0)) {
      const double t = sc / (sc - sn);
      out.push_back({cur[0] + t * (nxt[0] - cur[0]), cur[1] + t * (nxt[1] - cur[1])});
    }
  }
  return out;
}

std::vector<Point> dedupe(std::vector<Point> pts) {
  constexpr double eps = 1e-12;
  auto same = [](const Point& x, const Point& y) {
    return std::abs(x[0] - y[0]) <= eps && std::abs(x[1] - y[1]) <= eps;
  };
  std::vector<Point> out;
  for (const Point& p : pts) {
    if (out.empty() || !same(out.back(), p)) out.push_back(p);
  }
  while (out.size() > 1 && same(out.front(), out.back())) out.pop_back();
  return out;
}

double shoelace(const std::vector<Point>& pts) {
  double twice = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Point& a = pts[i];
    const Point& b = pts[(i + 1) % pts.size()];
    twice += a[0] * b[1] - b[0] * a[1];
  }
  return 0.5 * twice;
}

}  // namespace

RegionPolygon region_polygon(const IntervalAssignment& a) {
  if (a.size() != 3) {
    throw Error(ErrorKind::WrongDimension,
                "region polygon needs exactly 3 options, got " + std::to_string(a.size()));
  }
  const std::array<HalfPlane, 6> bounds = {{
      {-1.0, 0.0, -a.ne(0)},
      {1.0, 0.0, a.po(0)},
      {0.0, -1.0, -a.ne(1)},
      {0.0, 1.0, a.po(1)},
      {1.0, 1.0, 1.0 - a.ne(2)},
      {-1.0, -1.0, a.po(2) - 1.0},
  }};

  std::vector<Point> polygon = {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}};
  for (const HalfPlane& h : bounds) {
    polygon = clip(polygon, h);
    if (polygon.empty()) break;
  }

  RegionPolygon region;
  region.vertices = dedupe(std::move(polygon));
  if (region.vertices.size() >= 3) {
    region.area_fraction = std::clamp(2.0 * shoelace(region.vertices), 0.0, 1.0);
  }
  return region;
}

}  // namespace freedom
