// Copyright 2026 The Egograde Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "egograde/geometry.hpp"

#include <cmath>
#include <limits>

namespace egograde
{

namespace
{

constexpr double kClipEps = 1e-12;

double cross2(const Vec2 & a, const Vec2 & b)
{
  return a.x() * b.y() - a.y() * b.x();
}

// Clip `subject` against the half-plane left of edge a->b.
Polygon clip_half_plane(const Polygon & subject, const Vec2 & a, const Vec2 & b)
{
  Polygon out;
  out.reserve(subject.size() + 1);
  const Vec2 edge = b - a;
  const auto side = [&](const Vec2 & p) { return cross2(edge, p - a); };
  for (std::size_t i = 0; i < subject.size(); ++i) {
    const Vec2 & cur = subject[i];
    const Vec2 & nxt = subject[(i + 1) % subject.size()];
    const double sc = side(cur);
    const double sn = side(nxt);
    if (sc >= -kClipEps) {
      out.push_back(cur);
    }
    if ((sc > kClipEps && sn < -kClipEps) || (sc < -kClipEps && sn > kClipEps)) {
      const double u = sc / (sc - sn);
      out.push_back(cur + u * (nxt - cur));
    }
  }
  return out;
}

// Split a simple quadrilateral into two triangles along an interior diagonal.
bool split_quad(const Polygon & quad, Polygon & tri_a, Polygon & tri_b)
{
  if (quad.size() != 4) {
    return false;
  }
  for (int d = 0; d < 2; ++d) {
    const int i0 = d;
    const int i1 = (d + 1) % 4;
    const int i2 = (d + 2) % 4;
    const int i3 = (d + 3) % 4;
    Polygon a{quad[i0], quad[i1], quad[i2]};
    Polygon b{quad[i0], quad[i2], quad[i3]};
    const double sa = signed_area(a);
    const double sb = signed_area(b);
    // A diagonal is interior iff both triangles keep the quad's winding.
    if (sa * sb >= 0.0 &&
        std::abs(sa) + std::abs(sb) > 0.5 * std::abs(signed_area(quad))) {
      tri_a = std::move(a);
      tri_b = std::move(b);
      return true;
    }
  }
  return false;
}

}  // namespace

double signed_area(std::span<const Vec2> poly)
{
  if (poly.size() < 3) {
    return 0.0;
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec2 & p = poly[i];
    const Vec2 & q = poly[(i + 1) % poly.size()];
    acc += cross2(p, q);
  }
  return 0.5 * acc;
}

double polygon_area(std::span<const Vec2> poly)
{
  return std::abs(signed_area(poly));
}

bool is_convex(std::span<const Vec2> poly)
{
  if (poly.size() < 3) {
    return false;
  }
  int sign = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec2 & a = poly[i];
    const Vec2 & b = poly[(i + 1) % poly.size()];
    const Vec2 & c = poly[(i + 2) % poly.size()];
    const double cr = cross2(b - a, c - b);
    if (std::abs(cr) <= kClipEps) {
      continue;
    }
    const int s = cr > 0.0 ? 1 : -1;
    if (sign == 0) {
      sign = s;
    } else if (s != sign) {
      return false;
    }
  }
  return true;
}

Polygon clip_polygon(const Polygon & subject, const Polygon & convex_clip)
{
  if (subject.size() < 3 || convex_clip.size() < 3) {
    return {};
  }
  Polygon clip = convex_clip;
  if (signed_area(clip) < 0.0) {
    std::reverse(clip.begin(), clip.end());
  }
  Polygon result = subject;
  for (std::size_t i = 0; i < clip.size() && !result.empty(); ++i) {
    result = clip_half_plane(result, clip[i], clip[(i + 1) % clip.size()]);
  }
  return result;
}

double intersection_area(const Polygon & a, const Polygon & b)
{
  if (a.size() < 3 || b.size() < 3) {
    return 0.0;
  }
  if (is_convex(b)) {
    return polygon_area(clip_polygon(a, b));
  }
  if (is_convex(a)) {
    return polygon_area(clip_polygon(b, a));
  }
  Polygon tri_a;
  Polygon tri_b;
  if (split_quad(b, tri_a, tri_b)) {
    return polygon_area(clip_polygon(a, tri_a)) + polygon_area(clip_polygon(a, tri_b));
  }
  if (split_quad(a, tri_a, tri_b)) {
    return polygon_area(clip_polygon(b, tri_a)) + polygon_area(clip_polygon(b, tri_b));
  }
  return polygon_area(clip_polygon(a, b));
}

Eigen::AlignedBox2d bounding_box(std::span<const Vec2> poly)
{
  Eigen::AlignedBox2d box;
  for (const Vec2 & p : poly) {
    box.extend(p);
  }
  return box;
}

std::array<Vec2, 4> OrientedBox::corners() const
{
  const Vec2 dir{std::cos(heading), std::sin(heading)};
  const Vec2 nrm{-dir.y(), dir.x()};
  const Vec2 half_l = 0.5 * length * dir;
  const Vec2 half_w = 0.5 * width * nrm;
  return {
    center - half_l - half_w, center + half_l - half_w, center + half_l + half_w,
    center - half_l + half_w};
}

Polygon OrientedBox::polygon() const
{
  const auto c = corners();
  return Polygon(c.begin(), c.end());
}

double wrap_angle(double rad)
{
  const double two_pi = 2.0 * M_PI;
  double a = std::fmod(rad, two_pi);
  if (a <= -M_PI) {
    a += two_pi;
  } else if (a > M_PI) {
    a -= two_pi;
  }
  return a;
}

double lerp_angle(double from, double to, double u)
{
  return wrap_angle(from + u * wrap_angle(to - from));
}

}  // namespace egograde
