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

#ifndef EGOGRADE_GEOMETRY_HPP_
#define EGOGRADE_GEOMETRY_HPP_

#include <Eigen/Dense>

#include <array>
#include <span>
#include <vector>

namespace egograde
{

using Vec2 = Eigen::Vector2d;
using Polygon = std::vector<Vec2>;

inline constexpr double kPi = 3.14159265358979323846;

/// Signed polygon area; positive for counter-clockwise winding.
double signed_area(std::span<const Vec2> poly);

double polygon_area(std::span<const Vec2> poly);

bool is_convex(std::span<const Vec2> poly);

/// Sutherland-Hodgman clip of an arbitrary simple polygon against a convex
/// polygon. The clip polygon may have either winding; the subject winding is
/// preserved. Returns an empty polygon when the intersection is empty.
Polygon clip_polygon(const Polygon & subject, const Polygon & convex_clip);

/// Area of the intersection of two simple polygons. At least one side must be
/// convex or a quadrilateral (non-convex quads are split into triangles).
double intersection_area(const Polygon & a, const Polygon & b);

Eigen::AlignedBox2d bounding_box(std::span<const Vec2> poly);

inline bool boxes_overlap(
  const Eigen::AlignedBox2d & a, const Eigen::AlignedBox2d & b, double margin = 0.0)
{
  return a.min().x() < b.max().x() + margin && b.min().x() < a.max().x() + margin &&
         a.min().y() < b.max().y() + margin && b.min().y() < a.max().y() + margin;
}

/// Oriented rectangle. `length` runs along the heading, `width` across it.
struct OrientedBox
{
  Vec2 center{0.0, 0.0};
  double heading = 0.0;  // radians
  double length = 0.0;   // meters
  double width = 0.0;    // meters

  std::array<Vec2, 4> corners() const;  // counter-clockwise
  Polygon polygon() const;
  double area() const { return length * width; }
};

/// Wrap an angle to (-pi, pi].
double wrap_angle(double rad);

/// Interpolate between two angles along the shortest arc, u in [0, 1].
double lerp_angle(double from, double to, double u);

}  // namespace egograde

#endif  // EGOGRADE_GEOMETRY_HPP_
