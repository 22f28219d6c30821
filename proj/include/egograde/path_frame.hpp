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

#ifndef EGOGRADE_PATH_FRAME_HPP_
#define EGOGRADE_PATH_FRAME_HPP_

#include <array>
#include <vector>

#include "egograde/geometry.hpp"
#include "egograde/grid.hpp"

namespace egograde
{

/// Arc-length-parameterized polyline that defines the path-relative frame.
/// Immutable after construction.
class NominalPath
{
public:
  /// Throws InvalidPathError unless there are at least two vertices and all
  /// consecutive vertices are distinct.
  explicit NominalPath(std::vector<Vec2> vertices);

  const std::vector<Vec2> & vertices() const { return vertices_; }
  const std::vector<double> & cumulative_arclength() const { return cumulative_; }
  double total_length() const { return cumulative_.back(); }

  /// Index of the segment containing arc length s (last segment at s = total).
  /// Throws OutOfPathExtentError for s outside [0, total_length].
  int segment_index_at(double s) const;

  Vec2 point_at(double s) const;
  Vec2 tangent_at(double s) const;  // unit tangent of the containing segment

private:
  std::vector<Vec2> vertices_;
  std::vector<double> cumulative_;
};

/// Along-track / cross-track coordinates. Cross-track is positive on the
/// path's left (counter-clockwise normal).
struct PathRelativePoint
{
  double along = 0.0;
  double cross = 0.0;
};

/// Project a real-world point onto the path: along = arc length of the
/// closest path point minus origin_arclength, cross = signed normal offset.
/// The closest point is the global minimum over all segments; ties resolve to
/// the smaller arc length.
PathRelativePoint project_to_path(
  const NominalPath & path, double origin_arclength, const Vec2 & point);

/// Inverse transform: advance `pr.along` from the origin, then offset
/// `pr.cross` along the local left normal. Throws OutOfPathExtentError when
/// the along-track coordinate leaves the path.
Vec2 from_path_relative(
  const NominalPath & path, double origin_arclength, const PathRelativePoint & pr);

/// The path-relative lattice of a GridSpec mapped into real-world space.
/// Cells are indexed (along, cross); corner (i, j) is the real-world image of
/// path-relative (i * dx, cross_min + j * dy) measured from origin_arclength.
struct CurvilinearMesh
{
  GridSpec spec;
  double origin_arclength = 0.0;
  std::vector<Vec2> corners;             // (n_along + 1) * (n_cross + 1)
  std::vector<Vec2> centers;             // n_along * n_cross
  std::vector<double> cell_areas;        // world-space polygon areas
  std::vector<Eigen::AlignedBox2d> cell_bounds;

  // Set when any two cells overlap by more than 10% of the smaller cell area
  // (the inverse transform folds near a curvature center).
  bool has_overlapping_cells = false;
  double max_overlap_fraction = 0.0;

  int corner_index(int ia, int ic) const { return ia * (spec.n_cross() + 1) + ic; }
  int cell_index(int ia, int ic) const { return ia * spec.n_cross() + ic; }

  std::array<Vec2, 4> cell_polygon(int ia, int ic) const;
  const Vec2 & cell_center(int ia, int ic) const { return centers[cell_index(ia, ic)]; }
  double cell_area(int ia, int ic) const { return cell_areas[cell_index(ia, ic)]; }
};

/// Build the curvilinear mesh for `spec` anchored at ego_origin_arclength.
/// Throws OutOfPathExtentError when the grid extends past the path's end.
CurvilinearMesh build_curvilinear_mesh(
  const NominalPath & path, const GridSpec & spec, double ego_origin_arclength);

}  // namespace egograde

#endif  // EGOGRADE_PATH_FRAME_HPP_
