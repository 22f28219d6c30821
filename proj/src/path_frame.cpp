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

#include "egograde/path_frame.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "egograde/errors.hpp"

namespace egograde
{

namespace
{
constexpr double kArclenTol = 1e-9;
constexpr double kTieTol = 1e-12;
}  // namespace

NominalPath::NominalPath(std::vector<Vec2> vertices) : vertices_(std::move(vertices))
{
  if (vertices_.size() < 2) {
    throw InvalidPathError("nominal path needs at least 2 vertices");
  }
  cumulative_.reserve(vertices_.size());
  cumulative_.push_back(0.0);
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    const double len = (vertices_[i] - vertices_[i - 1]).norm();
    if (len <= 0.0) {
      throw InvalidPathError(
        "nominal path has repeated vertex at index " + std::to_string(i));
    }
    cumulative_.push_back(cumulative_.back() + len);
  }
}

int NominalPath::segment_index_at(double s) const
{
  if (s < -kArclenTol || s > total_length() + kArclenTol) {
    throw OutOfPathExtentError(
      "arc length " + std::to_string(s) + " outside [0, " +
      std::to_string(total_length()) + "]");
  }
  s = std::clamp(s, 0.0, total_length());
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
  int idx = static_cast<int>(it - cumulative_.begin()) - 1;
  idx = std::clamp(idx, 0, static_cast<int>(vertices_.size()) - 2);
  return idx;
}

Vec2 NominalPath::point_at(double s) const
{
  const int i = segment_index_at(s);
  const double local = std::clamp(s, 0.0, total_length()) - cumulative_[i];
  const Vec2 dir = (vertices_[i + 1] - vertices_[i]).normalized();
  return vertices_[i] + local * dir;
}

Vec2 NominalPath::tangent_at(double s) const
{
  const int i = segment_index_at(s);
  return (vertices_[i + 1] - vertices_[i]).normalized();
}

PathRelativePoint project_to_path(
  const NominalPath & path, double origin_arclength, const Vec2 & point)
{
  const auto & verts = path.vertices();
  const auto & cum = path.cumulative_arclength();
  if (origin_arclength < -kArclenTol || origin_arclength > path.total_length() + kArclenTol) {
    throw OutOfPathExtentError("origin arc length outside the path");
  }

  double best_dist2 = std::numeric_limits<double>::infinity();
  double best_arclen = 0.0;
  Vec2 best_proj{0.0, 0.0};
  Vec2 best_dir{1.0, 0.0};

  for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
    const Vec2 d = verts[i + 1] - verts[i];
    const double len2 = d.squaredNorm();
    const double u = std::clamp((point - verts[i]).dot(d) / len2, 0.0, 1.0);
    const Vec2 proj = verts[i] + u * d;
    const double dist2 = (point - proj).squaredNorm();
    // Strictly-better wins; ties keep the earlier (smaller arc length) hit.
    if (dist2 < best_dist2 - kTieTol) {
      best_dist2 = dist2;
      best_proj = proj;
      best_dir = d / std::sqrt(len2);
      best_arclen = cum[i] + u * std::sqrt(len2);
    }
  }

  const Vec2 normal{-best_dir.y(), best_dir.x()};
  return {best_arclen - origin_arclength, (point - best_proj).dot(normal)};
}

Vec2 from_path_relative(
  const NominalPath & path, double origin_arclength, const PathRelativePoint & pr)
{
  const double s = origin_arclength + pr.along;
  if (s < -kArclenTol || s > path.total_length() + kArclenTol) {
    throw OutOfPathExtentError(
      "along-track coordinate " + std::to_string(pr.along) +
      " leaves the path (arc length " + std::to_string(s) + ")");
  }
  const Vec2 base = path.point_at(s);
  const Vec2 tan = path.tangent_at(s);
  const Vec2 normal{-tan.y(), tan.x()};
  return base + pr.cross * normal;
}

namespace
{

// Overlap scan: cells only fold onto each other near a curvature center, so
// a sweep over bbox-sorted cells keeps the candidate set small.
void detect_cell_overlaps(CurvilinearMesh & mesh)
{
  const int n = mesh.spec.n_along() * mesh.spec.n_cross();
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) {
    order[i] = i;
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return mesh.cell_bounds[a].min().x() < mesh.cell_bounds[b].min().x();
  });

  const int nc = mesh.spec.n_cross();
  constexpr double kEps = 1e-9;
  for (int oi = 0; oi < n; ++oi) {
    const int a = order[oi];
    const double a_max_x = mesh.cell_bounds[a].max().x();
    for (int oj = oi + 1; oj < n; ++oj) {
      const int b = order[oj];
      if (mesh.cell_bounds[b].min().x() >= a_max_x - kEps) {
        break;
      }
      const int dia = std::abs(a / nc - b / nc);
      const int dic = std::abs(a % nc - b % nc);
      if (dia <= 1 && dic <= 1) {
        continue;  // neighbors share edges/corners by construction
      }
      if (!boxes_overlap(mesh.cell_bounds[a], mesh.cell_bounds[b], -kEps)) {
        continue;
      }
      const auto pa = mesh.cell_polygon(a / nc, a % nc);
      const auto pb = mesh.cell_polygon(b / nc, b % nc);
      const double inter =
        intersection_area(Polygon(pa.begin(), pa.end()), Polygon(pb.begin(), pb.end()));
      const double frac =
        inter / std::max(std::min(mesh.cell_areas[a], mesh.cell_areas[b]),
                         std::numeric_limits<double>::min());
      mesh.max_overlap_fraction = std::max(mesh.max_overlap_fraction, frac);
      if (frac > 0.10) {
        mesh.has_overlapping_cells = true;
      }
    }
  }
}

}  // namespace

std::array<Vec2, 4> CurvilinearMesh::cell_polygon(int ia, int ic) const
{
  return {
    corners[corner_index(ia, ic)], corners[corner_index(ia + 1, ic)],
    corners[corner_index(ia + 1, ic + 1)], corners[corner_index(ia, ic + 1)]};
}

CurvilinearMesh build_curvilinear_mesh(
  const NominalPath & path, const GridSpec & spec, double ego_origin_arclength)
{
  spec.validate();
  if (ego_origin_arclength < -kArclenTol ||
      ego_origin_arclength + spec.along_extent > path.total_length() + kArclenTol) {
    throw OutOfPathExtentError(
      "grid [" + std::to_string(ego_origin_arclength) + ", " +
      std::to_string(ego_origin_arclength + spec.along_extent) +
      "] overruns the path (length " + std::to_string(path.total_length()) + ")");
  }

  CurvilinearMesh mesh;
  mesh.spec = spec;
  mesh.origin_arclength = ego_origin_arclength;

  const int na = spec.n_along();
  const int nc = spec.n_cross();
  mesh.corners.resize((na + 1) * (nc + 1));
  for (int ia = 0; ia <= na; ++ia) {
    for (int ic = 0; ic <= nc; ++ic) {
      const PathRelativePoint pr{ia * spec.dx, spec.cross_min() + ic * spec.dy};
      mesh.corners[mesh.corner_index(ia, ic)] =
        from_path_relative(path, ego_origin_arclength, pr);
    }
  }

  mesh.centers.resize(na * nc);
  mesh.cell_areas.resize(na * nc);
  mesh.cell_bounds.resize(na * nc);
  for (int ia = 0; ia < na; ++ia) {
    for (int ic = 0; ic < nc; ++ic) {
      const int idx = mesh.cell_index(ia, ic);
      mesh.centers[idx] =
        from_path_relative(path, ego_origin_arclength, {
          (ia + 0.5) * spec.dx, spec.cross_min() + (ic + 0.5) * spec.dy});
      const auto poly = mesh.cell_polygon(ia, ic);
      mesh.cell_areas[idx] = polygon_area(poly);
      mesh.cell_bounds[idx] = bounding_box(poly);
    }
  }

  detect_cell_overlaps(mesh);
  return mesh;
}

}  // namespace egograde
