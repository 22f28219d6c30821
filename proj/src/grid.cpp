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

#include "egograde/grid.hpp"

#include <algorithm>
#include <cmath>

#include "egograde/errors.hpp"

namespace egograde
{

namespace
{
constexpr double kExtentTol = 1e-6;
constexpr double kMinFraction = 1e-12;
}  // namespace

void GridSpec::validate() const
{
  if (dx <= 0.0 || dy <= 0.0 || dt <= 0.0) {
    throw ConfigError("grid cell sizes must be positive");
  }
  if (along_extent <= 0.0 || cross_extent <= 0.0 || t_max <= 0.0) {
    throw ConfigError("grid extents must be positive");
  }
  if (std::abs(n_along() * dx - along_extent) > kExtentTol ||
      std::abs(n_cross() * dy - cross_extent) > kExtentTol) {
    throw ConfigError("grid extents must be multiples of the cell size");
  }
  if (std::abs(n_steps() * dt - t_max) > kExtentTol) {
    throw ConfigError("t_max must be a multiple of dt");
  }
  if (n_along() < 1 || n_cross() < 1 || n_steps() < 1) {
    throw ConfigError("grid must contain at least one cell and one time step");
  }
}

OccupancyField::OccupancyField(const GridSpec & spec) : spec_(spec)
{
  spec_.validate();
  slices_.assign(
    spec_.n_steps() + 1, Eigen::ArrayXXd::Zero(spec_.n_along(), spec_.n_cross()));
}

void OccupancyField::clamp01()
{
  for (auto & s : slices_) {
    s = s.max(0.0).min(1.0);
  }
}

bool OccupancyField::valid() const
{
  if (static_cast<int>(slices_.size()) != spec_.n_steps() + 1) {
    return false;
  }
  for (const auto & s : slices_) {
    if (s.rows() != spec_.n_along() || s.cols() != spec_.n_cross()) {
      return false;
    }
    if ((s < 0.0).any() || (s > 1.0).any()) {
      return false;
    }
  }
  return true;
}

FieldData zero_field_data(const GridSpec & spec)
{
  return FieldData(
    spec.n_steps() + 1, Eigen::ArrayXXd::Zero(spec.n_along(), spec.n_cross()));
}

std::vector<CellCover> rasterize_on_lattice(const Polygon & convex_poly, const GridSpec & spec)
{
  std::vector<CellCover> covers;
  if (convex_poly.size() < 3) {
    return covers;
  }
  const auto box = bounding_box(convex_poly);
  const double c0 = spec.cross_min();
  int ia_lo = static_cast<int>(std::floor(box.min().x() / spec.dx));
  int ia_hi = static_cast<int>(std::floor(box.max().x() / spec.dx));
  int ic_lo = static_cast<int>(std::floor((box.min().y() - c0) / spec.dy));
  int ic_hi = static_cast<int>(std::floor((box.max().y() - c0) / spec.dy));
  ia_lo = std::max(ia_lo, 0);
  ic_lo = std::max(ic_lo, 0);
  ia_hi = std::min(ia_hi, spec.n_along() - 1);
  ic_hi = std::min(ic_hi, spec.n_cross() - 1);

  const double cell_area = spec.dx * spec.dy;
  for (int ia = ia_lo; ia <= ia_hi; ++ia) {
    for (int ic = ic_lo; ic <= ic_hi; ++ic) {
      const double x0 = ia * spec.dx;
      const double y0 = c0 + ic * spec.dy;
      const Polygon cell{
        {x0, y0}, {x0 + spec.dx, y0}, {x0 + spec.dx, y0 + spec.dy}, {x0, y0 + spec.dy}};
      const double area = polygon_area(clip_polygon(convex_poly, cell));
      const double fraction = std::min(area / cell_area, 1.0);
      if (fraction > kMinFraction) {
        covers.push_back({ia, ic, fraction});
      }
    }
  }
  return covers;
}

}  // namespace egograde
