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

#ifndef EGOGRADE_GRID_HPP_
#define EGOGRADE_GRID_HPP_

#include <Eigen/Dense>

#include <vector>

#include "egograde/geometry.hpp"

namespace egograde
{

/// Discretization of the spatiotemporal volume. The spatial part lives in
/// path-relative coordinates: along-track a in [0, along_extent] ahead of the
/// ego origin, cross-track c in [-cross_extent/2, +cross_extent/2]. The time
/// axis has n_steps() + 1 samples at 0, dt, ..., t_max.
struct GridSpec
{
  double dx = 0.5;
  double dy = 0.5;
  double dt = 0.3;
  double along_extent = 30.0;
  double cross_extent = 10.0;
  double t_max = 3.0;

  int n_along() const { return static_cast<int>(std::lround(along_extent / dx)); }
  int n_cross() const { return static_cast<int>(std::lround(cross_extent / dy)); }
  int n_steps() const { return static_cast<int>(std::lround(t_max / dt)); }

  double cross_min() const { return -0.5 * cross_extent; }

  /// Path-relative center of cell (ia, ic).
  Vec2 cell_center(int ia, int ic) const
  {
    return {(ia + 0.5) * dx, cross_min() + (ic + 0.5) * dy};
  }

  bool contains(int ia, int ic) const
  {
    return ia >= 0 && ia < n_along() && ic >= 0 && ic < n_cross();
  }

  /// Throws ConfigError on non-positive cell sizes, extents that are not
  /// multiples of the cell size, or an empty time axis.
  void validate() const;

  bool operator==(const GridSpec &) const = default;
};

/// One cell of a footprint or rasterized body, with the fraction of the cell
/// area covered.
struct CellCover
{
  int along = 0;
  int cross = 0;
  double fraction = 0.0;
};

/// Per-cell occupancy probabilities over the spatiotemporal grid.
/// slice(k) holds the probabilities at time offset k * dt, k in 0..n_steps.
class OccupancyField
{
public:
  OccupancyField() = default;
  explicit OccupancyField(const GridSpec & spec);

  const GridSpec & spec() const { return spec_; }
  int num_slices() const { return static_cast<int>(slices_.size()); }

  Eigen::ArrayXXd & slice(int step) { return slices_[step]; }
  const Eigen::ArrayXXd & slice(int step) const { return slices_[step]; }

  double at(int step, int ia, int ic) const { return slices_[step](ia, ic); }
  double & at(int step, int ia, int ic) { return slices_[step](ia, ic); }

  void clamp01();

  /// True when every value lies in [0, 1] and dimensions match the spec.
  bool valid() const;

private:
  GridSpec spec_;
  std::vector<Eigen::ArrayXXd> slices_;
};

/// Field-shaped raw data (e.g. gradients); values are unconstrained.
using FieldData = std::vector<Eigen::ArrayXXd>;

FieldData zero_field_data(const GridSpec & spec);

/// Exact coverage fractions of a convex polygon (path-relative coordinates)
/// over the regular spatial lattice of `spec`. Cells outside the grid are
/// dropped; fractions below 1e-12 are omitted.
std::vector<CellCover> rasterize_on_lattice(const Polygon & convex_poly, const GridSpec & spec);

}  // namespace egograde

#endif  // EGOGRADE_GRID_HPP_
