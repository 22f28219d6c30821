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

#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "egograde/errors.hpp"
#include "egograde/path_frame.hpp"
#include "random_instance.hpp"

using namespace egograde;

namespace
{

/// Exhaustive nearest-point search by dense sampling of the arc length, used
/// as an oracle for the analytic projection.
PathRelativePoint project_by_sampling(
  const NominalPath & path, double origin, const Vec2 & point, int samples = 200001)
{
  double best_s = 0.0;
  double best_d2 = std::numeric_limits<double>::infinity();
  const double total = path.total_length();
  for (int i = 0; i < samples; ++i) {
    const double s = total * i / (samples - 1);
    const double d2 = (path.point_at(s) - point).squaredNorm();
    if (d2 < best_d2) {
      best_d2 = d2;
      best_s = s;
    }
  }
  const Vec2 tangent = path.tangent_at(best_s);
  const Vec2 normal{-tangent.y(), tangent.x()};
  const Vec2 delta = point - path.point_at(best_s);
  return {best_s - origin, normal.dot(delta)};
}

NominalPath wavy_path()
{
  std::vector<Vec2> pts;
  for (int i = 0; i <= 60; ++i) {
    const double x = i * 1.0;
    pts.emplace_back(x, 4.0 * std::sin(0.12 * x));
  }
  return NominalPath(std::move(pts));
}

}  // namespace

TEST_SUITE("path_frame")
{
  TEST_CASE("construction rejects degenerate paths")
  {
    CHECK_THROWS_AS(NominalPath({}), InvalidPathError);
    CHECK_THROWS_AS(NominalPath({Vec2{0.0, 0.0}}), InvalidPathError);
    CHECK_THROWS_AS(
      NominalPath({Vec2{0.0, 0.0}, Vec2{0.0, 0.0}, Vec2{1.0, 0.0}}), InvalidPathError);
    CHECK_NOTHROW(NominalPath({Vec2{0.0, 0.0}, Vec2{1.0, 0.0}}));
  }

  TEST_CASE("arc length bookkeeping on a straight path")
  {
    NominalPath path({Vec2{0.0, 0.0}, Vec2{3.0, 4.0}, Vec2{6.0, 8.0}});
    CHECK(path.total_length() == doctest::Approx(10.0));
    CHECK(path.point_at(5.0).x() == doctest::Approx(3.0));
    CHECK(path.point_at(5.0).y() == doctest::Approx(4.0));
    CHECK(path.tangent_at(2.0).x() == doctest::Approx(0.6));
    CHECK(path.tangent_at(2.0).y() == doctest::Approx(0.8));
    CHECK_THROWS_AS(path.point_at(-0.5), OutOfPathExtentError);
    CHECK_THROWS_AS(path.point_at(10.5), OutOfPathExtentError);
  }

  TEST_CASE("projection on a straight path is the usual orthogonal one")
  {
    NominalPath path({Vec2{0.0, 0.0}, Vec2{10.0, 0.0}});
    const auto pr = project_to_path(path, 2.0, Vec2{5.0, 1.5});
    CHECK(pr.along == doctest::Approx(3.0));
    CHECK(pr.cross == doctest::Approx(1.5));
    // right of the path is negative cross
    CHECK(project_to_path(path, 0.0, Vec2{4.0, -2.0}).cross == doctest::Approx(-2.0));
    // points beyond the ends clamp to the end vertices
    CHECK(project_to_path(path, 0.0, Vec2{12.0, 0.5}).along == doctest::Approx(10.0));
  }

  TEST_CASE("projection matches a dense-sampling oracle on a curved path")
  {
    const NominalPath path = wavy_path();
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
      const Vec2 p{testutil::uniform(rng, 2.0, 58.0), testutil::uniform(rng, -6.0, 6.0)};
      const auto got = project_to_path(path, 0.0, p);
      const auto want = project_by_sampling(path, 0.0, p);
      CHECK(got.along == doctest::Approx(want.along).epsilon(1e-3));
      CHECK(got.cross == doctest::Approx(want.cross).epsilon(1e-3));
    }
  }

  TEST_CASE("project then invert round-trips within a millimeter")
  {
    const NominalPath path = wavy_path();
    std::mt19937_64 rng(5);
    int checked = 0;
    for (int trial = 0; trial < 800 && checked < 200; ++trial) {
      // Stay within a lane-ish band so the curvature never folds the frame.
      const Vec2 p{testutil::uniform(rng, 3.0, 57.0), testutil::uniform(rng, -8.0, 8.0)};
      const auto pr = project_to_path(path, 0.0, p);
      if (pr.along < 0.5 || pr.along > path.total_length() - 0.5) {
        continue;  // clamped projections do not invert
      }
      if (std::abs(pr.cross) > 3.0) {
        continue;
      }
      // A foot on a polyline vertex has no single normal; the inverse uses
      // one segment's normal and cannot reproduce such points.
      bool on_vertex = false;
      for (const double cum : path.cumulative_arclength()) {
        on_vertex = on_vertex || std::abs(pr.along - cum) < 1e-6;
      }
      if (on_vertex) {
        continue;
      }
      const Vec2 back = from_path_relative(path, 0.0, pr);
      CHECK((back - p).norm() < 1e-3);
      ++checked;
    }
    CHECK(checked == 200);
  }

  TEST_CASE("inverse transform rejects out-of-extent queries")
  {
    NominalPath path({Vec2{0.0, 0.0}, Vec2{10.0, 0.0}});
    CHECK_THROWS_AS(
      from_path_relative(path, 8.0, PathRelativePoint{5.0, 0.0}), OutOfPathExtentError);
    CHECK_THROWS_AS(
      from_path_relative(path, 2.0, PathRelativePoint{-3.0, 0.0}), OutOfPathExtentError);
  }

  TEST_CASE("mesh on a straight path is the rectangular lattice")
  {
    NominalPath path({Vec2{0.0, 0.0}, Vec2{50.0, 0.0}});
    GridSpec spec;
    spec.dx = 1.0;
    spec.dy = 1.0;
    spec.along_extent = 10.0;
    spec.cross_extent = 4.0;
    spec.dt = 0.5;
    spec.t_max = 1.0;
    const CurvilinearMesh mesh = build_curvilinear_mesh(path, spec, 5.0);
    CHECK_FALSE(mesh.has_overlapping_cells);
    REQUIRE(mesh.corners.size() == 11u * 5u);
    for (int ia = 0; ia < spec.n_along(); ++ia) {
      for (int ic = 0; ic < spec.n_cross(); ++ic) {
        CHECK(mesh.cell_area(ia, ic) == doctest::Approx(1.0));
      }
    }
    const Vec2 & c = mesh.cell_center(0, 0);
    CHECK(c.x() == doctest::Approx(5.5));
    CHECK(c.y() == doctest::Approx(-1.5));
  }

  TEST_CASE("mesh cell areas equal the shoelace area of their corners")
  {
    const NominalPath path = wavy_path();
    GridSpec spec;
    spec.dx = 0.5;
    spec.dy = 0.5;
    spec.along_extent = 20.0;
    spec.cross_extent = 6.0;
    spec.dt = 0.5;
    spec.t_max = 1.0;
    const CurvilinearMesh mesh = build_curvilinear_mesh(path, spec, 10.0);
    for (int ia = 0; ia < spec.n_along(); ++ia) {
      for (int ic = 0; ic < spec.n_cross(); ++ic) {
        const auto poly = mesh.cell_polygon(ia, ic);
        CHECK(mesh.cell_area(ia, ic) == doctest::Approx(polygon_area(poly)));
      }
    }
  }

  TEST_CASE("tight curvature flags overlapping cells")
  {
    // Half circle of radius 3; a grid 10 wide reaches past the center.
    std::vector<Vec2> pts;
    for (int i = 0; i <= 60; ++i) {
      const double ang = kPi * i / 60.0;
      pts.emplace_back(3.0 * std::cos(ang), 3.0 * std::sin(ang));
    }
    NominalPath path(std::move(pts));
    GridSpec spec;
    spec.dx = 0.5;
    spec.dy = 0.5;
    spec.along_extent = 4.0;
    spec.cross_extent = 10.0;
    spec.dt = 0.5;
    spec.t_max = 1.0;
    const CurvilinearMesh mesh = build_curvilinear_mesh(path, spec, 1.0);
    CHECK(mesh.has_overlapping_cells);
    CHECK(mesh.max_overlap_fraction > 0.1);
  }

  TEST_CASE("mesh construction rejects grids that outrun the path")
  {
    NominalPath path({Vec2{0.0, 0.0}, Vec2{20.0, 0.0}});
    GridSpec spec;
    spec.dx = 1.0;
    spec.dy = 1.0;
    spec.along_extent = 15.0;
    spec.cross_extent = 4.0;
    spec.dt = 0.5;
    spec.t_max = 1.0;
    CHECK_THROWS_AS(build_curvilinear_mesh(path, spec, 10.0), OutOfPathExtentError);
    CHECK_NOTHROW(build_curvilinear_mesh(path, spec, 5.0));
  }
}
