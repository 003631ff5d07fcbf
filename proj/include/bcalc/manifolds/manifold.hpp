// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcalc/fields/field.hpp"

namespace bcalc::geom {

using calc::Point;
using ga::Algebra;
using ga::Multivector;

inline constexpr int kMaxCellDim = 3;

struct ChartPoint {
  Point x;
  // d x / d u_i for i < param_dim.
  std::array<Point, kMaxCellDim> tangents;
};

// Smooth map [0,1]^m -> R^n with an orientation sign.
class Chart {
 public:
  using Map = std::function<ChartPoint(std::span<const double>)>;

  Chart(int param_dim, int ambient_dim, Map map, int orientation = 1);

  int param_dim() const { return param_dim_; }
  int ambient_dim() const { return ambient_dim_; }
  int orientation() const { return orientation_; }
  Chart with_orientation(int orientation) const;

  ChartPoint evaluate(std::span<const double> u) const;

 private:
  int param_dim_;
  int ambient_dim_;
  Map map_;
  int orientation_;
};

class DegenerateMeasure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The m-vector element dx^m at one parameter point: mvector is
// orientation * (dx/du_1 ^ ... ^ dx/du_m), weight the quadrature weight.
struct DirectedMeasure {
  Multivector mvector;
  double weight = 1.0;
  Point x;
};

// Throws DegenerateMeasure for a vanishing or non-finite tangent wedge.
DirectedMeasure directed_measure(const Chart& chart, std::span<const double> u, double weight = 1.0);

struct BoundaryPiece {
  Chart chart;
  // Unit outward normal, lying in the parent manifold, at a point of this piece.
  std::function<Point(const Point&)> outward_normal;
};

// Oriented m-cell in R^n built from charts. Flat manifolds carry their unit
// oriented tangent blade; manifolds with boundary carry a generator for it.
class Manifold {
 public:
  using BoundaryGenerator = std::function<std::vector<BoundaryPiece>()>;

  Manifold(std::string name, int dim, int ambient_dim, std::vector<Chart> charts,
           std::optional<Multivector> tangent_blade = std::nullopt, BoundaryGenerator boundary = {});

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  int ambient_dim() const { return ambient_dim_; }
  Algebra algebra() const { return Algebra(ambient_dim_); }
  const std::vector<Chart>& charts() const { return charts_; }
  const std::optional<Multivector>& tangent_blade() const { return tangent_blade_; }
  bool has_boundary() const { return static_cast<bool>(boundary_); }
  std::vector<BoundaryPiece> boundary_pieces() const;

  // Every chart orientation negated.
  Manifold flipped() const;

 private:
  std::string name_;
  int dim_;
  int ambient_dim_;
  std::vector<Chart> charts_;
  std::optional<Multivector> tangent_blade_;
  BoundaryGenerator boundary_;
};

// Boundary measure direction induced by a unit tangent blade I_m and outward
// unit normal n: I_m . n. For a segment this gives +1 at the far end and -1 at
// the near end; for the unit disk it traverses the circle clockwise.
Multivector induced_boundary_blade(const Multivector& tangent_blade, const Multivector& outward_normal);

// Boundary with every chart oriented by induced_boundary_blade. A manifold
// without boundary (or a boundary itself) yields an empty manifold.
// Throws std::invalid_argument when M has a boundary but no tangent blade.
Manifold boundary_of(const Manifold& m);

// Sets each chart's orientation so its measure at the parameter centre has a
// positive scalar product with reference(x).
std::vector<Chart> orient_charts(std::vector<Chart> charts, const std::function<Multivector(const Point&)>& reference);

}  // namespace bcalc::geom
