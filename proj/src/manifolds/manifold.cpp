// SPDX-License-Identifier: Apache-2.0

#include "bcalc/manifolds/manifold.hpp"

#include <cmath>
#include <vector>

namespace bcalc::geom {

Chart::Chart(int param_dim, int ambient_dim, Map map, int orientation)
    : param_dim_(param_dim), ambient_dim_(ambient_dim), map_(std::move(map)), orientation_(orientation) {
  if (param_dim < 0 || param_dim > kMaxCellDim) throw std::invalid_argument("Chart: parameter dimension must be 0..3");
  if (ambient_dim < param_dim || ambient_dim > ga::kMaxDim) throw std::invalid_argument("Chart: bad ambient dimension");
  if (orientation != 1 && orientation != -1) throw std::invalid_argument("Chart: orientation must be +1 or -1");
  if (!map_) throw std::invalid_argument("Chart: empty map");
}

Chart Chart::with_orientation(int orientation) const {
  Chart c = *this;
  if (orientation != 1 && orientation != -1) throw std::invalid_argument("Chart: orientation must be +1 or -1");
  c.orientation_ = orientation;
  return c;
}

ChartPoint Chart::evaluate(std::span<const double> u) const {
  if (static_cast<int>(u.size()) != param_dim_) throw std::invalid_argument("Chart: parameter point dimension mismatch");
  return map_(u);
}

DirectedMeasure directed_measure(const Chart& chart, std::span<const double> u, double weight) {
  const ChartPoint cp = chart.evaluate(u);
  const Algebra alg(chart.ambient_dim());
  Multivector m = Multivector::scalar(alg, static_cast<double>(chart.orientation()));
  for (int i = 0; i < chart.param_dim(); ++i) {
    m = ga::outer_product(m, calc::to_vector(alg, cp.tangents[static_cast<std::size_t>(i)].embedded(alg.dim())));
  }
  const double n = m.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw DegenerateMeasure("degenerate tangent frame in chart");
  return {m, weight, cp.x.embedded(alg.dim())};
}

Manifold::Manifold(std::string name, int dim, int ambient_dim, std::vector<Chart> charts,
                   std::optional<Multivector> tangent_blade, BoundaryGenerator boundary)
    : name_(std::move(name)),
      dim_(dim),
      ambient_dim_(ambient_dim),
      charts_(std::move(charts)),
      tangent_blade_(std::move(tangent_blade)),
      boundary_(std::move(boundary)) {
  for (const auto& c : charts_) {
    if (c.param_dim() != dim_ || c.ambient_dim() != ambient_dim_) {
      throw std::invalid_argument("Manifold " + name_ + ": chart dimensions disagree");
    }
  }
  if (tangent_blade_) {
    if (tangent_blade_->homogeneous_grade() != dim_ || !(tangent_blade_->algebra() == Algebra(ambient_dim_))) {
      throw std::invalid_argument("Manifold " + name_ + ": tangent blade must be a grade-m element of G_n");
    }
  }
}

std::vector<BoundaryPiece> Manifold::boundary_pieces() const {
  if (!boundary_) return {};
  return boundary_();
}

Manifold Manifold::flipped() const {
  std::vector<Chart> charts;
  for (const auto& c : charts_) charts.push_back(c.with_orientation(-c.orientation()));
  std::optional<Multivector> blade;
  if (tangent_blade_) blade = -*tangent_blade_;
  return Manifold(name_ + "~", dim_, ambient_dim_, std::move(charts), blade, boundary_);
}

Multivector induced_boundary_blade(const Multivector& tangent_blade, const Multivector& outward_normal) {
  return ga::inner_product(tangent_blade, outward_normal);
}

namespace {

std::vector<double> centre(int dim) { return std::vector<double>(static_cast<std::size_t>(dim), 0.5); }

int sign_against(const Multivector& measure, const Multivector& reference) {
  const double s = ga::scalar_product(measure, ga::reverse(reference));
  if (s == 0.0 || !std::isfinite(s)) throw DegenerateMeasure("chart measure is orthogonal to its orientation reference");
  return s > 0 ? 1 : -1;
}

}  // namespace

std::vector<Chart> orient_charts(std::vector<Chart> charts, const std::function<Multivector(const Point&)>& reference) {
  for (auto& c : charts) {
    const auto u = centre(c.param_dim());
    const DirectedMeasure raw = directed_measure(c.with_orientation(1), u);
    c = c.with_orientation(sign_against(raw.mvector, reference(raw.x)));
  }
  return charts;
}

Manifold boundary_of(const Manifold& m) {
  const int bdim = std::max(m.dim() - 1, 0);
  if (!m.has_boundary()) return Manifold("boundary(" + m.name() + ")", bdim, m.ambient_dim(), {});
  if (!m.tangent_blade()) throw std::invalid_argument("boundary_of: manifold " + m.name() + " has no tangent blade");
  const Multivector& blade = *m.tangent_blade();
  const Algebra alg = m.algebra();
  std::vector<Chart> charts;
  for (const auto& piece : m.boundary_pieces()) {
    const auto u = centre(piece.chart.param_dim());
    const DirectedMeasure raw = directed_measure(piece.chart.with_orientation(1), u);
    const Multivector normal = calc::to_vector(alg, piece.outward_normal(raw.x));
    charts.push_back(piece.chart.with_orientation(sign_against(raw.mvector, induced_boundary_blade(blade, normal))));
  }
  return Manifold("boundary(" + m.name() + ")", bdim, m.ambient_dim(), std::move(charts));
}

}  // namespace bcalc::geom
