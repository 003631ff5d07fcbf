// SPDX-License-Identifier: Apache-2.0

#include "bcalc/manifolds/library.hpp"

#include <cmath>
#include <numbers>

namespace bcalc::geom {

namespace {

constexpr double kQuarter = std::numbers::pi / 2.0;

Point offset(const Point& c, int n, std::initializer_list<double> d) {
  Point p = c.embedded(n);
  int i = 0;
  for (double v : d) p[i++] += v;
  return p;
}

Point direction(int n, std::initializer_list<double> d) { return offset(Point(n), n, d); }

Multivector subspace_blade(int n, int m) {
  const Algebra alg(n);
  return Multivector::blade(alg, ga::BladeIndex{(1u << m) - 1u});
}

void require_ambient(int n, int m, const char* what) {
  if (n < m || n > ga::kMaxDim) throw std::invalid_argument(std::string(what) + ": ambient dimension too small");
}

Chart point_chart(const Point& p) {
  return Chart(0, p.dim(), [p](std::span<const double>) { return ChartPoint{p, {}}; });
}

Chart segment_chart(const Point& start, double length, int n) {
  return Chart(1, n, [start, length, n](std::span<const double> u) {
    ChartPoint cp{offset(start, n, {length * u[0]}), {}};
    cp.tangents[0] = direction(n, {length});
    return cp;
  });
}

// Quarter arc [theta0, theta0 + pi/2] of the circle about c.
Chart arc_chart(const Point& c, double radius, double theta0, int n) {
  return Chart(1, n, [c, radius, theta0, n](std::span<const double> u) {
    const double t = theta0 + kQuarter * u[0];
    ChartPoint cp{offset(c, n, {radius * std::cos(t), radius * std::sin(t)}), {}};
    cp.tangents[0] = direction(n, {-kQuarter * radius * std::sin(t), kQuarter * radius * std::cos(t)});
    return cp;
  });
}

Chart sector_chart(const Point& c, double r_in, double r_out, double theta0, int n) {
  return Chart(2, n, [c, r_in, r_out, theta0, n](std::span<const double> u) {
    const double r = r_in + (r_out - r_in) * u[0];
    const double t = theta0 + kQuarter * u[1];
    const double ct = std::cos(t), st = std::sin(t);
    ChartPoint cp{offset(c, n, {r * ct, r * st}), {}};
    cp.tangents[0] = direction(n, {(r_out - r_in) * ct, (r_out - r_in) * st});
    cp.tangents[1] = direction(n, {-kQuarter * r * st, kQuarter * r * ct});
    return cp;
  });
}

// Polar angle in [phi0, phi0 + pi/2], azimuth in [theta0, theta0 + pi/2].
Chart sphere_patch(const Point& c, double radius, double phi0, double theta0, int n) {
  return Chart(2, n, [c, radius, phi0, theta0, n](std::span<const double> u) {
    const double p = phi0 + kQuarter * u[0];
    const double t = theta0 + kQuarter * u[1];
    const double sp = std::sin(p), cpp = std::cos(p), st = std::sin(t), ct = std::cos(t);
    ChartPoint cp{offset(c, n, {radius * sp * ct, radius * sp * st, radius * cpp}), {}};
    cp.tangents[0] = direction(n, {kQuarter * radius * cpp * ct, kQuarter * radius * cpp * st, -kQuarter * radius * sp});
    cp.tangents[1] = direction(n, {-kQuarter * radius * sp * st, kQuarter * radius * sp * ct, 0.0});
    return cp;
  });
}

Chart ball_patch(const Point& c, double radius, double phi0, double theta0, int n) {
  return Chart(3, n, [c, radius, phi0, theta0, n](std::span<const double> u) {
    const double r = radius * u[0];
    const double p = phi0 + kQuarter * u[1];
    const double t = theta0 + kQuarter * u[2];
    const double sp = std::sin(p), cpp = std::cos(p), st = std::sin(t), ct = std::cos(t);
    ChartPoint cp{offset(c, n, {r * sp * ct, r * sp * st, r * cpp}), {}};
    cp.tangents[0] = direction(n, {radius * sp * ct, radius * sp * st, radius * cpp});
    cp.tangents[1] = direction(n, {kQuarter * r * cpp * ct, kQuarter * r * cpp * st, -kQuarter * r * sp});
    cp.tangents[2] = direction(n, {-kQuarter * r * sp * st, kQuarter * r * sp * ct, 0.0});
    return cp;
  });
}

Point radial_unit(const Point& c, const Point& x) {
  Point d = x - c.embedded(x.dim());
  return d * (1.0 / d.norm());
}

std::vector<Chart> circle_arcs(const Point& c, double radius, int n) {
  std::vector<Chart> arcs;
  for (int k = 0; k < 4; ++k) arcs.push_back(arc_chart(c, radius, k * kQuarter, n));
  return arcs;
}

std::vector<Chart> sphere_patches(const Point& c, double radius, int n) {
  std::vector<Chart> patches;
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 4; ++k) patches.push_back(sphere_patch(c, radius, i * kQuarter, k * kQuarter, n));
  }
  return patches;
}

std::vector<BoundaryPiece> radial_pieces(std::vector<Chart> charts, const Point& c, double sign) {
  std::vector<BoundaryPiece> pieces;
  for (auto& ch : charts) {
    pieces.push_back({std::move(ch), [c, sign](const Point& x) { return radial_unit(c, x) * sign; }});
  }
  return pieces;
}

Manifold segment_from(const Point& start, double length, int n) {
  require_ambient(n, 1, "segment");
  if (!(length > 0.0)) throw std::invalid_argument("segment: length must be positive");
  const Point end = offset(start, n, {length});
  auto boundary = [start = start.embedded(n), end, n] {
    std::vector<BoundaryPiece> pieces;
    pieces.push_back({point_chart(end), [n](const Point&) { return direction(n, {1.0}); }});
    pieces.push_back({point_chart(start), [n](const Point&) { return direction(n, {-1.0}); }});
    return pieces;
  };
  return Manifold("segment", 1, n, {segment_chart(start, length, n)}, subspace_blade(n, 1), boundary);
}

}  // namespace

Manifold segment(double a, double b, int ambient_dim) {
  return segment_from(direction(ambient_dim, {a}), b - a, ambient_dim);
}

Manifold circle(const Point& centre, double radius, int ambient_dim) {
  require_ambient(ambient_dim, 2, "circle");
  const Algebra alg(ambient_dim);
  auto charts = orient_charts(circle_arcs(centre, radius, ambient_dim), [alg, centre](const Point& x) {
    const Point r = radial_unit(centre, x);
    return calc::to_vector(alg, direction(alg.dim(), {-r[1], r[0]}));
  });
  return Manifold("circle", 1, ambient_dim, std::move(charts));
}

Manifold annulus(const Point& centre, double r_in, double r_out, int ambient_dim) {
  require_ambient(ambient_dim, 2, "annulus");
  if (!(r_in >= 0.0 && r_out > r_in)) throw std::invalid_argument("annulus: need 0 <= r_in < r_out");
  const Multivector blade = subspace_blade(ambient_dim, 2);
  std::vector<Chart> sectors;
  for (int k = 0; k < 4; ++k) sectors.push_back(sector_chart(centre, r_in, r_out, k * kQuarter, ambient_dim));
  sectors = orient_charts(std::move(sectors), [blade](const Point&) { return blade; });
  auto boundary = [centre, r_in, r_out, ambient_dim] {
    auto pieces = radial_pieces(circle_arcs(centre, r_out, ambient_dim), centre, 1.0);
    if (r_in > 0.0) {
      auto inner = radial_pieces(circle_arcs(centre, r_in, ambient_dim), centre, -1.0);
      pieces.insert(pieces.end(), inner.begin(), inner.end());
    }
    return pieces;
  };
  return Manifold(r_in > 0.0 ? "annulus" : "disk", 2, ambient_dim, std::move(sectors), blade, boundary);
}

Manifold disk(const Point& centre, double radius, int ambient_dim) { return annulus(centre, 0.0, radius, ambient_dim); }

Manifold sphere(const Point& centre, double radius, int ambient_dim) {
  require_ambient(ambient_dim, 3, "sphere");
  const Algebra alg(ambient_dim);
  const Multivector i3 = subspace_blade(ambient_dim, 3);
  auto charts = orient_charts(sphere_patches(centre, radius, ambient_dim), [alg, i3, centre](const Point& x) {
    return ga::geometric_product(i3, calc::to_vector(alg, radial_unit(centre, x)));
  });
  return Manifold("sphere", 2, ambient_dim, std::move(charts));
}

Manifold ball(const Point& centre, double radius, int ambient_dim) {
  require_ambient(ambient_dim, 3, "ball");
  const Multivector blade = subspace_blade(ambient_dim, 3);
  std::vector<Chart> patches;
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 4; ++k) patches.push_back(ball_patch(centre, radius, i * kQuarter, k * kQuarter, ambient_dim));
  }
  patches = orient_charts(std::move(patches), [blade](const Point&) { return blade; });
  auto boundary = [centre, radius, ambient_dim] {
    return radial_pieces(sphere_patches(centre, radius, ambient_dim), centre, 1.0);
  };
  return Manifold("ball", 3, ambient_dim, std::move(patches), blade, boundary);
}

Manifold torus(double ring_radius, double tube_radius) {
  if (!(ring_radius > tube_radius && tube_radius > 0.0)) throw std::invalid_argument("torus: need R > r > 0");
  const Algebra alg(3);
  std::vector<Chart> charts;
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      const double u0 = i * kQuarter, v0 = k * kQuarter;
      charts.emplace_back(2, 3, [=](std::span<const double> u) {
        const double a = u0 + kQuarter * u[0];
        const double b = v0 + kQuarter * u[1];
        const double w = ring_radius + tube_radius * std::cos(b);
        ChartPoint cp{Point{w * std::cos(a), w * std::sin(a), tube_radius * std::sin(b)}, {}};
        cp.tangents[0] = Point{-kQuarter * w * std::sin(a), kQuarter * w * std::cos(a), 0.0};
        cp.tangents[1] = Point{-kQuarter * tube_radius * std::sin(b) * std::cos(a),
                               -kQuarter * tube_radius * std::sin(b) * std::sin(a), kQuarter * tube_radius * std::cos(b)};
        return cp;
      });
    }
  }
  const Multivector i3 = ga::pseudoscalar(alg);
  charts = orient_charts(std::move(charts), [alg, i3, ring_radius](const Point& x) {
    const double rho = std::hypot(x[0], x[1]);
    const Point ring{ring_radius * x[0] / rho, ring_radius * x[1] / rho, 0.0};
    return ga::geometric_product(i3, calc::to_vector(alg, radial_unit(ring, x)));
  });
  return Manifold("torus", 2, 3, std::move(charts));
}

Manifold unit_cell(const Point& centre, double radius, int cell_dim, int ambient_dim) {
  switch (cell_dim) {
    case 1:
      return segment_from(offset(centre, ambient_dim, {-radius}), 2.0 * radius, ambient_dim);
    case 2:
      return disk(centre, radius, ambient_dim);
    case 3:
      return ball(centre, radius, ambient_dim);
    default:
      throw std::invalid_argument("unit_cell: cell dimension must be 1, 2 or 3");
  }
}

const std::vector<ManifoldInfo>& manifold_catalog() {
  static const std::vector<ManifoldInfo> infos = {
      {"segment01", "segment [0,1] in R^1"},
      {"unit_circle", "closed unit circle in R^2"},
      {"unit_disk", "unit disk in R^2, measure e12 dA"},
      {"annulus", "annulus 0.5 <= r <= 1 in R^2"},
      {"unit_sphere", "closed unit sphere in R^3, measure I3 n dS"},
      {"unit_sphere_r4", "unit sphere in the e4 = 0 hyperplane of R^4"},
      {"unit_ball", "unit ball in R^3, measure I3 dV"},
      {"unit_ball_r4", "unit ball in the e4 = 0 hyperplane of R^4"},
      {"torus", "torus R = 2, r = 0.5 about e3"},
  };
  return infos;
}

Manifold named_manifold(std::string_view id) {
  if (id == "segment01") return segment(0.0, 1.0, 1);
  if (id == "unit_circle") return circle(Point(2), 1.0, 2);
  if (id == "unit_disk") return disk(Point(2), 1.0, 2);
  if (id == "annulus") return annulus(Point(2), 0.5, 1.0, 2);
  if (id == "unit_sphere") return sphere(Point(3), 1.0, 3);
  if (id == "unit_sphere_r4") return sphere(Point(4), 1.0, 4);
  if (id == "unit_ball") return ball(Point(3), 1.0, 3);
  if (id == "unit_ball_r4") return ball(Point(4), 1.0, 4);
  if (id == "torus") return torus();
  throw UnknownId("manifold", std::string(id));
}

}  // namespace bcalc::geom
