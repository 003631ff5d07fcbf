// SPDX-License-Identifier: Apache-2.0

#include "bcalc/fields/registry.hpp"

#include <cmath>

namespace bcalc::calc {

namespace {

using ga::blade_of;

Multivector vec(Algebra alg, std::initializer_list<double> c) {
  return Multivector::vector(alg, std::span<const double>(c.begin(), c.size()));
}

struct Entry {
  FieldInfo info;
  FieldEvaluator field;
};

std::vector<Entry> build() {
  const Algebra g1(1), g2(2), g3(3), g4(4);
  std::vector<Entry> e;
  auto add = [&e](std::string id, std::string desc, FieldEvaluator f) { e.push_back({{std::move(id), std::move(desc)}, std::move(f)}); };

  add("cubic1d", "f = x^3 on R^1",
      FieldEvaluator("cubic1d", g1, {0}, [g1](const Point& x) { return Multivector::scalar(g1, x[0] * x[0] * x[0]); }));
  add("cubic_potential2d", "phi = x^2 y on R^2", FieldEvaluator("cubic_potential2d", g2, {0}, [g2](const Point& x) {
        return Multivector::scalar(g2, x[0] * x[0] * x[1]);
      }));
  add("rotor2d", "(-y, x)",
      FieldEvaluator("rotor2d", g2, {1}, [g2](const Point& x) { return vec(g2, {-x[1], x[0]}); }));
  add("radial2d", "(x, y)", FieldEvaluator("radial2d", g2, {1}, [g2](const Point& x) { return vec(g2, {x[0], x[1]}); }));
  add("gaussian_rotor2d", "exp(-|x|^2) (-y, x)", FieldEvaluator("gaussian_rotor2d", g2, {1}, [g2](const Point& x) {
        const double w = std::exp(-(x[0] * x[0] + x[1] * x[1]));
        return vec(g2, {-w * x[1], w * x[0]});
      }));
  add("rotor3d", "(-y, x, 0)",
      FieldEvaluator("rotor3d", g3, {1}, [g3](const Point& x) { return vec(g3, {-x[1], x[0], 0.0}); }));
  add("radial3d", "x", FieldEvaluator("radial3d", g3, {1}, [g3](const Point& x) { return vec(g3, {x[0], x[1], x[2]}); }));

  // I3 e1 = e23, I3 e2 = e31, I3 e3 = e12.
  auto spin = [g3](const Point& x, double w) {
    Multivector b(g3);
    b[blade_of({2, 3})] = w * x[0];
    b[blade_of({1, 3})] = -w * x[1];
    b[blade_of({1, 2})] = w * x[2];
    return b;
  };
  add("radial_spin3d", "I3 x", FieldEvaluator("radial_spin3d", g3, {2}, [spin](const Point& x) { return spin(x, 1.0); }));
  add("gaussian_spin3d", "exp(-|x|^2) I3 x", FieldEvaluator("gaussian_spin3d", g3, {2}, [spin](const Point& x) {
        return spin(x, std::exp(-(x[0] * x[0] + x[1] * x[1] + x[2] * x[2])));
      }));
  add("linear_bivector", "x e12", FieldEvaluator("linear_bivector", g3, {2}, [g3](const Point& x) {
        return Multivector::blade(g3, blade_of({1, 2}), x[0]);
      }));
  add("hyper_bivector", "x1 e14 on R^4", FieldEvaluator("hyper_bivector", g4, {2}, [g4](const Point& x) {
        return Multivector::blade(g4, blade_of({1, 4}), x[0]);
      }));
  add("toroidal_bivector", "x ^ e3", FieldEvaluator("toroidal_bivector", g3, {2}, [g3](const Point& x) {
        Multivector b(g3);
        b[blade_of({1, 3})] = x[0];
        b[blade_of({2, 3})] = x[1];
        return b;
      }));
  add("monopole_potential", "I3 x / |x|^3 (render only)",
      FieldEvaluator("monopole_potential", g3, {2}, [spin](const Point& x) {
        const double r = x.norm();
        return spin(x, 1.0 / (r * r * r));
      }));
  add("line_potential3d", "-ln(rho) e3 (render only)", FieldEvaluator("line_potential3d", g3, {1}, [g3](const Point& x) {
        const double rho = std::hypot(x[0], x[1]);
        return Multivector::blade(g3, blade_of({3}), -std::log(rho));
      }));
  return e;
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e = build();
  return e;
}

}  // namespace

const FieldEvaluator& registered_field(std::string_view id) {
  for (const auto& e : entries()) {
    if (e.info.id == id) return e.field;
  }
  throw UnknownId("field", std::string(id));
}

const std::vector<FieldInfo>& field_catalog() {
  static const std::vector<FieldInfo> infos = [] {
    std::vector<FieldInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

}  // namespace bcalc::calc
