// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

#include "bcalc/fields/field.hpp"
#include "bcalc/manifolds/manifold.hpp"
#include "bcalc/manifolds/quadrature.hpp"

namespace bcalc::geom {

enum class Pairing { Geometric, Inner, Outer, Commutator };

const char* pairing_name(Pairing p);
Multivector apply_pairing(Pairing p, const Multivector& measure, const Multivector& value);

// Value contributed at one node (before multiplication by the node weight).
using Integrand = std::function<Multivector(const DirectedMeasure&)>;

// Sum over charts and nodes of weight * integrand(measure). With workers > 1,
// node values are evaluated in parallel but always accumulated sequentially in
// chart/node order, so the result does not depend on the worker count.
Multivector integrate(const Manifold& m, const QuadratureRule& rule, const Integrand& integrand, int workers = 1);

// Sum of weight * pairing(dx^m, F(x)).
Multivector integrate_directed(const Manifold& m, Pairing pairing, const calc::FieldEvaluator& f,
                               const QuadratureRule& rule, int workers = 1);

// Directed content: integral of dx^m.
Multivector directed_content(const Manifold& m, const QuadratureRule& rule);
// Scalar content: integral of |dx^m|.
double scalar_content(const Manifold& m, const QuadratureRule& rule);

}  // namespace bcalc::geom
