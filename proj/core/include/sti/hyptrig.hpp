#pragma once

#include "sti/angles.hpp"

namespace sti {

/// Side lengths, the altitude to side c, and the signed strength
/// a + b - c - h of a hyperbolic triangle (curvature -1).
struct TriangleSolution {
  double a;
  double b;
  double c;
  double h;
  double strength;
};

/// Solves the triangle determined by its angles through the dual law of
/// cosines. cosh(x) - 1 is formed in product form, e.g.
///
///   cosh a - 1 = 2 cos(S/2) cos((beta + gamma - alpha)/2) / (sin beta sin gamma)
///
/// with S the angle sum, so lengths stay accurate for nearly Euclidean
/// (small) triangles. The altitude uses the average of the two equal
/// expressions sinh b sin alpha and sinh a sin beta; the result is therefore
/// bitwise symmetric under AngleTriple::swapped().
TriangleSolution solve_triangle(const AngleTriple& angles) noexcept;

/// a + b > c + h. A strength of exactly zero counts as failure.
bool sti_holds(const AngleTriple& angles) noexcept;

/// (a + b - c) / h. Exceeds 1 exactly when the strong inequality holds; for
/// shrinking triangles it tends to the ratio of the Euclidean limit triangle.
double euclidean_strength_ratio(const AngleTriple& angles) noexcept;

}  // namespace sti
