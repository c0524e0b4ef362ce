#pragma once

#include <vector>

#include "spherekit/complex.hpp"

namespace spherekit {

/// Reduced Betti numbers over Z/2 in dimensions 0..dim. The complex {∅} has
/// an empty result; its only homology sits in dimension −1.
std::vector<int> betti_z2(const Complex& complex);

/// Reduced Z/2 Betti number in dimension i ≥ −1.
int reduced_betti_z2(const Complex& complex, int i);

/// True iff the complex has the reduced Z/2 homology of a sphere of the given
/// dimension (dimension −1 is the complex {∅}).
bool has_sphere_homology(const Complex& complex, int sphere_dim);

/// Pure, and every face link (the empty face included) has the Z/2 homology
/// of a sphere of dimension d − 1 − |σ|.
bool is_homology_sphere(const Complex& complex);

/// Every reduced Z/2 Betti number vanishes.
bool is_acyclic_z2(const Complex& complex);

}  // namespace spherekit
