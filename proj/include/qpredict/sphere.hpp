#pragma once

#include <span>
#include <vector>

#include "qpredict/linalg.hpp"

namespace qpredict {

/// Point i of an n-point Fibonacci lattice on the unit sphere. Points are
/// equal-area in z: z_i = 1 - (2i + 1)/n, azimuth advancing by the golden angle.
Vec3 fibonacci_point(int i, int n);

std::vector<Vec3> fibonacci_sphere(int n);

/// Pairwise (cascade) summation; the result depends only on the order of `xs`.
double pairwise_sum(std::span<const double> xs);

}  // namespace qpredict
