#pragma once

namespace qpredict {

// Carlson symmetric elliptic integrals, evaluated by the duplication theorem.
//
//   R_F(x,y,z) = 1/2 int_0^inf dt / sqrt((t+x)(t+y)(t+z))
//   R_D(x,y,z) = 3/2 int_0^inf dt / [(t+z) sqrt((t+x)(t+y)(t+z))]
//   R_G(x,y,z) = 1/(4 pi) int_{S^2} sqrt(x n1^2 + y n2^2 + z n3^2) dOmega

/// x, y, z >= 0 with at most one zero; throws DomainError otherwise.
double carlson_rf(double x, double y, double z);

/// z > 0; x, y >= 0 and not both zero; throws DomainError otherwise.
double carlson_rd(double x, double y, double z);

/// x, y, z >= 0. Symmetric in all three arguments; R_G(0,0,0) = 0.
double carlson_rg(double x, double y, double z);

}  // namespace qpredict
