#pragma once

#include <array>

#include "ew/linalg.hpp"

namespace ew {

using Vec3 = std::array<cd, 3>;

// The eight Gell-Mann matrices, k in 1..8.
const CMat& gellmann(int k);

// b_k = <alpha|lambda_k|alpha> via the closed forms; requires ||alpha|| = 1
// within 1e-12.  The squared components always sum to 4/3.
std::array<double, 8> bloch(const Vec3& alpha);

// Unit eigenvector of lambda_k with eigenvalue m.  Eigenvalues are {+1,-1,0}
// for k in 1..7 and {1/sqrt(3) (twice), -2/sqrt(3)} for k = 8; the degenerate
// 1/sqrt(3) eigenvalue is represented by (1,0,0).  Phase convention: first
// nonzero component real positive.
Vec3 eigenstate(int k, double m);

double norm(const Vec3& v);
Vec3 normalized(const Vec3& v);
cd inner(const Vec3& a, const Vec3& b);  // conjugate-linear in the first slot

}  // namespace ew
