#pragma once

#include <string>
#include <utility>

#include "ew/su3.hpp"

namespace ew {

struct ProductState {
    Vec3 alpha;
    Vec3 beta;
};

struct DensityOp {
    CMat rho;            // 9x9, Hermitian, unit trace, PSD
    std::string origin;  // "product", "horodecki(b)", "ppt-family(a,c)", "custom"
};

class StateError : public std::runtime_error {
public:
    explicit StateError(const std::string& msg) : std::runtime_error(msg) {}
};

// Rank-1 projector onto alpha (x) beta.
DensityOp product_density(const ProductState& gamma);

// One-parameter bound-entangled family, 0 <= b <= 5.  PPT exactly for
// b in [1,4]; separable for [2,3].
DensityOp horodecki(double b);

// Two-parameter PPT family: a > 0, 0 <= c <= a/sqrt(3).
DensityOp ppt_family(double a, double c);

// (is PPT, min eigenvalue of rho^{T1}); threshold -1e-10.
std::pair<bool, double> is_ppt(const DensityOp& rho);

// Validates Hermiticity, unit trace, and positivity; throws StateError.
void validate_density(const CMat& rho, const std::string& what);

}  // namespace ew
