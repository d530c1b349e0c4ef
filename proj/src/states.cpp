#include "ew/states.hpp"

#include <cmath>

namespace ew {

void validate_density(const CMat& rho, const std::string& what) {
    if (rho.hermiticity_defect() > 1e-12) throw StateError(what + ": not Hermitian");
    if (std::abs(rho.trace() - cd(1.0)) > 1e-12) throw StateError(what + ": trace != 1");
    double me = min_eigenvalue(rho);
    if (me < -1e-10) throw StateError(what + ": negative eigenvalue " + std::to_string(me));
}

DensityOp product_density(const ProductState& gamma) {
    if (std::abs(norm(gamma.alpha) - 1.0) > 1e-12 || std::abs(norm(gamma.beta) - 1.0) > 1e-12)
        throw StateError("product_density: factors must be unit vectors");
    CMat rho(9);
    std::array<cd, 9> psi;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) psi[static_cast<size_t>(3 * i + k)] = gamma.alpha[i] * gamma.beta[k];
    for (int r = 0; r < 9; ++r)
        for (int c = 0; c < 9; ++c) rho(r, c) = psi[r] * std::conj(psi[c]);
    return {rho, "product"};
}

DensityOp horodecki(double b) {
    if (b < 0.0 || b > 5.0) throw StateError("horodecki: b out of range [0,5]");
    const double s3 = std::sqrt(3.0);
    CMat rho = (1.0 / 9.0) * CMat::identity(9);
    const int plus[] = {1, 4, 6};
    const int minus[] = {2, 5, 7};
    for (int k : plus) rho += (1.0 / 21.0) * kron(gellmann(k), gellmann(k));
    for (int k : minus) rho -= (1.0 / 21.0) * kron(gellmann(k), gellmann(k));
    rho -= (1.0 / 84.0) * (kron(gellmann(3), gellmann(3)) + kron(gellmann(8), gellmann(8)));
    rho -= (s3 / 84.0) * (5.0 - 2.0 * b) *
           (kron(gellmann(3), gellmann(8)) - kron(gellmann(8), gellmann(3)));
    validate_density(rho, "horodecki(" + std::to_string(b) + ")");
    return {rho, "horodecki(" + std::to_string(b) + ")"};
}

DensityOp ppt_family(double a, double c) {
    if (!(a > 0.0) || c < 0.0 || c > a / std::sqrt(3.0) + 1e-12)
        throw StateError("ppt_family: require a > 0 and 0 <= c <= a/sqrt(3)");
    double f = c / (6.0 * (a + 2.0 * c));
    double g = (a - c) / (6.0 * (a + 2.0 * c));
    CMat rho = (1.0 / 9.0) * CMat::identity(9);
    const std::pair<int, int> pairs[] = {{1, 1}, {2, 2}, {1, 2}, {2, 1}, {4, 4}, {5, 5},
                                         {4, 5}, {5, 4}, {6, 6}, {7, 7}, {6, 7}, {7, 6}};
    for (auto [i, j] : pairs) rho += f * kron(gellmann(i), gellmann(j));
    rho += g * (kron(gellmann(3), gellmann(3)) + kron(gellmann(8), gellmann(8)));
    std::string tag = "ppt-family(" + std::to_string(a) + "," + std::to_string(c) + ")";
    validate_density(rho, tag);
    DensityOp out{rho, tag};
    auto [ppt, me] = is_ppt(out);
    if (!ppt) throw StateError(tag + ": partial transpose eigenvalue " + std::to_string(me));
    return out;
}

std::pair<bool, double> is_ppt(const DensityOp& rho) {
    double me = min_eigenvalue(partial_transpose_first(rho.rho));
    return {me >= -1e-10, me};
}

}  // namespace ew
