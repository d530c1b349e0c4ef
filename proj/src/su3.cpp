#include "ew/su3.hpp"

#include <cmath>

namespace ew {

namespace {

const double S3 = std::sqrt(3.0);
const double R2 = 1.0 / std::sqrt(2.0);

std::array<CMat, 9> build_gellmann() {
    std::array<CMat, 9> l;
    for (auto& m : l) m = CMat(3);
    const cd i(0.0, 1.0);
    l[1](0, 1) = 1.0; l[1](1, 0) = 1.0;
    l[2](0, 1) = -i;  l[2](1, 0) = i;
    l[3](0, 0) = 1.0; l[3](1, 1) = -1.0;
    l[4](0, 2) = 1.0; l[4](2, 0) = 1.0;
    l[5](0, 2) = -i;  l[5](2, 0) = i;
    l[6](1, 2) = 1.0; l[6](2, 1) = 1.0;
    l[7](1, 2) = -i;  l[7](2, 1) = i;
    l[8](0, 0) = 1.0 / S3; l[8](1, 1) = 1.0 / S3; l[8](2, 2) = -2.0 / S3;
    return l;
}

}  // namespace

const CMat& gellmann(int k) {
    static const std::array<CMat, 9> l = build_gellmann();
    if (k < 1 || k > 8) throw LinalgError("gellmann: index out of range 1..8");
    return l[static_cast<size_t>(k)];
}

double norm(const Vec3& v) {
    return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
}

Vec3 normalized(const Vec3& v) {
    double n = norm(v);
    if (n == 0.0) throw LinalgError("cannot normalize zero vector");
    return {v[0] / n, v[1] / n, v[2] / n};
}

cd inner(const Vec3& a, const Vec3& b) {
    return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1] + std::conj(a[2]) * b[2];
}

std::array<double, 8> bloch(const Vec3& a) {
    if (std::abs(norm(a) - 1.0) > 1e-12) throw LinalgError("bloch: input not normalized");
    cd c01 = std::conj(a[0]) * a[1];
    cd c02 = std::conj(a[0]) * a[2];
    cd c12 = std::conj(a[1]) * a[2];
    double n0 = std::norm(a[0]), n1 = std::norm(a[1]), n2 = std::norm(a[2]);
    return {2.0 * c01.real(), 2.0 * c01.imag(), n0 - n1,
            2.0 * c02.real(), 2.0 * c02.imag(), 2.0 * c12.real(),
            2.0 * c12.imag(), (n0 + n1 - 2.0 * n2) / S3};
}

Vec3 eigenstate(int k, double m) {
    auto bad = [&] { throw LinalgError("eigenstate: m is not an eigenvalue of lambda_k"); };
    auto pm = [&]() -> double {
        if (std::abs(m - 1.0) < 1e-9) return 1.0;
        if (std::abs(m + 1.0) < 1e-9) return -1.0;
        if (std::abs(m) < 1e-9) return 0.0;
        bad();
        return 0.0;
    };
    const cd i(0.0, 1.0);
    switch (k) {
        case 1: { double s = pm(); return s == 0.0 ? Vec3{0, 0, 1} : Vec3{R2, s * R2, 0}; }
        case 2: { double s = pm(); return s == 0.0 ? Vec3{0, 0, 1} : Vec3{R2, s * i * R2, 0}; }
        case 3: { double s = pm(); return s == 0.0 ? Vec3{0, 0, 1}
                                    : (s > 0 ? Vec3{1, 0, 0} : Vec3{0, 1, 0}); }
        case 4: { double s = pm(); return s == 0.0 ? Vec3{0, 1, 0} : Vec3{R2, 0, s * R2}; }
        case 5: { double s = pm(); return s == 0.0 ? Vec3{0, 1, 0} : Vec3{R2, 0, s * i * R2}; }
        case 6: { double s = pm(); return s == 0.0 ? Vec3{1, 0, 0} : Vec3{0, R2, s * R2}; }
        case 7: { double s = pm(); return s == 0.0 ? Vec3{1, 0, 0} : Vec3{0, R2, s * i * R2}; }
        case 8: {
            if (std::abs(m - 1.0 / S3) < 1e-9) return {1, 0, 0};  // degenerate; fixed convention
            if (std::abs(m + 2.0 / S3) < 1e-9) return {0, 0, 1};
            bad();
            return {};
        }
        default:
            throw LinalgError("eigenstate: index out of range 1..8");
    }
}

}  // namespace ew
