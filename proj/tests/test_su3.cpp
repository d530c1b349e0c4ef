#include <random>

#include "doctest.h"
#include "ew/su3.hpp"

using namespace ew;

TEST_CASE("Gell-Mann trace orthogonality is exact") {
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j) {
            cd t = (gellmann(i) * gellmann(j)).trace();
            double want = (i == j) ? 2.0 : 0.0;
            CHECK(std::abs(t - want) <= 1e-15);
        }
}

TEST_CASE("Gell-Mann matrices are traceless and Hermitian") {
    for (int k = 1; k <= 8; ++k) {
        CHECK(std::abs(gellmann(k).trace()) <= 1e-15);
        CHECK(gellmann(k).hermiticity_defect() == 0.0);
    }
}

TEST_CASE("bloch closed forms agree with matrix expectations") {
    std::mt19937_64 rng(4242);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int t = 0; t < 200; ++t) {
        Vec3 a;
        for (auto& x : a) x = cd(gauss(rng), gauss(rng));
        a = normalized(a);
        auto b = bloch(a);
        double s = 0.0;
        for (int k = 1; k <= 8; ++k) {
            std::vector<cd> v{a[0], a[1], a[2]};
            auto mv = gellmann(k).apply(v);
            cd e = 0.0;
            for (int r = 0; r < 3; ++r) e += std::conj(v[static_cast<size_t>(r)]) * mv[static_cast<size_t>(r)];
            CHECK(std::abs(e.imag()) < 1e-13);
            CHECK(b[static_cast<size_t>(k - 1)] == doctest::Approx(e.real()).epsilon(1e-12));
            s += b[static_cast<size_t>(k - 1)] * b[static_cast<size_t>(k - 1)];
        }
        CHECK(std::abs(s - 4.0 / 3.0) <= 1e-12);
    }
}

TEST_CASE("bloch rejects non-normalized input") {
    CHECK_THROWS(bloch(Vec3{2.0, 0.0, 0.0}));
}

TEST_CASE("eigenstates satisfy their eigenvalue equations") {
    auto resid = [](int k, double m) {
        Vec3 v = eigenstate(k, m);
        std::vector<cd> mv = gellmann(k).apply({v[0], v[1], v[2]});
        double d = 0.0;
        for (int r = 0; r < 3; ++r) d = std::max(d, std::abs(mv[static_cast<size_t>(r)] - m * v[static_cast<size_t>(r)]));
        return d;
    };
    for (int k = 1; k <= 7; ++k)
        for (double m : {1.0, -1.0, 0.0}) CHECK(resid(k, m) <= 1e-15);
    double s3 = std::sqrt(3.0);
    CHECK(resid(8, 1.0 / s3) <= 1e-15);
    CHECK(resid(8, -2.0 / s3) <= 1e-15);
    // phase convention and normalization
    for (int k = 1; k <= 8; ++k) {
        Vec3 v = eigenstate(k, k == 8 ? 1.0 / s3 : 1.0);
        CHECK(norm(v) == doctest::Approx(1.0).epsilon(1e-15));
        for (int r = 0; r < 3; ++r)
            if (std::abs(v[static_cast<size_t>(r)]) > 1e-12) {
                CHECK(v[static_cast<size_t>(r)].imag() == 0.0);
                CHECK(v[static_cast<size_t>(r)].real() > 0.0);
                break;
            }
    }
}

TEST_CASE("vector helpers") {
    Vec3 a{1.0, cd(0.0, 1.0), 0.0};
    CHECK(norm(a) == doctest::Approx(std::sqrt(2.0)));
    Vec3 u = normalized(a);
    CHECK(norm(u) == doctest::Approx(1.0));
    CHECK(inner(u, u).real() == doctest::Approx(1.0));
    // conjugate-linear in the first slot
    CHECK(std::abs(inner(a, Vec3{cd(0.0, 1.0), 1.0, 0.0})) == doctest::Approx(0.0));
    CHECK(inner(Vec3{1.0, 0.0, 0.0}, Vec3{cd(0.0, 1.0), 0.0, 0.0}) == cd(0.0, 1.0));
    CHECK(inner(Vec3{cd(0.0, 1.0), 0.0, 0.0}, Vec3{1.0, 0.0, 0.0}) == cd(0.0, -1.0));
}
