#pragma once

#include <utility>
#include <vector>

#include "ew/states.hpp"

namespace ew {

struct OptimizerConfig {
    int restarts = 64;
    double seesaw_tol = 1e-12;
    int max_alternations = 500;
    unsigned long long seed = 20240901ULL;
    double cluster_tol = 1e-8;
    int threads = 1;
};

struct ExtremumResult {
    double value = 0.0;
    ProductState state{};
    int restarts_agreeing = 0;
    std::vector<double> restart_values;  // per-restart converged endpoints
};

class OptimizeError : public std::runtime_error {
public:
    explicit OptimizeError(const std::string& msg) : std::runtime_error(msg) {}
};

// One half-step of the alternating minimization: the optimal beta for fixed
// alpha is the minimal eigenvector of the 3x3 contraction
// B[k,l] = sum_{i,j} conj(alpha_i) alpha_j W[(i,k),(j,l)].
std::pair<Vec3, double> seesaw_step(const CMat& W, const Vec3& alpha);

// Multi-start alternating see-saw minimization of <a(x)b|W|a(x)b> over unit
// product states.  Deterministic for a fixed seed; per-restart RNG streams
// derive from (seed, restart index) so threaded and serial runs agree.
ExtremumResult min_product_expectation(const CMat& W, const OptimizerConfig& cfg);

// Maximization as minimization of -W.
ExtremumResult max_product_expectation(const CMat& W, const OptimizerConfig& cfg);

struct ScanResult {
    double min_value = 0.0;
    double max_value = 0.0;
    ProductState argmin{};
    ProductState argmax{};
    int resolution = 0;
    int phase_points = 0;
};

// Independent coarse oracle: grid evaluation over the shared-modulus
// parametrization |alpha| = (sin t cos p, sin t sin p, cos t) = |beta| with
// t = t', p = p' and independently gridded relative phases on each factor.
// resolution >= 8 controls the t and p grids; phases use 24 points (15-degree
// steps, covering the closed-form extremizers of the built-in operators).
ScanResult parametrized_scan(const CMat& W, int resolution, int threads = 1);

}  // namespace ew
