#include "ew/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

namespace ew {

namespace {

// 3x3 contraction over the first factor: B[k,l] = sum conj(a_i) a_j W[(i,k),(j,l)].
CMat contract_first(const CMat& W, const Vec3& a) {
    CMat B(3);
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
            cd s = 0.0;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) s += std::conj(a[i]) * a[j] * W(3 * i + k, 3 * j + l);
            B(k, l) = s;
        }
    return B;
}

// 3x3 contraction over the second factor: A[i,j] = sum conj(b_k) b_l W[(i,k),(j,l)].
CMat contract_second(const CMat& W, const Vec3& b) {
    CMat A(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            cd s = 0.0;
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) s += std::conj(b[k]) * b[l] * W(3 * i + k, 3 * j + l);
            A(i, j) = s;
        }
    return A;
}

Vec3 min_eigvec3(const CMat& H, double* value) {
    auto d = hermitian_eigen(H);
    *value = d.eigenvalues[0];
    return {d.vectors(0, 0), d.vectors(1, 0), d.vectors(2, 0)};
}

struct RestartOutcome {
    double value = 0.0;
    ProductState state{};
    bool converged = false;
};

RestartOutcome run_restart(const CMat& W, const OptimizerConfig& cfg, int restart) {
    std::mt19937_64 rng(cfg.seed + 0x9e3779b97f4a7c15ULL * static_cast<unsigned long long>(restart + 1));
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec3 a;
    for (auto& x : a) x = cd(gauss(rng), gauss(rng));
    a = normalized(a);

    RestartOutcome out;
    double prev = std::numeric_limits<double>::infinity();
    int small_steps = 0;
    Vec3 b{1.0, 0.0, 0.0};
    double val = 0.0;
    for (int it = 0; it < cfg.max_alternations; ++it) {
        b = min_eigvec3(contract_first(W, a), &val);
        a = min_eigvec3(contract_second(W, b), &val);
        if (prev - val < cfg.seesaw_tol) {
            if (++small_steps >= 3) {
                out.converged = true;
                break;
            }
        } else {
            small_steps = 0;
        }
        prev = val;
    }
    out.value = val;
    out.state = {a, b};
    return out;
}

double product_value(const CMat& W, const ProductState& g) {
    cd s = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 3; ++j)
                for (int l = 0; l < 3; ++l)
                    s += std::conj(g.alpha[i] * g.beta[k]) * W(3 * i + k, 3 * j + l) * g.alpha[j] *
                         g.beta[l];
    return s.real();
}

}  // namespace

std::pair<Vec3, double> seesaw_step(const CMat& W, const Vec3& alpha) {
    if (std::abs(norm(alpha) - 1.0) > 1e-12) throw OptimizeError("seesaw_step: alpha not normalized");
    double val = 0.0;
    Vec3 b = min_eigvec3(contract_first(W, alpha), &val);
    return {b, val};
}

ExtremumResult min_product_expectation(const CMat& W, const OptimizerConfig& cfg) {
    if (W.hermiticity_defect() > 1e-10)
        throw OptimizeError("min_product_expectation: W not Hermitian");
    std::vector<RestartOutcome> outs(static_cast<size_t>(cfg.restarts));
    auto work = [&](int lo, int hi) {
        for (int r = lo; r < hi; ++r) outs[static_cast<size_t>(r)] = run_restart(W, cfg, r);
    };
    int nt = std::max(1, cfg.threads);
    if (nt == 1 || cfg.restarts < 2) {
        work(0, cfg.restarts);
    } else {
        std::vector<std::thread> pool;
        int chunk = (cfg.restarts + nt - 1) / nt;
        for (int t = 0; t < nt; ++t) {
            int lo = t * chunk, hi = std::min(cfg.restarts, lo + chunk);
            if (lo < hi) pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    int converged = 0;
    for (const auto& o : outs) converged += o.converged ? 1 : 0;
    if (converged == 0) throw OptimizeError("min_product_expectation: no restart converged");

    ExtremumResult res;
    res.value = std::numeric_limits<double>::infinity();
    for (int r = 0; r < cfg.restarts; ++r) {
        const auto& o = outs[static_cast<size_t>(r)];
        res.restart_values.push_back(o.value);
        if (o.converged && o.value < res.value) {
            res.value = o.value;
            res.state = o.state;
        }
    }
    for (const auto& o : outs)
        if (o.converged && o.value <= res.value + cfg.cluster_tol) ++res.restarts_agreeing;
    // Report the value through an independent matrix evaluation of the state.
    res.value = product_value(W, res.state);
    return res;
}

ExtremumResult max_product_expectation(const CMat& W, const OptimizerConfig& cfg) {
    CMat neg = W;
    neg *= cd(-1.0);
    ExtremumResult r = min_product_expectation(neg, cfg);
    r.value = -r.value;
    for (auto& v : r.restart_values) v = -v;
    return r;
}

ScanResult parametrized_scan(const CMat& W, int resolution, int threads) {
    if (resolution < 8) throw OptimizeError("parametrized_scan: resolution must be >= 8");
    if (W.hermiticity_defect() > 1e-10) throw OptimizeError("parametrized_scan: W not Hermitian");

    const int P = 24;  // phase grid: multiples of 15 degrees
    const double s3 = std::sqrt(3.0);

    // rho_a (x) rho_b expansion coefficients of the expectation value.
    double c00 = W.trace().real() / 9.0;
    std::array<double, 8> u{}, v{};
    double M[8][8];
    for (int k = 0; k < 8; ++k) {
        u[static_cast<size_t>(k)] = (kron(gellmann(k + 1), CMat::identity(3)) * W).trace().real() / 6.0;
        v[static_cast<size_t>(k)] = (kron(CMat::identity(3), gellmann(k + 1)) * W).trace().real() / 6.0;
        for (int l = 0; l < 8; ++l)
            M[k][l] = (kron(gellmann(k + 1), gellmann(l + 1)) * W).trace().real() / 4.0;
    }

    struct Best {
        double minv = std::numeric_limits<double>::infinity();
        double maxv = -std::numeric_limits<double>::infinity();
        int min_idx[4] = {0, 0, 0, 0};
        int max_idx[4] = {0, 0, 0, 0};
    };

    auto theta_of = [&](int it) { return (M_PI / 2.0) * it / (resolution - 1); };
    auto phi_of = [&](int ip) { return (M_PI / 2.0) * ip / (resolution - 1); };

    auto scan_range = [&](int t_lo, int t_hi) {
        Best best;
        std::vector<std::array<double, 8>> B(static_cast<size_t>(P * P));
        std::vector<std::array<double, 8>> D(static_cast<size_t>(P * P));
        std::vector<double> su(static_cast<size_t>(P * P)), sv(static_cast<size_t>(P * P));
        for (int it = t_lo; it < t_hi; ++it) {
            double th = theta_of(it);
            for (int ip = 0; ip < resolution; ++ip) {
                double ph = phi_of(ip);
                double m0 = std::sin(th) * std::cos(ph);
                double m1 = std::sin(th) * std::sin(ph);
                double m2 = std::cos(th);
                for (int p1 = 0; p1 < P; ++p1)
                    for (int p2 = 0; p2 < P; ++p2) {
                        double f1 = 2.0 * M_PI * p1 / P, f2 = 2.0 * M_PI * p2 / P;
                        auto& b = B[static_cast<size_t>(p1 * P + p2)];
                        b[0] = 2.0 * m0 * m1 * std::cos(f1);
                        b[1] = 2.0 * m0 * m1 * std::sin(f1);
                        b[2] = m0 * m0 - m1 * m1;
                        b[3] = 2.0 * m0 * m2 * std::cos(f2);
                        b[4] = 2.0 * m0 * m2 * std::sin(f2);
                        b[5] = 2.0 * m1 * m2 * std::cos(f2 - f1);
                        b[6] = 2.0 * m1 * m2 * std::sin(f2 - f1);
                        b[7] = (m0 * m0 + m1 * m1 - 2.0 * m2 * m2) / s3;
                    }
                for (int p = 0; p < P * P; ++p) {
                    const auto& b = B[static_cast<size_t>(p)];
                    auto& d = D[static_cast<size_t>(p)];
                    double du = 0.0, dv = 0.0;
                    for (int k = 0; k < 8; ++k) {
                        du += u[static_cast<size_t>(k)] * b[static_cast<size_t>(k)];
                        dv += v[static_cast<size_t>(k)] * b[static_cast<size_t>(k)];
                    }
                    su[static_cast<size_t>(p)] = du;
                    sv[static_cast<size_t>(p)] = dv;
                    for (int l = 0; l < 8; ++l) {
                        double acc = 0.0;
                        for (int k = 0; k < 8; ++k) acc += b[static_cast<size_t>(k)] * M[k][l];
                        d[static_cast<size_t>(l)] = acc;
                    }
                }
                for (int pa = 0; pa < P * P; ++pa) {
                    const auto& d = D[static_cast<size_t>(pa)];
                    double base = c00 + su[static_cast<size_t>(pa)];
                    for (int pb = 0; pb < P * P; ++pb) {
                        const auto& b = B[static_cast<size_t>(pb)];
                        double val = base + sv[static_cast<size_t>(pb)];
                        for (int l = 0; l < 8; ++l)
                            val += d[static_cast<size_t>(l)] * b[static_cast<size_t>(l)];
                        if (val < best.minv) {
                            best.minv = val;
                            best.min_idx[0] = it; best.min_idx[1] = ip;
                            best.min_idx[2] = pa; best.min_idx[3] = pb;
                        }
                        if (val > best.maxv) {
                            best.maxv = val;
                            best.max_idx[0] = it; best.max_idx[1] = ip;
                            best.max_idx[2] = pa; best.max_idx[3] = pb;
                        }
                    }
                }
            }
        }
        return best;
    };

    int nt = std::max(1, threads);
    std::vector<Best> parts(static_cast<size_t>(nt));
    if (nt == 1) {
        parts[0] = scan_range(0, resolution);
    } else {
        std::vector<std::thread> pool;
        int chunk = (resolution + nt - 1) / nt;
        for (int t = 0; t < nt; ++t) {
            int lo = t * chunk, hi = std::min(resolution, lo + chunk);
            pool.emplace_back([&, t, lo, hi] { parts[static_cast<size_t>(t)] = scan_range(lo, hi); });
        }
        for (auto& th : pool) th.join();
    }
    Best best;
    for (const auto& p : parts) {
        if (p.minv < best.minv) { best.minv = p.minv; std::copy(p.min_idx, p.min_idx + 4, best.min_idx); }
        if (p.maxv > best.maxv) { best.maxv = p.maxv; std::copy(p.max_idx, p.max_idx + 4, best.max_idx); }
    }

    auto rebuild = [&](const int idx[4]) {
        double th = theta_of(idx[0]), ph = phi_of(idx[1]);
        double m0 = std::sin(th) * std::cos(ph);
        double m1 = std::sin(th) * std::sin(ph);
        double m2 = std::cos(th);
        auto mk = [&](int p) {
            double f1 = 2.0 * M_PI * (p / P) / P, f2 = 2.0 * M_PI * (p % P) / P;
            return Vec3{m0, m1 * std::exp(cd(0.0, f1)), m2 * std::exp(cd(0.0, f2))};
        };
        return ProductState{mk(idx[2]), mk(idx[3])};
    };

    ScanResult out;
    out.min_value = best.minv;
    out.max_value = best.maxv;
    out.argmin = rebuild(best.min_idx);
    out.argmax = rebuild(best.max_idx);
    out.resolution = resolution;
    out.phase_points = P;
    return out;
}

}  // namespace ew
