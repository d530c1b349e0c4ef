#include "ew/feasible.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace ew {

namespace {

const double S3 = std::sqrt(3.0);

CoordinateFamily make_family(FamilyKind kind) {
    CoordinateFamily f;
    f.kind = kind;
    auto diag = [&] {
        for (int k = 1; k <= 8; ++k) f.labels.push_back({k, k, false});
    };
    switch (kind) {
        case FamilyKind::diag:
            f.name = "diag";
            diag();
            break;
        case FamilyKind::offdiag_a:
            f.name = "offdiag-a";
            diag();
            for (auto [i, j] : {std::pair{1, 2}, {2, 1}, {4, 5}, {5, 4}, {6, 7}, {7, 6}})
                f.labels.push_back({i, j, false});
            break;
        case FamilyKind::offdiag_b:
            f.name = "offdiag-b";
            diag();
            f.labels.push_back({3, 8, true});
            f.labels.push_back({8, 3, true});
            break;
    }
    return f;
}

}  // namespace

const CoordinateFamily& family(FamilyKind kind) {
    static const CoordinateFamily d = make_family(FamilyKind::diag);
    static const CoordinateFamily a = make_family(FamilyKind::offdiag_a);
    static const CoordinateFamily b = make_family(FamilyKind::offdiag_b);
    switch (kind) {
        case FamilyKind::diag: return d;
        case FamilyKind::offdiag_a: return a;
        case FamilyKind::offdiag_b: return b;
    }
    throw FeasibleError("unknown family kind");
}

const CoordinateFamily& family_by_name(const std::string& name) {
    if (name == "diag") return family(FamilyKind::diag);
    if (name == "offdiag-a") return family(FamilyKind::offdiag_a);
    if (name == "offdiag-b") return family(FamilyKind::offdiag_b);
    throw FeasibleError("unknown family: " + name);
}

FeasiblePoint expectation_map(const ProductState& gamma, const CoordinateFamily& fam) {
    auto ba = bloch(gamma.alpha);
    auto bb = bloch(gamma.beta);
    FeasiblePoint p;
    p.coords.reserve(fam.labels.size());
    for (const auto& l : fam.labels)
        p.coords.push_back(label_scale(l) * ba[static_cast<size_t>(l.i - 1)] *
                           bb[static_cast<size_t>(l.j - 1)]);
    p.state = gamma;
    return p;
}

namespace {

std::vector<FeasiblePoint> build_catalog(FamilyKind kind) {
    const CoordinateFamily& fam = family(kind);
    std::vector<std::pair<ProductState, std::vector<double>>> rows;
    const Vec3 e0{1, 0, 0}, e1{0, 1, 0}, e2{0, 0, 1};

    auto coords = [&](std::map<int, double> vals) {
        std::vector<double> c(static_cast<size_t>(fam.dim()), 0.0);
        for (auto [idx, v] : vals) c[static_cast<size_t>(idx)] = v;
        return c;
    };
    // Eigenvector pair rows shared by all three tables: |lambda_k;+1>|lambda_k;+/-1>.
    auto eig_rows = [&] {
        for (int k = 1; k <= 7; ++k)
            for (int s : {+1, -1}) {
                ProductState g{eigenstate(k, 1.0), eigenstate(k, s)};
                std::map<int, double> v;
                v[k - 1] = s;
                if (k <= 3) {
                    v[7] = 1.0 / 3.0;
                } else {
                    v[2] = 0.25;
                    v[7] = 1.0 / 12.0;
                }
                if (kind == FamilyKind::offdiag_b && k >= 4) {
                    double q = (k <= 5) ? -0.25 : 0.25;
                    v[8] = q;
                    v[9] = q;
                }
                if (kind == FamilyKind::offdiag_b && k == 3) continue;  // handled separately
                rows.push_back({g, coords(v)});
            }
    };
    eig_rows();
    switch (kind) {
        case FamilyKind::diag:
            rows.push_back({{e2, e2}, coords({{7, 4.0 / 3.0}})});
            rows.push_back({{e0, e2}, coords({{7, -2.0 / 3.0}})});
            // Same coordinates from the swapped generating state.
            rows.push_back({{e2, e0}, coords({{7, -2.0 / 3.0}})});
            break;
        case FamilyKind::offdiag_a:
            for (int s : {+1, -1}) {
                rows.push_back({{eigenstate(1, 1.0), eigenstate(2, s)},
                                coords({{7, 1.0 / 3.0}, {8, double(s)}})});
                rows.push_back({{eigenstate(2, 1.0), eigenstate(1, s)},
                                coords({{7, 1.0 / 3.0}, {9, double(s)}})});
                rows.push_back({{eigenstate(4, 1.0), eigenstate(5, s)},
                                coords({{2, 0.25}, {7, 1.0 / 12.0}, {10, double(s)}})});
                rows.push_back({{eigenstate(5, 1.0), eigenstate(4, s)},
                                coords({{2, 0.25}, {7, 1.0 / 12.0}, {11, double(s)}})});
                rows.push_back({{eigenstate(6, 1.0), eigenstate(7, s)},
                                coords({{2, 0.25}, {7, 1.0 / 12.0}, {12, double(s)}})});
                rows.push_back({{eigenstate(7, 1.0), eigenstate(6, s)},
                                coords({{2, 0.25}, {7, 1.0 / 12.0}, {13, double(s)}})});
            }
            rows.push_back({{e2, e2}, coords({{7, 4.0 / 3.0}})});
            rows.push_back({{e0, e2}, coords({{7, -2.0 / 3.0}})});
            break;
        case FamilyKind::offdiag_b:
            rows.push_back({{e0, e0}, coords({{2, 1.0}, {7, 1.0 / 3.0}, {8, 1.0}, {9, 1.0}})});
            rows.push_back({{e1, e1}, coords({{2, 1.0}, {7, 1.0 / 3.0}, {8, -1.0}, {9, -1.0}})});
            rows.push_back({{e0, e1}, coords({{2, -1.0}, {7, 1.0 / 3.0}, {8, 1.0}, {9, -1.0}})});
            rows.push_back({{e1, e0}, coords({{2, -1.0}, {7, 1.0 / 3.0}, {8, -1.0}, {9, 1.0}})});
            rows.push_back({{e2, e2}, coords({{7, 4.0 / 3.0}})});
            rows.push_back({{e0, e2}, coords({{7, -2.0 / 3.0}, {8, -2.0}})});
            rows.push_back({{e1, e2}, coords({{7, -2.0 / 3.0}, {8, 2.0}})});
            rows.push_back({{e2, e0}, coords({{7, -2.0 / 3.0}, {9, -2.0}})});
            rows.push_back({{e2, e1}, coords({{7, -2.0 / 3.0}, {9, 2.0}})});
            break;
    }

    std::vector<FeasiblePoint> out;
    for (auto& [g, c] : rows) {
        FeasiblePoint computed = expectation_map(g, fam);
        for (int l = 0; l < fam.dim(); ++l)
            if (std::abs(computed.coords[static_cast<size_t>(l)] - c[static_cast<size_t>(l)]) > 1e-12)
                throw FeasibleError("vertex catalog row fails re-verification (" + fam.name + ")");
        FeasiblePoint p;
        p.coords = c;  // keep the exact table values
        p.state = g;
        out.push_back(p);
    }
    return out;
}

}  // namespace

const std::vector<FeasiblePoint>& vertex_catalog(FamilyKind kind) {
    static const std::vector<FeasiblePoint> d = build_catalog(FamilyKind::diag);
    static const std::vector<FeasiblePoint> a = build_catalog(FamilyKind::offdiag_a);
    static const std::vector<FeasiblePoint> b = build_catalog(FamilyKind::offdiag_b);
    switch (kind) {
        case FamilyKind::diag: return d;
        case FamilyKind::offdiag_a: return a;
        case FamilyKind::offdiag_b: return b;
    }
    throw FeasibleError("unknown family kind");
}

Hyperplane hyperplane_through(const std::vector<FeasiblePoint>& points, const CoordinateFamily& fam) {
    int n = fam.dim();
    if (static_cast<int>(points.size()) != n)
        throw FeasibleError("hyperplane_through: need exactly " + std::to_string(n) + " points");
    for (size_t a = 0; a < points.size(); ++a)
        for (size_t b = a + 1; b < points.size(); ++b) {
            double d = 0.0;
            for (int l = 0; l < n; ++l)
                d = std::max(d, std::abs(points[a].coords[static_cast<size_t>(l)] -
                                         points[b].coords[static_cast<size_t>(l)]));
            if (d < 1e-12)
                throw FeasibleError("hyperplane_through: points " + std::to_string(a) + " and " +
                                    std::to_string(b) + " coincide");
        }

    // Nullspace of the homogeneous system (p_i, -1) . (normal, d) = 0 via the
    // Gram matrix of the augmented rows.
    CMat G(n + 1);
    for (const auto& p : points) {
        std::vector<double> r(static_cast<size_t>(n) + 1);
        for (int l = 0; l < n; ++l) r[static_cast<size_t>(l)] = p.coords[static_cast<size_t>(l)];
        r[static_cast<size_t>(n)] = -1.0;
        for (int a = 0; a <= n; ++a)
            for (int b = 0; b <= n; ++b)
                G(a, b) += cd(r[static_cast<size_t>(a)] * r[static_cast<size_t>(b)]);
    }
    auto d = hermitian_eigen(G);
    double scale = std::max(1.0, d.eigenvalues.back());
    if (d.eigenvalues[1] < 1e-16 * scale)
        throw FeasibleError("hyperplane_through: points are affinely dependent");

    std::vector<double> nv(static_cast<size_t>(n));
    for (int l = 0; l < n; ++l) nv[static_cast<size_t>(l)] = d.vectors(l, 0).real();
    double off = d.vectors(n, 0).real();
    double nn = 0.0;
    for (double x : nv) nn += x * x;
    nn = std::sqrt(nn);
    Hyperplane h;
    if (std::abs(off) > 1e-10 * nn) {
        for (auto& x : nv) x /= off;
        h.normal = nv;
        h.offset = 1.0;
    } else {
        double sign = 1.0;
        for (double x : nv)
            if (std::abs(x) > 1e-12 * nn) {
                sign = x > 0 ? 1.0 : -1.0;
                break;
            }
        for (auto& x : nv) x *= sign / nn;
        h.normal = nv;
        h.offset = 0.0;
    }
    h.orientation = 1;  // the origin (maximally mixed image) is on the feasible side
    for (const auto& p : points) {
        double v = -h.offset;
        for (int l = 0; l < n; ++l)
            v += h.normal[static_cast<size_t>(l)] * p.coords[static_cast<size_t>(l)];
        if (std::abs(v) > 1e-9)
            throw FeasibleError("hyperplane_through: residual " + std::to_string(v));
    }
    return h;
}

WitnessCoeffs facet_to_witness(const Hyperplane& h, const CoordinateFamily& fam,
                               std::optional<double> offset_override) {
    WitnessCoeffs w;
    w.a0 = offset_override.value_or(h.offset);
    for (int l = 0; l < fam.dim(); ++l) {
        double c = -h.normal[static_cast<size_t>(l)];
        if (c != 0.0) w.add(fam.labels[static_cast<size_t>(l)], c);
    }
    return w;
}

std::pair<double, int> min_over_vertices(const WitnessCoeffs& w,
                                         const std::vector<FeasiblePoint>& catalog,
                                         const CoordinateFamily& fam) {
    if (catalog.empty()) throw FeasibleError("min_over_vertices: empty catalog");
    for (const auto& [lab, c] : w.terms) {
        bool found = false;
        for (const auto& fl : fam.labels) found = found || fl == lab;
        if (!found) throw FeasibleError("min_over_vertices: witness label outside the family");
    }
    double best = 0.0;
    int arg = -1;
    for (size_t i = 0; i < catalog.size(); ++i) {
        double v = w.a0;
        for (int l = 0; l < fam.dim(); ++l)
            v += w.coefficient(fam.labels[static_cast<size_t>(l)]) *
                 catalog[i].coords[static_cast<size_t>(l)];
        if (arg < 0 || v < best) {
            best = v;
            arg = static_cast<int>(i);
        }
    }
    return {best, arg};
}

std::vector<DiagFacetReport> classify_diag_facets(const OptimizerConfig& cfg) {
    std::vector<DiagFacetReport> out;
    for (int mask = 0; mask < 64; ++mask) {
        std::array<int, 8> s{};
        s[0] = (mask >> 0) & 1;
        s[1] = (mask >> 1) & 1;
        s[3] = (mask >> 2) & 1;
        s[4] = (mask >> 3) & 1;
        s[5] = (mask >> 4) & 1;
        s[6] = (mask >> 5) & 1;
        int eq = (s[0] == s[1]) + (s[3] == s[4]) + (s[5] == s[6]);
        char tag = eq == 3 ? 'a' : eq == 0 ? 'b' : eq == 1 ? 'c' : 'd';

        std::string name = "eq10:";
        for (int k = 0; k < 8; ++k) name += s[static_cast<size_t>(k)] ? '-' : '+';
        WitnessCoeffs w = preset(name);
        ClassificationReport rep = classify(w, cfg);

        bool ok = (tag == 'a') ? rep.verdict == Verdict::positive_operator
                               : rep.verdict == Verdict::witness_decomposable;
        if (!ok)
            throw FeasibleError("diagonal facet " + name + " failed its predicted classification");
        out.push_back({s, tag, rep});
    }
    return out;
}

namespace {

std::vector<long long> point_key(const FeasiblePoint& p) {
    std::vector<long long> k;
    for (double c : p.coords) k.push_back(std::llround(c * 1e9));
    return k;
}

}  // namespace

RefineResult refine_facet(std::vector<FeasiblePoint> seed, const CoordinateFamily& fam,
                          const OptimizerConfig& cfg, int max_iters) {
    int n = fam.dim();
    if (static_cast<int>(seed.size()) != n)
        throw FeasibleError("refine_facet: seed must have dim(family) points");

    RefineResult res;
    std::set<std::vector<std::vector<long long>>> seen;
    for (int iter = 0; iter <= max_iters; ++iter) {
        Hyperplane h = hyperplane_through(seed, fam);
        WitnessCoeffs functional = facet_to_witness(h, fam, 0.0);
        for (auto& [lab, c] : functional.terms) c = -c;  // plain n . P functional
        ExtremumResult mx = max_product_expectation(assemble(functional), cfg);
        double violation = mx.value - h.offset;
        if (violation <= 1e-9) {
            res.status = RefineStatus::tangent;
            res.tangent = h;
            res.witness = facet_to_witness(h, fam, mx.value);
            res.points = seed;
            return res;
        }
        if (iter == max_iters) break;

        FeasiblePoint q = expectation_map(mx.state, fam);
        int best_idx = -1;
        double best_margin = 0.0;
        for (int i = 0; i < n; ++i) {
            std::vector<FeasiblePoint> trial;
            for (int j = 0; j < n; ++j)
                if (j != i) trial.push_back(seed[static_cast<size_t>(j)]);
            trial.push_back(q);
            Hyperplane ht;
            try {
                ht = hyperplane_through(trial, fam);
            } catch (const FeasibleError&) {
                continue;
            }
            double margin = ht.offset;
            for (int l = 0; l < n; ++l)
                margin -= ht.normal[static_cast<size_t>(l)] *
                          seed[static_cast<size_t>(i)].coords[static_cast<size_t>(l)];
            if (best_idx < 0 || margin > best_margin + 1e-12) {
                best_idx = i;
                best_margin = margin;
            }
        }
        if (best_idx < 0) throw FeasibleError("refine_facet: no independent replacement exists");

        RefineIteration tr;
        tr.violation = violation;
        tr.removed_index = best_idx;
        tr.new_point = q;
        tr.normal = h.normal;
        res.trace.push_back(tr);

        seed.erase(seed.begin() + best_idx);
        seed.push_back(q);

        std::vector<std::vector<long long>> key;
        for (const auto& p : seed) key.push_back(point_key(p));
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) {
            res.status = RefineStatus::cycle;
            res.tangent = h;
            res.witness = facet_to_witness(h, fam, mx.value);
            res.points = seed;
            return res;
        }
    }
    Hyperplane h = hyperplane_through(seed, fam);
    res.status = RefineStatus::max_iters;
    res.tangent = h;
    res.witness = facet_to_witness(h, fam, h.offset);
    res.points = seed;
    return res;
}

namespace {

FeasiblePoint point_from_state(const Vec3& a, const Vec3& b) {
    return expectation_map({a, b}, family(FamilyKind::offdiag_b));
}

}  // namespace

std::vector<FeasiblePoint> refine_seed_upper() {
    const Vec3 e0{1, 0, 0}, e1{0, 1, 0}, e2{0, 0, 1};
    std::vector<FeasiblePoint> s;
    s.push_back(point_from_state(eigenstate(1, 1.0), eigenstate(1, 1.0)));
    s.push_back(point_from_state(eigenstate(2, 1.0), eigenstate(2, -1.0)));
    s.push_back(point_from_state(e0, e1));
    s.push_back(point_from_state(eigenstate(4, 1.0), eigenstate(4, 1.0)));
    s.push_back(point_from_state(eigenstate(5, 1.0), eigenstate(5, -1.0)));
    s.push_back(point_from_state(eigenstate(6, 1.0), eigenstate(6, 1.0)));
    s.push_back(point_from_state(eigenstate(7, 1.0), eigenstate(7, -1.0)));
    s.push_back(point_from_state(e1, e2));
    s.push_back(point_from_state(e2, e0));
    s.push_back(point_from_state(e2, e2));
    return s;
}

std::vector<FeasiblePoint> refine_seed_lower() {
    const Vec3 e0{1, 0, 0}, e1{0, 1, 0}, e2{0, 0, 1};
    const cd w = std::exp(cd(0.0, 2.0 * M_PI / 3.0));
    const cd i(0.0, 1.0);
    auto v3 = [](cd a, cd b, cd c) { return normalized(Vec3{a, b, c}); };
    std::vector<FeasiblePoint> s;
    s.push_back(point_from_state(e1, e0));
    s.push_back(point_from_state(e0, e2));
    s.push_back(point_from_state(e2, e1));
    s.push_back(point_from_state(v3(1, 1, 1), v3(1, 1, 1)));
    s.push_back(point_from_state(v3(1, 1, w), v3(1, 1, std::conj(w))));
    s.push_back(point_from_state(v3(i, 1, 1), v3(-i, 1, 1)));
    s.push_back(point_from_state(v3(1, i, 1), v3(1, -i, 1)));
    s.push_back(point_from_state(v3(0, 1, std::sqrt(3.0)), v3(0, std::sqrt(3.0), 1)));
    s.push_back(point_from_state(v3(2, 2, std::sqrt(7.0)), v3(2, 2, std::sqrt(7.0))));
    s.push_back(point_from_state(v3(std::sqrt(32.0), std::sqrt(77.0), 9), v3(std::sqrt(32.0), std::sqrt(77.0), 9)));
    return s;
}

}  // namespace ew
