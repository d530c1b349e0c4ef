#include "ew/operators.hpp"

#include <array>
#include <cmath>

namespace ew {

namespace {
const double S3 = std::sqrt(3.0);
}

double label_scale(const OperatorLabel& l) { return l.sqrt3_scale ? S3 : 1.0; }

CMat label_matrix(const OperatorLabel& l) {
    if (l.i == 0 && l.j == 0) return CMat::identity(9);
    if (l.i < 1 || l.i > 8 || l.j < 1 || l.j > 8)
        throw OperatorError("label indices out of range");
    CMat m = kron(gellmann(l.i), gellmann(l.j));
    if (l.sqrt3_scale) m *= cd(S3);
    return m;
}

double WitnessCoeffs::coefficient(const OperatorLabel& l) const {
    for (const auto& [lab, c] : terms)
        if (lab == l) return c;
    return 0.0;
}

void WitnessCoeffs::add(const OperatorLabel& l, double c) {
    for (auto& [lab, cur] : terms)
        if (lab == l) {
            cur += c;
            return;
        }
    terms.push_back({l, c});
}

CMat assemble(const WitnessCoeffs& w) {
    CMat W = w.a0 * CMat::identity(9);
    for (const auto& [lab, c] : w.terms) W += cd(c) * label_matrix(lab);
    return W;
}

double expectation(const WitnessCoeffs& w, const DensityOp& rho) {
    cd t = (assemble(w) * rho.rho).trace();
    if (std::abs(t.imag()) > 1e-10)
        throw OperatorError("expectation: non-real value, |imag| = " + std::to_string(t.imag()));
    return t.real();
}

WitnessCoeffs partial_transpose_coeffs(const WitnessCoeffs& w) {
    WitnessCoeffs out = w;
    out.name = w.name.empty() ? "" : w.name + "^T1";
    for (auto& [lab, c] : out.terms)
        if (lab.i == 2 || lab.i == 5 || lab.i == 7) c = -c;
    return out;
}

WitnessCoeffs coefficients_of(const CMat& W, const std::string& name) {
    if (W.n() != 9) throw OperatorError("coefficients_of: expects 9x9");
    WitnessCoeffs w;
    w.name = name;
    w.a0 = W.trace().real() / 9.0;
    for (int i = 1; i <= 8; ++i) {
        double mi = (kron(gellmann(i), CMat::identity(3)) * W).trace().real() / 6.0;
        double mj = (kron(CMat::identity(3), gellmann(i)) * W).trace().real() / 6.0;
        if (std::abs(mi) > 1e-10 || std::abs(mj) > 1e-10)
            throw OperatorError("coefficients_of: matrix has single-factor components");
        for (int j = 1; j <= 8; ++j) {
            double c = (kron(gellmann(i), gellmann(j)) * W).trace().real() / 4.0;
            if (std::abs(c) > 1e-14) w.add({i, j, false}, c);
        }
    }
    if ((assemble(w) - W).max_abs() > 1e-10)
        throw OperatorError("coefficients_of: matrix outside the lambda(x)lambda span");
    return w;
}

DecompositionCertificate verify_decomposition(const WitnessCoeffs& w, const CMat& P, const CMat& Q) {
    if (P.hermiticity_defect() > 1e-12 || Q.hermiticity_defect() > 1e-12)
        throw OperatorError("verify_decomposition: P and Q must be Hermitian");
    DecompositionCertificate cert;
    cert.P = P;
    cert.Q = Q;
    cert.min_eig_P = min_eigenvalue(P);
    cert.min_eig_Q = min_eigenvalue(Q);
    CMat R = assemble(w) - P - partial_transpose_first(Q);
    cert.residual = R.frob_norm();
    cert.valid = cert.residual <= 1e-10 && cert.min_eig_P >= -1e-10 && cert.min_eig_Q >= -1e-10;
    return cert;
}

const Appendix3States& appendix3_states() {
    static const Appendix3States s = [] {
        Appendix3States a;
        auto make = [](std::initializer_list<std::pair<int, double>> comps) {
            std::vector<cd> v(9, 0.0);
            double n2 = 0.0;
            for (auto [idx, amp] : comps) {
                v[static_cast<size_t>(idx)] = amp;
                n2 += amp * amp;
            }
            double n = std::sqrt(n2);
            for (auto& x : v) x /= n;
            return v;
        };
        a.psi1 = make({{1, 1.0}, {3, -1.0}});   // (|01> - |10>)/sqrt(2)
        a.psi2 = make({{2, 1.0}, {6, -1.0}});   // (|02> - |20>)/sqrt(2)
        a.psi3 = make({{5, 1.0}, {7, -1.0}});   // (|12> - |21>)/sqrt(2)
        a.phi = make({{0, 1.0}, {4, 1.0}, {8, -3.0}});  // (|00> + |11> - 3|22>)/sqrt(11)
        return a;
    }();
    return s;
}

namespace {

CMat projector(const std::vector<cd>& v) {
    CMat P(9);
    for (int r = 0; r < 9; ++r)
        for (int c = 0; c < 9; ++c)
            P(r, c) = v[static_cast<size_t>(r)] * std::conj(v[static_cast<size_t>(c)]);
    return P;
}

// Two-level state (|xy> + sign |yx>)/sqrt(2) as a 9-vector.
std::vector<cd> pair_state(int x, int y, int sign) {
    std::vector<cd> v(9, 0.0);
    v[static_cast<size_t>(3 * x + y)] = 1.0 / std::sqrt(2.0);
    v[static_cast<size_t>(3 * y + x)] = sign / std::sqrt(2.0);
    return v;
}

// Certificate for the mixed-parity patterns with exactly one equal pair:
// the equal pair contributes P = 3|chi><chi| on its two-level subspace
// (singlet when both signs are 0, triplet when both are 1); each unequal pair
// contributes 3|chi><chi| to Q (singlet when the imaginary member is flipped,
// triplet when the real member is flipped).
std::optional<std::pair<CMat, CMat>> one_equal_certificate(const std::array<int, 8>& s) {
    struct PairInfo { int re, im, x, y; };
    const PairInfo pairs[] = {{1, 2, 0, 1}, {4, 5, 0, 2}, {6, 7, 1, 2}};
    int n_eq = 0;
    CMat P(9), Q(9);
    for (const auto& p : pairs) {
        int ire = s[static_cast<size_t>(p.re - 1)];
        int iim = s[static_cast<size_t>(p.im - 1)];
        if (ire == iim) {
            ++n_eq;
            int sign = (ire == 0) ? -1 : +1;
            P += cd(3.0) * projector(pair_state(p.x, p.y, sign));
        } else {
            int sign = (iim == 1) ? -1 : +1;
            Q += cd(3.0) * projector(pair_state(p.x, p.y, sign));
        }
    }
    if (n_eq != 1) return std::nullopt;
    return std::make_pair(P, Q);
}

}  // namespace

std::optional<std::pair<CMat, CMat>> diag_case_certificate(const std::array<int, 8>& signs) {
    if (signs[2] != 0 || signs[7] != 0) return std::nullopt;
    int eq = 0;
    eq += (signs[0] == signs[1]) ? 1 : 0;
    eq += (signs[3] == signs[4]) ? 1 : 0;
    eq += (signs[5] == signs[6]) ? 1 : 0;
    if (eq == 1) return one_equal_certificate(signs);
    if (eq == 2) {
        // The partial transpose (sign flip on indices 2,5,7) has exactly one
        // equal pair; transposing its certificate swaps the roles of P and Q.
        std::array<int, 8> t = signs;
        for (int k : {2, 5, 7}) t[static_cast<size_t>(k - 1)] ^= 1;
        auto base = one_equal_certificate(t);
        if (!base) return std::nullopt;
        return std::make_pair(base->second, base->first);
    }
    return std::nullopt;
}

namespace {

WitnessCoeffs diag_preset(const std::array<int, 8>& signs, const std::string& name) {
    WitnessCoeffs w;
    w.a0 = 1.0;
    w.name = name;
    for (int k = 1; k <= 8; ++k) {
        double sgn = signs[static_cast<size_t>(k - 1)] ? 1.0 : -1.0;
        w.add({k, k, false}, 0.75 * sgn);
    }
    return w;
}

std::optional<std::array<int, 8>> diag_signs_of(const WitnessCoeffs& w) {
    if (std::abs(w.a0 - 1.0) > 1e-12) return std::nullopt;
    std::array<int, 8> s{};
    std::array<bool, 8> seen{};
    for (const auto& [lab, c] : w.terms) {
        if (lab.i != lab.j || lab.i < 1 || lab.sqrt3_scale) return std::nullopt;
        if (std::abs(std::abs(c) - 0.75) > 1e-12) return std::nullopt;
        s[static_cast<size_t>(lab.i - 1)] = c > 0 ? 1 : 0;
        seen[static_cast<size_t>(lab.i - 1)] = true;
    }
    for (bool b : seen)
        if (!b) return std::nullopt;
    if (s[2] != 0 || s[7] != 0) return std::nullopt;
    return s;
}

}  // namespace

WitnessCoeffs preset(const std::string& name) {
    auto diag_terms = [](WitnessCoeffs& w, std::initializer_list<std::pair<int, double>> cs) {
        for (auto [k, c] : cs) w.add({k, k, false}, c);
    };
    if (name.rfind("eq10:", 0) == 0) {
        std::string bits = name.substr(5);
        if (bits.size() != 8) throw OperatorError("eq10 preset needs eight +/- characters");
        std::array<int, 8> s{};
        for (int k = 0; k < 8; ++k) {
            char c = bits[static_cast<size_t>(k)];
            if (c != '+' && c != '-') throw OperatorError("eq10 preset: signs must be + or -");
            s[static_cast<size_t>(k)] = (c == '-') ? 1 : 0;
        }
        if (s[2] != 0 || s[7] != 0)
            throw OperatorError("eq10 preset: positions 3 and 8 must be '+'");
        return diag_preset(s, name);
    }
    if (name == "eq11") return diag_preset({0, 0, 0, 0, 1, 0, 1, 0}, name);
    if (name == "eq13" || name == "eq14") {
        WitnessCoeffs w;
        w.a0 = 11.0 / 8.0;
        w.name = name;
        diag_terms(w, {{1, -1.5}, {2, -1.5}, {3, -1.5}, {8, 1.5},
                       {4, -0.75}, {5, -0.75}, {6, -0.75}, {7, -0.75}});
        return w;
    }
    if (name == "eq16") {
        WitnessCoeffs w;
        w.a0 = 2.0;
        w.name = name;
        diag_terms(w, {{1, -1.5}, {2, -1.5}, {3, 1.5}, {4, -1.5},
                       {5, -1.5}, {6, -1.5}, {7, -1.5}, {8, 1.5}});
        return w;
    }
    if (name == "eq17") {
        WitnessCoeffs w;
        w.a0 = 11.0 / 8.0;
        w.name = name;
        diag_terms(w, {{1, -0.75}, {2, -0.75}, {3, 0.75}, {8, -0.75},
                       {4, -1.125}, {5, -1.125}, {6, -1.125}, {7, -1.125}});
        return w;
    }
    if (name == "eq20") {
        WitnessCoeffs w;
        w.a0 = 7.0 / 4.0;
        w.name = name;
        for (int k = 1; k <= 8; ++k) w.add({k, k, false}, -0.75);
        for (auto [i, j] : {std::pair{1, 2}, {2, 1}, {4, 5}, {5, 4}, {6, 7}, {7, 6}})
            w.add({i, j, false}, -0.75);
        return w;
    }
    if (name == "eq26" || name == "eq27") {
        double flip = (name == "eq27") ? -1.0 : 1.0;
        WitnessCoeffs w;
        w.a0 = 809.0 / 790.0;
        w.name = name;
        w.add({1, 1, false}, -2553.0 / 6320.0);
        w.add({2, 2, false}, 2553.0 / 6320.0);
        w.add({4, 4, false}, -5227.0 / 6320.0);
        w.add({5, 5, false}, 5227.0 / 6320.0);
        w.add({6, 6, false}, -161.0 / 158.0);
        w.add({7, 7, false}, 161.0 / 158.0);
        w.add({3, 3, false}, 501.0 / 790.0);
        w.add({8, 8, false}, 501.0 / 790.0);
        w.add({3, 8, true}, -flip * 114.0 / 395.0);
        w.add({8, 3, true}, flip * 114.0 / 395.0);
        return w;
    }
    throw OperatorError("unknown preset: " + name);
}

std::vector<std::string> preset_names() {
    return {"eq10:++++++++", "eq11", "eq13", "eq14", "eq16", "eq17", "eq20", "eq26", "eq27"};
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::positive_operator: return "positive-operator";
        case Verdict::witness_decomposable: return "witness-decomposable";
        case Verdict::witness_nd_certified: return "witness-nd-certified";
        case Verdict::witness_undetermined: return "witness-undetermined";
    }
    return "?";
}

ClassificationReport classify(const WitnessCoeffs& w, const OptimizerConfig& cfg) {
    CMat W = assemble(w);
    ClassificationReport rep;
    rep.min_eigenvalue = min_eigenvalue(W);

    ExtremumResult opt = min_product_expectation(W, cfg);
    rep.min_product_expectation = opt.value;
    if (opt.value < -1e-7) throw NotAWitnessError(opt.value, opt.state);

    if (rep.min_eigenvalue >= -1e-10) {
        rep.verdict = Verdict::positive_operator;
        return rep;
    }

    CMat Wt1 = partial_transpose_first(W);
    if (min_eigenvalue(Wt1) >= -1e-10) {
        auto cert = verify_decomposition(w, CMat(9), Wt1);
        if (cert.valid) {
            rep.verdict = Verdict::witness_decomposable;
            rep.certificate = cert;
            return rep;
        }
    }

    // Known exact certificates.
    if (auto s = diag_signs_of(w)) {
        if (auto pq = diag_case_certificate(*s)) {
            auto cert = verify_decomposition(w, pq->first, pq->second);
            if (cert.valid) {
                rep.verdict = Verdict::witness_decomposable;
                rep.certificate = cert;
                return rep;
            }
        }
    }
    {
        const auto& a3 = appendix3_states();
        CMat P = cd(27.0 / 4.0) * projector(a3.psi1) +
                 cd(3.0 / 4.0) * (projector(a3.psi2) + projector(a3.psi3));
        CMat Q = cd(33.0 / 8.0) * projector(a3.phi);
        auto cert = verify_decomposition(w, P, Q);
        if (cert.valid) {
            rep.verdict = Verdict::witness_decomposable;
            rep.certificate = cert;
            return rep;
        }
    }

    // Non-decomposability evidence: a PPT state with negative expectation.
    std::vector<DensityOp> candidates;
    candidates.push_back(ppt_family(1.0, 0.55));
    candidates.push_back(horodecki(4.0));
    candidates.push_back(horodecki(1.0));
    for (const auto& rho : candidates) {
        double e = expectation(w, rho);
        auto [ppt, me] = is_ppt(rho);
        if (ppt && e < -1e-10) {
            rep.verdict = Verdict::witness_nd_certified;
            rep.detecting_state = rho.origin;
            rep.detecting_expectation = e;
            return rep;
        }
    }
    rep.verdict = Verdict::witness_undetermined;
    return rep;
}

}  // namespace ew
