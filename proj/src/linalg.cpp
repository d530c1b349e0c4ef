#include "ew/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ew {

CMat CMat::identity(int n) {
    CMat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMat& CMat::operator+=(const CMat& o) {
    if (n_ != o.n_) throw LinalgError("matrix dimension mismatch in +");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

CMat& CMat::operator-=(const CMat& o) {
    if (n_ != o.n_) throw LinalgError("matrix dimension mismatch in -");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

CMat& CMat::operator*=(cd s) {
    for (auto& x : a_) x *= s;
    return *this;
}

CMat operator*(const CMat& a, const CMat& b) {
    if (a.n_ != b.n_) throw LinalgError("matrix dimension mismatch in *");
    int n = a.n_;
    CMat c(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            cd aik = a(i, k);
            if (aik == cd(0.0)) continue;
            for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

CMat CMat::dagger() const {
    CMat m(n_);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
}

cd CMat::trace() const {
    cd t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double CMat::frob_norm() const {
    double s = 0.0;
    for (const auto& x : a_) s += std::norm(x);
    return std::sqrt(s);
}

double CMat::max_abs() const {
    double m = 0.0;
    for (const auto& x : a_) m = std::max(m, std::abs(x));
    return m;
}

double CMat::hermiticity_defect() const {
    double d = 0.0;
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c)
            d = std::max(d, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return d;
}

std::vector<cd> CMat::apply(const std::vector<cd>& v) const {
    if (static_cast<int>(v.size()) != n_) throw LinalgError("vector dimension mismatch");
    std::vector<cd> out(n_, 0.0);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) out[r] += (*this)(r, c) * v[c];
    return out;
}

CMat kron(const CMat& A, const CMat& B) {
    int na = A.n(), nb = B.n();
    CMat out(na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) {
            cd aij = A(i, j);
            if (aij == cd(0.0)) continue;
            for (int k = 0; k < nb; ++k)
                for (int l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * B(k, l);
        }
    return out;
}

CMat partial_transpose_first(const CMat& M) {
    if (M.n() != 9) throw LinalgError("partial_transpose_first expects a 9x9 matrix");
    CMat out(9);
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 3; ++j)
                for (int l = 0; l < 3; ++l) out(3 * i + k, 3 * j + l) = M(3 * j + k, 3 * i + l);
    return out;
}

namespace {

double offdiag_norm(const CMat& A) {
    double s = 0.0;
    int n = A.n();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (r != c) s += std::norm(A(r, c));
    return std::sqrt(s);
}

// One two-sided Jacobi rotation zeroing A(p,q); V accumulates the rotations.
void jacobi_rotate(CMat& A, CMat& V, int p, int q) {
    cd apq = A(p, q);
    double g = std::abs(apq);
    if (g == 0.0) return;
    cd phase = apq / g;
    double app = A(p, p).real();
    double aqq = A(q, q).real();
    double tau = (aqq - app) / (2.0 * g);
    double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    double c = 1.0 / std::sqrt(1.0 + t * t);
    double s = t * c;
    cd sp = s * phase;

    int n = A.n();
    // Columns: A <- A J with J(p,p)=c, J(q,p)=-conj(sp), J(p,q)=sp, J(q,q)=c.
    for (int r = 0; r < n; ++r) {
        cd arp = A(r, p), arq = A(r, q);
        A(r, p) = c * arp - std::conj(sp) * arq;
        A(r, q) = sp * arp + c * arq;
    }
    // Rows: A <- J^dagger A.
    for (int col = 0; col < n; ++col) {
        cd apc = A(p, col), aqc = A(q, col);
        A(p, col) = c * apc - sp * aqc;
        A(q, col) = std::conj(sp) * apc + c * aqc;
    }
    for (int r = 0; r < n; ++r) {
        cd vrp = V(r, p), vrq = V(r, q);
        V(r, p) = c * vrp - std::conj(sp) * vrq;
        V(r, q) = sp * vrp + c * vrq;
    }
}

}  // namespace

EigenDecomposition hermitian_eigen(const CMat& M, double tol, int max_sweeps) {
    if (M.hermiticity_defect() > 1e-12)
        throw LinalgError("hermitian_eigen: input is not Hermitian");
    int n = M.n();
    CMat A = M;
    CMat V = CMat::identity(n);

    int sweep = 0;
    const double eff = tol * std::max(1.0, M.frob_norm());  // scale-relative threshold
    while (offdiag_norm(A) > eff) {
        if (++sweep > max_sweeps) throw LinalgError("hermitian_eigen: no convergence");
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q)
                if (std::abs(A(p, q)) > eff / (10.0 * n)) jacobi_rotate(A, V, p, q);
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = A(i, i).real();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return ev[a] < ev[b]; });

    EigenDecomposition d;
    d.eigenvalues.resize(n);
    d.vectors = CMat(n);
    for (int k = 0; k < n; ++k) {
        int src = order[k];
        d.eigenvalues[k] = ev[src];
        // Phase-fix each column: first component of magnitude > 1e-12 made
        // real positive, for deterministic output.
        cd ph = 1.0;
        for (int r = 0; r < n; ++r) {
            cd v = V(r, src);
            if (std::abs(v) > 1e-12) {
                ph = std::conj(v) / std::abs(v);
                break;
            }
        }
        for (int r = 0; r < n; ++r) d.vectors(r, k) = V(r, src) * ph;
    }
    return d;
}

double min_eigenvalue(const CMat& M) {
    return hermitian_eigen(M).eigenvalues.front();
}

}  // namespace ew
