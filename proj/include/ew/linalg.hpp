#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace ew {

using cd = std::complex<double>;

// Dense square complex matrix, row-major.  Sizes in this project are 3x3 and
// 9x9; the composite index convention for 9x9 operators is (i,k) -> 3*i + k.
class CMat {
public:
    CMat() = default;
    explicit CMat(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

    static CMat identity(int n);
    static CMat zero(int n) { return CMat(n); }

    int n() const { return n_; }

    cd& operator()(int r, int c) { return a_[static_cast<size_t>(r) * n_ + c]; }
    const cd& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * n_ + c]; }

    CMat& operator+=(const CMat& o);
    CMat& operator-=(const CMat& o);
    CMat& operator*=(cd s);

    friend CMat operator+(CMat a, const CMat& b) { return a += b; }
    friend CMat operator-(CMat a, const CMat& b) { return a -= b; }
    friend CMat operator*(cd s, CMat a) { return a *= s; }
    friend CMat operator*(CMat a, cd s) { return a *= s; }
    friend CMat operator*(const CMat& a, const CMat& b);  // matrix product

    CMat dagger() const;
    cd trace() const;
    double frob_norm() const;
    double max_abs() const;
    // Largest |M(r,c) - conj(M(c,r))| -- zero for Hermitian matrices.
    double hermiticity_defect() const;

    std::vector<cd> apply(const std::vector<cd>& v) const;

private:
    int n_ = 0;
    std::vector<cd> a_;
};

CMat kron(const CMat& A, const CMat& B);

// Transpose on the first tensor factor of a 9x9 operator:
// out((i,k),(j,l)) = in((j,k),(i,l)).
CMat partial_transpose_first(const CMat& M);

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // ascending
    CMat vectors;                     // orthonormal columns, same order
};

// Cyclic Jacobi on a complex Hermitian matrix.  Deterministic sweep order;
// throws on non-Hermitian input or failure to converge within max_sweeps.
EigenDecomposition hermitian_eigen(const CMat& M, double tol = 1e-13, int max_sweeps = 100);

double min_eigenvalue(const CMat& M);

class LinalgError : public std::runtime_error {
public:
    explicit LinalgError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ew
