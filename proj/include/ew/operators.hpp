#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ew/optimize.hpp"
#include "ew/states.hpp"

namespace ew {

// (0,0) denotes the identity term I(x)I; (i,j) with i,j in 1..8 denotes
// lambda_i (x) lambda_j.  sqrt3_scale marks the sqrt(3)-scaled (3,8)/(8,3)
// basis elements used by the ten-coordinate family.
struct OperatorLabel {
    int i = 0;
    int j = 0;
    bool sqrt3_scale = false;

    bool operator==(const OperatorLabel& o) const {
        return i == o.i && j == o.j && sqrt3_scale == o.sqrt3_scale;
    }
    bool operator<(const OperatorLabel& o) const {
        if (i != o.i) return i < o.i;
        if (j != o.j) return j < o.j;
        return sqrt3_scale < o.sqrt3_scale;
    }
};

double label_scale(const OperatorLabel& l);
CMat label_matrix(const OperatorLabel& l);  // scale * lambda_i (x) lambda_j

struct WitnessCoeffs {
    double a0 = 0.0;
    std::vector<std::pair<OperatorLabel, double>> terms;
    std::string name;

    double coefficient(const OperatorLabel& l) const;
    void add(const OperatorLabel& l, double c);
};

class OperatorError : public std::runtime_error {
public:
    explicit OperatorError(const std::string& msg) : std::runtime_error(msg) {}
};

class NotAWitnessError : public OperatorError {
public:
    NotAWitnessError(double value, ProductState state)
        : OperatorError("not a witness: product-state expectation " + std::to_string(value)),
          product_minimum(value),
          witness_state(state) {}
    double product_minimum;
    ProductState witness_state;
};

CMat assemble(const WitnessCoeffs& w);

double expectation(const WitnessCoeffs& w, const DensityOp& rho);

// Coefficient-level partial transpose on the first factor: flips the sign of
// every term whose first index is 2, 5 or 7.
WitnessCoeffs partial_transpose_coeffs(const WitnessCoeffs& w);

// Extracts {a0, c_ij} of a matrix lying in span{I(x)I, lambda_i(x)lambda_j}.
// Throws if the matrix has components outside that span (tol 1e-10).
WitnessCoeffs coefficients_of(const CMat& W, const std::string& name = "");

struct DecompositionCertificate {
    CMat P;
    CMat Q;
    double residual = 0.0;   // ||W - P - Q^{T1}||_F
    double min_eig_P = 0.0;
    double min_eig_Q = 0.0;
    bool valid = false;      // residual <= 1e-10 and both parts PSD
};

DecompositionCertificate verify_decomposition(const WitnessCoeffs& w, const CMat& P, const CMat& Q);

struct Appendix3States {
    std::vector<cd> psi1, psi2, psi3, phi;  // unit vectors in C^9
};
const Appendix3States& appendix3_states();

enum class Verdict { positive_operator, witness_decomposable, witness_nd_certified, witness_undetermined };
std::string verdict_name(Verdict v);

struct ClassificationReport {
    double min_eigenvalue = 0.0;
    double min_product_expectation = 0.0;
    Verdict verdict = Verdict::witness_undetermined;
    std::optional<DecompositionCertificate> certificate;
    std::string detecting_state;          // origin tag of a PPT state with negative expectation
    double detecting_expectation = 0.0;
};

// Spectral + optimizer classification with decomposability / nd evidence.
// Throws NotAWitnessError when the optimizer finds a product state with
// expectation below -1e-7.
ClassificationReport classify(const WitnessCoeffs& w, const OptimizerConfig& cfg);

// Built-in named witnesses.  Accepted names: eq10:<signs> with eight +/-
// characters (positions 3 and 8 must be '+'), eq11, eq13, eq14, eq16, eq17,
// eq20, eq26, eq27.
WitnessCoeffs preset(const std::string& name);
std::vector<std::string> preset_names();

// Exact decomposition certificates for the diagonal facet family (mixed-parity
// sign patterns) built from two-level singlet/triplet projectors; returns
// nothing for patterns outside cases c/d.
std::optional<std::pair<CMat, CMat>> diag_case_certificate(const std::array<int, 8>& signs);

}  // namespace ew
