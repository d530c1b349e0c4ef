#pragma once

#include <array>
#include <optional>

#include "ew/operators.hpp"

namespace ew {

enum class FamilyKind { diag, offdiag_a, offdiag_b };

struct CoordinateFamily {
    FamilyKind kind;
    std::string name;                   // "diag", "offdiag-a", "offdiag-b"
    std::vector<OperatorLabel> labels;  // table column order
    int dim() const { return static_cast<int>(labels.size()); }
};

const CoordinateFamily& family(FamilyKind kind);
const CoordinateFamily& family_by_name(const std::string& name);

struct FeasiblePoint {
    std::vector<double> coords;
    std::optional<ProductState> state;  // generating product state, if known
};

class FeasibleError : public std::runtime_error {
public:
    explicit FeasibleError(const std::string& msg) : std::runtime_error(msg) {}
};

// coords[l] = <gamma| scale * lambda_i (x) lambda_j |gamma> per family label.
FeasiblePoint expectation_map(const ProductState& gamma, const CoordinateFamily& fam);

// Built-in vertex catalogs (table rows with +/- variants expanded); every row
// carries its generating product state and is re-verified at construction.
const std::vector<FeasiblePoint>& vertex_catalog(FamilyKind kind);

struct Hyperplane {
    std::vector<double> normal;
    double offset = 0.0;  // gauge: 1 when the plane misses the origin, else 0 with unit normal
    int orientation = 1;  // feasible side is orientation * (offset - normal . x) >= 0
};

// Unique hyperplane through dim(family) affinely independent points.
Hyperplane hyperplane_through(const std::vector<FeasiblePoint>& points, const CoordinateFamily& fam);

// W = d * I(x)I - sum_l n_l Q_l; offset_override replaces d.
WitnessCoeffs facet_to_witness(const Hyperplane& h, const CoordinateFamily& fam,
                               std::optional<double> offset_override = std::nullopt);

// Minimum of a0 + sum_l a_l P_l over the catalog; returns (value, argmin index).
std::pair<double, int> min_over_vertices(const WitnessCoeffs& w,
                                         const std::vector<FeasiblePoint>& catalog,
                                         const CoordinateFamily& fam);

struct DiagFacetReport {
    std::array<int, 8> signs;  // parity bits, positions 3 and 8 always 0
    char case_tag;             // 'a'..'d'
    ClassificationReport report;
};

// Enumerates all 64 diagonal sign patterns and certifies each one:
// case a -> positive operator; b, d -> decomposable via partial transpose
// onto a / c; c -> decomposable via the explicit two-level certificates.
std::vector<DiagFacetReport> classify_diag_facets(const OptimizerConfig& cfg);

enum class RefineStatus { tangent, max_iters, cycle };

struct RefineIteration {
    double violation = 0.0;   // functional maximum minus the plane level
    int removed_index = -1;
    FeasiblePoint new_point;
    std::vector<double> normal;
};

struct RefineResult {
    RefineStatus status = RefineStatus::tangent;
    Hyperplane tangent;
    WitnessCoeffs witness;  // offset overridden by the certified product maximum
    std::vector<FeasiblePoint> points;
    std::vector<RefineIteration> trace;
};

// Iterative facet refinement: fit plane, maximize the plane functional over
// product states, and swap the maximizer in for the seed point whose removal
// leaves the largest margin, until the plane is tangent within 1e-9.
// Non-convergence after max_iters and cycling are reported in the status.
RefineResult refine_facet(std::vector<FeasiblePoint> seed, const CoordinateFamily& fam,
                          const OptimizerConfig& cfg, int max_iters = 200);

// The ten-point seeds of the two built-in refinements.
std::vector<FeasiblePoint> refine_seed_upper();
std::vector<FeasiblePoint> refine_seed_lower();

}  // namespace ew
