#pragma once

#include "ew/operators.hpp"

namespace ew {

enum class GenKind { exchange, transpose_first, M1, M2, M3, M1sq, M2sq };

std::string generator_name(GenKind g);
GenKind generator_by_name(const std::string& name);

class SymmetryError : public std::runtime_error {
public:
    explicit SymmetryError(const std::string& msg) : std::runtime_error(msg) {}
};

// Pi = (1/3) I(x)I + (1/2) sum_k lambda_k (x) lambda_k; equals the swap.
CMat exchange_op();

CMat m_matrix(int i);  // M_1, M_2, M_3 (diagonal 3x3 unitaries)

// Signed permutation of the Gell-Mann indices under lambda -> M_i lambda M_i^dag.
// Returns (target index, sign); 3 and 8 are fixed.
std::pair<int, int> m_action(int i, int k);

// Conjugation action on a witness, computed at the coefficient level:
// exchange swaps (i,j)->(j,i); transpose-first flips first indices {2,5,7};
// M_i applies the signed permutation to the first index; squares compose.
WitnessCoeffs act(GenKind g, const WitnessCoeffs& w);

const std::vector<GenKind>& generators_first_category();   // {Pi, T1, M1, M2, M3}
const std::vector<GenKind>& generators_second_category();  // {Pi, T1, M1^2, M2^2}

struct Orbit {
    WitnessCoeffs representative;
    std::vector<WitnessCoeffs> members;  // canonicalized, breadth-first order
    std::vector<GenKind> generators;
};

// Breadth-first closure; members distinct at the coefficient level within 1e-12.
Orbit orbit(const WitnessCoeffs& w, const std::vector<GenKind>& gens, size_t cap = 100000);

}  // namespace ew
