#pragma once

#include <iosfwd>

#include "ew/operators.hpp"

namespace ew {

class WitnessIoError : public std::runtime_error {
public:
    explicit WitnessIoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Line-oriented key-value witness format, one coefficient per line:
//   format=1
//   name=<optional>
//   a0=<decimal, 17 significant digits>
//   term i=<1..8> j=<1..8> [scale=sqrt3] c=<decimal>
// Decimals carry 17 significant digits, so serialize/parse round-trips are
// bit-exact.  Unknown keys are rejected with the offending line number.
void write_witness_kv(std::ostream& os, const WitnessCoeffs& w);
WitnessCoeffs read_witness_kv(std::istream& is);

void save_witness(const std::string& path, const WitnessCoeffs& w);
WitnessCoeffs load_witness(const std::string& path);

std::string witness_to_json(const WitnessCoeffs& w);

}  // namespace ew
