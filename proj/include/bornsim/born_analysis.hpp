#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "bornsim/chain.hpp"

namespace bornsim {

/// Candidate probability law P proportional to |A|^exponent.
struct PowerRule {
  double exponent;

  explicit PowerRule(double exponent_in);
};

/// P_region = sum_{j in region} |A_j|^m / sum_all |A_j|^m.
/// Throws for an all-zero state (probabilities undefined).
std::map<std::string, double> power_rule_probabilities(
    const QuantumState& state, const RegionPartition& partition,
    const PowerRule& rule);

/// The exponent-2 rule.
std::map<std::string, double> born_probabilities(
    const QuantumState& state, const RegionPartition& partition);

struct DeformationRecord {
  double before;  ///< P_L prior to the right-block equalization
  double after;   ///< P_L after it
  double change;  ///< |after - before|
};

/// The discrimination experiment: start from amplitudes (1, n), spread
/// the right amplitude over n^2 dots by resonant pulses (a deformation
/// confined to the right region), and report each candidate exponent's
/// left-region probability before and after. Norm conservation plus
/// regional isolation force the exponent-2 entry to be unchanged; every
/// other exponent shifts.
std::map<double, DeformationRecord> deformation_discrimination(
    std::size_t n, const std::vector<double>& exponents);

struct ParsevalResult {
  double norm_x;
  double norm_k;
};

/// Total norm in the dot basis and after a unitary discrete Fourier
/// transform. The two agree for every state: the basis change conserves
/// the norm.
ParsevalResult parseval_check(const QuantumState& state);

}  // namespace bornsim
