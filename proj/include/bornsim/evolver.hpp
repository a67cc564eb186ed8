#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "bornsim/chain.hpp"

namespace bornsim {

/// One constant-Hamiltonian interval of a pulse sequence.
struct EvolutionSegment {
  DotChain chain;
  double duration;

  EvolutionSegment(DotChain chain_in, double duration_in);
};

struct Eigensystem {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // orthonormal, column k belongs to values[k]
};

/// Dense matrix of the chain Hamiltonian:
/// H(j,j) = on_site[j], H(j,j+1) = H(j+1,j) = -hopping[j].
Eigen::MatrixXd hamiltonian_matrix(const DotChain& chain);

Eigensystem eigensystem(const DotChain& chain);

/// E_max - E_min of the 2x2 sub-Hamiltonian of an adjacent dot pair,
/// i.e. sqrt((eps_i - eps_j)^2 + 4 tau^2). For degenerate dots this is
/// 2|tau|.
double level_splitting(const DotChain& chain, std::size_t first,
                       std::size_t second);

/// exp(-i H t) |state>, computed through the eigendecomposition of H.
/// Exactly unitary up to roundoff; no integrator error.
QuantumState evolve(const QuantumState& state, const EvolutionSegment& segment);

}  // namespace bornsim
