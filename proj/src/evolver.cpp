#include "bornsim/evolver.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include <Eigen/Eigenvalues>

namespace bornsim {

EvolutionSegment::EvolutionSegment(DotChain chain_in, double duration_in)
    : chain(std::move(chain_in)), duration(duration_in) {
  if (!(duration >= 0.0)) {
    throw std::invalid_argument(
        "EvolutionSegment: duration must be nonnegative");
  }
}

Eigen::MatrixXd hamiltonian_matrix(const DotChain& chain) {
  const auto d = static_cast<Eigen::Index>(chain.site_count());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index j = 0; j < d; ++j) h(j, j) = chain.on_site()[j];
  for (Eigen::Index j = 0; j + 1 < d; ++j) {
    h(j, j + 1) = -chain.hopping()[j];
    h(j + 1, j) = -chain.hopping()[j];
  }
  return h;
}

Eigensystem eigensystem(const DotChain& chain) {
  const auto d = static_cast<Eigen::Index>(chain.site_count());
  Eigen::VectorXd diag(d);
  for (Eigen::Index j = 0; j < d; ++j) diag[j] = chain.on_site()[j];
  Eigen::VectorXd subdiag(d > 1 ? d - 1 : 0);
  for (Eigen::Index j = 0; j + 1 < d; ++j) subdiag[j] = -chain.hopping()[j];

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, subdiag, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigensystem: tridiagonal QR did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double level_splitting(const DotChain& chain, std::size_t first,
                       std::size_t second) {
  const std::size_t lo = std::min(first, second);
  const std::size_t hi = std::max(first, second);
  if (hi >= chain.site_count() || hi != lo + 1) {
    throw std::invalid_argument(
        "level_splitting: dots must be an adjacent in-range pair");
  }
  const double detuning = chain.on_site()[lo] - chain.on_site()[hi];
  return std::hypot(detuning, 2.0 * chain.hopping()[lo]);
}

QuantumState evolve(const QuantumState& state, const EvolutionSegment& segment) {
  const std::size_t d = segment.chain.site_count();
  if (state.size() != d) {
    throw std::invalid_argument(
        "evolve: state dimension does not match the chain");
  }

  const Eigensystem eig = eigensystem(segment.chain);
  const auto n = static_cast<Eigen::Index>(d);

  Eigen::VectorXd re(n), im(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    re[j] = state.amplitudes[j].real();
    im[j] = state.amplitudes[j].imag();
  }

  // Eigenbasis coefficients, rotated by exp(-i E_k t).
  Eigen::VectorXd cr = eig.vectors.transpose() * re;
  Eigen::VectorXd ci = eig.vectors.transpose() * im;
  for (Eigen::Index k = 0; k < n; ++k) {
    const double phase = eig.values[k] * segment.duration;
    const double c = std::cos(phase);
    const double s = std::sin(phase);
    const double a = cr[k];
    const double b = ci[k];
    cr[k] = a * c + b * s;
    ci[k] = b * c - a * s;
  }

  const Eigen::VectorXd out_re = eig.vectors * cr;
  const Eigen::VectorXd out_im = eig.vectors * ci;
  QuantumState result;
  result.amplitudes.resize(d);
  for (Eigen::Index j = 0; j < n; ++j) {
    result.amplitudes[j] = Complex(out_re[j], out_im[j]);
  }
  return result;
}

}  // namespace bornsim
