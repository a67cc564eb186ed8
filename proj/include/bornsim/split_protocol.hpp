#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "bornsim/chain.hpp"
#include "bornsim/evolver.hpp"

namespace bornsim {

/// A pulse switches on exactly one chain parameter for a fixed time:
/// either one hopping (resonant transfer within a dot pair, every other
/// coupling off) or one on-site energy (phase rotation of a decoupled
/// dot). Everything not named by the pulse is held at zero, so each
/// pulse is an exactly solvable two-level (or one-level) problem.
struct Pulse {
  enum class Kind { transfer, phase };

  Kind kind;
  std::size_t index;  ///< transfer: hopping index (dots index, index+1); phase: dot index
  double strength;    ///< transfer: hopping tau; phase: on-site energy eps
  double duration;
};

struct PulseSchedule {
  std::vector<Pulse> pulses;
};

/// The chain that is switched on while `pulse` runs.
DotChain pulse_chain(const Pulse& pulse, std::size_t site_count);

/// Equalization plan over left_dots + right_dots sites. No segment ever
/// couples across the block boundary, so the two block norms are
/// separately conserved throughout.
struct SplitPlan {
  std::size_t left_dots;
  std::size_t right_dots;
  PulseSchedule schedule;

  std::size_t site_count() const { return left_dots + right_dots; }
  RegionPartition partition() const;
};

/// Relative tolerance for "all dot norms equal" after running a plan.
inline constexpr double equalization_tolerance = 1e-8;

/// Best rational approximation n/m to r^2 with m <= max_denominator,
/// minimizing |r^2 - n/m|; ties resolved toward the smaller denominator,
/// then the smaller numerator. n is clamped to >= 1. The search treats
/// r^2 as the exact binary value of the double and walks the continued
/// fraction of that value, so the optimum is exact.
std::pair<std::uint64_t, std::uint64_t> approximate_ratio(
    double r, std::uint64_t max_denominator);

/// Smallest t >= 0 with sin^2(delta_e * t / 2) = f, i.e. the pulse time
/// after which a resonant pair has moved the fraction f of the source
/// dot's norm into an initially empty partner dot.
double pulse_duration_for_fraction(double fraction, double delta_e);

/// (sqrt(n), 0, ..., 0 | sqrt(m), 0, ..., 0) over n + m dots.
QuantumState canonical_start(std::size_t n, std::size_t m);

/// Left-to-right cascade that spreads the canonical start over all dots
/// with equal norms: within a block of k dots, pulse j moves the
/// fraction (k-j)/(k-j+1) of the current dot's norm into the next empty
/// dot, leaving norm 1 behind. All transfer pulses use tau = 1 between
/// degenerate dots (delta_e = 2).
SplitPlan plan_equalization(std::size_t n, std::size_t m);

/// Runs the plan's schedule on `state`. Rejects states of the wrong
/// dimension and plans that couple across the L/R boundary.
QuantumState execute(const SplitPlan& plan, const QuantumState& state);

/// Largest relative deviation of any |A_j|^2 from the equal share
/// total/site_count. Zero for a perfectly equalized state.
double max_equalization_error(const QuantumState& state);

/// On-site pulse (eps, T) with eps*T = arg(A_dot) mod 2pi, plus the state
/// after applying it: |A_dot| is unchanged, arg(A_dot) becomes 0, every
/// other amplitude is untouched. The dot must be decoupled in `chain`
/// (both adjacent hoppings exactly zero), otherwise the pulse would leak
/// norm. A real nonnegative amplitude yields an empty schedule.
std::pair<PulseSchedule, QuantumState> zero_phase(const QuantumState& state,
                                                  std::size_t dot,
                                                  const DotChain& chain,
                                                  double pulse_energy = 1.0);

}  // namespace bornsim
