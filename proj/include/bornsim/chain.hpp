#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace bornsim {

using Complex = std::complex<double>;

/// Tight-binding chain of single-orbital dots.
///
/// on_site[j] is the energy of dot j, hopping[j] the tunneling matrix
/// element between dots j and j+1. A hopping of exactly 0.0 is an
/// impenetrable barrier: the regions on either side evolve independently.
/// Units: hbar = 1, so times are inverse energies.
class DotChain {
 public:
  DotChain(std::vector<double> on_site, std::vector<double> hopping);

  std::size_t site_count() const { return on_site_.size(); }
  const std::vector<double>& on_site() const { return on_site_; }
  const std::vector<double>& hopping() const { return hopping_; }

 private:
  std::vector<double> on_site_;
  std::vector<double> hopping_;
};

/// Wave function in the dot basis, one complex amplitude per dot.
/// States are not forced to norm 1; probabilities are ratios of norms.
struct QuantumState {
  std::vector<Complex> amplitudes;

  std::size_t size() const { return amplitudes.size(); }
};

/// Disjoint labeled dot sets covering a chain (e.g. L and R of a barrier).
class RegionPartition {
 public:
  RegionPartition(std::size_t site_count,
                  std::map<std::string, std::set<std::size_t>> regions);

  /// "L" = dots [0, left_count), "R" = the remaining right_count dots.
  static RegionPartition left_right(std::size_t left_count,
                                    std::size_t right_count);

  std::size_t site_count() const { return site_count_; }
  const std::map<std::string, std::set<std::size_t>>& regions() const {
    return regions_;
  }
  const std::string& region_of(std::size_t dot) const;

 private:
  std::size_t site_count_;
  std::map<std::string, std::set<std::size_t>> regions_;
  std::vector<const std::string*> label_by_dot_;
};

/// Sum of |A_j|^2 over all dots.
double total_norm(const QuantumState& state);

/// Sum of |A_j|^2 per region. Values add up to total_norm(state).
std::map<std::string, double> regional_norms(const QuantumState& state,
                                             const RegionPartition& partition);

/// True iff every hopping crossing a region boundary is exactly zero, so
/// each region's norm is separately conserved under evolution.
bool is_isolated(const RegionPartition& partition, const DotChain& chain);

}  // namespace bornsim
