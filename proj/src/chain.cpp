#include "bornsim/chain.hpp"

#include <stdexcept>
#include <utility>

namespace bornsim {

DotChain::DotChain(std::vector<double> on_site, std::vector<double> hopping)
    : on_site_(std::move(on_site)), hopping_(std::move(hopping)) {
  if (on_site_.empty()) {
    throw std::invalid_argument("DotChain: chain needs at least one dot");
  }
  if (hopping_.size() != on_site_.size() - 1) {
    throw std::invalid_argument(
        "DotChain: hopping count must be one less than the dot count");
  }
}

RegionPartition::RegionPartition(
    std::size_t site_count, std::map<std::string, std::set<std::size_t>> regions)
    : site_count_(site_count), regions_(std::move(regions)) {
  label_by_dot_.assign(site_count_, nullptr);
  std::size_t assigned = 0;
  for (const auto& [label, dots] : regions_) {
    for (std::size_t dot : dots) {
      if (dot >= site_count_) {
        throw std::invalid_argument("RegionPartition: dot index out of range");
      }
      if (label_by_dot_[dot] != nullptr) {
        throw std::invalid_argument(
            "RegionPartition: dot assigned to more than one region");
      }
      label_by_dot_[dot] = &label;
      ++assigned;
    }
  }
  if (assigned != site_count_) {
    throw std::invalid_argument(
        "RegionPartition: regions must cover every dot");
  }
}

RegionPartition RegionPartition::left_right(std::size_t left_count,
                                            std::size_t right_count) {
  std::map<std::string, std::set<std::size_t>> regions;
  for (std::size_t j = 0; j < left_count; ++j) regions["L"].insert(j);
  for (std::size_t j = 0; j < right_count; ++j)
    regions["R"].insert(left_count + j);
  return RegionPartition(left_count + right_count, std::move(regions));
}

const std::string& RegionPartition::region_of(std::size_t dot) const {
  if (dot >= site_count_) {
    throw std::invalid_argument("RegionPartition: dot index out of range");
  }
  return *label_by_dot_[dot];
}

double total_norm(const QuantumState& state) {
  double total = 0.0;
  for (const Complex& a : state.amplitudes) total += std::norm(a);
  return total;
}

std::map<std::string, double> regional_norms(const QuantumState& state,
                                             const RegionPartition& partition) {
  if (partition.site_count() != state.size()) {
    throw std::invalid_argument(
        "regional_norms: partition does not match the state dimension");
  }
  std::map<std::string, double> norms;
  for (const auto& [label, dots] : partition.regions()) {
    double sum = 0.0;
    for (std::size_t dot : dots) sum += std::norm(state.amplitudes[dot]);
    norms[label] = sum;
  }
  return norms;
}

bool is_isolated(const RegionPartition& partition, const DotChain& chain) {
  if (partition.site_count() != chain.site_count()) {
    throw std::invalid_argument(
        "is_isolated: partition does not match the chain");
  }
  for (std::size_t j = 0; j + 1 < chain.site_count(); ++j) {
    if (partition.region_of(j) != partition.region_of(j + 1) &&
        chain.hopping()[j] != 0.0) {
      return false;
    }
  }
  return true;
}

}  // namespace bornsim
