#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bornsim {

using BigInt = boost::multiprecision::cpp_int;

/// Exact binomial coefficient; 0 when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// The space of measurement histories: length measurements, each with
/// outcome_labels.size() equiprobable outcomes, outcome i counted toward
/// the region outcome_labels[i]. All k^N histories carry equal weight.
class HistoryEnsemble {
 public:
  HistoryEnsemble(std::size_t length, std::vector<std::string> outcome_labels);

  /// Two outcomes labeled "L" and "R".
  static HistoryEnsemble binary(std::size_t length);
  /// n outcomes labeled "L" followed by m labeled "R" (the equalized
  /// splitting of a sqrt(n):sqrt(m) amplitude pair).
  static HistoryEnsemble blocks(std::size_t length, std::size_t n,
                                std::size_t m);

  std::size_t length() const { return length_; }
  std::size_t outcome_count() const { return outcome_labels_.size(); }
  const std::vector<std::string>& outcome_labels() const {
    return outcome_labels_;
  }
  /// Number of outcomes carrying this label; throws for an unknown label.
  std::size_t label_count(const std::string& label) const;
  /// label_count / outcome_count, the per-measurement frequency target.
  double label_probability(const std::string& label) const;

 private:
  std::size_t length_;
  std::vector<std::string> outcome_labels_;
};

/// Exact test of |occurrences/length - label_count/outcome_count| < beta,
/// where beta enters as the exact binary value of the double. A history
/// sitting exactly on the band edge therefore counts as atypical.
bool frequency_within(std::uint64_t occurrences, std::uint64_t length,
                      std::uint64_t label_count, std::uint64_t outcome_count,
                      double beta);

/// Exact fraction of the k^N histories whose empirical frequency of
/// `label` lies strictly within beta of the target frequency. Computed
/// with exact integer binomial sums; only the final ratio is rounded to
/// double.
double fraction_within(const HistoryEnsemble& ensemble, double beta,
                       const std::string& label);

struct ConcentrationQuery {
  double alpha;  ///< tolerated atypical-history fraction, in (0,1)
  double beta;   ///< frequency tolerance, > 0
  double p;      ///< target frequency, in (0,1)

  ConcentrationQuery(double alpha_in, double beta_in, double p_in = 0.5);
};

/// ceil(ln(1/alpha) / beta^2), the Gaussian-regime estimate of how many
/// measurements push the atypical fraction below alpha. An asymptotic
/// estimate, not a tight bound; verify_estimate reports the exact tail.
std::uint64_t min_measurements(const ConcentrationQuery& query);

struct EstimateReport {
  std::uint64_t n_estimate;
  double atypical_fraction;  ///< exact atypical fraction at n_estimate
  bool holds;                ///< atypical_fraction <= alpha
};

/// Evaluates the estimate for the symmetric two-outcome case (p = 1/2):
/// computes N_est = min_measurements and the exact atypical fraction of
/// the 2^N_est histories at that length. Reports rather than asserts;
/// the estimate may be loose or violated at small N.
EstimateReport verify_estimate(const ConcentrationQuery& query);

/// Frequency statistics of histories sampled uniformly from the k^N
/// branches. Stores per-label occurrence histograms, so any band query
/// can be answered later.
struct SampleSummary {
  std::size_t length = 0;
  std::size_t outcome_count = 0;
  std::size_t sequence_count = 0;
  std::vector<std::string> labels;               // distinct, first-seen order
  std::vector<std::uint64_t> label_counts;       // outcomes per label
  std::vector<std::vector<std::uint64_t>> histograms;  // [label][occurrences]

  double mean_frequency(const std::string& label) const;
  /// Fraction of the sampled histories within beta of the label's target
  /// frequency (same exact band as fraction_within).
  double fraction_within(const std::string& label, double beta) const;
};

/// Draws `count` histories uniformly (each of the k^N branches equally
/// likely). Deterministic for a fixed seed.
SampleSummary sample_histories(const HistoryEnsemble& ensemble,
                               std::size_t count, std::uint64_t seed);

}  // namespace bornsim
