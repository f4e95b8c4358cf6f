// Copyright 2026 The benford Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "benford/digits.hpp"

namespace benford {

struct ChiSquareResult {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
};

/// Pearson chi-square of the histogram counts against a reference
/// distribution given per category (ascending tuple index, one probability
/// per histogram category).
///
/// Categories with zero reference probability and zero count are dropped;
/// a nonzero count on a zero-probability category is a domain error, as is
/// an empty histogram or a reference that does not sum to 1 within 1e-9.
/// The p-value is the chi-square survival function, evaluated through the
/// regularized upper incomplete gamma function.
ChiSquareResult chi_square_stat(const DigitHistogram& hist,
                                std::span<const double> expected);

/// Mean absolute deviation between observed fractions and the reference,
/// averaged over all categories. Domain error on an empty histogram.
double mad_stat(const DigitHistogram& hist, std::span<const double> expected);

/// Total variation distance: half the L1 distance between observed
/// fractions and the reference. Bounded in [0,1].
double total_variation_stat(const DigitHistogram& hist,
                            std::span<const double> expected);

/// Observed digit statistics of a dataset against the Benford reference.
/// Carries no verdict; thresholds are the caller's policy.
struct FitReport {
  int base = 10;
  int n_digits = 1;
  std::uint64_t index_min = 1;      // tuple index of the first category
  std::vector<double> observed;     // fractions by ascending tuple index
  std::vector<double> expected;     // reference probabilities, same order
  std::uint64_t counts_total = 0;
  std::uint64_t excluded = 0;
  double chi_square = 0.0;
  int chi_square_dof = 0;
  double p_value = 1.0;
  double mad = 0.0;
  double total_variation = 0.0;
};

/// Histogram + all three statistics against the exact Benford reference.
/// Propagates the component errors (in particular, empty input).
FitReport conformance_report(std::span<const double> values, int n, int base,
                             double threshold = 0.0);

/// Same report, computed from an already-built histogram.
FitReport conformance_report(const DigitHistogram& hist);

}  // namespace benford
