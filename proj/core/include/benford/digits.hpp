// Copyright 2026 The benford Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace benford {

inline constexpr int kMinBase = 2;
inline constexpr int kMaxBase = 36;

/// Largest tuple length n such that base^n fits in 63 bits. Digit tuples
/// are indexed internally by the integer M = sum d_i * base^(n-i), so n is
/// capped where M would overflow (18 for base 10, 62 for base 2).
int max_tuple_length(int base);

/// The first N significant digits of a positive value in some base.
/// The leading digit is never zero; all digits are below the base.
struct DigitTuple {
  int base;
  std::vector<int> digits;

  /// Validates the invariants; throws std::domain_error on violation.
  DigitTuple(int base, std::vector<int> digits);

  /// Rebuilds the tuple from its integer index (the digits of `index`
  /// written in `base`).
  static DigitTuple from_index(std::uint64_t index, int base);

  /// M = d_1 * base^(n-1) + ... + d_n.
  std::uint64_t index() const;

  bool operator==(const DigitTuple&) const = default;
};

/// First n significant digits of x in the given base, independent of any
/// power-of-base scaling of x.
///
/// The exponent is estimated in floating point and then corrected with
/// comparisons against base powers carried out in extended precision; any
/// value that lands too close to a digit boundary for extended precision
/// to decide is reclassified with exact integer arithmetic on the value's
/// binary representation. The returned digits are exact for every finite
/// positive double.
///
/// Throws std::domain_error on x <= 0, non-finite x, n < 1, base outside
/// [2,36], or n > max_tuple_length(base).
DigitTuple significant_digits(double x, int n, int base);

/// Equivalent to significant_digits(x, 1, base).digits[0].
int first_digit(double x, int base);

/// log_base(1 + 1/k), the probability that the first significant digit
/// equals k. Throws std::domain_error unless 1 <= k <= base-1.
double benford_prob_first(int k, int base);

/// log_base(1 + 1/M) for the tuple's integer index M.
double benford_prob_ndigits(const DigitTuple& tuple);

/// Benford probabilities of every n-digit tuple in ascending index order
/// (index base^(n-1) first). Sums to 1 up to rounding.
std::vector<double> benford_expected(int base, int n_digits);

/// Counts of leading-digit tuples over a dataset, with bookkeeping for the
/// values that cannot carry significant digits.
///
/// Values that are non-finite or <= threshold are tallied as excluded; the
/// threshold is 0 by default so exactly the nonpositive values drop out.
/// Categories are the base^n - base^(n-1) possible tuples, addressed by
/// their integer index.
class DigitHistogram {
 public:
  DigitHistogram(int base, int n_digits, double threshold = 0.0);

  void add(double value);
  void add(std::span<const double> values);

  /// Entrywise accumulation; associative and commutative, so partial
  /// histograms built in parallel can be reduced in any order. The two
  /// histograms must agree on base, tuple length, and threshold.
  DigitHistogram& merge(const DigitHistogram& other);

  int base() const { return base_; }
  int n_digits() const { return n_digits_; }
  double threshold() const { return threshold_; }
  std::uint64_t total_included() const { return included_; }
  std::uint64_t total_excluded() const { return excluded_; }

  /// Lowest tuple index, base^(n-1).
  std::uint64_t index_min() const { return index_min_; }
  std::size_t categories() const { return counts_.size(); }

  std::uint64_t count(std::uint64_t index) const;
  /// count(index) / total_included(); 0 when the histogram is empty.
  double fraction(std::uint64_t index) const;

  /// Dense counts by ascending tuple index.
  std::span<const std::uint64_t> counts() const { return counts_; }
  /// Dense fractions by ascending tuple index; sums to 1 when nonempty.
  std::vector<double> fractions() const;

  DigitTuple tuple_at(std::size_t category) const;

 private:
  int base_;
  int n_digits_;
  double threshold_;
  std::uint64_t index_min_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t included_ = 0;
  std::uint64_t excluded_ = 0;
};

/// One-shot histogram over a value sequence.
DigitHistogram digit_histogram(std::span<const double> values, int n,
                               int base, double threshold = 0.0);

}  // namespace benford
