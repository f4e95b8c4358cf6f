// Copyright 2026 The benford Authors.
// SPDX-License-Identifier: Apache-2.0

#include "benford/digits.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace benford {

namespace {

// Per-base scaling tables. pow[] holds base^e in extended precision, far
// enough to bracket every finite double plus the longest digit tuple;
// ipow[] holds the exact integer powers that bound tuple indices.
struct BasePowers {
  int base = 0;
  int odd = 0;   // odd part o of base = o * 2^twos
  int twos = 0;
  int max_n = 0;
  long double base_ld = 0.0L;
  double log_b_of_2 = 0.0;
  std::vector<long double> pow;
  std::vector<std::uint64_t> ipow;
};

const BasePowers& powers_for(int base) {
  static const std::array<BasePowers, kMaxBase + 1> tables = [] {
    std::array<BasePowers, kMaxBase + 1> t{};
    for (int b = kMinBase; b <= kMaxBase; ++b) {
      BasePowers& bp = t[b];
      bp.base = b;
      bp.odd = b;
      while (bp.odd % 2 == 0) {
        bp.odd /= 2;
        ++bp.twos;
      }
      bp.base_ld = static_cast<long double>(b);
      bp.log_b_of_2 = std::log(2.0) / std::log(static_cast<double>(b));
      // covers |floor(log_b x)| for every finite double, plus tuple length
      const int need = static_cast<int>(1075.0 * bp.log_b_of_2) + 66;
      bp.pow.reserve(static_cast<std::size_t>(need) + 1);
      bp.pow.push_back(1.0L);
      for (int e = 1; e <= need; ++e) bp.pow.push_back(bp.pow.back() * b);
      bp.ipow.push_back(1);
      const std::uint64_t lim = (std::uint64_t{1} << 63) - 1;
      while (bp.ipow.back() <= lim / static_cast<std::uint64_t>(b))
        bp.ipow.push_back(bp.ipow.back() * static_cast<std::uint64_t>(b));
      bp.max_n = static_cast<int>(bp.ipow.size()) - 1;
    }
    return t;
  }();
  return tables[base];
}

void check_base(int base) {
  if (base < kMinBase || base > kMaxBase)
    throw std::domain_error("base must be in [2, 36], got " +
                            std::to_string(base));
}

void check_length(int n, int base) {
  if (n < 1)
    throw std::domain_error("digit count must be >= 1, got " +
                            std::to_string(n));
  const int cap = powers_for(base).max_n;
  if (n > cap)
    throw std::domain_error("digit count " + std::to_string(n) +
                            " exceeds the representable tuple length " +
                            std::to_string(cap) + " for base " +
                            std::to_string(base));
}

void check_value(double x) {
  if (!std::isfinite(x) || x <= 0.0)
    throw std::domain_error("significant digits require a finite value > 0");
}

// Fixed-capacity little-endian big integer, large enough for any
// comparison of a double against a power of a base in [2,36].
class BigUint {
 public:
  BigUint() = default;
  explicit BigUint(std::uint64_t v) {
    if (v != 0) {
      w_[0] = v;
      len_ = 1;
    }
  }

  bool is_zero() const { return len_ == 0; }

  std::uint64_t low_u64() const { return len_ == 0 ? 0 : w_[0]; }

  void mul_u64(std::uint64_t m) {
    if (m == 0 || len_ == 0) {
      len_ = 0;
      return;
    }
    unsigned __int128 carry = 0;
    for (int i = 0; i < len_; ++i) {
      const unsigned __int128 p =
          static_cast<unsigned __int128>(w_[i]) * m + carry;
      w_[i] = static_cast<std::uint64_t>(p);
      carry = p >> 64;
    }
    while (carry != 0) {
      grow();
      w_[len_ - 1] = static_cast<std::uint64_t>(carry);
      carry >>= 64;
    }
  }

  void shl(long long bits) {
    if (bits <= 0 || len_ == 0) return;
    const int words = static_cast<int>(bits / 64);
    const int rem = static_cast<int>(bits % 64);
    const int old_len = len_;
    len_ += words + (rem != 0 ? 1 : 0);
    if (len_ > kCap) throw std::logic_error("BigUint capacity exceeded");
    for (int i = len_ - 1; i >= 0; --i) {
      const int src = i - words;
      std::uint64_t hi = (src >= 0 && src < old_len) ? w_[src] : 0;
      std::uint64_t lo = (src - 1 >= 0 && src - 1 < old_len) ? w_[src - 1] : 0;
      w_[i] = rem == 0 ? hi : (hi << rem) | (lo >> (64 - rem));
    }
    trim();
  }

  void shr(long long bits) {
    if (bits <= 0 || len_ == 0) return;
    const int words = static_cast<int>(bits / 64);
    const int rem = static_cast<int>(bits % 64);
    if (words >= len_) {
      len_ = 0;
      return;
    }
    for (int i = 0; i < len_ - words; ++i) {
      std::uint64_t lo = w_[i + words];
      std::uint64_t hi = (i + words + 1 < len_) ? w_[i + words + 1] : 0;
      w_[i] = rem == 0 ? lo : (lo >> rem) | (hi << (64 - rem));
    }
    len_ -= words;
    trim();
  }

  void shr1() { shr(1); }

  // requires *this >= other
  void sub(const BigUint& other) {
    std::uint64_t borrow = 0;
    for (int i = 0; i < len_; ++i) {
      const std::uint64_t o = i < other.len_ ? other.w_[i] : 0;
      const std::uint64_t before = w_[i];
      const std::uint64_t after = before - o - borrow;
      borrow = (before < o || (borrow != 0 && before == o)) ? 1 : 0;
      w_[i] = after;
    }
    trim();
  }

  static int compare(const BigUint& a, const BigUint& b) {
    if (a.len_ != b.len_) return a.len_ < b.len_ ? -1 : 1;
    for (int i = a.len_ - 1; i >= 0; --i) {
      if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i] ? -1 : 1;
    }
    return 0;
  }

 private:
  static constexpr int kCap = 52;

  void grow() {
    if (++len_ > kCap) throw std::logic_error("BigUint capacity exceeded");
  }

  void trim() {
    while (len_ > 0 && w_[len_ - 1] == 0) --len_;
  }

  std::array<std::uint64_t, kCap> w_{};
  int len_ = 0;
};

BigUint pow_odd(int odd, long long p) {
  BigUint r(1);
  if (odd == 1) return r;
  for (long long i = 0; i < p; ++i) r.mul_u64(static_cast<std::uint64_t>(odd));
  return r;
}

// floor quotient of num/den, known to fit in 63 bits
std::uint64_t div_floor_u64(BigUint num, BigUint den) {
  den.shl(62);
  std::uint64_t q = 0;
  for (int k = 62; k >= 0; --k) {
    if (BigUint::compare(num, den) >= 0) {
      num.sub(den);
      q |= std::uint64_t{1} << k;
    }
    den.shr1();
  }
  return q;
}

struct Decomposed {
  std::uint64_t f;  // integer mantissa in [2^52, 2^53)
  long long q;      // value = f * 2^q
};

Decomposed decompose(double x) {
  int e2 = 0;
  const double fr = std::frexp(x, &e2);
  return {static_cast<std::uint64_t>(std::ldexp(fr, 53)),
          static_cast<long long>(e2) - 53};
}

// sign of (x - base^e), exact
int cmp_value_vs_pow(const Decomposed& d, const BasePowers& bp, long long e) {
  BigUint lhs(d.f);
  BigUint rhs(1);
  if (e >= 0) {
    rhs = pow_odd(bp.odd, e);
  } else {
    lhs = pow_odd(bp.odd, -e);
    lhs.mul_u64(d.f);
  }
  const long long shift = d.q - static_cast<long long>(bp.twos) * e;
  if (shift >= 0)
    lhs.shl(shift);
  else
    rhs.shl(-shift);
  return BigUint::compare(lhs, rhs);
}

// floor(x * base^j), exact; result must fit in 63 bits
std::uint64_t floor_scaled(const Decomposed& d, const BasePowers& bp,
                           long long j) {
  if (j >= 0) {
    BigUint v = pow_odd(bp.odd, j);
    v.mul_u64(d.f);
    const long long t = d.q + static_cast<long long>(bp.twos) * j;
    if (t >= 0)
      v.shl(t);
    else
      v.shr(-t);
    return v.low_u64();
  }
  BigUint num(d.f);
  BigUint den = pow_odd(bp.odd, -j);
  const long long t = d.q + static_cast<long long>(bp.twos) * j;
  if (t >= 0)
    num.shl(t);
  else
    den.shl(-t);
  return div_floor_u64(num, den);
}

std::uint64_t tuple_index_exact(double x, int n, const BasePowers& bp,
                                long long e_hint) {
  const Decomposed d = decompose(x);
  long long e = e_hint;
  while (cmp_value_vs_pow(d, bp, e) < 0) --e;
  while (cmp_value_vs_pow(d, bp, e + 1) >= 0) ++e;
  return floor_scaled(d, bp, static_cast<long long>(n) - 1 - e);
}

long double scaled_mantissa(double x, long long e, const BasePowers& bp) {
  if (e >= 0) return static_cast<long double>(x) / bp.pow[std::size_t(e)];
  return static_cast<long double>(x) * bp.pow[std::size_t(-e)];
}

// Index M of the first n significant digits of x, exact for every finite
// positive double. Preconditions are the caller's responsibility.
std::uint64_t tuple_index(double x, int n, const BasePowers& bp) {
  int e2 = 0;
  (void)std::frexp(x, &e2);
  long long e = static_cast<long long>(
      std::floor((static_cast<double>(e2) - 0.5) * bp.log_b_of_2));

  // Bring the scaled mantissa into [1, base); a handful of steps suffices
  // because the estimate is off by at most ~2.
  bool confident = false;
  long double m = 0.0L;
  for (int guard = 0; guard < 6; ++guard) {
    const long long idx = e >= 0 ? e : -e;
    if (static_cast<std::size_t>(idx) >= bp.pow.size()) break;
    m = scaled_mantissa(x, e, bp);
    if (m < 1.0L) {
      --e;
      continue;
    }
    if (m >= bp.base_ld) {
      ++e;
      continue;
    }
    confident = true;
    break;
  }

  // Extended precision leaves ~1e-16 relative slack; refuse to decide
  // anything closer than 1e-12 to a boundary and fall back to integer
  // arithmetic on the value's binary representation instead.
  if (confident &&
      (m < 1.0L + 1e-12L || m > bp.base_ld * (1.0L - 1e-12L)))
    confident = false;

  if (confident) {
    const long double scaled = m * bp.pow[std::size_t(n - 1)];
    const std::uint64_t idx = static_cast<std::uint64_t>(scaled);
    const long double frac = scaled - static_cast<long double>(idx);
    const long double margin = std::max(1e-13L, scaled * 1e-13L);
    if (frac >= margin && frac <= 1.0L - margin && idx >= bp.ipow[n - 1] &&
        idx < bp.ipow[n])
      return idx;
  }
  return tuple_index_exact(x, n, bp, e);
}

}  // namespace

int max_tuple_length(int base) {
  check_base(base);
  return powers_for(base).max_n;
}

DigitTuple::DigitTuple(int base_in, std::vector<int> digits_in)
    : base(base_in), digits(std::move(digits_in)) {
  check_base(base);
  if (digits.empty()) throw std::domain_error("digit tuple must be nonempty");
  check_length(static_cast<int>(digits.size()), base);
  if (digits.front() < 1 || digits.front() >= base)
    throw std::domain_error("leading significant digit must be in [1, base)");
  for (std::size_t i = 1; i < digits.size(); ++i) {
    if (digits[i] < 0 || digits[i] >= base)
      throw std::domain_error("digit out of range for base");
  }
}

DigitTuple DigitTuple::from_index(std::uint64_t index, int base) {
  check_base(base);
  if (index == 0) throw std::domain_error("tuple index must be >= 1");
  std::vector<int> ds;
  while (index != 0) {
    ds.push_back(static_cast<int>(index % static_cast<std::uint64_t>(base)));
    index /= static_cast<std::uint64_t>(base);
  }
  std::reverse(ds.begin(), ds.end());
  return DigitTuple(base, std::move(ds));
}

std::uint64_t DigitTuple::index() const {
  std::uint64_t m = 0;
  for (int d : digits) m = m * static_cast<std::uint64_t>(base) + d;
  return m;
}

DigitTuple significant_digits(double x, int n, int base) {
  check_base(base);
  check_length(n, base);
  check_value(x);
  return DigitTuple::from_index(tuple_index(x, n, powers_for(base)), base);
}

int first_digit(double x, int base) {
  check_base(base);
  check_value(x);
  return static_cast<int>(tuple_index(x, 1, powers_for(base)));
}

double benford_prob_first(int k, int base) {
  check_base(base);
  if (k < 1 || k >= base)
    throw std::domain_error("first digit must be in [1, base)");
  return std::log1p(1.0 / k) / std::log(static_cast<double>(base));
}

double benford_prob_ndigits(const DigitTuple& tuple) {
  const double m = static_cast<double>(tuple.index());
  return std::log1p(1.0 / m) / std::log(static_cast<double>(tuple.base));
}

std::vector<double> benford_expected(int base, int n_digits) {
  check_base(base);
  check_length(n_digits, base);
  const BasePowers& bp = powers_for(base);
  const std::uint64_t lo = bp.ipow[n_digits - 1];
  const std::uint64_t hi = bp.ipow[n_digits];
  const double log_base = std::log(static_cast<double>(base));
  std::vector<double> p;
  p.reserve(hi - lo);
  for (std::uint64_t m = lo; m < hi; ++m)
    p.push_back(std::log1p(1.0 / static_cast<double>(m)) / log_base);
  return p;
}

DigitHistogram::DigitHistogram(int base, int n_digits, double threshold)
    : base_(base), n_digits_(n_digits), threshold_(threshold) {
  check_base(base);
  check_length(n_digits, base);
  if (!std::isfinite(threshold) || threshold < 0.0)
    throw std::domain_error("exclusion threshold must be finite and >= 0");
  const BasePowers& bp = powers_for(base);
  index_min_ = bp.ipow[n_digits - 1];
  const std::uint64_t n_cat = bp.ipow[n_digits] - index_min_;
  if (n_cat > (std::uint64_t{1} << 22))
    throw std::domain_error("digit histogram would need " +
                            std::to_string(n_cat) +
                            " categories; cap is 2^22");
  counts_.assign(static_cast<std::size_t>(n_cat), 0);
}

void DigitHistogram::add(double value) {
  if (!std::isfinite(value) || value <= threshold_) {
    ++excluded_;
    return;
  }
  const std::uint64_t idx = tuple_index(value, n_digits_, powers_for(base_));
  ++counts_[static_cast<std::size_t>(idx - index_min_)];
  ++included_;
}

void DigitHistogram::add(std::span<const double> values) {
  for (double v : values) add(v);
}

DigitHistogram& DigitHistogram::merge(const DigitHistogram& other) {
  if (other.base_ != base_ || other.n_digits_ != n_digits_ ||
      other.threshold_ != threshold_)
    throw std::invalid_argument(
        "histogram merge requires identical base, length, and threshold");
  for (std::size_t i = 0; i < counts_.size(); ++i)
    counts_[i] += other.counts_[i];
  included_ += other.included_;
  excluded_ += other.excluded_;
  return *this;
}

std::uint64_t DigitHistogram::count(std::uint64_t index) const {
  if (index < index_min_ || index - index_min_ >= counts_.size())
    throw std::domain_error("tuple index outside histogram categories");
  return counts_[static_cast<std::size_t>(index - index_min_)];
}

double DigitHistogram::fraction(std::uint64_t index) const {
  const std::uint64_t c = count(index);
  if (included_ == 0) return 0.0;
  return static_cast<double>(c) / static_cast<double>(included_);
}

std::vector<double> DigitHistogram::fractions() const {
  if (included_ == 0) return {};
  std::vector<double> f;
  f.reserve(counts_.size());
  for (std::uint64_t c : counts_)
    f.push_back(static_cast<double>(c) / static_cast<double>(included_));
  return f;
}

DigitTuple DigitHistogram::tuple_at(std::size_t category) const {
  if (category >= counts_.size())
    throw std::domain_error("category out of range");
  return DigitTuple::from_index(index_min_ + category, base_);
}

DigitHistogram digit_histogram(std::span<const double> values, int n,
                               int base, double threshold) {
  DigitHistogram h(base, n, threshold);
  h.add(values);
  return h;
}

}  // namespace benford
