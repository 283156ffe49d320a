#pragma once

// Cubic prime counts against the conjectured main term, weighted
// von Mangoldt sums over cubic values, progression sums and the
// prime-power tail.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cubicprimes/arith.hpp"

namespace cubic {

inline constexpr u64 kDefaultPCutoff = 1'000'000;

struct CubicPrime {
  i64 n = 0;
  u64 p = 0;
  friend bool operator==(const CubicPrime&, const CubicPrime&) = default;
};

struct CountRecord {
  u64 x = 0;
  u64 observed = 0;
  double predicted = 0.0;  // NaN below x = 8
  double ratio = 0.0;      // observed / predicted
  u64 p_cutoff = 0;
};

enum class WeightKind { Power, Totient, Sigma, Tau };

/// Weight applied to the index n (not to f(n)).
struct Weight {
  WeightKind kind = WeightKind::Power;
  unsigned exponent = 1;  // Power only

  static Weight power(unsigned k) { return {WeightKind::Power, k}; }
  static Weight totient() { return {WeightKind::Totient, 0}; }
  static Weight sigma() { return {WeightKind::Sigma, 0}; }
  static Weight tau() { return {WeightKind::Tau, 0}; }
  /// "power:K", "totient", "sigma" or "tau".
  static Weight parse(std::string_view text);

  double operator()(u64 n) const;
  std::string name() const;
  friend bool operator==(const Weight&, const Weight&) = default;
};

struct WeightedSumRecord {
  u64 x = 0;
  Weight weight;
  double value = 0.0;
  double tail_value = 0.0;  // terms with f(n) = p^v, v >= 2
  double bound = 0.0;       // sqrt(x) log^2 x
};

struct ProgressionSum {
  u64 q = 0;
  i64 a = 0;
  u64 x = 0;
  std::vector<u64> roots;  // b in [0, q) with b^3 = a mod q
  u64 exact = 0;
  u64 closed_form = 0;        // sum_b sum_{m=0}^{M_b} (qm + b)
  u64 uncorrected_closed_form = 0;  // same without the m = 0 term b
  double leading = 0.0;       // |roots| x^2 / (2q)
};

struct PrimePowerTail {
  double tail = 0.0;
  double bound = 0.0;
};

/// Smallest n with n^3 + k >= 2.
i64 cubic_index_start(i64 k);

std::vector<CubicPrime> enumerate_cubic_primes(i64 k, i64 n_max);
u64 count_cubic_primes(i64 k, u64 x, unsigned threads = 1);

/// Product over primes p = 1 mod 3, p <= p_cutoff, p not dividing k, of
/// 1 - 2 chi(-k) / (p - 1), multiplied in increasing p.
double singular_series(i64 k, u64 p_cutoff);

/// singular_series * x^(1/3) / log x; x >= 8.
double predicted_count(i64 k, u64 x, u64 p_cutoff = kDefaultPCutoff);

std::vector<CountRecord> count_table(i64 k, std::span<const u64> checkpoints, u64 p_cutoff = kDefaultPCutoff,
                                     unsigned threads = 1);

/// sum over n >= 0 with 1 <= f(n) <= x of w(n) Lambda(f(n)); f cubic with
/// positive leading coefficient.
WeightedSumRecord weighted_lambda_sum(const Polynomial& f, Weight w, u64 x, unsigned threads = 1);

/// -sum_{d <= x + k} mu(d) log d sum_{n : d | n^3 + k} n over the same
/// index set as weighted_lambda_sum(x^3 + k, power(1), x). x <= 10^5.
double lambda_sum_rhs(i64 k, u64 x);

ProgressionSum progression_weighted_sum(u64 q, i64 a, u64 x);

PrimePowerTail prime_power_tail(i64 k, u64 x);

}  // namespace cubic
