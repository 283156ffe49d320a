#pragma once

// Partial sums of sum_{n in D_f} mu(n) log n / n^s and Epstein zeta sums
// over positive definite binary quadratic forms.

#include <optional>
#include <span>
#include <vector>

#include "cubicprimes/arith.hpp"
#include "cubicprimes/residues.hpp"

namespace cubic {

struct PartialSumRecord {
  u64 x = 0;
  double value = 0.0;
  u64 terms_used = 0;  // members n <= x of D_f with mu(n) != 0
};

struct KappaTrajectory {
  std::vector<PartialSumRecord> records;
  std::optional<double> fitted_kappa;
  double fit_residual = 0.0;
};

inline constexpr u64 kSeriesBudget = 10'000'000;

/// Running sum over n = 1, 2, ... in increasing order. Advancing in any
/// sequence of steps performs the same floating-point additions.
class DirichletAccumulator {
 public:
  DirichletAccumulator(const Polynomial& f, double s, u64 x_max);

  void advance_to(u64 x);
  u64 position() const { return pos_; }
  PartialSumRecord record() const { return {pos_, value_, terms_}; }

 private:
  double s_;
  u64 x_max_;
  std::vector<std::int8_t> mu_;
  std::vector<bool> member_;
  u64 pos_ = 0;
  double value_ = 0.0;
  u64 terms_ = 0;
};

/// 10, 100, ... below x, then x itself.
std::vector<u64> decade_checkpoints(u64 x);
/// round(10^(j/per_decade)) deduplicated, then x itself.
std::vector<u64> log_spaced_checkpoints(u64 x, int per_decade = 4);

/// Records at each checkpoint (default: decade_checkpoints(x)). s >= 1.
std::vector<PartialSumRecord> dirichlet_partial_sum(const Polynomial& f, double s, u64 x,
                                                    std::span<const u64> checkpoints = {});

/// Sum over lo <= n <= hi only.
double dirichlet_range_sum(const Polynomial& f, double s, u64 lo, u64 hi);

/// kappa = -(mean of the last quarter of the records, at least one);
/// residual = max deviation from that mean within the quarter.
KappaTrajectory fit_kappa(std::vector<PartialSumRecord> records);
KappaTrajectory kappa_trajectory(const Polynomial& f, u64 x_max);

/// #{(x, y) in Z^2 : Q(x, y) = n}, n >= 1.
u64 epstein_r(const QuadraticForm& q, u64 n);
/// r_Q(n) for n = 0..n_max from one lattice sweep; entry 0 counts only (0,0).
std::vector<u64> epstein_r_table(const QuadraticForm& q, u64 n_max);

/// sum over lattice points 0 < Q(x, y) <= n_max of Q(x, y)^-s, s > 1.
double epstein_zeta_partial(const QuadraticForm& q, double s, u64 n_max);
/// sum_{n <= n_max} r_Q(n) n^-s with r_Q counted per n. n_max <= 10^6.
double epstein_zeta_partial_per_n(const QuadraticForm& q, double s, u64 n_max);
/// sum_{n <= n_max} mu(n) r_Q(n) n^-s, s >= 1.
double epstein_mu_sum(const QuadraticForm& q, double s, u64 n_max);

}  // namespace cubic
