#include "cubicprimes/series.hpp"

#include <algorithm>
#include <cmath>

#include "cubicprimes/dset.hpp"
#include "cubicprimes/error.hpp"

namespace cubic {

namespace {

void check_budget(u64 x, u64 budget, const char* what) {
  if (x > budget) {
    throw ResourceError(std::string(what) + " range " + std::to_string(x) + " exceeds budget " +
                        std::to_string(budget));
  }
}

std::vector<u64> normalized_checkpoints(std::span<const u64> cps, u64 x) {
  std::vector<u64> out(cps.begin(), cps.end());
  if (out.empty()) out = decade_checkpoints(x);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] == 0 || out[i] > x || (i > 0 && out[i] <= out[i - 1])) {
      throw DomainError("checkpoints must be ascending within [1, x]");
    }
  }
  return out;
}

// Real x-interval of the ellipse slice Q(., y) <= n, widened by one on each side.
std::pair<i64, i64> row_bounds(const QuadraticForm& q, i64 y, u64 n) {
  const long double D = static_cast<long double>(-q.discriminant());
  const long double disc = 4.0L * q.a() * static_cast<long double>(n) - D * y * y;
  const long double root = disc > 0 ? std::sqrt(disc) : 0.0L;
  const long double centre = -static_cast<long double>(q.b()) * y;
  const long double two_a = 2.0L * q.a();
  return {static_cast<i64>(std::floor((centre - root) / two_a)) - 1,
          static_cast<i64>(std::ceil((centre + root) / two_a)) + 1};
}

i64 y_bound(const QuadraticForm& q, u64 n) {
  const i128 D = -q.discriminant();
  return static_cast<i64>(isqrt(static_cast<u128>(static_cast<i128>(4) * q.a() * static_cast<i128>(n) / D)));
}

}  // namespace

// ---------------------------------------------------------------------------
// Dirichlet partial sums

DirichletAccumulator::DirichletAccumulator(const Polynomial& f, double s, u64 x_max) : s_(s), x_max_(x_max) {
  if (!(s >= 1.0)) throw DomainError("Dirichlet partial sums are reported for real s >= 1");
  if (x_max == 0) throw DomainError("x must be >= 1");
  check_budget(x_max, kSeriesBudget, "Dirichlet sum");
  mu_ = sieve_range(std::max<u64>(x_max, 2)).mu;
  member_ = dset_indicator(f, x_max);
}

void DirichletAccumulator::advance_to(u64 x) {
  if (x < pos_ || x > x_max_) throw DomainError("accumulator can only advance within [position, x_max]");
  for (u64 n = pos_ + 1; n <= x; ++n) {
    if (!member_[n] || mu_[n] == 0) continue;
    ++terms_;
    if (n == 1) continue;
    const double nd = static_cast<double>(n);
    value_ += mu_[n] * std::log(nd) / std::pow(nd, s_);
  }
  pos_ = x;
}

std::vector<u64> decade_checkpoints(u64 x) {
  std::vector<u64> out;
  for (u64 c = 10; c < x; c *= 10) {
    out.push_back(c);
    if (c > (~u64{0}) / 10) break;
  }
  if (x > 0) out.push_back(x);
  return out;
}

std::vector<u64> log_spaced_checkpoints(u64 x, int per_decade) {
  std::vector<u64> out;
  for (int j = 0;; ++j) {
    const long double v = std::round(std::pow(10.0L, static_cast<long double>(j) / per_decade));
    if (v >= static_cast<long double>(x)) break;
    const u64 c = static_cast<u64>(v);
    if (out.empty() || out.back() != c) out.push_back(c);
  }
  if (x > 0) out.push_back(x);
  return out;
}

std::vector<PartialSumRecord> dirichlet_partial_sum(const Polynomial& f, double s, u64 x,
                                                    std::span<const u64> checkpoints) {
  const std::vector<u64> cps = normalized_checkpoints(checkpoints, x);
  DirichletAccumulator acc(f, s, x);
  std::vector<PartialSumRecord> out;
  for (const u64 c : cps) {
    acc.advance_to(c);
    out.push_back(acc.record());
  }
  return out;
}

double dirichlet_range_sum(const Polynomial& f, double s, u64 lo, u64 hi) {
  if (lo == 0 || lo > hi) throw DomainError("range must satisfy 1 <= lo <= hi");
  if (!(s >= 1.0)) throw DomainError("Dirichlet partial sums are reported for real s >= 1");
  check_budget(hi, kSeriesBudget, "Dirichlet sum");
  const std::vector<std::int8_t> mu = sieve_range(std::max<u64>(hi, 2)).mu;
  const std::vector<bool> member = dset_indicator(f, hi);
  double sum = 0.0;
  for (u64 n = std::max<u64>(lo, 2); n <= hi; ++n) {
    if (!member[n] || mu[n] == 0) continue;
    const double nd = static_cast<double>(n);
    sum += mu[n] * std::log(nd) / std::pow(nd, s);
  }
  return sum;
}

KappaTrajectory fit_kappa(std::vector<PartialSumRecord> records) {
  KappaTrajectory out;
  out.records = std::move(records);
  if (out.records.empty()) return out;
  const std::size_t tail = std::max<std::size_t>(1, out.records.size() / 4);
  double mean = 0.0;
  for (std::size_t i = out.records.size() - tail; i < out.records.size(); ++i) mean += out.records[i].value;
  mean /= static_cast<double>(tail);
  double resid = 0.0;
  for (std::size_t i = out.records.size() - tail; i < out.records.size(); ++i) {
    resid = std::max(resid, std::abs(out.records[i].value - mean));
  }
  out.fitted_kappa = -mean;
  out.fit_residual = resid;
  return out;
}

KappaTrajectory kappa_trajectory(const Polynomial& f, u64 x_max) {
  const std::vector<u64> cps = log_spaced_checkpoints(x_max);
  return fit_kappa(dirichlet_partial_sum(f, 1.0, x_max, cps));
}

// ---------------------------------------------------------------------------
// Epstein zeta

u64 epstein_r(const QuadraticForm& q, u64 n) {
  if (n == 0) throw DomainError("r_Q(n) is reported for n >= 1");
  const i128 D = -q.discriminant();
  const i128 four_an = static_cast<i128>(4) * q.a() * static_cast<i128>(n);
  const i64 vmax = y_bound(q, n);
  const i128 two_a = static_cast<i128>(2) * q.a();
  u64 count = 0;
  for (i64 v = -vmax; v <= vmax; ++v) {
    const i128 disc = four_an - D * v * v;
    if (disc < 0) continue;
    const u128 s = isqrt(static_cast<u128>(disc));
    if (s * s != static_cast<u128>(disc)) continue;
    const i128 base = -static_cast<i128>(q.b()) * v;
    if ((base + static_cast<i128>(s)) % two_a == 0) ++count;
    if (s != 0 && (base - static_cast<i128>(s)) % two_a == 0) ++count;
  }
  return count;
}

std::vector<u64> epstein_r_table(const QuadraticForm& q, u64 n_max) {
  check_budget(n_max, kSeriesBudget, "Epstein table");
  std::vector<u64> r(n_max + 1, 0);
  const i64 ymax = y_bound(q, n_max);
  for (i64 y = -ymax; y <= ymax; ++y) {
    const auto [lo, hi] = row_bounds(q, y, n_max);
    for (i64 x = lo; x <= hi; ++x) {
      const i128 v = q(x, y);
      if (v <= static_cast<i128>(n_max)) ++r[static_cast<std::size_t>(v)];
    }
  }
  return r;
}

double epstein_zeta_partial(const QuadraticForm& q, double s, u64 n_max) {
  if (!(s > 1.0)) throw DomainError("Epstein partial sums need s > 1");
  check_budget(n_max, kSeriesBudget, "Epstein sum");
  double sum = 0.0;
  if (n_max == 0) return sum;
  const i64 ymax = y_bound(q, n_max);
  for (i64 y = -ymax; y <= ymax; ++y) {
    const auto [lo, hi] = row_bounds(q, y, n_max);
    for (i64 x = lo; x <= hi; ++x) {
      const i128 v = q(x, y);
      if (v == 0 || v > static_cast<i128>(n_max)) continue;
      sum += std::pow(static_cast<double>(v), -s);
    }
  }
  return sum;
}

double epstein_zeta_partial_per_n(const QuadraticForm& q, double s, u64 n_max) {
  if (!(s > 1.0)) throw DomainError("Epstein partial sums need s > 1");
  check_budget(n_max, 1'000'000, "per-n Epstein sum");
  double sum = 0.0;
  for (u64 n = 1; n <= n_max; ++n) {
    const u64 r = epstein_r(q, n);
    if (r != 0) sum += static_cast<double>(r) * std::pow(static_cast<double>(n), -s);
  }
  return sum;
}

double epstein_mu_sum(const QuadraticForm& q, double s, u64 n_max) {
  if (!(s >= 1.0)) throw DomainError("Epstein mu sums are reported for s >= 1");
  if (n_max == 0) return 0.0;
  check_budget(n_max, kSeriesBudget, "Epstein mu sum");
  const std::vector<std::int8_t> mu = sieve_range(std::max<u64>(n_max, 2)).mu;
  const std::vector<u64> r = epstein_r_table(q, n_max);
  double sum = 0.0;
  for (u64 n = 1; n <= n_max; ++n) {
    if (mu[n] == 0 || r[n] == 0) continue;
    sum += mu[n] * static_cast<double>(r[n]) * std::pow(static_cast<double>(n), -s);
  }
  return sum;
}

}  // namespace cubic
