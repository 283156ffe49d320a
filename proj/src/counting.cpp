#include "cubicprimes/counting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cubicprimes/error.hpp"
#include "cubicprimes/residues.hpp"
#include "parallel.hpp"

namespace cubic {

namespace {

constexpr i64 kChunk = 4096;

// f(n) with only 128-bit overflow treated as an error.
i128 eval_wide(const Polynomial& f, i64 n) {
  i128 acc = 0;
  const auto c = f.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    if (__builtin_mul_overflow(acc, static_cast<i128>(n), &acc) ||
        __builtin_add_overflow(acc, static_cast<i128>(*it), &acc)) {
      throw CapacityError("polynomial value overflows 128 bits at n=" + std::to_string(n));
    }
  }
  return acc;
}

double tail_bound(u64 x) {
  const double lx = std::log(static_cast<double>(x));
  return std::sqrt(static_cast<double>(x)) * lx * lx;
}

// Largest n >= 0 such that no m > n has f(m) <= x, for a cubic with
// positive leading coefficient.
i64 weighted_index_end(const Polynomial& f, u64 x) {
  const long double a = f.coefficient(3), b = f.coefficient(2), c = f.coefficient(1);
  // f is increasing past the larger root of 3a n^2 + 2b n + c
  const long double disc = 4.0L * b * b - 12.0L * a * c;
  i64 turn = 0;
  if (disc > 0) turn = std::max<i64>(0, static_cast<i64>(std::ceil((-2.0L * b + std::sqrt(disc)) / (6.0L * a))) + 1);
  const i128 limit = static_cast<i128>(x);
  if (eval_wide(f, turn) > limit) return turn;
  i64 lo = turn, hi = std::max<i64>(1, turn * 2);
  while (eval_wide(f, hi) <= limit) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const i64 mid = lo + (hi - lo) / 2;
    (eval_wide(f, mid) <= limit ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace

Weight Weight::parse(std::string_view text) {
  if (text == "totient" || text == "phi") return totient();
  if (text == "sigma") return sigma();
  if (text == "tau") return tau();
  if (text.starts_with("power:") && text.size() > 6) {
    unsigned k = 0;
    for (const char ch : text.substr(6)) {
      if (ch < '0' || ch > '9' || k > 1000) throw DomainError("bad weight exponent in '" + std::string(text) + "'");
      k = k * 10 + static_cast<unsigned>(ch - '0');
    }
    return power(k);
  }
  throw DomainError("unknown weight '" + std::string(text) + "' (power:K, totient, sigma, tau)");
}

double Weight::operator()(u64 n) const {
  switch (kind) {
    case WeightKind::Power: return std::pow(static_cast<double>(n), static_cast<double>(exponent));
    // arithmetic weights vanish at the index n = 0
    case WeightKind::Totient: return n == 0 ? 0.0 : static_cast<double>(cubic::totient(n));
    case WeightKind::Sigma: return n == 0 ? 0.0 : static_cast<double>(divisor_sigma(n));
    case WeightKind::Tau: return n == 0 ? 0.0 : static_cast<double>(divisor_count(n));
  }
  return 0.0;
}

std::string Weight::name() const {
  switch (kind) {
    case WeightKind::Power: return "power:" + std::to_string(exponent);
    case WeightKind::Totient: return "totient";
    case WeightKind::Sigma: return "sigma";
    case WeightKind::Tau: return "tau";
  }
  return "?";
}

i64 cubic_index_start(i64 k) {
  // n^3 >= 2 - k  <=>  n >= -floor_cbrt(k - 2)
  return -floor_cbrt(static_cast<i128>(k) - 2);
}

std::vector<CubicPrime> enumerate_cubic_primes(i64 k, i64 n_max) {
  const i64 n_min = cubic_index_start(k);
  std::vector<CubicPrime> out;
  if (n_max < n_min) return out;
  const i128 top = static_cast<i128>(n_max) * n_max * n_max + k;
  if (top > static_cast<i128>(std::numeric_limits<u64>::max())) {
    throw CapacityError("n_max^3 + k exceeds the 64-bit range");
  }
  for (i64 n = n_min; n <= n_max; ++n) {
    const u64 v = static_cast<u64>(static_cast<i128>(n) * n * n + k);
    if (is_prime(v)) out.push_back({n, v});
  }
  return out;
}

u64 count_cubic_primes(i64 k, u64 x, unsigned threads) {
  const u64 cp[] = {x};
  return count_table(k, cp, 2, threads).front().observed;
}

double singular_series(i64 k, u64 p_cutoff) {
  if (p_cutoff < 2) throw DomainError("p_cutoff must be >= 2");
  double product = 1.0;
  for (const u64 p : primes_up_to(p_cutoff)) {
    if (p % 3 != 1) continue;
    if (static_cast<i128>(k) % static_cast<i128>(p) == 0) continue;
    product *= 1.0 - 2.0 * chi(k, p) / static_cast<double>(p - 1);
  }
  return product;
}

double predicted_count(i64 k, u64 x, u64 p_cutoff) {
  if (x < 8) throw DomainError("predicted count needs x >= 8");
  const double xd = static_cast<double>(x);
  return singular_series(k, p_cutoff) * std::cbrt(xd) / std::log(xd);
}

std::vector<CountRecord> count_table(i64 k, std::span<const u64> checkpoints, u64 p_cutoff, unsigned threads) {
  std::vector<CountRecord> out;
  if (checkpoints.empty()) return out;
  for (std::size_t i = 1; i < checkpoints.size(); ++i) {
    if (checkpoints[i] <= checkpoints[i - 1]) throw DomainError("checkpoints must be strictly ascending");
  }
  const i64 n_min = cubic_index_start(k);
  const i64 n_max = floor_cbrt(static_cast<i128>(checkpoints.back()) - k);

  // per chunk: number of cubic primes falling in (cp[j-1], cp[j]]
  const std::size_t m = checkpoints.size();
  auto buckets = detail::map_chunks<std::vector<u64>>(n_min, n_max, kChunk, threads, [&](i64 lo, i64 hi) {
    std::vector<u64> counts(m, 0);
    for (i64 n = lo; n <= hi; ++n) {
      const u64 v = static_cast<u64>(static_cast<i128>(n) * n * n + k);
      if (!is_prime(v)) continue;
      const auto it = std::lower_bound(checkpoints.begin(), checkpoints.end(), v);
      if (it != checkpoints.end()) ++counts[static_cast<std::size_t>(it - checkpoints.begin())];
    }
    return counts;
  });

  const double series = singular_series(k, std::max<u64>(p_cutoff, 2));
  u64 running = 0;
  for (std::size_t j = 0; j < m; ++j) {
    for (const auto& b : buckets) running += b[j];
    CountRecord r;
    r.x = checkpoints[j];
    r.observed = running;
    r.p_cutoff = p_cutoff;
    if (r.x >= 8) {
      const double xd = static_cast<double>(r.x);
      r.predicted = series * std::cbrt(xd) / std::log(xd);
      r.ratio = static_cast<double>(r.observed) / r.predicted;
    } else {
      r.predicted = std::numeric_limits<double>::quiet_NaN();
      r.ratio = std::numeric_limits<double>::quiet_NaN();
    }
    out.push_back(r);
  }
  return out;
}

WeightedSumRecord weighted_lambda_sum(const Polynomial& f, Weight w, u64 x, unsigned threads) {
  if (f.degree() != 3 || f.leading() <= 0) {
    throw DomainError("weighted sums need a cubic with positive leading coefficient, got " + f.to_string());
  }
  WeightedSumRecord rec;
  rec.x = x;
  rec.weight = w;
  rec.bound = x >= 1 ? tail_bound(x) : 0.0;
  if (x == 0) return rec;

  const i64 n_end = weighted_index_end(f, x);
  struct Partial {
    double value = 0.0;
    double tail = 0.0;
  };
  const auto parts = detail::map_chunks<Partial>(0, n_end, kChunk, threads, [&](i64 lo, i64 hi) {
    Partial p;
    for (i64 n = lo; n <= hi; ++n) {
      const i128 v = eval_wide(f, n);
      if (v < 1 || v > static_cast<i128>(x)) continue;
      const auto pp = prime_power_base(static_cast<u64>(v));
      if (!pp) continue;
      const double term = w(static_cast<u64>(n)) * std::log(static_cast<double>(pp->prime));
      p.value += term;
      if (pp->exponent >= 2) p.tail += term;
    }
    return p;
  });
  for (const auto& p : parts) {
    rec.value += p.value;
    rec.tail_value += p.tail;
  }
  return rec;
}

double lambda_sum_rhs(i64 k, u64 x) {
  if (x > 100'000) throw ResourceError("lambda_sum_rhs is limited to x <= 10^5");
  // index set: n >= 0 with 1 <= n^3 + k <= x
  std::vector<i64> index;
  for (i64 n = 0;; ++n) {
    const i128 v = static_cast<i128>(n) * n * n + k;
    if (v > static_cast<i128>(x)) break;
    if (v >= 1) index.push_back(n);
  }
  const i128 d_max_wide = static_cast<i128>(x) + std::max<i64>(k, 0);
  if (d_max_wide < 2) return 0.0;
  const u64 d_max = static_cast<u64>(d_max_wide);
  const ArithTables t = sieve_range(d_max, 200'000'000);
  double total = 0.0;
  for (u64 d = 2; d <= d_max; ++d) {
    if (t.mu[d] == 0) continue;
    i128 inner = 0;
    for (const i64 n : index) {
      const i128 v = static_cast<i128>(n) * n * n + k;
      if (v % static_cast<i128>(d) == 0) inner += n;
    }
    if (inner != 0) total -= t.mu[d] * std::log(static_cast<double>(d)) * static_cast<double>(inner);
  }
  return total;
}

ProgressionSum progression_weighted_sum(u64 q, i64 a, u64 x) {
  if (q == 0) throw DomainError("progression modulus must be >= 1");
  if (x == 0) throw DomainError("progression sums need x >= 1");
  if (q > kBruteForceBudget) throw ResourceError("modulus exceeds the root-scan budget");
  ProgressionSum out;
  out.q = q;
  out.a = a;
  out.x = x;
  const i128 ar = static_cast<i128>(a) % static_cast<i128>(q);
  const u64 target = static_cast<u64>(ar < 0 ? ar + q : ar);
  for (u64 b = 0; b < q; ++b) {
    if (powmod(b, 3, q) == target % q) out.roots.push_back(b);
  }

  u128 exact = 0, closed = 0, uncorrected = 0;
  for (const u64 b : out.roots) {
    for (u64 n = b; n <= x; n += q) {
      exact += n;
      if (n > x - q) break;
    }
    if (b > x) continue;
    const u128 M = (x - b) / q;
    closed += static_cast<u128>(q) * M * (M + 1) / 2 + static_cast<u128>(b) * (M + 1);
    uncorrected += static_cast<u128>(q) * M * (M + 1) / 2 + static_cast<u128>(b) * M;
  }
  const u128 cap = std::numeric_limits<u64>::max();
  if (exact > cap || closed > cap) throw CapacityError("progression sum exceeds the 64-bit range");
  out.exact = static_cast<u64>(exact);
  out.closed_form = static_cast<u64>(closed);
  out.uncorrected_closed_form = static_cast<u64>(uncorrected);
  const double xd = static_cast<double>(x);
  out.leading = static_cast<double>(out.roots.size()) * xd * xd / (2.0 * static_cast<double>(q));
  return out;
}

PrimePowerTail prime_power_tail(i64 k, u64 x) {
  PrimePowerTail out;
  out.bound = x >= 1 ? tail_bound(x) : 0.0;
  const i64 start = std::max<i64>(0, cubic_index_start(k));
  for (i64 n = start;; ++n) {
    const i128 v = static_cast<i128>(n) * n * n + k;
    if (v > static_cast<i128>(x)) break;
    const auto pp = prime_power_base(static_cast<u64>(v));
    if (pp && pp->exponent >= 2) out.tail += static_cast<double>(n) * std::log(static_cast<double>(pp->prime));
  }
  return out;
}

}  // namespace cubic
