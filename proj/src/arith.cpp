#include "cubicprimes/arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <sstream>

#include "cubicprimes/error.hpp"

namespace cubic {

namespace {

constexpr i128 kU64Max = static_cast<i128>(~u64{0});

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = [] {
    constexpr u64 bound = 1000;
    std::vector<bool> composite(bound + 1, false);
    std::vector<u64> out;
    for (u64 i = 2; i <= bound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (u64 j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool miller_rabin_witness(u64 n, u64 d, int r, u64 a) {
  a %= n;
  if (a == 0) return true;
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Brent's cycle detection over x -> x^2 + c. Returns a nontrivial factor of
// an odd composite n.
u64 pollard_brent(u64 n) {
  constexpr u64 batch = 128;
  for (u64 c = 1;; ++c) {
    auto step = [&](u64 v) {
      return static_cast<u64>((static_cast<u128>(mulmod(v, v, n)) + c) % n);
    };
    u64 y = 2, x = 2, ys = 2, q = 1, g = 1;
    for (u64 r = 1; g == 1; r *= 2) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      for (u64 k = 0; k < r && g == 1; k += batch) {
        ys = y;
        const u64 lim = std::min(batch, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = step(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const u64 d = pollard_brent(n);
  split_into(d, out);
  split_into(n / d, out);
}

// true iff r^k <= n, without overflow
bool pow_le(u64 r, unsigned k, u64 n) {
  u128 acc = 1;
  for (unsigned i = 0; i < k; ++i) {
    acc *= r;
    if (acc > n) return false;
  }
  return true;
}

bool pow_eq(u64 r, unsigned k, u64 n) {
  u128 acc = 1;
  for (unsigned i = 0; i < k; ++i) {
    acc *= r;
    if (acc > n) return false;
  }
  return acc == n;
}

}  // namespace

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<i64> low_first) : coeffs_(std::move(low_first)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::from_high_first(std::vector<i64> high_first) {
  std::reverse(high_first.begin(), high_first.end());
  return Polynomial(std::move(high_first));
}

Polynomial Polynomial::cubic_family(i64 k) { return Polynomial({k, 0, 0, 1}); }

i64 Polynomial::coefficient(int i) const {
  return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : 0;
}

i128 Polynomial::eval(i64 x) const {
  i128 acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    i128 next;
    if (__builtin_mul_overflow(acc, static_cast<i128>(x), &next) ||
        __builtin_add_overflow(next, static_cast<i128>(*it), &next)) {
      throw CapacityError("polynomial value overflows 128-bit intermediate");
    }
    acc = next;
  }
  if (acc > kU64Max || acc < -kU64Max) {
    throw CapacityError("polynomial value " + to_string() + " at x=" + std::to_string(x) +
                        " exceeds the 64-bit range");
  }
  return acc;
}

u64 Polynomial::eval_mod(i64 x, u64 m) const {
  if (m == 0) throw DomainError("modulus must be positive");
  if (m == 1) return 0;
  auto reduce = [m](i64 v) -> u64 {
    const i128 r = static_cast<i128>(v) % static_cast<i128>(m);
    return static_cast<u64>(r < 0 ? r + m : r);
  };
  const u64 xr = reduce(x);
  u64 acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = static_cast<u64>((static_cast<u128>(mulmod(acc, xr, m)) + reduce(*it)) % m);
  }
  return acc;
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const i64 c = coeffs_[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const u64 mag = neg ? static_cast<u64>(-(c + 1)) + 1 : static_cast<u64>(c);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Sieve

ArithTables sieve_range(u64 limit, u64 cap) {
  if (limit < 2 || limit > cap) {
    throw CapacityError("sieve limit " + std::to_string(limit) + " outside [2, " +
                        std::to_string(cap) + "]");
  }
  ArithTables t;
  t.limit = limit;
  t.spf.assign(limit + 1, 0);
  t.mu.assign(limit + 1, 0);
  t.mu[1] = 1;
  for (u64 i = 2; i <= limit; ++i) {
    if (t.spf[i] == 0) {
      t.spf[i] = static_cast<std::uint32_t>(i);
      t.mu[i] = -1;
      t.primes.push_back(i);
    }
    for (const u64 p : t.primes) {
      if (p > t.spf[i] || p * i > limit) break;
      t.spf[p * i] = static_cast<std::uint32_t>(p);
      t.mu[p * i] = (p == t.spf[i]) ? 0 : static_cast<std::int8_t>(-t.mu[i]);
    }
  }
  return t;
}

std::vector<u64> primes_up_to(u64 limit) {
  std::vector<u64> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    if (i <= limit / i) {
      for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Factorization

u64 Factorization::product() const {
  u64 acc = 1;
  for (const auto& [p, e] : factors) {
    for (unsigned i = 0; i < e; ++i) {
      if (__builtin_mul_overflow(acc, p, &acc)) throw CapacityError("factorization product overflows");
    }
  }
  return acc;
}

bool Factorization::squarefree() const {
  return std::all_of(factors.begin(), factors.end(), [](const PrimePower& f) { return f.exponent == 1; });
}

std::vector<u64> Factorization::divisors() const {
  std::vector<u64> out{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (const u64 p : small_primes()) {
    if (p * p > n) return true;
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // Jim Sinclair's base set, complete for n < 2^64.
  static constexpr std::array<u64, 7> bases{2, 325, 9375, 28178, 450775, 9780504, 1795265022};
  return std::all_of(bases.begin(), bases.end(),
                     [&](u64 a) { return miller_rabin_witness(n, d, r, a); });
}

Factorization factorize(u64 n) {
  if (n == 0) throw DomainError("cannot factorize 0");
  Factorization out;
  out.n = n;
  u64 rest = n;
  for (const u64 p : small_primes()) {
    if (p * p > rest) break;
    if (rest % p != 0) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    out.factors.push_back({p, e});
  }
  if (rest > 1) {
    std::vector<u64> primes;
    split_into(rest, primes);
    std::sort(primes.begin(), primes.end());
    for (const u64 p : primes) {
      if (!out.factors.empty() && out.factors.back().prime == p) {
        ++out.factors.back().exponent;
      } else {
        out.factors.push_back({p, 1});
      }
    }
  }
  return out;
}

int mobius(u64 n, const ArithTables& tables) {
  if (n == 0 || n > tables.limit) {
    throw DomainError("mobius argument " + std::to_string(n) + " outside [1, " +
                      std::to_string(tables.limit) + "]");
  }
  return tables.mu[n];
}

int mobius(const Factorization& f) {
  if (!f.squarefree()) return 0;
  return (f.factors.size() % 2 == 0) ? 1 : -1;
}

std::optional<PrimePower> prime_power_base(u64 n) {
  if (n < 2) return std::nullopt;
  // Strip prime-exponent roots until n is not a perfect power.
  static constexpr std::array<unsigned, 18> exps{2, 3, 5, 7, 11, 13, 17, 19, 23,
                                                 29, 31, 37, 41, 43, 47, 53, 59, 61};
  u64 base = n;
  unsigned exponent = 1;
  bool reduced = true;
  while (reduced) {
    reduced = false;
    for (const unsigned q : exps) {
      if (q >= 64 || (u64{1} << q) > base) break;
      const u64 r = integer_root(base, q);
      if (pow_eq(r, q, base)) {
        base = r;
        exponent *= q;
        reduced = true;
        break;
      }
    }
  }
  if (!is_prime(base)) return std::nullopt;
  return PrimePower{base, exponent};
}

double von_mangoldt(u64 n) {
  if (n == 0) throw DomainError("von Mangoldt function undefined at 0");
  const auto pp = prime_power_base(n);
  return pp ? std::log(static_cast<double>(pp->prime)) : 0.0;
}

double von_mangoldt_via_mobius(u64 n) {
  if (n == 0) throw DomainError("von Mangoldt function undefined at 0");
  const Factorization f = factorize(n);
  // Walk every exponent vector; mu(d) is nonzero only when all exponents <= 1.
  double sum = 0.0;
  std::vector<unsigned> e(f.factors.size(), 0);
  while (true) {
    u64 d = 1;
    int mu = 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned j = 0; j < e[i]; ++j) d *= f.factors[i].prime;
      if (e[i] >= 2) mu = 0;
      if (e[i] == 1) mu = -mu;
    }
    if (mu != 0) sum -= mu * std::log(static_cast<double>(d));
    std::size_t i = 0;
    while (i < e.size() && e[i] == f.factors[i].exponent) e[i++] = 0;
    if (i == e.size()) break;
    ++e[i];
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Integer roots

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

u128 isqrt(u128 n) {
  if (n <= ~u64{0}) return isqrt(static_cast<u64>(n));
  u128 r = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
  // r < 2^64 so r*r fits in 128 bits after the clamp below
  const u128 cap = ~u64{0};
  if (r > cap) r = cap;
  while (r > 0 && r * r > n) --r;
  while (r < cap && (r + 1) * (r + 1) <= n) ++r;
  return r;
}

u64 integer_root(u64 n, unsigned k) {
  if (k == 0) throw DomainError("root index must be positive");
  if (k == 1 || n < 2) return n;
  u64 r = static_cast<u64>(std::pow(static_cast<long double>(n), 1.0L / k));
  while (r > 0 && !pow_le(r, k, n)) --r;
  while (pow_le(r + 1, k, n)) ++r;
  return r;
}

u64 integer_cuberoot(u64 n) { return integer_root(n, 3); }

i64 floor_cbrt(i128 v) {
  auto cube = [](i128 m) { return m * m * m; };
  i64 r = static_cast<i64>(std::cbrt(static_cast<long double>(v)));
  while (cube(r) > v) --r;
  while (cube(r + 1) <= v) ++r;
  return r;
}

// ---------------------------------------------------------------------------
// Fixed divisor

u64 fixed_divisor(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("fixed divisor of the zero polynomial is undefined");
  if (f.degree() < 1) throw DomainError("fixed divisor requires degree >= 1");
  // Newton's forward-difference form f(n) = sum_j (Delta^j f)(0) * C(n, j)
  // holds for every integer n, and each (Delta^j f)(0) is an integer
  // combination of f(0), ..., f(j). Hence gcd(f(0), ..., f(deg f)) divides
  // every value of f; being a gcd of values itself, it equals gcd(f(Z)).
  u128 g = 0;
  for (int n = 0; n <= f.degree(); ++n) {
    const i128 v = f.eval(n);
    const u128 mag = static_cast<u128>(v < 0 ? -v : v);
    u128 a = g, b = mag;
    while (b != 0) {
      const u128 t = a % b;
      a = b;
      b = t;
    }
    g = a;
  }
  // all deg+1 values vanish only for the zero polynomial
  return static_cast<u64>(g);
}

// ---------------------------------------------------------------------------
// Weights

u64 totient(u64 n) {
  if (n == 0) throw DomainError("totient undefined at 0");
  u64 r = n;
  for (const auto& [p, e] : factorize(n).factors) r = r / p * (p - 1);
  return r;
}

u64 divisor_sigma(u64 n) {
  if (n == 0) throw DomainError("sigma undefined at 0");
  u64 r = 1;
  for (const auto& [p, e] : factorize(n).factors) {
    u64 term = 1, pk = 1;
    for (unsigned i = 0; i < e; ++i) {
      pk *= p;
      term += pk;
    }
    if (__builtin_mul_overflow(r, term, &r)) throw CapacityError("sigma overflows 64 bits");
  }
  return r;
}

u64 divisor_count(u64 n) {
  if (n == 0) throw DomainError("divisor count undefined at 0");
  u64 r = 1;
  for (const auto& f : factorize(n).factors) r *= (f.exponent + 1);
  return r;
}

}  // namespace cubic
