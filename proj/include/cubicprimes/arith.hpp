#pragma once

// Elementary arithmetic: polynomials over Z, sieved tables of mu and
// smallest prime factors, deterministic 64-bit primality, factorization.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cubic {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

/// Integer polynomial, coefficients stored lowest degree first.
/// The zero polynomial has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<i64> low_first);

  static Polynomial from_high_first(std::vector<i64> high_first);
  /// x^3 + k
  static Polynomial cubic_family(i64 k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const i64> coefficients() const { return coeffs_; }
  i64 coefficient(int i) const;
  i64 leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

  /// Exact value. Throws CapacityError if |f(x)| exceeds 2^64 - 1.
  i128 eval(i64 x) const;
  /// f(x) mod m in [0, m); m >= 1.
  u64 eval_mod(i64 x, u64 m) const;

  /// Human-readable form, e.g. "x^3 + 2".
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<i64> coeffs_;
};

/// Smallest-prime-factor and Moebius tables over [0, limit].
struct ArithTables {
  u64 limit = 0;
  std::vector<std::uint32_t> spf;  // spf[0] = spf[1] = 0
  std::vector<std::int8_t> mu;     // mu[0] = 0
  std::vector<u64> primes;
};

inline constexpr u64 kDefaultSieveCap = 1'000'000'000;

/// Linear sieve. Throws CapacityError unless 2 <= limit <= cap.
ArithTables sieve_range(u64 limit, u64 cap = kDefaultSieveCap);

/// Primes <= limit by a plain Eratosthenes sieve.
std::vector<u64> primes_up_to(u64 limit);

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  u64 n = 1;
  std::vector<PrimePower> factors;  // ascending by prime

  /// Product of p^e computed with overflow checks.
  u64 product() const;
  bool squarefree() const;
  /// All positive divisors, ascending.
  std::vector<u64> divisors() const;
};

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);

/// Deterministic for every 64-bit input.
bool is_prime(u64 n);

/// Complete factorization: trial division by small primes, then Brent's
/// variant of Pollard rho with Miller-Rabin certification of the cofactors.
Factorization factorize(u64 n);

int mobius(u64 n, const ArithTables& tables);
int mobius(const Factorization& f);

/// (p, v) with n = p^v, v >= 1, if n is a prime power.
std::optional<PrimePower> prime_power_base(u64 n);

/// log p if n = p^v, else 0.
double von_mangoldt(u64 n);
/// -sum_{d | n} mu(d) log d over the explicit divisor list of n.
double von_mangoldt_via_mobius(u64 n);

u64 isqrt(u64 n);
u128 isqrt(u128 n);
/// Largest m with m^3 <= n.
u64 integer_cuberoot(u64 n);
/// Largest m with m^k <= n, k >= 1.
u64 integer_root(u64 n, unsigned k);
/// Largest m with m^3 <= v, for signed v with |v| < 2^65.
i64 floor_cbrt(i128 v);

/// gcd of f(Z). Throws DomainError for deg f < 1.
u64 fixed_divisor(const Polynomial& f);

// Arithmetic weights of the index n; n >= 1.
u64 totient(u64 n);
u64 divisor_sigma(u64 n);
u64 divisor_count(u64 n);

}  // namespace cubic
