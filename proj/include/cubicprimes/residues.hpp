#pragma once

// Cubic residuacity modulo rational primes and the root-counting function
// rho(q) = #{x mod q : f(x) = 0 mod q}.

#include <optional>
#include <string_view>
#include <utility>

#include "cubicprimes/arith.hpp"

namespace cubic {

/// Positive definite primitive binary quadratic form a x^2 + b xy + c y^2.
class QuadraticForm {
 public:
  /// Throws DomainError unless a > 0, b^2 - 4ac < 0 and gcd(a, b, c) = 1.
  QuadraticForm(i64 a, i64 b, i64 c);

  i64 a() const { return a_; }
  i64 b() const { return b_; }
  i64 c() const { return c_; }
  i128 discriminant() const { return static_cast<i128>(b_) * b_ - static_cast<i128>(4) * a_ * c_; }
  i128 operator()(i64 x, i64 y) const;

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  i64 a_, b_, c_;
};

/// x^2 + 27 y^2: represents the primes p = 1 mod 3 for which 2 is a cube.
QuadraticForm residue_form();
/// 4x^2 + 2xy + 7y^2: the other class of discriminant -108.
QuadraticForm nonresidue_form();

enum class CubicTag { Residue, Nonresidue, NotCoprime };

struct CubicClass {
  CubicTag tag = CubicTag::NotCoprime;
  std::optional<int> exponent;  // populated only for p = 1 mod 3
};

enum class GaussBranch { Three, TwoMod3, ResidueForm, NonresidueForm };

struct PrimeClass {
  u64 p = 0;
  GaussBranch branch = GaussBranch::Three;
  std::optional<std::pair<i64, i64>> witness;
  int rho_p = 1;
  std::optional<double> chi;
};

std::string_view to_string(CubicTag t);
std::string_view to_string(GaussBranch b);

/// Smallest z in [2, p-1] with z^3 = 1 mod p; p prime, p = 1 mod 3.
u64 canonical_cube_root_of_unity(u64 p);

CubicClass cubic_residue_euler(i64 a, u64 p);

/// m in {0,1,2} with a^((p-1)/3) = zeta^m mod p, zeta canonical.
int cubic_character_exponent(i64 a, u64 p);

/// Canonical representation: least (|v|, |u|, v < 0, u < 0).
std::optional<std::pair<i64, i64>> represent_by_form(const QuadraticForm& q, u64 n);

/// Class of p with respect to x^3 + 2 from the two forms, cross-checked with Euler's
/// criterion. Throws ConsistencyError if the two disagree.
PrimeClass gauss_classify(u64 p);

/// 1 if -k is a cube mod p, -1/2 otherwise; p = 1 mod 3, p does not divide k.
double chi(i64 k, u64 p);

/// Number of roots of x^3 + k mod a prime p.
int rho_prime(i64 k, u64 p);

/// Product of rho_prime over the primes of a squarefree q.
u64 rho(i64 k, u64 q);

inline constexpr u64 kBruteForceBudget = 10'000'000;

/// Exact root count of f mod q by linear scan; q <= budget.
u64 rho_bruteforce(const Polynomial& f, u64 q, u64 budget = kBruteForceBudget);

}  // namespace cubic
