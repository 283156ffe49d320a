#pragma once

// D_f = {d >= 1 : f(x) = 0 mod d is solvable}.

#include <optional>
#include <span>
#include <vector>

#include "cubicprimes/arith.hpp"
#include "cubicprimes/residues.hpp"

namespace cubic {

struct DsetCheckpoint {
  u64 x = 0;
  u64 count = 0;
  double ratio = 0.0;
};

struct DsetStats {
  u64 limit = 0;
  u64 count = 0;
  std::vector<DsetCheckpoint> checkpoints;
  // Least-squares fit of log(ratio) = log C - beta * log log x over the
  // checkpoints with x >= 3. Absent when fewer than two points qualify.
  std::optional<double> decay_exponent;
  std::optional<double> decay_prefactor;
};

inline constexpr u64 kDsetEnumerationBudget = 10'000'000;

/// Factor d, scan each prime-power component for a root.
bool in_dset(const Polynomial& f, u64 d, u64 budget = kBruteForceBudget);

/// Whether f has a root mod the prime p, via deg gcd(f, x^p - x) over F_p.
bool has_root_mod_prime(const Polynomial& f, u64 p);

/// All roots of f mod p^e, lifted level by level from the roots mod p.
std::vector<u64> roots_mod_prime_power(const Polynomial& f, u64 p, unsigned e);

/// Membership flags for 0..limit (index 0 unused). Every prime power p^e
/// with no root marks all of its multiples as non-members.
std::vector<bool> dset_indicator(const Polynomial& f, u64 limit, u64 budget = kDsetEnumerationBudget);

std::vector<u64> enumerate_dset(const Polynomial& f, u64 limit, u64 budget = kDsetEnumerationBudget);

/// Counts at each checkpoint (ascending, <= limit); defaults to {limit}.
DsetStats dset_density(const Polynomial& f, u64 limit, std::span<const u64> checkpoints = {});

}  // namespace cubic
