#include "cubicprimes/residues.hpp"

#include <numeric>
#include <tuple>

#include "cubicprimes/error.hpp"

namespace cubic {

namespace {

void require_prime(u64 p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

u64 reduce_signed(i64 a, u64 p) {
  const i128 r = static_cast<i128>(a) % static_cast<i128>(p);
  return static_cast<u64>(r < 0 ? r + p : r);
}

}  // namespace

QuadraticForm::QuadraticForm(i64 a, i64 b, i64 c) : a_(a), b_(b), c_(c) {
  if (a <= 0 || discriminant() >= 0) {
    throw DomainError("quadratic form (" + std::to_string(a) + "," + std::to_string(b) + "," +
                      std::to_string(c) + ") is not positive definite");
  }
  if (std::gcd(std::gcd(a, b), c) != 1) {
    throw DomainError("quadratic form (" + std::to_string(a) + "," + std::to_string(b) + "," +
                      std::to_string(c) + ") is not primitive");
  }
}

i128 QuadraticForm::operator()(i64 x, i64 y) const {
  return static_cast<i128>(a_) * x * x + static_cast<i128>(b_) * x * y + static_cast<i128>(c_) * y * y;
}

QuadraticForm residue_form() { return {1, 0, 27}; }
QuadraticForm nonresidue_form() { return {4, 2, 7}; }

std::string_view to_string(CubicTag t) {
  switch (t) {
    case CubicTag::Residue: return "Residue";
    case CubicTag::Nonresidue: return "Nonresidue";
    case CubicTag::NotCoprime: return "NotCoprime";
  }
  return "?";
}

std::string_view to_string(GaussBranch b) {
  switch (b) {
    case GaussBranch::Three: return "Three";
    case GaussBranch::TwoMod3: return "TwoMod3";
    case GaussBranch::ResidueForm: return "ResidueForm";
    case GaussBranch::NonresidueForm: return "NonresidueForm";
  }
  return "?";
}

u64 canonical_cube_root_of_unity(u64 p) {
  require_prime(p);
  if (p % 3 != 1) throw DomainError("no primitive cube root of unity mod " + std::to_string(p));
  for (u64 b = 2;; ++b) {
    const u64 r = powmod(b, (p - 1) / 3, p);
    if (r != 1) return std::min(r, mulmod(r, r, p));
  }
}

CubicClass cubic_residue_euler(i64 a, u64 p) {
  require_prime(p);
  const u64 ar = reduce_signed(a, p);
  if (ar == 0) return {CubicTag::NotCoprime, std::nullopt};
  if (p % 3 != 1) return {CubicTag::Residue, std::nullopt};
  const int m = cubic_character_exponent(a, p);
  return {m == 0 ? CubicTag::Residue : CubicTag::Nonresidue, m};
}

int cubic_character_exponent(i64 a, u64 p) {
  require_prime(p);
  if (p % 3 != 1) throw DomainError("cubic character exponent needs p = 1 mod 3, got " + std::to_string(p));
  const u64 ar = reduce_signed(a, p);
  if (ar == 0) throw DomainError("argument divisible by " + std::to_string(p));
  const u64 r = powmod(ar, (p - 1) / 3, p);
  if (r == 1) return 0;
  const u64 zeta = canonical_cube_root_of_unity(p);
  if (r == zeta) return 1;
  if (r == mulmod(zeta, zeta, p)) return 2;
  throw ConsistencyError("a^((p-1)/3) is not a cube root of unity mod " + std::to_string(p));
}

std::optional<std::pair<i64, i64>> represent_by_form(const QuadraticForm& q, u64 n) {
  if (n == 0) throw DomainError("representation target must be >= 1");
  // a*u^2 + b*v*u + c*v^2 - n = 0 in u has discriminant 4an - D v^2, D = 4ac - b^2.
  const i128 D = -q.discriminant();
  const i128 four_an = static_cast<i128>(4) * q.a() * static_cast<i128>(n);
  const i64 vmax = static_cast<i64>(isqrt(static_cast<u128>(four_an / D)));
  const i128 two_a = static_cast<i128>(2) * q.a();

  std::optional<std::pair<i64, i64>> best;
  auto key = [](std::pair<i64, i64> w) {
    const auto [u, v] = w;
    return std::make_tuple(v < 0 ? -static_cast<i128>(v) : v, u < 0 ? -static_cast<i128>(u) : u, v < 0, u < 0);
  };
  for (i64 av = 0; av <= vmax && !best; ++av) {
    const i128 disc = four_an - D * av * av;
    if (disc < 0) continue;
    const u128 s = isqrt(static_cast<u128>(disc));
    if (s * s != static_cast<u128>(disc)) continue;
    for (const i64 v : {av, -av}) {
      for (const i128 root : {static_cast<i128>(s), -static_cast<i128>(s)}) {
        const i128 num = -static_cast<i128>(q.b()) * v + root;
        if (num % two_a != 0) continue;
        const std::pair<i64, i64> w{static_cast<i64>(num / two_a), v};
        if (!best || key(w) < key(*best)) best = w;
      }
      if (av == 0) break;
    }
  }
  return best;
}

PrimeClass gauss_classify(u64 p) {
  require_prime(p);
  PrimeClass out;
  out.p = p;
  if (p == 3 || p % 3 == 2) {
    out.branch = (p == 3) ? GaussBranch::Three : GaussBranch::TwoMod3;
    out.rho_p = 1;
    return out;
  }
  const auto res = represent_by_form(residue_form(), p);
  const auto non = represent_by_form(nonresidue_form(), p);
  const bool euler_residue = cubic_residue_euler(2, p).tag == CubicTag::Residue;
  if (res.has_value() == non.has_value()) {
    throw ConsistencyError("prime " + std::to_string(p) + " is represented by " +
                           (res ? "both" : "neither") + " of the discriminant -108 forms");
  }
  if (res.has_value() != euler_residue) {
    throw ConsistencyError("Euler criterion and form representation disagree at p = " + std::to_string(p));
  }
  if (res) {
    out.branch = GaussBranch::ResidueForm;
    out.witness = res;
    out.rho_p = 3;
    out.chi = 1.0;
  } else {
    out.branch = GaussBranch::NonresidueForm;
    out.witness = non;
    out.rho_p = 0;
    out.chi = -0.5;
  }
  return out;
}

double chi(i64 k, u64 p) {
  require_prime(p);
  if (p % 3 != 1) throw DomainError("chi needs p = 1 mod 3, got " + std::to_string(p));
  if (reduce_signed(k, p) == 0) throw DomainError(std::to_string(p) + " divides k");
  const i128 neg = -static_cast<i128>(k);
  const i64 minus_k = static_cast<i64>(neg % static_cast<i128>(p));
  return cubic_residue_euler(minus_k, p).tag == CubicTag::Residue ? 1.0 : -0.5;
}

int rho_prime(i64 k, u64 p) {
  require_prime(p);
  if (reduce_signed(k, p) == 0) {
    // x^3 = 0 mod p forces x = 0; the scan is kept where affordable.
    if (p > kBruteForceBudget) return 1;
    return static_cast<int>(rho_bruteforce(Polynomial::cubic_family(k), p));
  }
  if (p % 3 != 1) return 1;
  return chi(k, p) == 1.0 ? 3 : 0;
}

u64 rho(i64 k, u64 q) {
  if (q == 0) throw DomainError("rho needs q >= 1");
  const Factorization f = factorize(q);
  if (!f.squarefree()) {
    throw DomainError("rho(k, q) is multiplicative only for squarefree q; use rho_bruteforce for " +
                      std::to_string(q));
  }
  u64 out = 1;
  for (const auto& pp : f.factors) {
    out *= static_cast<u64>(rho_prime(k, pp.prime));
    if (out == 0) break;
  }
  return out;
}

u64 rho_bruteforce(const Polynomial& f, u64 q, u64 budget) {
  if (q == 0) throw DomainError("modulus must be >= 1");
  if (q > budget) {
    throw ResourceError("modulus " + std::to_string(q) + " exceeds the brute-force budget " +
                        std::to_string(budget));
  }
  u64 count = 0;
  for (u64 x = 0; x < q; ++x) {
    if (f.eval_mod(static_cast<i64>(x), q) == 0) ++count;
  }
  return count;
}

}  // namespace cubic
