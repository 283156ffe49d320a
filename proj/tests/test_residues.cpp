#include "cubicprimes/arith.hpp"
#include "cubicprimes/error.hpp"
#include "cubicprimes/residues.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cubic;

TEST_CASE("quadratic form validation") {
  CHECK_NOTHROW(QuadraticForm(1, 0, 27));
  CHECK(residue_form().discriminant() == -108);
  CHECK(nonresidue_form().discriminant() == -108);
  CHECK_THROWS_AS(QuadraticForm(1, 0, -1), DomainError);
  CHECK_THROWS_AS(QuadraticForm(-1, 0, -1), DomainError);
  CHECK_THROWS_AS(QuadraticForm(2, 2, 2), DomainError);
}

TEST_CASE("cubic residuacity by Euler") {
  CHECK(cubic_residue_euler(2, 31).tag == CubicTag::Residue);
  CHECK(cubic_residue_euler(2, 7).tag == CubicTag::Nonresidue);
  CHECK(cubic_residue_euler(7, 7).tag == CubicTag::NotCoprime);
  CHECK(cubic_residue_euler(2, 5).tag == CubicTag::Residue);
  CHECK_FALSE(cubic_residue_euler(2, 5).exponent.has_value());
  CHECK(cubic_residue_euler(-5, 7).tag == CubicTag::Nonresidue);
  CHECK_THROWS_AS(cubic_residue_euler(2, 9), DomainError);

  CHECK(cubic_character_exponent(1, 7) == 0);
  CHECK(cubic_character_exponent(2, 7) == 2);
  CHECK(cubic_character_exponent(2, 13) == 1);
  CHECK(canonical_cube_root_of_unity(7) == 2);
  CHECK(canonical_cube_root_of_unity(13) == 3);

  for (const u64 p : {7ULL, 13ULL, 19ULL, 31ULL, 37ULL, 43ULL, 5ULL, 11ULL, 3ULL}) {
    for (i64 a = -40; a <= 40; ++a) {
      const i64 ar = ((a % static_cast<i64>(p)) + static_cast<i64>(p)) % static_cast<i64>(p);
      bool cube = false;
      for (u64 x = 0; x < p; ++x) cube = cube || (x * x * x) % p == static_cast<u64>(ar);
      const CubicClass c = cubic_residue_euler(a, p);
      if (ar == 0) {
        CHECK(c.tag == CubicTag::NotCoprime);
      } else {
        CHECK((c.tag == CubicTag::Residue) == cube);
        if (c.exponent) CHECK((*c.exponent == 0) == cube);
      }
    }
  }
}

TEST_CASE("form representation") {
  CHECK(represent_by_form(residue_form(), 31) == std::pair<i64, i64>{2, 1});
  CHECK(represent_by_form(nonresidue_form(), 7) == std::pair<i64, i64>{0, 1});
  CHECK_FALSE(represent_by_form(residue_form(), 7).has_value());
  CHECK(represent_by_form(QuadraticForm(1, 0, 1), 25).has_value());
  for (u64 n = 1; n < 400; ++n) {
    const auto w = represent_by_form(nonresidue_form(), n);
    CHECK(w.has_value() == (oracle::form_count(4, 2, 7, n) > 0));
    if (w) CHECK(nonresidue_form()(w->first, w->second) == static_cast<i128>(n));
  }
}

TEST_CASE("classification of primes") {
  const PrimeClass c31 = gauss_classify(31);
  CHECK(c31.branch == GaussBranch::ResidueForm);
  CHECK(c31.witness == std::pair<i64, i64>{2, 1});
  CHECK(c31.rho_p == 3);
  CHECK(c31.chi == 1.0);
  const PrimeClass c7 = gauss_classify(7);
  CHECK(c7.branch == GaussBranch::NonresidueForm);
  CHECK(c7.witness == std::pair<i64, i64>{0, 1});
  CHECK(c7.rho_p == 0);
  CHECK(c7.chi == -0.5);
  const PrimeClass c13 = gauss_classify(13);
  CHECK(c13.branch == GaussBranch::NonresidueForm);
  CHECK(c13.witness == std::pair<i64, i64>{1, 1});
  CHECK(c13.rho_p == 0);
  CHECK(gauss_classify(3).branch == GaussBranch::Three);
  CHECK(gauss_classify(5).branch == GaussBranch::TwoMod3);
  CHECK_FALSE(gauss_classify(5).chi.has_value());
  CHECK(gauss_classify(5).rho_p == 1);
  CHECK_THROWS_AS(gauss_classify(91), DomainError);
}

TEST_CASE("chi and rho") {
  CHECK(chi(2, 31) == 1.0);
  CHECK(chi(2, 7) == -0.5);
  CHECK_THROWS_AS(chi(2, 5), DomainError);
  CHECK_THROWS_AS(chi(7, 7), DomainError);

  CHECK(rho_prime(2, 3) == 1);
  CHECK(rho_prime(2, 31) == 3);
  CHECK(rho_prime(2, 7) == 0);
  CHECK(rho_prime(2, 2) == 1);
  CHECK(rho_prime(7, 7) == 1);

  CHECK(rho(2, 1) == 1);
  CHECK(oracle::cubic_root_count(2, 15) == 1);
  CHECK(rho(2, 15) == 1);
  CHECK(oracle::cubic_root_count(2, 35) == 0);
  CHECK(rho(2, 35) == 0);
  CHECK_THROWS_AS(rho(2, 9), DomainError);

  const Polynomial f = Polynomial::cubic_family(2);
  CHECK(rho_bruteforce(f, 1) == 1);
  CHECK(rho_bruteforce(f, 9) == 0);
  CHECK(rho_bruteforce(f, 31) == 3);
  CHECK_THROWS_AS(rho_bruteforce(f, 100, 50), ResourceError);

  for (const i64 k : {2, 3, -5, 6, 54, 11}) {
    for (u64 q = 1; q <= 600; ++q) {
      if (!factorize(q).squarefree()) continue;
      CHECK(rho(k, q) == oracle::cubic_root_count(k, q));
    }
  }
}
