#include <cmath>
#include <cstring>
#include <random>

#include "cubicprimes/counting.hpp"
#include "cubicprimes/error.hpp"
#include "cubicprimes/series.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cubic;

namespace {

u64 count_oracle(i64 k, u64 x) {
  u64 c = 0;
  for (i64 n = -2'000; n <= 2'000; ++n) {
    const i64 v = n * n * n + k;
    if (v >= 2 && static_cast<u64>(v) <= x && oracle::is_prime(static_cast<u64>(v))) ++c;
  }
  return c;
}

double weighted_oracle(i64 k, u64 x, double (*w)(u64)) {
  double s = 0.0;
  for (u64 n = 0; n * n * n <= x + 10; ++n) {
    const i64 v = static_cast<i64>(n * n * n) + k;
    if (v >= 1 && static_cast<u64>(v) <= x) s += w(n) * oracle::lambda(static_cast<u64>(v));
  }
  return s;
}

}  // namespace

TEST_CASE("enumerating cubic primes") {
  using V = std::vector<CubicPrime>;
  CHECK(enumerate_cubic_primes(2, 5) == V{{0, 2}, {1, 3}, {3, 29}, {5, 127}});
  CHECK(enumerate_cubic_primes(2, 2) == V{{0, 2}, {1, 3}});
  CHECK(enumerate_cubic_primes(1, 1) == V{{1, 2}});
  CHECK(cubic_index_start(2) == 0);
  CHECK(cubic_index_start(30) == -3);
  CHECK_THROWS_AS(enumerate_cubic_primes(2, 3'000'000), CapacityError);
}

TEST_CASE("counting cubic primes") {
  CHECK(count_cubic_primes(2, 130) == 4);
  CHECK(count_cubic_primes(2, 1) == 0);
  for (const i64 k : {2, 1, -1, 30, -20, 7}) {
    for (const u64 x : {2ULL, 10ULL, 1'000ULL, 100'000ULL, 1'000'000ULL}) CHECK(count_cubic_primes(k, x) == count_oracle(k, x));
  }
  u64 prev = 0;
  for (u64 x = 2; x < 1'000'000'000ULL; x = x * 3 + 1) {
    const u64 c = count_cubic_primes(2, x);
    CHECK(c >= prev);
    prev = c;
  }
  const i64 nmax = 2'000;
  CHECK(count_cubic_primes(2, static_cast<u64>(nmax) * nmax * nmax + 2) == enumerate_cubic_primes(2, nmax).size());

  // dual-method sample at 10^12: every enumerated value must be prime by trial division
  const auto list = enumerate_cubic_primes(2, 10'000);
  CHECK(list.size() == count_cubic_primes(2, 1'000'000'000'000ULL));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) CHECK(oracle::is_prime(list[rng() % list.size()].p));
}

TEST_CASE("singular series and prediction") {
  CHECK(singular_series(2, 2) == 1.0);
  CHECK(singular_series(2, 7) == doctest::Approx(7.0 / 6.0).epsilon(1e-15));
  CHECK(singular_series(2, 13) == doctest::Approx(91.0 / 72.0).epsilon(1e-15));
  CHECK(predicted_count(2, 8, 2) == doctest::Approx(2.0 / std::log(8.0)));
  CHECK_THROWS_AS(predicted_count(2, 7), DomainError);
  const double ratio = static_cast<double>(count_cubic_primes(2, 1'000'000)) / predicted_count(2, 1'000'000, 10'000);
  CHECK(ratio >= 0.5);
  CHECK(ratio <= 2.0);
}

TEST_CASE("count table") {
  const std::vector<u64> one{130};
  CHECK(count_table(2, one, 1'000).at(0).observed == 4);
  CHECK(count_table(2, std::vector<u64>{}, 1'000).empty());
  const std::vector<u64> cps{10, 1'000, 1'000'000, 1'000'000'000'000ULL};
  const auto a = count_table(2, cps, 10'000, 1);
  const auto b = count_table(2, cps, 10'000, 5);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].observed == b[i].observed);
    CHECK(std::memcmp(&a[i].ratio, &b[i].ratio, sizeof(double)) == 0);
  }
  CHECK(std::isnan(count_table(2, std::vector<u64>{5}, 100).at(0).predicted));
}

TEST_CASE("weights") {
  CHECK(Weight::parse("power:3") == Weight::power(3));
  CHECK(Weight::parse("totient") == Weight::totient());
  CHECK(Weight::parse("tau") == Weight::tau());
  CHECK(Weight::parse("sigma").name() == "sigma");
  CHECK_THROWS_AS(Weight::parse("cube"), DomainError);
  CHECK(Weight::power(0)(0) == 1.0);
  CHECK(Weight::tau()(0) == 0.0);
  CHECK(Weight::totient()(9) == 6.0);
}

TEST_CASE("weighted von Mangoldt sums") {
  const Polynomial f = Polynomial::cubic_family(2);
  const double expected = std::log(3.0) + 3 * std::log(29.0) + 5 * std::log(127.0);
  CHECK(weighted_lambda_sum(f, Weight::power(1), 130).value == doctest::Approx(expected).epsilon(1e-14));
  CHECK(weighted_lambda_sum(f, Weight::power(1), 130).value == doctest::Approx(35.4214).epsilon(1e-5));
  CHECK(weighted_lambda_sum(f, Weight::power(1), 2).value == 0.0);
  const double tau = std::log(3.0) + 2 * std::log(29.0) + 2 * std::log(127.0);
  CHECK(weighted_lambda_sum(f, Weight::tau(), 130).value == doctest::Approx(tau).epsilon(1e-14));

  for (const u64 x : {100ULL, 5'000ULL, 200'000ULL}) {
    CHECK(weighted_lambda_sum(f, Weight::power(2), x).value ==
          doctest::Approx(weighted_oracle(2, x, [](u64 n) { return double(n) * double(n); })).epsilon(1e-12));
    CHECK(weighted_lambda_sum(f, Weight::sigma(), x).value ==
          doctest::Approx(weighted_oracle(2, x, [](u64 n) {
            double s = 0;
            for (u64 d = 1; d <= n; ++d) s += n % d == 0 ? double(d) : 0.0;
            return s;
          })).epsilon(1e-12));
  }

  const auto a = weighted_lambda_sum(f, Weight::power(1), 1'000'000'000'000ULL, 1);
  const auto b = weighted_lambda_sum(f, Weight::power(1), 1'000'000'000'000ULL, 3);
  CHECK(std::memcmp(&a.value, &b.value, sizeof(double)) == 0);
  CHECK_THROWS_AS(weighted_lambda_sum(Polynomial::from_high_first({-1, 0, 0, 2}), Weight::power(1), 100), DomainError);
}

TEST_CASE("order-inversion identity") {
  for (const u64 x : {2ULL, 130ULL, 100ULL, 1'000ULL, 777ULL}) {
    const double lhs = weighted_lambda_sum(Polynomial::cubic_family(2), Weight::power(1), x).value;
    CHECK(lambda_sum_rhs(2, x) == doctest::Approx(lhs).epsilon(1e-9));
  }
  for (const i64 k : {1, 5, -3, 11}) {
    const double lhs = weighted_lambda_sum(Polynomial::cubic_family(k), Weight::power(1), 3'000).value;
    CHECK(lambda_sum_rhs(k, 3'000) == doctest::Approx(lhs).epsilon(1e-9));
  }
  CHECK_THROWS_AS(lambda_sum_rhs(2, 100'001), ResourceError);
}

TEST_CASE("progression sums") {
  const ProgressionSum a = progression_weighted_sum(5, -2, 20);
  CHECK(a.exact == 38);
  CHECK(a.closed_form == 38);
  CHECK(a.uncorrected_closed_form == 36);
  CHECK(a.leading == 40.0);
  CHECK(a.roots == std::vector<u64>{2});

  const ProgressionSum b = progression_weighted_sum(7, -2, 100);
  CHECK(b.exact == 0);
  CHECK(b.roots.empty());
  CHECK(b.leading == 0.0);

  const ProgressionSum c = progression_weighted_sum(31, -2, 100);
  CHECK(c.roots == std::vector<u64>{11, 24, 27});
  u64 direct = 0;
  for (u64 n = 1; n <= 100; ++n) direct += oracle::cubic_mod(n, 2, 31) == 0 ? n : 0;
  CHECK(c.exact == direct);
  CHECK(c.exact == 465);
  CHECK(c.leading == doctest::Approx(30'000.0 / 62.0));
  CHECK_THROWS_AS(progression_weighted_sum(0, 1, 10), DomainError);
}

TEST_CASE("prime-power tail") {
  CHECK(prime_power_tail(2, 130).tail == 0.0);
  CHECK(prime_power_tail(1, 9).tail == doctest::Approx(2 * std::log(3.0)));
  CHECK(prime_power_tail(5, 1).tail == 0.0);
  CHECK(prime_power_tail(2, 1'000).bound == doctest::Approx(std::sqrt(1'000.0) * std::pow(std::log(1'000.0), 2)));
  // brute-force tail for a few k
  for (const i64 k : {1, -1, 2, 7, -8, 17}) {
    double tail = 0.0;
    for (i64 n = 0; n <= 100; ++n) {
      const i64 v = n * n * n + k;
      if (v < 2 || v > 1'000'000) continue;
      const auto f = oracle::factor(static_cast<u64>(v));
      if (f.size() == 1 && f[0].second >= 2) tail += n * std::log(double(f[0].first));
    }
    CHECK(prime_power_tail(k, 1'000'000).tail == doctest::Approx(tail).epsilon(1e-12));
  }
}
