#include "cubicprimes/verify.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "cubicprimes/arith.hpp"
#include "cubicprimes/counting.hpp"
#include "cubicprimes/error.hpp"
#include "cubicprimes/residues.hpp"

namespace cubic {

namespace {

class Property {
 public:
  explicit Property(std::string name) { result_.name = std::move(name); }

  // Records the first failing case only.
  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.checked;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = describe();
    }
  }
  PropertyResult done() { return std::move(result_); }

 private:
  PropertyResult result_;
};

bool close_rel(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void lemma2(const VerifyOptions& o, std::vector<PropertyResult>& out) {
  const u64 nmax = o.nmax.value_or(o.tiny ? 2'000 : 100'000);

  Property ident("lemma2.lambda_via_mobius");
  Property logsum("lemma2.log_divisor_sum");
  for (u64 n = 1; n <= nmax; ++n) {
    const double direct = von_mangoldt(n);
    const double inverted = von_mangoldt_via_mobius(n);
    ident.check(close_rel(inverted, direct, 1e-9),
                [&] { return "n=" + std::to_string(n) + " via_mobius=" + fmt(inverted) + " direct=" + fmt(direct); });
    double s = 0.0;
    for (const u64 d : factorize(n).divisors()) s += von_mangoldt(d);
    const double ln = std::log(static_cast<double>(n));
    logsum.check(close_rel(s, ln, 1e-9), [&] { return "n=" + std::to_string(n) + " sum=" + fmt(s); });
  }
  out.push_back(ident.done());
  out.push_back(logsum.done());

  Property mult("lemma2.mobius_multiplicative");
  const u64 bound = o.tiny ? 10'000 : 1'000'000;
  const ArithTables t = sieve_range(bound);
  std::mt19937_64 rng(o.sample_seed);
  std::uniform_int_distribution<u64> pick(1, bound);
  const int pairs = o.tiny ? 1'000 : 10'000;
  for (int i = 0; i < pairs;) {
    const u64 m = pick(rng), n = pick(rng);
    if (std::gcd(m, n) != 1) continue;
    ++i;
    const int lhs = mobius(factorize(m * n));
    const int rhs = mobius(m, t) * mobius(n, t);
    mult.check(lhs == rhs, [&] { return "m=" + std::to_string(m) + " n=" + std::to_string(n); });
  }
  out.push_back(mult.done());
}

void lemma3(const VerifyOptions& o, std::vector<PropertyResult>& out) {
  const u64 pmax = o.pmax.value_or(o.tiny ? 20'000 : 1'000'000);
  const std::vector<u64> primes = primes_up_to(pmax);

  Property agree("lemma3.euler_gauss_agreement");
  for (const u64 p : primes) {
    if (p % 3 != 1) continue;
    std::string why;
    bool ok = true;
    try {
      const PrimeClass c = gauss_classify(p);
      const bool euler = cubic_residue_euler(2, p).tag == CubicTag::Residue;
      ok = (c.branch == GaussBranch::ResidueForm) == euler;
    } catch (const ConsistencyError& e) {
      ok = false;
      why = e.what();
    }
    agree.check(ok, [&] { return "p=" + std::to_string(p) + (why.empty() ? "" : " " + why); });
  }
  out.push_back(agree.done());

  Property sanity("lemma3.cube_root_count_sums_to_p");
  for (const u64 p : primes) {
    if (p > 3'000) break;
    u64 total = 1;  // a = 0 has the single root 0
    for (u64 a = 1; a < p; ++a) {
      const bool residue = cubic_residue_euler(static_cast<i64>(a), p).tag == CubicTag::Residue;
      total += (p % 3 == 1) ? (residue ? 3 : 0) : 1;
    }
    sanity.check(total == p, [&] { return "p=" + std::to_string(p) + " total=" + std::to_string(total); });
  }
  out.push_back(sanity.done());

  Property additive("lemma3.exponent_additive");
  std::mt19937_64 rng(o.sample_seed);
  for (const u64 p : primes) {
    if (p > 10'000) break;
    if (p % 3 != 1) continue;
    std::uniform_int_distribution<u64> pick(1, p - 1);
    for (int i = 0; i < 20; ++i) {
      const u64 a = pick(rng), b = pick(rng);
      const int ea = cubic_character_exponent(static_cast<i64>(a), p);
      const int eb = cubic_character_exponent(static_cast<i64>(b), p);
      const int eab = cubic_character_exponent(static_cast<i64>(mulmod(a, b, p)), p);
      additive.check(eab == (ea + eb) % 3, [&] {
        return "p=" + std::to_string(p) + " a=" + std::to_string(a) + " b=" + std::to_string(b);
      });
    }
  }
  out.push_back(additive.done());
}

void rho_suite(const VerifyOptions& o, std::vector<PropertyResult>& out) {
  const u64 qmax = o.nmax.value_or(o.tiny ? 1'000 : 10'000);
  const Polynomial f = Polynomial::cubic_family(2);

  Property formula("rho.formula_vs_bruteforce");
  for (u64 q = 1; q <= qmax; ++q) {
    if (!factorize(q).squarefree()) continue;
    const u64 a = rho(2, q), b = rho_bruteforce(f, q);
    formula.check(a == b, [&] {
      return "q=" + std::to_string(q) + " rho=" + std::to_string(a) + " brute=" + std::to_string(b);
    });
  }
  out.push_back(formula.done());

  Property mult("rho.multiplicative");
  std::vector<u64> sqf;
  for (u64 q = 1; q <= (o.tiny ? 100u : 1'000u); ++q) {
    if (factorize(q).squarefree()) sqf.push_back(q);
  }
  std::mt19937_64 rng(o.sample_seed);
  std::uniform_int_distribution<std::size_t> pick(0, sqf.size() - 1);
  for (const i64 k : {2, 5, -7}) {
    for (int i = 0; i < (o.tiny ? 200 : 2'000);) {
      const u64 a = sqf[pick(rng)], b = sqf[pick(rng)];
      if (std::gcd(a, b) != 1) continue;
      ++i;
      mult.check(rho(k, a * b) == rho(k, a) * rho(k, b), [&] {
        return "k=" + std::to_string(k) + " q1=" + std::to_string(a) + " q2=" + std::to_string(b);
      });
    }
  }
  out.push_back(mult.done());
}

void lemma4(const VerifyOptions& o, std::vector<PropertyResult>& out) {
  Property exact("lemma4.closed_form_exact");
  Property band("lemma4.leading_ratio_band");
  Property roots("lemma4.roots_match_rho");
  std::mt19937_64 rng(o.sample_seed);
  std::uniform_int_distribution<u64> pick_q(1, 1'000), pick_x(1, 100'000);
  const int instances = o.tiny ? 50 : 200;
  for (int i = 0; i < instances;) {
    const u64 q = pick_q(rng), x = pick_x(rng);
    if (!factorize(q).squarefree() || rho(2, q) == 0) continue;
    ++i;
    const ProgressionSum s = progression_weighted_sum(q, -2, x);
    auto where = [&] { return "q=" + std::to_string(q) + " x=" + std::to_string(x); };
    exact.check(s.exact == s.closed_form, [&] {
      return where() + " exact=" + std::to_string(s.exact) + " closed=" + std::to_string(s.closed_form);
    });
    roots.check(s.roots.size() == rho(2, q), where);
    if (x >= 100 * q) {
      const double r = static_cast<double>(s.exact) / s.leading;
      band.check(r >= 0.95 && r <= 1.05, [&] { return where() + " ratio=" + fmt(r); });
    }
  }
  out.push_back(exact.done());
  out.push_back(band.done());
  out.push_back(roots.done());

  Property missing_term("lemma4.uncorrected_form_discrepancy");
  const ProgressionSum s = progression_weighted_sum(5, -2, 20);
  missing_term.check(s.exact == 38 && s.closed_form == 38 && s.uncorrected_closed_form == 36, [&] {
    return "exact=" + std::to_string(s.exact) + " uncorrected=" + std::to_string(s.uncorrected_closed_form);
  });
  out.push_back(missing_term.done());
}

void eq3(const VerifyOptions& o, std::vector<PropertyResult>& out) {
  Property ident("eq3.order_inversion_identity");
  std::vector<u64> xs{100, 1'000};
  if (!o.tiny) xs.push_back(10'000);
  const Polynomial f = Polynomial::cubic_family(2);
  for (const u64 x : xs) {
    const double lhs = weighted_lambda_sum(f, Weight::power(1), x).value;
    const double rhs = lambda_sum_rhs(2, x);
    ident.check(std::abs(lhs - rhs) <= 1e-6 * std::abs(lhs), [&] {
      return "x=" + std::to_string(x) + " lhs=" + fmt(lhs) + " rhs=" + fmt(rhs);
    });
  }
  out.push_back(ident.done());
}

}  // namespace

std::vector<PropertyResult> run_suite(std::string_view suite, const VerifyOptions& opts) {
  std::vector<PropertyResult> out;
  const bool all = suite == "all";
  bool matched = all;
  if (all || suite == "lemma2") lemma2(opts, out), matched = true;
  if (all || suite == "lemma3") lemma3(opts, out), matched = true;
  if (all || suite == "rho") rho_suite(opts, out), matched = true;
  if (all || suite == "lemma4") lemma4(opts, out), matched = true;
  if (all || suite == "eq3") eq3(opts, out), matched = true;
  if (!matched) throw DomainError("unknown suite '" + std::string(suite) + "'");
  return out;
}

}  // namespace cubic
