#include "cubicprimes/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "cubicprimes/arith.hpp"
#include "cubicprimes/counting.hpp"
#include "cubicprimes/dset.hpp"
#include "cubicprimes/error.hpp"
#include "cubicprimes/residues.hpp"
#include "cubicprimes/series.hpp"
#include "cubicprimes/verify.hpp"

namespace cubic::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Accepts "12345" and "1e18".
u64 parse_count(const std::string& text, const char* flag) {
  auto bad = [&] { return UsageError(std::string("--") + flag + ": cannot parse '" + text + "' as a count"); };
  auto digits = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) throw bad();
    u64 v = 0;
    for (const char c : s) {
      if (__builtin_mul_overflow(v, u64{10}, &v) || __builtin_add_overflow(v, static_cast<u64>(c - '0'), &v)) {
        throw bad();
      }
    }
    return v;
  };
  const std::size_t pos = text.find_first_of("eE");
  if (pos == std::string::npos) return digits(text);
  u64 v = digits(text.substr(0, pos));
  const u64 e = digits(text.substr(pos + 1));
  for (u64 i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(v, u64{10}, &v)) throw bad();
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (const char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<u64> parse_list(const std::string& s, const char* flag) {
  std::vector<u64> out;
  for (const auto& item : split(s, ',')) out.push_back(parse_count(item, flag));
  return out;
}

std::vector<i64> parse_signed_list(const std::string& s, const char* flag) {
  std::vector<i64> out;
  for (const auto& item : split(s, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string("--") + flag + ": cannot parse '" + item + "' as an integer");
    }
  }
  return out;
}

struct Args {
  std::string format = "csv";
  std::string out;
  unsigned threads = 1;

  std::optional<i64> k;
  std::string poly_high, poly_low;
  std::string x, checkpoints;
  std::string pcutoff = "1000000";
  std::string pmax, nmax;
  std::optional<i64> a;
  std::string p, q;
  double s_dirichlet = 1.0;
  double s_epstein = 2.0;
  std::string form = "1,0,1";
  std::string weight = "power:1";
  bool members = false, kappa = false, rhs = false;
  std::string suite, scale = "default", sample_seed;
};

i64 require_k(const Args& a) {
  if (!a.k) throw UsageError("--k is required");
  return *a.k;
}

Polynomial polynomial_from(const Args& a) {
  if (!a.poly_high.empty()) return Polynomial::from_high_first(parse_signed_list(a.poly_high, "poly-high"));
  if (!a.poly_low.empty()) return Polynomial(parse_signed_list(a.poly_low, "poly-low"));
  if (a.k) return Polynomial::cubic_family(*a.k);
  throw UsageError("one of --k, --poly-high, --poly-low is required");
}

std::vector<u64> checkpoints_from(const Args& a) {
  if (!a.checkpoints.empty()) return parse_list(a.checkpoints, "checkpoints");
  if (!a.x.empty()) return decade_checkpoints(parse_count(a.x, "x"));
  throw UsageError("--x or --checkpoints is required");
}

u64 limit_from(const Args& a) {
  if (!a.x.empty()) return parse_count(a.x, "x");
  if (!a.checkpoints.empty()) return parse_list(a.checkpoints, "checkpoints").back();
  throw UsageError("--x or --checkpoints is required");
}

Value opt_value(const std::optional<double>& v) { return v ? Value{*v} : Value{}; }

// ---------------------------------------------------------------------------
// Subcommands

OutputTable cmd_count(const Args& a) {
  const i64 k = require_k(a);
  const auto cps = checkpoints_from(a);
  OutputTable t;
  t.header = {"x", "observed", "predicted", "ratio", "p_cutoff"};
  for (const auto& r : count_table(k, cps, parse_count(a.pcutoff, "pcutoff"), a.threads)) {
    t.add_row({r.x, r.observed, r.predicted, r.ratio, r.p_cutoff});
  }
  return t;
}

OutputTable cmd_constant(const Args& a) {
  const i64 k = require_k(a);
  const u64 pmax = a.pmax.empty() ? kDefaultPCutoff : parse_count(a.pmax, "pmax");
  OutputTable t;
  t.header = {"p_cutoff", "singular_series"};
  for (const u64 c : decade_checkpoints(std::max<u64>(pmax, 2))) t.add_row({c, singular_series(k, c)});
  return t;
}

OutputTable cmd_residue(const Args& a) {
  if (!a.a || a.p.empty()) throw UsageError("--a and --p are required");
  const u64 p = parse_count(a.p, "p");
  const CubicClass c = cubic_residue_euler(*a.a, p);
  const PrimeClass g = gauss_classify(p);
  OutputTable t;
  t.header = {"a", "p", "class", "exponent", "gauss", "u", "v", "rho_p", "chi"};
  t.add_row({*a.a, p, std::string(to_string(c.tag)), c.exponent ? Value{static_cast<i64>(*c.exponent)} : Value{},
             std::string(to_string(g.branch)), g.witness ? Value{g.witness->first} : Value{},
             g.witness ? Value{g.witness->second} : Value{}, static_cast<i64>(g.rho_p), opt_value(g.chi)});
  return t;
}

OutputTable cmd_rho(const Args& a) {
  const i64 k = require_k(a);
  if (a.q.empty()) throw UsageError("--q is required");
  const u64 q = parse_count(a.q, "q");
  if (q == 0) throw DomainError("q must be >= 1");
  const bool sqf = factorize(q).squarefree();
  OutputTable t;
  t.header = {"k", "q", "squarefree", "rho", "rho_bruteforce"};
  t.add_row({k, q, static_cast<i64>(sqf), sqf ? Value{rho(k, q)} : Value{},
             q <= kBruteForceBudget ? Value{rho_bruteforce(Polynomial::cubic_family(k), q)} : Value{}});
  return t;
}

OutputTable cmd_dset(const Args& a) {
  const Polynomial f = polynomial_from(a);
  const u64 limit = limit_from(a);
  OutputTable t;
  t.report.emplace_back("polynomial", f.to_string());
  if (a.members) {
    t.header = {"d"};
    for (const u64 d : enumerate_dset(f, limit)) t.add_row({d});
    return t;
  }
  const std::vector<u64> cps = a.checkpoints.empty() ? decade_checkpoints(limit) : parse_list(a.checkpoints, "checkpoints");
  const DsetStats st = dset_density(f, limit, cps);
  t.header = {"x", "count", "ratio"};
  for (const auto& c : st.checkpoints) t.add_row({c.x, c.count, c.ratio});
  t.report.emplace_back("decay_exponent", opt_value(st.decay_exponent));
  t.report.emplace_back("decay_prefactor", opt_value(st.decay_prefactor));
  return t;
}

OutputTable cmd_dseries(const Args& a) {
  const Polynomial f = polynomial_from(a);
  const u64 x = limit_from(a);
  OutputTable t;
  t.header = {"x", "value", "terms_used"};
  t.report.emplace_back("polynomial", f.to_string());
  if (a.kappa) {
    if (a.s_dirichlet != 1.0) throw UsageError("--kappa evaluates s = 1 only");
    const KappaTrajectory kt = kappa_trajectory(f, x);
    for (const auto& r : kt.records) t.add_row({r.x, r.value, r.terms_used});
    t.report.emplace_back("fitted_kappa", opt_value(kt.fitted_kappa));
    t.report.emplace_back("fit_residual", kt.fit_residual);
    return t;
  }
  const std::vector<u64> cps = a.checkpoints.empty() ? decade_checkpoints(x) : parse_list(a.checkpoints, "checkpoints");
  for (const auto& r : dirichlet_partial_sum(f, a.s_dirichlet, x, cps)) t.add_row({r.x, r.value, r.terms_used});
  return t;
}

OutputTable cmd_epstein(const Args& a) {
  const auto abc = parse_signed_list(a.form, "form");
  if (abc.size() != 3) throw UsageError("--form takes a,b,c");
  const QuadraticForm q(abc[0], abc[1], abc[2]);
  const u64 nmax = a.nmax.empty() ? 10'000 : parse_count(a.nmax, "nmax");
  const std::vector<u64> cps = a.checkpoints.empty() ? std::vector<u64>{nmax} : parse_list(a.checkpoints, "checkpoints");
  const double s = a.s_epstein;
  OutputTable t;
  t.header = {"n_max", "zeta_lattice", "zeta_per_n", "mu_sum"};
  for (const u64 n : cps) {
    const Value lattice = s > 1.0 ? Value{epstein_zeta_partial(q, s, n)} : Value{};
    const Value per_n = (s > 1.0 && n <= 1'000'000) ? Value{epstein_zeta_partial_per_n(q, s, n)} : Value{};
    t.add_row({n, lattice, per_n, epstein_mu_sum(q, s, n)});
  }
  return t;
}

OutputTable cmd_chebyshev(const Args& a) {
  const Polynomial f = polynomial_from(a);
  const Weight w = Weight::parse(a.weight);
  const auto cps = checkpoints_from(a);
  const bool pure = f.degree() == 3 && f.coefficient(3) == 1 && f.coefficient(2) == 0 && f.coefficient(1) == 0;
  if (a.rhs && (!pure || w != Weight::power(1))) throw UsageError("--rhs needs x^3 + k and weight power:1");
  OutputTable t;
  t.header = {"x", "weight", "value", "tail_value", "bound"};
  if (a.rhs) t.header.push_back("rhs");
  t.report.emplace_back("polynomial", f.to_string());
  for (const u64 x : cps) {
    const WeightedSumRecord r = weighted_lambda_sum(f, w, x, a.threads);
    std::vector<Value> row{r.x, r.weight.name(), r.value, r.tail_value, r.bound};
    if (a.rhs) row.emplace_back(lambda_sum_rhs(f.coefficient(0), x));
    t.add_row(std::move(row));
  }
  return t;
}

OutputTable cmd_lemma4(const Args& a) {
  if (a.q.empty() || a.x.empty()) throw UsageError("--q and --x are required");
  if (!a.a && !a.k) throw UsageError("--a (target residue) or --k (a = -k) is required");
  const i64 target = a.a ? *a.a : -*a.k;
  const ProgressionSum s = progression_weighted_sum(parse_count(a.q, "q"), target, parse_count(a.x, "x"));
  std::string roots;
  for (std::size_t i = 0; i < s.roots.size(); ++i) roots += (i ? ";" : "") + std::to_string(s.roots[i]);
  OutputTable t;
  t.header = {"q", "a", "x", "num_roots", "roots", "exact", "closed_form", "uncorrected_closed_form", "leading", "ratio"};
  const double ratio = s.leading > 0 ? static_cast<double>(s.exact) / s.leading : std::numeric_limits<double>::quiet_NaN();
  t.add_row({s.q, s.a, s.x, static_cast<u64>(s.roots.size()), roots, s.exact, s.closed_form, s.uncorrected_closed_form,
             s.leading, ratio});
  return t;
}

OutputTable cmd_tail(const Args& a) {
  const i64 k = require_k(a);
  OutputTable t;
  t.header = {"x", "tail", "bound"};
  for (const u64 x : checkpoints_from(a)) {
    const PrimePowerTail r = prime_power_tail(k, x);
    t.add_row({x, r.tail, r.bound});
  }
  return t;
}

OutputTable cmd_fixdiv(const Args& a) {
  const Polynomial f = polynomial_from(a);
  OutputTable t;
  t.header = {"polynomial", "degree", "fixed_divisor"};
  t.add_row({f.to_string(), static_cast<i64>(f.degree()), fixed_divisor(f)});
  return t;
}

OutputTable cmd_verify(const Args& a, bool& all_passed) {
  VerifyOptions o;
  if (a.scale != "tiny" && a.scale != "default") throw UsageError("--scale must be tiny or default");
  o.tiny = a.scale == "tiny";
  if (!a.pmax.empty()) o.pmax = parse_count(a.pmax, "pmax");
  if (!a.nmax.empty()) o.nmax = parse_count(a.nmax, "nmax");
  if (!a.sample_seed.empty()) o.sample_seed = parse_count(a.sample_seed, "sample-seed");
  OutputTable t;
  t.header = {"property", "passed", "checked", "counterexample"};
  all_passed = true;
  for (const auto& r : run_suite(a.suite, o)) {
    all_passed = all_passed && r.passed;
    t.add_row({r.name, std::string(r.passed ? "pass" : "FAIL"), r.checked, r.counterexample});
  }
  return t;
}

void record_parameters(const CLI::App* sub, OutputTable& t) {
  for (const CLI::Option* opt : sub->get_options()) {
    const std::string name = opt->get_single_name();
    if (name == "help" || name == "h") continue;
    std::string value;
    if (opt->count() > 0) {
      const auto& res = opt->results();
      for (std::size_t i = 0; i < res.size(); ++i) value += (i ? "," : "") + res[i];
    } else {
      value = opt->get_default_str();
    }
    if (!value.empty()) t.parameters.emplace_back(name, value);
  }
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Args a;
  CLI::App app{"Cubic prime progressions: counts, residues, D_f, Dirichlet and Epstein sums", "cubicprimes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto common = [&](CLI::App* s) {
    s->add_option("--format", a.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    s->add_option("--out", a.out, "write to PATH instead of stdout");
    s->add_option("--threads", a.threads, "worker threads for range-parallel paths")
        ->check(CLI::Range(1u, 1024u))
        ->capture_default_str();
  };
  auto poly = [&](CLI::App* s) {
    s->add_option("--k", a.k, "polynomial x^3 + k");
    auto* hi = s->add_option("--poly-high", a.poly_high, "coefficients, highest degree first");
    auto* lo = s->add_option("--poly-low", a.poly_low, "coefficients, lowest degree first");
    hi->excludes(lo);
  };
  auto range = [&](CLI::App* s) {
    s->add_option("--x", a.x, "upper bound (accepts 1e18)");
    s->add_option("--checkpoints", a.checkpoints, "ascending list a,b,c");
  };

  auto* count = app.add_subcommand("count", "cubic prime counts against the conjectured main term");
  count->add_option("--k", a.k, "polynomial x^3 + k");
  range(count);
  count->add_option("--pcutoff", a.pcutoff, "singular series truncation")->capture_default_str();
  common(count);

  auto* constant = app.add_subcommand("constant", "truncated singular series");
  constant->add_option("--k", a.k);
  constant->add_option("--pmax", a.pmax, "largest truncation point (default 1e6)");
  common(constant);

  auto* residue = app.add_subcommand("residue", "cubic residuacity of a mod p and the class of p");
  residue->add_option("--a", a.a)->allow_extra_args(false);
  residue->add_option("--p", a.p);
  common(residue);

  auto* rho_cmd = app.add_subcommand("rho", "root count of x^3 + k mod q");
  rho_cmd->add_option("--k", a.k);
  rho_cmd->add_option("--q", a.q);
  common(rho_cmd);

  auto* dset = app.add_subcommand("dset", "density of D_f");
  poly(dset);
  range(dset);
  dset->add_flag("--members", a.members, "list members instead of counts");
  common(dset);

  auto* dseries = app.add_subcommand("dseries", "partial sums of mu(n) log n / n^s over D_f");
  poly(dseries);
  range(dseries);
  dseries->add_option("--s", a.s_dirichlet)->capture_default_str();
  dseries->add_flag("--kappa", a.kappa, "log-spaced trajectory with last-quartile fit");
  common(dseries);

  auto* epstein = app.add_subcommand("epstein", "Epstein zeta partial sums");
  epstein->add_option("--form", a.form, "a,b,c of a x^2 + b xy + c y^2")->capture_default_str();
  epstein->add_option("--s", a.s_epstein)->capture_default_str();
  epstein->add_option("--nmax", a.nmax, "largest n (default 1e4)");
  epstein->add_option("--checkpoints", a.checkpoints);
  common(epstein);

  auto* cheb = app.add_subcommand("chebyshev", "weighted von Mangoldt sums over f(n)");
  poly(cheb);
  range(cheb);
  cheb->add_option("--weight", a.weight, "power:K, totient, sigma or tau")->capture_default_str();
  cheb->add_flag("--rhs", a.rhs, "also evaluate the divisor-side sum (x <= 1e5)");
  common(cheb);

  auto* lemma4 = app.add_subcommand("lemma4", "sum of n <= x with n^3 = a mod q");
  lemma4->add_option("--q", a.q);
  lemma4->add_option("--a", a.a);
  lemma4->add_option("--k", a.k);
  lemma4->add_option("--x", a.x);
  common(lemma4);

  auto* tail = app.add_subcommand("tail", "prime-power part of the weighted sum");
  tail->add_option("--k", a.k);
  range(tail);
  common(tail);

  auto* fixdiv = app.add_subcommand("fixdiv", "fixed divisor gcd f(Z)");
  poly(fixdiv);
  common(fixdiv);

  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->add_option("--suite", a.suite)->required()->check(
      CLI::IsMember({"lemma2", "lemma3", "lemma4", "rho", "eq3", "all"}));
  verify->add_option("--scale", a.scale, "tiny or default")->capture_default_str();
  verify->add_option("--pmax", a.pmax);
  verify->add_option("--nmax", a.nmax);
  verify->add_option("--sample-seed", a.sample_seed);
  common(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  CLI::App* sub = nullptr;
  try {
    app.parse(reversed);
    sub = app.get_subcommands().front();
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    OutputTable table;
    bool passed = true;
    const std::string name = sub->get_name();
    if (name == "count") table = cmd_count(a);
    else if (name == "constant") table = cmd_constant(a);
    else if (name == "residue") table = cmd_residue(a);
    else if (name == "rho") table = cmd_rho(a);
    else if (name == "dset") table = cmd_dset(a);
    else if (name == "dseries") table = cmd_dseries(a);
    else if (name == "epstein") table = cmd_epstein(a);
    else if (name == "chebyshev") table = cmd_chebyshev(a);
    else if (name == "lemma4") table = cmd_lemma4(a);
    else if (name == "tail") table = cmd_tail(a);
    else if (name == "fixdiv") table = cmd_fixdiv(a);
    else table = cmd_verify(a, passed);

    table.command = name;
    record_parameters(sub, table);
    table.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::ofstream file;
    if (!a.out.empty()) {
      file.open(a.out, std::ios::binary);
      if (!file) throw UsageError("cannot open --out path " + a.out);
    }
    std::ostream& sink = a.out.empty() ? out : file;
    if (a.format == "json") {
      write_json(table, sink);
    } else {
      write_csv(table, sink);
    }
    if (!passed) {
      err << "verify: at least one property failed\n";
      return kConsistency;
    }
    return kOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << sub->help();
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kCapacity;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kCapacity;
  } catch (const ConsistencyError& e) {
    err << "consistency error: " << e.what() << '\n';
    return kConsistency;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace cubic::cli
