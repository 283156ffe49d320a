#include "cubicprimes/dset.hpp"

#include <algorithm>
#include <cmath>

#include "cubicprimes/error.hpp"

namespace cubic {

namespace {

// Dense polynomials over F_p, lowest degree first, no trailing zeros.
using PolyFp = std::vector<u64>;

void trim(PolyFp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyFp reduce(const Polynomial& f, u64 p) {
  PolyFp out;
  for (const i64 c : f.coefficients()) {
    const i128 r = static_cast<i128>(c) % static_cast<i128>(p);
    out.push_back(static_cast<u64>(r < 0 ? r + p : r));
  }
  trim(out);
  return out;
}

PolyFp rem(PolyFp a, const PolyFp& m, u64 p) {
  trim(a);
  const u64 inv_lead = powmod(m.back(), p - 2, p);
  while (a.size() >= m.size()) {
    const u64 coef = mulmod(a.back(), inv_lead, p);
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = (a[shift + i] + p - mulmod(coef, m[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

PolyFp mul_mod(const PolyFp& a, const PolyFp& b, const PolyFp& m, u64 p) {
  if (a.empty() || b.empty()) return {};
  PolyFp prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + mulmod(a[i], b[j], p)) % p;
    }
  }
  return rem(std::move(prod), m, p);
}

PolyFp gcd(PolyFp a, PolyFp b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PolyFp r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<u64> roots_mod_prime(const Polynomial& f, u64 p) {
  std::vector<u64> out;
  for (u64 x = 0; x < p; ++x) {
    if (f.eval_mod(static_cast<i64>(x), p) == 0) out.push_back(x);
  }
  return out;
}

// Roots mod p^(j+1) from the complete root set mod p^j = pj.
std::vector<u64> lift(const Polynomial& f, const std::vector<u64>& roots, u64 p, u64 pj) {
  const u64 next = pj * p;
  std::vector<u64> out;
  for (const u64 r : roots) {
    for (u64 t = 0; t < p; ++t) {
      const u64 x = r + t * pj;
      if (f.eval_mod(static_cast<i64>(x), next) == 0) out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool in_dset(const Polynomial& f, u64 d, u64 budget) {
  if (d == 0) throw DomainError("D_f membership needs d >= 1");
  for (const auto& [p, e] : factorize(d).factors) {
    u64 pe = 1;
    for (unsigned i = 0; i < e; ++i) pe *= p;
    if (pe > budget) {
      throw ResourceError("prime power " + std::to_string(pe) + " exceeds the brute-force budget");
    }
    bool solvable = false;
    for (u64 x = 0; x < pe && !solvable; ++x) solvable = f.eval_mod(static_cast<i64>(x), pe) == 0;
    if (!solvable) return false;
  }
  return true;
}

bool has_root_mod_prime(const Polynomial& f, u64 p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  const PolyFp fp = reduce(f, p);
  if (fp.empty()) return true;
  if (fp.size() == 1) return false;
  if (fp.size() == 2) return true;
  if (p <= 64) return !roots_mod_prime(f, p).empty();
  // x^p mod fp by square-and-multiply
  PolyFp acc{1};
  PolyFp base = rem(PolyFp{0, 1}, fp, p);
  for (u64 e = p; e > 0; e >>= 1) {
    if (e & 1) acc = mul_mod(acc, base, fp, p);
    base = mul_mod(base, base, fp, p);
  }
  acc.resize(std::max<std::size_t>(acc.size(), 2), 0);
  acc[1] = (acc[1] + p - 1) % p;
  const PolyFp g = gcd(fp, acc, p);
  return g.size() >= 2;
}

std::vector<u64> roots_mod_prime_power(const Polynomial& f, u64 p, unsigned e) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (e == 0) throw DomainError("exponent must be >= 1");
  if (p > kBruteForceBudget) throw ResourceError("prime exceeds the root-scan budget");
  std::vector<u64> roots = roots_mod_prime(f, p);
  u64 pj = p;
  for (unsigned j = 1; j < e && !roots.empty(); ++j) {
    if (pj > (~u64{0}) / p) throw CapacityError("prime power overflows 64 bits");
    roots = lift(f, roots, p, pj);
    pj *= p;
  }
  return roots;
}

std::vector<bool> dset_indicator(const Polynomial& f, u64 limit, u64 budget) {
  if (limit == 0) throw DomainError("D_f enumeration needs limit >= 1");
  if (limit > budget) {
    throw ResourceError("enumeration limit " + std::to_string(limit) + " exceeds budget " +
                        std::to_string(budget));
  }
  std::vector<bool> member(limit + 1, true);
  member[0] = false;
  for (const u64 p : primes_up_to(limit)) {
    u64 bad = 0;
    if (p > limit / p) {
      if (!has_root_mod_prime(f, p)) bad = p;
    } else {
      std::vector<u64> roots = roots_mod_prime(f, p);
      if (roots.empty()) {
        bad = p;
      } else {
        // once p^e has no root, neither does any higher power
        for (u64 pe = p; pe <= limit / p;) {
          roots = lift(f, roots, p, pe);
          pe *= p;
          if (roots.empty()) {
            bad = pe;
            break;
          }
        }
      }
    }
    if (bad != 0) {
      for (u64 m = bad; m <= limit; m += bad) member[m] = false;
    }
  }
  return member;
}

std::vector<u64> enumerate_dset(const Polynomial& f, u64 limit, u64 budget) {
  const std::vector<bool> member = dset_indicator(f, limit, budget);
  std::vector<u64> out;
  for (u64 d = 1; d <= limit; ++d) {
    if (member[d]) out.push_back(d);
  }
  return out;
}

DsetStats dset_density(const Polynomial& f, u64 limit, std::span<const u64> checkpoints) {
  std::vector<u64> cps(checkpoints.begin(), checkpoints.end());
  if (cps.empty()) cps.push_back(limit);
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (cps[i] == 0 || cps[i] > limit || (i > 0 && cps[i] <= cps[i - 1])) {
      throw DomainError("checkpoints must be ascending within [1, limit]");
    }
  }
  const std::vector<bool> member = dset_indicator(f, limit);

  DsetStats stats;
  stats.limit = limit;
  u64 running = 0;
  std::size_t next = 0;
  for (u64 d = 1; d <= limit; ++d) {
    if (member[d]) ++running;
    while (next < cps.size() && cps[next] == d) {
      stats.checkpoints.push_back({d, running, static_cast<double>(running) / static_cast<double>(d)});
      ++next;
    }
  }
  stats.count = running;

  std::vector<std::pair<double, double>> pts;
  for (const auto& c : stats.checkpoints) {
    if (c.x >= 3 && c.count > 0) pts.emplace_back(std::log(std::log(static_cast<double>(c.x))), std::log(c.ratio));
  }
  if (pts.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double n = static_cast<double>(pts.size());
    const double denom = n * sxx - sx * sx;
    if (denom > 0) {
      const double slope = (n * sxy - sx * sy) / denom;
      stats.decay_exponent = -slope;
      stats.decay_prefactor = std::exp((sy - slope * sx) / n);
    }
  }
  return stats;
}

}  // namespace cubic
