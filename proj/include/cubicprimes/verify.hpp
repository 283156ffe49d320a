#pragma once

// Invariant suites behind `cubicprimes verify`.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cubic {

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::uint64_t checked = 0;
  std::string counterexample;  // first failure, empty on pass
};

struct VerifyOptions {
  bool tiny = false;
  std::optional<std::uint64_t> pmax;  // lemma3 prime bound
  std::optional<std::uint64_t> nmax;  // lemma2 range, rho modulus bound
  std::uint64_t sample_seed = 20130201;
};

/// suite in {lemma2, lemma3, lemma4, rho, eq3, all}; DomainError otherwise.
std::vector<PropertyResult> run_suite(std::string_view suite, const VerifyOptions& opts);

}  // namespace cubic
