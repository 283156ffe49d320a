#include <sstream>

#include "cubicprimes/cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cubic::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count payloads") {
  const Result j = run({"count", "--k", "2", "--x", "130", "--format", "json"});
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["header"][1] == "observed");
  CHECK(doc["rows"].back()[1] == 4);
  CHECK(doc["metadata"]["command"] == "count");
  CHECK(doc["metadata"]["parameters"]["k"] == "2");

  const Result c = run({"count", "--k", "2", "--x", "130"});
  CHECK(cubic::cli::csv_body(c.out).rfind("x,observed,predicted,ratio,p_cutoff\n", 0) == 0);
}

TEST_CASE("residue output") {
  const Result r = run({"residue", "--a", "2", "--p", "31"});
  REQUIRE(r.code == 0);
  CHECK(cubic::cli::csv_body(r.out) == "a,p,class,exponent,gauss,u,v,rho_p,chi\n2,31,Residue,0,ResidueForm,2,1,3,1\n");
}

TEST_CASE("rho on a non-squarefree modulus reports only the scan") {
  const Result r = run({"rho", "--k", "2", "--q", "9"});
  REQUIRE(r.code == 0);
  CHECK(cubic::cli::csv_body(r.out) == "k,q,squarefree,rho,rho_bruteforce\n2,9,0,,0\n");
}

TEST_CASE("exit codes") {
  CHECK(run({"count"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"count", "--k", "2", "--x", "ten"}).code == 2);
  CHECK(run({"count", "--k", "2", "--x", "100", "--bogus"}).code == 2);
  CHECK(run({"count", "--k", "2", "--x", "2e19"}).code == 2);
  CHECK(run({"epstein", "--nmax", "1e9"}).code == 3);
  CHECK(run({"dset", "--k", "2", "--x", "1e9"}).code == 3);
  CHECK(run({"chebyshev", "--k", "2", "--x", "1e6", "--rhs"}).code == 3);
  CHECK(run({"count", "--help"}).code == 0);
}

TEST_CASE("replay determinism") {
  const std::vector<std::string> args{"chebyshev", "--k", "2", "--x", "1e9", "--weight", "power:1"};
  auto with_threads = args;
  with_threads.insert(with_threads.end(), {"--threads", "4"});
  CHECK(cubic::cli::csv_body(run(args).out) == cubic::cli::csv_body(run(with_threads).out));
  CHECK(cubic::cli::csv_body(run(args).out) == cubic::cli::csv_body(run(args).out));
}

TEST_CASE("every subcommand runs") {
  const std::vector<std::vector<std::string>> cases{
      {"constant", "--k", "2", "--pmax", "1000"},
      {"rho", "--k", "2", "--q", "15"},
      {"dset", "--k", "2", "--x", "10", "--members"},
      {"dseries", "--poly-high", "1,0,0,2", "--x", "1000", "--kappa"},
      {"epstein", "--form", "1,0,27", "--s", "1.5", "--nmax", "1000"},
      {"chebyshev", "--k", "2", "--x", "1000", "--rhs"},
      {"lemma4", "--q", "5", "--a", "-2", "--x", "20"},
      {"tail", "--k", "2", "--x", "1e6"},
      {"fixdiv", "--poly-low", "2,1,1"},
      {"verify", "--suite", "lemma4", "--scale", "tiny"},
  };
  for (const auto& c : cases) {
    CAPTURE(c[0]);
    const Result r = run(c);
    CHECK(r.code == 0);
    CHECK(r.err.empty());
  }
  CHECK(cubic::cli::csv_body(run({"fixdiv", "--poly-low", "2,1,1"}).out) ==
        "polynomial,degree,fixed_divisor\nx^2 + x + 2,2,2\n");
}
