#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cubicprimes/arith.hpp"
#include "cubicprimes/cli.hpp"
#include "cubicprimes/counting.hpp"
#include "cubicprimes/dset.hpp"
#include "cubicprimes/error.hpp"
#include "cubicprimes/residues.hpp"
#include "cubicprimes/series.hpp"
#include "cubicprimes/verify.hpp"

namespace py = pybind11;
using namespace cubic;

namespace {

Polynomial poly_arg(const py::object& f) {
  if (py::isinstance<Polynomial>(f)) return f.cast<Polynomial>();
  if (py::isinstance<py::int_>(f)) return Polynomial::cubic_family(f.cast<i64>());
  return Polynomial(f.cast<std::vector<i64>>());
}

py::dict as_dict(const ProgressionSum& s) {
  py::dict d;
  d["q"] = s.q;
  d["a"] = s.a;
  d["x"] = s.x;
  d["roots"] = s.roots;
  d["exact"] = s.exact;
  d["closed_form"] = s.closed_form;
  d["uncorrected_closed_form"] = s.uncorrected_closed_form;
  d["leading"] = s.leading;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cubic prime counts, cubic residues, D_f and Dirichlet/Epstein partial sums.";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
  py::register_exception<ConsistencyError>(m, "ConsistencyError", base.ptr());

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init<std::vector<i64>>(), py::arg("low_first"))
      .def_static("from_high_first", &Polynomial::from_high_first)
      .def_static("cubic_family", &Polynomial::cubic_family, py::arg("k"))
      .def_property_readonly("degree", &Polynomial::degree)
      .def_property_readonly("coefficients",
                             [](const Polynomial& p) { return std::vector<i64>(p.coefficients().begin(), p.coefficients().end()); })
      .def("__call__",
           [](const Polynomial& p, i64 x) {
             const i128 v = p.eval(x);
             return v < 0 ? py::int_(static_cast<i64>(v)) : py::int_(static_cast<u64>(v));
           })
      .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
      .def("__repr__", [](const Polynomial& p) { return "Polynomial(" + p.to_string() + ")"; });

  m.def("is_prime", &is_prime);
  m.def("factorize", [](u64 n) {
    std::vector<std::pair<u64, unsigned>> out;
    for (const auto& pp : factorize(n).factors) out.emplace_back(pp.prime, pp.exponent);
    return out;
  });
  m.def("mobius", [](u64 n) { return mobius(factorize(n)); });
  m.def("von_mangoldt", &von_mangoldt);
  m.def("von_mangoldt_via_mobius", &von_mangoldt_via_mobius);
  m.def("integer_cuberoot", &integer_cuberoot);
  m.def("fixed_divisor", [](const py::object& f) { return fixed_divisor(poly_arg(f)); });

  m.def("cubic_residue", [](i64 a, u64 p) {
    const CubicClass c = cubic_residue_euler(a, p);
    return py::make_tuple(std::string(to_string(c.tag)), c.exponent);
  });
  m.def("cubic_character_exponent", &cubic_character_exponent);
  m.def("gauss_classify", [](u64 p) {
    const PrimeClass c = gauss_classify(p);
    py::dict d;
    d["p"] = c.p;
    d["branch"] = std::string(to_string(c.branch));
    d["witness"] = c.witness;
    d["rho_p"] = c.rho_p;
    d["chi"] = c.chi;
    return d;
  });
  m.def("chi", &chi, py::arg("k"), py::arg("p"));
  m.def("rho", &rho, py::arg("k"), py::arg("q"));
  m.def("rho_bruteforce", [](const py::object& f, u64 q) { return rho_bruteforce(poly_arg(f), q); });

  m.def("in_dset", [](const py::object& f, u64 d) { return in_dset(poly_arg(f), d); });
  m.def("enumerate_dset", [](const py::object& f, u64 limit) { return enumerate_dset(poly_arg(f), limit); });

  m.def("count_cubic_primes", &count_cubic_primes, py::arg("k"), py::arg("x"), py::arg("threads") = 1);
  m.def("enumerate_cubic_primes", [](i64 k, i64 n_max) {
    std::vector<std::pair<i64, u64>> out;
    for (const auto& c : enumerate_cubic_primes(k, n_max)) out.emplace_back(c.n, c.p);
    return out;
  });
  m.def("singular_series", &singular_series, py::arg("k"), py::arg("p_cutoff") = kDefaultPCutoff);
  m.def("predicted_count", &predicted_count, py::arg("k"), py::arg("x"), py::arg("p_cutoff") = kDefaultPCutoff);
  m.def(
      "weighted_lambda_sum",
      [](const py::object& f, const std::string& weight, u64 x, unsigned threads) {
        return weighted_lambda_sum(poly_arg(f), Weight::parse(weight), x, threads).value;
      },
      py::arg("f"), py::arg("weight"), py::arg("x"), py::arg("threads") = 1);
  m.def("lambda_sum_rhs", &lambda_sum_rhs);
  m.def("progression_weighted_sum", [](u64 q, i64 a, u64 x) { return as_dict(progression_weighted_sum(q, a, x)); });
  m.def("prime_power_tail", [](i64 k, u64 x) {
    const PrimePowerTail t = prime_power_tail(k, x);
    return py::make_tuple(t.tail, t.bound);
  });

  m.def(
      "dirichlet_partial_sum",
      [](const py::object& f, double s, u64 x) { return dirichlet_partial_sum(poly_arg(f), s, x).back().value; },
      py::arg("f"), py::arg("s"), py::arg("x"));
  m.def("epstein_zeta_partial", [](std::tuple<i64, i64, i64> q, double s, u64 n_max) {
    return epstein_zeta_partial(QuadraticForm(std::get<0>(q), std::get<1>(q), std::get<2>(q)), s, n_max);
  });
  m.def("epstein_mu_sum", [](std::tuple<i64, i64, i64> q, double s, u64 n_max) {
    return epstein_mu_sum(QuadraticForm(std::get<0>(q), std::get<1>(q), std::get<2>(q)), s, n_max);
  });

  m.def("verify", [](const std::string& suite, bool tiny) {
    VerifyOptions o;
    o.tiny = tiny;
    std::vector<std::tuple<std::string, bool, u64, std::string>> out;
    for (const auto& r : run_suite(suite, o)) out.emplace_back(r.name, r.passed, r.checked, r.counterexample);
    return out;
  }, py::arg("suite"), py::arg("tiny") = true);

  m.attr("__version__") = cli::kVersion;
}
