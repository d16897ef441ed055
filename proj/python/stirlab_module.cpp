#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stirlab/identities.hpp"
#include "stirlab/objects.hpp"
#include "stirlab/statistics.hpp"

namespace py = pybind11;
using namespace stirlab;

namespace {

py::int_ to_py(const BigInt& v) {
  PyObject* obj = PyLong_FromString(v.str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

py::list to_py(const IntPolynomial& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(to_py(c));
  if (p.is_zero()) out.append(py::int_(0));
  return out;
}

py::list to_py(const BivariatePolynomial& p) {
  py::list rows;
  for (const auto& row : p.coeffs()) {
    py::list r;
    for (const auto& c : row) r.append(to_py(c));
    rows.append(r);
  }
  return rows;
}

py::dict to_py(const VerificationReport& r) {
  py::dict d;
  d["check"] = r.check;
  d["ranges"] = r.ranges;
  d["passed"] = r.passed;
  d["cases"] = r.cases;
  d["notes"] = r.notes;
  if (r.counterexample) {
    py::dict c;
    c["params"] = r.counterexample->params;
    c["lhs_label"] = r.counterexample->lhs_label;
    c["lhs"] = r.counterexample->lhs;
    c["rhs_label"] = r.counterexample->rhs_label;
    c["rhs"] = r.counterexample->rhs;
    d["counterexample"] = c;
  } else {
    d["counterexample"] = py::none();
  }
  return d;
}

IntPolynomial from_py(const std::vector<py::int_>& coeffs) {
  std::vector<BigInt> c;
  c.reserve(coeffs.size());
  for (const auto& v : coeffs) c.emplace_back(py::str(v).cast<std::string>());
  return IntPolynomial(std::move(c));
}

template <class Stream>
std::vector<Word> drain(Stream stream) {
  std::vector<Word> out;
  while (auto v = stream.next()) out.emplace_back(v->begin(), v->end());
  return out;
}

template <class F>
auto release(F f) {
  py::gil_scoped_release nogil;
  return f();
}

}  // namespace

PYBIND11_MODULE(_stirlab, m) {
  m.doc() = "Exact 1/k-Eulerian polynomials, k-Stirling permutations and their statistics";

  // Polynomials come back as coefficient lists in ascending degree.
  m.def("dist_A_recurrence", [](unsigned n, unsigned k) { return to_py(dist_A_recurrence(n, k)); }, py::arg("n"), py::arg("k"));
  m.def("dist_A_exc_cyc", [](unsigned n, unsigned k, unsigned jobs) { return to_py(release([&] { return dist_A_exc_cyc(n, k, jobs); })); },
        py::arg("n"), py::arg("k"), py::arg("jobs") = 0);
  m.def("dist_A_invseq", [](unsigned n, unsigned k, unsigned jobs) { return to_py(release([&] { return dist_A_invseq(n, k, jobs); })); },
        py::arg("n"), py::arg("k"), py::arg("jobs") = 0);
  m.def("dist_A_ap", [](unsigned n, unsigned k, unsigned jobs) { return to_py(release([&] { return dist_A_ap(n, k, jobs); })); },
        py::arg("n"), py::arg("k"), py::arg("jobs") = 0);
  m.def("dist_B_recurrence", [](unsigned n, unsigned k) { return to_py(dist_B_recurrence(n, k)); }, py::arg("n"), py::arg("k"));
  m.def("dist_B_ap0", [](unsigned n, unsigned k, unsigned jobs) { return to_py(release([&] { return dist_B_ap0(n, k, jobs); })); },
        py::arg("n"), py::arg("k"), py::arg("jobs") = 0);
  m.def("dist_A_bivariate", [](unsigned n, unsigned jobs) { return to_py(release([&] { return dist_A_bivariate(n, jobs); })); },
        py::arg("n"), py::arg("jobs") = 0);
  m.def("stirling_first_row", [](unsigned n) { return to_py(stirling_first_row(n)); }, py::arg("n"));
  m.def("dist_P_asc", [](unsigned n, unsigned jobs) { return to_py(release([&] { return dist_P_asc(n, jobs); })); },
        py::arg("n"), py::arg("jobs") = 0);
  m.def("dist_A2_ipk", [](unsigned n, unsigned jobs) { return to_py(release([&] { return dist_A2_ipk(n, jobs); })); },
        py::arg("n"), py::arg("jobs") = 0);
  m.def("dist_A2_lpk", [](unsigned n, unsigned jobs) { return to_py(release([&] { return dist_A2_lpk(n, jobs); })); },
        py::arg("n"), py::arg("jobs") = 0);
  m.def("C_from_def", [](unsigned n) { return to_py(C_from_def(n)); }, py::arg("n"));
  m.def("dist_C_run", [](unsigned n, unsigned jobs) { return to_py(release([&] { return dist_C_run(n, jobs); })); },
        py::arg("n"), py::arg("jobs") = 0);
  m.def("rising_product", [](unsigned n, unsigned k) { return to_py(rising_product(n, k)); }, py::arg("n"), py::arg("k"));

  m.def("exact_div", [](const std::vector<py::int_>& p, const std::vector<py::int_>& d) { return to_py(exact_div(from_py(p), from_py(d))); },
        py::arg("p"), py::arg("d"));
  m.def("reverse", [](const std::vector<py::int_>& p, std::size_t n) { return to_py(reverse(from_py(p), n)); }, py::arg("p"), py::arg("n"));

  m.def("enum_permutations", [](unsigned n) { return drain(PermutationStream(n)); }, py::arg("n"));
  m.def("enum_inversion_sequences", [](unsigned n, unsigned k) { return drain(InversionSequenceStream(n, k)); }, py::arg("n"), py::arg("k"));
  m.def("enum_k_stirling", [](unsigned n, unsigned k) { return drain(KStirlingStream(n, k)); }, py::arg("n"), py::arg("k"));
  m.def("is_k_stirling", [](const Word& w, unsigned n, unsigned k) { return is_k_stirling(w, n, k); }, py::arg("word"), py::arg("n"), py::arg("k"));

  m.def("phi", [](const Word& w) {
    const unsigned n = static_cast<unsigned>(w.size() / 2);
    const Permutation p = phi(KStirlingWord(w, n, 2));
    return Word(p.values().begin(), p.values().end());
  }, py::arg("word"));
  m.def("phi_inverse", [](const Word& pi) -> std::optional<Word> {
    auto sigma = phi_inverse(Permutation(pi));
    if (!sigma) return std::nullopt;
    return Word(sigma->letters().begin(), sigma->letters().end());
  }, py::arg("pi"));

  m.def("asc_inv", [](const Word& e, unsigned k) { return asc_inv(e, k); }, py::arg("e"), py::arg("k"));
  m.def("ap", [](const Word& w, unsigned k) { return ap(w, k); }, py::arg("word"), py::arg("k"));
  m.def("ap0", [](const Word& w, unsigned k) { return ap0(w, k); }, py::arg("word"), py::arg("k"));
  m.def("exc", [](const Word& p) { return exc(p); }, py::arg("pi"));
  m.def("cyc", [](const Word& p) { return cyc(p); }, py::arg("pi"));
  m.def("asc_word", [](const Word& w) { return asc_word(w); }, py::arg("word"));
  m.def("plateau", [](const Word& w) { return plateau(w); }, py::arg("word"));
  m.def("ipk", [](const Word& p) { return ipk(p); }, py::arg("pi"));
  m.def("lpk", [](const Word& p) { return lpk(p); }, py::arg("pi"));
  m.def("runs", [](const Word& p) { return runs(p); }, py::arg("pi"));

  m.def("check_egf_A", [](unsigned k, unsigned order) { return to_py(check_egf_A(k, order)); }, py::arg("k"), py::arg("order"));
  m.def("check_egf_C", [](unsigned order) { return to_py(check_egf_C(order)); }, py::arg("order"));
  m.def("check_theorem1", [](unsigned jobs) { return to_py(release([&] { return check_theorem1(quick_bounds(), jobs); })); },
        py::arg("jobs") = 0);
  m.def("check_theorem3", [](unsigned n_max, unsigned jobs) { return to_py(release([&] { return check_theorem3(n_max, jobs); })); },
        py::arg("n_max"), py::arg("jobs") = 0);
  m.def("check_theorem4", [](unsigned n_max, unsigned jobs) { return to_py(release([&] { return check_theorem4(n_max, jobs); })); },
        py::arg("n_max"), py::arg("jobs") = 0);
  m.def("check_recurrence_axq", [](unsigned n_max) { return to_py(check_recurrence_axq(n_max)); }, py::arg("n_max"));

  py::register_exception<NonDivisibleError>(m, "NonDivisibleError", PyExc_ArithmeticError);
}
