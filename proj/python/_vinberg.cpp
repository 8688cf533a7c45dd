#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vinberg/certificates.hpp"
#include "vinberg/classify.hpp"
#include "vinberg/diagram.hpp"
#include "vinberg/error.hpp"
#include "vinberg/polygon.hpp"

namespace py = pybind11;
using namespace vinberg;

namespace {

// Python ints are unbounded, so vectors cross the boundary as decimal strings.
LatticeVector to_vector(const std::vector<py::int_>& xs) {
  std::vector<Integer> c;
  for (const auto& x : xs) c.emplace_back(std::string(py::str(py::handle(x))));
  return LatticeVector(std::move(c));
}

py::int_ to_int(const Integer& a) { return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(a.get_str().c_str(), nullptr, 10))); }

ClassifyOptions make_options(const std::string& max_height, std::size_t max_roots, const std::string& check_every) {
  ClassifyOptions o;
  o.budget.max_height = parse_rational(max_height);
  o.budget.max_roots = max_roots;
  if (check_every != "root" && check_every != "batch") throw Error(ErrorCode::Parse, "check_every must be root or batch");
  o.check = check_every == "batch" ? CheckFrequency::EveryBatch : CheckFrequency::EveryRoot;
  return o;
}

}  // namespace

PYBIND11_MODULE(_vinberg, m) {
  m.doc() = "Exact Vinberg algorithm for -p x0^2 + x1^2 + ... + xn^2";

  static py::exception<Error> error(m, "VinbergError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.attr("SCHEMA_VERSION") = kSchemaVersion;

  m.def("admissible_norms", [](long p, int n) {
    std::vector<py::int_> out;
    for (const auto& a : admissible_root_norms(QuadraticForm(p, n))) out.push_back(to_int(a));
    return out;
  }, py::arg("p"), py::arg("n"));

  m.def("norm", [](const std::vector<py::int_>& v, long p) {
    const auto x = to_vector(v);
    return to_int(vinberg::norm(x, QuadraticForm(p, static_cast<int>(x.size()) - 1)));
  }, py::arg("vector"), py::arg("p"));

  m.def("is_root", [](const std::vector<py::int_>& v, long p) {
    const auto x = to_vector(v);
    return vinberg::is_root(x, QuadraticForm(p, static_cast<int>(x.size()) - 1));
  }, py::arg("vector"), py::arg("p"));

  m.def("classify_json", [](long p, int n, const std::string& max_height, std::size_t max_roots,
                            const std::string& check_every) {
    const auto opts = make_options(max_height, max_roots, check_every);
    py::gil_scoped_release release;
    return classify(p, n, opts).to_json().dump();
  }, py::arg("p"), py::arg("n"), py::arg("max_height") = "400", py::arg("max_roots") = 64,
     py::arg("check_every") = "root");

  m.def("resume_json", [](const std::string& state, const std::string& max_height, std::size_t max_roots,
                          const std::string& check_every) {
    const auto opts = make_options(max_height, max_roots, check_every);
    auto s = state_from_json(Json::parse(state));
    py::gil_scoped_release release;
    return classify_resume(std::move(s), opts).to_json().dump();
  }, py::arg("state"), py::arg("max_height") = "400", py::arg("max_roots") = 64, py::arg("check_every") = "root");

  m.def("family_json", [](long p, int n_max, unsigned jobs, const std::string& max_height, std::size_t max_roots) {
    const auto opts = make_options(max_height, max_roots, "root");
    py::gil_scoped_release release;
    Json all = Json::array();
    for (const auto& r : classify_family(p, n_max, opts, jobs)) all.push_back(r.to_json());
    return all.dump();
  }, py::arg("p"), py::arg("n_max"), py::arg("jobs") = 1, py::arg("max_height") = "400", py::arg("max_roots") = 64);

  m.def("table", [](long p, int n, const std::string& format) {
    return emit_table(classify(p, n), parse_table_format(format));
  }, py::arg("p"), py::arg("n"), py::arg("format") = "text");

  m.def("diagram", [](long p, int n, const std::string& format) {
    const auto r = classify(p, n);
    return render(build_diagram(r.state.roots(), r.form), parse_render_format(format));
  }, py::arg("p"), py::arg("n"), py::arg("format") = "dot");

  m.def("norm_angle_sequence", [](long p) {
    const auto r = classify(p, 2);
    const auto s = vinberg::norm_angle_sequence(r.state.roots(), r.form);
    return py::make_tuple(s.symbol(), s.rotation, s.rotation_preserves_form);
  }, py::arg("p"));

  m.def("check_certificate_json", [](const std::string& cert) {
    const auto v = check_certificate(Json::parse(cert));
    return py::make_tuple(v.ok, v.failures);
  }, py::arg("certificate"));
}
