#include <pybind11/pybind11.h>
#include <pybind11/complex.h>
#include <pybind11/stl.h>

#include <complex>

#include "cxrep/complex_literal.hpp"
#include "cxrep/errors.hpp"
#include "cxrep/experiment.hpp"
#include "cxrep/float_bits.hpp"
#include "cxrep/metrics.hpp"
#include "cxrep/pairing.hpp"
#include "cxrep/representation.hpp"

namespace py = pybind11;
using namespace cxrep;

namespace {

// 128-bit values cross the boundary as Python ints built from their halves.
py::int_ to_py(Nat128 v) {
  py::int_ hi(high64(v));
  py::int_ lo(low64(v));
  return py::reinterpret_steal<py::int_>(
      PyNumber_Or(py::reinterpret_steal<py::object>(PyNumber_Lshift(hi.ptr(), py::int_(64).ptr())).ptr(),
                  lo.ptr()));
}

Nat128 from_py(const py::int_& v) {
  if (PyObject_RichCompareBool(v.ptr(), py::int_(0).ptr(), Py_LT) == 1) {
    throw py::value_error("expected a non-negative integer");
  }
  const py::int_ mask(0xFFFFFFFFFFFFFFFFULL);
  const auto lo = py::reinterpret_steal<py::int_>(PyNumber_And(v.ptr(), mask.ptr()));
  const auto shifted = py::reinterpret_steal<py::int_>(PyNumber_Rshift(v.ptr(), py::int_(64).ptr()));
  if (PyObject_RichCompareBool(shifted.ptr(), mask.ptr(), Py_GT) == 1) {
    throw py::value_error("integer does not fit in 128 bits");
  }
  return make_nat128(shifted.cast<std::uint64_t>(), lo.cast<std::uint64_t>());
}

Complex64 from_complex(std::complex<double> c) { return {c.real(), c.imag()}; }
std::complex<double> to_complex(const Complex64& c) { return {c.re, c.im}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lossless single-natural representations of complex numbers";

  py::register_exception<MalformedCode>(m, "MalformedCode", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("to_bits", &to_bits, py::arg("value"));
  m.def("from_bits", &from_bits, py::arg("bits"));
  m.def("to_bitstring", &to_bitstring, py::arg("bits"));

  m.def("isqrt", [](const py::int_& n) { return to_py(isqrt(from_py(n))); }, py::arg("n"));
  m.def("cantor_pair", [](Nat64 p, Nat64 q) { return to_py(cantor_pair(p, q)); });
  m.def("cantor_unpair", [](const py::int_& c) { return cantor_unpair(from_py(c)); });
  m.def("szudzik_pair", [](Nat64 p, Nat64 q) { return to_py(szudzik_pair(p, q)); });
  m.def("szudzik_unpair", [](const py::int_& s) { return szudzik_unpair(from_py(s)); });
  m.def("interleave", [](Nat64 a, Nat64 b) { return to_py(interleave(a, b)); });
  m.def("deinterleave", [](const py::int_& z) { return deinterleave(from_py(z)); });

  m.def("to_polar", [](std::complex<double> c) {
    const PolarPoint p = to_polar(from_complex(c));
    return py::make_tuple(p.r, p.phi);
  });
  m.def("to_cartesian", [](double r, double phi) { return to_complex(to_cartesian({r, phi})); },
        py::arg("r"), py::arg("phi"));

  py::enum_<Method>(m, "Method")
      .value("CARTESIAN_INTERLEAVE", Method::CartesianInterleave)
      .value("POLAR_INTERLEAVE", Method::PolarInterleave)
      .value("POLAR_CANTOR", Method::PolarCantor)
      .value("POLAR_SZUDZIK", Method::PolarSzudzik)
      .def_property_readonly("cli_name", [](Method mth) { return std::string(method_name(mth)); });
  m.def("parse_method", [](const std::string& name) {
    const auto mth = parse_method(name);
    if (!mth) throw py::value_error("unknown method '" + name + "'");
    return *mth;
  });

  m.def("encode", [](std::complex<double> c, Method mth) { return to_py(encode(from_complex(c), mth).value); },
        py::arg("value"), py::arg("method"));
  m.def("decode", [](const py::int_& code, Method mth) { return to_complex(decode({mth, from_py(code)})); },
        py::arg("code"), py::arg("method"));
  m.def("normalize", [](const py::int_& code) { return normalize(from_py(code)); }, py::arg("code"));

  m.def("roundtrip_error", [](std::complex<double> a, std::complex<double> b) {
    return roundtrip_error(from_complex(a), from_complex(b));
  }, py::arg("original"), py::arg("decoded"));

  m.def("parse_complex", [](const std::string& s) { return to_complex(parse_complex(s)); });
  m.def("format_complex", [](std::complex<double> c) { return format_complex(from_complex(c)); });

  py::class_<ErrorStats>(m, "ErrorStats")
      .def(py::init<>())
      .def("add", &ErrorStats::add)
      .def("merge", &ErrorStats::merge)
      .def_property_readonly("count", &ErrorStats::count)
      .def_property_readonly("max_error", &ErrorStats::max_error)
      .def_property_readonly("sum_error", &ErrorStats::sum_error)
      .def_property_readonly("mean_error", &ErrorStats::mean_error);

  m.def("generate", [](std::uint64_t seed, std::uint64_t count, double bound) {
    SweepConfig cfg;
    cfg.seed = seed;
    cfg.sample_count = count;
    cfg.component_bound = bound;
    std::vector<std::complex<double>> out;
    for (const auto& c : generate(cfg)) out.push_back(to_complex(c));
    return out;
  }, py::arg("seed"), py::arg("count"), py::arg("bound") = SweepConfig{}.component_bound);

  m.def("run_sweep", [](std::uint64_t seed, std::uint64_t samples, std::vector<Method> methods,
                        unsigned shards, double bound) {
    SweepConfig cfg;
    cfg.seed = seed;
    cfg.sample_count = samples;
    if (!methods.empty()) cfg.methods = std::move(methods);
    cfg.shard_count = shards;
    cfg.component_bound = bound;
    std::map<Method, ErrorStats> stats;
    {
      py::gil_scoped_release release;
      stats = run_sweep(cfg);
    }
    return stats;
  }, py::arg("seed"), py::arg("samples"), py::arg("methods") = std::vector<Method>{},
     py::arg("shards") = 1, py::arg("bound") = SweepConfig{}.component_bound);

  m.def("trace", [](std::complex<double> c) { return trace(from_complex(c)); });
}
