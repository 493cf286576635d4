#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quatseq/analysis.hpp"
#include "quatseq/cyclotomy.hpp"
#include "quatseq/error.hpp"
#include "quatseq/galois.hpp"
#include "quatseq/lc_oracle.hpp"
#include "quatseq/numth.hpp"
#include "quatseq/selftest.hpp"
#include "quatseq/spectra.hpp"

namespace py = pybind11;
using namespace quatseq;

namespace {

std::vector<int> class_list(const CyclotomicSystem& sys, int i) {
  auto c = sys.cls(i);
  return std::vector<int>(c.begin(), c.end());
}

QuatSequence to_sequence(const std::vector<int>& values) {
  std::vector<std::uint8_t> v;
  v.reserve(values.size());
  for (int x : values) {
    if (x < 0 || x > 3) throw Error(ErrorCode::InvalidArgument, "sequence value outside Z4");
    v.push_back(static_cast<std::uint8_t>(x));
  }
  return QuatSequence(std::move(v));
}

std::vector<int> seq_list(const QuatSequence& s) {
  return std::vector<int>(s.values().begin(), s.values().end());
}

std::vector<std::vector<int>> spectrum_list(const Spectrum& s) {
  std::vector<std::vector<int>> out;
  for (const auto& c : s.coeffs) out.push_back(to_list(c));
  return out;
}

GrElement element_of(const RingPtr& ring, const std::vector<int>& coeffs) {
  std::vector<std::uint8_t> v;
  for (int c : coeffs) v.push_back(static_cast<std::uint8_t>(((c % 4) + 4) % 4));
  return ring->element(v);
}

}  // namespace

PYBIND11_MODULE(quatseq, m) {
  m.doc() = "Quaternary generalized-cyclotomic sequences over Z4";

  static PyObject* error_type = nullptr;
  error_type = PyErr_NewException("quatseq.QuatseqError", PyExc_ValueError, nullptr);
  m.attr("QuatseqError") = py::handle(error_type);
  py::register_exception_translator([](std::exception_ptr ptr) {
    try {
      if (ptr) std::rethrow_exception(ptr);
    } catch (const Error& e) {
      PyErr_SetString(error_type, (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def("mul_order", &mul_order, py::arg("a"), py::arg("m"));
  m.def("common_primitive_root", &common_primitive_root, py::arg("p"), py::arg("q"));
  m.def("crt_pair", &crt_pair, py::arg("a"), py::arg("b"), py::arg("p"), py::arg("q"));
  m.def(
      "validate_params",
      [](std::uint64_t p, std::uint64_t q) { return std::string(to_string(validate_params(p, q))); },
      py::arg("p"), py::arg("q"));

  py::class_<CyclotomicSystem>(m, "CyclotomicSystem")
      .def(py::init([](std::uint64_t p, std::uint64_t q, std::optional<std::uint64_t> g) {
             return CyclotomicSystem::build(p, q, g);
           }),
           py::arg("p"), py::arg("q"), py::arg("g") = py::none())
      .def_property_readonly("p", &CyclotomicSystem::p)
      .def_property_readonly("q", &CyclotomicSystem::q)
      .def_property_readonly("g", &CyclotomicSystem::g)
      .def_property_readonly("h", &CyclotomicSystem::h)
      .def_property_readonly("e", &CyclotomicSystem::e)
      .def_property_readonly("ell", &CyclotomicSystem::ell)
      .def_property_readonly("ell_p", &CyclotomicSystem::ell_p)
      .def_property_readonly("ell_q", &CyclotomicSystem::ell_q)
      .def_property_readonly("case",
                             [](const CyclotomicSystem& s) { return std::string(to_string(s.case_tag())); })
      .def("cls", &class_list, py::arg("i"))
      .def("class_of", [](const CyclotomicSystem& s, std::uint64_t u) { return to_string(s.class_of(u)); })
      .def("class_shift", &CyclotomicSystem::class_shift)
      .def("two_class", &CyclotomicSystem::two_class)
      .def("sequence", [](const CyclotomicSystem& s) { return seq_list(build_sequence(s)); });

  py::class_<GaloisRing, std::shared_ptr<GaloisRing>>(m, "GaloisRing")
      .def_property_readonly("degree", &GaloisRing::degree)
      .def_property_readonly("modulus", [](const GaloisRing& r) { return to_list(r.modulus()); });

  py::class_<GrElement>(m, "GrElement")
      .def_property_readonly("coeffs", [](const GrElement& a) { return to_list(a); })
      .def("__add__", [](const GrElement& a, const GrElement& b) { return a + b; })
      .def("__sub__", [](const GrElement& a, const GrElement& b) { return a - b; })
      .def("__mul__", [](const GrElement& a, const GrElement& b) { return a * b; })
      .def("__pow__", [](const GrElement& a, std::uint64_t n) { return pow(a, n); })
      .def("__eq__", [](const GrElement& a, const GrElement& b) { return a == b; })
      .def("__repr__", [](const GrElement& a) {
        std::string s = "GrElement(";
        for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
          s += (i ? "," : "") + std::to_string(a.coeffs()[i]);
        }
        return s + ")";
      });

  auto const_ring = [](const RingPtr& r) { return std::const_pointer_cast<GaloisRing>(r); };
  m.def("standard_ring", [=](int r) { return const_ring(standard_ring(r)); }, py::arg("r"));
  m.def(
      "ring_from_modulus", [=](std::vector<int> f) {
        Z4Poly poly(f.begin(), f.end());
        return const_ring(GaloisRing::create(poly));
      },
      py::arg("modulus"));
  m.def("element", [](const std::shared_ptr<GaloisRing>& ring, const std::vector<int>& coeffs) {
    return element_of(ring, coeffs);
  });
  m.def("primitive_nth_root",
        [](const std::shared_ptr<GaloisRing>& ring, std::uint64_t n) { return primitive_nth_root(*ring, n); });
  m.def("frobenius", &frobenius);
  m.def("trace", &trace, py::arg("a"), py::arg("s"), py::arg("r"));

  m.def(
      "dft",
      [](const std::vector<int>& seq, const GrElement& beta) { return spectrum_list(dft(to_sequence(seq), beta)); },
      py::arg("seq"), py::arg("beta"));
  m.def(
      "linear_complexity_spectrum",
      [](const std::vector<int>& seq, const GrElement& beta) {
        return linear_complexity_from_spectrum(dft(to_sequence(seq), beta));
      },
      py::arg("seq"), py::arg("beta"));
  m.def("ms_closed_form", [](const CyclotomicSystem& s, const GrElement& beta) {
    return spectrum_list(ms_closed_form(s, beta));
  });
  m.def("lc_closed_form", [](const CyclotomicSystem& s, const GrElement& beta) {
    auto r = lc_closed_form(s, beta);
    py::dict d;
    d["rho"] = to_list(r.rho);
    d["zero_branch"] = r.zero_branch ? py::cast(*r.zero_branch) : py::none();
    d["lc_predicted"] = r.lc_predicted;
    d["case"] = std::string(to_string(r.case_tag));
    return d;
  });
  m.def("trace_representation", &trace_representation, py::arg("sys"), py::arg("beta"), py::arg("u"));
  m.def(
      "minimal_connection",
      [](const std::vector<int>& seq) {
        auto mc = minimal_connection(to_sequence(seq));
        return py::make_tuple(mc.length, to_list(mc.poly.coeffs()));
      },
      py::arg("seq"));

  m.def(
      "analyze",
      [](std::uint64_t p, std::uint64_t q, bool oracle, bool verify_trace, bool emit_spectrum,
         std::optional<std::uint64_t> g) {
        AnalysisOptions o;
        o.oracle = oracle;
        o.verify_trace = verify_trace;
        o.emit_spectrum = emit_spectrum;
        o.g = g;
        return to_json(analyze(p, q, o)).dump();
      },
      py::arg("p"), py::arg("q"), py::arg("oracle") = false, py::arg("verify_trace") = false,
      py::arg("emit_spectrum") = false, py::arg("g") = py::none(),
      "Runs the full pipeline and returns the JSON report text.");
  m.def(
      "selftest",
      [](std::uint64_t seed) {
        SelftestOptions o;
        o.seed = seed;
        return run_selftest(o).passed();
      },
      py::arg("seed") = 42);
}
