#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "iwasawa/artin.hpp"
#include "iwasawa/cli.hpp"
#include "iwasawa/series.hpp"

namespace py = pybind11;
using namespace iwasawa;

namespace {

Integer to_integer(const py::int_& v) { return Integer(py::str(v).cast<std::string>()); }

py::int_ to_py(const Integer& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

std::vector<Integer> to_integers(const std::vector<py::int_>& vs) {
  std::vector<Integer> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(to_integer(v));
  return out;
}

py::list coords_of(const PadicElement& x) {
  py::list out;
  for (const auto& c : x.coordinates()) out.append(to_py(c));
  return out;
}

py::list coeffs_of(std::span<const PadicElement> poly) {
  py::list out;
  for (const auto& c : poly) out.append(c.is_zero() ? py::object(py::int_(0)) : py::object(coords_of(c)));
  return out;
}

// pybind11 holders cannot be shared_ptr<const T>.
using Ctx = std::shared_ptr<PadicContext>;
Ctx mut(const ContextPtr& c) { return std::const_pointer_cast<PadicContext>(c); }

py::object order_of(const QuotientOrder& o) {
  if (o.infinite) return py::none();
  return py::int_(o.q_exponent);
}

}  // namespace

PYBIND11_MODULE(_iwasawa, m) {
  m.doc() = "p-adic arithmetic and Iwasawa algebra computations";

  static py::exception<Error> error(m, "IwasawaError");
  py::register_exception_translator([](std::exception_ptr ep) {
    try {
      if (ep) std::rethrow_exception(ep);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<PadicContext, Ctx>(m, "Context")
      .def(py::init([](long p, int degree, int precision, std::optional<std::vector<py::int_>> modulus) {
             if (modulus) return mut(PadicContext::create(p, degree, precision, to_integers(*modulus)));
             return mut(PadicContext::create(p, degree, precision));
           }),
           py::arg("p"), py::arg("f") = 1, py::arg("N"), py::arg("modulus") = py::none())
      .def_property_readonly("p", &PadicContext::p)
      .def_property_readonly("f", &PadicContext::degree)
      .def_property_readonly("N", &PadicContext::precision)
      .def_property_readonly("q", [](const PadicContext& c) { return to_py(c.q()); })
      .def_property_readonly("modulus", [](const PadicContext& c) {
        py::list out;
        for (const auto& v : c.modulus()) out.append(to_py(v));
        return out;
      })
      .def("__repr__", [](const PadicContext& c) {
        return "Context(p=" + std::to_string(c.p()) + ", f=" + std::to_string(c.degree()) +
               ", N=" + std::to_string(c.precision()) + ")";
      });

  py::class_<PadicElement>(m, "Element")
      .def(py::init([](Ctx ctx, const py::int_& v) { return PadicElement::from_integer(ctx, to_integer(v)); }))
      .def(py::init([](Ctx ctx, const std::vector<py::int_>& coords) {
        return PadicElement::from_coordinates(ctx, to_integers(coords));
      }))
      .def_property_readonly("context", [](const PadicElement& x) { return mut(x.context()); })
      .def_property_readonly("coordinates", &coords_of)
      .def("valuation", &PadicElement::valuation)
      .def("is_zero", &PadicElement::is_zero)
      .def("is_unit", &PadicElement::is_unit)
      .def("inverse", &PadicElement::inverse)
      .def("__pow__", [](const PadicElement& x, const py::int_& e) { return x.pow(to_integer(e)); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__repr__", &PadicElement::to_string);

  py::class_<IwasawaSeries>(m, "Series")
      .def(py::init([](Ctx ctx, int D, const std::vector<py::int_>& coeffs) {
             return IwasawaSeries::from_integers(ctx, D, to_integers(coeffs));
           }),
           py::arg("ctx"), py::arg("D"), py::arg("coeffs"))
      .def_property_readonly("D", &IwasawaSeries::degree_bound)
      .def_property_readonly("exact", &IwasawaSeries::exact)
      .def_property_readonly("coefficients", [](const IwasawaSeries& s) { return coeffs_of(s.coefficients()); })
      .def("__getitem__", [](const IwasawaSeries& s, int i) {
        if (i < 0 || i > s.degree_bound()) throw py::index_error();
        return s[i];
      })
      .def("is_zero", &IwasawaSeries::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self);

  m.def("teichmuller", &teichmuller);
  m.def("iwasawa_log", &iwasawa_log);
  m.def("nth_root", &nth_root, py::arg("c"), py::arg("e"));

  m.def("weierstrass_prepare", [](const IwasawaSeries& f) {
    const auto w = weierstrass_prepare(f);
    py::dict d;
    d["mu"] = w.mu;
    d["lambda"] = w.lambda();
    d["distinguished"] = coeffs_of(w.distinguished);
    d["unit"] = w.unit;
    d["precision"] = w.precision;
    return d;
  });
  m.def("weierstrass_divide", [](const IwasawaSeries& g, const IwasawaSeries& f) {
    const auto w = weierstrass_prepare(f);
    const auto qr = weierstrass_divide(g, w.distinguished);
    return py::make_tuple(qr.quotient, coeffs_of(qr.remainder));
  });
  m.def("mu_lambda", &mu_lambda);
  m.def("omega", [](int n, Ctx ctx, int D) { return omega(n, ctx, D); }, py::arg("n"), py::arg("ctx"), py::arg("D"));
  m.def("evaluate", &evaluate);
  m.def("divides", &divides, py::arg("f"), py::arg("g"), py::arg("invert_p") = false);
  m.def("coprime_to_cyclotomic", &coprime_to_cyclotomic);
  m.def("constant_quotient_order", [](const IwasawaSeries& f) { return order_of(constant_quotient_order(f)); },
        "Exponent of #(O/f(0)) in base q, or None when infinite.");
  m.def("order_of_vanishing_at_zero", &order_of_vanishing_at_zero);

  m.def("hecke_roots", [](const PadicElement& a_p, const PadicElement& eps_p) {
    const auto r = hecke_roots(a_p, eps_p);
    return py::make_tuple(r.alpha ? py::cast(*r.alpha) : py::none(), r.beta ? py::cast(*r.beta) : py::none());
  });

  m.def(
      "run",
      [](const std::string& command, const std::string& input, std::optional<int> precision,
         std::optional<int> tdegree, std::optional<std::uint64_t> seed) {
        cli::Options opts{precision, tdegree, seed};
        const auto r = cli::run(command, input, opts);
        return py::make_tuple(r.exit_code, r.report);
      },
      py::arg("command"), py::arg("input"), py::arg("precision") = py::none(), py::arg("tdegree") = py::none(),
      py::arg("seed") = py::none(), "Runs a CLI command on JSON text; returns (exit_code, report).");
  m.def("commands", [] {
    std::vector<std::string> names;
    for (const auto& c : cli::commands()) names.push_back(c.name);
    return names;
  });
}
