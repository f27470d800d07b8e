#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qtscreen/errors.hpp"
#include "qtscreen/io.hpp"
#include "qtscreen/verify.hpp"

namespace py = pybind11;
using namespace qtscreen;

namespace {

std::string eval_text(const std::string& expr, const std::string& ring, const std::string& cartan) {
  const CartanData cd = parse_cartan(cartan);
  switch (parse_ring(ring)) {
    case Ring::hat:
      return render(parse_hat(cd, expr));
    case Ring::y:
      return render(parse_y(cd, expr));
    case Ring::classical:
      return render(parse_classical(cd, expr));
  }
  return {};
}

std::string eval_json(const std::string& expr, const std::string& ring, const std::string& cartan) {
  const CartanData cd = parse_cartan(cartan);
  switch (parse_ring(ring)) {
    case Ring::hat:
      return to_json(parse_hat(cd, expr)).dump();
    case Ring::y:
      return to_json(parse_y(cd, expr)).dump();
    case Ring::classical:
      return to_json(parse_classical(cd, expr)).dump();
  }
  return {};
}

std::string screen_text(const std::string& expr, int i, const std::string& kind_name, const std::string& cartan) {
  const CartanData cd = parse_cartan(cartan);
  const QuotientKind kind = parse_quotient_kind(kind_name);
  switch (kind) {
    case QuotientKind::hatF:
      return render(screen(cd, kind, i, parse_hat(cd, expr)));
    case QuotientKind::yF:
    case QuotientKind::yFprime:
      return render(screen(cd, kind, i, parse_y(cd, expr)));
    case QuotientKind::classicalF:
      return render(screen(cd, kind, i, parse_classical(cd, expr)));
  }
  return {};
}

std::string epoly_text(const std::string& monomial, int i, const std::string& flavor_name, const std::string& cartan) {
  const CartanData cd = parse_cartan(cartan);
  switch (parse_flavor(flavor_name)) {
    case Flavor::hat:
      return render(e_hat(cd, i, parse_hat_monomial(cd, monomial)));
    case Flavor::y:
      return render(e0(cd, i, parse_y_monomial(cd, monomial)));
    case Flavor::yprime:
      return render(e0_prime(cd, i, parse_y_monomial(cd, monomial)));
    case Flavor::classical:
      return render(e_classical(cd, i, parse_y_monomial(cd, monomial)));
  }
  return {};
}

template <class Element>
std::string kernel_report(const CartanData& cd, int i, Flavor flavor, QuotientKind kind, const Element& x,
                          const Decomposition<Element>& dec) {
  const auto nf_out = screen(cd, kind, i, x);
  Json j = decomposition_to_json(dec);
  return Json{{"member", dec.remainder.is_zero()},
              {"dominant_part", j["dominant"]},
              {"remainder", render(dec.remainder)},
              {"screen_nf", render(nf_out)},
              {"routes_agree", dec.remainder.is_zero() == nf_out.is_zero()},
              {"flavor", to_string(flavor)}}
      .dump();
}

std::string kernel_json(const std::string& expr, int i, const std::string& flavor_name, const std::string& cartan) {
  const CartanData cd = parse_cartan(cartan);
  const Flavor flavor = parse_flavor(flavor_name);
  switch (flavor) {
    case Flavor::hat: {
      const auto x = parse_hat(cd, expr);
      return kernel_report(cd, i, flavor, QuotientKind::hatF, x, decompose(cd, i, x));
    }
    case Flavor::y:
    case Flavor::yprime: {
      const auto x = parse_y(cd, expr);
      const auto kind = flavor == Flavor::y ? QuotientKind::yF : QuotientKind::yFprime;
      return kernel_report(cd, i, flavor, kind, x, decompose(cd, i, x, flavor));
    }
    case Flavor::classical: {
      const auto x = parse_classical(cd, expr);
      return kernel_report(cd, i, flavor, QuotientKind::classicalF, x, decompose(cd, i, x));
    }
  }
  return {};
}

bool in_kt_text(const std::string& expr, const std::string& flavor, const std::string& cartan) {
  const CartanData cd = parse_cartan(cartan);
  return in_kt(cd, parse_y(cd, expr), parse_flavor(flavor));
}

std::string verify_json(const std::string& suite, const std::string& cartan, std::uint64_t seed, int samples,
                        const std::string& window) {
  RunConfig config;
  config.cartan = cartan;
  config.seed = seed;
  config.samples = samples;
  config.window = parse_window(window);
  return run_suite(suite, config).to_json().dump();
}

std::map<int, std::int64_t> tpoly_dict(const TPoly& p) {
  std::map<int, std::int64_t> out;
  for (auto [e, c] : p.terms()) out[e] = c;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Screening operators for deformed q,t-character rings";

  py::register_exception<WindowError>(m, "WindowError", PyExc_ValueError);

  py::class_<CartanData>(m, "Cartan")
      .def(py::init([](const std::string& spec) { return parse_cartan(spec); }), py::arg("spec"))
      .def_property_readonly("rank", &CartanData::rank)
      .def_property_readonly("matrix", &CartanData::matrix)
      .def_property_readonly("symmetrizers", &CartanData::symmetrizers)
      .def_property_readonly("is_ade", &CartanData::is_ade)
      .def(
          "a_inverse",
          [](const CartanData& cd, int i, int k) { return render(a_inverse_monomial(cd, i, k)); }, py::arg("i"),
          py::arg("k"))
      .def("__repr__", [](const CartanData& cd) { return "<Cartan rank " + std::to_string(cd.rank()) + ">"; });

  m.def("gauss_binom", [](int n, int r) { return tpoly_dict(gauss_binom(n, r)); }, py::arg("n"), py::arg("r"));
  m.def("t_integer", [](int u) { return tpoly_dict(t_integer(u)); }, py::arg("u"));

  m.def("eval", &eval_text, py::arg("expr"), py::arg("ring") = "hat", py::arg("cartan") = "A2");
  m.def("eval_json", &eval_json, py::arg("expr"), py::arg("ring") = "hat", py::arg("cartan") = "A2");
  m.def("screen", &screen_text, py::arg("expr"), py::arg("i"), py::arg("kind") = "hatF", py::arg("cartan") = "A2");
  m.def("epoly", &epoly_text, py::arg("monomial"), py::arg("i"), py::arg("flavor") = "hat", py::arg("cartan") = "A2");
  m.def("kernel_json", &kernel_json, py::arg("expr"), py::arg("i"), py::arg("flavor") = "hat", py::arg("cartan") = "A2");
  m.def("in_kt", &in_kt_text, py::arg("expr"), py::arg("flavor") = "y", py::arg("cartan") = "A2");
  m.def("verify_json", &verify_json, py::arg("suite"), py::arg("cartan") = "A2", py::arg("seed") = 1,
        py::arg("samples") = 200, py::arg("window") = "-6:6");
  m.def("suite_names", &suite_names);
}
