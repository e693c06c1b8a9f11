#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "detgb/betti.hpp"
#include "detgb/budget.hpp"
#include "detgb/detideal.hpp"
#include "detgb/eliminate.hpp"
#include "detgb/errors.hpp"
#include "detgb/groebner.hpp"
#include "detgb/verify.hpp"

namespace py = pybind11;
using namespace detgb;

namespace {

py::object to_fraction(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  py::object as_int = py::module_::import("builtins").attr("int");
  return fraction(as_int(q.get_num().get_str()), as_int(q.get_den().get_str()));
}

std::vector<Polynomial> family_polys(const std::vector<FamilyMember>& f) { return polys(f); }

py::dict table_dict(const GradedBettiTable& t) {
  py::dict d;
  for (const auto& [key, r] : t.entries()) d[py::make_tuple(key.first, key.second)] = r;
  return d;
}

GradedBettiTable table_from(const py::dict& d) {
  GradedBettiTable t;
  for (auto item : d) {
    auto key = item.first.cast<std::pair<int, int>>();
    t.add(key.first, key.second, item.second.cast<std::int64_t>());
  }
  return t;
}

// pybind11 holders cannot point to const, so rings travel in a small handle.
struct Ring {
  RingPtr ptr;
};

}  // namespace

PYBIND11_MODULE(_detgb, m) {
  m.doc() = "Exact Groebner bases for the ideals I_1(XY) of generic, symmetric and (n+1) x n matrices.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ContextError>(m, "ContextError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_TimeoutError);

  py::class_<Ring>(m, "Ring")
      .def(py::init([](const std::string& shape, bool with_t) { return Ring{RingContext::make(MatrixShape::parse(shape), with_t)}; }),
           py::arg("shape"), py::arg("with_elim_var") = false)
      .def_property_readonly("shape", [](const Ring& r) { return r.ptr->shape().to_string(); })
      .def_property_readonly("num_vars", [](const Ring& r) { return r.ptr->num_vars(); })
      .def_property_readonly("variables", [](const Ring& r) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < r.ptr->num_vars(); ++i) names.push_back(r.ptr->variable_name(i));
        return names;
      })
      .def("parse", [](const Ring& r, const std::string& text) { return parse_polynomial(text, r.ptr); })
      .def("__repr__", [](const Ring& r) { return "Ring('" + r.ptr->shape().to_string() + "')"; });

  py::class_<MonomialOrder>(m, "MonomialOrder")
      .def(py::init([](const Ring& r, const std::string& name) { return MonomialOrder::by_name(name, r.ptr); }),
           py::arg("ring"), py::arg("name"))
      .def_property_readonly("name", &MonomialOrder::name)
      .def("__repr__", [](const MonomialOrder& o) { return "MonomialOrder('" + o.name() + "')"; });

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init([](const Ring& r, const std::string& text) { return parse_polynomial(text, r.ptr); }))
      .def_property_readonly("ring", [](const Polynomial& p) { return Ring{p.ring()}; })
      .def_property_readonly("degree", &Polynomial::degree)
      .def("is_zero", &Polynomial::is_zero)
      .def("terms", [](const Polynomial& p) {
        py::list out;
        for (const auto& t : p.terms()) {
          std::vector<unsigned> exps;
          for (std::size_t v = 0; v < p.ring()->num_vars(); ++v) exps.push_back(t.mono[v]);
          out.append(py::make_tuple(to_fraction(t.coeff), exps));
        }
        return out;
      })
      .def("to_string", py::overload_cast<const MonomialOrder&>(&Polynomial::to_string, py::const_))
      .def("leading_term", [](const Polynomial& p, const MonomialOrder& o) {
        return Polynomial::monomial(p.ring(), leading_term(p, o).coeff, leading_term(p, o).mono);
      })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", py::overload_cast<>(&Polynomial::to_string, py::const_))
      .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + p.to_string() + "')"; });

  py::class_<Ideal>(m, "Ideal")
      .def(py::init([](const Ring& r, std::vector<Polynomial> gens) { return Ideal(r.ptr, std::move(gens)); }))
      .def_property_readonly("generators", [](const Ideal& i) {
        return std::vector<Polynomial>(i.generators().begin(), i.generators().end());
      })
      .def("groebner_basis", &Ideal::groebner_basis)
      .def("contains", [](const Ideal& i, const Polynomial& f, const MonomialOrder& o) { return ideal_member(f, i, o); })
      .def("equals", [](const Ideal& a, const Ideal& b, const MonomialOrder& o) { return ideal_equal(a, b, o); });

  m.def("reduced_gb", [](const std::vector<Polynomial>& gens, const MonomialOrder& o) { return reduced_gb(gens, o); });
  m.def("is_groebner", [](const std::vector<Polynomial>& gens, const MonomialOrder& o) { return is_groebner(gens, o); });
  m.def("is_reduced", [](const std::vector<Polynomial>& gens, const MonomialOrder& o) { return is_reduced(gens, o); });
  m.def("s_polynomial", &s_polynomial);
  m.def("reduce", [](const Polynomial& f, const std::vector<Polynomial>& divisors, const MonomialOrder& o) {
    auto d = reduce(f, divisors, o);
    return py::make_tuple(d.quotients, d.remainder);
  });
  m.def("intersect", &intersect);
  m.def("colon", &colon);

  m.def("generators", [](const Ring& r) { return generators(r.ptr); });
  m.def("determinant", [](const Ring& r) { return determinant(r.ptr); });
  m.def("minor", [](const Ring& r, const std::vector<int>& rows, const std::vector<int>& cols) { return minor(r.ptr, rows, cols); });
  m.def("family_S", [](const Ring& r, int k) { return family_polys(family_S(r.ptr, k)); });
  m.def("family_S_tilde", [](const Ring& r, int k) { return family_polys(family_S_tilde(r.ptr, k)); });
  m.def("family_G", [](const Ring& r, int k) { return family_polys(family_G(r.ptr, k)); });
  m.def("syzygy_phi", [](const Ring& r, int j, const std::string& a) { return syzygy_phi(r.ptr, j, RowTuple::parse(a)); });

  m.def("koszul_table", [](int g, int d) { return table_dict(koszul_table(g, d)); });
  m.def("northcott_table", [](int n) { return table_dict(northcott_table(n)); });
  m.def("betti_J_graded", [](int n) { return table_dict(betti_J_graded(n)); });
  m.def("betti_J_totals", &betti_J_totals);
  m.def("predicted_table", [](const std::string& s) { return table_dict(predicted_table(MatrixShape::parse(s))); });
  m.def("table_numerator", [](const py::dict& t) { return table_numerator(table_from(t), 0).coeffs; });
  m.def("hilbert_numerator_of", [](const std::vector<Polynomial>& gens, const MonomialOrder& o) {
    if (gens.empty()) throw DomainError("need at least one generator");
    std::vector<Monomial> leads;
    for (const auto& g : reduced_gb(gens, o)) leads.push_back(leading_monomial(g, o));
    return hilbert_numerator(leads, gens.front().ring()->num_vars()).coeffs;
  });
  m.def("cm_report", [](const std::string& s) {
    auto r = cm_report(MatrixShape::parse(s));
    py::dict d;
    d["projdim"] = r.projdim;
    d["depth"] = r.depth;
    d["dim"] = r.dim;
    d["numvars"] = r.numvars;
    d["is_cm"] = r.is_cm;
    d["hilbert_consistent"] = r.hilbert_consistent;
    return d;
  });

  m.def(
      "run_suite",
      [](const std::string& suite, const std::string& shape) {
        SuiteReport rep;
        {
          py::gil_scoped_release release;
          rep = run_suite(parse_suite(suite), MatrixShape::parse(shape));
        }
        py::list checks;
        for (const auto& c : rep.checks) {
          py::dict d;
          d["name"] = c.name;
          d["status"] = c.passed ? "pass" : "fail";
          d["witness"] = c.witness;
          d["millis"] = c.millis;
          checks.append(d);
        }
        py::dict out;
        out["suite"] = rep.suite;
        out["shape"] = rep.shape.to_string();
        out["n"] = rep.shape.n();
        out["checks"] = checks;
        return out;
      },
      py::arg("suite"), py::arg("shape"));
}
