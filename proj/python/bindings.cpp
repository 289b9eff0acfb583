#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skewfq/error.hpp"
#include "skewfq/factor.hpp"
#include "skewfq/parse.hpp"
#include "skewfq/plt.hpp"
#include "skewfq/verify.hpp"

namespace py = pybind11;
using namespace skewfq;

namespace {

template <class T>
std::vector<std::string> strs(const std::vector<T>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

FqElem field_elem(const FrobeniusTwist& tw, const py::object& x) {
  if (py::isinstance<FqElem>(x)) return x.cast<FqElem>();
  if (py::isinstance<py::int_>(x)) return tw.field->constant(x.cast<std::int64_t>());
  return parse_field_elem(x.cast<std::string>(), tw.field);
}

TruncElem trunc_elem(const DerivationTwist& tw, const py::object& x) {
  if (py::isinstance<TruncElem>(x)) return x.cast<TruncElem>();
  if (py::isinstance<py::int_>(x)) return tw.ring->constant(x.cast<std::int64_t>());
  return parse_trunc_elem(x.cast<std::string>(), tw.ring);
}

template <class P>
void bind_common(py::class_<P>& cls) {
  cls.def("__str__", [](const P& f) { return to_string(f); })
      .def("__repr__", [](const P& f) { return "SkewPoly('" + to_string(f) + "')"; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__hash__", [](const P& f) { return py::hash(py::str(to_string(f))); })
      .def_property_readonly("degree", &P::degree)
      .def_property_readonly("coeffs", [](const P& f) { return strs(f.coeffs()); })
      .def("is_monic", &P::is_monic)
      .def("is_zero", &P::is_zero)
      .def("divmod", [](const P& f, const P& g) { return right_divmod(f, g); }, "Right division f = q g + r.")
      .def("left_divmod", [](const P& f, const P& g) { return left_divmod(f, g); })
      .def("monic", [](const P& f) { return make_monic(f); });
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Skew polynomial rings over finite fields and F_p[u]/(u^m)";

  // Leaked on purpose: the translator can run during interpreter shutdown.
  static auto* base = new py::exception<Error>(m, "SkewfqError");
  static auto* parse_exc = new py::exception<ParseError>(m, "ParseError", base->ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::object err = py::reinterpret_borrow<py::object>(parse_exc->ptr())(e.what());
      err.attr("kind") = "ParseError";
      err.attr("offset") = e.offset();
      err.attr("expected") = e.expected();
      PyErr_SetObject(parse_exc->ptr(), err.ptr());
    } catch (const Error& e) {
      py::object err = py::reinterpret_borrow<py::object>(base->ptr())(e.what());
      err.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(base->ptr(), err.ptr());
    }
  });

  py::class_<FqElem>(m, "FieldElement")
      .def("__str__", [](const FqElem& x) { return to_string(x); })
      .def("__repr__", [](const FqElem& x) { return "FieldElement('" + to_string(x) + "')"; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__hash__", [](const FqElem& x) { return x.index(); })
      .def_property_readonly("index", &FqElem::index)
      .def("frobenius", [](const FqElem& x, std::uint64_t k) { return frobenius(x, k); }, py::arg("k") = 1)
      .def("inverse", [](const FqElem& x) { return inverse(x); });

  py::class_<TruncElem>(m, "TruncElement")
      .def("__str__", [](const TruncElem& x) { return to_string(x); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("derive", [](const TruncElem& x) { return derive(x); })
      .def("is_unit", &TruncElem::is_unit);

  py::class_<FieldSkew> fpoly(m, "FieldSkewPoly");
  bind_common(fpoly);
  fpoly
      .def("__call__", [](const FieldSkew& f, const py::object& a) { return evaluate(f, field_elem(f.twist(), a)); },
           "f(a): the remainder of f on right division by t - a.")
      .def("rgcd", [](const FieldSkew& f, const FieldSkew& g) { return rgcd(f, g); })
      .def("llclm", [](const FieldSkew& f, const FieldSkew& g) { return llclm(f, g); })
      .def("bracket", [](const FieldSkew& f) { return to_string(bracket_map(f)); })
      .def("roots", [](const FieldSkew& f) { return skew_roots(f); })
      .def(
          "factor",
          [](const FieldSkew& f, std::size_t cap) {
            const auto s = factorize(f, cap);
            return py::make_tuple(s.unit, s.factors);
          },
          py::arg("cap") = kDefaultDivisorCap, "(unit, factors) with f = unit * factors[0] * factors[1] * ...")
      .def(
          "alternate_factorizations",
          [](const FieldSkew& f, std::size_t k, std::size_t cap) {
            std::vector<std::vector<FieldSkew>> out;
            for (const auto& s : alternate_factorizations(f, k, cap)) out.push_back(s.factors);
            return out;
          },
          py::arg("k"), py::arg("cap") = kDefaultDivisorCap)
      .def(
          "is_irreducible", [](const FieldSkew& f, std::size_t cap) { return is_irreducible(f, cap).irreducible; },
          py::arg("cap") = kDefaultDivisorCap)
      .def("splitting_degree", [](const FieldSkew& f) { return splitting_field_degree(f); })
      .def("gm_audit", [](const FieldSkew& f) {
        const auto a = gm_audit(f);
        py::dict d;
        d["sum"] = a.sum;
        d["degree"] = a.degree;
        d["classes"] = a.classes.size();
        d["bound_held"] = a.bound_held;
        d["wedderburn_equality"] = a.wedderburn_equality;
        return d;
      });

  py::class_<TruncSkew> tpoly(m, "TruncSkewPoly");
  bind_common(tpoly);
  tpoly.def("__call__",
            [](const TruncSkew& f, const py::object& a) { return evaluate(f, trunc_elem(f.twist(), a)); });

  py::class_<RingSpec>(m, "Ring")
      .def(py::init([](const std::string& spec) { return parse_ring_spec(spec); }), py::arg("spec"))
      .def("__str__", &RingSpec::canonical)
      .def("__repr__", [](const RingSpec& r) { return "Ring('" + r.canonical() + "')"; })
      .def_property_readonly("is_field", [](const RingSpec& r) { return r.kind == RingSpec::Kind::Field; })
      .def_property_readonly("characteristic",
                             [](const RingSpec& r) {
                               return r.kind == RingSpec::Kind::Field ? r.field->characteristic()
                                                                      : r.trunc->characteristic();
                             })
      .def_property_readonly("order",
                             [](const RingSpec& r) {
                               return r.kind == RingSpec::Kind::Field ? r.field->order() : r.trunc->order();
                             })
      .def("poly",
           [](const RingSpec& r, const std::string& src) -> py::object {
             if (r.kind == RingSpec::Kind::Field) return py::cast(parse_field_skew(src, r.field_twist()));
             return py::cast(parse_trunc_skew(src, r.trunc_twist()));
           })
      .def("elem",
           [](const RingSpec& r, const py::object& src) -> py::object {
             if (r.kind == RingSpec::Kind::Field) return py::cast(field_elem(r.field_twist(), src));
             return py::cast(trunc_elem(r.trunc_twist(), src));
           })
      .def("elements",
           [](const RingSpec& r) -> py::object {
             if (r.kind == RingSpec::Kind::Field) return py::cast(r.field->elements());
             return py::cast(r.trunc->elements());
           })
      .def("unbracket",
           [](const RingSpec& r, const std::string& src) { return unbracket_map(parse_cpoly(src, r.field)); })
      .def("conjugacy_classes",
           [](const RingSpec& r) {
             std::vector<std::vector<FqElem>> out;
             for (const auto& c : conjugacy_classes(r.field, r.field_twist().power)) out.push_back(c.members);
             return out;
           })
      .def("min_vanishing",
           [](const RingSpec& r) {
             const auto mv = min_vanishing(r.field);
             return py::make_tuple(mv.polynomial, mv.invariant);
           })
      .def("hilbert90", [](const RingSpec& r) { return hilbert90(r.field).equal; })
      .def("frobenius_law", [](const RingSpec& r, const py::object& a) {
        const auto tw = r.trunc_twist();
        const auto res = frobenius_law_check(tw, trunc_elem(tw, a));
        return py::make_tuple(res.lhs, res.rhs, res.equal);
      });

  m.def(
      "verify",
      [](std::uint64_t seed) {
        py::dict out;
        for (const auto& s : run_verify(seed).suites) out[py::str(s.name)] = py::make_tuple(s.cases, s.violations);
        return out;
      },
      py::arg("seed") = kDefaultSeed, "Runs every verification suite; maps name -> (cases, violations).");
  m.def("suite_names", &verify_suite_names);
}
