// Python module _lpcodes. Binary matrices cross the boundary as 2-D numpy
// uint8 arrays; polynomial matrices as their text format.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lpc/bounds.hpp"
#include "lpc/chains.hpp"
#include "lpc/css.hpp"
#include "lpc/errors.hpp"
#include "lpc/expander.hpp"
#include "lpc/products.hpp"

namespace py = pybind11;
using namespace lpc;

namespace {

using U8Array = py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>;

BinMatrix to_bin(const U8Array& a) {
  if (a.ndim() != 2) throw DimensionError("expected a 2-D array");
  const auto v = a.unchecked<2>();
  BinMatrix m(static_cast<std::size_t>(v.shape(0)), static_cast<std::size_t>(v.shape(1)));
  for (py::ssize_t r = 0; r < v.shape(0); ++r)
    for (py::ssize_t c = 0; c < v.shape(1); ++c)
      if (v(r, c) & 1u) m.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  return m;
}

U8Array to_numpy(const BinMatrix& m) {
  U8Array a({static_cast<py::ssize_t>(m.rows()), static_cast<py::ssize_t>(m.cols())});
  auto v = a.mutable_unchecked<2>();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v(r, c) = m.get(r, c) ? 1 : 0;
  return a;
}

U8Array to_numpy(const BitVec& b) {
  U8Array a(static_cast<py::ssize_t>(b.size()));
  auto v = a.mutable_unchecked<1>();
  for (std::size_t i = 0; i < b.size(); ++i) v(i) = b.get(i) ? 1 : 0;
  return a;
}

Side parse_side(const std::string& s) {
  if (s == "z" || s == "Z") return Side::Z;
  if (s == "x" || s == "X") return Side::X;
  throw DomainError("side must be 'z' or 'x'");
}

py::object weight_or_none(const std::optional<std::size_t>& w) { return w ? py::cast(*w) : py::none(); }

py::dict distance_dict(const DistanceResult& d) {
  py::dict out;
  out["weight"] = weight_or_none(d.weight);
  out["kind"] = to_string(d.kind);
  out["witness"] = d.weight ? py::object(to_numpy(d.witness)) : py::none();
  return out;
}

AlgElem poly_elem(const GroupSpec& g, const std::string& p) { return AlgElem::from_poly(g, Poly2::parse(p)); }

}  // namespace

PYBIND11_MODULE(_lpcodes, m) {
  m.doc() = "Lifted-product quantum LDPC codes";

  // Python exception hierarchy; BudgetExceeded carries .required via args[1].
  static py::exception<ParseError> parse_exc(m, "ParseError", PyExc_ValueError);
  static py::exception<DomainError> domain_exc(m, "DomainError", PyExc_ValueError);
  static py::exception<DimensionError> dim_exc(m, "DimensionError", PyExc_ValueError);
  static py::exception<BudgetExceeded> budget_exc(m, "BudgetExceeded", PyExc_RuntimeError);
  static py::exception<InvariantViolation> inv_exc(m, "InvariantViolation", PyExc_RuntimeError);
  static py::exception<Unsupported> unsup_exc(m, "Unsupported", PyExc_NotImplementedError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_exc, e.what());
    } catch (const DomainError& e) {
      py::set_error(domain_exc, e.what());
    } catch (const DimensionError& e) {
      py::set_error(dim_exc, e.what());
    } catch (const BudgetExceeded& e) {
      PyErr_SetObject(budget_exc.ptr(), py::make_tuple(e.what(), e.required()).ptr());
    } catch (const InvariantViolation& e) {
      py::set_error(inv_exc, e.what());
    } catch (const Unsupported& e) {
      py::set_error(unsup_exc, e.what());
    }
  });

  py::class_<CssCode>(m, "CssCode")
      .def(py::init([](const U8Array& hx, const U8Array& hz) { return CssCode(to_bin(hx), to_bin(hz)); }),
           py::arg("hx"), py::arg("hz"))
      .def_property_readonly("n", &CssCode::n)
      .def_property_readonly("hx", [](const CssCode& q) { return to_numpy(q.hx()); })
      .def_property_readonly("hz", [](const CssCode& q) { return to_numpy(q.hz()); })
      .def("__eq__", [](const CssCode& a, const CssCode& b) { return a == b; })
      .def("__repr__", [](const CssCode& q) {
        return "CssCode(n=" + std::to_string(q.n()) + ", k=" + std::to_string(css_dimension(q)) + ")";
      });

  // constructions
  m.def("hp", [](const U8Array& a, const U8Array& b) { return hp(to_bin(a), to_bin(b)); }, py::arg("a"),
        py::arg("b"));
  m.def("lp", [](const std::string& a, const std::string& b) { return lp(parse_alg_matrix(a), parse_alg_matrix(b)); },
        py::arg("a"), py::arg("b"), "LP(A, B) of two polynomial matrices given as text");
  m.def("lp_square", [](const std::string& a) { return lp_square(parse_alg_matrix(a)); }, py::arg("a"));
  m.def("lp_ab",
        [](const std::string& a, const std::string& b) {
          const AlgMatrix am = parse_alg_matrix(a);
          return lp_ab(am, poly_elem(am.group(), b));
        },
        py::arg("a"), py::arg("b"));
  m.def("gb", [](std::size_t l, const std::string& a, const std::string& b) {
        const GroupSpec g = GroupSpec::cyclic(l);
        return gb(poly_elem(g, a), poly_elem(g, b));
      },
        py::arg("l"), py::arg("a"), py::arg("b"));
  m.def("balance", [](const CssCode& q, const U8Array& hc, std::size_t grade) {
        return balance_construct(q, to_bin(hc), grade);
      },
        py::arg("code"), py::arg("classical"), py::arg("grade") = 1);
  m.def("block_lift", [](const std::string& a) { return to_numpy(block_lift(parse_alg_matrix(a))); }, py::arg("a"));

  // analysis
  m.def("css_dimension", &css_dimension, py::arg("code"));
  m.def("limitedness", &limitedness, py::arg("code"));
  m.def("exact_distance",
        [](const CssCode& q, const std::string& side, std::size_t budget, unsigned jobs) {
          const Side s = parse_side(side);
          DistanceResult d;
          {
            py::gil_scoped_release release;
            d = exact_distance(q, s, budget, jobs);
          }
          return distance_dict(d);
        },
        py::arg("code"), py::arg("side") = "z", py::arg("budget") = 26, py::arg("jobs") = 0);
  m.def("min_weight_search",
        [](const CssCode& q, const std::string& side, std::size_t max_weight, unsigned jobs) {
          return distance_dict(min_weight_search(q, parse_side(side), max_weight, jobs));
        },
        py::arg("code"), py::arg("side") = "z", py::arg("max_weight") = 16, py::arg("jobs") = 0);
  m.def("distance_upper",
        [](const CssCode& q, const std::string& side, std::uint64_t seed, std::size_t trials, unsigned jobs) {
          return distance_dict(distance_upper(q, parse_side(side), seed, trials, jobs));
        },
        py::arg("code"), py::arg("side") = "z", py::arg("seed") = 1, py::arg("trials") = 100000,
        py::arg("jobs") = 0);
  m.def("classical_code", [](const U8Array& h) { return classical_code(to_bin(h)); }, py::arg("h"));

  // algebra and bounds
  m.def("factor_cyclic",
        [](std::size_t l) {
          std::vector<std::string> out;
          for (const Poly2& p : factor_cyclic(l).factors) out.push_back(p.to_string());
          return out;
        },
        py::arg("l"));
  m.def("lp_ab_dim", [](const std::string& a, const std::string& b) { return lp_ab_dim(parse_alg_matrix(a), Poly2::parse(b)); },
        py::arg("a"), py::arg("b"));
  m.def("qc_distance_bound",
        [](const std::vector<std::vector<std::int64_t>>& w) -> py::object {
          const auto b = qc_distance_bound(WeightMatrix::from_rows(w));
          return b ? py::cast(*b) : py::none();
        },
        py::arg("weights"), "None means no finite bound (infinity)");
  m.def("permanent", [](const std::vector<std::vector<std::int64_t>>& w) { return permanent(WeightMatrix::from_rows(w)); },
        py::arg("weights"));

  // expanders
  m.def("random_regular_edges",
        [](std::size_t n, std::size_t w, std::uint64_t seed) { return random_regular(n, w, seed).edges(); },
        py::arg("n"), py::arg("w"), py::arg("seed"));
  m.def("spectrum",
        [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
          const SpectralReport r = spectrum_lambda(Graph(n, edges));
          return py::make_tuple(r.eigenvalues, r.lambda);
        },
        py::arg("n"), py::arg("edges"), "(eigenvalues descending, lambda)");
  m.def("pipeline",
        [](std::size_t l, std::size_t n, std::size_t w, std::size_t r, double delta, std::uint64_t seed, unsigned jobs) {
          const PipelineReport rep = lp_tanner_pipeline(l, n, w, r, delta, seed, jobs);
          py::dict d;
          d["a"] = format_alg_matrix(rep.a);
          d["n"] = rep.code_n;
          d["k_rank"] = rep.k_rank;
          d["k_formula"] = rep.k_formula;
          d["limitedness"] = rep.limitedness;
          d["lambda_base"] = rep.lambda_base;
          d["lambda_lift"] = rep.lambda_lift;
          d["gamma"] = rep.gamma;
          d["dz"] = distance_dict(rep.dz);
          d["dx"] = distance_dict(rep.dx);
          return d;
        },
        py::arg("l"), py::arg("n"), py::arg("w"), py::arg("r") = 1, py::arg("delta") = 0.5, py::arg("seed") = 1,
        py::arg("jobs") = 0);
}
