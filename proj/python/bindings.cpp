// Python bindings. Operators cross the boundary as complex arrays of shape
// (m, n, n), module elements as (m, n) and center elements as (m,).

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "stonework/cli.hpp"
#include "stonework/hilbert_module.hpp"
#include "stonework/lattice_filters.hpp"
#include "stonework/matrix_algebra.hpp"
#include "stonework/observables.hpp"
#include "stonework/stone_spectrum.hpp"
#include "stonework/verify.hpp"

namespace py = pybind11;
using namespace stonework;

namespace {

using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

FiberedOperator to_operator(const CArray& a) {
  if (a.ndim() != 3 || a.shape(1) != a.shape(2)) throw py::value_error("operator must have shape (m, n, n)");
  const auto v = a.unchecked<3>();
  std::vector<ComplexMatrix> fibers;
  for (py::ssize_t w = 0; w < v.shape(0); ++w) {
    ComplexMatrix f(v.shape(1), v.shape(2));
    for (py::ssize_t i = 0; i < v.shape(1); ++i) {
      for (py::ssize_t j = 0; j < v.shape(2); ++j) f(i, j) = v(w, i, j);
    }
    fibers.push_back(std::move(f));
  }
  return FiberedOperator(std::move(fibers));
}

ModuleElement to_element(const CArray& a) {
  if (a.ndim() != 2) throw py::value_error("module element must have shape (m, n)");
  const auto v = a.unchecked<2>();
  std::vector<ComplexVector> fibers;
  for (py::ssize_t w = 0; w < v.shape(0); ++w) {
    ComplexVector f(v.shape(1));
    for (py::ssize_t i = 0; i < v.shape(1); ++i) f[i] = v(w, i);
    fibers.push_back(std::move(f));
  }
  return ModuleElement::from_fibers(std::move(fibers));
}

ComplexVector to_vector(const CArray& a) {
  if (a.ndim() != 1) throw py::value_error("vector must be one-dimensional");
  const auto v = a.unchecked<1>();
  ComplexVector out(v.shape(0));
  for (py::ssize_t i = 0; i < v.shape(0); ++i) out[i] = v(i);
  return out;
}

CArray from_operator(const FiberedOperator& t) {
  const auto m = static_cast<py::ssize_t>(t.space_size()), n = static_cast<py::ssize_t>(t.rank());
  CArray out({m, n, n});
  auto v = out.mutable_unchecked<3>();
  for (py::ssize_t w = 0; w < m; ++w) {
    for (py::ssize_t i = 0; i < n; ++i) {
      for (py::ssize_t j = 0; j < n; ++j) v(w, i, j) = t.fiber(w)(i, j);
    }
  }
  return out;
}

CArray from_matrix(const ComplexMatrix& a) {
  CArray out({static_cast<py::ssize_t>(a.rows()), static_cast<py::ssize_t>(a.cols())});
  auto v = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) v(i, j) = a(i, j);
  }
  return out;
}

CArray from_element(const ModuleElement& a) {
  const auto m = static_cast<py::ssize_t>(a.space_size()), n = static_cast<py::ssize_t>(a.rank());
  CArray out({m, n});
  auto v = out.mutable_unchecked<2>();
  for (py::ssize_t w = 0; w < m; ++w) {
    for (py::ssize_t i = 0; i < n; ++i) v(w, i) = a.fiber(w)[i];
  }
  return out;
}

CArray from_vector(const ComplexVector& x) {
  CArray out(std::vector<py::ssize_t>{static_cast<py::ssize_t>(x.size())});
  auto v = out.mutable_unchecked<1>();
  for (std::size_t i = 0; i < x.size(); ++i) v(static_cast<py::ssize_t>(i)) = x[i];
  return out;
}

CArray from_center(const CenterElement& c) { return from_vector(ComplexVector(c.values().begin(), c.values().end())); }

py::tuple from_quasipoint(const Quasipoint& b) { return py::make_tuple(b.omega.omega, from_vector(b.line)); }

}  // namespace

PYBIND11_MODULE(_stonework, mod) {
  mod.doc() = "Quasipoints and observables of M_n(C(Omega)) for finite Omega";

  static py::exception<Error> error_type(mod, "StoneworkError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("code") = std::string(error_name(e.code()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  mod.def(
      "inner", [](const CArray& a, const CArray& b) { return from_center(inner(to_element(a), to_element(b))); },
      py::arg("a"), py::arg("b"), "Module inner product (a|b) as a function on Omega.");
  mod.def(
      "normalize", [](const CArray& a, double eps) { return from_element(normalize(to_element(a), Tolerance(eps))); },
      py::arg("a"), py::arg("eps") = Tolerance::kDefault);
  mod.def(
      "abelian_projection",
      [](const CArray& a, double eps) { return from_operator(abelian_projection(to_element(a), Tolerance(eps))); },
      py::arg("a"), py::arg("eps") = Tolerance::kDefault, "E_a = |a><a| for normalized a.");
  mod.def(
      "central_carrier",
      [](const CArray& p, double eps) { return from_center(central_carrier(to_operator(p), Tolerance(eps))); },
      py::arg("p"), py::arg("eps") = Tolerance::kDefault);
  mod.def(
      "is_abelian_projection",
      [](const CArray& p, double eps) { return is_abelian_projection(to_operator(p), Tolerance(eps)); }, py::arg("p"),
      py::arg("eps") = Tolerance::kDefault);
  mod.def(
      "transport",
      [](const CArray& theta, const CArray& p, double eps) {
        return from_operator(transport(to_operator(theta), to_operator(p), Tolerance(eps)));
      },
      py::arg("theta"), py::arg("p"), py::arg("eps") = Tolerance::kDefault);

  mod.def(
      "quasipoint", [](std::size_t omega, const CArray& x) { return from_quasipoint(make_quasipoint(omega, to_vector(x))); },
      py::arg("omega"), py::arg("line"), "Normalized, phase-fixed (omega, line) pair.");
  mod.def(
      "qp_contains",
      [](std::size_t omega, const CArray& x, const CArray& p, double eps) {
        return qp_contains(make_quasipoint(omega, to_vector(x)), to_operator(p), Tolerance(eps));
      },
      py::arg("omega"), py::arg("line"), py::arg("p"), py::arg("eps") = Tolerance::kDefault);
  mod.def(
      "orbit_witness",
      [](std::size_t omega, const CArray& x, std::size_t omega2, const CArray& y, std::size_t m) -> py::object {
        const auto u = orbit_witness(make_quasipoint(omega, to_vector(x)), make_quasipoint(omega2, to_vector(y)), m);
        if (!u) return py::none();
        return from_operator(*u);
      },
      py::arg("omega"), py::arg("line"), py::arg("omega2"), py::arg("line2"), py::arg("m"),
      "Unitary carrying the first quasipoint to the second, or None when their points differ.");
  mod.def(
      "germ",
      [](const CArray& a, std::size_t omega) { return from_vector(germ_eval(to_element(a), CenterQuasipoint{omega}).value); },
      py::arg("a"), py::arg("omega"));

  mod.def(
      "lattice_quasipoints",
      [](const std::vector<CArray>& generators, std::size_t cap, double eps) {
        std::vector<FiberedOperator> gens;
        for (const auto& g : generators) gens.push_back(to_operator(g));
        const FiniteLattice l = meet_closure(gens, cap, Tolerance(eps));
        py::list out;
        for (const auto& f : enumerate_quasipoints(l)) {
          const Quasipoint b = extend_filter_to_quasipoint(l, f, Tolerance(eps));
          py::dict row;
          row["members"] = f.members;
          row["omega"] = b.omega.omega;
          row["line"] = from_vector(b.line);
          out.append(row);
        }
        return py::make_tuple(l.size(), out);
      },
      py::arg("generators"), py::arg("cap") = kDefaultClosureCap, py::arg("eps") = Tolerance::kDefault,
      "Closes the generators under meet and join; returns (size, quasipoints).");

  mod.def(
      "observable_value",
      [](const CArray& a, std::size_t omega, const CArray& x, double eps) {
        return observable_value(to_operator(a), make_quasipoint(omega, to_vector(x)), Tolerance(eps));
      },
      py::arg("a"), py::arg("omega"), py::arg("line"), py::arg("eps") = Tolerance::kDefault);
  mod.def(
      "spectrum", [](const CArray& a, double eps) { return spectrum(to_operator(a), Tolerance(eps)); }, py::arg("a"),
      py::arg("eps") = Tolerance::kDefault);
  mod.def(
      "spectral_family",
      [](const CArray& a, double eps) {
        py::list fibers;
        for (const auto& steps : spectral_family(to_operator(a), Tolerance(eps)).fibers) {
          py::list projections;
          for (const auto& p : steps.cumulative) projections.append(from_matrix(p));
          fibers.append(py::make_tuple(steps.lambdas, projections));
        }
        return fibers;
      },
      py::arg("a"), py::arg("eps") = Tolerance::kDefault, "Per fiber: (eigenvalues, cumulative projections E_lambda).");

  mod.def(
      "verify_all",
      [](std::uint64_t seed, double eps) {
        py::list out;
        for (const auto& s : run_all_suites(seed, Tolerance(eps))) {
          py::dict row;
          row["name"] = s.name;
          row["pass"] = s.pass;
          row["samples"] = s.samples;
          row["max_residual"] = s.max_residual;
          row["detail"] = s.detail;
          out.append(row);
        }
        return out;
      },
      py::arg("seed") = 0, py::arg("eps") = Tolerance::kDefault);
  mod.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
