// Python bindings for the main operations: bracket kernels, family
// verification, Casimir checks, dressing reductions, the h/F sweeps, the
// Hopf k-scan and the su-variant residual.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qdeform/hopf.hpp"
#include "qdeform/transforms.hpp"

namespace py = pybind11;
using namespace qdeform;

namespace {

AlgebraFamily family_from_kwargs(const std::string& name, double q, double alpha, double beta,
                                 double q1, double q2) {
  auto tag = family_from_name(name);
  if (!tag) throw DomainError("unknown family: " + name);
  switch (*tag) {
    case Family::mb: return make_mb(q);
    case Family::arik_coon: return make_arik_coon(q);
    case Family::chaturvedi_srinivasan: return make_chaturvedi_srinivasan(q);
    case Family::chakrabarti_jagannathan: return make_chakrabarti_jagannathan(q1, q2);
    case Family::gen_mb: return make_gen_mb(DeformParams(q, alpha, beta));
    case Family::hong_yan: return make_hong_yan(q);
    case Family::gen_osc: return make_gen_osc(DeformParams(q, alpha, beta));
    case Family::gen_arik_coon: return make_gen_arik_coon(q, alpha);
    case Family::suq2_gen: return make_suq2_gen(DeformParams(q, alpha, beta));
  }
  throw DomainError("unknown family: " + name);
}

py::dict report_to_dict(const ResidualReport& report) {
  py::dict out;
  out["family"] = report.family;
  out["window"] = py::make_tuple(report.window.n0, report.window.dim);
  out["tolerance"] = report.tolerance;
  py::list rels;
  for (const auto& r : report.relations) {
    py::dict d;
    d["name"] = r.name;
    d["equation"] = r.equation;
    d["max_residual"] = r.max_residual;
    d["pass"] = r.pass;
    rels.append(d);
  }
  out["relations"] = rels;
  out["pass"] = report.pass;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "numerical workbench for two-parameter deformed oscillator algebras";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<DeformParams>(m, "DeformParams")
      .def(py::init<double, double, double>(), py::arg("q"), py::arg("alpha"), py::arg("beta"))
      .def_readonly("q", &DeformParams::q)
      .def_readonly("alpha", &DeformParams::alpha)
      .def_readonly("beta", &DeformParams::beta)
      .def("qprime", &DeformParams::qprime)
      .def("k", &DeformParams::k)
      .def("degenerate", &DeformParams::degenerate);

  m.def("std_bracket", &std_bracket, py::arg("x"), py::arg("q"));
  m.def(
      "gen_bracket",
      [](double x, const DeformParams& p) {
        const BracketValue v = gen_bracket(x, p);
        return py::make_tuple(v.value,
                              v.branch == BracketBranch::generic ? "generic" : "degenerate-limit");
      },
      py::arg("x"), py::arg("params"));
  m.def("bracket_k_form", &bracket_k_form, py::arg("x"), py::arg("qprime"), py::arg("k"));
  m.def("delta_bracket", &delta_bracket, py::arg("x"), py::arg("params"));
  m.def("factorization_residual", &factorization_residual, py::arg("x"), py::arg("params"));
  m.def("mb_identity_residual", &mb_identity_residual, py::arg("x"), py::arg("q"));

  m.def(
      "verify_family",
      [](const std::string& family, double q, double alpha, double beta, double q1, double q2,
         double nu, double casimir_const, long dim, double tolerance, bool non_unitary) {
        const AlgebraFamily fam = family_from_kwargs(family, q, alpha, beta, q1, q2);
        FockRep rep{fam, nu, casimir_const, non_unitary, dim};
        return report_to_dict(verify(fam, fock_ops(rep), Window{0, dim}, tolerance));
      },
      py::arg("family"), py::arg("q") = 1.5, py::arg("alpha") = 1.0, py::arg("beta") = -1.0,
      py::arg("q1") = 1.2, py::arg("q2") = 1.7, py::arg("nu") = 0.0,
      py::arg("casimir_const") = 0.0, py::arg("dim") = 16, py::arg("tolerance") = kDefaultTolerance,
      py::arg("non_unitary") = false);

  m.def(
      "casimir_profile",
      [](const std::string& family, double q, double alpha, double beta, double q1, double q2,
         double nu, double casimir_const, long dim, bool non_unitary) {
        const AlgebraFamily fam = family_from_kwargs(family, q, alpha, beta, q1, q2);
        FockRep rep{fam, nu, casimir_const, non_unitary, dim};
        const OperatorTriple t = fock_ops(rep);
        const LadderOperator c = casimir_op(fam, t);
        py::dict out;
        out["eigenvalues"] = casimir_eigenvalue_profile(c, Window{0, dim});
        out["centrality_residual"] = centrality_residual(c, t, Window{0, dim});
        return out;
      },
      py::arg("family"), py::arg("q") = 1.5, py::arg("alpha") = 1.0, py::arg("beta") = -1.0,
      py::arg("q1") = 1.2, py::arg("q2") = 1.7, py::arg("nu") = 0.0,
      py::arg("casimir_const") = 0.0, py::arg("dim") = 16, py::arg("non_unitary") = false);

  m.def(
      "matrix_window",
      [](const std::string& family, const std::string& generator, double q, double alpha,
         double beta, double nu, double casimir_const, long n0, long dim, bool non_unitary) {
        const AlgebraFamily fam = family_from_kwargs(family, q, alpha, beta, 1.2, 1.7);
        FockRep rep{fam, nu, casimir_const, non_unitary, n0 + dim};
        const OperatorTriple t = fock_ops(rep);
        const LadderOperator* op = nullptr;
        if (generator == "a") op = &t.a;
        else if (generator == "adag") op = &t.adag;
        else if (generator == "n") op = &t.nop;
        else throw DomainError("generator must be one of: a, adag, n");
        const DenseMatrix mat = matrix_window(*op, n0, dim);
        std::vector<std::vector<std::complex<double>>> rows(dim);
        for (long i = 0; i < dim; ++i)
          for (long j = 0; j < dim; ++j) rows[i].push_back(mat(i, j));
        return rows;
      },
      py::arg("family"), py::arg("generator"), py::arg("q") = 1.5, py::arg("alpha") = 1.0,
      py::arg("beta") = -1.0, py::arg("nu") = 0.0, py::arg("casimir_const") = 0.0,
      py::arg("n0") = 0, py::arg("dim") = 8, py::arg("non_unitary") = false);

  m.def(
      "reduction_check",
      [](const std::string& which, double q, double alpha, double beta, long dim, double nu,
         double casimir_const, double tolerance) {
        ReductionCase rc;
        if (which == "alpha-zero") rc = ReductionCase::alpha_zero;
        else if (which == "beta-zero") rc = ReductionCase::beta_zero;
        else if (which == "sum-zero") rc = ReductionCase::sum_zero;
        else if (which == "alpha-eq-beta") rc = ReductionCase::alpha_eq_beta;
        else throw DomainError("unknown reduction case: " + which);
        return report_to_dict(reduction_check(rc, DeformParams(q, alpha, beta), Window{0, dim},
                                              nu, casimir_const, tolerance));
      },
      py::arg("which"), py::arg("q"), py::arg("alpha"), py::arg("beta"), py::arg("dim") = 16,
      py::arg("nu") = 0.0, py::arg("casimir_const") = 0.0,
      py::arg("tolerance") = kDefaultTolerance);

  m.def("f_obstruction_term", &f_obstruction_term, py::arg("n"), py::arg("qprime"), py::arg("k1"),
        py::arg("k2"));
  m.def(
      "k_rescale_residual",
      [](double qprime, double k1, double k2, long dim, double nu) {
        return k_rescale_residual(qprime, k1, k2, Window{0, dim}, nu);
      },
      py::arg("qprime"), py::arg("k1"), py::arg("k2"), py::arg("dim") = 16, py::arg("nu") = 0.0);

  m.def("h_function", &h_function, py::arg("n"), py::arg("qprime"), py::arg("k"), py::arg("nu"));
  m.def(
      "h_scan",
      [](double qprime, const std::vector<double>& k_grid, double nu, long n_max) {
        const HScanResult scan = h_scan(qprime, k_grid, nu, n_max);
        py::list rows, summaries;
        for (const auto& row : scan.rows)
          rows.append(py::make_tuple(row.k, row.n, row.h, row.ok));
        for (const auto& s : scan.summaries) {
          py::dict d;
          d["k"] = s.k;
          d["valid_points"] = s.valid_points;
          d["variation"] = s.variation;
          d["max_abs_slope"] = s.max_abs_slope;
          summaries.append(d);
        }
        py::dict out;
        out["rows"] = rows;
        out["summaries"] = summaries;
        return out;
      },
      py::arg("qprime"), py::arg("k_grid"), py::arg("nu") = 0.5, py::arg("n_max") = 20);

  m.def(
      "dressing_solver_demo",
      [](double qprime, double k, double nu, long n_max, double tolerance) {
        const DressingSolveReport rep = dressing_solver_demo(qprime, k, nu, n_max, tolerance);
        py::dict out;
        out["qprime"] = rep.qprime;
        out["k"] = rep.k;
        out["nu"] = rep.nu;
        out["spread"] = rep.spread;
        out["mb_equivalent"] = rep.mb_equivalent;
        py::list rows;
        for (const auto& row : rep.q_rows) rows.append(py::make_tuple(row.n, row.h, row.ok));
        out["q_values"] = rows;
        return out;
      },
      py::arg("qprime"), py::arg("k"), py::arg("nu") = 0.5, py::arg("n_max") = 20,
      py::arg("tolerance") = 1e-10);

  m.def(
      "hopf_scan",
      [](double qprime, const std::vector<double>& k_grid, double nu, long dim) {
        py::list out;
        for (const auto& cell : hopf_scan(qprime, k_grid, nu, dim)) {
          py::dict d;
          d["k"] = cell.k;
          d["residual"] = cell.min_residual;
          d["alphas"] = py::make_tuple(cell.best.alpha1, cell.best.alpha2, cell.best.alpha3,
                                       cell.best.alpha4);
          d["gamma"] = cell.best.gamma;
          d["converged"] = cell.converged;
          out.append(d);
        }
        return out;
      },
      py::arg("qprime"), py::arg("k_grid"), py::arg("nu") = 0.0, py::arg("dim") = 5);

  m.def(
      "suq2_homomorphism_residual",
      [](double q, double alpha, double beta, double mu, long dim) {
        double s_best = 0.0;
        const double r = suq2_homomorphism_residual(DeformParams(q, alpha, beta), mu, dim, &s_best);
        return py::make_tuple(r, s_best);
      },
      py::arg("q"), py::arg("alpha"), py::arg("beta"), py::arg("mu") = -2.0, py::arg("dim") = 5);
}
