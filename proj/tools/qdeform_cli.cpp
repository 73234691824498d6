// Command-line front end: family verification, Casimir checks, dressing
// reductions, h(n)/F(n) sweeps, the Hopf k-scan and the su_q(2) variant.
// Emits CSV for figures and JSON for reports; numbers carry 17 significant
// digits so downstream re-checks can reparse them exactly.
//
// Exit codes: 0 pass, 1 residual failure, 2 usage error, 3 domain error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qdeform/hopf.hpp"
#include "qdeform/transforms.hpp"

using namespace qdeform;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// minimal JSON emission; all keys/strings here are plain ASCII
std::string jstr(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string jkv(const std::string& key, const std::string& rendered) {
  return jstr(key) + ":" + rendered;
}

std::string jobj(const std::vector<std::string>& fields) {
  std::string out = "{";
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ",";
    out += fields[i];
  }
  return out + "}";
}

std::string jarr(const std::vector<std::string>& elems) {
  std::string out = "[";
  for (size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ",";
    out += elems[i];
  }
  return out + "]";
}

std::string jbool(bool b) { return b ? "true" : "false"; }

double env_tolerance() {
  if (const char* env = std::getenv("QDEFORM_TOL")) {
    try {
      const double v = std::stod(env);
      if (v > 0.0) return v;
    } catch (...) {
    }
  }
  return kDefaultTolerance;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file: " + path);
  out << content;
}

// ---- shared option blocks -------------------------------------------------

struct FamilyOpts {
  std::string family;
  double q = 0.0, alpha = 0.0, beta = 0.0;
  double q1 = 0.0, q2 = 0.0;
  double qprime = 0.0, k = 0.0;
  bool has_q = false, has_alpha = false, has_beta = false;
  bool has_q1 = false, has_q2 = false, has_qprime = false, has_k = false;

  void attach(CLI::App* cmd, bool family_required) {
    auto* fam = cmd->add_option("--family", family,
                                "family tag: mb | arik-coon | chaturvedi-srinivasan | "
                                "chakrabarti-jagannathan | gen-mb | hong-yan | gen-osc | "
                                "gen-arik-coon | suq2-gen");
    if (family_required) fam->required();
    cmd->add_option("--q", q, "deformation base q")->each([this](std::string) { has_q = true; });
    cmd->add_option("--alpha", alpha, "exponent alpha")->each([this](std::string) { has_alpha = true; });
    cmd->add_option("--beta", beta, "exponent beta")->each([this](std::string) { has_beta = true; });
    cmd->add_option("--q1", q1, "chakrabarti-jagannathan q1")->each([this](std::string) { has_q1 = true; });
    cmd->add_option("--q2", q2, "chakrabarti-jagannathan q2")->each([this](std::string) { has_q2 = true; });
    cmd->add_option("--qprime", qprime, "k-form base q' (maps to alpha=1, beta=k)")
        ->each([this](std::string) { has_qprime = true; });
    cmd->add_option("--k", k, "k-form ratio")->each([this](std::string) { has_k = true; });
  }

  AlgebraFamily build() const {
    auto tag = family_from_name(family);
    if (!tag) throw UsageError("unknown family: " + family);
    try {
      switch (*tag) {
        case Family::mb: return make_mb(need_q());
        case Family::arik_coon: return make_arik_coon(need_q());
        case Family::chaturvedi_srinivasan: return make_chaturvedi_srinivasan(need_q());
        case Family::hong_yan: return make_hong_yan(need_q());
        case Family::chakrabarti_jagannathan:
          if (!has_q1 || !has_q2) throw UsageError("chakrabarti-jagannathan needs --q1 and --q2");
          return make_chakrabarti_jagannathan(q1, q2);
        case Family::gen_arik_coon:
          if (!has_q || !has_alpha) throw UsageError("gen-arik-coon needs --q and --alpha");
          return make_gen_arik_coon(q, alpha);
        case Family::gen_mb:
          return make_gen_mb(need_triple());
        case Family::gen_osc:
          return make_gen_osc(need_triple());
        case Family::suq2_gen:
          return make_suq2_gen(need_triple());
      }
    } catch (const DomainError& e) {
      // invalid constants are a usage problem at the command line
      throw UsageError(e.what());
    }
    throw UsageError("unknown family: " + family);
  }

 private:
  double need_q() const {
    if (!has_q) throw UsageError("family " + family + " needs --q");
    return q;
  }
  DeformParams need_triple() const {
    if (has_qprime || has_k) {
      if (has_q || has_alpha || has_beta)
        throw UsageError("(--qprime, --k) and (--q, --alpha, --beta) are mutually exclusive");
      if (!has_qprime || !has_k) throw UsageError("k-form needs both --qprime and --k");
      return DeformParams(qprime, 1.0, k);
    }
    if (!has_q || !has_alpha || !has_beta)
      throw UsageError("family " + family + " needs --q, --alpha, --beta (or --qprime, --k)");
    return DeformParams(q, alpha, beta);
  }
};

std::string params_json(const AlgebraFamily& fam, double nu, double casimir_const) {
  std::vector<std::string> fields;
  if (fam.tag == Family::chakrabarti_jagannathan) {
    fields.push_back(jkv("q1", fmt(fam.q1)));
    fields.push_back(jkv("q2", fmt(fam.q2)));
  } else {
    fields.push_back(jkv("q", fmt(fam.params.q)));
    fields.push_back(jkv("alpha", fmt(fam.params.alpha)));
    fields.push_back(jkv("beta", fmt(fam.params.beta)));
  }
  fields.push_back(jkv("nu", fmt(nu)));
  fields.push_back(jkv("casimir_const", fmt(casimir_const)));
  return jobj(fields);
}

std::string relations_json(const ResidualReport& report) {
  std::vector<std::string> rels;
  for (const auto& r : report.relations) {
    rels.push_back(jobj({jkv("name", jstr(r.name)), jkv("equation", jstr(r.equation)),
                         jkv("max_residual", fmt(r.max_residual)), jkv("pass", jbool(r.pass))}));
  }
  return jarr(rels);
}

std::string report_json(const ResidualReport& report, const std::string& params,
                        const std::string& casimir = "null") {
  return jobj({jkv("family", jstr(report.family)), jkv("params", params),
               jkv("window", jobj({jkv("n0", std::to_string(report.window.n0)),
                                   jkv("dim", std::to_string(report.window.dim))})),
               jkv("tolerance", fmt(report.tolerance)), jkv("relations", relations_json(report)),
               jkv("casimir", casimir), jkv("pass", jbool(report.pass))}) +
         "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical workbench for two-parameter deformed oscillator algebras"};
  app.require_subcommand(1);

  // shared knobs; each subcommand registers the ones it uses
  double tol = env_tolerance();
  std::string out_path;
  std::string format = "json";
  long dim = 16;
  long n0 = 0;
  double nu = 0.0;
  double casimir_const = 0.0;
  bool non_unitary = false;

  auto add_common = [&](CLI::App* cmd, bool with_window = true) {
    cmd->add_option("--tol", tol, "residual tolerance (env QDEFORM_TOL overrides the default)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", out_path, "output path (default: stdout)");
    if (with_window) {
      cmd->add_option("--dim", dim, "window dimension")->check(CLI::Range(2l, 4096l));
      cmd->add_option("--n0", n0, "window start label");
      cmd->add_option("--nu", nu, "spectrum offset nu");
      cmd->add_option("--casimir-const", casimir_const, "casimir label of the representation");
      cmd->add_flag("--non-unitary", non_unitary, "allow negative a†a eigenvalues");
    }
  };

  // bracket -----------------------------------------------------------------
  auto* bracket_cmd = app.add_subcommand("bracket", "scalar bracket evaluations");
  double br_x = 0.0;
  FamilyOpts br_fam;
  bracket_cmd->add_option("--x", br_x, "argument")->required();
  br_fam.attach(bracket_cmd, false);
  add_common(bracket_cmd, false);

  // verify ------------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "family relation residual report");
  FamilyOpts verify_fam;
  verify_fam.attach(verify_cmd, true);
  add_common(verify_cmd);

  // casimir -----------------------------------------------------------------
  auto* casimir_cmd = app.add_subcommand("casimir", "casimir centrality and eigenvalue profile");
  FamilyOpts casimir_fam;
  casimir_fam.attach(casimir_cmd, true);
  add_common(casimir_cmd);

  // transform ---------------------------------------------------------------
  auto* transform_cmd = app.add_subcommand("transform", "dressing reductions and the Q(n) demo");
  std::string tr_case;
  bool tr_solveq = false;
  long tr_nmax = 20;
  FamilyOpts tr_fam;  // --solve-q reads its (qprime, k) pair from here
  transform_cmd->add_option("--case", tr_case,
                            "reduction case: alpha-zero | beta-zero | sum-zero | alpha-eq-beta");
  transform_cmd->add_flag("--solve-q", tr_solveq, "run the dressing-constant demo instead");
  transform_cmd->add_option("--n-max", tr_nmax, "levels for --solve-q");
  tr_fam.attach(transform_cmd, false);
  add_common(transform_cmd);

  // hscan ---------------------------------------------------------------...
  auto* hscan_cmd = app.add_subcommand("hscan", "h(n) obstruction sweep (figure data)");
  double hs_qprime = 1.5, hs_nu = 0.5, hs_kmin = -0.6, hs_kmax = 1.5, hs_kstep = 0.1;
  long hs_nmax = 20;
  hscan_cmd->add_option("--qprime", hs_qprime, "k-form base q'");
  hscan_cmd->add_option("--nu", hs_nu, "spectrum offset");
  hscan_cmd->add_option("--k-min", hs_kmin, "grid start");
  hscan_cmd->add_option("--k-max", hs_kmax, "grid end");
  hscan_cmd->add_option("--k-step", hs_kstep, "grid step")->check(CLI::PositiveNumber);
  hscan_cmd->add_option("--n-max", hs_nmax, "largest level n");
  hscan_cmd->add_option("--format", format, "csv | json");
  add_common(hscan_cmd, false);

  // fscan ---------------------------------------------------------------...
  auto* fscan_cmd = app.add_subcommand("fscan", "inequivalence term F(n, k1, k2) sweep");
  double fs_qprime = 1.5, fs_k1 = 0.5, fs_k2 = -0.3;
  long fs_nmax = 15;
  fscan_cmd->add_option("--qprime", fs_qprime, "k-form base q'")->required();
  fscan_cmd->add_option("--k1", fs_k1, "source k")->required();
  fscan_cmd->add_option("--k2", fs_k2, "target k")->required();
  fscan_cmd->add_option("--n-max", fs_nmax, "largest level n");
  fscan_cmd->add_option("--format", format, "csv | json");
  add_common(fscan_cmd, false);

  // hopf ----------------------------------------------------------------...
  auto* hopf_cmd = app.add_subcommand("hopf", "coproduct consistency scan over k");
  double hp_qprime = 1.2, hp_nu = 0.0;
  long hp_dim = 5;
  std::vector<double> hp_kgrid;
  hopf_cmd->add_option("--qprime", hp_qprime, "k-form base q'");
  hopf_cmd->add_option("--nu", hp_nu, "spectrum offset");
  hopf_cmd->add_option("--dim", hp_dim, "two-site window dimension")->check(CLI::Range(2l, 12l));
  hopf_cmd->add_option("--k-grid", hp_kgrid, "k values to scan")->delimiter(',');
  hopf_cmd->add_option("--format", format, "csv | json");
  add_common(hopf_cmd, false);

  // suq2 ----------------------------------------------------------------...
  auto* suq2_cmd = app.add_subcommand("suq2", "generalized su_q(2) coproduct residual");
  double su_q = 1.5, su_alpha = 1.0, su_beta = -1.0, su_mu = -2.0;
  long su_dim = 5;
  suq2_cmd->add_option("--q", su_q, "base q")->required();
  suq2_cmd->add_option("--alpha", su_alpha, "exponent alpha")->required();
  suq2_cmd->add_option("--beta", su_beta, "exponent beta")->required();
  suq2_cmd->add_option("--mu", su_mu, "lowest-weight offset");
  suq2_cmd->add_option("--dim", su_dim, "two-site window dimension")->check(CLI::Range(2l, 16l));
  add_common(suq2_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: usage: " << e.what() << "\n";
    return 2;
  }

  try {
    // ---- bracket ----
    if (bracket_cmd->parsed()) {
      DeformParams p = [&]() -> DeformParams {
        try {
          if (br_fam.has_qprime || br_fam.has_k) {
            if (!br_fam.has_qprime || !br_fam.has_k)
              throw UsageError("k-form needs both --qprime and --k");
            return DeformParams(br_fam.qprime, 1.0, br_fam.k);
          }
          if (!br_fam.has_q) throw UsageError("bracket needs --q (or --qprime and --k)");
          return DeformParams(br_fam.q, br_fam.has_alpha ? br_fam.alpha : 1.0,
                              br_fam.has_beta ? br_fam.beta : -1.0);
        } catch (const DomainError& e) {
          throw UsageError(e.what());
        }
      }();
      const BracketValue gb = gen_bracket(br_x, p);
      std::vector<std::string> fields;
      fields.push_back(jkv("x", fmt(br_x)));
      fields.push_back(jkv("params", jobj({jkv("q", fmt(p.q)), jkv("alpha", fmt(p.alpha)),
                                           jkv("beta", fmt(p.beta))})));
      fields.push_back(jkv("std_bracket", fmt(std_bracket(br_x, p.q))));
      fields.push_back(jkv(
          "gen_bracket",
          jobj({jkv("value", fmt(gb.value)),
                jkv("branch", jstr(gb.branch == BracketBranch::generic ? "generic"
                                                                       : "degenerate-limit"))})));
      fields.push_back(jkv("delta_bracket", fmt(delta_bracket(br_x, p))));
      fields.push_back(jkv("factorization_residual",
                           p.degenerate() ? "null" : fmt(factorization_residual(br_x, p))));
      fields.push_back(jkv("mb_identity_residual", fmt(mb_identity_residual(br_x, p.q))));
      write_output(out_path, jobj(fields) + "\n");
      return 0;
    }

    // ---- verify ----
    if (verify_cmd->parsed()) {
      const AlgebraFamily fam = verify_fam.build();
      FockRep rep{fam, nu, casimir_const, non_unitary, n0 + dim};
      const ResidualReport report = verify(fam, fock_ops(rep), Window{n0, dim}, tol);
      write_output(out_path, report_json(report, params_json(fam, nu, casimir_const)));
      return report.pass ? 0 : 1;
    }

    // ---- casimir ----
    if (casimir_cmd->parsed()) {
      const AlgebraFamily fam = casimir_fam.build();
      FockRep rep{fam, nu, casimir_const, non_unitary, n0 + dim};
      const OperatorTriple triple = fock_ops(rep);
      const LadderOperator c = casimir_op(fam, triple);
      const Window w{n0, dim};
      const double central = centrality_residual(c, triple, w);
      const auto eigen = casimir_eigenvalue_profile(c, w);
      double lo = eigen.empty() ? 0.0 : eigen.front(), hi = lo;
      std::vector<std::string> evs;
      for (double v : eigen) {
        evs.push_back(fmt(v));
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      const double constancy = hi - lo;
      const bool pass = central < tol && constancy < tol;
      const std::string casimir_json =
          jobj({jkv("eigenvalues", jarr(evs)), jkv("centrality_residual", fmt(central)),
                jkv("constancy", fmt(constancy)), jkv("pass", jbool(pass))});
      ResidualReport shell;
      shell.family = family_name(fam.tag);
      shell.window = w;
      shell.tolerance = tol;
      shell.pass = pass;
      write_output(out_path, report_json(shell, params_json(fam, nu, casimir_const), casimir_json));
      return pass ? 0 : 1;
    }

    // ---- transform ----
    if (transform_cmd->parsed()) {
      if (tr_solveq) {
        if (!tr_fam.has_qprime || !tr_fam.has_k)
          throw UsageError("transform --solve-q needs --qprime and --k");
        const DressingSolveReport rep =
            dressing_solver_demo(tr_fam.qprime, tr_fam.k, nu, tr_nmax, tol);
        std::vector<std::string> rows;
        for (const auto& row : rep.q_rows)
          rows.push_back(jobj({jkv("n", std::to_string(row.n)),
                               jkv("Q", row.ok ? fmt(row.h) : "null"),
                               jkv("ok", jbool(row.ok))}));
        write_output(out_path,
                     jobj({jkv("qprime", fmt(rep.qprime)), jkv("k", fmt(rep.k)),
                           jkv("nu", fmt(rep.nu)), jkv("q_values", jarr(rows)),
                           jkv("spread", fmt(rep.spread)),
                           jkv("mb_equivalent", jbool(rep.mb_equivalent))}) +
                         "\n");
        return 0;
      }
      ReductionCase which;
      if (tr_case == "alpha-zero") which = ReductionCase::alpha_zero;
      else if (tr_case == "beta-zero") which = ReductionCase::beta_zero;
      else if (tr_case == "sum-zero") which = ReductionCase::sum_zero;
      else if (tr_case == "alpha-eq-beta") which = ReductionCase::alpha_eq_beta;
      else throw UsageError("transform needs --case or --solve-q");
      if (!tr_fam.has_q || !tr_fam.has_alpha || !tr_fam.has_beta)
        throw UsageError("transform --case needs --q, --alpha, --beta");
      DeformParams p = [&] {
        try {
          return DeformParams(tr_fam.q, tr_fam.alpha, tr_fam.beta);
        } catch (const DomainError& e) {
          throw UsageError(e.what());
        }
      }();
      const ResidualReport report = reduction_check(which, p, Window{n0, dim}, nu, casimir_const, tol);
      const std::string body = report_json(report, params_json(make_gen_osc(p), nu, casimir_const));
      // prepend the case tag for traceability
      write_output(out_path, jobj({jkv("case", jstr(tr_case)), jkv("report", body.substr(0, body.size() - 1))}) + "\n");
      return report.pass ? 0 : 1;
    }

    // ---- hscan ----
    if (hscan_cmd->parsed()) {
      std::vector<double> grid;
      const long steps = std::lround((hs_kmax - hs_kmin) / hs_kstep);
      for (long i = 0; i <= steps; ++i) {
        double k = hs_kmin + hs_kstep * i;
        if (std::abs(k) < 1e-12) k = 0.0;  // keep the k = 0 row exact
        grid.push_back(k);
      }
      const HScanResult result = h_scan(hs_qprime, grid, hs_nu, hs_nmax);
      if (format == "csv") {
        std::ostringstream csv;
        csv << "k,n,h\n";
        for (const auto& row : result.rows)
          csv << fmt(row.k) << "," << row.n << "," << (row.ok ? fmt(row.h) : "nan") << "\n";
        write_output(out_path, csv.str());
      } else {
        std::vector<std::string> rows, sums;
        for (const auto& row : result.rows)
          rows.push_back(jobj({jkv("k", fmt(row.k)), jkv("n", std::to_string(row.n)),
                               jkv("h", row.ok ? fmt(row.h) : "null"), jkv("ok", jbool(row.ok))}));
        for (const auto& s : result.summaries)
          sums.push_back(jobj({jkv("k", fmt(s.k)), jkv("valid_points", std::to_string(s.valid_points)),
                               jkv("variation", fmt(s.variation)),
                               jkv("max_abs_slope", fmt(s.max_abs_slope))}));
        write_output(out_path, jobj({jkv("qprime", fmt(hs_qprime)), jkv("nu", fmt(hs_nu)),
                                     jkv("rows", jarr(rows)), jkv("summaries", jarr(sums))}) +
                                   "\n");
      }
      return 0;
    }

    // ---- fscan ----
    if (fscan_cmd->parsed()) {
      if (!(fs_qprime > 0.0)) throw UsageError("fscan: qprime must be positive");
      std::ostringstream csv;
      std::vector<std::string> rows;
      csv << "n,F\n";
      for (long n = 0; n <= fs_nmax; ++n) {
        const double F = f_obstruction_term(static_cast<double>(n), fs_qprime, fs_k1, fs_k2);
        csv << n << "," << fmt(F) << "\n";
        rows.push_back(jobj({jkv("n", std::to_string(n)), jkv("F", fmt(F))}));
      }
      if (format == "csv") write_output(out_path, csv.str());
      else
        write_output(out_path, jobj({jkv("qprime", fmt(fs_qprime)), jkv("k1", fmt(fs_k1)),
                                     jkv("k2", fmt(fs_k2)), jkv("rows", jarr(rows))}) +
                                   "\n");
      return 0;
    }

    // ---- hopf ----
    if (hopf_cmd->parsed()) {
      if (hp_kgrid.empty()) hp_kgrid = {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0};
      const auto cells = hopf_scan(hp_qprime, hp_kgrid, hp_nu, hp_dim);
      if (format == "csv") {
        std::ostringstream csv;
        csv << "k,residual,alpha1,alpha2,alpha3,alpha4,gamma,gamma_im\n";
        for (const auto& cell : cells)
          csv << fmt(cell.k) << "," << fmt(cell.min_residual) << "," << fmt(cell.best.alpha1)
              << "," << fmt(cell.best.alpha2) << "," << fmt(cell.best.alpha3) << ","
              << fmt(cell.best.alpha4) << "," << fmt(cell.best.gamma.real()) << ","
              << fmt(cell.best.gamma.imag()) << "\n";
        write_output(out_path, csv.str());
      } else {
        std::vector<std::string> rows;
        for (const auto& cell : cells)
          rows.push_back(jobj(
              {jkv("k", fmt(cell.k)), jkv("residual", fmt(cell.min_residual)),
               jkv("alpha1", fmt(cell.best.alpha1)), jkv("alpha2", fmt(cell.best.alpha2)),
               jkv("alpha3", fmt(cell.best.alpha3)), jkv("alpha4", fmt(cell.best.alpha4)),
               jkv("gamma", fmt(cell.best.gamma.real())),
               jkv("gamma_im", fmt(cell.best.gamma.imag())),
               jkv("converged", jbool(cell.converged))}));
        write_output(out_path, jobj({jkv("qprime", fmt(hp_qprime)), jkv("nu", fmt(hp_nu)),
                                     jkv("dim", std::to_string(hp_dim)), jkv("cells", jarr(rows))}) +
                                   "\n");
      }
      return 0;
    }

    // ---- suq2 ----
    if (suq2_cmd->parsed()) {
      DeformParams p = [&] {
        try {
          return DeformParams(su_q, su_alpha, su_beta);
        } catch (const DomainError& e) {
          throw UsageError(e.what());
        }
      }();
      double s_best = 0.0;
      const double residual = suq2_homomorphism_residual(p, su_mu, su_dim, &s_best);
      const bool pass = residual < tol;
      write_output(out_path, jobj({jkv("q", fmt(su_q)), jkv("alpha", fmt(su_alpha)),
                                   jkv("beta", fmt(su_beta)), jkv("mu", fmt(su_mu)),
                                   jkv("dim", std::to_string(su_dim)), jkv("residual", fmt(residual)),
                                   jkv("s_best", fmt(s_best)), jkv("tolerance", fmt(tol)),
                                   jkv("pass", jbool(pass))}) +
                                 "\n");
      return pass ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: domain: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
