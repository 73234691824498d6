#include "qdeform/verify.hpp"

#include <cmath>
#include <set>

namespace qdeform {

double relation_residual(const Relation& rel, const OperatorTriple& triple, Window w) {
  std::vector<LadderOperator> lhs, rhs;
  lhs.reserve(rel.lhs_terms.size());
  rhs.reserve(rel.rhs_terms.size());
  std::set<int> degrees;
  for (const auto& term : rel.lhs_terms) {
    lhs.push_back(term(triple));
    for (const auto& [d, rule] : lhs.back().terms()) degrees.insert(d);
  }
  for (const auto& term : rel.rhs_terms) {
    rhs.push_back(term(triple));
    for (const auto& [d, rule] : rhs.back().terms()) degrees.insert(d);
  }

  double worst = 0.0;
  for (long n = w.n0; n < w.n0 + w.dim; ++n) {
    for (int d : degrees) {
      Amplitude left(0.0), right(0.0);
      double scale = 1.0;
      for (const auto& op : lhs) {
        const Amplitude v = op.coeff(d, n);
        left += v;
        scale = std::max(scale, std::abs(v));
      }
      for (const auto& op : rhs) {
        const Amplitude v = op.coeff(d, n);
        right += v;
        scale = std::max(scale, std::abs(v));
      }
      worst = std::max(worst, std::abs(left - right) / scale);
    }
  }
  return worst;
}

ResidualReport verify(const AlgebraFamily& fam, const OperatorTriple& triple, Window w,
                      double tolerance) {
  ResidualReport report;
  report.family = family_name(fam.tag);
  report.window = w;
  report.tolerance = tolerance;
  report.pass = true;
  for (const Relation& rel : relations_for(fam)) {
    RelationResidual r;
    r.name = rel.name;
    r.equation = rel.equation;
    r.max_residual = relation_residual(rel, triple, w);
    r.pass = r.max_residual < tolerance;
    report.pass = report.pass && r.pass;
    report.relations.push_back(std::move(r));
  }
  return report;
}

LadderOperator casimir_op(const AlgebraFamily& fam, const OperatorTriple& triple) {
  const DeformParams p = fam.params;
  auto diag = [&](std::function<double(double)> f) {
    return func_of_number_op(
        [f = std::move(f)](double x) { return Amplitude(f(x), 0.0); }, triple.nop);
  };
  const LadderOperator number_product = compose(triple.adag, triple.a);

  switch (fam.tag) {
    case Family::hong_yan:
      return number_product - diag([p](double x) { return gen_bracket_value(x, p); });
    case Family::gen_osc: {
      const double pref = std::pow(p.q, 0.5 * (p.alpha + p.beta));
      return Amplitude(pref) *
             (number_product - diag([p](double x) { return gen_bracket_value(x, p); }));
    }
    case Family::gen_arik_coon: {
      const LadderOperator inner = number_product - diag([](double x) { return x; });
      return compose(diag([p](double x) { return std::pow(p.q, p.alpha * (x - 1.0)); }), inner);
    }
    case Family::suq2_gen:
      throw DomainError("no casimir element registered for family suq2-gen");
    default: {  // MB-like
      const LadderOperator inner =
          number_product - diag([p](double x) { return gen_bracket_value(x, p); });
      return compose(diag([p](double x) { return std::pow(p.q, -p.alpha * x); }), inner);
    }
  }
}

double centrality_residual(const LadderOperator& c, const OperatorTriple& triple, Window w) {
  double worst = 0.0;
  for (const LadderOperator* g : {&triple.a, &triple.adag, &triple.nop}) {
    const LadderOperator comm = commutator(c, *g);
    for (long n = w.n0; n < w.n0 + w.dim; ++n) {
      if (n < 0) continue;
      for (const auto& [label, amp] : apply(comm, n)) worst = std::max(worst, std::abs(amp));
    }
  }
  return worst;
}

std::vector<double> casimir_eigenvalue_profile(const LadderOperator& c, Window w) {
  std::vector<double> out;
  out.reserve(w.dim);
  for (long n = w.n0; n < w.n0 + w.dim; ++n) out.push_back(c.coeff(0, n).real());
  return out;
}

}  // namespace qdeform
