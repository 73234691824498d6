#include "qdeform/families.hpp"

#include <cmath>
#include <string>

namespace qdeform {

namespace {

const struct {
  Family tag;
  const char* name;
} kFamilyNames[] = {
    {Family::mb, "mb"},
    {Family::arik_coon, "arik-coon"},
    {Family::chaturvedi_srinivasan, "chaturvedi-srinivasan"},
    {Family::chakrabarti_jagannathan, "chakrabarti-jagannathan"},
    {Family::gen_mb, "gen-mb"},
    {Family::hong_yan, "hong-yan"},
    {Family::gen_osc, "gen-osc"},
    {Family::gen_arik_coon, "gen-arik-coon"},
    {Family::suq2_gen, "suq2-gen"},
};

}  // namespace

const char* family_name(Family f) {
  for (const auto& e : kFamilyNames)
    if (e.tag == f) return e.name;
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  for (const auto& e : kFamilyNames)
    if (name == e.name) return e.tag;
  return std::nullopt;
}

AlgebraFamily make_mb(double q) { return {Family::mb, DeformParams(q, 1.0, -1.0)}; }

AlgebraFamily make_arik_coon(double q) { return {Family::arik_coon, DeformParams(q, 1.0, 0.0)}; }

AlgebraFamily make_chaturvedi_srinivasan(double q) {
  return {Family::chaturvedi_srinivasan, DeformParams(q, 0.0, -1.0)};
}

AlgebraFamily make_chakrabarti_jagannathan(double q1, double q2) {
  if (!(q1 > 0.0) || !(q2 > 0.0))
    throw DomainError("chakrabarti-jagannathan parameters must be positive");
  const double e = std::exp(1.0);
  AlgebraFamily fam{Family::chakrabarti_jagannathan,
                    DeformParams(e, std::log(q1), -std::log(q2))};
  fam.q1 = q1;
  fam.q2 = q2;
  return fam;
}

AlgebraFamily make_gen_mb(const DeformParams& p) { return {Family::gen_mb, p}; }

AlgebraFamily make_hong_yan(double q) { return {Family::hong_yan, DeformParams(q, 1.0, -1.0)}; }

AlgebraFamily make_gen_osc(const DeformParams& p) { return {Family::gen_osc, p}; }

AlgebraFamily make_gen_arik_coon(double q, double alpha) {
  return {Family::gen_arik_coon, DeformParams(q, alpha, alpha)};
}

AlgebraFamily make_suq2_gen(const DeformParams& p) { return {Family::suq2_gen, p}; }

double FockRep::lambda(long n) const {
  const DeformParams& p = family.params;
  const double x = static_cast<double>(n) + nu;
  switch (family.tag) {
    case Family::hong_yan:
    case Family::gen_osc:
      return gen_bracket_value(x, p) + casimir_const;
    case Family::gen_arik_coon:
      return x + casimir_const * std::pow(p.q, -p.alpha * (x - 1.0));
    case Family::suq2_gen: {
      // Lambda(0) = 0; Lambda(m+1) = Lambda(m) - [2(m+mu)], extended both ways
      double acc = 0.0;
      if (n >= 0) {
        for (long j = 0; j < n; ++j)
          acc -= gen_bracket_value(2.0 * (static_cast<double>(j) + nu), p);
      } else {
        for (long j = n; j < 0; ++j)
          acc += gen_bracket_value(2.0 * (static_cast<double>(j) + nu), p);
      }
      return acc;
    }
    default:  // MB-like
      return gen_bracket_value(x, p) + casimir_const * std::pow(p.q, p.alpha * x);
  }
}

Amplitude FockRep::sqrt_lambda(long n) const {
  const double v = lambda(n);
  if (v >= 0.0) return Amplitude(std::sqrt(v), 0.0);
  return Amplitude(0.0, std::sqrt(-v));
}

OperatorTriple fock_ops(const FockRep& rep) {
  if (!rep.allow_nonunitary) {
    for (long n = 0; n <= rep.unitarity_check_dim; ++n) {
      if (rep.lambda(n) < 0.0)
        throw NonUnitaryError("non-unitary representation: lambda(" + std::to_string(n) +
                              ") = " + std::to_string(rep.lambda(n)) + " < 0");
    }
  }
  OperatorTriple t;
  t.a = LadderOperator::shift(-1, [rep](long n) { return rep.sqrt_lambda(n); });
  t.adag = LadderOperator::shift(+1, [rep](long n) { return rep.sqrt_lambda(n + 1); });
  t.nop = func_of_N([](double x) { return x; }, rep.nu);
  return t;
}

namespace {

// diagonal f(N) built from the triple's own number operator
LadderOperator diag_fn(const OperatorTriple& t, std::function<double(double)> f) {
  return func_of_number_op([f = std::move(f)](double x) { return Amplitude(f(x), 0.0); }, t.nop);
}

Relation number_raising(const char* gen = "adag", const char* num = "N") {
  Relation rel;
  rel.name = "number-raising";
  rel.equation = "[" + std::string(num) + ", " + gen + "] = " + gen;
  rel.lhs_terms = {[](const OperatorTriple& t) { return compose(t.nop, t.adag); },
                   [](const OperatorTriple& t) { return Amplitude(-1.0) * compose(t.adag, t.nop); }};
  rel.rhs_terms = {[](const OperatorTriple& t) { return t.adag; }};
  return rel;
}

Relation number_lowering(const char* gen = "a", const char* num = "N") {
  Relation rel;
  rel.name = "number-lowering";
  rel.equation = "[" + std::string(num) + ", " + gen + "] = -" + gen;
  rel.lhs_terms = {[](const OperatorTriple& t) { return compose(t.nop, t.a); },
                   [](const OperatorTriple& t) { return Amplitude(-1.0) * compose(t.a, t.nop); }};
  rel.rhs_terms = {[](const OperatorTriple& t) { return Amplitude(-1.0) * t.a; }};
  return rel;
}

}  // namespace

LadderOperator Relation::lhs(const OperatorTriple& t) const {
  LadderOperator out;
  for (const auto& term : lhs_terms) out = out + term(t);
  return out;
}

LadderOperator Relation::rhs(const OperatorTriple& t) const {
  LadderOperator out;
  for (const auto& term : rhs_terms) out = out + term(t);
  return out;
}

std::vector<Relation> relations_for(const AlgebraFamily& fam) {
  const DeformParams p = fam.params;
  std::vector<Relation> rels;

  if (fam.tag == Family::suq2_gen) {
    rels.push_back(number_raising("J+", "J0"));
    rels.push_back(number_lowering("J-", "J0"));
    Relation ladder;
    ladder.name = "ladder-bracket";
    ladder.equation = "[J+, J-] = [2 J0]_{a,b}";
    ladder.lhs_terms = {
        [](const OperatorTriple& t) { return compose(t.adag, t.a); },
        [](const OperatorTriple& t) { return Amplitude(-1.0) * compose(t.a, t.adag); }};
    ladder.rhs_terms = {[p](const OperatorTriple& t) {
      return diag_fn(t, [p](double x) { return gen_bracket_value(2.0 * x, p); });
    }};
    rels.push_back(std::move(ladder));
    return rels;
  }

  rels.push_back(number_raising());
  rels.push_back(number_lowering());

  switch (fam.tag) {
    case Family::hong_yan:
    case Family::gen_osc: {
      Relation rel;
      rel.name = "bracket-commutator";
      rel.equation = fam.tag == Family::hong_yan ? "[a, adag] = [N+1] - [N]"
                                                 : "[a, adag] = [N+1]_{a,b} - [N]_{a,b}";
      rel.lhs_terms = {
          [](const OperatorTriple& t) { return compose(t.a, t.adag); },
          [](const OperatorTriple& t) { return Amplitude(-1.0) * compose(t.adag, t.a); }};
      rel.rhs_terms = {[p](const OperatorTriple& t) {
        return diag_fn(t, [p](double x) { return delta_bracket(x, p); });
      }};
      rels.push_back(std::move(rel));
      break;
    }
    case Family::gen_arik_coon: {
      const double Q = std::pow(p.q, -p.alpha);
      Relation rel;
      rel.name = "deformed-product";
      rel.equation = "a adag - Q adag a = 1 + N (1 - Q)";
      rel.lhs_terms = {
          [](const OperatorTriple& t) { return compose(t.a, t.adag); },
          [Q](const OperatorTriple& t) { return Amplitude(-Q) * compose(t.adag, t.a); }};
      rel.rhs_terms = {[Q](const OperatorTriple& t) {
        return diag_fn(t, [Q](double x) { return 1.0 + x * (1.0 - Q); });
      }};
      rels.push_back(std::move(rel));
      break;
    }
    default: {  // MB-like: a adag - q^alpha adag a = q^(beta N)
      Relation rel;
      rel.name = "deformed-product";
      switch (fam.tag) {
        case Family::mb: rel.equation = "a adag - q adag a = q^(-N)"; break;
        case Family::arik_coon: rel.equation = "a adag - q adag a = 1"; break;
        case Family::chaturvedi_srinivasan: rel.equation = "a adag - adag a = q^(-N)"; break;
        case Family::chakrabarti_jagannathan: rel.equation = "a adag - q1 adag a = q2^(-N)"; break;
        default: rel.equation = "a adag - q^a adag a = q^(b N)"; break;
      }
      const double qa = std::pow(p.q, p.alpha);
      rel.lhs_terms = {
          [](const OperatorTriple& t) { return compose(t.a, t.adag); },
          [qa](const OperatorTriple& t) { return Amplitude(-qa) * compose(t.adag, t.a); }};
      rel.rhs_terms = {[p](const OperatorTriple& t) {
        return diag_fn(t, [p](double x) { return std::pow(p.q, p.beta * x); });
      }};
      rels.push_back(std::move(rel));
      break;
    }
  }
  return rels;
}

}  // namespace qdeform
