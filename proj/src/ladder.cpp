#include "qdeform/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qdeform {

LadderOperator LadderOperator::identity() {
  return diagonal([](long) { return Amplitude(1.0, 0.0); });
}

LadderOperator LadderOperator::shift(int degree, CoeffRule rule) {
  LadderOperator o;
  o.terms_[degree] = std::move(rule);
  return o;
}

LadderOperator LadderOperator::diagonal(CoeffRule rule) { return shift(0, std::move(rule)); }

LadderOperator LadderOperator::from_terms(std::map<int, CoeffRule> terms) {
  LadderOperator o;
  o.terms_ = std::move(terms);
  return o;
}

Amplitude LadderOperator::coeff(int degree, long n) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? Amplitude(0.0) : it->second(n);
}

int LadderOperator::max_abs_degree() const {
  int m = 0;
  for (const auto& [d, rule] : terms_) m = std::max(m, std::abs(d));
  return m;
}

LadderOperator func_of_N(std::function<double(double)> f, double nu) {
  return LadderOperator::diagonal(
      [f = std::move(f), nu](long n) { return Amplitude(f(static_cast<double>(n) + nu), 0.0); });
}

LadderOperator func_of_number_op(std::function<Amplitude(double)> f, const LadderOperator& nop) {
  if (nop.terms().size() != 1 || !nop.has_term(0))
    throw std::invalid_argument("func_of_number_op needs a diagonal operator");
  CoeffRule spectrum = nop.terms().at(0);
  return LadderOperator::diagonal(
      [f = std::move(f), spectrum](long n) { return f(spectrum(n).real()); });
}

LadderOperator compose(const LadderOperator& o1, const LadderOperator& o2) {
  // term at degree e+d applies o2's rule at n, then o1's rule at n+d
  using Factor = std::pair<int, std::pair<CoeffRule, CoeffRule>>;
  std::map<int, std::vector<Factor>> cells;
  for (const auto& [e, r1] : o1.terms())
    for (const auto& [d, r2] : o2.terms()) cells[e + d].push_back({d, {r1, r2}});

  std::map<int, CoeffRule> terms;
  for (auto& [total, factors] : cells) {
    if (factors.size() == 1) {
      const int d = factors[0].first;
      terms[total] = [d, r1 = factors[0].second.first, r2 = factors[0].second.second](long n) {
        return r1(n + d) * r2(n);
      };
    } else {
      terms[total] = [factors](long n) {
        Amplitude s(0.0);
        for (const auto& [d, fr] : factors) s += fr.first(n + d) * fr.second(n);
        return s;
      };
    }
  }
  return LadderOperator::from_terms(std::move(terms));
}

LadderOperator linear_combine(const std::vector<Amplitude>& coeffs,
                              const std::vector<LadderOperator>& ops) {
  if (coeffs.size() != ops.size()) throw std::invalid_argument("linear_combine: size mismatch");
  std::map<int, std::vector<std::pair<Amplitude, CoeffRule>>> cells;
  for (size_t i = 0; i < ops.size(); ++i) {
    if (coeffs[i] == Amplitude(0.0)) continue;  // pruned
    for (const auto& [d, rule] : ops[i].terms()) cells[d].push_back({coeffs[i], rule});
  }
  std::map<int, CoeffRule> terms;
  for (auto& [d, weighted] : cells) {
    if (weighted.size() == 1 && weighted[0].first == Amplitude(1.0)) {
      terms[d] = weighted[0].second;
    } else {
      terms[d] = [weighted](long n) {
        Amplitude s(0.0);
        for (const auto& [c, rule] : weighted) s += c * rule(n);
        return s;
      };
    }
  }
  return LadderOperator::from_terms(std::move(terms));
}

LadderOperator commutator(const LadderOperator& o1, const LadderOperator& o2) {
  return linear_combine({1.0, -1.0}, {compose(o1, o2), compose(o2, o1)});
}

LadderOperator operator+(const LadderOperator& a, const LadderOperator& b) {
  return linear_combine({1.0, 1.0}, {a, b});
}

LadderOperator operator-(const LadderOperator& a, const LadderOperator& b) {
  return linear_combine({1.0, -1.0}, {a, b});
}

LadderOperator operator*(Amplitude c, const LadderOperator& o) { return linear_combine({c}, {o}); }

std::vector<std::pair<long, Amplitude>> apply(const LadderOperator& o, long n) {
  if (n < 0) throw std::invalid_argument("apply: basis label must be >= 0");
  std::vector<std::pair<long, Amplitude>> out;
  for (const auto& [d, rule] : o.terms()) {
    const long target = n + d;
    if (target < 0) continue;  // annihilated below the lowest state
    const Amplitude amp = rule(n);
    if (amp == Amplitude(0.0)) continue;
    out.push_back({target, amp});
  }
  return out;
}

DenseMatrix matrix_window(const LadderOperator& o, long n0, long dim) {
  if (dim <= 0) throw std::invalid_argument("matrix_window: dim must be positive");
  DenseMatrix m(dim, dim);
  for (const auto& [d, rule] : o.terms()) {
    for (long j = 0; j < dim; ++j) {
      const long i = j + d;
      if (i < 0 || i >= dim) continue;
      m(i, j) += rule(n0 + j);
    }
  }
  return m;
}

double max_rel_cell_diff(const LadderOperator& o1, const LadderOperator& o2, long n0, long dim) {
  double worst = 0.0;
  auto scan = [&](int d) {
    for (long n = n0; n < n0 + dim; ++n) {
      const Amplitude a = o1.coeff(d, n);
      const Amplitude b = o2.coeff(d, n);
      const double scale = std::max({1.0, std::abs(a), std::abs(b)});
      worst = std::max(worst, std::abs(a - b) / scale);
    }
  };
  for (const auto& [d, rule] : o1.terms()) scan(d);
  for (const auto& [d, rule] : o2.terms())
    if (!o1.has_term(d)) scan(d);
  return worst;
}

}  // namespace qdeform
