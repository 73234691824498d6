#include "qdeform/tensorop.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qdeform {

TensorOperator TensorOperator::term(int d1, int d2, CoeffRule2 rule) {
  TensorOperator o;
  o.terms_[{d1, d2}] = std::move(rule);
  return o;
}

TensorOperator TensorOperator::from_terms(std::map<std::pair<int, int>, CoeffRule2> terms) {
  TensorOperator o;
  o.terms_ = std::move(terms);
  return o;
}

Amplitude TensorOperator::coeff(int d1, int d2, long n1, long n2) const {
  auto it = terms_.find({d1, d2});
  return it == terms_.end() ? Amplitude(0.0) : it->second(n1, n2);
}

TensorOperator tensor_product(const LadderOperator& o1, const LadderOperator& o2) {
  std::map<std::pair<int, int>, CoeffRule2> terms;
  for (const auto& [d1, r1] : o1.terms())
    for (const auto& [d2, r2] : o2.terms())
      terms[{d1, d2}] = [r1, r2](long n1, long n2) { return r1(n1) * r2(n2); };
  return TensorOperator::from_terms(std::move(terms));
}

TensorOperator joint_diagonal(CoeffRule2 g) { return TensorOperator::term(0, 0, std::move(g)); }

TensorOperator compose(const TensorOperator& o1, const TensorOperator& o2) {
  using Key = std::pair<int, int>;
  using Factor = std::pair<Key, std::pair<CoeffRule2, CoeffRule2>>;
  std::map<Key, std::vector<Factor>> cells;
  for (const auto& [e, r1] : o1.terms())
    for (const auto& [d, r2] : o2.terms())
      cells[{e.first + d.first, e.second + d.second}].push_back({d, {r1, r2}});

  std::map<Key, CoeffRule2> terms;
  for (auto& [total, factors] : cells) {
    terms[total] = [factors](long n1, long n2) {
      Amplitude s(0.0);
      for (const auto& [d, fr] : factors)
        s += fr.first(n1 + d.first, n2 + d.second) * fr.second(n1, n2);
      return s;
    };
  }
  return TensorOperator::from_terms(std::move(terms));
}

namespace {

TensorOperator combine2(Amplitude ca, const TensorOperator& a, Amplitude cb,
                        const TensorOperator& b) {
  std::map<std::pair<int, int>, std::vector<std::pair<Amplitude, CoeffRule2>>> cells;
  if (ca != Amplitude(0.0))
    for (const auto& [d, r] : a.terms()) cells[d].push_back({ca, r});
  if (cb != Amplitude(0.0))
    for (const auto& [d, r] : b.terms()) cells[d].push_back({cb, r});
  std::map<std::pair<int, int>, CoeffRule2> terms;
  for (auto& [d, weighted] : cells) {
    if (weighted.size() == 1 && weighted[0].first == Amplitude(1.0)) {
      terms[d] = weighted[0].second;
    } else {
      terms[d] = [weighted](long n1, long n2) {
        Amplitude s(0.0);
        for (const auto& [c, r] : weighted) s += c * r(n1, n2);
        return s;
      };
    }
  }
  return TensorOperator::from_terms(std::move(terms));
}

}  // namespace

TensorOperator commutator(const TensorOperator& o1, const TensorOperator& o2) {
  return combine2(1.0, compose(o1, o2), -1.0, compose(o2, o1));
}

TensorOperator operator+(const TensorOperator& a, const TensorOperator& b) {
  return combine2(1.0, a, 1.0, b);
}

TensorOperator operator-(const TensorOperator& a, const TensorOperator& b) {
  return combine2(1.0, a, -1.0, b);
}

TensorOperator operator*(Amplitude c, const TensorOperator& o) {
  return combine2(c, o, 0.0, TensorOperator());
}

std::vector<std::pair<std::pair<long, long>, Amplitude>> apply(const TensorOperator& o, long n1,
                                                               long n2) {
  if (n1 < 0 || n2 < 0) throw std::invalid_argument("apply: basis labels must be >= 0");
  std::vector<std::pair<std::pair<long, long>, Amplitude>> out;
  for (const auto& [d, rule] : o.terms()) {
    const long t1 = n1 + d.first;
    const long t2 = n2 + d.second;
    if (t1 < 0 || t2 < 0) continue;
    const Amplitude amp = rule(n1, n2);
    if (amp == Amplitude(0.0)) continue;
    out.push_back({{t1, t2}, amp});
  }
  return out;
}

double max_abs_on_window(const TensorOperator& o, long n0, long dim) {
  double worst = 0.0;
  for (const auto& [d, rule] : o.terms())
    for (long n1 = n0; n1 < n0 + dim; ++n1)
      for (long n2 = n0; n2 < n0 + dim; ++n2) worst = std::max(worst, std::abs(rule(n1, n2)));
  return worst;
}

DenseMatrix matrix_window(const TensorOperator& o, long n0, long dim) {
  DenseMatrix m(dim * dim, dim * dim);
  for (const auto& [d, rule] : o.terms()) {
    for (long j1 = 0; j1 < dim; ++j1) {
      const long i1 = j1 + d.first;
      if (i1 < 0 || i1 >= dim) continue;
      for (long j2 = 0; j2 < dim; ++j2) {
        const long i2 = j2 + d.second;
        if (i2 < 0 || i2 >= dim) continue;
        m(i1 * dim + i2, j1 * dim + j2) += rule(n0 + j1, n0 + j2);
      }
    }
  }
  return m;
}

TensorOperator3 TensorOperator3::term(int d1, int d2, int d3, CoeffRule3 rule) {
  TensorOperator3 o;
  o.terms_[{d1, d2, d3}] = std::move(rule);
  return o;
}

TensorOperator3 TensorOperator3::from_terms(std::map<std::array<int, 3>, CoeffRule3> terms) {
  TensorOperator3 o;
  o.terms_ = std::move(terms);
  return o;
}

namespace {

TensorOperator3 combine3(Amplitude ca, const TensorOperator3& a, Amplitude cb,
                         const TensorOperator3& b) {
  std::map<std::array<int, 3>, std::vector<std::pair<Amplitude, CoeffRule3>>> cells;
  if (ca != Amplitude(0.0))
    for (const auto& [d, r] : a.terms()) cells[d].push_back({ca, r});
  if (cb != Amplitude(0.0))
    for (const auto& [d, r] : b.terms()) cells[d].push_back({cb, r});
  std::map<std::array<int, 3>, CoeffRule3> terms;
  for (auto& [d, weighted] : cells) {
    if (weighted.size() == 1 && weighted[0].first == Amplitude(1.0)) {
      terms[d] = weighted[0].second;
    } else {
      terms[d] = [weighted](long n1, long n2, long n3) {
        Amplitude s(0.0);
        for (const auto& [c, r] : weighted) s += c * r(n1, n2, n3);
        return s;
      };
    }
  }
  return TensorOperator3::from_terms(std::move(terms));
}

}  // namespace

TensorOperator3 operator+(const TensorOperator3& a, const TensorOperator3& b) {
  return combine3(1.0, a, 1.0, b);
}

TensorOperator3 operator-(const TensorOperator3& a, const TensorOperator3& b) {
  return combine3(1.0, a, -1.0, b);
}

TensorOperator3 operator*(Amplitude c, const TensorOperator3& o) {
  return combine3(c, o, 0.0, TensorOperator3());
}

double max_abs_on_window(const TensorOperator3& o, long n0, long dim) {
  double worst = 0.0;
  for (const auto& [d, rule] : o.terms())
    for (long n1 = n0; n1 < n0 + dim; ++n1)
      for (long n2 = n0; n2 < n0 + dim; ++n2)
        for (long n3 = n0; n3 < n0 + dim; ++n3)
          worst = std::max(worst, std::abs(rule(n1, n2, n3)));
  return worst;
}

}  // namespace qdeform
