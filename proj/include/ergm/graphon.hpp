#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstddef>
#include <vector>

#include "ergm/errors.hpp"

namespace ergm {

using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline bool weights_sum_to_one(double sum) { return std::abs(sum - 1.0) <= 1e-12; }
inline bool weights_sum_to_one(const Rational& sum) { return sum == 1; }

}  // namespace detail

// Graphon that is constant on the blocks of a finite partition of [0, 1].
// Scalar is double or Rational; with Rational every density is exact.
template <class Scalar>
class BasicStepGraphon {
 public:
  BasicStepGraphon(std::vector<Scalar> weights, std::vector<std::vector<Scalar>> values)
      : weights_(std::move(weights)), values_(std::move(values)) {
    const std::size_t n = weights_.size();
    if (n == 0) throw DomainError("step graphon: no blocks");
    if (values_.size() != n) throw DomainError("step graphon: value matrix does not match weights");
    Scalar total = 0;
    for (const Scalar& w : weights_) {
      if (!(w > 0)) throw DomainError("step graphon: block weights must be positive");
      total += w;
    }
    if (!detail::weights_sum_to_one(total)) throw DomainError("step graphon: weights must sum to 1");
    for (std::size_t i = 0; i < n; ++i) {
      if (values_[i].size() != n) throw DomainError("step graphon: value matrix must be square");
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& v = values_[i][j];
        if (v < 0 || v > 1) throw DomainError("step graphon: values must lie in [0, 1]");
        if (j < i && v != values_[j][i]) throw DomainError("step graphon: value matrix must be symmetric");
      }
    }
  }

  std::size_t blocks() const { return weights_.size(); }
  const std::vector<Scalar>& weights() const { return weights_; }
  const Scalar& value(std::size_t i, std::size_t j) const { return values_[i][j]; }
  const std::vector<std::vector<Scalar>>& values() const { return values_; }

 private:
  std::vector<Scalar> weights_;
  std::vector<std::vector<Scalar>> values_;
};

using StepGraphon = BasicStepGraphon<double>;
using RationalStepGraphon = BasicStepGraphon<Rational>;

// k equal classes, 0 inside a class and 1 across; k = 1 is the zero graphon.
template <class Scalar = double>
BasicStepGraphon<Scalar> turan_graphon(int k) {
  if (k < 1) throw DomainError("turan_graphon: k must be >= 1");
  const auto n = static_cast<std::size_t>(k);
  std::vector<Scalar> weights(n, Scalar(1) / Scalar(k));
  std::vector<std::vector<Scalar>> values(n, std::vector<Scalar>(n, Scalar(1)));
  for (std::size_t i = 0; i < n; ++i) values[i][i] = 0;
  return BasicStepGraphon<Scalar>(std::move(weights), std::move(values));
}

template <class Scalar = double>
BasicStepGraphon<Scalar> constant_graphon(Scalar p) {
  return BasicStepGraphon<Scalar>({Scalar(1)}, {{p}});
}

// Indicator of [0, side]^2 with 0 < side < 1.
template <class Scalar = double>
BasicStepGraphon<Scalar> box_graphon(Scalar side) {
  if (!(side > 0 && side < 1)) throw DomainError("box_graphon: side must lie in (0, 1)");
  return BasicStepGraphon<Scalar>({side, Scalar(1) - side}, {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(0)}});
}

template <class Scalar>
BasicStepGraphon<Scalar> scale_graphon(const BasicStepGraphon<Scalar>& g, Scalar p) {
  if (p < 0 || p > 1) throw DomainError("scale_graphon: factor must lie in [0, 1]");
  auto values = g.values();
  for (auto& row : values)
    for (auto& v : row) v *= p;
  return BasicStepGraphon<Scalar>(g.weights(), std::move(values));
}

// Homomorphism density of K_s: sum over s-tuples of blocks of the product of
// block weights and pairwise values.
template <class Scalar>
Scalar clique_density(int s, const BasicStepGraphon<Scalar>& g) {
  if (s < 2) throw DomainError("clique_density: clique size must be >= 2");
  const std::size_t n = g.blocks();
  if (std::pow(static_cast<double>(n), s) > 1e8) throw ComplexityError("clique_density: too many block tuples");
  std::vector<std::size_t> idx(static_cast<std::size_t>(s), 0);
  Scalar total = 0;
  while (true) {
    Scalar term = 1;
    for (int i = 0; i < s && term != 0; ++i) {
      term *= g.weights()[idx[i]];
      for (int j = 0; j < i && term != 0; ++j) term *= g.value(idx[i], idx[j]);
    }
    total += term;
    int pos = s - 1;
    while (pos >= 0 && ++idx[pos] == n) idx[pos--] = 0;
    if (pos < 0) break;
  }
  return total;
}

// I(u) = u ln(u)/2 + (1-u) ln(1-u)/2, with I(0) = I(1) = 0.
double rate_function(double u);

}  // namespace ergm
