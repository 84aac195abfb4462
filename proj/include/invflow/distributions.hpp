// Base distributions for the flow models.
//
// The discretized logistic over the integers has the closed-form pmf
//
//   P(Y = y) = (1 - p) p^(y-mu) / ((1 + p^(y-mu)) (1 + p^(y-mu+1))),
//
// with location mu in R and p in (0, 1). Its CDF telescopes to
// P(Y <= y) = 1 / (1 + p^(y-mu+1)). p is stored as sigmoid(rho).

#ifndef INVFLOW_DISTRIBUTIONS_HPP_
#define INVFLOW_DISTRIBUTIONS_HPP_

#include <cstdint>
#include <vector>

#include "invflow/autodiff.hpp"
#include "invflow/rng.hpp"
#include "invflow/tensor.hpp"

namespace invflow {

double sigmoid(double x);
double softplus(double x);
double log_sigmoid(double x);

struct DiscretizedLogisticParams {
  // mu = 0, rho = 0 (p = 1/2) in every dimension.
  explicit DiscretizedLogisticParams(std::size_t dim = 0);

  std::size_t dim() const { return mu.value.size(); }
  double p(std::size_t d) const { return sigmoid(rho.value[d]); }
  std::vector<Parameter*> parameters() { return {&mu, &rho}; }

  Parameter mu;   // [dim]
  Parameter rho;  // [dim]
};

// Direct evaluation of the closed form; meant for moderate |y - mu|.
double dlogistic_pmf(double y, double mu, double p);
double dlogistic_cdf(double y, double mu, double p);
// -ln P(Y = y) via softplus terms; finite for any finite argument.
double dlogistic_neg_log_pmf(double y, double mu, double rho);
// Inverse-CDF draw for u in (0, 1).
std::int64_t dlogistic_sample(double mu, double p, double u);

// Per-element versions over a [batch, dim] tensor.
Tensor dlogistic_pmf(const DiscretizedLogisticParams& params, const IntTensor& y);
Tensor dlogistic_neg_log_pmf(const DiscretizedLogisticParams& params, const Tensor& y);
IntTensor dlogistic_sample(const DiscretizedLogisticParams& params, const Tensor& u);
IntTensor dlogistic_sample(const DiscretizedLogisticParams& params, std::size_t n, Rng& rng);

// Differentiable -ln P per element, with gradients for y, mu and rho.
// y is treated as a real variable so straight-through gradients reach it.
Var dlogistic_neg_log_pmf(Var y, Var mu, Var rho);

inline constexpr double kHalfLogTwoPi = 0.91893853320467274178;

// Standard normal in every dimension.
class GaussianBase {
 public:
  explicit GaussianBase(std::size_t dim = 0) : dim_(dim) {}
  std::size_t dim() const { return dim_; }

  // Sum over dimensions, one value per row.
  Tensor log_pdf(const Tensor& z) const;
  Tensor sample(std::size_t n, Rng& rng) const;

 private:
  std::size_t dim_;
};

// 0.5 z^2 + 0.5 ln(2 pi) per element.
Var gaussian_neg_log_pdf(Var z);

// x + u with u ~ U[0, 1) drawn row by row from rng.
Tensor dequantize(const IntTensor& x, Rng& rng);
// x + noise, for callers that supply the noise.
Tensor dequantize(const IntTensor& x, const Tensor& noise);

}  // namespace invflow

#endif  // INVFLOW_DISTRIBUTIONS_HPP_
