// Flow models: a stack of (coupling, order reversal) pairs plus a base
// distribution. Couplings run in the data -> latent direction, so likelihood
// evaluation uses their forward pass and sampling uses their inverses.
//
//   integer kinds:  -ln p(x) = -ln pi(f(x))                     (no volume term)
//   realnvp:        -ln p(x) = -ln N(f(x)) - sum_k log|det J_k|

#ifndef INVFLOW_FLOW_MODEL_HPP_
#define INVFLOW_FLOW_MODEL_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "invflow/couplings.hpp"
#include "invflow/distributions.hpp"

namespace invflow {

enum class ModelKind { kIdf, kIdf4, kIdf8, kRealNvp };

ModelKind parse_model_kind(const std::string& name);
std::string to_string(ModelKind kind);
// 16 / 4 / 2 / 8 flows keep every kind near 1.32M weights at width 256.
std::size_t default_flow_count(ModelKind kind);

struct ModelShape {
  std::size_t dim = 64;
  std::size_t hidden = 256;
  std::size_t flows = 0;  // 0 selects default_flow_count(kind)
};

class FlowModel {
 public:
  FlowModel(ModelKind kind, std::uint64_t seed, ModelShape shape = {});

  FlowModel(const FlowModel&) = delete;
  FlowModel& operator=(const FlowModel&) = delete;
  FlowModel(FlowModel&&) = default;
  FlowModel& operator=(FlowModel&&) = default;

  ModelKind kind() const { return kind_; }
  bool is_integer() const { return kind_ != ModelKind::kRealNvp; }
  std::size_t dim() const { return shape_.dim; }
  std::size_t hidden() const { return shape_.hidden; }
  std::size_t flow_count() const { return shape_.flows; }
  std::size_t parameter_count() const;

  // Integer kinds.
  IntTensor encode(const IntTensor& x) const;
  IntTensor decode(const IntTensor& z) const;

  // RealNVP.
  struct RealEncoding {
    Tensor z;
    Tensor logdet;  // [batch], summed over all couplings
  };
  RealEncoding encode(const Tensor& x) const;
  Tensor decode(const Tensor& z) const;

  // Per-row -ln p(x) in nats. Integer kinds reject non-integer input;
  // RealNVP expects already dequantized values.
  Tensor neg_log_likelihood(const Tensor& x) const;
  Tensor neg_log_likelihood(const IntTensor& x) const;

  // Mean -ln p over the rows of x, recorded for backward(). Integer kinds
  // take the values as given; RealNVP receives dequantized input.
  Var loss(Tape& tape, const Tensor& x);

  // Draws from the base and maps them back to data space.
  IntTensor sample_integer(std::size_t n, Rng& rng) const;
  Tensor sample_real(std::size_t n, Rng& rng) const;

  std::vector<Parameter*> parameters();
  std::vector<std::pair<std::string, const Parameter*>> named_parameters() const;

  // Snapshot and restore of all parameter values.
  std::vector<Tensor> state() const;
  void load_state(const std::vector<Tensor>& values);

  DiscretizedLogisticParams& logistic_base() { return logistic_base_; }
  const DiscretizedLogisticParams& logistic_base() const { return logistic_base_; }
  std::vector<std::unique_ptr<IntegerCoupling>>& integer_couplings() { return integer_layers_; }
  std::vector<AffineCoupling>& affine_couplings() { return affine_layers_; }

 private:
  void check_input(const std::vector<std::size_t>& shape) const;

  ModelKind kind_;
  ModelShape shape_;
  std::vector<std::unique_ptr<IntegerCoupling>> integer_layers_;
  std::vector<AffineCoupling> affine_layers_;
  DiscretizedLogisticParams logistic_base_;
  GaussianBase gaussian_base_;
  Permutation permutation_;
};

}  // namespace invflow

#endif  // INVFLOW_FLOW_MODEL_HPP_
