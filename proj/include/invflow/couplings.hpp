// Invertible layers. Each has an exact forward and inverse, a recorded
// forward for training where it is used in a model, and general_spec(), which
// expresses the same layer per sample through GeneralTransformSpec so the two
// formulations can be checked against each other. A spec refers to its layer
// and must not outlive it.

#ifndef INVFLOW_COUPLINGS_HPP_
#define INVFLOW_COUPLINGS_HPP_

#include <array>
#include <memory>
#include <stdexcept>
#include <vector>

#include "invflow/invertible.hpp"
#include "invflow/mlp.hpp"

namespace invflow {

class SingularScaleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// y1 = x1, y2 = exp(s(x1)) * x2 + t(x1), log|det J| = sum s(x1).
class AffineCoupling {
 public:
  struct Output {
    Tensor y;
    Tensor logdet;  // [batch]
  };
  struct RecordedOutput {
    Var y;
    Var logdet;
  };

  AffineCoupling(std::size_t dim, std::size_t split, std::size_t hidden, Rng& rng);

  Output forward(const Tensor& x) const;
  Tensor inverse(const Tensor& y) const;
  RecordedOutput forward(Var x);

  GeneralTransformSpec<double> general_spec() const;

  std::size_t dim() const { return dim_; }
  std::size_t split() const { return split_; }
  Mlp& scale_net() { return scale_net_; }
  Mlp& shift_net() { return shift_net_; }
  const Mlp& scale_net() const { return scale_net_; }
  const Mlp& shift_net() const { return shift_net_; }
  std::vector<Parameter*> parameters();
  std::size_t parameter_count() const;

 private:
  void check(const Tensor& x) const;

  std::size_t dim_;
  std::size_t split_;
  Mlp scale_net_;
  Mlp shift_net_;
};

// Layers over Z^D. Training feeds integer-valued reals through the recorded
// path, where rounding uses the straight-through estimator.
class IntegerCoupling {
 public:
  virtual ~IntegerCoupling() = default;

  virtual IntTensor forward(const IntTensor& x) const = 0;
  virtual IntTensor inverse(const IntTensor& y) const = 0;
  virtual Var forward(Var x) = 0;

  virtual GeneralTransformSpec<std::int64_t> general_spec() const = 0;

  virtual std::size_t dim() const = 0;
  virtual std::vector<Mlp*> nets() = 0;
  virtual std::vector<const Mlp*> nets() const = 0;

  std::vector<Parameter*> parameters();
  std::size_t parameter_count() const;
};

// y1 = x1, y2 = x2 + round(t(x1)).
class AdditiveIntegerCoupling final : public IntegerCoupling {
 public:
  AdditiveIntegerCoupling(std::size_t dim, std::size_t split, std::size_t hidden, Rng& rng);

  IntTensor forward(const IntTensor& x) const override;
  IntTensor inverse(const IntTensor& y) const override;
  Var forward(Var x) override;
  GeneralTransformSpec<std::int64_t> general_spec() const override;

  std::size_t dim() const override { return dim_; }
  std::size_t split() const { return split_; }
  std::vector<Mlp*> nets() override { return {&shift_net_}; }
  std::vector<const Mlp*> nets() const override { return {&shift_net_}; }

 private:
  std::size_t dim_;
  std::size_t split_;
  Mlp shift_net_;
};

// K equal contiguous parts; part d is shifted by round(t_d(y_{1:d-1}, x_{d+1:K})).
class MultiPartIntegerCoupling final : public IntegerCoupling {
 public:
  MultiPartIntegerCoupling(std::size_t dim, std::size_t num_parts, std::size_t hidden, Rng& rng);

  IntTensor forward(const IntTensor& x) const override;
  IntTensor inverse(const IntTensor& y) const override;
  Var forward(Var x) override;
  GeneralTransformSpec<std::int64_t> general_spec() const override;

  std::size_t dim() const override { return dim_; }
  std::size_t num_parts() const { return shift_nets_.size(); }
  std::size_t part_size() const { return dim_ / shift_nets_.size(); }
  std::vector<Mlp*> nets() override;
  std::vector<const Mlp*> nets() const override;

 private:
  IntTensor shift_for(std::size_t part, const std::vector<IntTensor>& y, const std::vector<IntTensor>& x) const;

  std::size_t dim_;
  std::vector<Mlp> shift_nets_;
};

// y1 = x1 + t1(x2), y2 = s(y1) * x2 + t2(y1).
//
// Without a scale net s is 1. With one, s is exp(tanh(.)) of the net output
// in kExpTanh mode, or the raw net output in kRaw mode, where a zero factor
// makes the layer singular and is reported.
class ReversibleResidual {
 public:
  enum class ScaleMode { kNone, kExpTanh, kRaw };

  ReversibleResidual(std::size_t dim, std::size_t split, std::size_t hidden, ScaleMode mode, Rng& rng);

  Tensor forward(const Tensor& x) const;
  Tensor inverse(const Tensor& y) const;
  GeneralTransformSpec<double> general_spec() const;

  Mlp& net1() { return net1_; }
  Mlp& net2() { return net2_; }
  Mlp& net3() { return net3_; }
  ScaleMode mode() const { return mode_; }

 private:
  Tensor scale(const Tensor& y1) const;
  void check(const Tensor& x) const;

  std::size_t dim_;
  std::size_t split_;
  ScaleMode mode_;
  Mlp net1_;
  Mlp net2_;
  Mlp net3_;
};

// y1 = x1 + g (x2 - x3), y2 = x2 + g (x3 - y1), y3 = x3 + g (y1 - y2).
struct DifferentialMutationConfig {
  explicit DifferentialMutationConfig(double gamma);
  double gamma;
};

using Triple = std::array<std::vector<double>, 3>;

Triple differential_mutation_forward(const DifferentialMutationConfig& cfg, const Triple& x);
Triple differential_mutation_inverse(const DifferentialMutationConfig& cfg, const Triple& y);
GeneralTransformSpec<double> differential_mutation_spec(const DifferentialMutationConfig& cfg);

// Order-reversing permutation; its own inverse.
struct Permutation {
  template <typename T>
  BasicTensor<T> apply(const BasicTensor<T>& x) const {
    return flip_cols(x);
  }
  Var apply(Var x) const { return ad::flip_cols(x); }
};

}  // namespace invflow

#endif  // INVFLOW_COUPLINGS_HPP_
