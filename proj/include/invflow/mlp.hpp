#ifndef INVFLOW_MLP_HPP_
#define INVFLOW_MLP_HPP_

#include <cstddef>
#include <vector>

#include "invflow/autodiff.hpp"
#include "invflow/rng.hpp"

namespace invflow {

struct LinearLayer {
  Parameter weight;  // [in, out]
  Parameter bias;    // [out]

  std::size_t in() const { return weight.value.rows(); }
  std::size_t out() const { return weight.value.cols(); }
};

inline constexpr double kLeakySlope = 0.01;

// Fully connected net: Linear layers with LeakyReLU in between and an
// optional Tanh after the last one.
class Mlp {
 public:
  Mlp() = default;

  // widths = {in, hidden..., out}. Hidden layers get U(-1/sqrt(fan_in), +)
  // weights and biases; the last layer starts at zero when zero_last is set.
  Mlp(const std::vector<std::size_t>& widths, bool terminal_tanh, Rng& rng, bool zero_last = true);

  // Linear(in,hidden) -> LeakyReLU -> Linear(hidden,hidden) -> LeakyReLU -> Linear(hidden,out).
  static Mlp transition(std::size_t in, std::size_t hidden, std::size_t out, bool terminal_tanh, Rng& rng);

  Tensor forward(const Tensor& x) const;
  Var forward(Var x);

  std::size_t input_width() const { return layers_.front().in(); }
  std::size_t output_width() const { return layers_.back().out(); }
  bool terminal_tanh() const { return terminal_tanh_; }

  std::vector<LinearLayer>& layers() { return layers_; }
  const std::vector<LinearLayer>& layers() const { return layers_; }

  std::vector<Parameter*> parameters();
  std::vector<const Parameter*> parameters() const;
  std::size_t parameter_count() const;

  // Zero final weights and bias = value, so every input maps to value (or to
  // tanh(value) for a Tanh-terminated net).
  void set_constant_output(const std::vector<double>& value);

 private:
  std::vector<LinearLayer> layers_;
  bool terminal_tanh_ = false;
};

// Overwrites every entry with U(-scale, scale). Used to get non-trivial
// layers in tests, since freshly built transition nets output zero.
void randomize_parameters(const std::vector<Parameter*>& params, Rng& rng, double scale);

}  // namespace invflow

#endif  // INVFLOW_MLP_HPP_
