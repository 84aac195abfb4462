// Tape-based reverse-mode differentiation over Tensor values.
//
// A Tape records one forward computation. Leaves are constants (data) or
// Parameters; every op appends a node holding its value and a closure that
// maps the node's output gradient to gradients of its inputs. backward()
// replays the closures once, in reverse, and adds the resulting gradients
// into each Parameter's grad. A tape can be consumed only once.

#ifndef INVFLOW_AUTODIFF_HPP_
#define INVFLOW_AUTODIFF_HPP_

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "invflow/tensor.hpp"

namespace invflow {

struct Parameter {
  Parameter() = default;
  Parameter(std::string name, Tensor value);

  void zero_grad();

  std::string name;
  Tensor value;
  Tensor grad;
  Tensor adam_m;
  Tensor adam_v;
  std::uint64_t step_count = 0;
};

class StaleGraphError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class Tape;

class Var {
 public:
  Var() = default;
  Var(Tape* tape, std::size_t id) : tape_(tape), id_(id) {}

  Tape& tape() const { return *tape_; }
  std::size_t id() const { return id_; }
  const Tensor& value() const;
  const std::vector<std::size_t>& shape() const { return value().shape(); }

 private:
  Tape* tape_ = nullptr;
  std::size_t id_ = 0;
};

class Tape {
 public:
  // Receives the output gradient and one slot per input; a slot is null when
  // that input does not need a gradient.
  using Backprop = std::function<void(const Tape&, const Tensor& grad_out, std::vector<Tensor*>& grad_in)>;

  Var constant(Tensor value);
  // A leaf whose gradient is kept and readable through grad().
  Var variable(Tensor value);
  Var parameter(Parameter& p);

  Var record(Tensor value, std::vector<Var> inputs, Backprop backprop);

  const Tensor& value(Var v) const { return nodes_[v.id()].value; }
  const Tensor& value(std::size_t id) const { return nodes_[id].value; }
  bool requires_grad(Var v) const { return nodes_[v.id()].requires_grad; }
  // Gradient of a variable() leaf after backward().
  const Tensor& grad(Var v) const;

  void backward(Var loss);
  bool consumed() const { return consumed_; }
  std::size_t size() const { return nodes_.size(); }

 private:
  struct Node {
    Tensor value;
    Tensor grad;
    bool requires_grad = false;
    bool keep_grad = false;
    std::vector<std::size_t> inputs;
    Backprop backprop;
    Parameter* param = nullptr;
  };

  std::vector<Node> nodes_;
  bool consumed_ = false;
};

namespace ad {

// x [m,k] * w [k,n] + b [n]
Var linear(Var x, Var w, Var b);
Var leaky_relu(Var x, double slope);
Var tanh(Var x);
Var exp(Var x);
Var add(Var a, Var b);
Var sub(Var a, Var b);
Var mul(Var a, Var b);
Var scale(Var x, double factor);
// Forward rounds half away from zero; backward is the identity.
Var ste_round(Var x);
Var slice_cols(Var x, std::size_t begin, std::size_t count);
Var concat_cols(const std::vector<Var>& parts);
Var flip_cols(Var x);
// Scalar (shape [1]) sum of all elements.
Var sum(Var x);
// [m,n] -> [m]
Var row_sum(Var x);

}  // namespace ad

struct AdamOptions {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

// Bias-corrected Adam; zeroes the gradients afterwards.
void adam_step(const std::vector<Parameter*>& params, const AdamOptions& options);

}  // namespace invflow

#endif  // INVFLOW_AUTODIFF_HPP_
