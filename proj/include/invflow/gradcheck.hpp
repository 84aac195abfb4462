#ifndef INVFLOW_GRADCHECK_HPP_
#define INVFLOW_GRADCHECK_HPP_

#include <functional>
#include <vector>

#include "invflow/autodiff.hpp"

namespace invflow {

struct GradCheckResult {
  double max_rel_error = 0.0;
  std::size_t entries = 0;
};

// |a - n| / max(|a|, |n|, floor). The floor keeps entries whose true
// gradient is ~0 from being judged on round-off alone.
double gradient_rel_error(double analytic, double numeric, double floor = 1e-3);

// Compares backward() gradients of a scalar loss against central differences
// with step h, for every entry of every parameter. `loss` must build a fresh
// tape from the current parameter values each time it is called.
GradCheckResult check_gradients(const std::function<Var(Tape&)>& loss, const std::vector<Parameter*>& params,
                                double h = 1e-5);

}  // namespace invflow

#endif  // INVFLOW_GRADCHECK_HPP_
