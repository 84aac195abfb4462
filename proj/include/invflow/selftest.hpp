#ifndef INVFLOW_SELFTEST_HPP_
#define INVFLOW_SELFTEST_HPP_

#include <string>
#include <vector>

namespace invflow {

enum class Rounding { kHalfAwayFromZero, kHalfToEven, kFloor };

Rounding parse_rounding(const std::string& name);
double apply_rounding(Rounding mode, double v);

// Fault injection for the rounded-shift suite: the forward and inverse
// passes each round with their own convention. Any convention used
// consistently must round-trip; mixing two must not.
struct SelftestOptions {
  Rounding forward_rounding = Rounding::kHalfAwayFromZero;
  Rounding inverse_rounding = Rounding::kHalfAwayFromZero;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<SuiteResult> run_selftest(const SelftestOptions& options = {});

}  // namespace invflow

#endif  // INVFLOW_SELFTEST_HPP_
