#pragma once

#include <vector>

namespace ebem {

// Gauss-Legendre rule transplanted to [0, 1].
struct GaussRule {
  std::vector<double> x, w;
};

// Cached rule with n points (1 <= n <= 64); thread-safe after first use of
// a given order.
const GaussRule& gauss_rule(int n);

}  // namespace ebem
