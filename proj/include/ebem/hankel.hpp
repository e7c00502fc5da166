#pragma once

#include "ebem/types.hpp"

namespace ebem {

// First-kind Hankel functions of order 0 and 1 at real positive argument,
// computed together.  A single call shares the range test, the amplitude
// factor and the sin/cos pair, which matters because kernel evaluation
// inside quadrature loops is dominated by these calls.
//
// Accuracy: relative error below 1e-14 of the modulus |H_n(x)| over
// [1e-8, 1e3] (cross-checked against an independent implementation in the
// unit tests).
void hankel1_01(double x, cd& h0, cd& h1);

}  // namespace ebem
