#pragma once

namespace ergm {

enum class Branch { Principal, Minus1 };

// Real branches of the Lambert W function, the inverse of w -> w e^w.
// Principal (W0) is defined on [-1/e, inf) with W0 >= -1; Minus1 (W-1) is
// defined on [-1/e, 0) with W-1 <= -1. Throws DomainError outside these
// domains and ConvergenceError if Halley iteration fails to settle.
double lambert_w(Branch branch, double x);

}  // namespace ergm
