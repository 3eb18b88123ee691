#pragma once

#include "abckit/ball.hpp"
#include "abckit/poly.hpp"

#include <vector>

namespace abckit {

/// Certified enclosures of the complex roots of f (its squarefree part is
/// used). Real roots come first in ascending order and have an exactly zero
/// imaginary part; then each non-real pair follows, the root with positive
/// imaginary part first. Balls are pairwise disjoint and each contains exactly
/// one root. Throws RefinementFailed if certification fails after the internal
/// precision doublings.
std::vector<ComplexBall> isolate_complex_roots(const Poly& f, int precision);

/// Number of real roots among the output of isolate_complex_roots.
int count_real_roots(const std::vector<ComplexBall>& roots);

}  // namespace abckit
