#pragma once

#include <vector>

#include "wedderburn/matrix_core.hpp"

namespace wedderburn {

/// Hilbert-Schmidt orthonormal basis of a unital *-subalgebra of L(C^dim_h).
struct AlgebraBasis {
  Index dim_h = 0;
  std::vector<ComplexMatrix> elements;
  bool contains_identity = false;

  Index size() const { return static_cast<Index>(elements.size()); }
};

/// Smallest unital *-closed span containing the generators.
///
/// Seeds with {1} plus generators plus their adjoints, then appends products
/// breadth-first and re-orthonormalizes until a round adds nothing. After the
/// first round only products with at least one factor from the previous round
/// are formed; products of older elements are already in the span.
AlgebraBasis close_unital_star_algebra(const std::vector<ComplexMatrix>& generators, Index dim_h,
                                       const ToleranceConfig& tol);

/// |m - sum_a <G_a, m> G_a|_F
double membership_residual(const ComplexMatrix& m, const AlgebraBasis& basis);

}  // namespace wedderburn
