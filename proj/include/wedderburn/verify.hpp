#pragma once

#include <vector>

#include "wedderburn/decomposition.hpp"

namespace wedderburn {

/// The parts of a decomposition that make a checkable claim: a unitary and a
/// block layout of the target space.
struct ClaimedDecomposition {
  Index dim_h = 0;
  std::vector<BlockShape> structure;
  ComplexMatrix global_u;
  std::vector<Index> block_offsets;
};

ClaimedDecomposition claim_of(const WedderburnDecomposition& d);

struct VerificationReport {
  double unitarity_residual = 0.0;        // |U U^dagger - 1|_F
  double max_block_residual = 0.0;        // worst relative off-structure part of U G U^dagger
  double projector_image_residual = 0.0;  // worst relative membership residual of U^dagger E U
  bool dimension_identity = false;        // |basis| == sum p_k^2
  Index algebra_dim = 0;
  Index sum_p_squared = 0;
  std::vector<BlockShape> structure;
  bool passed = false;
};

/// Recomputes the algebra from the generators and measures the claim against
/// it. Numeric failures are reported, never thrown; inconsistent shapes throw a
/// dimension error.
VerificationReport verify_decomposition(const std::vector<ComplexMatrix>& generators,
                                        const ClaimedDecomposition& claim, const ToleranceConfig& tol);

VerificationReport verify_decomposition(const std::vector<ComplexMatrix>& generators,
                                        const WedderburnDecomposition& d, const ToleranceConfig& tol);

}  // namespace wedderburn
