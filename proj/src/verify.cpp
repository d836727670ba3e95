#include "wedderburn/verify.hpp"

#include <algorithm>
#include <cmath>

#include "wedderburn/errors.hpp"
#include "wedderburn/star_algebra.hpp"

namespace wedderburn {

namespace {

// Part of x lying outside (+)_k C_k (x) 1_{q_k}.
double off_structure_norm(const ComplexMatrix& x, const ClaimedDecomposition& claim) {
  ComplexMatrix structured = ComplexMatrix::Zero(claim.dim_h, claim.dim_h);
  for (std::size_t k = 0; k < claim.structure.size(); ++k) {
    const auto [p, q] = claim.structure[k];
    const Index offset = claim.block_offsets[k];
    for (Index i = 0; i < p; ++i) {
      for (Index j = 0; j < p; ++j) {
        const Complex lambda = x.block(offset + i * q, offset + j * q, q, q).trace() / static_cast<double>(q);
        structured.block(offset + i * q, offset + j * q, q, q) = lambda * identity(q);
      }
    }
  }
  return (x - structured).norm();
}

void check_claim_shape(const ClaimedDecomposition& claim) {
  if (claim.global_u.rows() != claim.dim_h || claim.global_u.cols() != claim.dim_h) {
    throw Error(ErrorKind::dimension, "verify_decomposition: unitary shape does not match dim");
  }
  if (claim.block_offsets.size() != claim.structure.size()) {
    throw Error(ErrorKind::dimension, "verify_decomposition: block_offsets and structure differ in length");
  }
  Index expected = 0;
  for (std::size_t k = 0; k < claim.structure.size(); ++k) {
    const auto [p, q] = claim.structure[k];
    if (p < 1 || q < 1 || claim.block_offsets[k] != expected) {
      throw Error(ErrorKind::dimension, "verify_decomposition: blocks are not contiguous");
    }
    expected += p * q;
  }
  if (expected != claim.dim_h) {
    throw Error(ErrorKind::dimension, "verify_decomposition: sum of p*q does not equal dim");
  }
}

}  // namespace

ClaimedDecomposition claim_of(const WedderburnDecomposition& d) {
  return {d.dim_h, d.structure, d.global_u, d.block_offsets};
}

VerificationReport verify_decomposition(const std::vector<ComplexMatrix>& generators,
                                        const ClaimedDecomposition& claim, const ToleranceConfig& tol) {
  check_claim_shape(claim);
  const AlgebraBasis basis = close_unital_star_algebra(generators, claim.dim_h, tol);
  const ComplexMatrix& u = claim.global_u;

  VerificationReport report;
  report.structure = claim.structure;
  report.unitarity_residual = (u * u.adjoint() - identity(claim.dim_h)).norm();

  for (const auto& g : basis.elements) {
    const double rel = off_structure_norm(u * g * u.adjoint(), claim) / std::max(g.norm(), tol.tol_zero);
    report.max_block_residual = std::max(report.max_block_residual, rel);
  }

  // every coordinate slab projector must pull back into the algebra
  for (std::size_t k = 0; k < claim.structure.size(); ++k) {
    const auto [p, q] = claim.structure[k];
    for (Index i = 0; i < p; ++i) {
      const Index start = claim.block_offsets[k] + i * q;
      const ComplexMatrix slab_rows = u.middleRows(start, q);
      const ComplexMatrix pulled = slab_rows.adjoint() * slab_rows;
      const double rel = membership_residual(pulled, basis) / std::sqrt(static_cast<double>(q));
      report.projector_image_residual = std::max(report.projector_image_residual, rel);
    }
  }

  report.algebra_dim = basis.size();
  for (const auto& s : claim.structure) report.sum_p_squared += s.p * s.p;
  report.dimension_identity = report.algebra_dim == report.sum_p_squared;

  const auto ok = [&](double r) { return std::isfinite(r) && r <= tol.tol_rel; };
  report.passed = ok(report.unitarity_residual) && ok(report.max_block_residual) &&
                  ok(report.projector_image_residual) && report.dimension_identity;
  return report;
}

VerificationReport verify_decomposition(const std::vector<ComplexMatrix>& generators,
                                        const WedderburnDecomposition& d, const ToleranceConfig& tol) {
  return verify_decomposition(generators, claim_of(d), tol);
}

}  // namespace wedderburn
