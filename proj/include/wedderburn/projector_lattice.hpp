#pragma once

#include <optional>
#include <vector>

#include "wedderburn/star_algebra.hpp"

namespace wedderburn {

/// Ordered complete family of pairwise-orthogonal projectors in the algebra.
struct ProjectorFamily {
  Index dim_h = 0;
  std::vector<ComplexMatrix> projectors;
  std::vector<Index> ranks;

  Index size() const { return static_cast<Index>(projectors.size()); }
};

/// Worst-case residuals of the family conditions.
struct FamilyCertificate {
  double hermitian = 0.0;     // max |P - P^dagger|_F
  double idempotent = 0.0;    // max |P^2 - P|_F
  double orthogonal = 0.0;    // max over i != j of |P_i P_j|_F
  double completeness = 0.0;  // |sum P_i - 1|_F
  double membership = 0.0;    // max membership_residual(P_i)
  bool maximal = false;       // P_i G P_i proportional to P_i for every basis element G

  bool holds(double tol) const {
    return hermitian <= tol && idempotent <= tol && orthogonal <= tol && completeness <= tol &&
           membership <= tol && maximal;
  }
};

/// With C = p m p and lambda = trace(C) / trace(p): lambda if
/// |C - lambda p|_F <= max(tol_zero, tol_rel |C|_F), otherwise nullopt.
std::optional<Complex> proportionality_coefficient(const ComplexMatrix& m, const ComplexMatrix& p,
                                                   const ToleranceConfig& tol);

/// |p m p - lambda p|_F for the best-fit lambda. Zero for proportional elements.
double proportionality_residual(const ComplexMatrix& m, const ComplexMatrix& p);

/// Splits p into >= 2 algebra projectors if p A p is not C p; nullopt when p is
/// irreducible. The splitting Hermitian is diagonalized on range(p) only.
std::optional<std::vector<ComplexMatrix>> refine_projector(const ComplexMatrix& p, const AlgebraBasis& basis,
                                                           const ToleranceConfig& tol);

/// Refines {1} until every projector is irreducible. Scans in index order and
/// restarts after each accepted refinement.
ProjectorFamily maximal_family(const AlgebraBasis& basis, const ToleranceConfig& tol);

FamilyCertificate certify_family(const ProjectorFamily& family, const AlgebraBasis& basis,
                                 const ToleranceConfig& tol);

}  // namespace wedderburn
