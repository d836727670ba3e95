#pragma once

#include <vector>

#include "wedderburn/projector_lattice.hpp"

namespace wedderburn {

/// Projector indices grouped by the relation i ~ j <=> P_i A P_j != 0.
struct ClassPartition {
  std::vector<std::vector<Index>> classes;     // ordered by smallest member
  std::vector<ComplexMatrix> class_isometries;  // dim_h x class_dim, orthonormal columns
  std::vector<Index> class_dims;

  Index size() const { return static_cast<Index>(classes.size()); }
};

/// True iff some basis element G has |P_i G P_j|_F > max(tol_zero, tol_rel |G|_F).
bool are_linked(Index i, Index j, const ProjectorFamily& family, const AlgebraBasis& basis,
                const ToleranceConfig& tol);

/// Full p x p link matrix (row i, column j = are_linked(i, j)).
std::vector<std::vector<bool>> link_matrix(const ProjectorFamily& family, const AlgebraBasis& basis,
                                           const ToleranceConfig& tol);

/// linked(i,j) and linked(j,k) imply linked(i,k) for every triple.
bool links_transitive(const std::vector<std::vector<bool>>& links);

/// Connected components of the link graph. Throws a numerical inconsistency
/// error if the computed link matrix is not symmetric.
ClassPartition partition_classes(const ProjectorFamily& family, const AlgebraBasis& basis,
                                 const ToleranceConfig& tol);

}  // namespace wedderburn
