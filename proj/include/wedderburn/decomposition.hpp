#pragma once

#include <vector>

#include "wedderburn/class_partition.hpp"

namespace wedderburn {

/// One isotypic block L(C^p) (x) 1_q.
struct BlockShape {
  Index p = 0;  // dim H_L: number of projectors in the class
  Index q = 0;  // dim H_R: common projector rank

  friend bool operator==(const BlockShape&, const BlockShape&) = default;
};

/// Descending p, then descending q.
std::vector<BlockShape> canonical_structure(std::vector<BlockShape> structure);

struct ClassDecomposition {
  Index p = 0;
  Index q = 0;
  std::vector<Index> projector_indices;  // into the maximal family; first is the representative
  ComplexMatrix v;                       // pq x class_dim, orthonormal rows
  ComplexMatrix w;                       // pq x pq block-diagonal unitary
  ComplexMatrix u;                       // w * v
  std::vector<ComplexMatrix> intertwiners;  // B_{1i}, q x q, first is the identity
};

struct WedderburnDecomposition {
  Index dim_h = 0;
  std::vector<BlockShape> structure;  // canonical order
  ComplexMatrix global_u;
  std::vector<ClassDecomposition> class_data;  // canonical order
  std::vector<Index> block_offsets;

  AlgebraBasis basis;
  ProjectorFamily family;
  ClassPartition partition;
};

/// Common rank of the projectors in a class; throws a structural error when
/// traces are unequal or not integral within tol_rel * dim_h.
Index class_rank(const std::vector<Index>& class_indices, const ProjectorFamily& family,
                 const ToleranceConfig& tol);

/// Rows i*q .. i*q+q-1 hold an orthonormal basis of range(P_i) in class
/// coordinates (conjugated), so that V P_i V^dagger = |i><i| (x) 1_q.
ComplexMatrix build_isometry_V(const std::vector<Index>& class_indices, const ProjectorFamily& family,
                               const ComplexMatrix& class_isometry, Index q);

/// Unitary q x q block (0, i) of V (P_rep A P_i) V^dagger after rescaling, for
/// the basis element A maximizing |P_rep A P_i|_F. Local index 0 gives 1_q.
ComplexMatrix intertwiner_unitary(Index local_index, const std::vector<Index>& class_indices,
                                  const ProjectorFamily& family, const ComplexMatrix& class_isometry,
                                  const ComplexMatrix& v, Index q, const AlgebraBasis& basis,
                                  const ToleranceConfig& tol);

/// Block-diagonal sum_i |i><i| (x) B_i.
ComplexMatrix build_W(const std::vector<ComplexMatrix>& intertwiners);

/// Full pipeline from generators to the global unitary and block structure.
WedderburnDecomposition decompose(const std::vector<ComplexMatrix>& generators, Index dim_h,
                                  const ToleranceConfig& tol);

/// Per class the p_k x p_k factor C_k with U a U^dagger = (+)_k C_k (x) 1_{q_k}.
std::vector<ComplexMatrix> collapse_element(const ComplexMatrix& a, const WedderburnDecomposition& d,
                                            const ToleranceConfig& tol);

}  // namespace wedderburn
