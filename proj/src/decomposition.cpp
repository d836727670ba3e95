#include "wedderburn/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "wedderburn/errors.hpp"

namespace wedderburn {

namespace {

template <typename Fn>
auto staged(const char* stage, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (Error& e) {
    if (e.stage().empty()) e.set_stage(stage);
    throw;
  }
}

}  // namespace

std::vector<BlockShape> canonical_structure(std::vector<BlockShape> structure) {
  std::stable_sort(structure.begin(), structure.end(), [](const BlockShape& a, const BlockShape& b) {
    if (a.p != b.p) return a.p > b.p;
    return a.q > b.q;
  });
  return structure;
}

Index class_rank(const std::vector<Index>& class_indices, const ProjectorFamily& family,
                 const ToleranceConfig& tol) {
  if (class_indices.empty()) {
    throw Error(ErrorKind::domain, "class_rank: empty class");
  }
  const double first = family.projectors.at(class_indices.front()).trace().real();
  const auto q = static_cast<Index>(std::llround(first));
  const double slack = tol.tol_rel * static_cast<double>(family.dim_h);
  for (Index i : class_indices) {
    const double t = family.projectors.at(i).trace().real();
    if (std::abs(t - static_cast<double>(q)) > slack || q < 1) {
      throw ToleranceError(ErrorKind::structural_inconsistency,
                           "class_rank: projector traces in a class are unequal or non-integral",
                           std::abs(t - static_cast<double>(q)));
    }
  }
  return q;
}

ComplexMatrix build_isometry_V(const std::vector<Index>& class_indices, const ProjectorFamily& family,
                               const ComplexMatrix& class_isometry, Index q) {
  const auto p = static_cast<Index>(class_indices.size());
  const Index class_dim = class_isometry.cols();
  if (p * q != class_dim) {
    throw Error(ErrorKind::structural_inconsistency, "build_isometry_V: p * q != class dimension");
  }
  ComplexMatrix v(p * q, class_dim);
  for (Index i = 0; i < p; ++i) {
    const ComplexMatrix local = class_isometry.adjoint() * family.projectors.at(class_indices[i]) * class_isometry;
    const ComplexMatrix range = projector_range(local);
    if (range.cols() != q) {
      throw Error(ErrorKind::structural_inconsistency,
                  "build_isometry_V: projector range has dimension " + std::to_string(range.cols()) +
                      ", expected " + std::to_string(q));
    }
    v.middleRows(i * q, q) = range.adjoint();
  }
  return v;
}

ComplexMatrix intertwiner_unitary(Index local_index, const std::vector<Index>& class_indices,
                                  const ProjectorFamily& family, const ComplexMatrix& class_isometry,
                                  const ComplexMatrix& v, Index q, const AlgebraBasis& basis,
                                  const ToleranceConfig& tol) {
  if (local_index == 0) return identity(q);
  if (local_index < 0 || local_index >= static_cast<Index>(class_indices.size())) {
    throw Error(ErrorKind::dimension, "intertwiner_unitary: local index out of range");
  }
  const ComplexMatrix& rep = family.projectors.at(class_indices.front());
  const ComplexMatrix& target = family.projectors.at(class_indices[local_index]);

  ComplexMatrix best;
  double best_norm = -1.0;
  double best_threshold = 0.0;
  for (const auto& a : basis.elements) {
    ComplexMatrix link = rep * a * target;
    const double n = link.norm();
    if (n > best_norm) {
      best_norm = n;
      best_threshold = tol.threshold(a.norm());
      best = std::move(link);
    }
  }
  if (best_norm <= best_threshold) {
    throw Error(ErrorKind::class_linkage, "intertwiner_unitary: no algebra element links the representative to projector " +
                                              std::to_string(class_indices[local_index]));
  }

  const ComplexMatrix to_target = v * class_isometry.adjoint();
  const ComplexMatrix conjugated = to_target * best * to_target.adjoint();
  const ComplexMatrix m = conjugated.block(0, local_index * q, q, q);
  const double scale = std::sqrt((m.adjoint() * m).trace().real() / static_cast<double>(q));
  const ComplexMatrix b = m / scale;
  const double residual =
      std::max((b.adjoint() * b - identity(q)).norm(), (b * b.adjoint() - identity(q)).norm());
  if (!std::isfinite(residual) || residual > tol.tol_rel) {
    throw ToleranceError(ErrorKind::tolerance_escalation, "intertwiner_unitary: rescaled block is not unitary",
                         residual);
  }
  return b;
}

ComplexMatrix build_W(const std::vector<ComplexMatrix>& intertwiners) {
  if (intertwiners.empty()) {
    throw Error(ErrorKind::dimension, "build_W: no intertwiners");
  }
  const Index q = intertwiners.front().rows();
  const auto p = static_cast<Index>(intertwiners.size());
  ComplexMatrix w = ComplexMatrix::Zero(p * q, p * q);
  for (Index i = 0; i < p; ++i) {
    const ComplexMatrix& b = intertwiners[i];
    if (b.rows() != q || b.cols() != q) {
      throw Error(ErrorKind::dimension, "build_W: intertwiners must all be q x q");
    }
    w.block(i * q, i * q, q, q) = b;
  }
  return w;
}

WedderburnDecomposition decompose(const std::vector<ComplexMatrix>& generators, Index dim_h,
                                  const ToleranceConfig& tol) {
  WedderburnDecomposition d;
  d.dim_h = dim_h;
  d.basis = staged("close_unital_star_algebra", [&] { return close_unital_star_algebra(generators, dim_h, tol); });
  d.family = staged("maximal_family", [&] { return maximal_family(d.basis, tol); });
  d.partition = staged("partition_classes", [&] { return partition_classes(d.family, d.basis, tol); });

  std::vector<ClassDecomposition> per_class;
  for (Index k = 0; k < d.partition.size(); ++k) {
    const auto& indices = d.partition.classes[k];
    const ComplexMatrix& isometry = d.partition.class_isometries[k];
    ClassDecomposition c;
    c.projector_indices = indices;
    c.p = static_cast<Index>(indices.size());
    c.q = staged("class_rank", [&] { return class_rank(indices, d.family, tol); });
    c.v = staged("build_isometry_V", [&] { return build_isometry_V(indices, d.family, isometry, c.q); });
    staged("intertwiner_unitary", [&] {
      for (Index i = 0; i < c.p; ++i) {
        c.intertwiners.push_back(intertwiner_unitary(i, indices, d.family, isometry, c.v, c.q, d.basis, tol));
      }
    });
    c.w = staged("build_W", [&] { return build_W(c.intertwiners); });
    c.u = c.w * c.v;
    per_class.push_back(std::move(c));
  }

  std::vector<std::size_t> order(per_class.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (per_class[a].p != per_class[b].p) return per_class[a].p > per_class[b].p;
    return per_class[a].q > per_class[b].q;
  });

  d.global_u = ComplexMatrix::Zero(dim_h, dim_h);
  Index offset = 0;
  for (std::size_t k : order) {
    const ClassDecomposition& c = per_class[k];
    d.global_u.middleRows(offset, c.p * c.q) = c.u * d.partition.class_isometries[k].adjoint();
    d.block_offsets.push_back(offset);
    d.structure.push_back({c.p, c.q});
    offset += c.p * c.q;
    d.class_data.push_back(c);
  }

  staged("assemble", [&] {
    if (offset != dim_h) {
      throw Error(ErrorKind::structural_inconsistency, "decompose: blocks do not cover the space");
    }
    const double residual = (d.global_u * d.global_u.adjoint() - identity(dim_h)).norm();
    if (residual > tol.tol_rel * static_cast<double>(dim_h)) {
      throw ToleranceError(ErrorKind::decomposition_invalid, "decompose: global unitary is not unitary", residual);
    }
  });
  return d;
}

std::vector<ComplexMatrix> collapse_element(const ComplexMatrix& a, const WedderburnDecomposition& d,
                                            const ToleranceConfig& tol) {
  require_square(a, d.dim_h, "collapse_element");
  const double norm = a.norm();
  const double member = membership_residual(a, d.basis);
  if (member > tol.threshold(norm)) {
    throw ToleranceError(ErrorKind::not_in_algebra, "collapse_element: matrix is not in the algebra", member);
  }

  const ComplexMatrix x = d.global_u * a * d.global_u.adjoint();
  ComplexMatrix rebuilt = ComplexMatrix::Zero(d.dim_h, d.dim_h);
  std::vector<ComplexMatrix> factors;
  for (std::size_t k = 0; k < d.structure.size(); ++k) {
    const auto [p, q] = d.structure[k];
    const Index offset = d.block_offsets[k];
    ComplexMatrix c(p, p);
    for (Index i = 0; i < p; ++i) {
      for (Index j = 0; j < p; ++j) {
        c(i, j) = x.block(offset + i * q, offset + j * q, q, q).trace() / static_cast<double>(q);
        rebuilt.block(offset + i * q, offset + j * q, q, q) = c(i, j) * identity(q);
      }
    }
    factors.push_back(std::move(c));
  }
  const double residual = (x - rebuilt).norm();
  if (residual > tol.threshold(norm)) {
    throw ToleranceError(ErrorKind::decomposition_invalid,
                         "collapse_element: conjugated element does not have the block structure", residual);
  }
  return factors;
}

}  // namespace wedderburn
