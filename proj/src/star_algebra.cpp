#include "wedderburn/star_algebra.hpp"

#include <cmath>

#include "wedderburn/errors.hpp"

namespace wedderburn {

AlgebraBasis close_unital_star_algebra(const std::vector<ComplexMatrix>& generators, Index dim_h,
                                       const ToleranceConfig& tol) {
  if (dim_h < 1) {
    throw Error(ErrorKind::dimension, "close_unital_star_algebra: dim_h must be >= 1");
  }
  tol.validate();
  for (const auto& g : generators) require_square(g, dim_h, "close_unital_star_algebra");

  HsOrthonormalizer span(dim_h, dim_h, tol);
  span.try_add(identity(dim_h));
  for (const auto& g : generators) span.try_add(g);
  for (const auto& g : generators) span.try_add(g.adjoint());

  std::vector<ComplexMatrix> elements;
  for (Index k = 0; k < span.size(); ++k) elements.push_back(span.element(k));

  // elements[0, fresh_begin) have had all their mutual products added already.
  std::size_t fresh_begin = 0;
  while (fresh_begin < elements.size()) {
    const std::size_t round_end = elements.size();
    for (std::size_t a = 0; a < round_end; ++a) {
      for (std::size_t b = 0; b < round_end; ++b) {
        if (a < fresh_begin && b < fresh_begin) continue;
        if (span.try_add(elements[a] * elements[b])) {
          if (span.size() > dim_h * dim_h) {
            throw Error(ErrorKind::structural_inconsistency,
                        "close_unital_star_algebra: span exceeds dim_h^2 elements");
          }
          elements.push_back(span.element(span.size() - 1));
        }
      }
    }
    fresh_begin = round_end;
  }

  AlgebraBasis basis;
  basis.dim_h = dim_h;
  basis.elements = std::move(elements);
  basis.contains_identity = membership_residual(identity(dim_h), basis) <= tol.threshold(std::sqrt(double(dim_h)));
  return basis;
}

double membership_residual(const ComplexMatrix& m, const AlgebraBasis& basis) {
  if (m.rows() != basis.dim_h || m.cols() != basis.dim_h) {
    throw Error(ErrorKind::dimension, "membership_residual: shape mismatch");
  }
  ComplexMatrix r = m;
  for (const auto& g : basis.elements) r -= hs_inner(g, m) * g;
  return r.norm();
}

}  // namespace wedderburn
