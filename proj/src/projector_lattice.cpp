#include "wedderburn/projector_lattice.hpp"

#include <algorithm>
#include <cmath>

#include "wedderburn/errors.hpp"

namespace wedderburn {

namespace {

double projector_trace(const ComplexMatrix& p, const ToleranceConfig& tol) {
  const double t = p.trace().real();
  if (t <= tol.tol_zero) {
    throw Error(ErrorKind::domain, "degenerate projector: trace is zero");
  }
  return t;
}

Index rounded_rank(const ComplexMatrix& p) { return static_cast<Index>(std::llround(p.trace().real())); }

}  // namespace

std::optional<Complex> proportionality_coefficient(const ComplexMatrix& m, const ComplexMatrix& p,
                                                   const ToleranceConfig& tol) {
  if (m.rows() != p.rows() || m.cols() != p.cols() || p.rows() != p.cols()) {
    throw Error(ErrorKind::dimension, "proportionality_coefficient: shape mismatch");
  }
  const double tr = projector_trace(p, tol);
  const ComplexMatrix c = p * m * p;
  const Complex lambda = c.trace() / tr;
  if ((c - lambda * p).norm() <= tol.threshold(c.norm())) return lambda;
  return std::nullopt;
}

double proportionality_residual(const ComplexMatrix& m, const ComplexMatrix& p) {
  const ComplexMatrix c = p * m * p;
  const double tr = p.trace().real();
  if (tr <= 0.0) return c.norm();
  return (c - (c.trace() / tr) * p).norm();
}

std::optional<std::vector<ComplexMatrix>> refine_projector(const ComplexMatrix& p, const AlgebraBasis& basis,
                                                           const ToleranceConfig& tol) {
  require_square(p, basis.dim_h, "refine_projector");
  projector_trace(p, tol);

  const ComplexMatrix* witness = nullptr;
  double worst = 0.0;
  for (const auto& g : basis.elements) {
    if (proportionality_coefficient(g, p, tol)) continue;
    const double r = proportionality_residual(g, p);
    if (witness == nullptr || r > worst) {
      witness = &g;
      worst = r;
    }
  }
  if (witness == nullptr) return std::nullopt;

  const ComplexMatrix& m = *witness;
  const ComplexMatrix h_sym = p * (m + m.adjoint()) * p;
  const ComplexMatrix h_anti = Complex(0.0, 1.0) * (p * (m - m.adjoint()) * p);
  const ComplexMatrix& h =
      proportionality_residual(h_sym, p) >= proportionality_residual(h_anti, p) ? h_sym : h_anti;

  const ComplexMatrix range = projector_range(p);
  const ComplexMatrix local = range.adjoint() * h * range;
  const auto components = hermitian_spectral(local, tol);
  if (components.size() < 2) {
    throw ToleranceError(ErrorKind::tolerance_escalation,
                         "refine_projector: witness is non-proportional but its spectrum has a single cluster",
                         worst);
  }

  std::vector<ComplexMatrix> pieces;
  pieces.reserve(components.size());
  for (const auto& c : components) {
    ComplexMatrix q = range * c.projector * range.adjoint();
    const double residual = membership_residual(q, basis);
    if (residual > std::max(tol.tol_zero, 10.0 * tol.tol_rel * std::max(1.0, q.norm()))) {
      throw ToleranceError(ErrorKind::tolerance_escalation,
                           "refine_projector: spectral projector is not in the algebra", residual);
    }
    pieces.push_back(std::move(q));
  }
  return pieces;
}

ProjectorFamily maximal_family(const AlgebraBasis& basis, const ToleranceConfig& tol) {
  tol.validate();
  std::vector<ComplexMatrix> projectors{identity(basis.dim_h)};

  bool refined = true;
  while (refined) {
    refined = false;
    for (std::size_t i = 0; i < projectors.size(); ++i) {
      auto pieces = refine_projector(projectors[i], basis, tol);
      if (!pieces) continue;
      projectors.erase(projectors.begin() + static_cast<std::ptrdiff_t>(i));
      projectors.insert(projectors.begin() + static_cast<std::ptrdiff_t>(i),
                        std::make_move_iterator(pieces->begin()), std::make_move_iterator(pieces->end()));
      if (static_cast<Index>(projectors.size()) > basis.dim_h) {
        throw Error(ErrorKind::structural_inconsistency, "maximal_family: more projectors than dim_h");
      }
      refined = true;
      break;
    }
  }

  ProjectorFamily family;
  family.dim_h = basis.dim_h;
  for (auto& p : projectors) {
    family.ranks.push_back(rounded_rank(p));
    family.projectors.push_back(std::move(p));
  }
  return family;
}

FamilyCertificate certify_family(const ProjectorFamily& family, const AlgebraBasis& basis,
                                 const ToleranceConfig& tol) {
  FamilyCertificate cert;
  ComplexMatrix sum = ComplexMatrix::Zero(family.dim_h, family.dim_h);
  cert.maximal = true;
  for (Index i = 0; i < family.size(); ++i) {
    const ComplexMatrix& p = family.projectors[i];
    cert.hermitian = std::max(cert.hermitian, (p - p.adjoint()).norm());
    cert.idempotent = std::max(cert.idempotent, (p * p - p).norm());
    cert.membership = std::max(cert.membership, membership_residual(p, basis));
    for (Index j = 0; j < family.size(); ++j) {
      if (i != j) cert.orthogonal = std::max(cert.orthogonal, (p * family.projectors[j]).norm());
    }
    for (const auto& g : basis.elements) {
      if (!proportionality_coefficient(g, p, tol)) cert.maximal = false;
    }
    sum += p;
  }
  cert.completeness = (sum - identity(family.dim_h)).norm();
  return cert;
}

}  // namespace wedderburn
