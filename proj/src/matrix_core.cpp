#include "wedderburn/matrix_core.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "wedderburn/errors.hpp"

namespace wedderburn {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::dimension: return "dimension";
    case ErrorKind::domain: return "domain";
    case ErrorKind::contract_violation: return "contract_violation";
    case ErrorKind::tolerance_escalation: return "tolerance_escalation";
    case ErrorKind::structural_inconsistency: return "structural_inconsistency";
    case ErrorKind::numerical_inconsistency: return "numerical_inconsistency";
    case ErrorKind::class_linkage: return "class_linkage";
    case ErrorKind::catalog: return "catalog";
    case ErrorKind::not_in_algebra: return "not_in_algebra";
    case ErrorKind::decomposition_invalid: return "decomposition_invalid";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

void ToleranceConfig::validate() const {
  for (double v : {tol_zero, tol_rel, tol_eig_cluster}) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorKind::domain, "tolerances must be finite and nonnegative");
    }
  }
  if (tol_zero > tol_rel) {
    throw Error(ErrorKind::domain, "tol_zero must not exceed tol_rel");
  }
}

ToleranceConfig ToleranceConfig::scaled(double tol) {
  const ToleranceConfig defaults;
  ToleranceConfig out;
  out.tol_rel = tol;
  out.tol_eig_cluster = tol * (defaults.tol_eig_cluster / defaults.tol_rel);
  out.tol_zero = std::min(defaults.tol_zero, tol);
  out.validate();
  return out;
}

double ToleranceConfig::threshold(double scale) const {
  return std::max(tol_zero, tol_rel * scale);
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::dimension, "hs_inner: shape mismatch");
  }
  // sum conj(a_ij) b_ij == trace(a^dagger b)
  return a.conjugate().cwiseProduct(b).sum();
}

double frobenius_norm(const ComplexMatrix& a) { return a.norm(); }

ComplexMatrix identity(Index n) { return ComplexMatrix::Identity(n, n); }

bool all_finite(const ComplexMatrix& m) { return m.allFinite(); }

void require_square(const ComplexMatrix& m, Index n, const char* what) {
  if (m.rows() != n || m.cols() != n) {
    throw Error(ErrorKind::dimension, std::string(what) + ": expected " + std::to_string(n) + "x" +
                                          std::to_string(n) + " matrix, got " + std::to_string(m.rows()) +
                                          "x" + std::to_string(m.cols()));
  }
  if (!m.allFinite()) {
    throw Error(ErrorKind::domain, std::string(what) + ": non-finite entry");
  }
}

std::vector<SpectralComponent> hermitian_spectral(const ComplexMatrix& h, const ToleranceConfig& tol) {
  if (h.rows() != h.cols() || h.rows() == 0) {
    throw Error(ErrorKind::dimension, "hermitian_spectral: matrix must be square and nonempty");
  }
  const double norm = h.norm();
  const double skew = (h - h.adjoint()).norm();
  if (skew > tol.threshold(norm)) {
    throw ToleranceError(ErrorKind::contract_violation, "hermitian_spectral: input is not Hermitian", skew);
  }

  const ComplexMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::numerical_inconsistency, "hermitian_spectral: eigensolver did not converge");
  }
  const Eigen::VectorXd& values = solver.eigenvalues();  // ascending
  const ComplexMatrix& vectors = solver.eigenvectors();

  const double gap = tol.tol_eig_cluster * std::max(1.0, norm);
  std::vector<SpectralComponent> out;
  Index start = 0;
  const Index n = values.size();
  for (Index k = 1; k <= n; ++k) {
    if (k < n && values(k) - values(k - 1) <= gap) continue;
    const Index width = k - start;
    const auto block = vectors.middleCols(start, width);
    out.push_back({values.segment(start, width).mean(), block * block.adjoint()});
    start = k;
  }
  return out;
}

HsOrthonormalizer::HsOrthonormalizer(Index rows, Index cols, const ToleranceConfig& tol)
    : rows_(rows), cols_(cols), tol_(tol), columns_(rows * cols, 0) {}

bool HsOrthonormalizer::try_add(const ComplexMatrix& m) {
  if (m.rows() != rows_ || m.cols() != cols_) {
    throw Error(ErrorKind::dimension, "orthonormalize: shape mismatch");
  }
  Eigen::VectorXcd r = Eigen::Map<const Eigen::VectorXcd>(m.data(), rows_ * cols_);
  const double input_norm = r.norm();
  if (input_norm <= tol_.tol_zero) return false;
  for (int pass = 0; pass < 2 && columns_.cols() > 0; ++pass) {
    r -= columns_ * (columns_.adjoint() * r);
  }
  const double residual = r.norm();
  if (residual <= tol_.tol_rel * input_norm) return false;
  columns_.conservativeResize(Eigen::NoChange, columns_.cols() + 1);
  columns_.col(columns_.cols() - 1) = r / residual;
  return true;
}

ComplexMatrix HsOrthonormalizer::element(Index k) const {
  return Eigen::Map<const ComplexMatrix>(columns_.col(k).data(), rows_, cols_);
}

std::vector<ComplexMatrix> orthonormalize(const std::vector<ComplexMatrix>& vectors,
                                          const ToleranceConfig& tol) {
  std::vector<ComplexMatrix> out;
  if (vectors.empty()) return out;
  HsOrthonormalizer acc(vectors.front().rows(), vectors.front().cols(), tol);
  for (const auto& v : vectors) {
    if (acc.try_add(v)) out.push_back(acc.element(acc.size() - 1));
  }
  return out;
}

ComplexMatrix projector_range(const ComplexMatrix& p) {
  if (p.rows() != p.cols()) {
    throw Error(ErrorKind::dimension, "projector_range: matrix must be square");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (p + p.adjoint()));
  const Eigen::VectorXd& values = solver.eigenvalues();
  // projector eigenvalues are 0 or 1; ascending order puts the range last
  Index first = 0;
  while (first < values.size() && values(first) < 0.5) ++first;
  return solver.eigenvectors().rightCols(values.size() - first);
}

ComplexMatrix random_haar_unitary(Index n, std::uint64_t seed) {
  if (n < 1) {
    throw Error(ErrorKind::domain, "random_haar_unitary: n must be >= 1");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  ComplexMatrix z(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      z(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (Index j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    const Complex phase = mag > 0.0 ? r(j, j) / mag : Complex(1.0, 0.0);
    q.col(j) *= phase;
  }
  return q;
}

}  // namespace wedderburn
