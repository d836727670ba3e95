#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "wedderburn/tolerance.hpp"

namespace wedderburn {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

/// trace(a^dagger b). Conjugate-linear in a, linear in b.
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

double frobenius_norm(const ComplexMatrix& a);

ComplexMatrix identity(Index n);

/// Throws a dimension error unless the matrix is square with all entries finite.
void require_square(const ComplexMatrix& m, Index n, const char* what);

bool all_finite(const ComplexMatrix& m);

struct SpectralComponent {
  double eigenvalue;         // cluster representative (mean of merged eigenvalues)
  ComplexMatrix projector;   // orthogonal projector onto the cluster's eigenspace
};

/// Spectral decomposition of a Hermitian matrix with eigenvalue clustering.
///
/// Raw eigenvalues are sorted ascending and merged by single linkage whenever
/// consecutive gaps are <= tol_eig_cluster * max(1, |h|_F). Components come out
/// in ascending eigenvalue order, their projectors sum to the identity and
/// sum(lambda_k Q_k) reconstructs h within tol_rel * |h|_F.
std::vector<SpectralComponent> hermitian_spectral(const ComplexMatrix& h, const ToleranceConfig& tol);

/// Incremental Hilbert-Schmidt Gram-Schmidt over fixed-shape matrices, with a
/// second reorthogonalization pass. Elements are stored vectorized.
class HsOrthonormalizer {
 public:
  HsOrthonormalizer(Index rows, Index cols, const ToleranceConfig& tol);

  /// Appends the normalized residual of m unless |residual| <= tol_rel * |m|.
  bool try_add(const ComplexMatrix& m);

  Index size() const { return columns_.cols(); }
  ComplexMatrix element(Index k) const;

 private:
  Index rows_;
  Index cols_;
  ToleranceConfig tol_;
  Eigen::MatrixXcd columns_;
};

/// Gram-Schmidt (two passes) under the Hilbert-Schmidt inner product. An input
/// whose residual norm is <= tol_rel times its own norm is dropped.
std::vector<ComplexMatrix> orthonormalize(const std::vector<ComplexMatrix>& vectors,
                                          const ToleranceConfig& tol);

/// Orthonormal column basis (n x rank) of the range of an orthogonal projector.
ComplexMatrix projector_range(const ComplexMatrix& p);

/// Haar-distributed n x n unitary from the QR decomposition of a complex
/// Ginibre matrix with phase-corrected R diagonal. Deterministic in (n, seed).
ComplexMatrix random_haar_unitary(Index n, std::uint64_t seed);

}  // namespace wedderburn
