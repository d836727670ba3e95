#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "wedderburn/matrix_core.hpp"

namespace wedderburn::testing {

inline ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

inline ComplexMatrix unit(Index n, Index i, Index j) {
  ComplexMatrix e = ComplexMatrix::Zero(n, n);
  e(i, j) = 1.0;
  return e;
}

inline ComplexMatrix diag(std::initializer_list<double> values) {
  const auto n = static_cast<Index>(values.size());
  ComplexMatrix d = ComplexMatrix::Zero(n, n);
  Index k = 0;
  for (double v : values) {
    d(k, k) = v;
    ++k;
  }
  return d;
}

inline ComplexMatrix random_matrix(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  ComplexMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) {
      const double re = gauss(rng);
      m(i, j) = Complex(re, gauss(rng));
    }
  return m;
}

inline ComplexMatrix random_hermitian(Index n, std::mt19937_64& rng) {
  const ComplexMatrix a = random_matrix(n, n, rng);
  return 0.5 * (a + a.adjoint());
}

/// Block-diagonal embedding of square matrices.
inline ComplexMatrix direct_sum(const std::vector<ComplexMatrix>& blocks) {
  Index n = 0;
  for (const auto& b : blocks) n += b.rows();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  Index offset = 0;
  for (const auto& b : blocks) {
    out.block(offset, offset, b.rows(), b.cols()) = b;
    offset += b.rows();
  }
  return out;
}

/// Dimension of the span of a set of matrices, by SVD rank of the stacked
/// vectorizations. Independent of the Gram-Schmidt path.
inline Index span_dimension(const std::vector<ComplexMatrix>& ms, double tol = 1e-9) {
  if (ms.empty()) return 0;
  const Index len = ms.front().size();
  Eigen::MatrixXcd stacked(len, static_cast<Index>(ms.size()));
  for (std::size_t k = 0; k < ms.size(); ++k) {
    stacked.col(static_cast<Index>(k)) = Eigen::Map<const Eigen::VectorXcd>(ms[k].data(), len);
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stacked);
  const auto& s = svd.singularValues();
  Index rank = 0;
  for (Index k = 0; k < s.size(); ++k)
    if (s(k) > tol * s(0)) ++rank;
  return rank;
}

/// Brute-force closure of a finite matrix group: multiply until no new
/// elements appear (entries compared exactly; permutation matrices only).
inline std::vector<ComplexMatrix> group_closure(const std::vector<ComplexMatrix>& gens) {
  std::vector<ComplexMatrix> elements{ComplexMatrix::Identity(gens.front().rows(), gens.front().cols())};
  bool grew = true;
  while (grew) {
    grew = false;
    const auto current = elements;
    for (const auto& a : current) {
      for (const auto& g : gens) {
        const ComplexMatrix prod = g * a;
        bool seen = false;
        for (const auto& e : elements) seen = seen || e == prod;
        if (!seen) {
          elements.push_back(prod);
          grew = true;
        }
      }
    }
  }
  return elements;
}

/// Fresh scratch directory, removed on destruction.
class ScratchDir {
 public:
  explicit ScratchDir(const std::string& tag) {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() / ("wedderburn-" + tag + "-" + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~ScratchDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  ScratchDir(const ScratchDir&) = delete;
  ScratchDir& operator=(const ScratchDir&) = delete;

  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace wedderburn::testing
