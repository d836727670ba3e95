#include "wedderburn/class_partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "wedderburn/errors.hpp"

namespace wedderburn {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // smaller root wins so every root is its class's smallest index
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

bool are_linked(Index i, Index j, const ProjectorFamily& family, const AlgebraBasis& basis,
                const ToleranceConfig& tol) {
  if (i < 0 || j < 0 || i >= family.size() || j >= family.size()) {
    throw Error(ErrorKind::dimension, "are_linked: projector index out of range");
  }
  const ComplexMatrix& pi = family.projectors[i];
  const ComplexMatrix& pj = family.projectors[j];
  return std::any_of(basis.elements.begin(), basis.elements.end(), [&](const ComplexMatrix& g) {
    return (pi * g * pj).norm() > tol.threshold(g.norm());
  });
}

std::vector<std::vector<bool>> link_matrix(const ProjectorFamily& family, const AlgebraBasis& basis,
                                           const ToleranceConfig& tol) {
  const auto n = static_cast<std::size_t>(family.size());
  std::vector<std::vector<bool>> links(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      links[i][j] = are_linked(static_cast<Index>(i), static_cast<Index>(j), family, basis, tol);
    }
  }
  return links;
}

bool links_transitive(const std::vector<std::vector<bool>>& links) {
  const std::size_t n = links.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (links[i][j] && links[j][k] && !links[i][k]) return false;
  return true;
}

ClassPartition partition_classes(const ProjectorFamily& family, const AlgebraBasis& basis,
                                 const ToleranceConfig& tol) {
  const auto links = link_matrix(family, basis, tol);
  const std::size_t n = links.size();

  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (links[i][j] != links[j][i]) {
        throw Error(ErrorKind::numerical_inconsistency,
                    "partition_classes: link matrix is not symmetric at (" + std::to_string(i) + ", " +
                        std::to_string(j) + ")");
      }
      if (links[i][j]) uf.unite(i, j);
    }
  }

  // roots are smallest members, so map order is class order
  std::map<std::size_t, std::vector<Index>> grouped;
  for (std::size_t i = 0; i < n; ++i) grouped[uf.find(i)].push_back(static_cast<Index>(i));

  ClassPartition partition;
  for (auto& [root, members] : grouped) {
    std::vector<ComplexMatrix> ranges;
    Index dim = 0;
    for (Index i : members) {
      ranges.push_back(projector_range(family.projectors[i]));
      dim += ranges.back().cols();
    }
    ComplexMatrix isometry(family.dim_h, dim);
    Index col = 0;
    for (const auto& r : ranges) {
      isometry.middleCols(col, r.cols()) = r;
      col += r.cols();
    }
    partition.classes.push_back(std::move(members));
    partition.class_isometries.push_back(std::move(isometry));
    partition.class_dims.push_back(dim);
  }
  return partition;
}

}  // namespace wedderburn
