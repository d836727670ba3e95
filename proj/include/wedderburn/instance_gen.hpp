#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wedderburn/decomposition.hpp"

namespace wedderburn {

/// Generators of hidden_u^dagger ((+)_k L(C^{p_k}) (x) 1_{q_k}) hidden_u.
struct PlantedInstance {
  std::vector<BlockShape> structure;
  ComplexMatrix hidden_u;
  std::vector<ComplexMatrix> generators;
  std::uint64_t seed = 0;

  Index dim_h() const { return hidden_u.rows(); }
};

/// Each generator carries an independent complex Gaussian p_k x p_k factor per
/// block. The closure dimension is checked against sum p_k^2 and the draw is
/// repeated with the next sub-seed if it falls short.
PlantedInstance generate_planted(const std::vector<BlockShape>& structure, Index num_generators,
                                 std::uint64_t seed);

struct NamedInstance {
  std::string name;
  Index dim_h = 0;
  std::vector<ComplexMatrix> generators;
  std::vector<BlockShape> expected_structure;  // canonical order
};

/// Catalog: full_<n>, scalars_<n>, diag_<n>, s3_regular. Throws a catalog
/// error for anything else.
NamedInstance named_instance(const std::string& name);

/// 6x6 left-regular representation matrices of the transposition (0 1) and
/// the 3-cycle (0 1 2) in S3.
std::vector<ComplexMatrix> s3_regular_generators();

}  // namespace wedderburn
