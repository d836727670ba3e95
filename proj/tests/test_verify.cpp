#include <doctest.h>

#include "test_support.hpp"
#include "wedderburn/errors.hpp"
#include "wedderburn/instance_gen.hpp"
#include "wedderburn/verify.hpp"

using namespace wedderburn;
using namespace wedderburn::testing;

TEST_CASE("verify passes on the full algebra") {
  const ToleranceConfig tol;
  const auto inst = named_instance("full_3");
  const auto d = decompose(inst.generators, 3, tol);
  const auto report = verify_decomposition(inst.generators, d, tol);
  CHECK(report.passed);
  CHECK(report.structure == std::vector<BlockShape>{{3, 1}});
  CHECK(report.dimension_identity);
  CHECK(report.algebra_dim == 9);
}

TEST_CASE("verify on scalars has zero residuals") {
  const ToleranceConfig tol;
  const auto d = decompose({}, 5, tol);
  const auto report = verify_decomposition({}, d, tol);
  CHECK(report.passed);
  CHECK(report.structure == std::vector<BlockShape>{{1, 5}});
  CHECK(report.unitarity_residual <= 1e-12);
  CHECK(report.max_block_residual <= 1e-12);
  CHECK(report.projector_image_residual <= 1e-12);
}

TEST_CASE("a random unitary fails verification on a planted instance") {
  const ToleranceConfig tol;
  const auto planted = generate_planted({{2, 2}, {1, 3}}, 2, 6);
  const auto d = decompose(planted.generators, planted.dim_h(), tol);
  CHECK(verify_decomposition(planted.generators, d, tol).passed);

  auto claim = claim_of(d);
  claim.global_u = random_haar_unitary(planted.dim_h(), 77);
  const auto report = verify_decomposition(planted.generators, claim, tol);
  CHECK_FALSE(report.passed);
  CHECK(report.max_block_residual > 1e-2);
  CHECK(report.projector_image_residual > 1e-2);
  CHECK(report.unitarity_residual <= 1e-12);

  claim.global_u = identity(planted.dim_h());
  CHECK_FALSE(verify_decomposition(planted.generators, claim, tol).passed);
}

TEST_CASE("every unitary decomposes the full matrix algebra") {
  // L(C^n) with structure [(n,1)] is invariant under any conjugation, so the
  // identity is a valid claim there.
  const ToleranceConfig tol;
  const auto inst = named_instance("full_3");
  auto claim = claim_of(decompose(inst.generators, 3, tol));
  claim.global_u = identity(3);
  const auto report = verify_decomposition(inst.generators, claim, tol);
  CHECK(report.max_block_residual <= 1e-12);
  CHECK(report.passed);
}

TEST_CASE("a wrong structure breaks the dimension identity") {
  const ToleranceConfig tol;
  const auto inst = named_instance("diag_3");
  ClaimedDecomposition claim{3, {{1, 3}}, identity(3), {0}};
  const auto report = verify_decomposition(inst.generators, claim, tol);
  CHECK_FALSE(report.dimension_identity);
  CHECK(report.algebra_dim == 3);
  CHECK(report.sum_p_squared == 1);
  CHECK_FALSE(report.passed);
}

TEST_CASE("unitarity residual grows linearly with noise on U") {
  const ToleranceConfig tol;
  const auto planted = generate_planted({{2, 2}, {1, 2}}, 2, 3);
  const auto d = decompose(planted.generators, planted.dim_h(), tol);
  std::mt19937_64 rng(1);
  const ComplexMatrix noise = random_matrix(planted.dim_h(), planted.dim_h(), rng);
  std::vector<double> residuals;
  for (double eps : {1e-8, 1e-6, 1e-4}) {
    auto claim = claim_of(d);
    claim.global_u += eps * noise / noise.norm();
    residuals.push_back(verify_decomposition(planted.generators, claim, tol).unitarity_residual);
  }
  CHECK(residuals[0] < residuals[1]);
  CHECK(residuals[1] < residuals[2]);
  // Theta(eps): each two-decade step in eps moves the residual by ~100x
  CHECK(residuals[1] / residuals[0] == doctest::Approx(100.0).epsilon(0.1));
  CHECK(residuals[2] / residuals[1] == doctest::Approx(100.0).epsilon(0.1));
}

TEST_CASE("inconsistent shapes throw") {
  const ToleranceConfig tol;
  ClaimedDecomposition bad_u{3, {{1, 3}}, identity(2), {0}};
  CHECK_THROWS_AS(verify_decomposition({}, bad_u, tol), Error);
  ClaimedDecomposition bad_sum{3, {{1, 2}}, identity(3), {0}};
  CHECK_THROWS_AS(verify_decomposition({}, bad_sum, tol), Error);
  ClaimedDecomposition bad_offsets{3, {{1, 1}, {1, 2}}, identity(3), {0, 2}};
  CHECK_THROWS_AS(verify_decomposition({}, bad_offsets, tol), Error);
  ClaimedDecomposition ok{3, {{1, 3}}, identity(3), {0}};
  CHECK_THROWS_AS(verify_decomposition({identity(2)}, ok, tol), Error);
}

TEST_CASE("verification is deterministic") {
  const ToleranceConfig tol;
  const auto inst = named_instance("s3_regular");
  const auto d = decompose(inst.generators, 6, tol);
  const auto a = verify_decomposition(inst.generators, d, tol);
  const auto b = verify_decomposition(inst.generators, d, tol);
  CHECK(a.max_block_residual == b.max_block_residual);
  CHECK(a.projector_image_residual == b.projector_image_residual);
  CHECK(a.unitarity_residual == b.unitarity_residual);
}
