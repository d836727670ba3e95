#include <doctest.h>

#include <numeric>

#include "test_support.hpp"
#include "wedderburn/errors.hpp"
#include "wedderburn/instance_gen.hpp"
#include "wedderburn/projector_lattice.hpp"

using namespace wedderburn;
using namespace wedderburn::testing;

namespace {

AlgebraBasis basis_of(const std::string& name) {
  const auto inst = named_instance(name);
  return close_unital_star_algebra(inst.generators, inst.dim_h, ToleranceConfig{});
}

Index total_rank(const ProjectorFamily& f) { return std::accumulate(f.ranks.begin(), f.ranks.end(), Index{0}); }

}  // namespace

TEST_CASE("proportionality_coefficient examples") {
  const ToleranceConfig tol;
  const ComplexMatrix p = diag({1, 0, 1});
  auto one = proportionality_coefficient(identity(3), p, tol);
  REQUIRE(one);
  CHECK(std::abs(*one - Complex(1.0, 0.0)) < 1e-15);

  CHECK_FALSE(proportionality_coefficient(pauli_z(), identity(2), tol));
  // residual of sigma_z against span{1}: |sigma_z|_F
  CHECK(proportionality_residual(pauli_z(), identity(2)) == doctest::Approx(std::sqrt(2.0)));

  auto self = proportionality_coefficient(p, p, tol);
  REQUIRE(self);
  CHECK(std::abs(*self - Complex(1.0, 0.0)) < 1e-15);

  CHECK_THROWS_AS(proportionality_coefficient(identity(2), ComplexMatrix::Zero(2, 2), tol), Error);
}

TEST_CASE("refine_projector examples") {
  const ToleranceConfig tol;

  SUBCASE("scalars are irreducible") {
    const auto basis = close_unital_star_algebra({}, 2, tol);
    CHECK_FALSE(refine_projector(identity(2), basis, tol));
  }
  SUBCASE("full algebra on C^2 splits the identity in two") {
    const auto basis = basis_of("full_2");
    const auto pieces = refine_projector(identity(2), basis, tol);
    REQUIRE(pieces);
    REQUIRE(pieces->size() == 2);
    for (const auto& q : *pieces) CHECK(q.trace().real() == doctest::Approx(1.0));
    CHECK(((*pieces)[0] + (*pieces)[1] - identity(2)).norm() <= tol.tol_rel);
  }
  SUBCASE("diagonal algebra on C^3 reaches rank-1 projectors in at most two rounds") {
    const auto basis = basis_of("diag_3");
    std::vector<ComplexMatrix> current{identity(3)};
    for (int round = 0; round < 2 && current.size() < 3; ++round) {
      std::vector<ComplexMatrix> next;
      for (const auto& p : current) {
        auto pieces = refine_projector(p, basis, tol);
        if (pieces) next.insert(next.end(), pieces->begin(), pieces->end());
        else next.push_back(p);
      }
      current = next;
    }
    REQUIRE(current.size() == 3);
    for (const auto& q : current) {
      CHECK(q.trace().real() == doctest::Approx(1.0));
      // diagonal projector
      CHECK((q - ComplexMatrix(q.diagonal().asDiagonal())).norm() < 1e-12);
    }
  }
}

TEST_CASE("refinement conserves the projector and stays in the algebra") {
  const ToleranceConfig tol;
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto inst = generate_planted({{2, 2}, {1, 3}, {3, 1}}, 2, seed);
    const auto basis = close_unital_star_algebra(inst.generators, inst.dim_h(), tol);
    const auto pieces = refine_projector(identity(inst.dim_h()), basis, tol);
    REQUIRE(pieces);
    CHECK(pieces->size() >= 2);
    ComplexMatrix sum = ComplexMatrix::Zero(inst.dim_h(), inst.dim_h());
    for (std::size_t a = 0; a < pieces->size(); ++a) {
      sum += (*pieces)[a];
      CHECK(membership_residual((*pieces)[a], basis) <= 10 * tol.tol_rel);
      for (std::size_t b = 0; b < pieces->size(); ++b) {
        const ComplexMatrix expected = a == b ? (*pieces)[a] : ComplexMatrix::Zero(inst.dim_h(), inst.dim_h());
        CHECK(((*pieces)[a] * (*pieces)[b] - expected).norm() <= tol.tol_rel);
      }
    }
    CHECK((sum - identity(inst.dim_h())).norm() <= tol.tol_rel);
  }
}

TEST_CASE("spectral projectors agree with the Lagrange polynomial in H") {
  // Q_k = prod_{l != k} (H - lambda_l p) / (lambda_k - lambda_l) is manifestly
  // a polynomial in algebra elements; the eigenvector route must match it.
  const ToleranceConfig tol;
  const auto inst = generate_planted({{3, 2}}, 2, 4);
  const auto basis = close_unital_star_algebra(inst.generators, inst.dim_h(), tol);
  const ComplexMatrix& m = basis.elements[3];
  const ComplexMatrix h = m + m.adjoint();
  const auto parts = hermitian_spectral(h, tol);
  REQUIRE(parts.size() == 3);
  const ComplexMatrix p = identity(inst.dim_h());
  for (std::size_t k = 0; k < parts.size(); ++k) {
    ComplexMatrix poly = p;
    for (std::size_t l = 0; l < parts.size(); ++l) {
      if (l == k) continue;
      poly = poly * (h - parts[l].eigenvalue * p) / (parts[k].eigenvalue - parts[l].eigenvalue);
    }
    CHECK((poly - parts[k].projector).norm() < 1e-8);
    CHECK(membership_residual(poly, basis) < 1e-8);
    // each eigenspace of a 3x3 factor tensored with 1_2 has rank 2
    CHECK(parts[k].projector.trace().real() == doctest::Approx(2.0));
  }
}

TEST_CASE("maximal_family examples") {
  const ToleranceConfig tol;

  SUBCASE("scalars") {
    for (Index n = 1; n <= 4; ++n) {
      const auto f = maximal_family(close_unital_star_algebra({}, n, tol), tol);
      REQUIRE(f.size() == 1);
      CHECK(f.ranks[0] == n);
      CHECK((f.projectors[0] - identity(n)).norm() == 0.0);
    }
  }
  SUBCASE("full algebra") {
    for (Index n = 2; n <= 5; ++n) {
      const auto basis = basis_of("full_" + std::to_string(n));
      const auto f = maximal_family(basis, tol);
      CHECK(f.size() == n);
      for (Index r : f.ranks) CHECK(r == 1);
      CHECK(certify_family(f, basis, tol).holds(tol.tol_rel));
    }
  }
  SUBCASE("L(C^2) tensor 1_2 on C^4") {
    const auto inst = generate_planted({{2, 2}}, 2, 9);
    const auto basis = close_unital_star_algebra(inst.generators, 4, tol);
    const auto f = maximal_family(basis, tol);
    CHECK(f.size() == 2);
    CHECK(f.ranks == std::vector<Index>{2, 2});
  }
}

TEST_CASE("maximal family invariants on planted instances") {
  const ToleranceConfig tol;
  std::mt19937_64 rng(21);
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto inst = generate_planted({{2, 3}, {1, 4}, {3, 1}}, 2, seed);
    const auto basis = close_unital_star_algebra(inst.generators, inst.dim_h(), tol);
    const auto f = maximal_family(basis, tol);
    CHECK(f.size() == 2 + 1 + 3);
    CHECK(total_rank(f) == inst.dim_h());
    const auto cert = certify_family(f, basis, tol);
    CHECK(cert.holds(tol.tol_rel));

    for (const auto& p : f.projectors) {
      // irreducible on every projector
      CHECK_FALSE(refine_projector(p, basis, tol));
      // p m p proportional to p for random span elements, not just basis elements
      for (int trial = 0; trial < 3; ++trial) {
        ComplexMatrix m = ComplexMatrix::Zero(inst.dim_h(), inst.dim_h());
        const ComplexMatrix coeffs = random_matrix(basis.size(), 1, rng);
        for (Index a = 0; a < basis.size(); ++a) m += coeffs(a, 0) * basis.elements[a];
        CHECK(proportionality_coefficient(m, p, tol));
      }
    }
  }
}

TEST_CASE("certificate flags a non-maximal family") {
  const ToleranceConfig tol;
  const auto basis = basis_of("full_3");
  ProjectorFamily trivial{3, {identity(3)}, {3}};
  const auto cert = certify_family(trivial, basis, tol);
  CHECK_FALSE(cert.maximal);
  CHECK(cert.completeness == 0.0);
  CHECK_FALSE(cert.holds(tol.tol_rel));
}
