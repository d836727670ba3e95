#include "wedderburn/instance_gen.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <random>

#include "wedderburn/errors.hpp"
#include "wedderburn/star_algebra.hpp"

namespace wedderburn {

namespace {

constexpr int kMaxRedraws = 16;

// distinct stream for the hidden unitary and for the block factors
constexpr std::uint64_t kUnitaryStream = 0x9e3779b97f4a7c15ULL;

ComplexMatrix gaussian_matrix(Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  ComplexMatrix g(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

Index parse_size_suffix(const std::string& name, std::string_view prefix) {
  const std::string_view rest = std::string_view(name).substr(prefix.size());
  Index n = 0;
  const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
  if (ec != std::errc() || ptr != rest.data() + rest.size() || n < 1) {
    throw Error(ErrorKind::catalog, "named_instance: bad size in '" + name + "'");
  }
  return n;
}

using Perm = std::array<int, 3>;

Perm compose(const Perm& a, const Perm& b) {  // (a o b)(x) = a(b(x))
  return {a[b[0]], a[b[1]], a[b[2]]};
}

}  // namespace

PlantedInstance generate_planted(const std::vector<BlockShape>& structure, Index num_generators,
                                 std::uint64_t seed) {
  if (structure.empty()) {
    throw Error(ErrorKind::domain, "generate_planted: empty structure");
  }
  if (num_generators < 1) {
    throw Error(ErrorKind::domain, "generate_planted: need at least one generator");
  }
  Index dim = 0;
  Index algebra_dim = 0;
  for (const auto& s : structure) {
    if (s.p < 1 || s.q < 1) {
      throw Error(ErrorKind::domain, "generate_planted: block sizes must be >= 1");
    }
    dim += s.p * s.q;
    algebra_dim += s.p * s.p;
  }

  PlantedInstance inst;
  inst.structure = structure;
  inst.seed = seed;
  inst.hidden_u = random_haar_unitary(dim, seed ^ kUnitaryStream);

  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(attempt));
    inst.generators.clear();
    for (Index g = 0; g < num_generators; ++g) {
      ComplexMatrix block = ComplexMatrix::Zero(dim, dim);
      Index offset = 0;
      for (const auto& s : structure) {
        const ComplexMatrix factor = gaussian_matrix(s.p, rng);
        for (Index i = 0; i < s.p; ++i)
          for (Index j = 0; j < s.p; ++j)
            for (Index r = 0; r < s.q; ++r) block(offset + i * s.q + r, offset + j * s.q + r) = factor(i, j);
        offset += s.p * s.q;
      }
      inst.generators.push_back(inst.hidden_u.adjoint() * block * inst.hidden_u);
    }
    if (close_unital_star_algebra(inst.generators, dim, ToleranceConfig{}).size() == algebra_dim) {
      return inst;
    }
  }
  throw Error(ErrorKind::structural_inconsistency,
              "generate_planted: generators never reached the planted algebra dimension");
}

std::vector<ComplexMatrix> s3_regular_generators() {
  std::vector<Perm> group{{0, 1, 2}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}};
  const auto index_of = [&](const Perm& g) {
    return static_cast<Index>(std::find(group.begin(), group.end(), g) - group.begin());
  };
  const auto left_regular = [&](const Perm& g) {
    ComplexMatrix m = ComplexMatrix::Zero(6, 6);
    for (Index h = 0; h < 6; ++h) m(index_of(compose(g, group[h])), h) = 1.0;
    return m;
  };
  return {left_regular({1, 0, 2}), left_regular({1, 2, 0})};
}

NamedInstance named_instance(const std::string& name) {
  NamedInstance inst;
  inst.name = name;
  if (name == "s3_regular") {
    inst.dim_h = 6;
    inst.generators = s3_regular_generators();
    inst.expected_structure = {{2, 2}, {1, 1}, {1, 1}};
  } else if (name.starts_with("full_")) {
    const Index n = parse_size_suffix(name, "full_");
    inst.dim_h = n;
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        ComplexMatrix e = ComplexMatrix::Zero(n, n);
        e(i, j) = 1.0;
        inst.generators.push_back(std::move(e));
      }
    }
    inst.expected_structure = {{n, 1}};
  } else if (name.starts_with("scalars_")) {
    const Index n = parse_size_suffix(name, "scalars_");
    inst.dim_h = n;
    inst.expected_structure = {{1, n}};
  } else if (name.starts_with("diag_")) {
    const Index n = parse_size_suffix(name, "diag_");
    inst.dim_h = n;
    ComplexMatrix d = ComplexMatrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) d(i, i) = static_cast<double>(i + 1);
    inst.generators.push_back(std::move(d));
    inst.expected_structure.assign(static_cast<std::size_t>(n), BlockShape{1, 1});
  } else {
    throw Error(ErrorKind::catalog, "named_instance: unknown instance '" + name + "'");
  }
  return inst;
}

}  // namespace wedderburn
