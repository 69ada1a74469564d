#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "stonework/center_algebra.hpp"
#include "stonework/fibered_operator.hpp"
#include "stonework/hilbert_module.hpp"
#include "stonework/module_element.hpp"
#include "stonework/numerics.hpp"
#include "stonework/stone_spectrum.hpp"

namespace stonework {

/// SplitMix64 with hand-rolled derived distributions, so a seed yields the
/// same stream on every platform and in every language binding.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal by Box–Muller (cosine branch only).
  double normal();
  /// Uniform integer in [0, bound).
  std::size_t below(std::size_t bound);
  bool chance(double p) { return uniform() < p; }

 private:
  std::uint64_t state_;
};

Complex random_complex(SplitMix64& rng);
ComplexVector random_vector(SplitMix64& rng, std::size_t n);
ComplexVector random_unit_vector(SplitMix64& rng, std::size_t n);
ComplexMatrix random_matrix(SplitMix64& rng, std::size_t n);
ComplexMatrix random_hermitian(SplitMix64& rng, std::size_t n);
/// Gram–Schmidt on Gaussian columns.
ComplexMatrix random_unitary(SplitMix64& rng, std::size_t n);
/// Orthogonal projection of the given rank onto a random subspace.
ComplexMatrix random_projection(SplitMix64& rng, std::size_t n, std::size_t rank);

CenterElement random_center(SplitMix64& rng, std::size_t m);
/// Each fiber is zero with probability zero_prob, Gaussian otherwise.
ModuleElement random_module_element(SplitMix64& rng, std::size_t n, std::size_t m,
                                    double zero_prob = 0.25);
ModuleElement random_normalized(SplitMix64& rng, std::size_t n, std::size_t m,
                                double zero_prob = 0.25);
Submodule random_submodule(SplitMix64& rng, std::size_t n, std::size_t m, std::size_t generators);

FiberedOperator random_operator(SplitMix64& rng, std::size_t n, std::size_t m);
FiberedOperator random_self_adjoint(SplitMix64& rng, std::size_t n, std::size_t m);
FiberedOperator random_unitary_operator(SplitMix64& rng, std::size_t n, std::size_t m);
/// Independent uniformly chosen rank in [0, n] per fiber.
FiberedOperator random_projection_operator(SplitMix64& rng, std::size_t n, std::size_t m);

Quasipoint random_quasipoint(SplitMix64& rng, std::size_t n, std::size_t m);

/// Generators for a small projection lattice: per fiber a random orthonormal
/// frame, each generator taking a random set of frame vectors, with an
/// occasional generic projection mixed in. The caller closes them.
std::vector<FiberedOperator> random_lattice_generators(SplitMix64& rng, std::size_t n,
                                                       std::size_t m, std::size_t count);

}  // namespace stonework
