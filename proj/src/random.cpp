#include "stonework/random.hpp"

#include <cmath>
#include <numbers>

namespace stonework {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double SplitMix64::normal() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::size_t SplitMix64::below(std::size_t bound) {
  if (bound == 0) throw Error(ErrorCode::OutOfRange, "below(0)");
  return static_cast<std::size_t>(uniform() * static_cast<double>(bound));
}

Complex random_complex(SplitMix64& rng) {
  const double re = rng.normal();
  const double im = rng.normal();
  return {re, im};
}

ComplexVector random_vector(SplitMix64& rng, std::size_t n) {
  ComplexVector v(n);
  for (auto& z : v) z = random_complex(rng);
  return v;
}

ComplexVector random_unit_vector(SplitMix64& rng, std::size_t n) {
  ComplexVector v = random_vector(rng, n);
  return scaled(v, 1.0 / norm(v));
}

ComplexMatrix random_matrix(SplitMix64& rng, std::size_t n) {
  ComplexMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = random_complex(rng);
  }
  return a;
}

ComplexMatrix random_hermitian(SplitMix64& rng, std::size_t n) {
  const ComplexMatrix a = random_matrix(rng, n);
  ComplexMatrix h = (a + a.adjoint()) * Complex{0.5};
  for (std::size_t k = 0; k < n; ++k) h(k, k) = h(k, k).real();
  return h;
}

ComplexMatrix random_unitary(SplitMix64& rng, std::size_t n) {
  std::vector<ComplexVector> cols;
  while (cols.size() < n) {
    ComplexVector v = random_vector(rng, n);
    for (const auto& q : cols) v = difference(v, scaled(q, dot(q, v)));
    const double len = norm(v);
    if (len < 1e-8) continue;
    cols.push_back(scaled(v, 1.0 / len));
  }
  return ComplexMatrix::from_columns(n, cols);
}

ComplexMatrix random_projection(SplitMix64& rng, std::size_t n, std::size_t rank) {
  const ComplexMatrix u = random_unitary(rng, n);
  std::vector<ComplexVector> basis;
  for (std::size_t k = 0; k < rank && k < n; ++k) basis.push_back(u.column(k));
  return projection_from_basis(n, basis);
}

CenterElement random_center(SplitMix64& rng, std::size_t m) {
  std::vector<Complex> values(m);
  for (auto& z : values) z = random_complex(rng);
  return CenterElement(std::move(values));
}

ModuleElement random_module_element(SplitMix64& rng, std::size_t n, std::size_t m, double zero_prob) {
  std::vector<ComplexVector> fibers;
  for (std::size_t omega = 0; omega < m; ++omega) {
    fibers.push_back(rng.chance(zero_prob) ? ComplexVector(n) : random_vector(rng, n));
  }
  return ModuleElement::from_fibers(std::move(fibers));
}

ModuleElement random_normalized(SplitMix64& rng, std::size_t n, std::size_t m, double zero_prob) {
  return normalize(random_module_element(rng, n, m, zero_prob));
}

Submodule random_submodule(SplitMix64& rng, std::size_t n, std::size_t m, std::size_t generators) {
  Submodule s;
  for (std::size_t k = 0; k < generators; ++k) {
    s.generators.push_back(random_module_element(rng, n, m));
  }
  return s;
}

FiberedOperator random_operator(SplitMix64& rng, std::size_t n, std::size_t m) {
  std::vector<ComplexMatrix> fibers;
  for (std::size_t omega = 0; omega < m; ++omega) fibers.push_back(random_matrix(rng, n));
  return FiberedOperator(std::move(fibers));
}

FiberedOperator random_self_adjoint(SplitMix64& rng, std::size_t n, std::size_t m) {
  std::vector<ComplexMatrix> fibers;
  for (std::size_t omega = 0; omega < m; ++omega) fibers.push_back(random_hermitian(rng, n));
  return FiberedOperator(std::move(fibers));
}

FiberedOperator random_unitary_operator(SplitMix64& rng, std::size_t n, std::size_t m) {
  std::vector<ComplexMatrix> fibers;
  for (std::size_t omega = 0; omega < m; ++omega) fibers.push_back(random_unitary(rng, n));
  return FiberedOperator(std::move(fibers));
}

FiberedOperator random_projection_operator(SplitMix64& rng, std::size_t n, std::size_t m) {
  std::vector<ComplexMatrix> fibers;
  for (std::size_t omega = 0; omega < m; ++omega) {
    fibers.push_back(random_projection(rng, n, rng.below(n + 1)));
  }
  return FiberedOperator(std::move(fibers));
}

Quasipoint random_quasipoint(SplitMix64& rng, std::size_t n, std::size_t m) {
  const std::size_t omega = rng.below(m);
  return make_quasipoint(omega, random_unit_vector(rng, n));
}

std::vector<FiberedOperator> random_lattice_generators(SplitMix64& rng, std::size_t n,
                                                       std::size_t m, std::size_t count) {
  std::vector<ComplexMatrix> frames;
  for (std::size_t omega = 0; omega < m; ++omega) frames.push_back(random_unitary(rng, n));
  std::vector<FiberedOperator> gens;
  for (std::size_t g = 0; g < count; ++g) {
    std::vector<ComplexMatrix> fibers;
    for (std::size_t omega = 0; omega < m; ++omega) {
      if (rng.chance(0.15)) {
        fibers.push_back(random_projection(rng, n, rng.below(n + 1)));
        continue;
      }
      std::vector<ComplexVector> basis;
      for (std::size_t k = 0; k < n; ++k) {
        if (rng.chance(0.5)) basis.push_back(frames[omega].column(k));
      }
      fibers.push_back(projection_from_basis(n, basis));
    }
    gens.emplace_back(std::move(fibers));
  }
  return gens;
}

}  // namespace stonework
