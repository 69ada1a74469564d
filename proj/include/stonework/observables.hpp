#pragma once

#include <vector>

#include "stonework/fibered_operator.hpp"
#include "stonework/numerics.hpp"
#include "stonework/stone_spectrum.hpp"

namespace stonework {

/// Right-continuous step data of one fiber: ascending distinct eigenvalues
/// and E_λᵢ = sum of the eigenprojections with eigenvalue ≤ λᵢ. The last
/// step is exactly the identity.
struct SpectralSteps {
  std::vector<double> lambdas;
  std::vector<ComplexMatrix> cumulative;
};

struct SpectralFamily {
  std::vector<SpectralSteps> fibers;
};

/// Eigenvalues within the clustering gap of each other share one step,
/// located at the cluster mean.
SpectralSteps spectral_steps(const ComplexMatrix& a, Tolerance tol = {});

/// Throws NotSelfAdjoint.
SpectralFamily spectral_family(const FiberedOperator& a, Tolerance tol = {});

/// f_A(B) = min{λ : E_λ(ω)x = x}. Throws NotSelfAdjoint.
double observable_value(const FiberedOperator& a, const Quasipoint& b, Tolerance tol = {});

/// Sorted distinct values of f_A over the sample.
std::vector<double> observable_image(const FiberedOperator& a, const std::vector<Quasipoint>& sample,
                                     Tolerance tol = {});

/// Sorted distinct step positions over all fibers.
std::vector<double> spectrum(const FiberedOperator& a, Tolerance tol = {});

/// One quasipoint per eigenvector of every fiber.
std::vector<Quasipoint> eigenline_quasipoints(const FiberedOperator& a, Tolerance tol = {});

}  // namespace stonework
