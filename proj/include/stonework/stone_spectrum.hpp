#pragma once

#include <cstddef>
#include <optional>

#include "stonework/center_algebra.hpp"
#include "stonework/fibered_operator.hpp"
#include "stonework/lattice_filters.hpp"
#include "stonework/module_element.hpp"
#include "stonework/numerics.hpp"

namespace stonework {

/// Two unit lines are equal when |⟨x,y⟩| ≥ 1 − kLineTolerance.
inline constexpr double kLineTolerance = 1e-10;

/// The quasipoint 𝔅_{ω,x} = {P : P(ω)x = x} of Mₙ(𝒜), stored by its
/// parameters. The line is kept unit length with its first significant
/// entry real and positive.
struct Quasipoint {
  CenterQuasipoint omega;
  ComplexVector line;

  std::size_t rank() const noexcept { return line.size(); }
};

/// Normalizes and phase-fixes x. Throws ZeroModule when x vanishes.
Quasipoint make_quasipoint(std::size_t omega, std::span<const Complex> x);

bool same_line(std::span<const Complex> x, std::span<const Complex> y);
bool same_quasipoint(const Quasipoint& a, const Quasipoint& b);

/// [a]_β, represented by a(ω_β).
struct GermVector {
  CenterQuasipoint beta;
  ComplexVector value;
};

bool qp_contains(const Quasipoint& b, const FiberedOperator& p, Tolerance tol = {});

/// χ_ω·P_{ℂx}: the abelian projection that generates B as an up-set.
FiberedOperator atomic_projection(const Quasipoint& b, std::size_t m);

/// For P ∉ B, a member Q of B with (P ∧ Q)(ω) = 0, so B ∪ {P} has no
/// common lower bound for P and Q. Throws AlreadyMember when P ∈ B.
FiberedOperator maximality_witness(const Quasipoint& b, const FiberedOperator& p, Tolerance tol = {});

CenterQuasipoint zeta(const Quasipoint& b);

/// U.B = (ω, U(ω)x). Throws NotUnitary.
Quasipoint unitary_act(const FiberedOperator& u, const Quasipoint& b, Tolerance tol = {});

/// θ_𝒬(B) = (ω, θ(ω)x normalized). Throws NotPartialIsometry, and
/// NotSubordinate when θ*θ ∉ B.
Quasipoint partial_isometry_act(const FiberedOperator& theta, const Quasipoint& b,
                                Tolerance tol = {});

/// A unitary U with U.B = B2, identity away from ω; none when ζ(B) ≠ ζ(B2).
std::optional<FiberedOperator> orbit_witness(const Quasipoint& b, const Quasipoint& b2,
                                             std::size_t m);

GermVector germ_eval(const ModuleElement& a, CenterQuasipoint beta);
Complex germ_eval(const CenterElement& alpha, CenterQuasipoint beta);

/// A representative of [α]_β^{-1}: 1/α where α ≠ 0, zero elsewhere.
/// Throws ZeroModule when [α]_β = 0.
CenterElement germ_inverse(const CenterElement& alpha, CenterQuasipoint beta);

/// [M]_β ⊂ ℂⁿ as the orthogonal projection onto the span of the generator germs.
ComplexMatrix germ_submodule(const Submodule& m, CenterQuasipoint beta, Tolerance tol = {});

/// Some 𝔅_{ω,x} containing every member of F: ω is the first fiber on which
/// the least member of F is nonzero and x its phase-fixed top eigenvector.
/// Throws EmptyFilter for an empty F and NotFilterBase when F has no
/// nonzero lower bound.
Quasipoint extend_filter_to_quasipoint(const FiniteLattice& lattice, const Filter& f,
                                       Tolerance tol = {});

/// r ∈ ζ(B) with r·Ea = r·Eb: the fibers where Ea and Eb are the same
/// rank-one projection. Throws NotAbelian, and NotMember when Ea or Eb ∉ B.
CenterElement common_central_reduction(const FiberedOperator& ea, const FiberedOperator& eb,
                                       const Quasipoint& b, Tolerance tol = {});

}  // namespace stonework
