#pragma once

#include <vector>

#include "stonework/center_algebra.hpp"
#include "stonework/fibered_operator.hpp"
#include "stonework/module_element.hpp"
#include "stonework/numerics.hpp"

namespace stonework {

/// Fiberwise conjugate transpose; the module adjoint (Ta|b) = (a|T*b).
FiberedOperator adjoint(const FiberedOperator& t);

/// Smallest central projection p with (Iₙp)P = P: p(ω) = 1 iff P(ω) ≠ 0.
CenterElement central_carrier(const FiberedOperator& p, Tolerance tol = {});

/// A projection is abelian iff every fiber has rank at most one.
bool is_abelian_projection(const FiberedOperator& p, Tolerance tol = {});

/// The a with E_a = P. At each rank-one fiber a(ω) is the unit vector
/// spanning im P(ω), phase-fixed so its first component of modulus above eps
/// is real positive; a(ω) = 0 on zero fibers.
ModuleElement abelian_generator(const FiberedOperator& p, Tolerance tol = {});

struct DiagonalSum {
  FiberedOperator op;
  bool is_projection = false;
};

/// Σₖ aₖE_{eₖ}, i.e. diag(a₁(ω), …, aₙ(ω)) at every fiber. The flag is set
/// iff every aₖ is a projection.
DiagonalSum diagonal_sum_projection(const std::vector<CenterElement>& a);

/// θPθ* for P ≤ θ*θ; the image of im P under θ.
FiberedOperator transport(const FiberedOperator& theta, const FiberedOperator& p, Tolerance tol = {});

/// θ with θ*θ = E and θθ* = F for abelian E, F with equal central carriers,
/// built fiberwise as |gen_F(ω)⟩⟨gen_E(ω)|.
FiberedOperator equivalence_partial_isometry(const FiberedOperator& e, const FiberedOperator& f,
                                             Tolerance tol = {});

}  // namespace stonework
