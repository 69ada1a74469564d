#pragma once

#include "stonework/center_algebra.hpp"
#include "stonework/fibered_operator.hpp"
#include "stonework/module_element.hpp"
#include "stonework/numerics.hpp"

namespace stonework {

/// (a|b)(ω) = Σₖ conj(aₖ(ω))·bₖ(ω); 𝒜-linear in the second slot.
CenterElement inner(const ModuleElement& a, const ModuleElement& b);

/// |a| = ‖(a|a)‖^{1/2} with the sup norm on 𝒜.
double module_norm(const ModuleElement& a);

/// S(a) = {ω : (a|a)(ω) > eps·|a|²}.
PointSet support(const ModuleElement& a, Tolerance tol = {});
/// S(M) = ∪ₖ S(uₖ) over the generators.
PointSet support(const Submodule& m, Tolerance tol = {});

/// ã = a(a|a)^{-1/2} on S(a), 0 elsewhere. Fibers on which (a|a) already
/// equals 1 to within a few ulp are left untouched, so normalize is
/// idempotent and fixes elements whose (a|a) is a projection.
ModuleElement normalize(const ModuleElement& a, Tolerance tol = {});

/// |r⟩⟨s| : b ↦ r(s|b).
FiberedOperator ket_bra(const ModuleElement& r, const ModuleElement& s);

/// E_a : b ↦ a(a|b). Throws NotNormalized unless (a|a) is a projection
/// within eps; call normalize first for arbitrary a.
FiberedOperator abelian_projection(const ModuleElement& a, Tolerance tol = {});

struct Decomposition {
  CenterElement alpha;
  ModuleElement aperp;
};

/// b = a·alpha + aperp with aperp ∈ (a𝒜)^⊥.
Decomposition decompose(const ModuleElement& b, const ModuleElement& a, Tolerance tol = {});

/// An element ã ∈ M with S(ã) = S(M) and (ã|ã) a projection, built by folding
/// the two-generator support lemma over the generators left to right.
ModuleElement support_witness(const Submodule& m, Tolerance tol = {});

/// The projection χ_{Ω∖S(M)} generating ann(M).
CenterElement annihilator(const Submodule& m, Tolerance tol = {});

/// P_M: at each fiber the orthogonal projection onto span{ũₖ(ω)}.
FiberedOperator submodule_projection(const Submodule& m, Tolerance tol = {});

/// Generators of M ∩ N: a basis of P_M(ω) ∧ P_N(ω) at each fiber, localized
/// to that fiber by χ_{ω}. A zero intersection yields one zero generator.
Submodule submodule_intersection(const Submodule& m, const Submodule& n, Tolerance tol = {});

}  // namespace stonework
