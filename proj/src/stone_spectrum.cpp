#include "stonework/stone_spectrum.hpp"

#include <cmath>

#include "stonework/hilbert_module.hpp"
#include "stonework/matrix_algebra.hpp"

namespace stonework {

namespace {

void require_fiber(const Quasipoint& b, const FiberedOperator& t) {
  if (b.omega.omega >= t.space_size()) throw Error(ErrorCode::OutOfRange, "quasipoint point outside Ω");
  if (b.rank() != t.rank()) throw Error(ErrorCode::DimensionMismatch, "line and operator rank differ");
}

}  // namespace

Quasipoint make_quasipoint(std::size_t omega, std::span<const Complex> x) {
  const double len = norm(x);
  if (len == 0.0 || !std::isfinite(len)) throw Error(ErrorCode::ZeroModule, "quasipoint line is zero");
  return {CenterQuasipoint{omega}, phase_fixed(scaled(x, 1.0 / len))};
}

bool same_line(std::span<const Complex> x, std::span<const Complex> y) {
  if (x.size() != y.size()) return false;
  return std::abs(dot(x, y)) >= 1.0 - kLineTolerance;
}

bool same_quasipoint(const Quasipoint& a, const Quasipoint& b) {
  return a.omega == b.omega && same_line(a.line, b.line);
}

bool qp_contains(const Quasipoint& b, const FiberedOperator& p, Tolerance tol) {
  require_fiber(b, p);
  if (!is_projection(p, tol)) throw Error(ErrorCode::NotProjection, "qp_contains");
  const ComplexVector px = p.fiber(b.omega.omega).apply(b.line);
  return max_abs(difference(px, b.line)) <= tol.eps();
}

FiberedOperator atomic_projection(const Quasipoint& b, std::size_t m) {
  if (b.omega.omega >= m) throw Error(ErrorCode::OutOfRange, "quasipoint point outside Ω");
  FiberedOperator q(b.rank(), m);
  q.fiber(b.omega.omega) = ComplexMatrix::outer(b.line, b.line);
  return q;
}

FiberedOperator maximality_witness(const Quasipoint& b, const FiberedOperator& p, Tolerance tol) {
  if (qp_contains(b, p, tol)) throw Error(ErrorCode::AlreadyMember, "P already belongs to B");
  return atomic_projection(b, p.space_size());
}

CenterQuasipoint zeta(const Quasipoint& b) { return b.omega; }

Quasipoint unitary_act(const FiberedOperator& u, const Quasipoint& b, Tolerance tol) {
  require_fiber(b, u);
  if (!is_unitary(u, tol)) throw Error(ErrorCode::NotUnitary, "unitary_act");
  return make_quasipoint(b.omega.omega, u.fiber(b.omega.omega).apply(b.line));
}

Quasipoint partial_isometry_act(const FiberedOperator& theta, const Quasipoint& b, Tolerance tol) {
  require_fiber(b, theta);
  if (!is_partial_isometry(theta, tol)) {
    throw Error(ErrorCode::NotPartialIsometry, "theta* theta is not a projection");
  }
  if (!qp_contains(b, theta.adjoint() * theta, tol)) {
    throw Error(ErrorCode::NotSubordinate, "theta* theta is not a member of B");
  }
  return make_quasipoint(b.omega.omega, theta.fiber(b.omega.omega).apply(b.line));
}

std::optional<FiberedOperator> orbit_witness(const Quasipoint& b, const Quasipoint& b2,
                                             std::size_t m) {
  if (b.rank() != b2.rank()) throw Error(ErrorCode::DimensionMismatch, "quasipoints of different rank");
  if (b.omega.omega >= m || b2.omega.omega >= m) {
    throw Error(ErrorCode::OutOfRange, "quasipoint point outside Ω");
  }
  if (zeta(b) != zeta(b2)) return std::nullopt;

  const std::size_t n = b.rank();
  const ComplexVector& x = b.line;
  // Rotate y by a phase so that ⟨x, y'⟩ is real, reflect x onto y', then
  // restore the phase.
  const Complex c = dot(x, b2.line);
  const Complex phase = std::abs(c) > 0.0 ? c / std::abs(c) : Complex{1.0};
  const ComplexVector y = scaled(b2.line, std::conj(phase));
  const ComplexVector w = difference(x, y);
  const double ww = std::real(dot(w, w));

  ComplexMatrix h = ComplexMatrix::identity(n);
  if (ww > 0.0) h -= ComplexMatrix::outer(w, w) * Complex{2.0 / ww};
  h *= phase;

  FiberedOperator u = FiberedOperator::identity(n, m);
  u.fiber(b.omega.omega) = h;
  return u;
}

GermVector germ_eval(const ModuleElement& a, CenterQuasipoint beta) {
  if (beta.omega >= a.space_size()) throw Error(ErrorCode::OutOfRange, "germ point outside Ω");
  return {beta, a.fiber(beta.omega)};
}

Complex germ_eval(const CenterElement& alpha, CenterQuasipoint beta) {
  return gelfand_eval(alpha, beta);
}

CenterElement germ_inverse(const CenterElement& alpha, CenterQuasipoint beta) {
  if (gelfand_eval(alpha, beta) == Complex{}) throw Error(ErrorCode::ZeroModule, "zero germ");
  std::vector<Complex> values(alpha.space_size());
  for (std::size_t omega = 0; omega < values.size(); ++omega) {
    if (alpha[omega] != Complex{}) values[omega] = 1.0 / alpha[omega];
  }
  return CenterElement(std::move(values));
}

ComplexMatrix germ_submodule(const Submodule& m, CenterQuasipoint beta, Tolerance tol) {
  if (m.generators.empty()) throw Error(ErrorCode::ZeroModule, "submodule without generators");
  std::vector<ComplexVector> germs;
  germs.reserve(m.generators.size());
  for (const auto& g : m.generators) germs.push_back(germ_eval(g, beta).value);
  return span_projection(m.rank(), germs, tol);
}

Quasipoint extend_filter_to_quasipoint(const FiniteLattice& lattice, const Filter& f, Tolerance tol) {
  if (f.members.empty()) throw Error(ErrorCode::EmptyFilter, "empty filter");
  std::size_t least = lattice.top();
  for (auto i : f.members) least = lattice.meet(least, i);
  const FiberedOperator& p = lattice.element(least);
  for (std::size_t omega = 0; omega < p.space_size(); ++omega) {
    const auto basis = range_basis(p.fiber(omega), tol);
    if (!basis.empty()) return make_quasipoint(omega, basis.front());
  }
  throw Error(ErrorCode::NotFilterBase, "the filter has no nonzero lower bound");
}

CenterElement common_central_reduction(const FiberedOperator& ea, const FiberedOperator& eb,
                                       const Quasipoint& b, Tolerance tol) {
  if (ea.rank() != eb.rank() || ea.space_size() != eb.space_size()) {
    throw Error(ErrorCode::DimensionMismatch, "operators of different shape");
  }
  if (!is_abelian_projection(ea, tol) || !is_abelian_projection(eb, tol)) {
    throw Error(ErrorCode::NotAbelian, "common_central_reduction needs abelian projections");
  }
  if (!qp_contains(b, ea, tol) || !qp_contains(b, eb, tol)) {
    throw Error(ErrorCode::NotMember, "both projections must belong to B");
  }
  const auto ranks_a = fiber_ranks(ea, tol);
  const auto ranks_b = fiber_ranks(eb, tol);
  std::vector<Complex> r(ea.space_size(), 0.0);
  for (std::size_t omega = 0; omega < r.size(); ++omega) {
    const bool same = ranks_a[omega] == 1 && ranks_b[omega] == 1 &&
                      distance(ea.fiber(omega), eb.fiber(omega)) <= tol.eps();
    if (same) r[omega] = 1.0;
  }
  // Both contain the line of B at ω, so their ranges agree there even if
  // rounding pushed the fiber distance just past eps.
  r[b.omega.omega] = 1.0;
  return CenterElement(std::move(r));
}

}  // namespace stonework
