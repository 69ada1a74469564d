#include "stonework/matrix_algebra.hpp"

#include <algorithm>

#include "stonework/hilbert_module.hpp"

namespace stonework {

namespace {

void require_projection(const FiberedOperator& p, Tolerance tol, const char* what) {
  if (!is_projection(p, tol)) throw Error(ErrorCode::NotProjection, what);
}

}  // namespace

FiberedOperator adjoint(const FiberedOperator& t) { return t.adjoint(); }

CenterElement central_carrier(const FiberedOperator& p, Tolerance tol) {
  require_projection(p, tol, "central_carrier");
  std::vector<Complex> values(p.space_size(), 0.0);
  for (std::size_t omega = 0; omega < p.space_size(); ++omega) {
    if (p.fiber(omega).max_abs() > tol.eps()) values[omega] = 1.0;
  }
  return CenterElement(std::move(values));
}

bool is_abelian_projection(const FiberedOperator& p, Tolerance tol) {
  require_projection(p, tol, "is_abelian_projection");
  const auto ranks = fiber_ranks(p, tol);
  return std::all_of(ranks.begin(), ranks.end(), [](std::size_t r) { return r <= 1; });
}

ModuleElement abelian_generator(const FiberedOperator& p, Tolerance tol) {
  if (!is_abelian_projection(p, tol)) throw Error(ErrorCode::NotAbelian, "a fiber has rank > 1");
  std::vector<ComplexVector> fibers;
  fibers.reserve(p.space_size());
  for (const auto& f : p.fibers()) {
    const auto basis = range_basis(f, tol);
    if (basis.empty()) {
      fibers.emplace_back(p.rank());
    } else {
      fibers.push_back(phase_fixed(basis.front(), tol.eps()));
    }
  }
  return ModuleElement::from_fibers(std::move(fibers));
}

DiagonalSum diagonal_sum_projection(const std::vector<CenterElement>& a) {
  if (a.empty()) throw Error(ErrorCode::OutOfRange, "need at least one component");
  const std::size_t n = a.size();
  const std::size_t m = a.front().space_size();
  FiberedOperator sum(n, m);
  bool projection = true;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k].space_size() != m) throw Error(ErrorCode::DimensionMismatch, "components over different spaces");
    projection = projection && a[k].is_projection();
    const FiberedOperator e_k = abelian_projection(ModuleElement::basis(n, m, k));
    sum += e_k.times(a[k]);
  }
  return {std::move(sum), projection};
}

FiberedOperator transport(const FiberedOperator& theta, const FiberedOperator& p, Tolerance tol) {
  if (!is_partial_isometry(theta, tol)) {
    throw Error(ErrorCode::NotPartialIsometry, "theta* theta is not a projection");
  }
  require_projection(p, tol, "transport");
  const FiberedOperator initial = theta.adjoint() * theta;
  if (!proj_leq(p, initial, tol)) {
    throw Error(ErrorCode::NotSubordinate, "P is not below theta* theta");
  }
  return theta * p * theta.adjoint();
}

FiberedOperator equivalence_partial_isometry(const FiberedOperator& e, const FiberedOperator& f,
                                             Tolerance tol) {
  if (!is_abelian_projection(e, tol) || !is_abelian_projection(f, tol)) {
    throw Error(ErrorCode::NotAbelian, "equivalence_partial_isometry needs abelian projections");
  }
  if (central_carrier(e, tol) != central_carrier(f, tol)) {
    throw Error(ErrorCode::CarrierMismatch, "central carriers differ");
  }
  return ket_bra(abelian_generator(f, tol), abelian_generator(e, tol));
}

}  // namespace stonework
