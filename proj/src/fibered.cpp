#include <algorithm>
#include <cmath>

#include "stonework/fibered_operator.hpp"
#include "stonework/module_element.hpp"

namespace stonework {

// ---------------------------------------------------------------------------
// ModuleElement

ModuleElement::ModuleElement(std::size_t n, std::size_t m)
    : n_(n), fibers_(m, ComplexVector(n)) {
  if (n == 0 || m == 0) throw Error(ErrorCode::OutOfRange, "module element needs n, m >= 1");
}

ModuleElement ModuleElement::from_fibers(std::vector<ComplexVector> fibers) {
  if (fibers.empty() || fibers.front().empty()) {
    throw Error(ErrorCode::OutOfRange, "module element needs n, m >= 1");
  }
  ModuleElement a;
  a.n_ = fibers.front().size();
  for (const auto& f : fibers) {
    if (f.size() != a.n_) throw Error(ErrorCode::DimensionMismatch, "fibers of different length");
    for (const auto& z : f) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw Error(ErrorCode::OutOfRange, "module element entries must be finite");
      }
    }
  }
  a.fibers_ = std::move(fibers);
  return a;
}

ModuleElement ModuleElement::from_components(const std::vector<CenterElement>& components) {
  if (components.empty()) throw Error(ErrorCode::OutOfRange, "module element needs n >= 1");
  const std::size_t m = components.front().space_size();
  std::vector<ComplexVector> fibers(m, ComplexVector(components.size()));
  for (std::size_t k = 0; k < components.size(); ++k) {
    if (components[k].space_size() != m) {
      throw Error(ErrorCode::DimensionMismatch, "components over different spaces");
    }
    for (std::size_t omega = 0; omega < m; ++omega) fibers[omega][k] = components[k][omega];
  }
  return from_fibers(std::move(fibers));
}

ModuleElement ModuleElement::basis(std::size_t n, std::size_t m, std::size_t k) {
  ModuleElement a(n, m);
  for (auto& f : a.fibers_) f = unit_vector(n, k);
  return a;
}

ModuleElement ModuleElement::constant(std::size_t m, std::span<const Complex> x) {
  return from_fibers(std::vector<ComplexVector>(m, ComplexVector(x.begin(), x.end())));
}

CenterElement ModuleElement::component(std::size_t k) const {
  if (k >= n_) throw Error(ErrorCode::OutOfRange, "component index");
  std::vector<Complex> values(fibers_.size());
  for (std::size_t omega = 0; omega < fibers_.size(); ++omega) values[omega] = fibers_[omega][k];
  return CenterElement(std::move(values));
}

std::vector<CenterElement> ModuleElement::components() const {
  std::vector<CenterElement> out;
  out.reserve(n_);
  for (std::size_t k = 0; k < n_; ++k) out.push_back(component(k));
  return out;
}

ModuleElement ModuleElement::times(const CenterElement& alpha) const {
  if (alpha.space_size() != fibers_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "module action over a different space");
  }
  ModuleElement out = *this;
  for (std::size_t omega = 0; omega < fibers_.size(); ++omega) {
    for (auto& z : out.fibers_[omega]) z *= alpha[omega];
  }
  return out;
}

double ModuleElement::max_abs() const {
  double m = 0.0;
  for (const auto& f : fibers_) m = std::max(m, stonework::max_abs(f));
  return m;
}

namespace {

void require_compatible(const ModuleElement& a, const ModuleElement& b) {
  if (a.rank() != b.rank() || a.space_size() != b.space_size()) {
    throw Error(ErrorCode::DimensionMismatch, "module elements of different shape");
  }
}

void require_compatible(const FiberedOperator& a, const FiberedOperator& b) {
  if (a.rank() != b.rank() || a.space_size() != b.space_size()) {
    throw Error(ErrorCode::DimensionMismatch, "fibered operators of different shape");
  }
}

}  // namespace

ModuleElement& ModuleElement::operator+=(const ModuleElement& rhs) {
  require_compatible(*this, rhs);
  for (std::size_t omega = 0; omega < fibers_.size(); ++omega) {
    for (std::size_t k = 0; k < n_; ++k) fibers_[omega][k] += rhs.fibers_[omega][k];
  }
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& rhs) {
  require_compatible(*this, rhs);
  for (std::size_t omega = 0; omega < fibers_.size(); ++omega) {
    for (std::size_t k = 0; k < n_; ++k) fibers_[omega][k] -= rhs.fibers_[omega][k];
  }
  return *this;
}

ModuleElement& ModuleElement::operator*=(Complex s) {
  for (auto& f : fibers_) {
    for (auto& z : f) z *= s;
  }
  return *this;
}

double distance(const ModuleElement& a, const ModuleElement& b) { return (a - b).max_abs(); }

std::size_t Submodule::rank() const {
  if (generators.empty()) throw Error(ErrorCode::ZeroModule, "submodule without generators");
  return generators.front().rank();
}

std::size_t Submodule::space_size() const {
  if (generators.empty()) throw Error(ErrorCode::ZeroModule, "submodule without generators");
  return generators.front().space_size();
}

// ---------------------------------------------------------------------------
// FiberedOperator

FiberedOperator::FiberedOperator(std::size_t n, std::size_t m)
    : n_(n), fibers_(m, ComplexMatrix(n, n)) {
  if (n == 0 || m == 0) throw Error(ErrorCode::OutOfRange, "fibered operator needs n, m >= 1");
}

FiberedOperator::FiberedOperator(std::vector<ComplexMatrix> fibers) : fibers_(std::move(fibers)) {
  if (fibers_.empty() || fibers_.front().rows() == 0) {
    throw Error(ErrorCode::OutOfRange, "fibered operator needs n, m >= 1");
  }
  n_ = fibers_.front().rows();
  for (const auto& f : fibers_) {
    if (f.rows() != n_ || f.cols() != n_) {
      throw Error(ErrorCode::DimensionMismatch, "fibers must all be n x n");
    }
    if (!f.all_finite()) throw Error(ErrorCode::OutOfRange, "fiber entries must be finite");
  }
}

FiberedOperator FiberedOperator::identity(std::size_t n, std::size_t m) {
  return constant(m, ComplexMatrix::identity(n));
}

FiberedOperator FiberedOperator::constant(std::size_t m, const ComplexMatrix& fiber) {
  return FiberedOperator(std::vector<ComplexMatrix>(m, fiber));
}

FiberedOperator FiberedOperator::central(std::size_t n, const CenterElement& p) {
  std::vector<ComplexMatrix> fibers;
  fibers.reserve(p.space_size());
  for (std::size_t omega = 0; omega < p.space_size(); ++omega) {
    fibers.push_back(ComplexMatrix::identity(n) * p[omega]);
  }
  return FiberedOperator(std::move(fibers));
}

FiberedOperator FiberedOperator::adjoint() const {
  FiberedOperator out = *this;
  for (auto& f : out.fibers_) f = f.adjoint();
  return out;
}

ModuleElement FiberedOperator::apply(const ModuleElement& a) const {
  if (a.rank() != n_ || a.space_size() != fibers_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "operator applied to element of different shape");
  }
  std::vector<ComplexVector> out;
  out.reserve(fibers_.size());
  for (std::size_t omega = 0; omega < fibers_.size(); ++omega) {
    out.push_back(fibers_[omega].apply(a.fiber(omega)));
  }
  return ModuleElement::from_fibers(std::move(out));
}

FiberedOperator FiberedOperator::times(const CenterElement& alpha) const {
  if (alpha.space_size() != fibers_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "central factor over a different space");
  }
  FiberedOperator out = *this;
  for (std::size_t omega = 0; omega < fibers_.size(); ++omega) out.fibers_[omega] *= alpha[omega];
  return out;
}

double FiberedOperator::max_abs() const {
  double m = 0.0;
  for (const auto& f : fibers_) m = std::max(m, f.max_abs());
  return m;
}

FiberedOperator& FiberedOperator::operator+=(const FiberedOperator& rhs) {
  require_compatible(*this, rhs);
  for (std::size_t omega = 0; omega < fibers_.size(); ++omega) fibers_[omega] += rhs.fibers_[omega];
  return *this;
}

FiberedOperator& FiberedOperator::operator-=(const FiberedOperator& rhs) {
  require_compatible(*this, rhs);
  for (std::size_t omega = 0; omega < fibers_.size(); ++omega) fibers_[omega] -= rhs.fibers_[omega];
  return *this;
}

FiberedOperator& FiberedOperator::operator*=(Complex s) {
  for (auto& f : fibers_) f *= s;
  return *this;
}

FiberedOperator operator*(const FiberedOperator& a, const FiberedOperator& b) {
  require_compatible(a, b);
  std::vector<ComplexMatrix> fibers;
  fibers.reserve(a.space_size());
  for (std::size_t omega = 0; omega < a.space_size(); ++omega) {
    fibers.push_back(a.fiber(omega) * b.fiber(omega));
  }
  return FiberedOperator(std::move(fibers));
}

double distance(const FiberedOperator& a, const FiberedOperator& b) { return (a - b).max_abs(); }

bool is_self_adjoint(const FiberedOperator& t, Tolerance tol) {
  return std::all_of(t.fibers().begin(), t.fibers().end(),
                     [&](const ComplexMatrix& f) { return is_hermitian(f, tol); });
}

bool is_projection(const FiberedOperator& p, Tolerance tol) {
  return std::all_of(p.fibers().begin(), p.fibers().end(),
                     [&](const ComplexMatrix& f) { return is_projection(f, tol); });
}

bool is_unitary(const FiberedOperator& u, Tolerance tol) {
  return std::all_of(u.fibers().begin(), u.fibers().end(),
                     [&](const ComplexMatrix& f) { return is_unitary(f, tol); });
}

bool is_partial_isometry(const FiberedOperator& theta, Tolerance tol) {
  return std::all_of(theta.fibers().begin(), theta.fibers().end(),
                     [&](const ComplexMatrix& f) { return is_partial_isometry(f, tol); });
}

std::vector<std::size_t> fiber_ranks(const FiberedOperator& p, Tolerance tol) {
  std::vector<std::size_t> ranks;
  ranks.reserve(p.space_size());
  for (const auto& f : p.fibers()) {
    if (!is_projection(f, tol)) throw Error(ErrorCode::NotProjection, "fiber_ranks");
    ranks.push_back(numerical_rank(f, tol));
  }
  return ranks;
}

bool proj_leq(const FiberedOperator& p, const FiberedOperator& q, Tolerance tol) {
  require_compatible(p, q);
  for (std::size_t omega = 0; omega < p.space_size(); ++omega) {
    if (!proj_leq(p.fiber(omega), q.fiber(omega), tol)) return false;
  }
  return true;
}

FiberedOperator proj_meet(const FiberedOperator& p, const FiberedOperator& q, Tolerance tol) {
  require_compatible(p, q);
  std::vector<ComplexMatrix> fibers;
  fibers.reserve(p.space_size());
  for (std::size_t omega = 0; omega < p.space_size(); ++omega) {
    fibers.push_back(proj_meet(p.fiber(omega), q.fiber(omega), tol));
  }
  return FiberedOperator(std::move(fibers));
}

FiberedOperator proj_join(const FiberedOperator& p, const FiberedOperator& q, Tolerance tol) {
  require_compatible(p, q);
  std::vector<ComplexMatrix> fibers;
  fibers.reserve(p.space_size());
  for (std::size_t omega = 0; omega < p.space_size(); ++omega) {
    fibers.push_back(proj_join(p.fiber(omega), q.fiber(omega), tol));
  }
  return FiberedOperator(std::move(fibers));
}

}  // namespace stonework
