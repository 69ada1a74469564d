#pragma once

#include <cstddef>
#include <vector>

#include "stonework/center_algebra.hpp"
#include "stonework/module_element.hpp"
#include "stonework/numerics.hpp"

namespace stonework {

/// An element of Mₙ(𝒜) with 𝒜 = C(Ω): one n×n complex matrix per point of Ω.
class FiberedOperator {
 public:
  FiberedOperator() = default;
  /// Zero operator.
  FiberedOperator(std::size_t n, std::size_t m);
  explicit FiberedOperator(std::vector<ComplexMatrix> fibers);

  static FiberedOperator identity(std::size_t n, std::size_t m);
  static FiberedOperator constant(std::size_t m, const ComplexMatrix& fiber);
  /// Iₙ·p for a central element p.
  static FiberedOperator central(std::size_t n, const CenterElement& p);

  std::size_t rank() const noexcept { return n_; }
  std::size_t space_size() const noexcept { return fibers_.size(); }

  const ComplexMatrix& fiber(std::size_t omega) const { return fibers_.at(omega); }
  ComplexMatrix& fiber(std::size_t omega) { return fibers_.at(omega); }
  const std::vector<ComplexMatrix>& fibers() const noexcept { return fibers_; }

  FiberedOperator adjoint() const;
  ModuleElement apply(const ModuleElement& a) const;
  /// (Iₙα)·T
  FiberedOperator times(const CenterElement& alpha) const;
  double max_abs() const;

  FiberedOperator& operator+=(const FiberedOperator& rhs);
  FiberedOperator& operator-=(const FiberedOperator& rhs);
  FiberedOperator& operator*=(Complex s);

  friend FiberedOperator operator+(FiberedOperator a, const FiberedOperator& b) { return a += b; }
  friend FiberedOperator operator-(FiberedOperator a, const FiberedOperator& b) { return a -= b; }
  friend FiberedOperator operator*(FiberedOperator a, Complex s) { return a *= s; }
  friend FiberedOperator operator*(const FiberedOperator& a, const FiberedOperator& b);
  friend ModuleElement operator*(const FiberedOperator& t, const ModuleElement& a) {
    return t.apply(a);
  }

  friend bool operator==(const FiberedOperator&, const FiberedOperator&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<ComplexMatrix> fibers_;
};

double distance(const FiberedOperator& a, const FiberedOperator& b);

bool is_self_adjoint(const FiberedOperator& t, Tolerance tol = {});
bool is_projection(const FiberedOperator& p, Tolerance tol = {});
bool is_unitary(const FiberedOperator& u, Tolerance tol = {});
bool is_partial_isometry(const FiberedOperator& theta, Tolerance tol = {});

/// Rank of each fiber of a projection.
std::vector<std::size_t> fiber_ranks(const FiberedOperator& p, Tolerance tol = {});

// Lattice operations in P(Mₙ(𝒜)); all act fiberwise.
bool proj_leq(const FiberedOperator& p, const FiberedOperator& q, Tolerance tol = {});
FiberedOperator proj_meet(const FiberedOperator& p, const FiberedOperator& q, Tolerance tol = {});
FiberedOperator proj_join(const FiberedOperator& p, const FiberedOperator& q, Tolerance tol = {});

}  // namespace stonework
