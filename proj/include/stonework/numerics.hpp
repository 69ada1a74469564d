#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "stonework/error.hpp"

namespace stonework {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Threshold used for every rank, projection and membership decision.
class Tolerance {
 public:
  static constexpr double kDefault = 1e-9;
  static constexpr double kCeiling = 1e-3;

  Tolerance() = default;
  explicit Tolerance(double eps);

  double eps() const noexcept { return eps_; }

 private:
  double eps_ = kDefault;
};

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zero(std::size_t rows, std::size_t cols);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  /// x y*
  static ComplexMatrix outer(std::span<const Complex> x, std::span<const Complex> y);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static ComplexMatrix from_columns(std::size_t rows, const std::vector<ComplexVector>& cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> data() const noexcept { return data_; }

  ComplexVector column(std::size_t c) const;
  ComplexVector apply(std::span<const Complex> x) const;

  ComplexMatrix adjoint() const;
  Complex trace() const;
  /// Largest entry modulus; the norm used for all tolerance comparisons.
  double max_abs() const;
  double frobenius() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex s) { return lhs *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix rhs) { return rhs *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

double distance(const ComplexMatrix& a, const ComplexMatrix& b);

// Vector helpers. `dot` is conjugate-linear in its first argument.
Complex dot(std::span<const Complex> x, std::span<const Complex> y);
double norm(std::span<const Complex> x);
double max_abs(std::span<const Complex> x);
ComplexVector unit_vector(std::size_t n, std::size_t k);
ComplexVector scaled(std::span<const Complex> x, Complex s);
ComplexVector sum(std::span<const Complex> x, std::span<const Complex> y);
ComplexVector difference(std::span<const Complex> x, std::span<const Complex> y);

/// Rotates x by a global phase so that its first component with modulus
/// above `eps` is real and positive. The zero vector is returned unchanged.
ComplexVector phase_fixed(std::span<const Complex> x, double eps = 1e-12);

struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column i belongs to values[i]
};

/// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
EigenSystem hermitian_eig(const ComplexMatrix& h, Tolerance tol = {});

/// Groups of indices into `values` (assumed ascending) whose consecutive gaps
/// are within 1e-7 * max(1, max|lambda|).
std::vector<std::vector<std::size_t>> cluster_eigenvalues(std::span<const double> values);

bool is_hermitian(const ComplexMatrix& h, Tolerance tol = {});
bool is_projection(const ComplexMatrix& p, Tolerance tol = {});
bool is_unitary(const ComplexMatrix& u, Tolerance tol = {});
bool is_partial_isometry(const ComplexMatrix& theta, Tolerance tol = {});

/// Number of eigenvalues of the Hermitian matrix with modulus above
/// eps * max(1, ||h||).
std::size_t numerical_rank(const ComplexMatrix& h, Tolerance tol = {});

/// Orthonormal basis of the range of a projection.
std::vector<ComplexVector> range_basis(const ComplexMatrix& p, Tolerance tol = {});
/// Orthogonal projection onto the span of orthonormal vectors.
ComplexMatrix projection_from_basis(std::size_t n, const std::vector<ComplexVector>& basis);
/// Orthogonal projection onto the span of arbitrary vectors.
ComplexMatrix span_projection(std::size_t n, const std::vector<ComplexVector>& vectors,
                              Tolerance tol = {});

/// P <= Q in the projection order, i.e. QP = P.
bool proj_leq(const ComplexMatrix& p, const ComplexMatrix& q, Tolerance tol = {});
ComplexMatrix proj_meet(const ComplexMatrix& p, const ComplexMatrix& q, Tolerance tol = {});
ComplexMatrix proj_join(const ComplexMatrix& p, const ComplexMatrix& q, Tolerance tol = {});

}  // namespace stonework
