#include "stonework/numerics.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>
#include <string>

namespace stonework {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidTolerance: return "InvalidTolerance";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotProjection: return "NotProjection";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::ZeroModule: return "ZeroModule";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::NotPartialIsometry: return "NotPartialIsometry";
    case ErrorCode::NotSubordinate: return "NotSubordinate";
    case ErrorCode::CarrierMismatch: return "CarrierMismatch";
    case ErrorCode::ClosureExplosion: return "ClosureExplosion";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::Ambiguous: return "Ambiguous";
    case ErrorCode::AlreadyMember: return "AlreadyMember";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::EmptyFilter: return "EmptyFilter";
    case ErrorCode::NotSelfAdjoint: return "NotSelfAdjoint";
    case ErrorCode::NotFilterBase: return "NotFilterBase";
    case ErrorCode::OutOfRange: return "OutOfRange";
  }
  return "Unknown";
}

Tolerance::Tolerance(double eps) : eps_(eps) {
  if (!(eps >= 0.0) || !(eps < kCeiling)) {
    throw Error(ErrorCode::InvalidTolerance,
                "eps must lie in [0, 1e-3), got " + std::to_string(eps));
  }
}

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{}) {}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> x, std::span<const Complex> y) {
  ComplexMatrix m(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) m(i, j) = x[i] * std::conj(y[j]);
  }
  return m;
}

ComplexMatrix ComplexMatrix::from_columns(std::size_t rows, const std::vector<ComplexVector>& cols) {
  ComplexMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error(ErrorCode::DimensionMismatch, "column length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

ComplexVector ComplexMatrix::column(std::size_t c) const {
  ComplexVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

ComplexVector ComplexMatrix::apply(std::span<const Complex> x) const {
  if (x.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  ComplexVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Complex acc{};
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  }
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t{};
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const { return stonework::max_abs(data_); }

double ComplexMatrix::frobenius() const { return norm(data_); }

bool ComplexMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix sum");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix difference");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  ComplexMatrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

double distance(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).max_abs(); }

// ---------------------------------------------------------------------------
// vectors

Complex dot(std::span<const Complex> x, std::span<const Complex> y) {
  if (x.size() != y.size()) throw Error(ErrorCode::DimensionMismatch, "dot product");
  Complex acc{};
  for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

double norm(std::span<const Complex> x) {
  double acc = 0.0;
  for (const auto& z : x) acc += std::norm(z);
  return std::sqrt(acc);
}

double max_abs(std::span<const Complex> x) {
  double m = 0.0;
  for (const auto& z : x) m = std::max(m, std::abs(z));
  return m;
}

ComplexVector unit_vector(std::size_t n, std::size_t k) {
  if (k >= n) throw Error(ErrorCode::OutOfRange, "basis index " + std::to_string(k));
  ComplexVector v(n);
  v[k] = 1.0;
  return v;
}

ComplexVector scaled(std::span<const Complex> x, Complex s) {
  ComplexVector v(x.begin(), x.end());
  for (auto& z : v) z *= s;
  return v;
}

ComplexVector sum(std::span<const Complex> x, std::span<const Complex> y) {
  if (x.size() != y.size()) throw Error(ErrorCode::DimensionMismatch, "vector sum");
  ComplexVector v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = x[i] + y[i];
  return v;
}

ComplexVector difference(std::span<const Complex> x, std::span<const Complex> y) {
  if (x.size() != y.size()) throw Error(ErrorCode::DimensionMismatch, "vector difference");
  ComplexVector v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = x[i] - y[i];
  return v;
}

ComplexVector phase_fixed(std::span<const Complex> x, double eps) {
  ComplexVector v(x.begin(), x.end());
  for (auto& z : v) {
    if (std::abs(z) > eps) {
      const Complex phase = std::conj(z) / std::abs(z);
      for (auto& w : v) w *= phase;
      z = std::abs(z);
      return v;
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// eigendecomposition

namespace {

double off_diagonal(const ComplexMatrix& a) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) acc += std::norm(a(i, j));
    }
  }
  return std::sqrt(acc);
}

constexpr int kMaxSweeps = 100;

}  // namespace

EigenSystem hermitian_eig(const ComplexMatrix& h, Tolerance tol) {
  if (!h.is_square()) throw Error(ErrorCode::DimensionMismatch, "eigendecomposition of non-square matrix");
  if (!h.all_finite()) throw Error(ErrorCode::NoConvergence, "non-finite input");
  if (!is_hermitian(h, tol)) throw Error(ErrorCode::NotHermitian, "||H - H*|| exceeds eps");

  const std::size_t n = h.rows();
  // Work on the exactly Hermitian part.
  ComplexMatrix a = (h + h.adjoint()) * Complex{0.5};
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = a.frobenius();
  const double target = 4.0 * DBL_EPSILON * scale;
  bool converged = n < 2 || off_diagonal(a) <= target;

  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        const Complex phase = apq / r;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = 0.5 * std::atan2(2.0 * r, aqq - app);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        // U = diag(1, e^{-i phi}) * [[c, s], [-s, c]] on the (p, q) plane.
        const Complex upp = c;
        const Complex upq = s;
        const Complex uqp = -s * std::conj(phase);
        const Complex uqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
    converged = off_diagonal(a) <= target;
  }
  if (!converged || !a.all_finite()) {
    throw Error(ErrorCode::NoConvergence, "Jacobi sweeps exhausted");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigenSystem out;
  out.values.reserve(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    out.values.push_back(a(order[col], order[col]).real());
    for (std::size_t row = 0; row < n; ++row) out.vectors(row, col) = v(row, order[col]);
  }
  return out;
}

std::vector<std::vector<std::size_t>> cluster_eigenvalues(std::span<const double> values) {
  std::vector<std::vector<std::size_t>> groups;
  if (values.empty()) return groups;
  double largest = 1.0;
  for (double x : values) largest = std::max(largest, std::abs(x));
  const double gap = 1e-7 * largest;
  groups.push_back({0});
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] - values[i - 1] <= gap) {
      groups.back().push_back(i);
    } else {
      groups.push_back({i});
    }
  }
  return groups;
}

// ---------------------------------------------------------------------------
// predicates

bool is_hermitian(const ComplexMatrix& h, Tolerance tol) {
  return h.is_square() && distance(h, h.adjoint()) <= tol.eps();
}

bool is_projection(const ComplexMatrix& p, Tolerance tol) {
  return is_hermitian(p, tol) && distance(p * p, p) <= tol.eps();
}

bool is_unitary(const ComplexMatrix& u, Tolerance tol) {
  if (!u.is_square()) return false;
  const auto id = ComplexMatrix::identity(u.rows());
  return distance(u.adjoint() * u, id) <= tol.eps() && distance(u * u.adjoint(), id) <= tol.eps();
}

bool is_partial_isometry(const ComplexMatrix& theta, Tolerance tol) {
  return is_projection(theta.adjoint() * theta, tol);
}

std::size_t numerical_rank(const ComplexMatrix& h, Tolerance tol) {
  const auto eig = hermitian_eig(h, tol);
  double largest = 1.0;
  for (double x : eig.values) largest = std::max(largest, std::abs(x));
  return static_cast<std::size_t>(std::count_if(eig.values.begin(), eig.values.end(), [&](double x) {
    return std::abs(x) > tol.eps() * largest;
  }));
}

// ---------------------------------------------------------------------------
// projection geometry

namespace {

void require_projection(const ComplexMatrix& p, Tolerance tol, const char* what) {
  if (!is_projection(p, tol)) throw Error(ErrorCode::NotProjection, what);
}

void require_same_shape(const ComplexMatrix& p, const ComplexMatrix& q) {
  if (p.rows() != q.rows() || p.cols() != q.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "projections of different size");
  }
}

}  // namespace

std::vector<ComplexVector> range_basis(const ComplexMatrix& p, Tolerance tol) {
  require_projection(p, tol, "range_basis");
  const auto eig = hermitian_eig(p, tol);
  std::vector<ComplexVector> basis;
  for (std::size_t i = eig.values.size(); i-- > 0;) {
    if (eig.values[i] > 0.5) basis.push_back(eig.vectors.column(i));
  }
  return basis;
}

ComplexMatrix projection_from_basis(std::size_t n, const std::vector<ComplexVector>& basis) {
  ComplexMatrix p(n, n);
  for (const auto& v : basis) p += ComplexMatrix::outer(v, v);
  return p;
}

ComplexMatrix span_projection(std::size_t n, const std::vector<ComplexVector>& vectors,
                              Tolerance tol) {
  ComplexMatrix gram(n, n);
  for (const auto& v : vectors) {
    if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, "span of vectors");
    gram += ComplexMatrix::outer(v, v);
  }
  if (gram.max_abs() == 0.0) return gram;
  const auto eig = hermitian_eig(gram, tol);
  const double threshold = tol.eps() * eig.values.back();
  std::vector<ComplexVector> basis;
  for (std::size_t i = 0; i < n; ++i) {
    if (eig.values[i] > threshold) basis.push_back(eig.vectors.column(i));
  }
  return projection_from_basis(n, basis);
}

bool proj_leq(const ComplexMatrix& p, const ComplexMatrix& q, Tolerance tol) {
  require_same_shape(p, q);
  return distance(q * p, p) <= tol.eps();
}

ComplexMatrix proj_meet(const ComplexMatrix& p, const ComplexMatrix& q, Tolerance tol) {
  require_same_shape(p, q);
  require_projection(p, tol, "proj_meet: first argument");
  require_projection(q, tol, "proj_meet: second argument");
  const std::size_t n = p.rows();
  // im P ∩ im Q = ker((I - P) + (I - Q))
  const ComplexMatrix m = ComplexMatrix::identity(n) * Complex{2.0} - p - q;
  const auto eig = hermitian_eig(m, tol);
  const double threshold = tol.eps() * std::max(1.0, std::abs(eig.values.back()));
  std::vector<ComplexVector> basis;
  for (std::size_t i = 0; i < n; ++i) {
    if (eig.values[i] <= threshold) basis.push_back(eig.vectors.column(i));
  }
  return projection_from_basis(n, basis);
}

ComplexMatrix proj_join(const ComplexMatrix& p, const ComplexMatrix& q, Tolerance tol) {
  require_same_shape(p, q);
  require_projection(p, tol, "proj_join: first argument");
  require_projection(q, tol, "proj_join: second argument");
  const std::size_t n = p.rows();
  const auto eig = hermitian_eig(p + q, tol);
  const double threshold = tol.eps() * std::max(1.0, std::abs(eig.values.back()));
  std::vector<ComplexVector> basis;
  for (std::size_t i = 0; i < n; ++i) {
    if (eig.values[i] > threshold) basis.push_back(eig.vectors.column(i));
  }
  return projection_from_basis(n, basis);
}

}  // namespace stonework
