#include "stonework/observables.hpp"

#include <algorithm>

namespace stonework {

namespace {

void require_self_adjoint(const FiberedOperator& a, Tolerance tol) {
  if (!is_self_adjoint(a, tol)) throw Error(ErrorCode::NotSelfAdjoint, "A is not self-adjoint");
}

}  // namespace

SpectralSteps spectral_steps(const ComplexMatrix& a, Tolerance tol) {
  const std::size_t n = a.rows();
  const EigenSystem eig = hermitian_eig(a, tol);
  SpectralSteps steps;
  ComplexMatrix running = ComplexMatrix::zero(n, n);
  for (const auto& cluster : cluster_eigenvalues(eig.values)) {
    double mean = 0.0;
    for (auto k : cluster) {
      mean += eig.values[k];
      const ComplexVector v = eig.vectors.column(k);
      running += ComplexMatrix::outer(v, v);
    }
    steps.lambdas.push_back(mean / static_cast<double>(cluster.size()));
    steps.cumulative.push_back(running);
  }
  if (!steps.cumulative.empty()) steps.cumulative.back() = ComplexMatrix::identity(n);
  return steps;
}

SpectralFamily spectral_family(const FiberedOperator& a, Tolerance tol) {
  require_self_adjoint(a, tol);
  SpectralFamily family;
  family.fibers.reserve(a.space_size());
  for (const auto& f : a.fibers()) family.fibers.push_back(spectral_steps(f, tol));
  return family;
}

double observable_value(const FiberedOperator& a, const Quasipoint& b, Tolerance tol) {
  require_self_adjoint(a, tol);
  if (b.omega.omega >= a.space_size()) throw Error(ErrorCode::OutOfRange, "quasipoint point outside Ω");
  if (b.rank() != a.rank()) throw Error(ErrorCode::DimensionMismatch, "line and operator rank differ");
  const SpectralSteps steps = spectral_steps(a.fiber(b.omega.omega), tol);
  for (std::size_t i = 0; i < steps.lambdas.size(); ++i) {
    const ComplexVector ex = steps.cumulative[i].apply(b.line);
    if (max_abs(difference(ex, b.line)) <= tol.eps()) return steps.lambdas[i];
  }
  return steps.lambdas.back();  // unreachable: the last step is the identity
}

std::vector<double> observable_image(const FiberedOperator& a, const std::vector<Quasipoint>& sample,
                                     Tolerance tol) {
  std::vector<double> values;
  values.reserve(sample.size());
  for (const auto& b : sample) values.push_back(observable_value(a, b, tol));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

std::vector<double> spectrum(const FiberedOperator& a, Tolerance tol) {
  std::vector<double> values;
  for (const auto& steps : spectral_family(a, tol).fibers) {
    values.insert(values.end(), steps.lambdas.begin(), steps.lambdas.end());
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

std::vector<Quasipoint> eigenline_quasipoints(const FiberedOperator& a, Tolerance tol) {
  require_self_adjoint(a, tol);
  std::vector<Quasipoint> out;
  for (std::size_t omega = 0; omega < a.space_size(); ++omega) {
    const EigenSystem eig = hermitian_eig(a.fiber(omega), tol);
    for (std::size_t k = 0; k < a.rank(); ++k) {
      out.push_back(make_quasipoint(omega, eig.vectors.column(k)));
    }
  }
  return out;
}

}  // namespace stonework
