#include "stonework/hilbert_module.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>

namespace stonework {

namespace {

// Fibers whose squared norm is this close to 1 count as already normalized.
constexpr double kUnitSnap = 64.0 * DBL_EPSILON;

void require_compatible(const ModuleElement& a, const ModuleElement& b) {
  if (a.rank() != b.rank() || a.space_size() != b.space_size()) {
    throw Error(ErrorCode::DimensionMismatch, "module elements of different shape");
  }
}

void require_uniform(const Submodule& m) {
  if (m.generators.empty()) throw Error(ErrorCode::ZeroModule, "submodule without generators");
  for (const auto& g : m.generators) require_compatible(g, m.generators.front());
}

}  // namespace

CenterElement inner(const ModuleElement& a, const ModuleElement& b) {
  require_compatible(a, b);
  std::vector<Complex> values(a.space_size());
  for (std::size_t omega = 0; omega < a.space_size(); ++omega) {
    values[omega] = dot(a.fiber(omega), b.fiber(omega));
  }
  return CenterElement(std::move(values));
}

double module_norm(const ModuleElement& a) { return std::sqrt(inner(a, a).sup_norm()); }

PointSet support(const ModuleElement& a, Tolerance tol) {
  const CenterElement aa = inner(a, a);
  const double sq_norm = aa.sup_norm();
  PointSet s(a.space_size());
  if (sq_norm == 0.0) return s;
  for (std::size_t omega = 0; omega < a.space_size(); ++omega) {
    if (aa[omega].real() > tol.eps() * sq_norm) s.insert(omega);
  }
  return s;
}

PointSet support(const Submodule& m, Tolerance tol) {
  require_uniform(m);
  PointSet s(m.space_size());
  for (const auto& g : m.generators) s = s | support(g, tol);
  return s;
}

ModuleElement normalize(const ModuleElement& a, Tolerance tol) {
  const PointSet s = support(a, tol);
  const CenterElement aa = inner(a, a);
  ModuleElement out = a;
  for (std::size_t omega = 0; omega < a.space_size(); ++omega) {
    auto& f = out.fiber(omega);
    if (!s.contains(omega)) {
      std::fill(f.begin(), f.end(), Complex{});
      continue;
    }
    const double sq = aa[omega].real();
    if (std::abs(sq - 1.0) <= kUnitSnap) continue;
    const double inv = 1.0 / std::sqrt(sq);
    for (auto& z : f) z *= inv;
  }
  return out;
}

FiberedOperator ket_bra(const ModuleElement& r, const ModuleElement& s) {
  require_compatible(r, s);
  std::vector<ComplexMatrix> fibers;
  fibers.reserve(r.space_size());
  for (std::size_t omega = 0; omega < r.space_size(); ++omega) {
    fibers.push_back(ComplexMatrix::outer(r.fiber(omega), s.fiber(omega)));
  }
  return FiberedOperator(std::move(fibers));
}

FiberedOperator abelian_projection(const ModuleElement& a, Tolerance tol) {
  try {
    (void)inner(a, a).snapped_projection(tol);
  } catch (const Error&) {
    throw Error(ErrorCode::NotNormalized, "(a|a) is not a projection; normalize first");
  }
  // Column k of E_a is E_a(eₖ) = a(a|eₖ).
  const std::size_t n = a.rank();
  const std::size_t m = a.space_size();
  FiberedOperator e(n, m);
  for (std::size_t k = 0; k < n; ++k) {
    const ModuleElement image = a.times(inner(a, ModuleElement::basis(n, m, k)));
    for (std::size_t omega = 0; omega < m; ++omega) {
      for (std::size_t j = 0; j < n; ++j) e.fiber(omega)(j, k) = image.fiber(omega)[j];
    }
  }
  return e;
}

Decomposition decompose(const ModuleElement& b, const ModuleElement& a, Tolerance tol) {
  require_compatible(a, b);
  const PointSet s = support(a, tol);
  const ModuleElement a_tilde = normalize(a, tol);
  const CenterElement overlap = inner(a_tilde, b);
  const CenterElement aa = inner(a, a);
  std::vector<Complex> alpha(a.space_size(), 0.0);
  for (auto omega : s.points()) alpha[omega] = overlap[omega] / std::sqrt(aa[omega].real());
  CenterElement alpha_el(std::move(alpha));
  ModuleElement aperp = b - a.times(alpha_el);
  return {std::move(alpha_el), std::move(aperp)};
}

ModuleElement support_witness(const Submodule& m, Tolerance tol) {
  require_uniform(m);
  const bool all_zero = std::all_of(m.generators.begin(), m.generators.end(),
                                    [&](const ModuleElement& g) { return support(g, tol).empty(); });
  if (all_zero) throw Error(ErrorCode::ZeroModule, "all generators vanish");

  // Generators are normalized first so that the relative support threshold
  // treats each of them on the same scale.
  ModuleElement c = normalize(m.generators.front(), tol);
  for (std::size_t k = 1; k < m.generators.size(); ++k) {
    const ModuleElement b = normalize(m.generators[k], tol);
    c += decompose(b, c, tol).aperp;
  }
  return normalize(c, tol);
}

CenterElement annihilator(const Submodule& m, Tolerance tol) {
  return char_fn(support(m, tol).complement());
}

FiberedOperator submodule_projection(const Submodule& m, Tolerance tol) {
  require_uniform(m);
  const std::size_t n = m.rank();
  std::vector<ModuleElement> normalized;
  normalized.reserve(m.generators.size());
  for (const auto& g : m.generators) normalized.push_back(normalize(g, tol));

  std::vector<ComplexMatrix> fibers;
  for (std::size_t omega = 0; omega < m.space_size(); ++omega) {
    std::vector<ComplexVector> vectors;
    for (const auto& g : normalized) {
      if (stonework::max_abs(g.fiber(omega)) > 0.0) vectors.push_back(g.fiber(omega));
    }
    fibers.push_back(span_projection(n, vectors, tol));
  }
  return FiberedOperator(std::move(fibers));
}

Submodule submodule_intersection(const Submodule& m, const Submodule& n, Tolerance tol) {
  const FiberedOperator pm = submodule_projection(m, tol);
  const FiberedOperator pn = submodule_projection(n, tol);
  if (pm.rank() != pn.rank() || pm.space_size() != pn.space_size()) {
    throw Error(ErrorCode::DimensionMismatch, "submodules of different modules");
  }
  const std::size_t rank = pm.rank();
  const std::size_t points = pm.space_size();
  Submodule out;
  for (std::size_t omega = 0; omega < points; ++omega) {
    const ComplexMatrix meet = proj_meet(pm.fiber(omega), pn.fiber(omega), tol);
    for (const auto& v : range_basis(meet, tol)) {
      ModuleElement g(rank, points);
      g.fiber(omega) = v;
      out.generators.push_back(std::move(g));
    }
  }
  if (out.generators.empty()) out.generators.emplace_back(rank, points);
  return out;
}

}  // namespace stonework
