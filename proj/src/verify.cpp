#include "stonework/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <iterator>
#include <numbers>

#include "stonework/hilbert_module.hpp"
#include "stonework/lattice_filters.hpp"
#include "stonework/matrix_algebra.hpp"
#include "stonework/observables.hpp"
#include "stonework/random.hpp"
#include "stonework/stone_spectrum.hpp"

namespace stonework {

namespace {

class Check {
 public:
  explicit Check(const char* name) { result_.name = name; }

  void sample() { ++result_.samples; }

  void residual(double value, double limit, const char* what) {
    if (std::isfinite(value)) result_.max_residual = std::max(result_.max_residual, value);
    if (!(value <= limit)) fail(what);
  }

  void expect(bool ok, const char* what) {
    if (!ok) fail(what);
  }

  void fail(const std::string& what) {
    if (!result_.pass) return;
    result_.pass = false;
    result_.detail = what;
  }

  SuiteResult& result() { return result_; }

 private:
  SuiteResult result_;
};

std::size_t pick(SplitMix64& rng, std::size_t lo, std::size_t hi) { return lo + rng.below(hi - lo + 1); }

FiniteLattice random_lattice(SplitMix64& rng, Tolerance tol) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const std::size_t n = pick(rng, 2, 3);
    const std::size_t m = pick(rng, 1, 2);
    const auto gens = random_lattice_generators(rng, n, m, pick(rng, 2, 4));
    try {
      return meet_closure(gens, 64, tol);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ClosureExplosion) throw;
    }
  }
  throw Error(ErrorCode::ClosureExplosion, "no small random lattice found");
}

// Atoms spread over the 4 diagonal slots of M₂(C({ω₀, ω₁})).
std::vector<FiberedOperator> boolean_atoms(SplitMix64& rng, std::size_t k) {
  std::vector<std::size_t> group(4);
  for (std::size_t s = 0; s < 4; ++s) group[s] = s < k ? s : rng.below(k);
  for (std::size_t s = 3; s > 0; --s) std::swap(group[s], group[rng.below(s + 1)]);
  std::vector<FiberedOperator> atoms;
  for (std::size_t g = 0; g < k; ++g) {
    FiberedOperator p(2, 2);
    for (std::size_t s = 0; s < 4; ++s) {
      if (group[s] == g) p.fiber(s / 2)(s % 2, s % 2) = 1.0;
    }
    atoms.push_back(p);
  }
  return atoms;
}

void check_lattice_quasipoints(Check& c, const FiniteLattice& l) {
  const auto qps = enumerate_quasipoints(l);
  for (const auto& b : qps) {
    c.expect(satisfies_quasipoint_axioms(l, b), "enumerated quasipoint violates the axioms");
    for (auto e : b.members) {
      c.expect(extend_trunk(l, trunk(l, b, e)) == b, "trunk does not determine its quasipoint");
    }
  }
  std::vector<std::vector<std::size_t>> base(l.size());
  for (std::size_t a = 0; a < l.size(); ++a) base[a] = stone_base_set(l, a);
  for (std::size_t a = 0; a < l.size(); ++a) {
    for (std::size_t b = 0; b < l.size(); ++b) {
      std::vector<std::size_t> both;
      std::set_intersection(base[a].begin(), base[a].end(), base[b].begin(), base[b].end(),
                            std::back_inserter(both));
      c.expect(base[l.meet(a, b)] == both, "Q_{a∧b} differs from Q_a ∩ Q_b");
    }
  }
}

SuiteResult suite_ea_abelian(std::uint64_t seed, Tolerance tol) {
  Check c("e_a_abelian");
  SplitMix64 rng(seed);
  for (int s = 0; s < 200; ++s) {
    const std::size_t n = pick(rng, 1, 5), m = pick(rng, 1, 4);
    const ModuleElement a = random_normalized(rng, n, m);
    const FiberedOperator e = abelian_projection(a, tol);
    const FiberedOperator x = random_operator(rng, n, m);
    const FiberedOperator y = random_operator(rng, n, m);
    c.residual(distance(e * x * e * y * e, e * y * e * x * e), 1e-9, "E_a A E_a B E_a ≠ E_a B E_a A E_a");
    c.expect(is_abelian_projection(e, tol), "E_a has a fiber of rank > 1");
    c.sample();
  }
  return c.result();
}

SuiteResult suite_ea_matrix(std::uint64_t seed, Tolerance tol) {
  Check c("e_a_matrix");
  SplitMix64 rng(seed);
  for (int s = 0; s < 200; ++s) {
    const std::size_t n = pick(rng, 1, 5), m = pick(rng, 1, 4);
    const ModuleElement a = random_normalized(rng, n, m);
    const FiberedOperator e = abelian_projection(a, tol);
    double worst = 0.0;
    for (std::size_t w = 0; w < m; ++w) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          const Complex expected = a.fiber(w)[j] * std::conj(a.fiber(w)[k]);
          worst = std::max(worst, std::abs(e.fiber(w)(j, k) - expected));
        }
      }
    }
    c.residual(worst, 1e-12, "E_a entries differ from a_j conj(a_k)");
    c.sample();
  }
  return c.result();
}

SuiteResult suite_central_carrier(std::uint64_t seed, Tolerance tol) {
  Check c("central_carrier");
  SplitMix64 rng(seed);
  for (int s = 0; s < 100; ++s) {
    const std::size_t n = pick(rng, 1, 5), m = pick(rng, 1, 4);
    const ModuleElement a = random_normalized(rng, n, m);
    const CenterElement carrier = central_carrier(abelian_projection(a, tol), tol);
    c.residual((carrier - inner(a, a)).sup_norm(), 1e-9, "C_{E_a} ≠ (a|a)");

    const Submodule sub = random_submodule(rng, n, m, pick(rng, 1, 3));
    const CenterElement cm = central_carrier(submodule_projection(sub, tol), tol);
    c.expect(cm == char_fn(support(sub, tol)), "C_{P_M} ≠ χ_{S(M)}");
    c.sample();
  }
  return c.result();
}

SuiteResult suite_normalization(std::uint64_t seed, Tolerance tol) {
  Check c("normalization");
  SplitMix64 rng(seed);
  for (int s = 0; s < 100; ++s) {
    const std::size_t n = pick(rng, 1, 5), m = pick(rng, 1, 4);
    const ModuleElement a = random_module_element(rng, n, m);
    const ModuleElement at = normalize(a, tol);
    const PointSet sa = support(a, tol);
    const CenterElement aa = inner(at, at);
    for (std::size_t w = 0; w < m; ++w) {
      if (sa.contains(w)) {
        c.residual(std::abs(aa[w] - 1.0), 1e-14, "(ã|ã) ≠ 1 on S(a)");
      } else {
        c.expect(aa[w] == Complex{}, "(ã|ã) ≠ 0 off S(a)");
      }
    }
    c.expect(aa.snapped_projection(tol) == char_fn(sa), "(ã|ã) ≠ χ_{S(a)}");

    // ã𝒜 = a𝒜: each generator lies in the other submodule, with equal fiber ranks.
    const FiberedOperator e_at = abelian_projection(at, tol);
    const FiberedOperator p_a = submodule_projection(Submodule{{a}}, tol);
    c.residual(distance(e_at * a, a), 1e-9, "a ∉ ã𝒜");
    c.residual(distance(p_a * at, at), 1e-9, "ã ∉ a𝒜");
    c.expect(fiber_ranks(e_at, tol) == fiber_ranks(p_a, tol), "fiber ranks of ã𝒜 and a𝒜 differ");
    c.expect(normalize(at, tol) == at, "normalize is not idempotent");
    c.sample();
  }
  return c.result();
}

SuiteResult suite_pythagoras(std::uint64_t, Tolerance) {
  Check c("pythagoras_failure");
  for (std::size_t n = 2; n <= 4; ++n) {
    // Ω = {ω₀,…,ω_{n−1}} partitioned into singletons, aₖ = χ_{ωₖ}.
    std::vector<CenterElement> parts;
    for (std::size_t k = 0; k < n; ++k) parts.push_back(char_fn(PointSet(n, {k})));
    const ModuleElement a = ModuleElement::from_components(parts);
    c.expect(module_norm(a) == 1.0, "|a| ≠ 1");
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const ModuleElement ak = ModuleElement::basis(n, n, k) * parts[k];
      total += module_norm(ak) * module_norm(ak);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        const ModuleElement aj = ModuleElement::basis(n, n, j) * parts[j];
        c.expect(inner(ak, aj) == CenterElement::zero(n), "(a_k|a_j) ≠ 0");
      }
    }
    c.expect(total == static_cast<double>(n), "Σ|a_k|² ≠ n");
    c.sample();
  }
  return c.result();
}

SuiteResult suite_quasipoint_axioms(std::uint64_t seed, Tolerance tol) {
  Check c("lattice_quasipoints");
  SplitMix64 rng(seed);
  for (std::size_t k = 1; k <= 4; ++k) {
    const FiniteLattice l = meet_closure(boolean_atoms(rng, k), kDefaultClosureCap, tol);
    c.expect(l.size() == (std::size_t{1} << k), "Boolean closure has the wrong size");
    c.expect(enumerate_quasipoints(l).size() == k, "Boolean algebra has the wrong number of quasipoints");
    check_lattice_quasipoints(c, l);
    c.sample();
  }
  for (int s = 0; s < 100; ++s) {
    check_lattice_quasipoints(c, random_lattice(rng, tol));
    c.sample();
  }
  return c.result();
}

SuiteResult suite_all_abelian(std::uint64_t seed, Tolerance tol) {
  Check c("all_quasipoints_abelian");
  SplitMix64 rng(seed);
  for (int s = 0; s < 100; ++s) {
    const FiniteLattice l = random_lattice(rng, tol);
    const std::size_t m = l.element(0).space_size();
    for (const auto& f : enumerate_quasipoints(l)) {
      const Quasipoint b = extend_filter_to_quasipoint(l, f, tol);
      for (auto i : f.members) c.expect(qp_contains(b, l.element(i), tol), "filter member not in 𝔅_{ω,x}");
      const FiberedOperator q = atomic_projection(b, m);
      c.expect(is_abelian_projection(q, tol) && qp_contains(b, q, tol), "no abelian member");
    }
    c.sample();
  }
  return c.result();
}

SuiteResult suite_orbits(std::uint64_t seed, Tolerance tol) {
  Check c("orbit_parametrization");
  SplitMix64 rng(seed);
  const std::size_t n = 3, m = 3;
  std::vector<Quasipoint> qps;
  for (int s = 0; s < 50; ++s) qps.push_back(random_quasipoint(rng, n, m));
  for (std::size_t w = 0; w < m; ++w) {
    c.expect(zeta(make_quasipoint(w, unit_vector(n, 0))).omega == w, "ζ misses a point");
  }
  for (const auto& b : qps) {
    for (const auto& b2 : qps) {
      const auto u = orbit_witness(b, b2, m);
      c.expect(u.has_value() == (zeta(b) == zeta(b2)), "orbit witness disagrees with ζ");
      if (u) {
        c.expect(is_unitary(*u, tol), "orbit witness is not unitary");
        const Quasipoint image = unitary_act(*u, b, tol);
        c.residual(1.0 - std::abs(dot(image.line, b2.line)), kLineTolerance, "U.B ≠ B2");
        c.expect(image.omega == b2.omega, "U.B moved ω");
      }
      c.sample();
    }
  }
  return c.result();
}

SuiteResult suite_observables(std::uint64_t seed, Tolerance tol) {
  Check c("observables");
  SplitMix64 rng(seed);
  const FiberedOperator d = FiberedOperator::constant(1, ComplexMatrix{{1.0, 0.0}, {0.0, 2.0}});
  const double r = 1.0 / std::sqrt(2.0);
  c.expect(observable_value(d, make_quasipoint(0, unit_vector(2, 0)), tol) == 1.0, "f(e1) ≠ 1");
  c.expect(observable_value(d, make_quasipoint(0, unit_vector(2, 1)), tol) == 2.0, "f(e2) ≠ 2");
  c.expect(observable_value(d, make_quasipoint(0, ComplexVector{r, r}), tol) == 2.0, "f(diagonal) ≠ 2");
  c.sample();

  for (int s = 0; s < 200; ++s) {
    const std::size_t n = pick(rng, 1, 5), m = pick(rng, 1, 4);
    const FiberedOperator a = random_self_adjoint(rng, n, m);
    const Quasipoint b = random_quasipoint(rng, n, m);
    const double value = observable_value(a, b, tol);
    const EigenSystem eig = hermitian_eig(a.fiber(b.omega.omega), tol);
    double gap = INFINITY;
    for (double lambda : eig.values) gap = std::min(gap, std::abs(lambda - value));
    c.residual(gap, 1e-8, "f_A(B) outside spec A(ω)");

    std::vector<Complex> g(m);
    for (auto& z : g) z = rng.normal();
    const CenterElement ge(std::move(g));
    const double central = observable_value(FiberedOperator::central(n, ge), b, tol);
    c.residual(std::abs(central - gelfand_eval(ge, zeta(b)).real()), 1e-12, "f_{I g}(B) ≠ g(ζ(B))");
    c.sample();
  }
  return c.result();
}

SuiteResult suite_observable_laws(std::uint64_t seed, Tolerance tol) {
  Check c("observable_laws");
  SplitMix64 rng(seed);
  for (int s = 0; s < 200; ++s) {
    const std::size_t n = pick(rng, 1, 4), m = pick(rng, 1, 3);
    const FiberedOperator a = random_self_adjoint(rng, n, m);
    const auto lines = eigenline_quasipoints(a, tol);
    const Quasipoint b = rng.chance(0.5) ? lines[rng.below(lines.size())] : random_quasipoint(rng, n, m);
    const double f = observable_value(a, b, tol);

    const double shift = rng.normal();
    const FiberedOperator shifted = a + FiberedOperator::identity(n, m) * Complex{shift};
    c.residual(std::abs(observable_value(shifted, b, tol) - (f + shift)), 1e-9, "f_{A+cI} ≠ f_A + c");

    const FiberedOperator u = random_unitary_operator(rng, n, m);
    const FiberedOperator conj = u * a * u.adjoint();
    c.residual(std::abs(observable_value(conj, unitary_act(u, b, tol), tol) - f), 1e-9,
               "f_{UAU*}(U.B) ≠ f_A(B)");

    const std::vector<double> image = observable_image(a, lines, tol);
    c.expect(image == spectrum(a, tol), "eigenline image differs from the spectrum");
    c.sample();
  }
  return c.result();
}

SuiteResult suite_spectral_family(std::uint64_t seed, Tolerance tol) {
  Check c("spectral_family");
  SplitMix64 rng(seed);
  for (int s = 0; s < 100; ++s) {
    const std::size_t n = pick(rng, 1, 5), m = pick(rng, 1, 3);
    const FiberedOperator a = random_self_adjoint(rng, n, m);
    const SpectralFamily family = spectral_family(a, tol);
    for (std::size_t w = 0; w < m; ++w) {
      const SpectralSteps& st = family.fibers[w];
      ComplexMatrix rebuilt = ComplexMatrix::zero(n, n);
      ComplexMatrix prev = ComplexMatrix::zero(n, n);
      for (std::size_t i = 0; i < st.lambdas.size(); ++i) {
        c.expect(is_projection(st.cumulative[i], tol), "E_λ is not a projection");
        c.expect(proj_leq(prev, st.cumulative[i], tol), "E_λ is not monotone");
        if (i > 0) c.expect(st.lambdas[i - 1] < st.lambdas[i], "steps are not ascending");
        rebuilt += (st.cumulative[i] - prev) * Complex{st.lambdas[i]};
        prev = st.cumulative[i];
      }
      c.residual(distance(rebuilt, a.fiber(w)), 1e-8, "A ≠ Σ λ (E_i − E_{i−1})");
    }
    c.sample();
  }
  return c.result();
}

SuiteResult suite_germs(std::uint64_t seed, Tolerance tol) {
  Check c("germs");
  SplitMix64 rng(seed);
  for (int s = 0; s < 100; ++s) {
    const std::size_t n = pick(rng, 1, 4), m = pick(rng, 1, 4);
    const CenterQuasipoint beta{rng.below(m)};
    const CenterElement x = random_center(rng, m), y = random_center(rng, m);
    c.expect(germ_eval(x + y, beta) == germ_eval(x, beta) + germ_eval(y, beta), "[α+γ] ≠ [α]+[γ]");
    c.expect(germ_eval(x * y, beta) == germ_eval(x, beta) * germ_eval(y, beta), "[αγ] ≠ [α][γ]");
    if (germ_eval(x, beta) != Complex{}) {
      c.residual(std::abs(germ_eval(x * germ_inverse(x, beta), beta) - 1.0), 1e-12, "[α][α]⁻¹ ≠ 1");
    }

    const ModuleElement a = random_module_element(rng, n, m), b = random_module_element(rng, n, m);
    c.expect(germ_eval(a + b, beta).value == sum(germ_eval(a, beta).value, germ_eval(b, beta).value),
             "[a+b] ≠ [a]+[b]");
    c.expect(germ_eval(a * x, beta).value == scaled(germ_eval(a, beta).value, germ_eval(x, beta)),
             "[aα] ≠ [a][α]");
    for (std::size_t k = 0; k < n; ++k) {
      c.expect(germ_eval(ModuleElement::basis(n, m, k), beta).value == unit_vector(n, k),
               "[e_k] is not the standard basis");
    }

    const Submodule mm = random_submodule(rng, n, m, pick(rng, 1, n));
    const Submodule nn = random_submodule(rng, n, m, pick(rng, 1, n));
    const ComplexMatrix lhs = germ_submodule(submodule_intersection(mm, nn, tol), beta, tol);
    const ComplexMatrix rhs = proj_meet(germ_submodule(mm, beta, tol), germ_submodule(nn, beta, tol), tol);
    c.residual(distance(lhs, rhs), 1e-9, "[M∩N]_β ≠ [M]_β ∩ [N]_β");
    c.sample();
  }
  return c.result();
}

SuiteResult suite_transport(std::uint64_t seed, Tolerance tol) {
  Check c("transport");
  SplitMix64 rng(seed);
  for (int s = 0; s < 200; ++s) {
    const std::size_t n = pick(rng, 1, 4), m = pick(rng, 1, 3);
    const FiberedOperator init = random_projection_operator(rng, n, m);
    const FiberedOperator theta = random_unitary_operator(rng, n, m) * init;
    Submodule u;
    for (std::size_t k = 0, count = pick(rng, 1, 2); k < count; ++k) {
      u.generators.push_back(init * random_module_element(rng, n, m));
    }
    const FiberedOperator pu = submodule_projection(u, tol);
    Submodule image;
    for (const auto& g : u.generators) image.generators.push_back(theta * g);
    c.residual(distance(transport(theta, pu, tol), submodule_projection(image, tol)), 1e-9,
               "θ P_U θ* ≠ P_{θU}");
    c.sample();
  }
  for (int s = 0; s < 100; ++s) {
    const std::size_t n = pick(rng, 1, 4), m = pick(rng, 1, 4);
    const Quasipoint b = random_quasipoint(rng, n, m);
    ModuleElement a = random_normalized(rng, n, m, 0.0);
    ModuleElement other = random_normalized(rng, n, m, 0.2);
    a.fiber(b.omega.omega) = b.line;
    const Complex phase = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
    other.fiber(b.omega.omega) = scaled(b.line, phase);
    PointSet shared(m, {b.omega.omega});
    for (std::size_t w = 0; w < m; ++w) {
      if (w != b.omega.omega && rng.chance(0.4)) {
        other.fiber(w) = a.fiber(w);
        shared.insert(w);
      }
    }
    const FiberedOperator ea = abelian_projection(a, tol), eb = abelian_projection(other, tol);
    const CenterElement r = common_central_reduction(ea, eb, b, tol);
    c.expect(center_membership(r, zeta(b)), "r ∉ β");
    c.expect(shared.is_subset_of(r.ones()), "r misses a shared fiber");
    c.residual(distance(ea.times(r), eb.times(r)), 1e-9, "rE_a ≠ rE_b");
    c.sample();
  }
  return c.result();
}

SuiteResult suite_quasipoint_membership(std::uint64_t seed, Tolerance tol) {
  Check c("quasipoint_membership");
  SplitMix64 rng(seed);
  for (int s = 0; s < 500; ++s) {
    const std::size_t n = pick(rng, 1, 4), m = pick(rng, 1, 3);
    const Quasipoint b = random_quasipoint(rng, n, m);
    const FiberedOperator atom = atomic_projection(b, m);
    const FiberedOperator p = proj_join(atom, random_projection_operator(rng, n, m), tol);
    const FiberedOperator q = proj_join(atom, random_projection_operator(rng, n, m), tol);
    c.expect(qp_contains(b, p, tol) && qp_contains(b, q, tol), "join with the atom is not a member");
    c.expect(qp_contains(b, proj_meet(p, q, tol), tol), "B not closed under meets");
    const FiberedOperator r = random_projection_operator(rng, n, m);
    c.expect(qp_contains(b, proj_join(p, r, tol), tol), "B not upward closed");
    if (!qp_contains(b, r, tol)) {
      const FiberedOperator w = maximality_witness(b, r, tol);
      c.expect(qp_contains(b, w, tol), "maximality witness is not a member");
      c.residual(proj_meet(r, w, tol).fiber(b.omega.omega).max_abs(), tol.eps(),
                 "P ∧ Q is nonzero at ω");
    }
    const CenterElement cp = char_fn(PointSet::from_mask(m, rng.next()));
    c.expect(qp_contains(b, FiberedOperator::central(n, cp), tol) == (cp[b.omega.omega] == 1.0),
             "central membership disagrees with ζ");
    c.sample();
  }
  return c.result();
}

SuiteResult suite_support_witness(std::uint64_t seed, Tolerance tol) {
  Check c("support_witness");
  SplitMix64 rng(seed);
  for (int s = 0; s < 100; ++s) {
    const std::size_t n = pick(rng, 1, 4), m = pick(rng, 1, 4);
    Submodule sub = random_submodule(rng, n, m, pick(rng, 1, 4));
    if (support(sub, tol).empty()) sub.generators.push_back(random_module_element(rng, n, m, 0.0));
    const ModuleElement w = support_witness(sub, tol);
    c.expect(support(w, tol) == support(sub, tol), "S(ã) ≠ S(M)");
    c.expect(inner(w, w).snapped_projection(tol) == char_fn(support(sub, tol)), "(ã|ã) ≠ χ_{S(M)}");
    c.residual(distance(submodule_projection(sub, tol) * w, w), 1e-9, "ã ∉ M");
    c.expect(annihilator(sub, tol) + char_fn(support(sub, tol)) == CenterElement::unit(m),
             "ann(M) ≠ χ_{Ω∖S(M)}");

    const ModuleElement a = random_module_element(rng, n, m), b = random_module_element(rng, n, m);
    const Decomposition d = decompose(b, a, tol);
    c.residual(distance(a * d.alpha + d.aperp, b), 1e-9, "b ≠ aα + a⊥");
    c.residual(inner(a, d.aperp).sup_norm(), 1e-9, "a⊥ not orthogonal to a");
    c.sample();
  }
  return c.result();
}

SuiteResult suite_center(std::uint64_t seed, Tolerance) {
  Check c("center_quasipoints");
  SplitMix64 rng(seed);
  for (std::size_t m = 1; m <= 4; ++m) {
    const StoneSpace space(m);
    const auto qps = center_quasipoints(space);
    c.expect(qps.size() == m, "wrong number of center quasipoints");
    for (const auto& beta : qps) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        const CenterElement p = char_fn(PointSet::from_mask(m, mask));
        c.expect(center_membership(p, beta) == (((mask >> beta.omega) & 1U) != 0), "membership ≠ p(ω)");
      }
    }
    for (int s = 0; s < 20; ++s) {
      const CenterElement x = random_center(rng, m), y = random_center(rng, m);
      const CenterQuasipoint beta{rng.below(m)};
      c.expect(gelfand_eval(x * y, beta) == gelfand_eval(x, beta) * gelfand_eval(y, beta),
               "Gelfand evaluation is not multiplicative");
    }
    c.sample();
  }
  return c.result();
}

}  // namespace

const std::vector<SuiteInfo>& property_suites() {
  static const std::vector<SuiteInfo> suites = {
      {"e_a_abelian", suite_ea_abelian},
      {"e_a_matrix", suite_ea_matrix},
      {"central_carrier", suite_central_carrier},
      {"normalization", suite_normalization},
      {"pythagoras_failure", suite_pythagoras},
      {"lattice_quasipoints", suite_quasipoint_axioms},
      {"all_quasipoints_abelian", suite_all_abelian},
      {"orbit_parametrization", suite_orbits},
      {"observables", suite_observables},
      {"observable_laws", suite_observable_laws},
      {"spectral_family", suite_spectral_family},
      {"germs", suite_germs},
      {"transport", suite_transport},
      {"quasipoint_membership", suite_quasipoint_membership},
      {"support_witness", suite_support_witness},
      {"center_quasipoints", suite_center},
  };
  return suites;
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed, Tolerance tol) {
  std::vector<SuiteResult> out;
  const auto& suites = property_suites();
  for (std::size_t i = 0; i < suites.size(); ++i) {
    SplitMix64 mix(seed + 0x632BE59BD9B4E019ULL * (i + 1));
    const std::uint64_t suite_seed = mix.next();
    try {
      out.push_back(suites[i].run(suite_seed, tol));
    } catch (const std::exception& e) {
      SuiteResult r;
      r.name = suites[i].name;
      r.pass = false;
      r.detail = e.what();
      out.push_back(r);
    }
  }
  return out;
}

}  // namespace stonework
