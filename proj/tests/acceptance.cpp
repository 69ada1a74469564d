// Acceptance run: one PASS/FAIL line per criterion. Values checked against
// independent references (Eigen, brute-force enumeration, direct formulas)
// rather than against the library's own helpers wherever a reference exists.

#include <algorithm>
#include <array>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <string>
#include <sys/wait.h>

#include "oracles.hpp"
#include "stonework/hilbert_module.hpp"
#include "stonework/lattice_filters.hpp"
#include "stonework/matrix_algebra.hpp"
#include "stonework/observables.hpp"
#include "stonework/random.hpp"
#include "stonework/stone_spectrum.hpp"

using namespace stonework;

namespace {

struct Outcome {
  bool pass = true;
  double residual = 0.0;
  std::size_t samples = 0;
  std::string note;

  void track(double value, double limit, const char* what) {
    if (std::isfinite(value)) residual = std::max(residual, value);
    if (!(value <= limit)) fail(what);
  }
  void expect(bool ok, const char* what) {
    if (!ok) fail(what);
  }
  void fail(const std::string& what) {
    if (pass) note = what;
    pass = false;
  }
};

std::size_t pick(SplitMix64& rng, std::size_t lo, std::size_t hi) { return lo + rng.below(hi - lo + 1); }

Eigen::VectorXcd vec(const ComplexVector& v) {
  Eigen::VectorXcd out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out(i) = v[i];
  return out;
}

double fiber_rank(const ComplexMatrix& p) { return static_cast<double>(oracle::rank(p)); }

FiniteLattice random_lattice(SplitMix64& rng) {
  for (;;) {
    const auto gens = random_lattice_generators(rng, pick(rng, 2, 3), pick(rng, 1, 2), pick(rng, 2, 4));
    try {
      return meet_closure(gens, 64);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ClosureExplosion) throw;
    }
  }
}

// Boolean algebra with k atoms spread over the diagonal slots of M₂(C(Ω)), |Ω| = 2.
FiniteLattice boolean_lattice(std::size_t k, std::uint64_t layout) {
  std::vector<FiberedOperator> atoms(k, FiberedOperator(2, 2));
  for (std::size_t slot = 0; slot < 4; ++slot) {
    const std::size_t g = slot < k ? slot : (layout >> (2 * slot)) % k;
    atoms[g].fiber(slot / 2)(slot % 2, slot % 2) = 1.0;
  }
  return meet_closure(atoms);
}

// Quasipoint axioms checked from scratch with range inclusion as the order.
void check_axioms(Outcome& o, const FiniteLattice& l, const std::vector<Filter>& quasipoints) {
  const std::size_t n = l.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  std::vector<bool> zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    zero[i] = oracle::is_zero(l.element(i));
    for (std::size_t j = 0; j < n; ++j) leq[i][j] = oracle::range_leq(l.element(i), l.element(j));
  }
  for (const auto& b : quasipoints) {
    for (auto a : b.members) o.expect(!zero[a], "(i) violated: 0 in B");
    for (auto a : b.members) {
      for (auto c : b.members) {
        const bool bounded = std::any_of(b.members.begin(), b.members.end(),
                                         [&](std::size_t d) { return leq[d][a] && leq[d][c]; });
        o.expect(bounded, "(ii) violated: no common lower bound in B");
      }
    }
    // (iii): for x ∉ B some member a has no nonzero common lower bound with x
    // anywhere in the lattice, so no filter base contains B ∪ {x}.
    for (std::size_t x = 0; x < n; ++x) {
      if (b.contains(x)) continue;
      const bool blocked = std::any_of(b.members.begin(), b.members.end(), [&](std::size_t a) {
        for (std::size_t c = 0; c < n; ++c) {
          if (!zero[c] && leq[c][a] && leq[c][x]) return false;
        }
        return true;
      });
      o.expect(blocked, "(iii) violated: B extends");
    }
  }
  if (n <= 16) {
    auto expected = oracle::maximal_filter_bases(leq, zero);
    std::vector<std::uint32_t> ours;
    for (const auto& b : quasipoints) {
      std::uint32_t mask = 0;
      for (auto i : b.members) mask |= std::uint32_t{1} << i;
      ours.push_back(mask);
    }
    std::sort(expected.begin(), expected.end());
    std::sort(ours.begin(), ours.end());
    o.expect(ours == expected, "quasipoints differ from brute-force maximal filter bases");
  }
}

void check_trunks_and_base_sets(Outcome& o, const FiniteLattice& l, const std::vector<Filter>& quasipoints) {
  for (const auto& b : quasipoints) {
    for (auto e : b.members) o.expect(extend_trunk(l, trunk(l, b, e)) == b, "extend_trunk(trunk(B,E)) != B");
  }
  std::vector<std::vector<std::size_t>> base(l.size());
  for (std::size_t a = 0; a < l.size(); ++a) {
    for (std::size_t q = 0; q < quasipoints.size(); ++q) {
      if (quasipoints[q].contains(a)) base[a].push_back(q);
    }
    o.expect(stone_base_set(l, a) == base[a], "stone_base_set differs from membership");
  }
  for (std::size_t a = 0; a < l.size(); ++a) {
    for (std::size_t b = 0; b < l.size(); ++b) {
      std::vector<std::size_t> both;
      std::set_intersection(base[a].begin(), base[a].end(), base[b].begin(), base[b].end(),
                            std::back_inserter(both));
      o.expect(base[l.meet(a, b)] == both, "Q_{a^b} != Q_a n Q_b");
    }
  }
}

Outcome criterion1() {
  Outcome o;
  SplitMix64 rng(1001);
  for (int s = 0; s < 200; ++s) {
    const std::size_t n = pick(rng, 1, 5), m = pick(rng, 1, 4);
    const ModuleElement a = random_normalized(rng, n, m);
    const FiberedOperator e = abelian_projection(a);
    const FiberedOperator x = random_operator(rng, n, m), y = random_operator(rng, n, m);
    for (std::size_t w = 0; w < m; ++w) {
      const Eigen::MatrixXcd ew = oracle::to_eigen(e.fiber(w));
      const Eigen::MatrixXcd xw = oracle::to_eigen(x.fiber(w)), yw = oracle::to_eigen(y.fiber(w));
      o.track(oracle::max_abs(ew * xw * ew * yw * ew - ew * yw * ew * xw * ew), 1e-9, "E_a A E_a B E_a differs");
    }
    ++o.samples;
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  SplitMix64 rng(1002);
  for (int s = 0; s < 200; ++s) {
    const std::size_t n = pick(rng, 1, 5), m = pick(rng, 1, 4);
    const ModuleElement a = random_normalized(rng, n, m);
    const FiberedOperator e = abelian_projection(a);
    for (std::size_t w = 0; w < m; ++w) {
      const Eigen::VectorXcd v = vec(a.fiber(w));
      o.track(oracle::max_abs(oracle::to_eigen(e.fiber(w)) - v * v.adjoint()), 1e-12, "matrix formula");
    }
    ++o.samples;
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  SplitMix64 rng(1003);
  for (int s = 0; s < 100; ++s) {
    const std::size_t n = pick(rng, 1, 5), m = pick(rng, 1, 4);
    const ModuleElement a = random_normalized(rng, n, m);
    const CenterElement c = central_carrier(abelian_projection(a));
    for (std::size_t w = 0; w < m; ++w) o.track(std::abs(c[w] - vec(a.fiber(w)).squaredNorm()), 1e-9, "C_{E_a}");

    Submodule sub = random_submodule(rng, n, m, pick(rng, 1, 3));
    const CenterElement cm = central_carrier(submodule_projection(sub));
    for (std::size_t w = 0; w < m; ++w) {
      std::vector<ComplexVector> gens;
      for (const auto& g : sub.generators) gens.push_back(g.fiber(w));
      const double expected = oracle::span_of(n, gens).cols() > 0 ? 1.0 : 0.0;
      o.expect(cm[w] == Complex{expected}, "C_{P_M} != chi_{S(M)}");
    }
    ++o.samples;
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  SplitMix64 rng(1004);
  for (int s = 0; s < 100; ++s) {
    const std::size_t n = pick(rng, 1, 5), m = pick(rng, 1, 4);
    const ModuleElement a = random_module_element(rng, n, m);
    const ModuleElement at = normalize(a);
    const FiberedOperator e = abelian_projection(at);
    const PointSet sa = support(a);
    for (std::size_t w = 0; w < m; ++w) {
      const Eigen::MatrixXcd span_a = oracle::projector(oracle::span_of(n, {a.fiber(w)}));
      o.track(oracle::max_abs(span_a * vec(at.fiber(w)) - vec(at.fiber(w))), 1e-9, "a~ not in aA");
      o.track(max_abs(difference(e.fiber(w).apply(a.fiber(w)), a.fiber(w))), 1e-9, "a not in a~A");
      o.expect(fiber_rank(e.fiber(w)) == static_cast<double>(oracle::column_space(span_a).cols()), "fiber ranks differ");

      double sq = 0.0;
      for (const auto& z : at.fiber(w)) sq += std::norm(z);
      if (sa.contains(w)) {
        o.track(std::abs(sq - 1.0), 1e-14, "(a~|a~) != 1 on S(a)");
      } else {
        o.expect(sq == 0.0, "(a~|a~) != 0 off S(a)");
      }
    }
    o.expect(inner(at, at).snapped_projection() == char_fn(sa), "(a~|a~) is not chi_{S(a)}");
    ++o.samples;
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (std::size_t n = 2; n <= 4; ++n) {
    std::vector<CenterElement> parts;
    for (std::size_t k = 0; k < n; ++k) parts.push_back(char_fn(PointSet(n, {k})));
    const ModuleElement a = ModuleElement::from_components(parts);
    o.expect(module_norm(a) == 1.0, "|a| != 1");
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double nk = module_norm(ModuleElement::basis(n, n, k) * parts[k]);
      total += nk * nk;
    }
    o.expect(total == static_cast<double>(n), "sum |a_k|^2 != n");
    ++o.samples;
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  SplitMix64 rng(1006);
  for (std::size_t k = 1; k <= 4; ++k) {
    for (int layout = 0; layout < 8; ++layout) {
      const FiniteLattice l = boolean_lattice(k, rng.next());
      o.expect(l.size() == (std::size_t{1} << k), "Boolean closure has the wrong size");
      const auto qps = enumerate_quasipoints(l);
      o.expect(qps.size() == k, "wrong quasipoint count");
      check_axioms(o, l, qps);
      check_trunks_and_base_sets(o, l, qps);
      ++o.samples;
    }
  }
  for (int s = 0; s < 100; ++s) {
    const FiniteLattice l = random_lattice(rng);
    const auto qps = enumerate_quasipoints(l);
    check_axioms(o, l, qps);
    check_trunks_and_base_sets(o, l, qps);
    ++o.samples;
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  SplitMix64 rng(1007);
  for (int s = 0; s < 100; ++s) {
    const FiniteLattice l = random_lattice(rng);
    const std::size_t m = l.element(0).space_size();
    for (const auto& f : enumerate_quasipoints(l)) {
      const Quasipoint b = extend_filter_to_quasipoint(l, f);
      const Eigen::VectorXcd x = vec(b.line);
      for (auto i : f.members) {
        const Eigen::MatrixXcd p = oracle::to_eigen(l.element(i).fiber(b.omega.omega));
        o.track(oracle::max_abs(p * x - x), 1e-9, "filter member does not fix the line");
      }
      const FiberedOperator q = atomic_projection(b, m);
      for (const auto& fib : q.fibers()) o.expect(fiber_rank(fib) <= 1.0, "witness not abelian");
      o.track(oracle::max_abs(oracle::to_eigen(q.fiber(b.omega.omega)) * x - x), 1e-12, "witness not in B");
    }
    ++o.samples;
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  SplitMix64 rng(1008);
  const std::size_t n = 3, m = 3;
  std::vector<Quasipoint> qps;
  for (int s = 0; s < 50; ++s) qps.push_back(random_quasipoint(rng, n, m));
  for (const auto& b : qps) {
    for (const auto& b2 : qps) {
      const auto u = orbit_witness(b, b2, m);
      o.expect(u.has_value() == (b.omega == b2.omega), "witness exists iff zeta agrees");
      if (u) {
        for (const auto& f : u->fibers()) {
          const Eigen::MatrixXcd uf = oracle::to_eigen(f);
          o.track(oracle::max_abs(uf.adjoint() * uf - Eigen::MatrixXcd::Identity(n, n)), 1e-12, "not unitary");
        }
        const Quasipoint image = unitary_act(*u, b);
        const double overlap = std::abs(vec(image.line).dot(vec(b2.line)));
        o.track(1.0 - overlap, 1e-10, "U.B != B2");
        o.expect(image.omega == b2.omega, "U.B over a different point");
      }
      ++o.samples;
    }
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  const FiberedOperator d = FiberedOperator::constant(1, ComplexMatrix{{1.0, 0.0}, {0.0, 2.0}});
  const double r = 1.0 / std::sqrt(2.0);
  o.expect(observable_value(d, make_quasipoint(0, unit_vector(2, 0))) == 1.0, "f(e1) != 1");
  o.expect(observable_value(d, make_quasipoint(0, unit_vector(2, 1))) == 2.0, "f(e2) != 2");
  o.expect(observable_value(d, make_quasipoint(0, ComplexVector{r, r})) == 2.0, "f((e1+e2)/sqrt2) != 2");
  SplitMix64 rng(1009);
  for (int s = 0; s < 200; ++s) {
    const std::size_t n = pick(rng, 1, 5), m = pick(rng, 1, 4);
    const FiberedOperator a = random_self_adjoint(rng, n, m);
    const Quasipoint b = random_quasipoint(rng, n, m);
    const auto ev = oracle::eigenvalues(a.fiber(b.omega.omega));
    const double value = observable_value(a, b);
    double gap = INFINITY;
    for (double lambda : ev) gap = std::min(gap, std::abs(lambda - value));
    o.track(gap, 1e-8, "f_A(B) outside spec");

    std::vector<Complex> g(m);
    for (auto& z : g) z = rng.normal();
    const CenterElement ge(g);
    o.track(std::abs(observable_value(FiberedOperator::central(n, ge), b) - g[b.omega.omega].real()), 1e-12,
            "central degeneration");
    ++o.samples;
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  SplitMix64 rng(1010);
  for (int s = 0; s < 100; ++s) {
    const std::size_t n = pick(rng, 1, 4), m = pick(rng, 1, 4);
    const CenterQuasipoint beta{rng.below(m)};
    const CenterElement x = random_center(rng, m), y = random_center(rng, m), z = random_center(rng, m);
    const Complex gx = x[beta.omega], gy = y[beta.omega], gz = z[beta.omega];
    o.expect(germ_eval(x + y, beta) == gx + gy, "[a+g] != [a]+[g]");
    o.expect(germ_eval(x * y, beta) == gx * gy, "[ag] != [a][g]");
    o.expect(germ_eval(x * y, beta) == germ_eval(y * x, beta), "germ product not commutative");
    o.track(std::abs(germ_eval(x * (y + z), beta) - (gx * gy + gx * gz)), 1e-12, "distributivity");
    o.expect(germ_eval(CenterElement::unit(m), beta) == Complex{1.0}, "[1] != 1");
    o.expect(germ_eval(CenterElement::zero(m), beta) == Complex{0.0}, "[0] != 0");
    if (gx != Complex{}) {
      o.track(std::abs(germ_eval(x * germ_inverse(x, beta), beta) - 1.0), 1e-12, "inverse germ");
    }

    Eigen::MatrixXcd basis(n, n);
    for (std::size_t k = 0; k < n; ++k) basis.col(k) = vec(germ_eval(ModuleElement::basis(n, m, k), beta).value);
    o.expect(oracle::max_abs(basis - Eigen::MatrixXcd::Identity(n, n)) == 0.0, "basis germs not standard");
    o.expect(oracle::column_space(basis).cols() == static_cast<Eigen::Index>(n), "dim != n");

    const Submodule mm = random_submodule(rng, n, m, pick(rng, 1, n));
    const Submodule nn = random_submodule(rng, n, m, pick(rng, 1, n));
    std::vector<ComplexVector> mv, nv;
    for (const auto& g : mm.generators) mv.push_back(g.fiber(beta.omega));
    for (const auto& g : nn.generators) nv.push_back(g.fiber(beta.omega));
    const Eigen::MatrixXcd expected = oracle::projector(oracle::intersection(oracle::span_of(n, mv), oracle::span_of(n, nv)));
    const ComplexMatrix ours = germ_submodule(submodule_intersection(mm, nn), beta);
    o.track(oracle::max_abs(oracle::to_eigen(ours) - expected), 1e-9, "[M n N] != [M] n [N]");
    ++o.samples;
  }
  return o;
}

Outcome criterion11() {
  Outcome o;
  SplitMix64 rng(1011);
  for (int s = 0; s < 200; ++s) {
    const std::size_t n = pick(rng, 1, 4), m = pick(rng, 1, 3);
    const FiberedOperator init = random_projection_operator(rng, n, m);
    const FiberedOperator theta = random_unitary_operator(rng, n, m) * init;
    Submodule u;
    for (std::size_t k = 0, count = pick(rng, 1, 2); k < count; ++k) {
      u.generators.push_back(init * random_module_element(rng, n, m));
    }
    const FiberedOperator moved = transport(theta, submodule_projection(u));
    for (std::size_t w = 0; w < m; ++w) {
      std::vector<ComplexVector> image;
      for (const auto& g : u.generators) image.push_back(theta.fiber(w).apply(g.fiber(w)));
      const Eigen::MatrixXcd expected = oracle::projector(oracle::span_of(n, image));
      o.track(oracle::max_abs(oracle::to_eigen(moved.fiber(w)) - expected), 1e-9, "theta P_U theta* != P_{theta U}");
    }
    ++o.samples;
  }
  for (int s = 0; s < 100; ++s) {
    const std::size_t n = pick(rng, 1, 4), m = pick(rng, 1, 4);
    const Quasipoint b = random_quasipoint(rng, n, m);
    ModuleElement a = random_normalized(rng, n, m, 0.0);
    ModuleElement other = random_normalized(rng, n, m, 0.2);
    a.fiber(b.omega.omega) = b.line;
    other.fiber(b.omega.omega) = scaled(b.line, std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform()));
    for (std::size_t w = 0; w < m; ++w) {
      if (w != b.omega.omega && rng.chance(0.4)) other.fiber(w) = a.fiber(w);
    }
    const FiberedOperator ea = abelian_projection(a), eb = abelian_projection(other);
    const CenterElement r = common_central_reduction(ea, eb, b);
    o.expect(r.is_projection(), "r is not a projection");
    o.expect(r[b.omega.omega] == Complex{1.0}, "r not in beta");
    for (std::size_t w = 0; w < m; ++w) {
      const Eigen::MatrixXcd diff = (oracle::to_eigen(ea.fiber(w)) - oracle::to_eigen(eb.fiber(w))) * r[w];
      o.track(oracle::max_abs(diff), 1e-9, "r E_a != r E_b");
    }
    ++o.samples;
  }
  return o;
}

struct Captured {
  int status = -1;
  std::string out;
};

Captured capture(const std::string& command) {
  Captured c;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return c;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) c.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return c;
}

Outcome criterion12() {
  Outcome o;
  const std::string command = std::string("\"") + STONEWORK_CLI_PATH + "\" verify-all --seed 42";
  const Captured first = capture(command);
  const Captured second = capture(command);
  o.expect(first.status == 0 && second.status == 0, "verify-all exit code != 0");
  o.expect(!first.out.empty() && first.out == second.out, "reports differ between runs");
  o.samples = 2;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"E_a abelianness", criterion1},
      {"E_a matrix formula", criterion2},
      {"central carriers", criterion3},
      {"normalization", criterion4},
      {"Pythagoras failure witness", criterion5},
      {"quasipoint axioms and trunk lemma", criterion6},
      {"all quasipoints abelian", criterion7},
      {"orbit parametrization", criterion8},
      {"observable functions", criterion9},
      {"germ structure", criterion10},
      {"transport laws", criterion11},
      {"CLI determinism", criterion12},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += o.pass ? 0 : 1;
    std::printf("criterion %2zu: %s  %-36s samples=%-5zu max_residual=%.3g%s%s\n", i + 1, o.pass ? "PASS" : "FAIL",
                criteria[i].first, o.samples, o.residual, o.note.empty() ? "" : "  ", o.note.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
