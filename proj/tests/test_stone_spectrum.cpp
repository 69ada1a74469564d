#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "stonework/hilbert_module.hpp"
#include "stonework/matrix_algebra.hpp"
#include "stonework/random.hpp"
#include "stonework/stone_spectrum.hpp"

using namespace stonework;

namespace {

FiberedOperator at_fiber(std::size_t m, std::size_t omega, const ComplexMatrix& f) {
  FiberedOperator p(f.rows(), m);
  p.fiber(omega) = f;
  return p;
}

const ComplexMatrix kE1{{1.0, 0.0}, {0.0, 0.0}};
const ComplexMatrix kE2{{0.0, 0.0}, {0.0, 1.0}};

}  // namespace

TEST_CASE("quasipoint construction") {
  const Quasipoint b = make_quasipoint(1, ComplexVector{Complex{0.0, 2.0}, 0.0});
  CHECK(b.omega.omega == 1);
  CHECK(b.line == ComplexVector{1.0, 0.0});
  CHECK_THROWS_AS(make_quasipoint(0, ComplexVector{0.0, 0.0}), Error);
  CHECK(same_line(ComplexVector{1.0, 0.0}, ComplexVector{Complex{0.0, 1.0}, 0.0}));
  CHECK_FALSE(same_quasipoint(make_quasipoint(0, ComplexVector{1.0, 0.0}), make_quasipoint(1, ComplexVector{1.0, 0.0})));
}

TEST_CASE("qp_contains examples") {
  SplitMix64 rng(1);
  for (int s = 0; s < 20; ++s) {
    const Quasipoint b = random_quasipoint(rng, 3, 2);
    CHECK(qp_contains(b, FiberedOperator::identity(3, 2)));
    CHECK_FALSE(qp_contains(b, FiberedOperator(3, 2)));
  }
  const Quasipoint b = make_quasipoint(0, unit_vector(2, 0));
  CHECK(qp_contains(b, at_fiber(2, 0, kE1)));
  CHECK_FALSE(qp_contains(b, at_fiber(2, 0, kE2)));
  CHECK_THROWS_AS(qp_contains(b, FiberedOperator::identity(2, 2) * Complex{2.0}), Error);
}

TEST_CASE("maximality witness") {
  const Quasipoint b = make_quasipoint(0, unit_vector(2, 0));
  const FiberedOperator zero(2, 2);
  const FiberedOperator q0 = maximality_witness(b, zero);
  CHECK(qp_contains(b, q0));
  CHECK(proj_meet(zero, q0).max_abs() == 0.0);

  const FiberedOperator p = FiberedOperator::constant(2, kE2);
  const FiberedOperator q = maximality_witness(b, p);
  CHECK(q == at_fiber(2, 0, kE1));
  CHECK(proj_meet(p, q).fiber(0).max_abs() <= 1e-12);
  CHECK(central_carrier(q) == char_fn(PointSet(2, {0})));
  CHECK_THROWS_AS(maximality_witness(b, FiberedOperator::identity(2, 2)), Error);

  SplitMix64 rng(3);
  for (int s = 0; s < 200; ++s) {
    const std::size_t n = 1 + rng.below(4), m = 1 + rng.below(3);
    const Quasipoint r = random_quasipoint(rng, n, m);
    const FiberedOperator pr = random_projection_operator(rng, n, m);
    if (qp_contains(r, pr)) continue;
    const FiberedOperator w = maximality_witness(r, pr);
    CHECK(qp_contains(r, w));
    CHECK(oracle::rank(proj_meet(pr, w).fiber(r.omega.omega)) == 0);
  }
}

TEST_CASE("zeta") {
  CHECK(zeta(make_quasipoint(0, unit_vector(3, 2))).omega == 0);
  const Quasipoint b = make_quasipoint(1, unit_vector(2, 0));
  CHECK(zeta(b).omega == 1);
  CHECK(qp_contains(b, FiberedOperator::central(2, char_fn(PointSet(3, {1})))));
  for (std::size_t w = 0; w < 4; ++w) CHECK(zeta(make_quasipoint(w, unit_vector(2, 0))).omega == w);

  SplitMix64 rng(5);
  for (int s = 0; s < 100; ++s) {
    const Quasipoint r = random_quasipoint(rng, 3, 4);
    const CenterElement p = char_fn(PointSet::from_mask(4, rng.next()));
    CHECK(qp_contains(r, FiberedOperator::central(3, p)) == (p[r.omega.omega] == 1.0));
  }
}

TEST_CASE("unitary action") {
  const Quasipoint b = make_quasipoint(0, unit_vector(2, 0));
  CHECK(same_quasipoint(unitary_act(FiberedOperator::identity(2, 2), b), b));
  const FiberedOperator swap = FiberedOperator::constant(2, ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}});
  CHECK(same_quasipoint(unitary_act(swap, b), make_quasipoint(0, unit_vector(2, 1))));
  CHECK_THROWS_AS(unitary_act(FiberedOperator::identity(2, 2) * Complex{2.0}, b), Error);

  SplitMix64 rng(7);
  for (int s = 0; s < 100; ++s) {
    const std::size_t n = 1 + rng.below(4), m = 1 + rng.below(3);
    const Quasipoint r = random_quasipoint(rng, n, m);
    const FiberedOperator u = random_unitary_operator(rng, n, m), v = random_unitary_operator(rng, n, m);
    CHECK(same_quasipoint(unitary_act(u * v, r), unitary_act(u, unitary_act(v, r))));
    const FiberedOperator member = proj_join(atomic_projection(r, m), random_projection_operator(rng, n, m));
    const FiberedOperator other = random_projection_operator(rng, n, m);
    const Quasipoint moved = unitary_act(u, r);
    CHECK(qp_contains(moved, u * member * u.adjoint()));
    CHECK(qp_contains(r, other) == qp_contains(moved, u * other * u.adjoint()));
  }
}

TEST_CASE("partial isometry action") {
  const Quasipoint b = make_quasipoint(0, unit_vector(2, 0));
  CHECK(same_quasipoint(partial_isometry_act(FiberedOperator::identity(2, 1), b), b));
  const ModuleElement e1 = ModuleElement::basis(2, 1, 0), e2 = ModuleElement::basis(2, 1, 1);
  CHECK(same_quasipoint(partial_isometry_act(ket_bra(e2, e1), b), make_quasipoint(0, unit_vector(2, 1))));
  try {
    partial_isometry_act(ket_bra(e1, e2), b);
    FAIL("expected NotSubordinate");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSubordinate);
  }
  CHECK_THROWS_AS(partial_isometry_act(ket_bra(e1, e2) * Complex{3.0}, b), Error);

  SplitMix64 rng(9);
  for (int s = 0; s < 100; ++s) {
    const std::size_t n = 1 + rng.below(4), m = 1 + rng.below(3);
    const Quasipoint r = random_quasipoint(rng, n, m);
    const FiberedOperator u = random_unitary_operator(rng, n, m);
    CHECK(same_quasipoint(partial_isometry_act(u, r), unitary_act(u, r)));

    // θ with initial projection E ∈ B: θ(B_E) is the θEθ*-trunk of θ.B.
    const FiberedOperator init = proj_join(atomic_projection(r, m), random_projection_operator(rng, n, m));
    const FiberedOperator theta = u * init;
    const Quasipoint image = partial_isometry_act(theta, r);
    const FiberedOperator final_proj = theta * theta.adjoint();
    CHECK(qp_contains(image, final_proj));
    for (int t = 0; t < 5; ++t) {
      FiberedOperator g = random_projection_operator(rng, n, m);
      if (t % 2 == 1) g = proj_join(atomic_projection(r, m), g);
      const FiberedOperator f = proj_meet(init, g);
      CHECK(qp_contains(r, f) == qp_contains(image, transport(theta, f)));
      CHECK(proj_leq(transport(theta, f), final_proj));
    }
  }
}

TEST_CASE("orbit witness") {
  const Quasipoint b = make_quasipoint(0, unit_vector(2, 0));
  CHECK(distance(*orbit_witness(b, b, 2), FiberedOperator::identity(2, 2)) <= 1e-15);
  const auto u = orbit_witness(b, make_quasipoint(0, unit_vector(2, 1)), 2);
  REQUIRE(u.has_value());
  CHECK(distance(u->fiber(0), ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}) <= 1e-15);
  CHECK(u->fiber(1) == ComplexMatrix::identity(2));
  CHECK_FALSE(orbit_witness(b, make_quasipoint(1, unit_vector(2, 0)), 2).has_value());

  SplitMix64 rng(11);
  for (int s = 0; s < 300; ++s) {
    const std::size_t n = 1 + rng.below(5), m = 1 + rng.below(3);
    const Quasipoint x = random_quasipoint(rng, n, m), y = random_quasipoint(rng, n, m);
    const auto w = orbit_witness(x, y, m);
    CHECK(w.has_value() == (x.omega == y.omega));
    if (!w) continue;
    CHECK(is_unitary(*w));
    const ComplexVector image = w->fiber(x.omega.omega).apply(x.line);
    CHECK(std::abs(std::abs(dot(image, y.line)) - 1.0) <= 1e-12);
    for (std::size_t o = 0; o < m; ++o) {
      if (o != x.omega.omega) CHECK(w->fiber(o) == ComplexMatrix::identity(n));
    }
  }
}

TEST_CASE("germs") {
  const CenterQuasipoint beta{0};
  for (std::size_t k = 0; k < 3; ++k) CHECK(germ_eval(ModuleElement::basis(3, 2, k), beta).value == unit_vector(3, k));
  const ModuleElement a = ModuleElement::basis(2, 2, 0) * char_fn(PointSet(2, {1}));
  CHECK(germ_eval(a, beta).value == ComplexVector(2));
  const CenterElement alpha({1.0, 5.0});
  const CenterElement inv = germ_inverse(alpha, beta);
  CHECK(germ_eval(inv, beta) == Complex{1.0});
  CHECK(germ_eval(alpha * inv, CenterQuasipoint{1}) == Complex{1.0});
  CHECK_THROWS_AS(germ_inverse(char_fn(PointSet(2, {1})), beta), Error);
}

TEST_CASE("germ submodules") {
  const std::size_t n = 3, m = 2;
  Submodule all;
  for (std::size_t k = 0; k < n; ++k) all.generators.push_back(ModuleElement::basis(n, m, k));
  CHECK(distance(germ_submodule(all, {1}), ComplexMatrix::identity(n)) <= 1e-12);

  SplitMix64 rng(13);
  const ModuleElement u = random_module_element(rng, n, m, 0.0);
  const ComplexMatrix single = germ_submodule(Submodule{{u}}, {0});
  const Eigen::MatrixXcd expected = oracle::projector(oracle::span_of(n, {u.fiber(0)}));
  CHECK(oracle::max_abs(oracle::to_eigen(single) - expected) <= 1e-12);

  for (int s = 0; s < 100; ++s) {
    const Submodule x = random_submodule(rng, n, m, 1 + rng.below(n));
    const Submodule y = random_submodule(rng, n, m, 1 + rng.below(n));
    const CenterQuasipoint b{rng.below(m)};
    std::vector<ComplexVector> xv, yv;
    for (const auto& g : x.generators) xv.push_back(g.fiber(b.omega));
    for (const auto& g : y.generators) yv.push_back(g.fiber(b.omega));
    const Eigen::MatrixXcd oracle_meet = oracle::projector(oracle::intersection(oracle::span_of(n, xv), oracle::span_of(n, yv)));
    const ComplexMatrix ours = germ_submodule(submodule_intersection(x, y), b);
    CHECK(oracle::max_abs(oracle::to_eigen(ours) - oracle_meet) <= 1e-8);
  }
}

TEST_CASE("extending filters to quasipoints") {
  const std::size_t n = 2, m = 2;
  const FiniteLattice trivial = meet_closure({FiberedOperator::identity(n, m)});
  const Quasipoint any = extend_filter_to_quasipoint(trivial, Filter{{trivial.top()}});
  CHECK(qp_contains(any, FiberedOperator::identity(n, m)));
  CHECK(any.omega.omega == 0);
  CHECK(any.rank() == n);

  const FiberedOperator p = at_fiber(m, 0, kE1);
  const FiniteLattice l = meet_closure({p});
  const Quasipoint b = extend_filter_to_quasipoint(l, Filter{l.up_set(*l.find(p))});
  CHECK(same_quasipoint(b, make_quasipoint(0, unit_vector(2, 0))));
  CHECK_THROWS_AS(extend_filter_to_quasipoint(l, Filter{}), Error);

  SplitMix64 rng(15);
  for (int s = 0; s < 30; ++s) {
    std::vector<FiberedOperator> gens;
    for (int g = 0; g < 6; ++g) gens.push_back(random_lattice_generators(rng, 3, 2, 1).front());
    FiniteLattice lat = meet_closure({FiberedOperator::identity(3, 2)});
    try {
      lat = meet_closure(gens, 256);
    } catch (const Error&) {
      continue;
    }
    for (const auto& f : enumerate_quasipoints(lat)) {
      const Quasipoint q = extend_filter_to_quasipoint(lat, f);
      for (auto i : f.members) CHECK(qp_contains(q, lat.element(i)));
      CHECK(is_abelian_projection(atomic_projection(q, 2)));
    }
  }
}

TEST_CASE("common central reduction") {
  const std::size_t n = 2, m = 3;
  SplitMix64 rng(17);
  const ModuleElement a = random_normalized(rng, n, m, 0.0);
  const FiberedOperator ea = abelian_projection(a);
  const Quasipoint b = make_quasipoint(0, a.fiber(0));
  CHECK(common_central_reduction(ea, ea, b) == CenterElement::unit(m));

  ModuleElement other = random_normalized(rng, n, m, 0.0);
  other.fiber(0) = scaled(a.fiber(0), std::polar(1.0, 0.7));
  CHECK(common_central_reduction(ea, abelian_projection(other), b) == char_fn(PointSet(m, {0})));

  other.fiber(2) = a.fiber(2);
  CHECK(common_central_reduction(ea, abelian_projection(other), b) == char_fn(PointSet(m, {0, 2})));

  CHECK_THROWS_AS(common_central_reduction(FiberedOperator::identity(n, m), ea, b), Error);
  const Quasipoint elsewhere = make_quasipoint(0, ComplexVector{-std::conj(a.fiber(0)[1]), std::conj(a.fiber(0)[0])});
  try {
    common_central_reduction(ea, ea, elsewhere);
    FAIL("expected NotMember");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotMember);
  }
}
