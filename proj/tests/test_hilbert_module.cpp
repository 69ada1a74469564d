#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "stonework/hilbert_module.hpp"
#include "stonework/random.hpp"

using namespace stonework;

namespace {

ModuleElement fibers(std::vector<ComplexVector> f) { return ModuleElement::from_fibers(std::move(f)); }

}  // namespace

TEST_CASE("inner product examples and laws") {
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t k = 0; k < 3; ++k) {
      const CenterElement expected = j == k ? CenterElement::unit(2) : CenterElement::zero(2);
      CHECK(inner(ModuleElement::basis(3, 2, j), ModuleElement::basis(3, 2, k)) == expected);
    }
  }
  const ModuleElement a = fibers({{1.0, 0.0}, {0.0, 1.0}});
  const ModuleElement b = fibers({{2.0, 0.0}, {0.0, 3.0}});
  CHECK(inner(a, b) == CenterElement({2.0, 3.0}));
  CHECK_THROWS_AS(inner(a, ModuleElement(3, 2)), Error);

  SplitMix64 rng(2);
  for (int s = 0; s < 50; ++s) {
    const ModuleElement x = random_module_element(rng, 3, 2), y = random_module_element(rng, 3, 2);
    const CenterElement alpha = random_center(rng, 2);
    CHECK((inner(x, y).conj() - inner(y, x)).sup_norm() <= 1e-12);
    CHECK((inner(x, y * alpha) - inner(x, y) * alpha).sup_norm() <= 1e-12);
  }
}

TEST_CASE("module norm and the partition example") {
  CHECK(module_norm(ModuleElement::basis(3, 2, 1)) == 1.0);
  CHECK(module_norm(ModuleElement::basis(2, 1, 0) * Complex{2.0}) == 2.0);
  for (std::size_t n = 2; n <= 4; ++n) {
    std::vector<CenterElement> parts;
    for (std::size_t k = 0; k < n; ++k) parts.push_back(char_fn(PointSet(n, {k})));
    const ModuleElement a = ModuleElement::from_components(parts);
    CHECK(module_norm(a) == 1.0);
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double nk = module_norm(ModuleElement::basis(n, n, k) * parts[k]);
      total += nk * nk;
    }
    CHECK(total == static_cast<double>(n));
  }
}

TEST_CASE("support") {
  CHECK(support(ModuleElement(2, 3)).empty());
  CHECK(support(ModuleElement::basis(2, 3, 0)) == PointSet::all(3));
  const ModuleElement a = ModuleElement::basis(2, 2, 0) * char_fn(PointSet(2, {0}));
  CHECK(support(a) == PointSet(2, {0}));
}

TEST_CASE("normalize") {
  const ModuleElement e1 = ModuleElement::basis(2, 1, 0);
  CHECK(normalize(e1 * Complex{2.0}) == e1);
  CHECK(normalize(fibers({{3.0, 0.0}, {0.0, 4.0}})) == fibers({{1.0, 0.0}, {0.0, 1.0}}));
  const ModuleElement proj = ModuleElement::basis(2, 2, 1) * char_fn(PointSet(2, {1}));
  CHECK(normalize(proj) == proj);

  SplitMix64 rng(4);
  for (int s = 0; s < 100; ++s) {
    const ModuleElement a = random_module_element(rng, 1 + rng.below(4), 1 + rng.below(4));
    const ModuleElement at = normalize(a);
    CHECK(normalize(at) == at);
    CHECK(inner(at, at).snapped_projection() == char_fn(support(a)));
    CHECK(distance(abelian_projection(at) * a, a) <= 1e-9);
  }
}

TEST_CASE("ket-bra operators") {
  const ModuleElement e1 = ModuleElement::basis(3, 2, 0), e2 = ModuleElement::basis(3, 2, 1);
  const FiberedOperator k11 = ket_bra(e1, e1);
  for (const auto& f : k11.fibers()) CHECK(f == ComplexMatrix::diagonal(std::vector<Complex>{1.0, 0.0, 0.0}));
  CHECK(ket_bra(e1, e2) * e2 == e1);
  CHECK(ket_bra(e1, e2).adjoint() == ket_bra(e2, e1));

  SplitMix64 rng(6);
  for (int s = 0; s < 100; ++s) {
    const std::size_t n = 1 + rng.below(4), m = 1 + rng.below(3);
    const ModuleElement a = random_module_element(rng, n, m), b = random_module_element(rng, n, m);
    const ModuleElement u = random_module_element(rng, n, m), v = random_module_element(rng, n, m);
    const FiberedOperator lhs = ket_bra(b, a) * ket_bra(v, u);
    const FiberedOperator rhs = ket_bra(b * inner(a, v), u);
    CHECK(distance(lhs, rhs) <= 1e-9);
  }
}

TEST_CASE("abelian_projection examples") {
  const FiberedOperator e = abelian_projection(ModuleElement::basis(2, 1, 0));
  CHECK(e.fiber(0) == ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}});

  const ModuleElement a = ModuleElement::from_components({char_fn(PointSet(2, {0})), char_fn(PointSet(2, {1}))});
  const FiberedOperator ea = abelian_projection(a);
  CHECK(ea.fiber(0) == ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}});
  CHECK(ea.fiber(1) == ComplexMatrix{{0.0, 0.0}, {0.0, 1.0}});

  CHECK_THROWS_AS(abelian_projection(ModuleElement::basis(2, 1, 0) * Complex{2.0}), Error);
}

TEST_CASE("E_a is the unique projection onto a𝒜") {
  SplitMix64 rng(8);
  for (int s = 0; s < 200; ++s) {
    const std::size_t n = 1 + rng.below(5), m = 1 + rng.below(4);
    const ModuleElement a = random_normalized(rng, n, m);
    const FiberedOperator e = abelian_projection(a);
    CHECK(distance(e * e, e) <= 1e-9);
    CHECK(distance(e.adjoint(), e) <= 1e-9);
    for (std::size_t w = 0; w < m; ++w) {
      const Eigen::MatrixXcd q = oracle::projector(oracle::span_of(n, {a.fiber(w)}));
      CHECK(oracle::max_abs(oracle::to_eigen(e.fiber(w)) - q) <= 1e-9);
    }
  }
}

TEST_CASE("ket_bra(a, a) is a projection only when (a|a) is") {
  SplitMix64 rng(10);
  for (int s = 0; s < 50; ++s) {
    const std::size_t n = 1 + rng.below(4), m = 1 + rng.below(3);
    ModuleElement a = random_normalized(rng, n, m, 0.0);
    a.fiber(rng.below(m)) = scaled(a.fiber(0), 1.5);
    CHECK_FALSE(is_projection(ket_bra(a, a)));
    CHECK_THROWS_AS(abelian_projection(a), Error);
  }
}

TEST_CASE("decompose") {
  const ModuleElement e1 = ModuleElement::basis(2, 1, 0), e2 = ModuleElement::basis(2, 1, 1);
  const Decomposition d = decompose(e1 + e2, e1);
  CHECK(d.alpha == CenterElement::unit(1));
  CHECK(d.aperp == e2);

  const Decomposition self = decompose(e1 * Complex{3.0}, e1 * Complex{3.0});
  CHECK(distance(self.aperp, ModuleElement(2, 1)) <= 1e-12);
  const Decomposition orth = decompose(e2, e1);
  CHECK(orth.aperp == e2);

  SplitMix64 rng(12);
  for (int s = 0; s < 100; ++s) {
    const std::size_t n = 1 + rng.below(4), m = 1 + rng.below(4);
    const ModuleElement a = random_module_element(rng, n, m), b = random_module_element(rng, n, m);
    const Decomposition r = decompose(b, a);
    CHECK(distance(a * r.alpha + r.aperp, b) <= 1e-9);
    CHECK(inner(a, r.aperp).sup_norm() <= 1e-9);
  }
}

TEST_CASE("support witness and annihilator") {
  const Submodule one{{ModuleElement::basis(2, 2, 0)}};
  CHECK(support(support_witness(one)) == PointSet::all(2));

  const Submodule two{{ModuleElement::basis(2, 2, 0) * char_fn(PointSet(2, {0})),
                       ModuleElement::basis(2, 2, 1) * char_fn(PointSet(2, {1}))}};
  const ModuleElement w = support_witness(two);
  CHECK(support(w) == PointSet::all(2));
  CHECK(inner(w, w).snapped_projection() == CenterElement::unit(2));

  const ModuleElement u = ModuleElement::from_fibers({{3.0, 4.0}, {0.0, 0.0}});
  CHECK(distance(support_witness(Submodule{{u}}), normalize(u)) <= 1e-15);

  CHECK_THROWS_AS(support_witness(Submodule{{ModuleElement(2, 2)}}), Error);
  CHECK_THROWS_AS(support_witness(Submodule{}), Error);

  CHECK(annihilator(one) == CenterElement::zero(2));
  CHECK(annihilator(Submodule{{ModuleElement(2, 3)}}) == CenterElement::unit(3));
  const ModuleElement at0 = ModuleElement::basis(1, 3, 0) * char_fn(PointSet(3, {0}));
  CHECK(annihilator(Submodule{{at0}}) == char_fn(PointSet(3, {1, 2})));

  SplitMix64 rng(14);
  for (int s = 0; s < 100; ++s) {
    const std::size_t n = 1 + rng.below(4), m = 1 + rng.below(4);
    Submodule sub = random_submodule(rng, n, m, 1 + rng.below(4));
    if (support(sub).empty()) continue;
    const ModuleElement x = support_witness(sub);
    CHECK(support(x) == support(sub));
    CHECK(distance(submodule_projection(sub) * x, x) <= 1e-9);
  }
}

TEST_CASE("submodule intersection matches a subspace oracle") {
  SplitMix64 rng(16);
  for (int s = 0; s < 100; ++s) {
    const std::size_t n = 2 + rng.below(3), m = 1 + rng.below(3);
    const Submodule a = random_submodule(rng, n, m, 1 + rng.below(n));
    const Submodule b = random_submodule(rng, n, m, 1 + rng.below(n));
    const FiberedOperator p = submodule_projection(submodule_intersection(a, b));
    for (std::size_t w = 0; w < m; ++w) {
      std::vector<ComplexVector> av, bv;
      for (const auto& g : a.generators) av.push_back(g.fiber(w));
      for (const auto& g : b.generators) bv.push_back(g.fiber(w));
      const Eigen::MatrixXcd expected = oracle::projector(oracle::intersection(oracle::span_of(n, av), oracle::span_of(n, bv)));
      CHECK(oracle::max_abs(oracle::to_eigen(p.fiber(w)) - expected) <= 1e-8);
    }
  }
}
