#include "stonework/lattice_filters.hpp"

#include <algorithm>
#include <string>

namespace stonework {

std::optional<std::size_t> FiniteLattice::find(const FiberedOperator& p) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (distance(elements_[i], p) <= dedup_) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> FiniteLattice::atoms() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i == bottom()) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < size() && minimal; ++j) {
      if (j != i && j != bottom() && leq(j, i)) minimal = false;
    }
    if (minimal) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FiniteLattice::up_set(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < size(); ++j) {
    if (leq(i, j)) out.push_back(j);
  }
  return out;
}

bool Filter::contains(std::size_t i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

FiniteLattice meet_closure(const std::vector<FiberedOperator>& generators, std::size_t cap,
                           Tolerance tol) {
  if (generators.empty()) throw Error(ErrorCode::OutOfRange, "meet_closure needs a generator");
  const std::size_t n = generators.front().rank();
  const std::size_t m = generators.front().space_size();
  for (const auto& g : generators) {
    if (g.rank() != n || g.space_size() != m) {
      throw Error(ErrorCode::DimensionMismatch, "generators of different shape");
    }
    if (!is_projection(g, tol)) throw Error(ErrorCode::NotProjection, "meet_closure generator");
  }

  FiniteLattice lattice;
  lattice.dedup_ = tol.eps();
  auto& elems = lattice.elements_;
  auto insert = [&](const FiberedOperator& p) -> std::size_t {
    if (auto found = lattice.find(p)) return *found;
    if (elems.size() >= cap) {
      throw Error(ErrorCode::ClosureExplosion, "closure exceeds " + std::to_string(cap) + " elements");
    }
    elems.push_back(p);
    return elems.size() - 1;
  };

  insert(FiberedOperator(n, m));
  insert(FiberedOperator::identity(n, m));
  if (elems.size() != 2) throw Error(ErrorCode::OutOfRange, "degenerate lattice");
  for (const auto& g : generators) insert(g);

  // Every pair (i, j) with j <= i is combined exactly once; new elements are
  // appended and picked up by later iterations.
  std::vector<std::vector<std::size_t>> meets;
  std::vector<std::vector<std::size_t>> joins;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    meets.emplace_back();
    joins.emplace_back();
    for (std::size_t j = 0; j <= i; ++j) {
      const FiberedOperator a = elems[i];
      const FiberedOperator b = elems[j];
      const std::size_t mi = insert(proj_meet(a, b, tol));
      const std::size_t ji = insert(proj_join(a, b, tol));
      meets[i].push_back(mi);
      joins[i].push_back(ji);
    }
  }

  const std::size_t size = elems.size();
  lattice.meet_.assign(size * size, 0);
  lattice.join_.assign(size * size, 0);
  lattice.leq_.assign(size * size, false);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      lattice.meet_[i * size + j] = lattice.meet_[j * size + i] = meets[i][j];
      lattice.join_[i * size + j] = lattice.join_[j * size + i] = joins[i][j];
    }
  }
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      lattice.leq_[i * size + j] = proj_leq(elems[i], elems[j], tol);
    }
  }
  return lattice;
}

bool is_filter_base(const FiniteLattice& lattice, const std::vector<std::size_t>& members) {
  if (members.empty()) return false;
  for (auto a : members) {
    if (a == lattice.bottom()) return false;
  }
  for (auto a : members) {
    for (auto b : members) {
      const std::size_t ab = lattice.meet(a, b);
      const bool bounded = std::any_of(members.begin(), members.end(),
                                       [&](std::size_t c) { return lattice.leq(c, ab); });
      if (!bounded) return false;
    }
  }
  return true;
}

bool satisfies_quasipoint_axioms(const FiniteLattice& lattice, const Filter& b) {
  if (!is_filter_base(lattice, b.members)) return false;
  for (std::size_t x = 0; x < lattice.size(); ++x) {
    if (b.contains(x)) continue;
    if (x == lattice.bottom()) continue;  // violates (i)
    // B itself satisfies (ii), so only pairs involving x can fail.
    bool violated = false;
    std::vector<std::size_t> extended = b.members;
    extended.push_back(x);
    for (auto a : extended) {
      const std::size_t ax = lattice.meet(a, x);
      const bool bounded = std::any_of(extended.begin(), extended.end(),
                                       [&](std::size_t c) { return lattice.leq(c, ax); });
      if (!bounded) {
        violated = true;
        break;
      }
    }
    if (!violated) return false;
  }
  return true;
}

std::vector<Filter> enumerate_quasipoints(const FiniteLattice& lattice) {
  std::vector<Filter> out;
  for (auto t : lattice.atoms()) out.push_back(Filter{lattice.up_set(t)});
  return out;
}

Filter trunk(const FiniteLattice& lattice, const Filter& b, std::size_t e) {
  if (!b.contains(e)) throw Error(ErrorCode::NotMember, "E is not a member of the quasipoint");
  Filter out;
  for (auto f : b.members) {
    if (lattice.leq(f, e)) out.members.push_back(f);
  }
  return out;
}

Filter extend_trunk(const FiniteLattice& lattice, const Filter& trunk_members) {
  if (trunk_members.members.empty()) throw Error(ErrorCode::EmptyFilter, "empty trunk");
  std::size_t lower = lattice.top();
  for (auto f : trunk_members.members) lower = lattice.meet(lower, f);
  std::vector<std::size_t> below;
  for (auto t : lattice.atoms()) {
    if (lattice.leq(t, lower)) below.push_back(t);
  }
  if (below.empty()) throw Error(ErrorCode::NotFilterBase, "no atom lies below the trunk");
  if (below.size() > 1) {
    throw Error(ErrorCode::Ambiguous,
                std::to_string(below.size()) + " quasipoints contain the trunk");
  }
  return Filter{lattice.up_set(below.front())};
}

std::vector<std::size_t> stone_base_set(const FiniteLattice& lattice, std::size_t a) {
  if (a >= lattice.size()) throw Error(ErrorCode::OutOfRange, "lattice element index");
  const auto quasipoints = enumerate_quasipoints(lattice);
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < quasipoints.size(); ++q) {
    if (quasipoints[q].contains(a)) out.push_back(q);
  }
  return out;
}

std::vector<std::size_t> isolated_points(const FiniteLattice& lattice) {
  const std::size_t count = enumerate_quasipoints(lattice).size();
  std::vector<bool> isolated(count, false);
  for (std::size_t a = 0; a < lattice.size(); ++a) {
    const auto base = stone_base_set(lattice, a);
    if (base.size() == 1) isolated[base.front()] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < count; ++q) {
    if (isolated[q]) out.push_back(q);
  }
  return out;
}

}  // namespace stonework
