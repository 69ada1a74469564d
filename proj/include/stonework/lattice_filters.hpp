#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "stonework/fibered_operator.hpp"
#include "stonework/numerics.hpp"

namespace stonework {

/// A finite family of projections of Mₙ(𝒜) closed under ∧ and ∨ and
/// containing 0 and 1, with its order, meet and join tables precomputed.
/// Elements are addressed by index; index 0 is 0 and index 1 is 1.
class FiniteLattice {
 public:
  std::size_t size() const noexcept { return elements_.size(); }
  const FiberedOperator& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<FiberedOperator>& elements() const noexcept { return elements_; }

  std::size_t bottom() const noexcept { return 0; }
  std::size_t top() const noexcept { return 1; }

  bool leq(std::size_t i, std::size_t j) const { return leq_.at(i * size() + j); }
  std::size_t meet(std::size_t i, std::size_t j) const { return meet_.at(i * size() + j); }
  std::size_t join(std::size_t i, std::size_t j) const { return join_.at(i * size() + j); }

  /// Index of the element within the dedup tolerance of p, if any.
  std::optional<std::size_t> find(const FiberedOperator& p) const;

  /// Minimal nonzero elements, in index order.
  std::vector<std::size_t> atoms() const;
  std::vector<std::size_t> up_set(std::size_t i) const;

  friend FiniteLattice meet_closure(const std::vector<FiberedOperator>& generators,
                                    std::size_t cap, Tolerance tol);

 private:
  std::vector<FiberedOperator> elements_;
  std::vector<bool> leq_;
  std::vector<std::size_t> meet_;
  std::vector<std::size_t> join_;
  double dedup_ = Tolerance::kDefault;
};

/// A subset of a FiniteLattice, as sorted element indices.
struct Filter {
  std::vector<std::size_t> members;

  bool contains(std::size_t i) const;
  friend bool operator==(const Filter&, const Filter&) = default;
};

inline constexpr std::size_t kDefaultClosureCap = 4096;

/// Smallest family containing the generators, 0 and 1 that is closed under
/// ∧ and ∨. Throws ClosureExplosion once it would exceed `cap` elements.
FiniteLattice meet_closure(const std::vector<FiberedOperator>& generators,
                           std::size_t cap = kDefaultClosureCap, Tolerance tol = {});

/// (i) 0 ∉ B and (ii) any two members have a common lower bound in B.
bool is_filter_base(const FiniteLattice& lattice, const std::vector<std::size_t>& members);

/// (i), (ii) and maximality: adding any non-member breaks (i) or (ii).
/// Checked exhaustively against every element of the lattice.
bool satisfies_quasipoint_axioms(const FiniteLattice& lattice, const Filter& b);

/// The quasipoints of a finite lattice: the up-sets of its atoms, in atom order.
std::vector<Filter> enumerate_quasipoints(const FiniteLattice& lattice);

/// The E-trunk {F ∈ B | F ≤ E}; throws NotMember if E ∉ B.
Filter trunk(const FiniteLattice& lattice, const Filter& b, std::size_t e);

/// The unique quasipoint containing the given trunk. Throws Ambiguous when
/// several atoms lie below the trunk and NotFilterBase when none does.
Filter extend_trunk(const FiniteLattice& lattice, const Filter& trunk_members);

/// Indices into enumerate_quasipoints(lattice) of the quasipoints containing a.
std::vector<std::size_t> stone_base_set(const FiniteLattice& lattice, std::size_t a);

/// Indices of quasipoints B for which some base set equals {B}.
std::vector<std::size_t> isolated_points(const FiniteLattice& lattice);

}  // namespace stonework
