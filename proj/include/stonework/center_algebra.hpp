#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "stonework/numerics.hpp"

namespace stonework {

/// The finite Stone space Ω = {ω₀, …, ω_{m−1}} underlying the center C(Ω).
class StoneSpace {
 public:
  explicit StoneSpace(std::size_t m);

  std::size_t size() const noexcept { return m_; }

  friend bool operator==(const StoneSpace&, const StoneSpace&) = default;

 private:
  std::size_t m_;
};

/// Subset of Ω, stored as one flag per point.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t m) : bits_(m, false) {}
  PointSet(std::size_t m, std::initializer_list<std::size_t> points);

  static PointSet all(std::size_t m);
  /// Subset whose members are the set bits of `mask`; requires m <= 64.
  static PointSet from_mask(std::size_t m, std::uint64_t mask);

  std::size_t space_size() const noexcept { return bits_.size(); }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  bool contains(std::size_t omega) const;
  void insert(std::size_t omega);
  void erase(std::size_t omega);
  std::vector<std::size_t> points() const;

  PointSet complement() const;
  PointSet operator|(const PointSet& rhs) const;
  PointSet operator&(const PointSet& rhs) const;
  bool is_subset_of(const PointSet& rhs) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<bool> bits_;
};

/// An element of the abelian algebra C(Ω): one complex value per point.
class CenterElement {
 public:
  CenterElement() = default;
  explicit CenterElement(std::vector<Complex> values);

  static CenterElement constant(std::size_t m, Complex value);
  static CenterElement unit(std::size_t m) { return constant(m, 1.0); }
  static CenterElement zero(std::size_t m) { return constant(m, 0.0); }

  std::size_t space_size() const noexcept { return values_.size(); }
  const std::vector<Complex>& values() const noexcept { return values_; }
  Complex operator[](std::size_t omega) const { return values_.at(omega); }

  /// Exact test: every value is 0.0 or 1.0.
  bool is_projection() const;
  /// Rounds values within eps of 0 or 1 to exactly 0 or 1; throws
  /// NotProjection otherwise.
  CenterElement snapped_projection(Tolerance tol = {}) const;
  /// Points where the value is nonzero (exact).
  PointSet nonzero_points() const;
  /// Points where the value is exactly 1 (for projections: its support).
  PointSet ones() const;

  CenterElement conj() const;
  double sup_norm() const;

  CenterElement& operator+=(const CenterElement& rhs);
  CenterElement& operator-=(const CenterElement& rhs);
  CenterElement& operator*=(const CenterElement& rhs);
  CenterElement& operator*=(Complex s);

  friend CenterElement operator+(CenterElement a, const CenterElement& b) { return a += b; }
  friend CenterElement operator-(CenterElement a, const CenterElement& b) { return a -= b; }
  friend CenterElement operator*(CenterElement a, const CenterElement& b) { return a *= b; }
  friend CenterElement operator*(CenterElement a, Complex s) { return a *= s; }
  friend CenterElement operator*(Complex s, CenterElement a) { return a *= s; }

  friend bool operator==(const CenterElement&, const CenterElement&) = default;

 private:
  std::vector<Complex> values_;
};

/// Pointwise max / min of two projections (the lattice operations of P(C(Ω))).
CenterElement center_join(const CenterElement& p, const CenterElement& q);
CenterElement center_meet(const CenterElement& p, const CenterElement& q);

/// A point of Ω viewed as a quasipoint of the projection lattice of C(Ω).
struct CenterQuasipoint {
  std::size_t omega = 0;

  friend bool operator==(const CenterQuasipoint&, const CenterQuasipoint&) = default;
};

CenterElement char_fn(const PointSet& s);

std::vector<CenterQuasipoint> center_quasipoints(const StoneSpace& space);

/// The projections of C(Ω) contained in the quasipoint β, as subsets of Ω
/// (the principal ultrafilter {S : ω_β ∈ S}). Requires m <= 20.
std::vector<PointSet> center_filter(const StoneSpace& space, CenterQuasipoint beta);

Complex gelfand_eval(const CenterElement& alpha, CenterQuasipoint beta);

/// p ∈ β for a projection p; throws NotProjection unless p is exactly {0,1}-valued.
bool center_membership(const CenterElement& p, CenterQuasipoint beta);

}  // namespace stonework
