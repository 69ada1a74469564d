#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "stonework/center_algebra.hpp"
#include "stonework/numerics.hpp"

namespace stonework {

/// An element a = (a₁ ⊕ … ⊕ aₙ) of the Hilbert module 𝒜ⁿ over 𝒜 = C(Ω).
///
/// Stored fiber-major: `fiber(ω)` is the vector a(ω) ∈ ℂⁿ. Components aₖ are
/// reassembled on demand as center elements.
class ModuleElement {
 public:
  ModuleElement() = default;
  /// Zero element of 𝒜ⁿ over a space with m points.
  ModuleElement(std::size_t n, std::size_t m);
  static ModuleElement from_fibers(std::vector<ComplexVector> fibers);
  static ModuleElement from_components(const std::vector<CenterElement>& components);
  /// The canonical basis element eₖ (0-based k).
  static ModuleElement basis(std::size_t n, std::size_t m, std::size_t k);
  /// The element equal to x at every fiber.
  static ModuleElement constant(std::size_t m, std::span<const Complex> x);

  std::size_t rank() const noexcept { return n_; }
  std::size_t space_size() const noexcept { return fibers_.size(); }

  const ComplexVector& fiber(std::size_t omega) const { return fibers_.at(omega); }
  ComplexVector& fiber(std::size_t omega) { return fibers_.at(omega); }
  const std::vector<ComplexVector>& fibers() const noexcept { return fibers_; }

  CenterElement component(std::size_t k) const;
  std::vector<CenterElement> components() const;

  /// a·α, the right module action.
  ModuleElement times(const CenterElement& alpha) const;
  double max_abs() const;

  ModuleElement& operator+=(const ModuleElement& rhs);
  ModuleElement& operator-=(const ModuleElement& rhs);
  ModuleElement& operator*=(Complex s);

  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
  friend ModuleElement operator*(ModuleElement a, Complex s) { return a *= s; }
  friend ModuleElement operator*(const ModuleElement& a, const CenterElement& alpha) {
    return a.times(alpha);
  }

  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<ComplexVector> fibers_;
};

double distance(const ModuleElement& a, const ModuleElement& b);

/// A finitely generated submodule M = u₁𝒜 + … + u_r𝒜.
struct Submodule {
  std::vector<ModuleElement> generators;

  std::size_t rank() const;
  std::size_t space_size() const;
};

}  // namespace stonework
