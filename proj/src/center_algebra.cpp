#include "stonework/center_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace stonework {

StoneSpace::StoneSpace(std::size_t m) : m_(m) {
  if (m == 0) throw Error(ErrorCode::OutOfRange, "Stone space needs at least one point");
}

PointSet::PointSet(std::size_t m, std::initializer_list<std::size_t> points) : bits_(m, false) {
  for (auto p : points) insert(p);
}

PointSet PointSet::all(std::size_t m) {
  PointSet s(m);
  s.bits_.assign(m, true);
  return s;
}

PointSet PointSet::from_mask(std::size_t m, std::uint64_t mask) {
  if (m > 64) throw Error(ErrorCode::OutOfRange, "mask construction needs m <= 64");
  PointSet s(m);
  for (std::size_t i = 0; i < m; ++i) s.bits_[i] = ((mask >> i) & 1U) != 0;
  return s;
}

std::size_t PointSet::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

bool PointSet::contains(std::size_t omega) const {
  if (omega >= bits_.size()) throw Error(ErrorCode::OutOfRange, "point index");
  return bits_[omega];
}

void PointSet::insert(std::size_t omega) {
  if (omega >= bits_.size()) throw Error(ErrorCode::OutOfRange, "point index");
  bits_[omega] = true;
}

void PointSet::erase(std::size_t omega) {
  if (omega >= bits_.size()) throw Error(ErrorCode::OutOfRange, "point index");
  bits_[omega] = false;
}

std::vector<std::size_t> PointSet::points() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(i);
  }
  return out;
}

PointSet PointSet::complement() const {
  PointSet s(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) s.bits_[i] = !bits_[i];
  return s;
}

PointSet PointSet::operator|(const PointSet& rhs) const {
  if (rhs.bits_.size() != bits_.size()) throw Error(ErrorCode::DimensionMismatch, "point sets");
  PointSet s(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) s.bits_[i] = bits_[i] || rhs.bits_[i];
  return s;
}

PointSet PointSet::operator&(const PointSet& rhs) const {
  if (rhs.bits_.size() != bits_.size()) throw Error(ErrorCode::DimensionMismatch, "point sets");
  PointSet s(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) s.bits_[i] = bits_[i] && rhs.bits_[i];
  return s;
}

bool PointSet::is_subset_of(const PointSet& rhs) const { return (*this & rhs) == *this; }

// ---------------------------------------------------------------------------

CenterElement::CenterElement(std::vector<Complex> values) : values_(std::move(values)) {
  for (const auto& z : values_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorCode::OutOfRange, "center element values must be finite");
    }
  }
}

CenterElement CenterElement::constant(std::size_t m, Complex value) {
  return CenterElement(std::vector<Complex>(m, value));
}

bool CenterElement::is_projection() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](Complex z) { return z == Complex{0.0} || z == Complex{1.0}; });
}

CenterElement CenterElement::snapped_projection(Tolerance tol) const {
  std::vector<Complex> out(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (std::abs(values_[i]) <= tol.eps()) {
      out[i] = 0.0;
    } else if (std::abs(values_[i] - 1.0) <= tol.eps()) {
      out[i] = 1.0;
    } else {
      throw Error(ErrorCode::NotProjection, "central element is not {0,1}-valued");
    }
  }
  return CenterElement(std::move(out));
}

PointSet CenterElement::nonzero_points() const {
  PointSet s(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] != Complex{0.0}) s.insert(i);
  }
  return s;
}

PointSet CenterElement::ones() const {
  PointSet s(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] == Complex{1.0}) s.insert(i);
  }
  return s;
}

CenterElement CenterElement::conj() const {
  std::vector<Complex> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(), [](Complex z) { return std::conj(z); });
  return CenterElement(std::move(out));
}

double CenterElement::sup_norm() const { return max_abs(values_); }

namespace {

void require_same_space(const CenterElement& a, const CenterElement& b) {
  if (a.space_size() != b.space_size()) {
    throw Error(ErrorCode::DimensionMismatch, "center elements over different spaces");
  }
}

}  // namespace

CenterElement& CenterElement::operator+=(const CenterElement& rhs) {
  require_same_space(*this, rhs);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += rhs.values_[i];
  return *this;
}

CenterElement& CenterElement::operator-=(const CenterElement& rhs) {
  require_same_space(*this, rhs);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= rhs.values_[i];
  return *this;
}

CenterElement& CenterElement::operator*=(const CenterElement& rhs) {
  require_same_space(*this, rhs);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] *= rhs.values_[i];
  return *this;
}

CenterElement& CenterElement::operator*=(Complex s) {
  for (auto& z : values_) z *= s;
  return *this;
}

CenterElement center_join(const CenterElement& p, const CenterElement& q) {
  require_same_space(p, q);
  if (!p.is_projection() || !q.is_projection()) {
    throw Error(ErrorCode::NotProjection, "center_join");
  }
  return char_fn(p.ones() | q.ones());
}

CenterElement center_meet(const CenterElement& p, const CenterElement& q) {
  require_same_space(p, q);
  if (!p.is_projection() || !q.is_projection()) {
    throw Error(ErrorCode::NotProjection, "center_meet");
  }
  return char_fn(p.ones() & q.ones());
}

CenterElement char_fn(const PointSet& s) {
  std::vector<Complex> values(s.space_size(), 0.0);
  for (auto omega : s.points()) values[omega] = 1.0;
  return CenterElement(std::move(values));
}

std::vector<CenterQuasipoint> center_quasipoints(const StoneSpace& space) {
  std::vector<CenterQuasipoint> out;
  out.reserve(space.size());
  for (std::size_t omega = 0; omega < space.size(); ++omega) out.push_back({omega});
  return out;
}

std::vector<PointSet> center_filter(const StoneSpace& space, CenterQuasipoint beta) {
  const std::size_t m = space.size();
  if (m > 20) throw Error(ErrorCode::OutOfRange, "filter enumeration needs m <= 20");
  if (beta.omega >= m) throw Error(ErrorCode::OutOfRange, "quasipoint outside the space");
  std::vector<PointSet> members;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if ((mask >> beta.omega) & 1U) members.push_back(PointSet::from_mask(m, mask));
  }
  return members;
}

Complex gelfand_eval(const CenterElement& alpha, CenterQuasipoint beta) {
  if (beta.omega >= alpha.space_size()) throw Error(ErrorCode::OutOfRange, "quasipoint outside the space");
  return alpha[beta.omega];
}

bool center_membership(const CenterElement& p, CenterQuasipoint beta) {
  if (!p.is_projection()) throw Error(ErrorCode::NotProjection, "center_membership");
  return gelfand_eval(p, beta) == Complex{1.0};
}

}  // namespace stonework
