#pragma once

#include "wonderful/restricted.hpp"

#include <functional>
#include <vector>

namespace wonderful {

struct Color {
  std::vector<std::size_t> members;  // white nodes, ascending
  std::vector<std::int64_t> lambda;  // λ in fundamental-weight coordinates
};

/// Integer coefficients over the colors.
using CurveClass = std::vector<std::int64_t>;

/// Degree functional λ ↦ ⟨η, λ − w₀λ⟩ of a cocharacter curve.
struct CocharacterCurve {
  std::vector<std::size_t> orbit_at_zero;      // indices into D̄
  std::vector<std::size_t> orbit_at_infinity;  // indices into D̄
  bool is_embedding = false;
  Coweight eta;

  Rational degree(const RootSystem& rs, const std::vector<std::int64_t>& lambda) const;
};

class CurveClassModel {
 public:
  explicit CurveClassModel(RestrictedPtr rrs);

  const RestrictedRootSystem& restricted() const { return *rrs_; }
  const std::vector<Color>& colors() const { return colors_; }
  std::size_t picard_rank() const { return colors_.size(); }
  std::size_t color_of(std::size_t alpha) const;

  /// M[β̄][D] = ⟨α̂∨, β̄⟩, rows indexed by D̄.
  const std::vector<std::vector<std::int64_t>>& boundary_pairing() const { return pairing_; }
  Coweight psi(const CurveClass& c) const;
  /// Rows of M applied to a class: X_β̄ · C.
  std::vector<std::int64_t> boundary_degrees(const CurveClass& c) const;

  /// γ₀, or γ₀⁺ then γ₀⁻ in the exceptional case.
  const std::vector<CurveClass>& minimal_classes() const { return minimal_; }

  CocharacterCurve cocharacter_curve(const Coweight& eta) const;
  /// Σ_D deg(λ_D) [C_D] for a cocharacter curve.
  CurveClass class_of(const CocharacterCurve& curve) const;

 private:
  RestrictedPtr rrs_;
  std::vector<Color> colors_;
  std::vector<std::vector<std::int64_t>> pairing_;
  std::vector<CurveClass> minimal_;
};

/// λ_α in fundamental-weight coordinates.
std::vector<std::int64_t> lambda_weight(const Involution& inv, std::size_t alpha);

}  // namespace wonderful
