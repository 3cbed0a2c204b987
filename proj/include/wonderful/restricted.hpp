#pragma once

#include "wonderful/involution.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace wonderful {

/// Type label of a (possibly non-reduced) root system, e.g. A3, BC2, G2.
struct TypeLabel {
  std::string family;  // "A".."G" or "BC"
  int rank = 0;

  std::string str() const { return family + std::to_string(rank); }
  friend bool operator==(const TypeLabel&, const TypeLabel&) = default;
};

/// Canonical form for comparisons: B₁, C₁ → A₁; C₂ → B₂.
TypeLabel normalize(TypeLabel t);
TypeLabel parse_type_label(const std::string& s);

class RestrictedRootSystem {
 public:
  static std::shared_ptr<const RestrictedRootSystem> build(InvolutionPtr inv);

  const Involution& involution() const { return *inv_; }
  const RootSystem& roots() const { return inv_->roots(); }

  /// D̄, in order of first appearance over Δ₁.
  const std::vector<Weight>& simple() const { return simple_; }
  std::size_t rank() const { return simple_.size(); }
  /// Index into simple() of the restricted root of a white node.
  std::size_t fiber_index(std::size_t alpha) const { return fiber_.at(alpha); }
  const std::set<Weight>& restricted_roots() const { return roots_; }
  /// Coordinates of a restricted root over D̄.
  const std::vector<std::int64_t>& coordinates(const Weight& beta) const { return coords_.at(beta); }

  const TypeLabel& type() const { return type_; }
  /// Some ᾱ in D̄ has 2ᾱ in R̄.
  bool non_reduced() const { return doubled_.has_value(); }
  std::optional<std::size_t> doubled_simple() const { return doubled_; }

  /// ᾱ∨ for a white node.
  Coweight coroot_bar(std::size_t alpha) const;
  /// α̂∨ for a white node.
  Coweight coroot_hat(std::size_t alpha) const;
  /// α̂∨ attached to the i-th element of D̄.
  const Coweight& simple_coroot_hat(std::size_t i) const { return hat_[i]; }

  const Weight& theta() const { return theta_; }
  const Weight& theta_bar() const { return theta_bar_; }
  const Coweight& theta_bar_covector() const { return theta_bar_vee_; }
  /// Coefficients of Θ̄∨ over {α̂∨} indexed like D̄.
  const std::vector<std::int64_t>& theta_bar_expansion() const { return theta_bar_expansion_; }

  bool exceptional() const { return witness_.has_value(); }
  std::optional<std::pair<std::size_t, std::size_t>> exceptional_witness() const { return witness_; }

 private:
  RestrictedRootSystem() = default;

  InvolutionPtr inv_;
  std::vector<Weight> simple_;
  std::map<std::size_t, std::size_t> fiber_;
  std::set<Weight> roots_;
  std::map<Weight, std::vector<std::int64_t>> coords_;
  TypeLabel type_;
  std::optional<std::size_t> doubled_;
  std::vector<Coweight> hat_;
  Weight theta_, theta_bar_;
  Coweight theta_bar_vee_;
  std::vector<std::int64_t> theta_bar_expansion_;
  std::optional<std::pair<std::size_t, std::size_t>> witness_;
};

using RestrictedPtr = std::shared_ptr<const RestrictedRootSystem>;

/// Case formula for the restricted coroot of any root β with σ(β) ≠ β.
Coweight restricted_coroot_of(const Involution& inv, const Weight& beta);

/// ⟨α∨, σ(α)⟩ = 1 and σ̄(α) ≠ α for some white node.
std::optional<std::pair<std::size_t, std::size_t>> exceptional_witness(const Involution& inv);

}  // namespace wonderful
