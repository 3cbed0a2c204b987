#pragma once

#include "wonderful/root_system.hpp"

#include <memory>
#include <string>
#include <vector>

namespace wonderful {

/// Satake-style input: black nodes and a diagram involution ε, both in
/// 0-based global node ids.
struct SatakeData {
  RootSystemPtr root_system;
  std::vector<std::size_t> black_nodes;
  std::vector<std::size_t> diagram_involution;  // ε(i); empty means identity
};

enum class SimpleCase { Real, Orthogonal, Nonreduced };

const char* to_string(SimpleCase c);

/// The lattice involution σ = −w_L ∘ ε, validated eagerly.
class Involution {
 public:
  static std::shared_ptr<const Involution> build(SatakeData satake);

  const RootSystem& roots() const { return *satake_.root_system; }
  const SatakeData& satake() const { return satake_; }
  const IntMatrix& matrix() const { return sigma_; }
  Weight apply(const Weight& w) const { return sigma_.apply(w); }

  bool is_black(std::size_t i) const { return black_[i]; }
  const std::vector<std::size_t>& delta1() const { return delta1_; }
  bool in_delta1(std::size_t i) const { return !black_[i]; }
  std::size_t epsilon(std::size_t i) const { return satake_.diagram_involution[i]; }
  bool epsilon_is_identity() const;

  std::size_t sigma_bar(std::size_t alpha) const;
  /// ⟨α∨, σ(α)⟩
  std::int64_t self_pairing(std::size_t alpha) const;
  SimpleCase classify(std::size_t alpha) const;

  /// Doubled diagram with ε exchanging the two factors.
  bool is_group_type() const;

 private:
  Involution() = default;

  SatakeData satake_;
  IntMatrix sigma_;
  std::vector<bool> black_;
  std::vector<std::size_t> delta1_;
  std::vector<std::size_t> sigma_bar_;  // indexed by global node id; only Δ₁ entries meaningful
};

using InvolutionPtr = std::shared_ptr<const Involution>;

}  // namespace wonderful
