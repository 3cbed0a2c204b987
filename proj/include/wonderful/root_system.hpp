#pragma once

#include "wonderful/arith.hpp"

#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace wonderful {

struct Component {
  char type = 'A';
  int rank = 0;
  std::size_t offset = 0;  // global id of the component's first node
};

/// Positive roots of the (finite type) root system with the given Cartan
/// matrix, ordered by height then lexicographically.
std::vector<Weight> positive_roots_from_cartan(const IntMatrix& cartan);

/// Bourbaki Cartan matrix of a simple type.
IntMatrix bourbaki_cartan(char type, int rank);

/// Finite root system, possibly a product of simple components, in the
/// simple-root basis. Immutable once built.
class RootSystem {
 public:
  static std::shared_ptr<const RootSystem> build(const std::vector<std::pair<char, int>>& components);

  std::size_t rank() const { return cartan_.dim(); }
  const std::vector<Component>& components() const { return components_; }
  std::size_t component_of(std::size_t node) const;
  bool is_simple() const { return components_.size() == 1; }
  bool simply_laced() const;

  const IntMatrix& cartan() const { return cartan_; }
  /// (α_i, α_i) / 2; long roots have 1.
  const Rational& symmetrizer(std::size_t i) const { return d_[i]; }

  /// ⟨α_i∨, w⟩
  std::int64_t pairing(std::size_t i, const Weight& w) const;
  /// ⟨η, w⟩ for a coweight in the simple-coroot basis.
  Rational pair(const Coweight& eta, const Weight& w) const;
  Rational inner(const Weight& a, const Weight& b) const;

  Weight reflect(std::size_t i, const Weight& w) const;
  IntMatrix reflection_matrix(std::size_t i) const;
  /// Product s_{w[0]} s_{w[1]} ... as a lattice map.
  IntMatrix word_matrix(const std::vector<std::size_t>& word) const;
  std::vector<std::size_t> longest_subsystem_word(const std::vector<std::size_t>& nodes) const;
  const IntMatrix& w0() const { return w0_; }
  /// ι with −w₀(α_i) = α_{ι(i)}.
  const std::vector<std::size_t>& minus_w0_permutation() const { return iota_; }

  const std::vector<Weight>& positive_roots() const { return positive_; }
  std::vector<Weight> roots() const;
  std::size_t root_count() const { return 2 * positive_.size(); }
  bool is_root(const Weight& w) const;
  bool is_positive_root(const Weight& w) const { return positive_set_.count(w) > 0; }

  /// Coroot of a root, in the simple-coroot basis.
  Coweight coroot(const Weight& root) const;
  Coweight simple_coroot(std::size_t i) const;
  bool is_long(const Weight& root) const;

  /// Highest root Θ and highest short root θ of one component.
  std::pair<Weight, Weight> highest_roots(std::size_t component) const;
  /// Highest root of a simple system; input error when reducible.
  Weight highest_root() const;

  Weight two_rho() const;

 private:
  RootSystem() = default;

  std::vector<Component> components_;
  IntMatrix cartan_;
  std::vector<Rational> d_;
  std::vector<Weight> positive_;
  std::set<Weight> positive_set_;
  IntMatrix w0_;
  std::vector<std::size_t> iota_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Bourbaki identification of a connected Cartan matrix: order[k] is the
/// local index carrying Bourbaki node k+1. Among all valid orders the
/// lexicographically smallest is returned. B₂ is preferred over C₂ and A₃
/// over D₃.
struct CartanMatch {
  char type = 'A';
  int rank = 0;
  std::vector<std::size_t> order;
};

std::optional<CartanMatch> identify_cartan(const IntMatrix& cartan);

/// Number of roots of a simple type, closed form.
std::size_t expected_root_count(char type, int rank);

}  // namespace wonderful
