#pragma once

#include "wonderful/arith.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace wonderful {

struct KacEdge {
  std::size_t i = 0, j = 0;
  std::int64_t aij = -1, aji = -1;  // ⟨α_i∨, α_j⟩ and ⟨α_j∨, α_i⟩
  friend bool operator==(const KacEdge&, const KacEdge&) = default;
};

/// Affine diagram with black/white colors; node ids are 0-based positions.
struct KacDiagram {
  std::string shape;         // e.g. "D5^(2)"
  std::vector<char> colors;  // 'b' or 'w'
  std::vector<KacEdge> edges;

  std::size_t size() const { return colors.size(); }
  std::vector<std::size_t> white_nodes() const;
  IntMatrix cartan() const;
  bool adjacent(std::size_t a, std::size_t b) const;
  friend bool operator==(const KacDiagram&, const KacDiagram&) = default;
};

/// Uncolored affine diagram by name: "X<n>^(1)" for every finite type,
/// "A<2l>^(2)", "A<2l-1>^(2)", "D<l+1>^(2)", "E6^(2)".
KacDiagram affine_diagram(const std::string& shape);
/// Same diagram with the listed nodes white and the rest black.
KacDiagram colored(KacDiagram d, const std::vector<std::size_t>& white);

/// One simple factor of a parabolic quotient: type, rank and the crossed
/// nodes in Bourbaki numbering (1-based, ascending).
struct Factor {
  char type = 'A';
  int rank = 0;
  std::vector<int> crossed;
  friend auto operator<=>(const Factor&, const Factor&) = default;
};

struct SpaceDescriptor {
  std::vector<Factor> factors;
  std::int64_t dimension = 0;
};

/// One marked diagram per white node, in ascending node order.
std::vector<std::size_t> marked_diagrams(const KacDiagram& kd);
SpaceDescriptor component_descriptor(const KacDiagram& kd, std::size_t delta);

std::int64_t factor_dimension(const Factor& f);
std::string factor_name(const Factor& f);
std::string name_space(const SpaceDescriptor& d);
/// Components joined with " | ".
std::string name_union(const std::vector<SpaceDescriptor>& comps);

/// Canonical key of a variety name: a sorted multiset of components, each a
/// sorted list of canonical factors. Low-rank isomorphisms and diagram
/// symmetries are normalized away.
using ComponentKey = std::vector<Factor>;
using NameKey = std::vector<ComponentKey>;

NameKey parse_name(const std::string& name);
ComponentKey canonical_component(const std::vector<Factor>& factors);
NameKey key_of(const std::vector<SpaceDescriptor>& comps);
std::int64_t dimension_of(const ComponentKey& key);
bool same_variety(const std::string& a, const std::string& b);

/// Display form: superscripts, subscripts, ×, ⊔.
std::string to_unicode(const std::string& ascii_name);

}  // namespace wonderful
