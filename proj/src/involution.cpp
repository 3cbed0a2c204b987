#include "wonderful/involution.hpp"

#include <algorithm>
#include <string>

namespace wonderful {

const char* to_string(SimpleCase c) {
  switch (c) {
    case SimpleCase::Real: return "REAL";
    case SimpleCase::Orthogonal: return "ORTHOGONAL";
    case SimpleCase::Nonreduced: return "NONREDUCED";
  }
  return "?";
}

namespace {

[[noreturn]] void inconsistent(const std::string& what) {
  throw ConsistencyError("inconsistent Satake data: " + what);
}

std::string node_name(std::size_t i) { return "alpha_" + std::to_string(i + 1); }

}  // namespace

std::shared_ptr<const Involution> Involution::build(SatakeData satake) {
  if (!satake.root_system) throw InputError("Satake data without a root system");
  const RootSystem& rs = *satake.root_system;
  const std::size_t n = rs.rank();

  auto& eps = satake.diagram_involution;
  if (eps.empty()) {
    eps.resize(n);
    for (std::size_t i = 0; i < n; ++i) eps[i] = i;
  }
  if (eps.size() != n) throw InputError("diagram involution has the wrong length");
  for (auto e : eps)
    if (e >= n) throw InputError("diagram involution maps outside the diagram");

  std::vector<bool> black(n, false);
  for (auto b : satake.black_nodes) {
    if (b >= n) throw InputError("black node out of range");
    black[b] = true;
  }
  std::sort(satake.black_nodes.begin(), satake.black_nodes.end());
  satake.black_nodes.erase(std::unique(satake.black_nodes.begin(), satake.black_nodes.end()),
                           satake.black_nodes.end());

  for (std::size_t i = 0; i < n; ++i) {
    if (eps[eps[i]] != i) inconsistent("diagram involution is not an involution");
    if (black[i] != black[eps[i]]) inconsistent("diagram involution does not preserve the black nodes");
    for (std::size_t j = 0; j < n; ++j)
      if (rs.cartan()(eps[i], eps[j]) != rs.cartan()(i, j))
        inconsistent("diagram involution is not a Dynkin automorphism");
  }

  IntMatrix e(n);
  for (std::size_t i = 0; i < n; ++i) e(eps[i], i) = 1;
  const IntMatrix wl = rs.word_matrix(rs.longest_subsystem_word(satake.black_nodes));

  std::shared_ptr<Involution> inv(new Involution());
  inv->sigma_ = -(wl * e);
  inv->black_ = black;
  for (std::size_t i = 0; i < n; ++i)
    if (!black[i]) inv->delta1_.push_back(i);

  if (inv->sigma_ * inv->sigma_ != IntMatrix::identity(n)) inconsistent("sigma is not an involution");
  for (const auto& beta : rs.positive_roots())
    if (!rs.is_root(inv->sigma_.apply(beta))) inconsistent("sigma does not preserve the root system");

  inv->sigma_bar_.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Weight img = inv->sigma_.column(i);
    if (black[i]) {
      if (img != Weight::unit(n, i)) inconsistent("sigma moves black node " + node_name(i));
      continue;
    }
    if (!img.is_nonpositive() || img.is_zero() || !rs.is_root(img))
      inconsistent("sigma(" + node_name(i) + ") is not a negative root");
    const Weight minus = -img;
    std::size_t bar = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (black[j] || minus[j] == 0) continue;
      if (minus[j] != 1 || bar != n)
        inconsistent("-sigma(" + node_name(i) + ") has white support other than one node with coefficient 1");
      bar = j;
    }
    if (bar == n) inconsistent("-sigma(" + node_name(i) + ") has no white support");
    inv->sigma_bar_[i] = bar;
  }
  for (auto i : inv->delta1_)
    if (inv->sigma_bar_[inv->sigma_bar_[i]] != i) inconsistent("sigma-bar is not an involution");

  inv->satake_ = std::move(satake);
  return inv;
}

bool Involution::epsilon_is_identity() const {
  for (std::size_t i = 0; i < satake_.diagram_involution.size(); ++i)
    if (satake_.diagram_involution[i] != i) return false;
  return true;
}

std::size_t Involution::sigma_bar(std::size_t alpha) const {
  if (alpha >= black_.size() || black_[alpha]) throw InputError("sigma_bar is defined on white nodes only");
  return sigma_bar_[alpha];
}

std::int64_t Involution::self_pairing(std::size_t alpha) const {
  return roots().pairing(alpha, sigma_.column(alpha));
}

SimpleCase Involution::classify(std::size_t alpha) const {
  if (alpha >= black_.size() || black_[alpha]) throw InputError("classify_simple is defined on white nodes only");
  const Weight img = sigma_.column(alpha);
  const auto p = self_pairing(alpha);
  if (img == -Weight::unit(roots().rank(), alpha)) return SimpleCase::Real;
  if (p == 0) return SimpleCase::Orthogonal;
  if (p == 1) return SimpleCase::Nonreduced;
  throw ConsistencyError("classify_simple: <alpha_v, sigma(alpha)> = " + std::to_string(p) + " for " +
                         node_name(alpha));
}

bool Involution::is_group_type() const {
  const auto& comps = roots().components();
  if (comps.size() != 2 || comps[0].type != comps[1].type || comps[0].rank != comps[1].rank) return false;
  for (std::size_t i = 0; i < static_cast<std::size_t>(comps[0].rank); ++i)
    if (roots().component_of(epsilon(i)) != 1) return false;
  return true;
}

}  // namespace wonderful
