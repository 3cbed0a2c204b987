#include "wonderful/root_system.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace wonderful {

namespace {

void check_type(char type, int rank) {
  bool ok = false;
  switch (type) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 3; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: break;
  }
  if (!ok) throw InputError("invalid root system type " + std::string(1, type) + std::to_string(rank));
}

void bond(IntMatrix& a, std::size_t i, std::size_t j, std::int64_t aij, std::int64_t aji) {
  a(i, j) = aij;
  a(j, i) = aji;
}

// Symmetrizer for one simple component, indexed by local node.
std::vector<Rational> local_symmetrizer(char type, int rank) {
  std::vector<Rational> d(rank, Rational(1));
  switch (type) {
    case 'B': d[rank - 1] = Rational(1, 2); break;
    case 'C':
      for (int i = 0; i + 1 < rank; ++i) d[i] = Rational(1, 2);
      break;
    case 'F': d[2] = d[3] = Rational(1, 2); break;
    case 'G': d[0] = Rational(1, 3); break;
    default: break;
  }
  return d;
}

}  // namespace

IntMatrix bourbaki_cartan(char type, int rank) {
  check_type(type, rank);
  const auto n = static_cast<std::size_t>(rank);
  IntMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
  switch (type) {
    case 'A':
      for (std::size_t i = 0; i + 1 < n; ++i) bond(a, i, i + 1, -1, -1);
      break;
    case 'B':
      for (std::size_t i = 0; i + 2 < n; ++i) bond(a, i, i + 1, -1, -1);
      bond(a, n - 2, n - 1, -1, -2);
      break;
    case 'C':
      for (std::size_t i = 0; i + 2 < n; ++i) bond(a, i, i + 1, -1, -1);
      bond(a, n - 2, n - 1, -2, -1);
      break;
    case 'D':
      for (std::size_t i = 0; i + 2 < n; ++i) bond(a, i, i + 1, -1, -1);
      bond(a, n - 3, n - 1, -1, -1);
      break;
    case 'E':
      bond(a, 0, 2, -1, -1);
      bond(a, 1, 3, -1, -1);
      for (std::size_t i = 2; i + 1 < n; ++i) bond(a, i, i + 1, -1, -1);
      break;
    case 'F':
      bond(a, 0, 1, -1, -1);
      bond(a, 1, 2, -1, -2);
      bond(a, 2, 3, -1, -1);
      break;
    case 'G':
      bond(a, 0, 1, -3, -1);
      break;
    default: break;
  }
  return a;
}

std::vector<Weight> positive_roots_from_cartan(const IntMatrix& a) {
  const std::size_t n = a.dim();
  auto pair = [&](std::size_t i, const Weight& w) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n; ++j) s += a(i, j) * w[j];
    return s;
  };
  std::set<Weight> known;
  std::vector<Weight> level;
  for (std::size_t i = 0; i < n; ++i) {
    level.push_back(Weight::unit(n, i));
    known.insert(level.back());
  }
  std::vector<Weight> all = level;
  // Grow by height: β + α_i is a root iff q > 0 on the α_i-string through β.
  while (!level.empty()) {
    std::set<Weight> next;
    for (const auto& beta : level) {
      for (std::size_t i = 0; i < n; ++i) {
        std::int64_t p = 0;
        Weight down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        const std::int64_t q = p - pair(i, beta);
        if (q <= 0) continue;
        Weight up = beta;
        up[i] += 1;
        if (!known.count(up)) next.insert(up);
      }
    }
    level.assign(next.begin(), next.end());
    for (const auto& w : level) known.insert(w);
    all.insert(all.end(), level.begin(), level.end());
    if (all.size() > 100000) throw InputError("Cartan matrix is not of finite type");
  }
  std::stable_sort(all.begin(), all.end(), [](const Weight& x, const Weight& y) {
    if (x.height() != y.height()) return x.height() < y.height();
    return x < y;
  });
  return all;
}

std::shared_ptr<const RootSystem> RootSystem::build(const std::vector<std::pair<char, int>>& comps) {
  if (comps.empty()) throw InputError("root system needs at least one component");
  std::size_t n = 0;
  for (const auto& [t, r] : comps) {
    check_type(t, r);
    n += static_cast<std::size_t>(r);
  }
  std::shared_ptr<RootSystem> rs(new RootSystem());
  rs->cartan_ = IntMatrix(n);
  rs->d_.assign(n, Rational(1));
  std::size_t off = 0;
  for (const auto& [t, r] : comps) {
    rs->components_.push_back({t, r, off});
    const auto local = bourbaki_cartan(t, r);
    const auto d = local_symmetrizer(t, r);
    for (int i = 0; i < r; ++i) {
      rs->d_[off + i] = d[i];
      for (int j = 0; j < r; ++j) rs->cartan_(off + i, off + j) = local(i, j);
    }
    off += static_cast<std::size_t>(r);
  }
  rs->positive_ = positive_roots_from_cartan(rs->cartan_);
  rs->positive_set_.insert(rs->positive_.begin(), rs->positive_.end());

  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  rs->w0_ = rs->word_matrix(rs->longest_subsystem_word(all));
  rs->iota_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Weight img = -rs->w0_.column(i);
    bool found = false;
    for (std::size_t j = 0; j < n && !found; ++j)
      if (img == Weight::unit(n, j)) {
        rs->iota_[i] = j;
        found = true;
      }
    if (!found) throw ConsistencyError("-w0 does not permute the simple roots");
  }
  return rs;
}

std::size_t RootSystem::component_of(std::size_t node) const {
  for (std::size_t c = 0; c < components_.size(); ++c) {
    const auto& comp = components_[c];
    if (node >= comp.offset && node < comp.offset + static_cast<std::size_t>(comp.rank)) return c;
  }
  throw InputError("node id out of range");
}

bool RootSystem::simply_laced() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Component& c) { return c.type == 'A' || c.type == 'D' || c.type == 'E'; });
}

std::int64_t RootSystem::pairing(std::size_t i, const Weight& w) const {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < rank(); ++j) s += cartan_(i, j) * w[j];
  return s;
}

Rational RootSystem::pair(const Coweight& eta, const Weight& w) const {
  Rational s(0);
  for (std::size_t i = 0; i < rank(); ++i)
    if (eta[i] != 0) s += eta[i] * pairing(i, w);
  return s;
}

Rational RootSystem::inner(const Weight& a, const Weight& b) const {
  Rational s(0);
  for (std::size_t i = 0; i < rank(); ++i)
    if (a[i] != 0) s += Rational(a[i]) * d_[i] * pairing(i, b);
  return s;
}

Weight RootSystem::reflect(std::size_t i, const Weight& w) const {
  Weight out = w;
  out[i] -= pairing(i, w);
  return out;
}

IntMatrix RootSystem::reflection_matrix(std::size_t i) const {
  IntMatrix m = IntMatrix::identity(rank());
  for (std::size_t j = 0; j < rank(); ++j) m(i, j) -= cartan_(i, j);
  return m;
}

IntMatrix RootSystem::word_matrix(const std::vector<std::size_t>& word) const {
  IntMatrix m = IntMatrix::identity(rank());
  for (auto i : word) m = m * reflection_matrix(i);
  return m;
}

std::vector<std::size_t> RootSystem::longest_subsystem_word(const std::vector<std::size_t>& nodes) const {
  std::vector<bool> in(rank(), false);
  for (auto i : nodes) {
    if (i >= rank()) throw InputError("node id out of range");
    in[i] = true;
  }
  Weight v(rank());
  for (const auto& beta : positive_) {
    bool supported = true;
    for (std::size_t j = 0; j < rank() && supported; ++j)
      if (beta[j] != 0 && !in[j]) supported = false;
    if (supported) v += beta;
  }
  std::vector<std::size_t> word;
  while (true) {
    std::size_t pick = rank();
    for (std::size_t i = 0; i < rank(); ++i)
      if (in[i] && pairing(i, v) > 0) {
        pick = i;
        break;
      }
    if (pick == rank()) break;
    v = reflect(pick, v);
    word.push_back(pick);
  }
  return word;
}

std::vector<Weight> RootSystem::roots() const {
  std::vector<Weight> out;
  out.reserve(root_count());
  for (auto it = positive_.rbegin(); it != positive_.rend(); ++it) out.push_back(-*it);
  out.insert(out.end(), positive_.begin(), positive_.end());
  return out;
}

bool RootSystem::is_root(const Weight& w) const { return positive_set_.count(w) || positive_set_.count(-w); }

Coweight RootSystem::coroot(const Weight& root) const {
  const Rational len = inner(root, root) / 2;
  Coweight out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = Rational(root[i]) * d_[i] / len;
  return out;
}

Coweight RootSystem::simple_coroot(std::size_t i) const {
  Coweight out(rank());
  out[i] = 1;
  return out;
}

bool RootSystem::is_long(const Weight& root) const { return inner(root, root) == 2; }

std::pair<Weight, Weight> RootSystem::highest_roots(std::size_t component) const {
  if (component >= components_.size()) throw InputError("component index out of range");
  const auto& comp = components_[component];
  auto in_comp = [&](const Weight& w) {
    for (std::size_t j = 0; j < rank(); ++j)
      if (w[j] != 0 && (j < comp.offset || j >= comp.offset + static_cast<std::size_t>(comp.rank))) return false;
    return true;
  };
  Weight big, small;
  for (const auto& beta : positive_) {
    if (!in_comp(beta)) continue;
    if (big.size() == 0 || beta.height() > big.height()) big = beta;
  }
  // θ: the short root of greatest height (Θ itself when all roots have one length).
  const Rational big_len = inner(big, big);
  for (const auto& beta : positive_) {
    if (!in_comp(beta)) continue;
    const bool short_root = inner(beta, beta) < big_len;
    const bool laced = std::string("ADE").find(comp.type) != std::string::npos;
    if ((short_root || laced) && (small.size() == 0 || beta.height() > small.height())) small = beta;
  }
  return {big, small};
}

Weight RootSystem::highest_root() const {
  if (!is_simple()) throw InputError("highest_root needs a simple root system; pass a component index");
  return highest_roots(0).first;
}

Weight RootSystem::two_rho() const {
  Weight s(rank());
  for (const auto& beta : positive_) s += beta;
  return s;
}

std::size_t expected_root_count(char type, int n) {
  const auto r = static_cast<std::size_t>(n);
  switch (type) {
    case 'A': return r * (r + 1);
    case 'B':
    case 'C': return 2 * r * r;
    case 'D': return 2 * r * (r - 1);
    case 'G': return 12;
    case 'F': return 48;
    case 'E': return r == 6 ? 72 : r == 7 ? 126 : 240;
    default: throw InputError("unknown type");
  }
}

}  // namespace wonderful

namespace wonderful {

namespace {

bool extend_match(const IntMatrix& c, const IntMatrix& std_c, std::vector<std::size_t>& order,
                  std::vector<bool>& used) {
  const std::size_t k = order.size();
  const std::size_t n = c.dim();
  if (k == n) return true;
  for (std::size_t cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    bool ok = true;
    for (std::size_t a = 0; a < k && ok; ++a)
      ok = c(order[a], cand) == std_c(a, k) && c(cand, order[a]) == std_c(k, a);
    if (!ok) continue;
    used[cand] = true;
    order.push_back(cand);
    if (extend_match(c, std_c, order, used)) return true;
    order.pop_back();
    used[cand] = false;
  }
  return false;
}

}  // namespace

std::optional<CartanMatch> identify_cartan(const IntMatrix& c) {
  const int n = static_cast<int>(c.dim());
  if (n == 0) return std::nullopt;
  std::vector<std::pair<char, int>> candidates = {{'A', n}};
  if (n >= 2) candidates.push_back({'B', n});
  if (n >= 3) candidates.push_back({'C', n});
  if (n >= 4) candidates.push_back({'D', n});
  if (n >= 6 && n <= 8) candidates.push_back({'E', n});
  if (n == 4) candidates.push_back({'F', 4});
  if (n == 2) candidates.push_back({'G', 2});
  for (const auto& [t, r] : candidates) {
    const IntMatrix std_c = bourbaki_cartan(t, r);
    std::vector<std::size_t> order;
    std::vector<bool> used(c.dim(), false);
    if (extend_match(c, std_c, order, used)) return CartanMatch{t, r, order};
  }
  return std::nullopt;
}

}  // namespace wonderful
