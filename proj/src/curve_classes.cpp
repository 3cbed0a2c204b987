#include "wonderful/curve_classes.hpp"

#include <algorithm>
#include <numeric>

namespace wonderful {

std::vector<std::int64_t> lambda_weight(const Involution& inv, std::size_t alpha) {
  const std::size_t n = inv.roots().rank();
  std::vector<std::int64_t> lam(n, 0);
  const Weight img = inv.apply(Weight::unit(n, alpha));
  const std::size_t bar = inv.sigma_bar(alpha);
  if (img == -Weight::unit(n, alpha)) {
    lam[alpha] = 2;
  } else if (img == -Weight::unit(n, bar) && inv.self_pairing(alpha) == 0) {
    lam[alpha] += 1;
    lam[bar] += 1;
  } else {
    lam[alpha] = 1;
  }
  return lam;
}

Rational CocharacterCurve::degree(const RootSystem& rs, const std::vector<std::int64_t>& lambda) const {
  const auto& iota = rs.minus_w0_permutation();
  Rational s(0);
  for (std::size_t j = 0; j < lambda.size(); ++j)
    if (lambda[j] != 0) s += Rational(lambda[j]) * (eta[j] + eta[iota[j]]);
  return s;
}

CurveClassModel::CurveClassModel(RestrictedPtr rrs) : rrs_(std::move(rrs)) {
  const Involution& inv = rrs_->involution();
  const RootSystem& rs = inv.roots();
  const std::size_t n = rs.rank();

  // Merge α ~ β when β = −σ(α) and ⟨α∨, β⟩ = 0.
  const auto& d1 = inv.delta1();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto a : d1)
    for (auto b : d1) {
      if (a == b) continue;
      if (inv.apply(Weight::unit(n, a)) == -Weight::unit(n, b) && rs.cartan()(a, b) == 0) {
        const auto ra = find(a), rb = find(b);
        parent[std::max(ra, rb)] = std::min(ra, rb);
      }
    }
  for (auto a : d1) {
    const auto root = find(a);
    auto it = std::find_if(colors_.begin(), colors_.end(),
                           [&](const Color& c) { return find(c.members.front()) == root; });
    if (it == colors_.end()) {
      colors_.push_back({{a}, lambda_weight(inv, a)});
    } else {
      it->members.push_back(a);
      if (lambda_weight(inv, a) != it->lambda) throw ConsistencyError("merged colors carry different weights");
    }
  }
  for (const auto& c : colors_)
    if (c.members.size() > 2) throw ConsistencyError("a color with more than two members");
  const std::size_t expected = rrs_->rank() + (rrs_->exceptional() ? 1 : 0);
  if (colors_.size() != expected)
    throw ConsistencyError("Picard rank " + std::to_string(colors_.size()) + " differs from r + s = " +
                           std::to_string(expected));

  pairing_.assign(rrs_->rank(), std::vector<std::int64_t>(colors_.size(), 0));
  for (std::size_t k = 0; k < rrs_->rank(); ++k)
    for (std::size_t c = 0; c < colors_.size(); ++c) {
      const Rational v = rs.pair(rrs_->coroot_hat(colors_[c].members.front()), rrs_->simple()[k]);
      if (v.denominator() != 1) throw ConsistencyError("non-integral boundary pairing");
      pairing_[k][c] = v.numerator();
    }

  // ψ(γ) = Θ̄∨ splits over the fibers of D̄: the colors over the k-th simple
  // restricted root must carry total coefficient equal to the k-th entry of
  // the expansion of Θ̄∨.
  const auto& target = rrs_->theta_bar_expansion();
  std::vector<std::vector<std::size_t>> fiber(rrs_->rank());
  for (std::size_t c = 0; c < colors_.size(); ++c)
    fiber[rrs_->fiber_index(colors_[c].members.front())].push_back(c);
  std::vector<CurveClass> partial = {CurveClass(colors_.size(), 0)};
  for (std::size_t k = 0; k < fiber.size(); ++k) {
    std::vector<CurveClass> next;
    for (const auto& base : partial) {
      std::function<void(std::size_t, std::int64_t, CurveClass)> spread = [&](std::size_t idx, std::int64_t left,
                                                                             CurveClass cur) {
        if (idx + 1 == fiber[k].size()) {
          cur[fiber[k][idx]] = left;
          next.push_back(cur);
          return;
        }
        for (std::int64_t v = left; v >= 0; --v) {
          cur[fiber[k][idx]] = v;
          spread(idx + 1, left - v, cur);
        }
      };
      spread(0, target[k], base);
    }
    partial = std::move(next);
  }
  for (const auto& g : partial) {
    const auto deg = boundary_degrees(g);
    if (std::all_of(deg.begin(), deg.end(), [](auto x) { return x >= 0; })) minimal_.push_back(g);
  }
  if (minimal_.empty()) throw ConsistencyError("no effective class maps to the theta-bar coroot");
  if (minimal_.size() != (rrs_->exceptional() ? 2u : 1u))
    throw ConsistencyError("unexpected number of minimal classes: " + std::to_string(minimal_.size()));
}

std::size_t CurveClassModel::color_of(std::size_t alpha) const {
  for (std::size_t c = 0; c < colors_.size(); ++c)
    if (std::count(colors_[c].members.begin(), colors_[c].members.end(), alpha)) return c;
  throw InputError("node is not a white node");
}

Coweight CurveClassModel::psi(const CurveClass& c) const {
  Coweight out(restricted().roots().rank());
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) out += Rational(c[i]) * restricted().coroot_hat(colors_[i].members.front());
  return out;
}

std::vector<std::int64_t> CurveClassModel::boundary_degrees(const CurveClass& c) const {
  std::vector<std::int64_t> out(pairing_.size(), 0);
  for (std::size_t k = 0; k < pairing_.size(); ++k)
    for (std::size_t i = 0; i < c.size(); ++i) out[k] += pairing_[k][i] * c[i];
  return out;
}

CocharacterCurve CurveClassModel::cocharacter_curve(const Coweight& eta) const {
  const RootSystem& rs = restricted().roots();
  CocharacterCurve cc;
  cc.eta = eta;
  const auto& d = restricted().simple();
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Rational v = rs.pair(eta, d[i]);
    if (v < 0) throw InputError("cocharacter is not dominant on the restricted simple roots");
    if (v != 0) cc.orbit_at_zero.push_back(i);
    if (v == 1) cc.is_embedding = true;
    if (rs.pair(eta, rs.w0().apply(d[i])) != 0) cc.orbit_at_infinity.push_back(i);
  }
  return cc;
}

CurveClass CurveClassModel::class_of(const CocharacterCurve& curve) const {
  CurveClass out(colors_.size(), 0);
  for (std::size_t c = 0; c < colors_.size(); ++c) {
    const Rational deg = curve.degree(restricted().roots(), colors_[c].lambda);
    if (deg.denominator() != 1) throw ConsistencyError("non-integral degree on a cocharacter curve");
    out[c] = deg.numerator();
  }
  return out;
}

}  // namespace wonderful
