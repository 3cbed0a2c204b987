#include "wonderful/restricted.hpp"

#include <algorithm>
#include <cctype>

namespace wonderful {

TypeLabel normalize(TypeLabel t) {
  if ((t.family == "B" || t.family == "C") && t.rank == 1) t.family = "A";
  if (t.family == "C" && t.rank == 2) t.family = "B";
  if (t.family == "D" && t.rank == 3) t.family = "A";
  return t;
}

TypeLabel parse_type_label(const std::string& s) {
  std::size_t i = 0;
  while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
  if (i == 0 || i == s.size()) throw DataError("malformed type label '" + s + "'");
  TypeLabel t;
  t.family = s.substr(0, i);
  try {
    t.rank = std::stoi(s.substr(i));
  } catch (const std::exception&) {
    throw DataError("malformed type label '" + s + "'");
  }
  static const std::set<std::string> known = {"A", "B", "C", "D", "E", "F", "G", "BC"};
  if (!known.count(t.family) || t.rank < 1) throw DataError("unknown type label '" + s + "'");
  return t;
}

Coweight restricted_coroot_of(const Involution& inv, const Weight& beta) {
  const RootSystem& rs = inv.roots();
  const Weight img = inv.apply(beta);
  if (img == beta) throw ConsistencyError("restricted coroot of a sigma-fixed root");
  const Coweight bv = rs.coroot(beta);
  if (img == -beta) return Rational(1, 2) * bv;
  const Rational p = rs.pair(bv, img);
  if (p == 0) return Rational(1, 2) * (bv - rs.coroot(img));
  if (p == 1) return bv - rs.coroot(img);
  throw ConsistencyError("restricted coroot: <beta_v, sigma(beta)> = " + to_string(p));
}

std::optional<std::pair<std::size_t, std::size_t>> exceptional_witness(const Involution& inv) {
  for (auto a : inv.delta1())
    if (inv.self_pairing(a) == 1 && inv.sigma_bar(a) != a) return std::make_pair(a, inv.sigma_bar(a));
  return std::nullopt;
}

std::shared_ptr<const RestrictedRootSystem> RestrictedRootSystem::build(InvolutionPtr inv) {
  std::shared_ptr<RestrictedRootSystem> r(new RestrictedRootSystem());
  r->inv_ = inv;
  const RootSystem& rs = inv->roots();
  const std::size_t n = rs.rank();

  for (auto a : inv->delta1()) {
    const Weight bar = Weight::unit(n, a) - inv->apply(Weight::unit(n, a));
    auto it = std::find(r->simple_.begin(), r->simple_.end(), bar);
    r->fiber_[a] = static_cast<std::size_t>(it - r->simple_.begin());
    if (it == r->simple_.end()) r->simple_.push_back(bar);
  }
  if (r->simple_.empty()) throw ConsistencyError("no white nodes: restricted root system is empty");

  for (const auto& beta : rs.roots()) {
    const Weight img = inv->apply(beta);
    if (img != beta) r->roots_.insert(beta - img);
  }

  std::vector<std::vector<Rational>> cols;
  for (const auto& s : r->simple_) cols.push_back(to_rational(s));
  if (rank_of(cols) != cols.size()) throw ConsistencyError("restricted simple roots are linearly dependent");
  for (const auto& beta : r->roots_) {
    const auto x = solve_exact(cols, to_rational(beta));
    if (!x) throw ConsistencyError("restricted root outside the span of the restricted simple roots");
    std::vector<std::int64_t> c;
    bool pos = true, neg = true;
    for (const auto& q : *x) {
      if (q.denominator() != 1) throw ConsistencyError("restricted root with fractional coordinates");
      c.push_back(q.numerator());
      pos = pos && q >= 0;
      neg = neg && q <= 0;
    }
    if (!pos && !neg) throw ConsistencyError("restricted root of mixed sign over the restricted basis");
    r->coords_[beta] = std::move(c);
  }

  for (std::size_t i = 0; i < r->simple_.size(); ++i)
    if (r->roots_.count(2 * r->simple_[i])) {
      r->doubled_ = i;
      break;
    }

  r->hat_.assign(r->simple_.size(), Coweight());
  std::vector<Coweight> bars(r->simple_.size());
  for (auto a : inv->delta1()) {
    const auto i = r->fiber_[a];
    const Coweight hat = r->coroot_hat(a);
    if (r->hat_[i].size() == 0) {
      r->hat_[i] = hat;
      bars[i] = r->coroot_bar(a);
    } else if (r->hat_[i] != hat) {
      throw ConsistencyError("white nodes with the same restricted root have different coroots");
    }
  }

  const std::size_t k = r->simple_.size();
  IntMatrix cartan(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Rational v = rs.pair(bars[i], r->simple_[j]);
      if (v.denominator() != 1) throw ConsistencyError("non-integral restricted Cartan entry");
      cartan(i, j) = v.numerator();
    }
  const auto match = identify_cartan(cartan);
  if (!match) throw ConsistencyError("restricted Cartan matrix matches no finite type");
  r->type_ = TypeLabel{r->non_reduced() ? "BC" : std::string(1, match->type), match->rank};

  r->theta_ = rs.highest_roots(0).first;
  r->theta_bar_ = r->theta_ - inv->apply(r->theta_);
  r->theta_bar_vee_ = restricted_coroot_of(*inv, r->theta_);

  std::vector<std::vector<Rational>> hat_cols;
  for (const auto& h : r->hat_) hat_cols.push_back(h.c);
  const auto x = solve_exact(hat_cols, r->theta_bar_vee_.c);
  if (!x) throw ConsistencyError("theta-bar coroot is not in the span of the primitive simple coroots");
  for (const auto& q : *x) {
    if (q.denominator() != 1 || q < 0)
      throw ConsistencyError("theta-bar coroot expansion is not a non-negative integer vector");
    r->theta_bar_expansion_.push_back(q.numerator());
  }

  r->witness_ = wonderful::exceptional_witness(*inv);
  return r;
}

Coweight RestrictedRootSystem::coroot_bar(std::size_t alpha) const {
  const RootSystem& rs = roots();
  const Weight a = Weight::unit(rs.rank(), alpha);
  const Weight img = inv_->apply(a);
  const Coweight av = rs.simple_coroot(alpha);
  switch (inv_->classify(alpha)) {
    case SimpleCase::Real: return Rational(1, 2) * av;
    case SimpleCase::Orthogonal: return Rational(1, 2) * (av - rs.coroot(img));
    case SimpleCase::Nonreduced: return av - rs.coroot(img);
  }
  return av;
}

Coweight RestrictedRootSystem::coroot_hat(std::size_t alpha) const {
  const Coweight bar = coroot_bar(alpha);
  return inv_->classify(alpha) == SimpleCase::Nonreduced ? Rational(1, 2) * bar : bar;
}

}  // namespace wonderful
