#include "wonderful/vmrt.hpp"

#include <algorithm>

namespace wonderful {

const char* to_string(OrbitType t) { return t == OrbitType::Min ? "O_min" : "O_sum_sigma"; }

namespace {

std::int64_t integral(const Rational& q, const char* what) {
  if (q.denominator() != 1) throw ConsistencyError(std::string(what) + " is not an integer: " + to_string(q));
  return q.numerator();
}

}  // namespace

Weight kappa(const Involution& inv) {
  const RootSystem& rs = inv.roots();
  Weight k(rs.rank());
  for (const auto& beta : rs.positive_roots()) {
    const Weight img = inv.apply(beta);
    if (img.is_nonpositive()) {
      k += beta;
    } else if (img != beta) {
      throw ConsistencyError("a positive root stays positive without being fixed by sigma");
    }
  }
  return k;
}

Weight sigma_sum(const RestrictedRootSystem& rrs) {
  Weight s(rrs.roots().rank());
  for (const auto& a : rrs.simple()) s += a;
  return s;
}

Dimensions dimensions(const RestrictedRootSystem& rrs) {
  const RootSystem& rs = rrs.roots();
  const Coweight& tv = rrs.theta_bar_covector();
  const Weight k = kappa(rrs.involution());
  const Weight s = sigma_sum(rrs);
  const std::int64_t tk = integral(rs.pair(tv, k), "<theta-bar coroot, kappa>");
  Dimensions d;
  d.boundary_degree = integral(rs.pair(tv, s), "boundary degree");
  if (d.boundary_degree != 1 && d.boundary_degree != 2)
    throw ConsistencyError("boundary degree " + std::to_string(d.boundary_degree) + " is neither 1 nor 2");
  d.dim_family = tk + d.boundary_degree - 2;
  d.dim_nilpotent_orbit = 2 * tk;
  d.dim_hc = tk - 1;
  return d;
}

bool sigma_theta_is_minus_theta(const RestrictedRootSystem& rrs) {
  return rrs.involution().apply(rrs.theta()) == -rrs.theta();
}

bool sigma_theta_column(const RestrictedRootSystem& rrs) {
  const Involution& inv = rrs.involution();
  if (!inv.is_group_type()) return sigma_theta_is_minus_theta(rrs);
  const Weight& t = rrs.theta();
  Weight swapped(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) swapped[inv.epsilon(i)] = t[i];
  return inv.apply(t) == -swapped;
}

OrbitType orbit_type(const RestrictedRootSystem& rrs) {
  return sigma_theta_is_minus_theta(rrs) ? OrbitType::Min : OrbitType::SumSigma;
}

std::int64_t dim_minimal_orbit(const RootSystem& rs, std::size_t component) {
  const Weight theta = rs.highest_roots(component).first;
  Weight rho2(rs.rank());
  for (const auto& beta : rs.positive_roots()) {
    const auto first = std::find_if(beta.c.begin(), beta.c.end(), [](auto x) { return x != 0; });
    if (rs.component_of(static_cast<std::size_t>(first - beta.c.begin())) == component) rho2 += beta;
  }
  return integral(rs.pair(rs.coroot(theta), rho2), "<theta coroot, 2 rho>");
}

std::int64_t graded_orbit_dimension(const RestrictedRootSystem& rrs) {
  const RootSystem& rs = rrs.roots();
  const Weight& t = rrs.theta();
  const Coweight h = rs.coroot(t) - rs.coroot(rrs.involution().apply(t));
  std::int64_t g1 = 0, g2 = 0;
  for (const auto& beta : rs.roots()) {
    const Rational v = rs.pair(h, beta);
    if (v == 1) ++g1;
    if (v == 2) ++g2;
  }
  return g1 + 2 * g2;
}

std::int64_t dim_isotropy_complement(const Involution& inv) {
  const RootSystem& rs = inv.roots();
  std::int64_t moved = 0;
  for (const auto& beta : rs.roots())
    if (inv.apply(beta) != beta) ++moved;
  if (moved % 2) throw ConsistencyError("odd number of roots moved by sigma");
  // r = dimension of the −1 eigenspace of σ on the root lattice.
  std::vector<std::vector<Rational>> span;
  for (std::size_t i = 0; i < rs.rank(); ++i)
    span.push_back(to_rational(Weight::unit(rs.rank(), i) - inv.apply(Weight::unit(rs.rank(), i))));
  return static_cast<std::int64_t>(rank_of(span)) + moved / 2;
}

bool is_fano(const RestrictedRootSystem& rrs) {
  const Involution& inv = rrs.involution();
  const TypeLabel t = normalize(rrs.type());
  const bool a_or_b = t.family == "A" || t.family == "B";
  const bool plain = inv.satake().black_nodes.empty() && inv.epsilon_is_identity();
  return !(plain && !a_or_b);
}

std::vector<SpaceDescriptor> hc_descriptors(const KacDiagram& kd, bool hermitian, bool exceptional) {
  const auto marks = marked_diagrams(kd);
  std::vector<SpaceDescriptor> out;
  const std::size_t count = (hermitian && !exceptional) ? 2 : 1;
  for (std::size_t i = 0; i < count && i < marks.size(); ++i) out.push_back(component_descriptor(kd, marks[i]));
  return out;
}

VmrtReport vmrt_report(const CurveClassModel& model, const KacDiagram& kd, const StoredFacts& facts) {
  const RestrictedRootSystem& rrs = model.restricted();
  const Involution& inv = rrs.involution();
  VmrtReport r;
  r.restricted_type = rrs.type();
  r.rank = rrs.rank();
  r.sigma_theta_is_minus_theta = sigma_theta_column(rrs);
  r.orbit_type = orbit_type(rrs);
  r.dims = dimensions(rrs);
  r.dim_p = dim_isotropy_complement(inv);
  r.hermitian = facts.hermitian;
  r.exceptional = rrs.exceptional();
  r.fano = is_fano(rrs);
  r.picard_rank = model.picard_rank();
  r.minimal_classes = model.minimal_classes();
  r.embedding_degree = facts.embedding_degree;
  r.kappa = kappa(inv);
  r.sigma_sum = sigma_sum(rrs);

  for (const auto& d : hc_descriptors(kd, facts.hermitian, r.exceptional))
    r.hc_components.push_back({name_space(d), d.dimension});

  const TypeLabel t = normalize(rrs.type());
  if (t.family == "A" && t.rank == 1) {
    r.vmrt_components.push_back({"P^" + std::to_string(r.dim_p - 1), r.dim_p - 1});
  } else if (t.family == "A") {
    const auto key = parse_name(facts.type_a_vmrt);
    if (key.size() != 1) throw DataError("type A VMRT must have one component: " + facts.type_a_vmrt);
    r.vmrt_components.push_back({facts.type_a_vmrt, dimension_of(key.front())});
  } else {
    r.vmrt_components = r.hc_components;
  }
  return r;
}

}  // namespace wonderful
