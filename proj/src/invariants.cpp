#include "wonderful/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace wonderful {

namespace {

struct Suite {
  std::string prefix;
  std::vector<CheckResult> out;

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    out.push_back({prefix + "/" + name, ok, ok ? "" : detail});
  }
};

std::string str(const Rational& q) { return to_string(q); }

bool roots_equal(const RootSystem& rs, const std::vector<Weight>& img) {
  std::set<Weight> a(img.begin(), img.end());
  const auto all = rs.roots();
  return a == std::set<Weight>(all.begin(), all.end());
}

}  // namespace

std::vector<CheckResult> root_core_suite(const RootSystem& rs) {
  Suite s{"root-core", {}};
  std::size_t expected = 0;
  for (const auto& c : rs.components()) expected += expected_root_count(c.type, c.rank);
  s.check("root-count", rs.root_count() == expected,
          std::to_string(rs.root_count()) + " roots, expected " + std::to_string(expected));

  bool stable = true;
  const auto all = rs.roots();
  for (std::size_t i = 0; i < rs.rank() && stable; ++i) {
    std::vector<Weight> img;
    for (const auto& b : all) img.push_back(rs.reflect(i, b));
    stable = roots_equal(rs, img);
  }
  s.check("reflection-stability", stable, "some simple reflection does not permute the roots");

  bool w0_ok = true;
  for (std::size_t k = 0; k < rs.components().size(); ++k) {
    const Weight t = rs.highest_roots(k).first;
    w0_ok = w0_ok && rs.w0().apply(t) == -t;
  }
  s.check("w0-highest-root", w0_ok, "w0 does not send the highest root to its negative");
  return s.out;
}

std::vector<CheckResult> dimension_suite(const SymmetricSpaceRecord& rec) {
  Suite s{"dimension", {}};
  const RestrictedRootSystem& rrs = *rec.restricted;
  const RootSystem& rs = rrs.roots();
  const Dimensions& d = rec.report.dims;
  const Coweight& tv = rrs.theta_bar_covector();
  const Rational tk = rs.pair(tv, kappa(rrs.involution()));
  const Rational tks = rs.pair(tv, kappa(rrs.involution()) + sigma_sum(rrs));
  s.check("family", Rational(d.dim_family) == tks - 2,
          "dim K_x = " + std::to_string(d.dim_family) + ", <theta-bar coroot, kappa + Sigma> - 2 = " + str(tks - 2));
  s.check("hc", Rational(d.dim_hc) == tk - 1,
          "dim H.C = " + std::to_string(d.dim_hc) + ", <theta-bar coroot, kappa> - 1 = " + str(tk - 1));
  s.check("legendrian", d.dim_family == d.dim_hc + d.boundary_degree - 1,
          "dim K_x != dim H.C + boundary degree - 1");
  s.check("orbit-even", d.dim_nilpotent_orbit % 2 == 0 && d.dim_nilpotent_orbit > 0,
          "dim G.m = " + std::to_string(d.dim_nilpotent_orbit));
  return s.out;
}

std::vector<CheckResult> nilpotent_suite(const SymmetricSpaceRecord& rec) {
  Suite s{"nilpotent", {}};
  const RestrictedRootSystem& rrs = *rec.restricted;
  const RootSystem& rs = rrs.roots();
  const std::int64_t orbit = rec.report.dims.dim_nilpotent_orbit;
  if (sigma_theta_is_minus_theta(rrs)) {
    const std::int64_t m = dim_minimal_orbit(rs, 0);
    s.check("minimal-orbit", orbit == m,
            "2<theta-bar coroot, kappa> = " + std::to_string(orbit) + ", minimal orbit has dimension " +
                std::to_string(m));
  } else {
    const std::int64_t g = graded_orbit_dimension(rrs);
    s.check("graded-orbit", orbit == g,
            "2<theta-bar coroot, kappa> = " + std::to_string(orbit) + ", #g(1) + 2#g(2) = " + std::to_string(g));
  }
  return s.out;
}

std::vector<CheckResult> restricted_suite(const SymmetricSpaceRecord& rec) {
  Suite s{"restricted", {}};
  const RestrictedRootSystem& rrs = *rec.restricted;
  const Involution& inv = rrs.involution();
  const RootSystem& rs = rrs.roots();
  const Weight& tb = rrs.theta_bar();

  bool maximal = rrs.restricted_roots().count(tb) > 0;
  for (const auto& b : rrs.restricted_roots()) {
    if (!maximal) break;
    const Weight diff = tb - b;
    if (diff.is_zero()) continue;
    bool nonneg = true;
    if (rrs.restricted_roots().count(diff)) {
      const auto& c = rrs.coordinates(diff);
      nonneg = std::all_of(c.begin(), c.end(), [](auto x) { return x >= 0; });
    } else {
      std::vector<std::vector<Rational>> cols;
      for (const auto& a : rrs.simple()) cols.push_back(to_rational(a));
      const auto x = solve_exact(cols, to_rational(diff));
      nonneg = x && std::all_of(x->begin(), x->end(), [](const Rational& q) { return q >= 0; });
    }
    maximal = nonneg;
  }
  s.check("theta-bar-maximal", maximal, "theta-bar is not dominance-maximal among restricted roots");

  const IntMatrix& w0 = rs.w0();
  s.check("w0-commutes", w0 * inv.matrix() == inv.matrix() * w0, "w0 sigma != sigma w0");
  s.check("w0-theta-bar", w0.apply(tb) == -tb, "w0 does not negate theta-bar");

  bool two = true;
  bool some_one = false;
  for (std::size_t a : inv.delta1()) {
    const Weight ab = Weight::unit(rs.rank(), a) - inv.apply(Weight::unit(rs.rank(), a));
    two = two && rs.pair(rrs.coroot_bar(a), ab) == 2;
    some_one = some_one || inv.self_pairing(a) == 1;
  }
  s.check("coroot-pairing", two, "<restricted coroot, restricted root> != 2");
  s.check("bc-criterion", rrs.non_reduced() == some_one,
          std::string("non-reduced = ") + (rrs.non_reduced() ? "yes" : "no") + ", some <a coroot, sigma a> = 1 is " +
              (some_one ? "yes" : "no"));

  std::size_t doubled = 0;
  for (const auto& a : rrs.simple())
    if (rrs.restricted_roots().count(a + a)) ++doubled;
  s.check("doubled-unique", doubled <= 1, std::to_string(doubled) + " doubled simple restricted roots");
  s.check("exceptional-criterion", rrs.exceptional() == (rs.simply_laced() && rrs.non_reduced()),
          "exceptional flag differs from (simply laced and non-reduced)");

  bool dominance = true;
  for (std::size_t a : inv.delta1()) {
    const Weight ab = Weight::unit(rs.rank(), a) - inv.apply(Weight::unit(rs.rank(), a));
    dominance = dominance && rs.pairing(a, ab) > 0 && rs.pairing(inv.sigma_bar(a), ab) > 0;
    for (std::size_t j = 0; j < rs.rank(); ++j)
      if (inv.is_black(j) && ab[j] > 0) dominance = dominance && rs.pairing(j, ab) == 0;
  }
  s.check("dominance-on-support", dominance, "some restricted simple root is not dominant on its support");

  const Weight& t = rrs.theta();
  const Weight st = inv.apply(t);
  if (st != -t) {
    const Weight u = -st;
    const bool strong = rs.pair(rs.coroot(t), u) == 0 && !rs.is_root(t + u) && !rs.is_root(t - u) &&
                        rs.is_long(t) && rs.is_long(u);
    s.check("strong-orthogonality", strong, "theta and -sigma(theta) are not strongly orthogonal long roots");

    // −σ(Θ) is the highest root of a component of the subsystem spanned by
    // simple roots orthogonal to Θ.
    std::vector<bool> perp(rs.rank());
    for (std::size_t j = 0; j < rs.rank(); ++j) perp[j] = rs.pairing(j, t) == 0;
    std::size_t start = rs.rank();
    for (std::size_t j = 0; j < rs.rank(); ++j)
      if (u[j] != 0) start = std::min(start, j);
    bool ok = rs.is_positive_root(u) && start < rs.rank() && perp[start];
    if (ok) {
      std::vector<std::size_t> stack = {start};
      std::vector<bool> seen(rs.rank());
      seen[start] = true;
      while (!stack.empty()) {
        const std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < rs.rank(); ++j)
          if (perp[j] && !seen[j] && rs.cartan()(i, j) != 0) {
            seen[j] = true;
            stack.push_back(j);
          }
      }
      for (std::size_t j = 0; j < rs.rank(); ++j) {
        if (u[j] != 0 && !seen[j]) ok = false;
        if (seen[j] && rs.pairing(j, u) < 0) ok = false;
      }
    }
    s.check("perp-highest-root", ok, "-sigma(theta) is not the highest root of a component of the orthogonal subsystem");
  }

  if (normalize(rrs.type()) != TypeLabel{"A", 1}) {
    const Coweight& tv = rrs.theta_bar_covector();
    bool unit = false;
    for (const auto& a : rrs.simple()) unit = unit || rs.pair(tv, a) == 1;
    std::int64_t g = 0;
    bool integral = true;
    for (std::size_t j = 0; j < rs.rank(); ++j) {
      const Rational v = Rational(2) * rs.pair(tv, Weight::unit(rs.rank(), j));
      if (v.denominator() != 1) integral = false;
      g = std::gcd(g, v.numerator());
    }
    s.check("theta-bar-unit", unit, "no restricted simple root pairs to 1 with the theta-bar coroot");
    s.check("indivisible", integral && g == 1,
            "2 theta-bar coroot is not an indivisible cocharacter (gcd " + std::to_string(g) + ")");
  }
  return s.out;
}

std::vector<CheckResult> curve_suite(const SymmetricSpaceRecord& rec) {
  Suite s{"curves", {}};
  const CurveClassModel& m = *rec.curves;
  const RestrictedRootSystem& rrs = m.restricted();
  const RootSystem& rs = rrs.roots();
  const auto& classes = m.minimal_classes();
  const std::size_t want = rrs.exceptional() ? 2 : 1;
  s.check("class-count", classes.size() == want,
          std::to_string(classes.size()) + " minimal classes, expected " + std::to_string(want));
  if (classes.size() != want) return s.out;

  bool psi_ok = true;
  for (const auto& g : classes) {
    psi_ok = psi_ok && m.psi(g) == rrs.theta_bar_covector() &&
             std::all_of(g.begin(), g.end(), [](auto x) { return x >= 0; });
  }
  s.check("psi-theta-bar", psi_ok, "psi of a minimal class is not the theta-bar coroot");

  bool integral = true;
  for (std::size_t k = 0; k < rrs.rank(); ++k)
    for (std::size_t c = 0; c < rrs.rank(); ++c)
      integral = integral && rs.pair(rrs.simple_coroot_hat(c), rrs.simple()[k]).denominator() == 1;
  s.check("boundary-integral", integral, "boundary pairing is not integral");

  if (rrs.exceptional()) {
    const auto [a, b] = *rrs.exceptional_witness();
    const std::size_t ca = m.color_of(a), cb = m.color_of(b);
    const bool pattern = ca != cb && classes[0][ca] == 1 && classes[0][cb] == 0 && classes[1][ca] == 0 &&
                         classes[1][cb] == 1;
    s.check("exceptional-pattern", pattern, "minimal classes do not restrict to (1,0) and (0,1)");
  }

  const CocharacterCurve curve = m.cocharacter_curve(rrs.theta_bar_covector());
  const CurveClass got = m.class_of(curve);
  CurveClass expect(classes[0].size());
  for (std::size_t i = 0; i < expect.size(); ++i)
    expect[i] = classes.size() == 1 ? 2 * classes[0][i] : classes[0][i] + classes[1][i];
  s.check("cocharacter-class", got == expect, "theta-bar cocharacter curve class differs from the minimal classes");
  return s.out;
}

std::vector<CheckResult> invariant_checks(const SymmetricSpaceRecord& rec) {
  std::vector<CheckResult> out = root_core_suite(rec.involution->roots());
  for (auto suite : {dimension_suite, nilpotent_suite, restricted_suite, curve_suite}) {
    auto part = suite(rec);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

CheckSummary run_checks(const std::vector<InstanceData>& items) {
  CheckSummary sum;
  auto record = [&](const InstanceData& d, const CheckResult& c) {
    auto& [passed, total] = sum.counts[c.check];
    ++total;
    if (c.passed)
      ++passed;
    else
      sum.failures.push_back({d.label(), c.check, c.detail});
  };
  for (const auto& d : items) {
    ++sum.instances;
    for (const auto& c : validate(d)) record(d, c);
    try {
      const SymmetricSpaceRecord rec = build_record(d);
      for (const auto& c : invariant_checks(rec)) record(d, c);
    } catch (const std::exception& ex) {
      record(d, {"build", false, ex.what()});
    }
  }
  return sum;
}

}  // namespace wonderful
