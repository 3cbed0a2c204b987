#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wonderful/invariants.hpp"
#include "wonderful/report.hpp"

#include <fstream>
#include <sstream>

using namespace wonderful;

namespace {

Weight W(std::vector<std::int64_t> v) { return Weight(std::move(v)); }

RootSystemPtr simple(char t, int r) { return RootSystem::build({{t, r}}); }

InvolutionPtr inv(char t, int r, std::vector<std::size_t> black, std::vector<std::size_t> eps = {}) {
  return Involution::build({simple(t, r), std::move(black), std::move(eps)});
}

InvolutionPtr group_a1() {
  return Involution::build({RootSystem::build({{'A', 1}, {'A', 1}}), {}, {1, 0}});
}

SymmetricSpaceRecord rec(const std::string& family, const Params& p = {}) {
  return build_record(instantiate(family, p));
}

}  // namespace

TEST_CASE("root counts and highest roots") {
  auto a2 = simple('A', 2);
  CHECK(a2->root_count() == 6);
  CHECK(a2->highest_root() == W({1, 1}));
  auto g2 = simple('G', 2);
  CHECK(g2->root_count() == 12);
  CHECK(g2->highest_root() == W({3, 2}));
  auto a1a1 = RootSystem::build({{'A', 1}, {'A', 1}});
  CHECK(a1a1->root_count() == 4);
  CHECK(simple('A', 3)->highest_root() == W({1, 1, 1}));
  auto b2 = simple('B', 2);
  CHECK(b2->highest_roots(0).first == W({1, 2}));
  CHECK(b2->highest_roots(0).second == W({1, 1}));
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'D', 5}, {'C', 4}})
    CHECK(simple(t, r)->root_count() == expected_root_count(t, r));
  CHECK(simple('E', 8)->root_count() == 240);
}

TEST_CASE("invalid root system input") {
  CHECK_THROWS_AS(simple('A', 0), InputError);
  CHECK_THROWS_AS(simple('E', 9), InputError);
  CHECK_THROWS_AS(simple('H', 3), InputError);
  CHECK_THROWS_AS(RootSystem::build({{'A', 1}, {'A', 1}})->highest_root(), InputError);
}

TEST_CASE("Cartan pairings") {
  auto b2 = simple('B', 2);
  CHECK(b2->pairing(1, W({1, 0})) == -2);
  CHECK(b2->pairing(0, W({1, 0})) == 2);
  CHECK(simple('A', 2)->pairing(0, W({0, 1})) == -1);
}

TEST_CASE("reflections and words") {
  auto b2 = simple('B', 2);
  CHECK(b2->reflect(1, W({1, 0})) == W({1, 2}));
  CHECK(b2->reflect(0, W({1, 0})) == W({-1, 0}));
  CHECK(simple('A', 2)->reflect(0, W({0, 1})) == W({1, 1}));

  auto a3 = simple('A', 3);
  CHECK(a3->longest_subsystem_word({}).empty());
  const auto w = a3->longest_subsystem_word({1});
  CHECK(w == std::vector<std::size_t>{1});
  CHECK(a3->word_matrix(w).apply(W({1, 0, 0})) == W({1, 1, 0}));

  auto a2 = simple('A', 2);
  const auto w0 = a2->longest_subsystem_word({0, 1});
  CHECK(w0.size() == 3);
  CHECK(a2->word_matrix(w0).apply(W({1, 0})) == W({0, -1}));
}

TEST_CASE("two rho") {
  CHECK(simple('A', 2)->two_rho() == W({2, 2}));
  CHECK(simple('A', 1)->two_rho() == W({1}));
  CHECK(simple('B', 2)->two_rho() == W({3, 4}));
}

TEST_CASE("type recognition") {
  auto m = identify_cartan(bourbaki_cartan('F', 4));
  REQUIRE(m);
  CHECK(m->type == 'F');
  CHECK(m->rank == 4);
  auto d3 = identify_cartan(bourbaki_cartan('D', 3));
  REQUIRE(d3);
  CHECK(d3->type == 'A');
}

TEST_CASE("lattice involutions") {
  auto split = inv('A', 3, {});
  CHECK(split->matrix() == -IntMatrix::identity(3));
  CHECK(split->classify(0) == SimpleCase::Real);

  auto aii = inv('A', 3, {0, 2});
  CHECK(aii->apply(W({0, 1, 0})) == W({-1, -1, -1}));

  auto aiii = inv('A', 3, {1}, {2, 1, 0});
  CHECK(aiii->apply(W({1, 0, 0})) == W({0, -1, -1}));
  CHECK(aiii->classify(0) == SimpleCase::Nonreduced);

  CHECK(group_a1()->classify(0) == SimpleCase::Orthogonal);
}

TEST_CASE("inconsistent Satake data is rejected") {
  CHECK_THROWS_AS(RestrictedRootSystem::build(inv('A', 5, {0, 2})), ConsistencyError);
  CHECK_THROWS_AS(inv('A', 3, {}, {1, 0, 2}), ConsistencyError);
  CHECK_THROWS_AS(inv('A', 3, {7}), InputError);
}

TEST_CASE("restricted root systems") {
  auto aii = RestrictedRootSystem::build(inv('A', 3, {0, 2}));
  CHECK(aii->type() == TypeLabel{"A", 1});
  REQUIRE(aii->simple().size() == 1);
  CHECK(aii->simple()[0] == W({1, 2, 1}));

  auto aiii = RestrictedRootSystem::build(inv('A', 3, {1}, {2, 1, 0}));
  CHECK(aiii->type() == TypeLabel{"BC", 1});
  CHECK(aiii->exceptional());
  REQUIRE(aiii->exceptional_witness());
  CHECK(aiii->exceptional_witness()->first == 0);
  CHECK(aiii->exceptional_witness()->second == 2);

  auto bdii = RestrictedRootSystem::build(inv('B', 2, {1}));
  CHECK(bdii->type() == TypeLabel{"A", 1});
  CHECK(bdii->simple()[0] == W({2, 2}));

  CHECK_FALSE(RestrictedRootSystem::build(inv('A', 3, {}))->exceptional());
  for (int n = 3; n <= 6; ++n)
    for (int r = 1; 2 * r <= n; ++r) {
      if (2 * r == n && r < 2) continue;
      CHECK_FALSE(rec("CII", {{"n", n}, {"r", r}}).restricted->exceptional());
    }
}

TEST_CASE("colors and minimal classes") {
  auto split = inv('A', 3, {});
  CHECK(lambda_weight(*split, 0) == std::vector<std::int64_t>{2, 0, 0});
  CHECK(lambda_weight(*group_a1(), 0) == std::vector<std::int64_t>{1, 1});
  CHECK(lambda_weight(*inv('A', 3, {1}, {2, 1, 0}), 0) == std::vector<std::int64_t>{1, 0, 0});

  CurveClassModel bdii(RestrictedRootSystem::build(inv('B', 2, {1})));
  CHECK(bdii.minimal_classes() == std::vector<CurveClass>{{1}});
  CHECK(bdii.psi({0}).c == std::vector<Rational>(2, Rational(0)));
  auto cc = bdii.cocharacter_curve(bdii.restricted().theta_bar_covector());
  CHECK_FALSE(cc.is_embedding);

  CurveClassModel aiii(RestrictedRootSystem::build(inv('A', 3, {1}, {2, 1, 0})));
  CHECK(aiii.minimal_classes() == std::vector<CurveClass>{{1, 0}, {0, 1}});
  CHECK(aiii.cocharacter_curve(aiii.restricted().theta_bar_covector()).is_embedding);

  CurveClassModel grp(RestrictedRootSystem::build(group_a1()));
  CHECK(grp.minimal_classes() == std::vector<CurveClass>{{1}});

  auto zero = bdii.cocharacter_curve(Coweight(2));
  CHECK(zero.orbit_at_zero.empty());
  CHECK(zero.orbit_at_infinity.empty());
}

TEST_CASE("orbit and dimension helpers") {
  CHECK(orbit_type(*rec("AI", {{"r", 3}}).restricted) == OrbitType::Min);
  CHECK(orbit_type(*rec("BDII", {{"n", 5}}).restricted) == OrbitType::SumSigma);
  CHECK(orbit_type(*rec("AII", {{"r", 2}}).restricted) == OrbitType::SumSigma);
  CHECK(dim_minimal_orbit(*simple('A', 3)) == 6);
  CHECK(dim_minimal_orbit(*simple('B', 2)) == 4);
  CHECK(dim_minimal_orbit(*simple('G', 2)) == 6);
  CHECK(dim_isotropy_complement(*inv('A', 1, {})) == 2);
  CHECK(dim_isotropy_complement(*inv('B', 2, {1})) == 4);
  CHECK(dim_isotropy_complement(*group_a1()) == 3);
  CHECK_FALSE(rec("CI", {{"r", 3}}).report.fano);
  CHECK(rec("AI", {{"r", 3}}).report.fano);
  CHECK_FALSE(rec("G").report.fano);
}

TEST_CASE("worked instances") {
  auto check_dims = [](const SymmetricSpaceRecord& r, std::int64_t b, std::int64_t f, std::int64_t o, std::int64_t h) {
    CHECK(r.report.dims.boundary_degree == b);
    CHECK(r.report.dims.dim_family == f);
    CHECK(r.report.dims.dim_nilpotent_orbit == o);
    CHECK(r.report.dims.dim_hc == h);
  };
  auto bdii = rec("BDII", {{"n", 5}});
  check_dims(bdii, 2, 3, 6, 2);
  REQUIRE(bdii.report.vmrt_components.size() == 1);
  CHECK(bdii.report.vmrt_components[0].name == "P^3");
  CHECK(bdii.report.embedding_degree == "O(1)");

  auto aiii = rec("AIII", {{"n", 4}, {"r", 1}});
  check_dims(aiii, 1, 2, 6, 2);
  CHECK(aiii.report.minimal_classes.size() == 2);

  auto grp = rec("Group", {{"type", 'A'}, {"r", 1}});
  check_dims(grp, 2, 2, 4, 1);
  CHECK(grp.report.picard_rank == 1);

  auto ci = rec("CI", {{"r", 3}});
  REQUIRE(ci.report.hc_components.size() == 2);
  CHECK(same_variety(ci.report.hc_components[0].name + " | " + ci.report.hc_components[1].name, "P^2 | P^2"));
  CHECK(ci.report.dims.dim_hc == 2);
  CHECK(ci.report.embedding_degree == "O(2)");

  auto eiv = rec("EIV");
  CHECK(eiv.report.restricted_type == TypeLabel{"A", 2});
  CHECK(eiv.report.orbit_type == OrbitType::SumSigma);
  CHECK(eiv.report.vmrt_components[0].name == "E6/P6");
}

TEST_CASE("Kac diagrams and names") {
  auto fii = instantiate("FII", {}).kac;
  CHECK(marked_diagrams(fii).size() == 1);
  CHECK(name_space(component_descriptor(fii, marked_diagrams(fii)[0])) == "OG(4,9)");

  auto ci6 = instantiate("CI", {{"r", 6}}).kac;
  const auto marks = marked_diagrams(ci6);
  REQUIRE(marks.size() == 2);
  CHECK(name_space(component_descriptor(ci6, marks[0])) == "P^5");
  CHECK(name_space(component_descriptor(ci6, marks[1])) == "(P^5)*");

  CHECK(marked_diagrams(instantiate("AI", {{"r", 1}}).kac).size() == 2);

  auto a35 = instantiate("AIII", {{"n", 8}, {"r", 3}}).kac;
  const auto m2 = marked_diagrams(a35);
  REQUIRE(m2.size() == 2);
  CHECK(same_variety(name_space(component_descriptor(a35, m2[0])), "P^2 x P^4"));
  CHECK(same_variety(name_space(component_descriptor(a35, m2[1])), "P^2 x P^4"));

  CHECK(factor_name(Factor{'A', 4, {1}}) == "P^4");
  CHECK(factor_name(Factor{'B', 4, {4}}) == "OG(4,9)");
  CHECK(name_space(SpaceDescriptor{{Factor{'A', 1, {1}}, Factor{'A', 1, {1}}}, 2}) == "P^1 x P^1");
  CHECK(to_unicode("P^1 x P^1") == "P¹×P¹");
  CHECK(to_unicode("P^2 | (P^2)*") == "P² ⊔ (P²)∨");
  CHECK(to_unicode("E6/P6") == "E₆/P₆");

  CHECK(same_variety("Q_2", "P^1 x P^1"));
  CHECK(same_variety("C3/P1", "P^5"));
  CHECK(same_variety("G2/P1", "Q_5"));
  CHECK(dimension_of(parse_name("Gr(2,5)").front()) == 6);
  CHECK(dimension_of(parse_name("LG(3,6)").front()) == 6);
  CHECK_THROWS(parse_name("Q_0"));
  CHECK_THROWS_AS(affine_diagram("H3^(1)"), DataError);
}

TEST_CASE("catalog instantiation") {
  auto aii = instantiate("AII", {{"r", 2}});
  CHECK(aii.ambient == std::vector<std::pair<char, int>>{{'A', 5}});
  CHECK(aii.black == std::vector<std::size_t>{0, 2, 4});
  CHECK(build_record(aii).report.restricted_type == TypeLabel{"A", 2});
  CHECK(rec("BDII", {{"n", 5}}).report.restricted_type == TypeLabel{"A", 1});

  auto eq = instantiate("AIII", {{"n", 4}, {"r", 2}});
  CHECK(eq.expected.row == "AIII-equal");
  CHECK(eq.expected.restricted_type == "C2");

  CHECK_THROWS_AS(instantiate("AI", {{"r", 0}}), InputError);
  CHECK_THROWS_AS(instantiate("AIII", {{"n", 4}, {"r", 3}}), InputError);
  CHECK_THROWS_AS(instantiate("AI", {{"q", 2}}), InputError);
  CHECK_THROWS_AS(instantiate("XI", {}), InputError);
  CHECK_THROWS_AS(parse_params("n=four"), InputError);
  CHECK(parse_params("n=4, r=1") == Params{{"n", 4}, {"r", 1}});
}

TEST_CASE("enumeration") {
  CHECK_THROWS_AS(enumerate(1), InputError);
  auto labels = [](int m) {
    std::vector<std::string> out;
    for (const auto& d : enumerate(m)) out.push_back(d.label());
    return out;
  };
  const auto two = labels(2);
  for (const char* want : {"Group type=A,r=1", "Group type=A,r=2", "AI r=1", "AI r=2", "BDII n=5", "G"})
    CHECK(std::find(two.begin(), two.end(), want) != two.end());
  const auto eight = labels(8);
  for (const char* want : {"EI", "EII", "EIII", "EIV", "EV", "EVI", "EVII", "EVIII", "EIX", "FI", "FII", "G"})
    CHECK(std::find(eight.begin(), eight.end(), want) != eight.end());
  CHECK(eight.size() >= 60);
  CHECK(enumerate(8) == enumerate(8));
}

TEST_CASE("split families have sigma = -id") {
  for (const auto& d : enumerate(8)) {
    if (d.family != "AI" && d.family != "CI" && d.family != "DI" && d.family != "EI" && d.family != "EV" &&
        d.family != "EVIII" && d.family != "FI" && d.family != "G")
      continue;
    auto r = build_record(d);
    const std::size_t n = r.involution->roots().rank();
    CHECK_MESSAGE(r.involution->matrix() == -IntMatrix::identity(n), d.label());
    CHECK_MESSAGE(normalize(r.restricted->type()) == normalize(TypeLabel{std::string(1, d.ambient[0].first), d.ambient[0].second}),
                  d.label());
  }
}

TEST_CASE("validation flags tampered records") {
  auto d = instantiate("EII", {});
  d.epsilon = {0, 1, 2, 3, 4, 5};
  bool named = false;
  for (const auto& c : validate(d)) named = named || (c.check == "restricted-type" && !c.passed);
  CHECK(named);

  auto k = instantiate("FII", {});
  k.kac.colors[3] = 'w';
  bool kac_failed = false;
  for (const auto& c : validate(k)) kac_failed = kac_failed || (c.check == "hermitian-kac" && !c.passed);
  CHECK(kac_failed);
}

TEST_CASE("catalog file round trip") {
  const auto items = enumerate(8);
  std::ostringstream os;
  write_catalog(os, items);
  std::istringstream is(os.str());
  CHECK(read_catalog(is) == items);

  std::istringstream bad("format 2\n");
  CHECK_THROWS_AS(read_catalog(bad), DataError);
  std::istringstream short_line("format 1\nAI ; r=2\n");
  CHECK_THROWS_AS(read_catalog(short_line), DataError);
}

TEST_CASE("shipped data file matches the templates") {
  std::ifstream in(WONDERFUL_DATA_DIR "/catalog.txt");
  REQUIRE(in);
  std::ostringstream want;
  write_catalog(want, enumerate(8));
  std::ostringstream got;
  got << in.rdbuf();
  CHECK(got.str() == want.str());
}

TEST_CASE("report JSON is ASCII and round-trips") {
  for (const auto& d : enumerate(4)) {
    const auto j = report_json(build_record(d));
    const std::string text = j.dump(2, ' ', true);
    CHECK(std::all_of(text.begin(), text.end(), [](char c) { return static_cast<unsigned char>(c) < 128; }));
    CHECK(nlohmann::ordered_json::parse(text).dump(2, ' ', true) == text);
  }
  const auto j = report_json(rec("BDII", {{"n", 5}}));
  CHECK(j["dim_family"] == 3);
  CHECK(j["vmrt"][0]["name"] == "P^3");
}

TEST_CASE("table rows") {
  const auto row = table_row(rec("G"), false);
  CHECK(row[2] == "G₂");
  CHECK(row[3] == "P¹×P¹");
  CHECK(row[5] == "O(1,3)");
  CHECK(row[6] == "yes");
  CHECK(row[7] == "");
  CHECK(row[8] == "no");
}
