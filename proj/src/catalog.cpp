#include "wonderful/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace wonderful {

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

int get(const Params& p, const std::string& key) {
  for (const auto& [k, v] : p)
    if (k == key) return v;
  throw InputError("missing parameter '" + key + "'");
}

void allow_only(const std::string& family, const Params& p, const std::set<std::string>& keys) {
  for (const auto& [k, v] : p)
    if (!keys.count(k)) throw InputError(family + ": unknown parameter '" + k + "'");
}

void require(bool ok, const std::string& family, const std::string& condition) {
  if (!ok) throw InputError(family + ": parameters violate the condition " + condition);
}

std::vector<std::size_t> zero_based(const std::vector<int>& one_based) {
  std::vector<std::size_t> out;
  for (int i : one_based) out.push_back(static_cast<std::size_t>(i - 1));
  return out;
}

std::vector<std::size_t> identity_perm(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  return p;
}

std::vector<int> range(int a, int b) {  // inclusive
  std::vector<int> out;
  for (int i = a; i <= b; ++i) out.push_back(i);
  return out;
}

std::vector<int> odd_up_to(int b) {
  std::vector<int> out;
  for (int i = 1; i <= b; i += 2) out.push_back(i);
  return out;
}

KacDiagram kac(const std::string& shape, const std::vector<std::size_t>& white) {
  return colored(affine_diagram(shape), white);
}

struct Satake {
  std::vector<std::pair<char, int>> ambient;
  std::vector<std::size_t> black;
  std::vector<std::size_t> epsilon;
};

Satake satake(char type, int rank, const std::vector<int>& black1, const std::vector<std::pair<int, int>>& swaps = {}) {
  Satake s{{{type, rank}}, zero_based(black1), identity_perm(static_cast<std::size_t>(rank))};
  for (auto [a, b] : swaps) std::swap(s.epsilon[a - 1], s.epsilon[b - 1]);
  return s;
}

Expected expect(std::string row, std::string gh, std::string rtype, std::string hc, std::string vmrt,
                std::string emb, bool sigma_theta, std::string herm, bool fano) {
  return Expected{std::move(row), std::move(gh), std::move(rtype), std::move(hc), std::move(vmrt),
                  std::move(emb), sigma_theta, std::move(herm), fano};
}

InstanceData assemble(std::string family, Params params, Satake s, KacDiagram kd, Expected e) {
  return InstanceData{std::move(family), std::move(params), std::move(s.ambient), std::move(s.black),
                      std::move(s.epsilon), std::move(kd), std::move(e)};
}

// SO(n) with a form of signature (p, n − p), p ≤ n − p.
std::pair<Satake, KacDiagram> orthogonal(int n, int p) {
  const int q = n - p;
  if (n % 2 == 1) {
    const int m = (n - 1) / 2;
    Satake s = satake('B', m, range(p + 1, m));
    std::vector<std::size_t> white;
    if (p == 2) {
      white = {0, 1};
    } else {
      white = {static_cast<std::size_t>((p % 2 == 0 ? p : q) / 2)};
    }
    return {s, kac("B" + str(m) + "^(1)", white)};
  }
  const int m = n / 2;
  Satake s;
  if (p <= m - 2) {
    s = (m - p) % 2 ? satake('D', m, range(p + 1, m), {{m - 1, m}}) : satake('D', m, range(p + 1, m));
  } else if (p == m - 1) {
    s = satake('D', m, {}, {{m - 1, m}});
  } else {
    s = satake('D', m, {});
  }
  if (p % 2 == 0) {
    const std::vector<std::size_t> white =
        p == 2 ? std::vector<std::size_t>{0, 1} : std::vector<std::size_t>{static_cast<std::size_t>(p / 2)};
    return {s, kac("D" + str(m) + "^(1)", white)};
  }
  return {s, kac("D" + str(m) + "^(2)", {static_cast<std::size_t>((p - 1) / 2)})};
}

std::string adjoint_variety(char t, int r) {
  switch (t) {
    case 'B': return "OG(2," + str(2 * r + 1) + ")";
    case 'C': return "P^" + str(2 * r - 1);
    case 'D': return "OG(2," + str(2 * r) + ")";
    case 'E': return r == 6 ? "E6/P2" : r == 7 ? "E7/P1" : "E8/P8";
    case 'F': return "F4/P1";
    case 'G': return "G2/P2";
    default: return "";
  }
}

InstanceData group(const Params& p) {
  allow_only("Group", p, {"type", "r"});
  const int code = get(p, "type");
  const int r = get(p, "r");
  if (code < 'A' || code > 'G') throw InputError("Group: type must be one of A..G");
  const char t = static_cast<char>(code);
  bool ok = false;
  switch (t) {
    case 'A': ok = r >= 1; break;
    case 'B': ok = r >= 2; break;
    case 'C': ok = r >= 3; break;
    case 'D': ok = r >= 4; break;
    case 'E': ok = r >= 6 && r <= 8; break;
    case 'F': ok = r == 4; break;
    case 'G': ok = r == 2; break;
    default: break;
  }
  require(ok, "Group", "on Type(H): A_r r>=1, B_r r>=2, C_r r>=3, D_r r>=4, E6-8, F4, G2");
  Satake s{{{t, r}, {t, r}}, {}, {}};
  for (int i = 0; i < 2 * r; ++i) s.epsilon.push_back(static_cast<std::size_t>((i + r) % (2 * r)));
  const std::string h = std::string(1, t) + str(r);
  const std::string gh = h + "x" + h + "/" + h;
  Expected e;
  if (t != 'A') {
    e = expect("Group", gh, h, adjoint_variety(t, r), "H.C", "O(1)", true, "", true);
  } else if (r >= 2) {
    e = expect("Group-A", "SL" + str(r + 1) + "xSL" + str(r + 1) + "/SL" + str(r + 1), h,
               "Flag(1," + str(r) + ")", "P^" + str(r) + " x P^" + str(r), "O(1,1)", true, "", true);
  } else {
    e = expect("Group-A1", "SL2xSL2/SL2", "A1", "P^1", "P^2", "O(1)", true, "", true);
  }
  return assemble("Group", p, s, kac(h + "^(1)", {0}), e);
}

InstanceData ai(const Params& p) {
  allow_only("AI", p, {"r"});
  const int r = get(p, "r");
  require(r >= 1, "AI", "r >= 1");
  const std::string gh = "SL" + str(r + 1) + "/SO" + str(r + 1);
  if (r == 1) {
    return assemble("AI", p, satake('A', 1, {}), kac("A1^(1)", {0, 1}),
                    expect("AI-1", gh, "A1", "pt | pt", "P^1", "O(1)", true, "H.n.e", true));
  }
  const auto l = static_cast<std::size_t>((r + 1) / 2);
  return assemble("AI", p, satake('A', r, {}), kac("A" + str(r) + "^(2)", {r % 2 == 0 ? l : l}),
                  expect("AI", gh, "A" + str(r), "Q_" + str(r - 1), "P^" + str(r), "O(2)", true, "", true));
}

InstanceData aii(const Params& p) {
  allow_only("AII", p, {"r"});
  const int r = get(p, "r");
  require(r >= 2, "AII", "r >= 2");
  const int n = 2 * r + 1;
  return assemble("AII", p, satake('A', n, odd_up_to(n)), kac("A" + str(n) + "^(2)", {0}),
                  expect("AII", "SL" + str(n + 1) + "/Sp" + str(n + 1), "A" + str(r), "IG(2," + str(n + 1) + ")",
                         "Gr(2," + str(n + 1) + ")", "O(1)", false, "", true));
}

InstanceData aiii(const Params& p) {
  allow_only("AIII", p, {"n", "r"});
  const int n = get(p, "n"), r = get(p, "r");
  require(n >= 3 && r >= 1 && 2 * r <= n, "AIII", "1 <= r <= n/2, n >= 3");
  std::vector<std::pair<int, int>> flip;
  for (int i = 1; i < n - i; ++i) flip.push_back({i, n - i});
  Satake s = satake('A', n - 1, range(r + 1, n - r - 1), flip);
  KacDiagram kd = kac("A" + str(n - 1) + "^(1)", {0, static_cast<std::size_t>(r)});
  const std::string gh = "SL" + str(n) + "/S(GL" + str(r) + "xGL" + str(n - r) + ")";
  if (2 * r == n) {
    require(r >= 2, "AIII", "r >= 2 for SL(2r)/S(GL(r)xGL(r))");
    const std::string c = "P^" + str(r - 1) + " x P^" + str(r - 1);
    return assemble("AIII", p, s, kd,
                    expect("AIII-equal", gh, "C" + str(r), c + " | " + c, "H.C", "O(1,1)", true, "H.n.e", true));
  }
  return assemble("AIII", p, s, kd,
                  expect("AIII", gh, "BC" + str(r), "P^" + str(r - 1) + " x P^" + str(n - r - 1), "H.C", "O(1,1)",
                         true, "H.e", true));
}

InstanceData di(const Params& p);

InstanceData bdi(const Params& p) {
  allow_only("BDI", p, {"n", "r"});
  const int n = get(p, "n"), r = get(p, "r");
  if (2 * r == n && r >= 4) return di(Params{{"r", r}});
  require(n >= 5 && r >= 2 && 2 * r + 1 <= n, "BDI", "2 <= r <= (n-1)/2, n >= 5");
  auto [s, kd] = orthogonal(n, r);
  const std::string gh = "SO" + str(n) + "/S(O" + str(r) + "xO" + str(n - r) + ")";
  if (r == 2) {
    const std::string q = "Q_" + str(n - 4);
    return assemble("BDI", p, s, kd, expect("BDI-2", gh, "B2", q + " | " + q, "H.C", "O(1)", true, "H.n.e", true));
  }
  return assemble("BDI", p, s, kd,
                  expect("BDI", gh, "B" + str(r), "Q_" + str(r - 2) + " x Q_" + str(n - r - 2), "H.C", "O(1,1)", true,
                         "", true));
}

InstanceData bdii(const Params& p) {
  allow_only("BDII", p, {"n"});
  const int n = get(p, "n");
  require(n >= 5, "BDII", "n >= 5");
  auto [s, kd] = orthogonal(n, 1);
  return assemble("BDII", p, s, kd,
                  expect("BDII", "SO" + str(n) + "/S(O1xO" + str(n - 1) + ")", "A1", "Q_" + str(n - 3),
                         "P^" + str(n - 2), "O(1)", false, "", true));
}

InstanceData ci(const Params& p) {
  allow_only("CI", p, {"r"});
  const int r = get(p, "r");
  require(r >= 3, "CI", "r >= 3");
  const std::string c = "P^" + str(r - 1);
  return assemble("CI", p, satake('C', r, {}), kac("C" + str(r) + "^(1)", {0, static_cast<std::size_t>(r)}),
                  expect("CI", "Sp" + str(2 * r) + "/GL" + str(r), "C" + str(r), c + " | " + c, "H.C", "O(2)", true,
                         "H.n.e", false));
}

InstanceData cii(const Params& p) {
  allow_only("CII", p, {"n", "r"});
  const int n = get(p, "n"), r = get(p, "r");
  require(r >= 1 && 2 * r <= n, "CII", "1 <= r <= n/2");
  std::vector<int> black = odd_up_to(2 * r - 1);
  for (int i = 2 * r + 1; i <= n; ++i) black.push_back(i);
  Satake s = satake('C', n, black);
  KacDiagram kd = kac("C" + str(n) + "^(1)", {static_cast<std::size_t>(r)});
  const std::string gh = "Sp" + str(2 * n) + "/Sp" + str(2 * r) + "xSp" + str(2 * n - 2 * r);
  if (2 * r == n) {
    require(r >= 2, "CII", "r >= 2 for Sp(4r)/Sp(2r)xSp(2r)");
    return assemble("CII", p, s, kd,
                    expect("CII-equal", gh, "C" + str(r), "P^" + str(2 * r - 1) + " x P^" + str(2 * r - 1), "H.C",
                           "O(1,1)", false, "", true));
  }
  return assemble("CII", p, s, kd,
                  expect("CII", gh, "BC" + str(r), "P^" + str(2 * r - 1) + " x P^" + str(2 * n - 2 * r - 1), "H.C",
                         "O(1,1)", false, "", true));
}

InstanceData di(const Params& p) {
  allow_only("DI", p, {"r"});
  const int r = get(p, "r");
  require(r >= 4, "DI", "r >= 4");
  auto [s, kd] = orthogonal(2 * r, r);
  const std::string q = "Q_" + str(r - 2);
  return assemble("DI", p, s, kd,
                  expect("DI", "SO" + str(2 * r) + "/S(O" + str(r) + "xO" + str(r) + ")", "D" + str(r), q + " x " + q,
                         "H.C", "O(1,1)", true, "", false));
}

InstanceData diii(const Params& p) {
  allow_only("DIII", p, {"n"});
  const int n = get(p, "n");
  require(n >= 3, "DIII", "n >= 3");
  KacDiagram kd = kac("D" + str(n) + "^(1)", {0, static_cast<std::size_t>(n)});
  const std::string gh = "SO" + str(2 * n) + "/GL" + str(n);
  if (n % 2 == 0) {
    const int r = n / 2;
    const std::string g = "Gr(2," + str(2 * r) + ")";
    return assemble("DIII", p, satake('D', n, odd_up_to(n - 1)), kd,
                    expect("DIII-even", gh, "C" + str(r), g + " | " + g, "H.C", "O(1)", true, "H.n.e", true));
  }
  const int r = (n - 1) / 2;
  return assemble("DIII", p, satake('D', n, odd_up_to(n - 2), {{n - 1, n}}), kd,
                  expect("DIII-odd", gh, "BC" + str(r), "Gr(2," + str(2 * r + 1) + ")", "H.C", "O(1)", true, "H.e",
                         true));
}

struct Fixed {
  const char* family;
  char type;
  int rank;
  std::vector<int> black;
  std::vector<std::pair<int, int>> swaps;
  const char* shape;
  std::vector<std::size_t> white;
  Expected expected;
};

const std::vector<Fixed>& fixed_families() {
  static const std::vector<std::pair<int, int>> e6flip = {{1, 6}, {3, 5}};
  static const std::vector<Fixed> table = {
      {"EI", 'E', 6, {}, {}, "E6^(2)", {4}, expect("EI", "E6/C4", "E6", "LG(4,8)", "H.C", "O(1)", true, "", false)},
      {"EII", 'E', 6, {}, e6flip, "E6^(1)", {2},
       expect("EII", "E6/A5xA1", "F4", "Gr(3,6) x P^1", "H.C", "O(1,1)", true, "", true)},
      {"EIII", 'E', 6, {3, 4, 5}, e6flip, "E6^(1)", {0, 1},
       expect("EIII", "E6/D5xC*", "BC2", "OG(5,10)", "H.C", "O(1)", true, "H.e", true)},
      {"EIV", 'E', 6, {2, 3, 4, 5}, {}, "E6^(2)", {0},
       expect("EIV", "E6/F4", "A2", "F4/P4", "E6/P6", "O(1)", false, "", true)},
      {"EV", 'E', 7, {}, {}, "E7^(1)", {2}, expect("EV", "E7/A7", "E7", "Gr(4,8)", "H.C", "O(1)", true, "", false)},
      {"EVI", 'E', 7, {2, 5, 7}, {}, "E7^(1)", {1},
       expect("EVI", "E7/D6xA1", "F4", "OG(6,12) x P^1", "H.C", "O(1,1)", true, "", true)},
      {"EVII", 'E', 7, {2, 3, 4, 5}, {}, "E7^(1)", {0, 7},
       expect("EVII", "E7/E6xC*", "C3", "E6/P1 | E6/P6", "H.C", "O(1)", true, "H.n.e", true)},
      {"EVIII", 'E', 8, {}, {}, "E8^(1)", {1},
       expect("EVIII", "E8/D8", "E8", "OG(8,16)", "H.C", "O(1)", true, "", false)},
      {"EIX", 'E', 8, {2, 3, 4, 5}, {}, "E8^(1)", {8},
       expect("EIX", "E8/E7xA1", "F4", "E7/P7 x P^1", "H.C", "O(1,1)", true, "", true)},
      {"FI", 'F', 4, {}, {}, "F4^(1)", {1},
       expect("FI", "F4/C3xA1", "F4", "LG(3,6) x P^1", "H.C", "O(1,1)", true, "", false)},
      {"FII", 'F', 4, {1, 2, 3}, {}, "F4^(1)", {4},
       expect("FII", "F4/B4", "BC1", "OG(4,9)", "H.C", "O(1)", false, "", true)},
      {"G", 'G', 2, {}, {}, "G2^(1)", {2},
       expect("G", "G2/A1xA1", "G2", "P^1 x P^1", "H.C", "O(1,3)", true, "", false)},
  };
  return table;
}

InstanceData fixed(const Fixed& f, const Params& p) {
  allow_only(f.family, p, {});
  return assemble(f.family, p, satake(f.type, f.rank, f.black, f.swaps), kac(f.shape, f.white), f.expected);
}

}  // namespace

Params parse_params(const std::string& text) {
  Params out;
  if (trim(text).empty()) return out;
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("malformed parameter '" + item + "' (expected k=v)");
    const std::string key = trim(item.substr(0, eq));
    const std::string val = trim(item.substr(eq + 1));
    if (key == "type" && val.size() == 1 && val[0] >= 'A' && val[0] <= 'G') {
      out.emplace_back(key, val[0]);
      continue;
    }
    try {
      std::size_t used = 0;
      const int v = std::stoi(val, &used);
      if (used != val.size()) throw std::invalid_argument(val);
      out.emplace_back(key, v);
    } catch (const std::exception&) {
      throw InputError("parameter '" + key + "' needs an integer value, got '" + val + "'");
    }
  }
  return out;
}

std::string format_params(const Params& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    s += (i ? "," : "") + p[i].first + "=";
    s += p[i].first == "type" ? std::string(1, static_cast<char>(p[i].second)) : str(p[i].second);
  }
  return s;
}

std::string InstanceData::label() const {
  return params.empty() ? family : family + " " + format_params(params);
}

int InstanceData::ambient_rank() const { return ambient.front().second; }

std::vector<std::string> family_labels() {
  std::vector<std::string> out = {"Group", "AI", "AII", "AIII", "BDI", "BDII", "CI", "CII", "DI", "DIII"};
  for (const auto& f : fixed_families()) out.push_back(f.family);
  return out;
}

InstanceData instantiate(const std::string& family, const Params& params) {
  if (family == "Group") return group(params);
  if (family == "AI") return ai(params);
  if (family == "AII") return aii(params);
  if (family == "AIII") return aiii(params);
  if (family == "BDI") return bdi(params);
  if (family == "BDII") return bdii(params);
  if (family == "CI") return ci(params);
  if (family == "CII") return cii(params);
  if (family == "DI") return di(params);
  if (family == "DIII") return diii(params);
  for (const auto& f : fixed_families())
    if (family == f.family) return fixed(f, params);
  throw InputError("unknown family '" + family + "'");
}

std::vector<InstanceData> enumerate(int max_rank, const std::optional<std::string>& family) {
  if (max_rank < 2) throw InputError("max rank must be at least 2");
  if (family) {
    const auto labels = family_labels();
    if (std::find(labels.begin(), labels.end(), *family) == labels.end())
      throw InputError("unknown family '" + *family + "'");
  }
  std::vector<InstanceData> out;
  auto add = [&](const std::string& fam, const Params& p) {
    if (family && *family != fam) return;
    auto d = instantiate(fam, p);
    if (d.ambient_rank() <= max_rank) out.push_back(std::move(d));
  };
  const int M = max_rank;
  // Group rows: X ≠ A, then A_r (r ≥ 2), then A₁.
  for (char t : std::string("BCDEFG")) {
    for (int r = 1; r <= M; ++r) {
      Params p{{"type", t}, {"r", r}};
      try {
        instantiate("Group", p);
      } catch (const InputError&) {
        continue;
      }
      add("Group", p);
    }
  }
  for (int r = 2; r <= M; ++r) add("Group", {{"type", 'A'}, {"r", r}});
  add("Group", {{"type", 'A'}, {"r", 1}});
  for (int r = 2; r <= M; ++r) add("AI", {{"r", r}});
  add("AI", {{"r", 1}});
  for (int r = 2; 2 * r + 1 <= M; ++r) add("AII", {{"r", r}});
  for (int n = 3; n - 1 <= M; ++n)
    for (int r = 1; 2 * r < n; ++r) add("AIII", {{"n", n}, {"r", r}});
  for (int r = 2; 2 * r - 1 <= M; ++r) add("AIII", {{"n", 2 * r}, {"r", r}});
  for (int n = 5; n / 2 <= M; ++n)
    for (int r = 3; 2 * r + 1 <= n; ++r) add("BDI", {{"n", n}, {"r", r}});
  for (int n = 5; n / 2 <= M; ++n) add("BDI", {{"n", n}, {"r", 2}});
  for (int n = 5; n / 2 <= M; ++n) add("BDII", {{"n", n}});
  for (int r = 3; r <= M; ++r) add("CI", {{"r", r}});
  for (int n = 3; n <= M; ++n)
    for (int r = 1; 2 * r < n; ++r) add("CII", {{"n", n}, {"r", r}});
  for (int r = 2; 2 * r <= M; ++r) add("CII", {{"n", 2 * r}, {"r", r}});
  for (int r = 4; r <= M; ++r) add("DI", {{"r", r}});
  for (int n = 4; n <= M; n += 2) add("DIII", {{"n", n}});
  for (int n = 3; n <= M; n += 2) add("DIII", {{"n", n}});
  for (const auto& f : fixed_families()) add(f.family, {});
  return out;
}

SymmetricSpaceRecord build_record(const InstanceData& data) {
  SymmetricSpaceRecord rec;
  rec.data = data;
  rec.involution = Involution::build({RootSystem::build(data.ambient), data.black, data.epsilon});
  rec.restricted = RestrictedRootSystem::build(rec.involution);
  rec.curves = std::make_shared<const CurveClassModel>(rec.restricted);
  StoredFacts facts{!data.expected.herm_exc.empty(), data.expected.vmrt_name, data.expected.embedding};
  rec.report = vmrt_report(*rec.curves, data.kac, facts);
  return rec;
}

std::vector<CheckResult> validate(const InstanceData& data) {
  std::vector<CheckResult> out;
  auto check = [&](const std::string& name, bool ok, const std::string& detail = "") {
    out.push_back({name, ok, ok ? "" : detail});
  };
  const Expected& e = data.expected;

  InvolutionPtr inv;
  RestrictedPtr rrs;
  std::shared_ptr<const CurveClassModel> model;
  try {
    inv = Involution::build({RootSystem::build(data.ambient), data.black, data.epsilon});
    check("involution", true);
  } catch (const std::exception& ex) {
    check("involution", false, ex.what());
    return out;
  }
  try {
    rrs = RestrictedRootSystem::build(inv);
    const TypeLabel want = normalize(parse_type_label(e.restricted_type));
    check("restricted-type", normalize(rrs->type()) == want,
          "computed " + rrs->type().str() + ", expected " + e.restricted_type);
  } catch (const std::exception& ex) {
    check("restricted-type", false, ex.what());
    return out;
  }
  const bool exc = rrs->exceptional();
  check("exceptional", exc == (e.herm_exc == "H.e"),
        std::string("computed ") + (exc ? "exceptional" : "non-exceptional") + ", expected '" + e.herm_exc + "'");

  const auto whites = data.kac.white_nodes();
  const bool herm = !e.herm_exc.empty();
  check("hermitian-kac", (whites.size() == 1 || whites.size() == 2) && (whites.size() == 2) == herm && (!exc || herm),
        str(static_cast<std::int64_t>(whites.size())) + " white Kac nodes, stored column '" + e.herm_exc + "'");

  const bool st = sigma_theta_column(*rrs);
  check("sigma-theta", st == e.sigma_theta,
        std::string("computed ") + (st ? "yes" : "no") + ", expected " + (e.sigma_theta ? "yes" : "no"));
  const bool fano = is_fano(*rrs);
  check("fano", fano == e.fano,
        std::string("computed ") + (fano ? "yes" : "no") + ", expected " + (e.fano ? "yes" : "no"));

  Dimensions dims;
  try {
    dims = dimensions(*rrs);
    const std::int64_t want = normalize(rrs->type()).family == "A" ? 2 : 1;
    check("boundary-degree", dims.boundary_degree == want,
          "boundary degree " + str(dims.boundary_degree) + " for restricted type " + rrs->type().str());
  } catch (const std::exception& ex) {
    check("boundary-degree", false, ex.what());
    return out;
  }

  try {
    model = std::make_shared<const CurveClassModel>(rrs);
    const std::size_t want = rrs->rank() + (exc ? 1 : 0);
    check("picard-rank", model->picard_rank() == want,
          "Picard rank " + str(static_cast<std::int64_t>(model->picard_rank())) + ", expected " +
              str(static_cast<std::int64_t>(want)));
  } catch (const std::exception& ex) {
    check("picard-rank", false, ex.what());
    return out;
  }

  VmrtReport rep;
  try {
    rep = vmrt_report(*model, data.kac, StoredFacts{herm, e.vmrt_name, e.embedding});
  } catch (const std::exception& ex) {
    check("hc-names", false, ex.what());
    return out;
  }

  auto names = [](const std::vector<VmrtComponent>& cs) {
    std::string s;
    for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? " | " : "") + cs[i].name;
    return s;
  };
  auto same = [](const std::string& a, const std::string& b) {
    try {
      return same_variety(a, b);
    } catch (const std::exception&) {
      return false;
    }
  };
  const std::string hc = names(rep.hc_components);
  check("hc-names", same(hc, e.hc_name), "computed '" + hc + "', expected '" + e.hc_name + "'");
  bool hc_dims = true;
  for (const auto& c : rep.hc_components) hc_dims = hc_dims && c.dimension == dims.dim_hc;
  check("hc-dimensions", hc_dims && !rep.hc_components.empty(),
        "H.C components do not all have dimension " + str(dims.dim_hc));

  const std::string want_vmrt = e.vmrt_name == "H.C" ? e.hc_name : e.vmrt_name;
  const std::string vm = names(rep.vmrt_components);
  check("vmrt-names", same(vm, want_vmrt), "computed '" + vm + "', expected '" + want_vmrt + "'");
  bool vm_dims = true;
  for (const auto& c : rep.vmrt_components) vm_dims = vm_dims && c.dimension == dims.dim_family;
  check("vmrt-dimensions", vm_dims && !rep.vmrt_components.empty(),
        "VMRT components do not all have dimension " + str(dims.dim_family));
  return out;
}

// ---------------------------------------------------------------------------
// Record file. One instance per line, 17 fields separated by " ; ".

std::string catalog_version() { return "wonderful-catalog/" + str(kCatalogFormat); }

namespace {

std::string join_ids(const std::vector<std::size_t>& ids) {
  if (ids.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + str(static_cast<std::int64_t>(ids[i] + 1));
  return s;
}

std::vector<std::size_t> parse_ids(const std::string& s, int line) {
  std::vector<std::size_t> out;
  if (s == "-") return out;
  for (const auto& t : split(s, ',')) {
    try {
      const int v = std::stoi(t);
      if (v < 1) throw std::out_of_range(t);
      out.push_back(static_cast<std::size_t>(v - 1));
    } catch (const std::exception&) {
      throw DataError("line " + str(line) + ": bad node id '" + t + "'");
    }
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

bool parse_yes_no(const std::string& s, int line) {
  if (s == "yes") return true;
  if (s == "no") return false;
  throw DataError("line " + str(line) + ": expected yes/no, got '" + s + "'");
}

}  // namespace

void write_catalog(std::ostream& os, const std::vector<InstanceData>& items) {
  os << "# Symmetric space catalog. One instance per line, fields separated by ' ; ':\n"
     << "#  family ; params ; ambient ; black nodes ; diagram involution ; Kac shape ;\n"
     << "#  Kac colors (w/b per node) ; Kac edges (i-j:a_ij:a_ji) ; row ; G/H ;\n"
     << "#  restricted type ; H.C ; VMRT ; O(1) restriction ; sigma(Theta)=-Theta ; Herm/Exc ; Fano\n"
     << "# Simple-root ids are 1-based Bourbaki labels; Kac node ids are 0-based.\n"
     << "format " << kCatalogFormat << "\n";
  for (const auto& d : items) {
    std::string ambient;
    for (std::size_t i = 0; i < d.ambient.size(); ++i)
      ambient += (i ? "+" : "") + std::string(1, d.ambient[i].first) + str(d.ambient[i].second);
    std::string colors(d.kac.colors.begin(), d.kac.colors.end());
    std::string edges;
    for (std::size_t i = 0; i < d.kac.edges.size(); ++i) {
      const auto& e = d.kac.edges[i];
      edges += (i ? "," : "") + str(static_cast<std::int64_t>(e.i)) + "-" + str(static_cast<std::int64_t>(e.j)) +
               ":" + str(e.aij) + ":" + str(e.aji);
    }
    const auto& x = d.expected;
    os << d.family << " ; " << (d.params.empty() ? "-" : format_params(d.params)) << " ; " << ambient << " ; "
       << join_ids(d.black) << " ; " << join_ids(d.epsilon) << " ; " << d.kac.shape << " ; " << colors << " ; "
       << edges << " ; " << x.row << " ; " << x.g_over_h << " ; " << x.restricted_type << " ; " << x.hc_name
       << " ; " << x.vmrt_name << " ; " << x.embedding << " ; " << yes_no(x.sigma_theta) << " ; "
       << (x.herm_exc.empty() ? "-" : x.herm_exc) << " ; " << yes_no(x.fano) << "\n";
  }
}

std::vector<InstanceData> read_catalog(std::istream& is) {
  std::vector<InstanceData> out;
  std::string raw;
  int line = 0;
  bool have_format = false;
  while (std::getline(is, raw)) {
    ++line;
    const std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    if (s.rfind("format ", 0) == 0) {
      if (trim(s.substr(7)) != str(kCatalogFormat))
        throw DataError("line " + str(line) + ": unsupported catalog format '" + s.substr(7) + "'");
      have_format = true;
      continue;
    }
    if (!have_format) throw DataError("line " + str(line) + ": record before the format line");
    std::vector<std::string> f;
    std::size_t start = 0;
    while (true) {
      const auto p = s.find(" ; ", start);
      f.push_back(trim(s.substr(start, p == std::string::npos ? std::string::npos : p - start)));
      if (p == std::string::npos) break;
      start = p + 3;
    }
    if (f.size() != 17) throw DataError("line " + str(line) + ": expected 17 fields, found " + str(f.size()));
    InstanceData d;
    d.family = f[0];
    try {
      d.params = f[1] == "-" ? Params{} : parse_params(f[1]);
    } catch (const InputError& ex) {
      throw DataError("line " + str(line) + ": " + ex.what());
    }
    for (const auto& comp : split(f[2], '+')) {
      if (comp.size() < 2) throw DataError("line " + str(line) + ": bad ambient type '" + comp + "'");
      try {
        d.ambient.emplace_back(comp[0], std::stoi(comp.substr(1)));
      } catch (const std::exception&) {
        throw DataError("line " + str(line) + ": bad ambient type '" + comp + "'");
      }
    }
    d.black = parse_ids(f[3], line);
    d.epsilon = parse_ids(f[4], line);
    d.kac.shape = f[5];
    for (char c : f[6]) {
      if (c != 'w' && c != 'b') throw DataError("line " + str(line) + ": Kac colors must be w or b");
      d.kac.colors.push_back(c);
    }
    if (f[7] != "-") {
      for (const auto& e : split(f[7], ',')) {
        KacEdge edge;
        char dash = 0, c1 = 0, c2 = 0;
        long long i = 0, j = 0, a = 0, b = 0;
        std::istringstream es(e);
        if (!(es >> i >> dash >> j >> c1 >> a >> c2 >> b) || dash != '-' || c1 != ':' || c2 != ':' || i < 0 ||
            j < 0)
          throw DataError("line " + str(line) + ": bad Kac edge '" + e + "'");
        edge.i = static_cast<std::size_t>(i);
        edge.j = static_cast<std::size_t>(j);
        edge.aij = a;
        edge.aji = b;
        d.kac.edges.push_back(edge);
      }
    }
    auto& x = d.expected;
    x.row = f[8];
    x.g_over_h = f[9];
    x.restricted_type = f[10];
    x.hc_name = f[11];
    x.vmrt_name = f[12];
    x.embedding = f[13];
    x.sigma_theta = parse_yes_no(f[14], line);
    x.herm_exc = f[15] == "-" ? "" : f[15];
    x.fano = parse_yes_no(f[16], line);
    out.push_back(std::move(d));
  }
  if (!have_format) throw DataError("catalog has no format line");
  return out;
}

std::vector<InstanceData> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open catalog file '" + path + "'");
  return read_catalog(in);
}

}  // namespace wonderful
