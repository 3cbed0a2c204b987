#include "wonderful/kac.hpp"

#include "wonderful/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <map>
#include <numeric>
#include <regex>
#include <set>

namespace wonderful {

std::vector<std::size_t> KacDiagram::white_nodes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < colors.size(); ++i)
    if (colors[i] == 'w') out.push_back(i);
  return out;
}

IntMatrix KacDiagram::cartan() const {
  IntMatrix a(size());
  for (std::size_t i = 0; i < size(); ++i) a(i, i) = 2;
  for (const auto& e : edges) {
    if (e.i >= size() || e.j >= size() || e.i == e.j) throw DataError("Kac edge refers to a missing node");
    a(e.i, e.j) = e.aij;
    a(e.j, e.i) = e.aji;
  }
  return a;
}

bool KacDiagram::adjacent(std::size_t a, std::size_t b) const {
  return std::any_of(edges.begin(), edges.end(),
                     [&](const KacEdge& e) { return (e.i == a && e.j == b) || (e.i == b && e.j == a); });
}

namespace {

KacDiagram from_cartan(const std::string& shape, const IntMatrix& a) {
  KacDiagram d;
  d.shape = shape;
  d.colors.assign(a.dim(), 'b');
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      if (a(i, j) != 0 || a(j, i) != 0) d.edges.push_back({i, j, a(i, j), a(j, i)});
  return d;
}

IntMatrix transpose(const IntMatrix& a) {
  IntMatrix t(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) t(i, j) = a(j, i);
  return t;
}

// X_r^(1): node 0 is the negative of the highest root.
IntMatrix untwisted(char type, int rank) {
  const auto rs = RootSystem::build({{type, rank}});
  const Weight theta = rs->highest_root();
  const Coweight theta_v = rs->coroot(theta);
  const std::size_t n = rs->rank();
  IntMatrix a(n + 1);
  a(0, 0) = 2;
  for (std::size_t i = 0; i < n; ++i) {
    a(i + 1, 0) = -rs->pairing(i, theta);
    a(0, i + 1) = -rs->pair(theta_v, Weight::unit(n, i)).numerator();
    for (std::size_t j = 0; j < n; ++j) a(i + 1, j + 1) = rs->cartan()(i, j);
  }
  return a;
}

IntMatrix a_even_twisted(int l) {
  IntMatrix a(static_cast<std::size_t>(l) + 1);
  for (int i = 0; i <= l; ++i) a(i, i) = 2;
  if (l == 1) {
    a(0, 1) = -4;
    a(1, 0) = -1;
    return a;
  }
  a(0, 1) = -2;
  a(1, 0) = -1;
  for (int i = 1; i + 1 < l; ++i) a(i, i + 1) = a(i + 1, i) = -1;
  a(l - 1, l) = -2;
  a(l, l - 1) = -1;
  return a;
}

}  // namespace

KacDiagram affine_diagram(const std::string& shape) {
  static const std::regex re(R"(([A-G])(\d+)\^\(([12])\))");
  std::smatch m;
  if (!std::regex_match(shape, m, re)) throw DataError("unknown affine diagram '" + shape + "'");
  const char t = m[1].str()[0];
  const int n = std::stoi(m[2].str());
  const int twist = std::stoi(m[3].str());
  if (twist == 1) return from_cartan(shape, untwisted(t, n));
  if (t == 'A' && n % 2 == 0 && n >= 2) return from_cartan(shape, a_even_twisted(n / 2));
  if (t == 'A' && n % 2 == 1 && n >= 3) return from_cartan(shape, transpose(untwisted('B', (n + 1) / 2)));
  if (t == 'D' && n >= 3) return from_cartan(shape, transpose(untwisted('C', n - 1)));
  if (t == 'E' && n == 6) return from_cartan(shape, transpose(untwisted('F', 4)));
  throw DataError("unknown affine diagram '" + shape + "'");
}

KacDiagram colored(KacDiagram d, const std::vector<std::size_t>& white) {
  std::fill(d.colors.begin(), d.colors.end(), 'b');
  for (auto w : white) {
    if (w >= d.size()) throw DataError("white node outside the Kac diagram");
    d.colors[w] = 'w';
  }
  return d;
}

std::vector<std::size_t> marked_diagrams(const KacDiagram& kd) {
  auto w = kd.white_nodes();
  if (w.empty()) throw DataError("Kac diagram " + kd.shape + " has no white node");
  return w;
}

std::int64_t factor_dimension(const Factor& f) {
  std::int64_t count = 0;
  for (const auto& beta : positive_roots_from_cartan(bourbaki_cartan(f.type, f.rank)))
    for (int c : f.crossed)
      if (beta[static_cast<std::size_t>(c - 1)] != 0) {
        ++count;
        break;
      }
  return count;
}

SpaceDescriptor component_descriptor(const KacDiagram& kd, std::size_t delta) {
  if (delta >= kd.size() || kd.colors[delta] != 'w') throw DataError("marked node is not a white node");
  const IntMatrix a = kd.cartan();
  std::vector<std::size_t> black;
  for (std::size_t i = 0; i < kd.size(); ++i)
    if (kd.colors[i] == 'b') black.push_back(i);

  std::vector<int> comp(kd.size(), -1);
  int ncomp = 0;
  for (auto s : black) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack = {s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (auto v : black)
        if (comp[v] < 0 && a(u, v) != 0) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }

  struct Built {
    Factor f;
    std::size_t first;
  };
  std::vector<Built> built;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<std::size_t> nodes;
    for (auto b : black)
      if (comp[b] == c) nodes.push_back(b);
    IntMatrix sub(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (std::size_t j = 0; j < nodes.size(); ++j) sub(i, j) = a(nodes[i], nodes[j]);
    const auto match = identify_cartan(sub);
    if (!match) throw DataError("black nodes of " + kd.shape + " do not form a finite Dynkin diagram");
    Factor f{match->type, match->rank, {}};
    for (std::size_t k = 0; k < match->order.size(); ++k)
      if (a(delta, nodes[match->order[k]]) != 0) f.crossed.push_back(static_cast<int>(k) + 1);
    if (!f.crossed.empty()) built.push_back({f, nodes.front()});
  }
  SpaceDescriptor d;
  std::stable_sort(built.begin(), built.end(), [](const Built& x, const Built& y) {
    return factor_dimension(x.f) > factor_dimension(y.f);
  });
  for (const auto& b : built) {
    d.factors.push_back(b.f);
    d.dimension += factor_dimension(b.f);
  }
  return d;
}

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }

std::string generic_name(const Factor& f) {
  std::string s = std::string(1, f.type) + str(f.rank) + "/P";
  for (std::size_t i = 0; i < f.crossed.size(); ++i) s += (i ? "," : "") + str(f.crossed[i]);
  return s;
}

}  // namespace

std::string factor_name(const Factor& f) {
  const int n = f.rank;
  if (f.crossed.size() == 2 && f.type == 'A' && n >= 2 && f.crossed[0] == 1 && f.crossed[1] == n)
    return "Flag(1," + str(n) + ")";
  if (f.crossed.size() != 1) return generic_name(f);
  const int k = f.crossed[0];
  switch (f.type) {
    case 'A':
      if (k == 1) return "P^" + str(n);
      if (k == n) return "(P^" + str(n) + ")*";
      return "Gr(" + str(k) + "," + str(n + 1) + ")";
    case 'B':
      if (k == 1) return "Q_" + str(2 * n - 1);
      return "OG(" + str(k) + "," + str(2 * n + 1) + ")";
    case 'C':
      if (k == 1) return "P^" + str(2 * n - 1);
      if (k == n) return "LG(" + str(n) + "," + str(2 * n) + ")";
      return "IG(" + str(k) + "," + str(2 * n) + ")";
    case 'D':
      if (k == 1) return "Q_" + str(2 * n - 2);
      if (k >= n - 1) return "OG(" + str(n) + "," + str(2 * n) + ")";
      return "OG(" + str(k) + "," + str(2 * n) + ")";
    default: return generic_name(f);
  }
}

std::string name_space(const SpaceDescriptor& d) {
  if (d.factors.empty()) return "pt";
  std::string s;
  for (std::size_t i = 0; i < d.factors.size(); ++i) s += (i ? " x " : "") + factor_name(d.factors[i]);
  return s;
}

std::string name_union(const std::vector<SpaceDescriptor>& comps) {
  std::string s;
  for (std::size_t i = 0; i < comps.size(); ++i) s += (i ? " | " : "") + name_space(comps[i]);
  return s;
}

namespace {

std::vector<std::vector<int>> symmetries(char type, int n) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 1);
  std::vector<std::vector<int>> out = {id};
  if (type == 'A' && n >= 2) {
    auto rev = id;
    std::reverse(rev.begin(), rev.end());
    out.push_back(rev);
  } else if (type == 'D' && n == 4) {
    std::vector<int> legs = {1, 3, 4};
    while (std::next_permutation(legs.begin(), legs.end())) out.push_back({legs[0], 2, legs[1], legs[2]});
  } else if (type == 'D' && n >= 5) {
    auto s = id;
    std::swap(s[n - 2], s[n - 1]);
    out.push_back(s);
  } else if (type == 'E' && n == 6) {
    out.push_back({6, 2, 5, 4, 3, 1});
  }
  return out;
}

Factor remap(Factor f, char type, int rank, const std::vector<int>& image) {
  Factor g{type, rank, {}};
  for (int c : f.crossed) g.crossed.push_back(image[static_cast<std::size_t>(c - 1)]);
  std::sort(g.crossed.begin(), g.crossed.end());
  return g;
}

// Rewrites a factor into a canonical representative of its isomorphism class.
std::optional<Factor> canonical_factor(Factor f) {
  std::sort(f.crossed.begin(), f.crossed.end());
  f.crossed.erase(std::unique(f.crossed.begin(), f.crossed.end()), f.crossed.end());
  while (true) {
    if (f.crossed.empty() || f.rank == 0) return std::nullopt;
    const std::vector<int> one = {1};
    if ((f.type == 'B' || f.type == 'C') && f.rank == 1) {
      f.type = 'A';
    } else if (f.type == 'C' && f.rank == 2) {
      f = remap(f, 'B', 2, {2, 1});
    } else if (f.type == 'C' && f.crossed == one) {
      f = Factor{'A', 2 * f.rank - 1, {1}};
    } else if (f.type == 'B' && f.crossed == std::vector<int>{f.rank}) {
      f = Factor{'D', f.rank + 1, {f.rank + 1}};
    } else if (f.type == 'D' && f.rank == 3) {
      f = remap(f, 'A', 3, {2, 1, 3});
    } else if (f.type == 'G' && f.crossed == one) {
      f = Factor{'B', 3, {1}};
    } else {
      break;
    }
  }
  Factor best = f;
  for (const auto& s : symmetries(f.type, f.rank)) best = std::min(best, remap(f, f.type, f.rank, s));
  return best;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(' ');
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(' ') - b + 1);
}

std::vector<std::string> split(const std::string& s, const std::string& sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto p = s.find(sep, start);
    out.push_back(trim(s.substr(start, p == std::string::npos ? std::string::npos : p - start)));
    if (p == std::string::npos) break;
    start = p + sep.size();
  }
  return out;
}

std::vector<Factor> parse_factor(const std::string& tok) {
  static const std::regex proj(R"(P\^(\d+))"), dual(R"(\(P\^(\d+)\)\*)"), quad(R"(Q_(\d+))"),
      grass(R"((Gr|OG|IG|LG)\((\d+),(\d+)\))"), flag(R"(Flag\(1,(\d+)\))"), gp(R"(([A-G])(\d+)/P([\d,]+))");
  std::smatch m;
  auto num = [&](int i) { return std::stoi(m[i].str()); };
  if (tok == "pt") return {};
  if (std::regex_match(tok, m, proj)) return {Factor{'A', num(1), {1}}};
  if (std::regex_match(tok, m, dual)) return {Factor{'A', num(1), {num(1)}}};
  if (std::regex_match(tok, m, quad)) {
    const int q = num(1);
    if (q == 0) throw DataError("Q_0 is not connected");
    if (q == 1) return {Factor{'A', 1, {1}}};
    if (q == 2) return {Factor{'A', 1, {1}}, Factor{'A', 1, {1}}};
    if (q % 2 == 1) return {Factor{'B', (q + 1) / 2, {1}}};
    return {Factor{'D', (q + 2) / 2, {1}}};
  }
  if (std::regex_match(tok, m, grass)) {
    const std::string kind = m[1].str();
    const int k = num(2), v = num(3);
    if (kind == "Gr") return {Factor{'A', v - 1, {k}}};
    if (kind == "IG" || kind == "LG") {
      if (v % 2) throw DataError("symplectic Grassmannian needs an even dimension: " + tok);
      return {Factor{'C', v / 2, {k}}};
    }
    if (v % 2 == 1) return {Factor{'B', (v - 1) / 2, {k}}};
    const int n = v / 2;
    if (n == 2) return k == 1 ? parse_factor("Q_2") : std::vector<Factor>{Factor{'A', 1, {1}}};
    if (k == 1) return {Factor{'D', n, {1}}};
    if (k == n) return {Factor{'D', n, {n}}};
    if (k == n - 1) return {Factor{'D', n, {n - 1, n}}};
    return {Factor{'D', n, {k}}};
  }
  if (std::regex_match(tok, m, flag)) return {Factor{'A', num(1), {1, num(1)}}};
  if (std::regex_match(tok, m, gp)) {
    Factor f{m[1].str()[0], num(2), {}};
    for (const auto& c : split(m[3].str(), ",")) f.crossed.push_back(std::stoi(c));
    return {f};
  }
  throw DataError("cannot parse variety name '" + tok + "'");
}

}  // namespace

ComponentKey canonical_component(const std::vector<Factor>& factors) {
  ComponentKey out;
  for (const auto& f : factors)
    if (auto c = canonical_factor(f)) out.push_back(*c);
  std::sort(out.begin(), out.end());
  return out;
}

NameKey parse_name(const std::string& name) {
  NameKey key;
  for (const auto& comp : split(name, "|")) {
    std::vector<Factor> fs;
    for (const auto& tok : split(comp, " x ")) {
      auto parsed = parse_factor(tok);
      fs.insert(fs.end(), parsed.begin(), parsed.end());
    }
    key.push_back(canonical_component(fs));
  }
  std::sort(key.begin(), key.end());
  return key;
}

NameKey key_of(const std::vector<SpaceDescriptor>& comps) {
  NameKey key;
  for (const auto& c : comps) key.push_back(canonical_component(c.factors));
  std::sort(key.begin(), key.end());
  return key;
}

std::int64_t dimension_of(const ComponentKey& key) {
  std::int64_t d = 0;
  for (const auto& f : key) d += factor_dimension(f);
  return d;
}

bool same_variety(const std::string& a, const std::string& b) { return parse_name(a) == parse_name(b); }

std::string to_unicode(const std::string& s) {
  static const char* sup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  static const char* sub[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    auto digit = [&](std::size_t j) { return j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])); };
    if ((c == '^' || c == '_') && digit(i + 1)) {
      while (digit(i + 1)) out += (c == '^' ? sup : sub)[s[++i] - '0'];
    } else if (std::string("ABCDEFG").find(c) != std::string::npos && digit(i + 1) &&
               (i == 0 || s[i - 1] == ' ')) {
      out += c;  // E6/P6 style: subscript the rank and the crossed nodes
      while (digit(i + 1)) out += sub[s[++i] - '0'];
      if (s.compare(i + 1, 2, "/P") == 0) {
        out += "/P";
        i += 2;
        while (digit(i + 1) || (i + 1 < s.size() && s[i + 1] == ',')) {
          ++i;
          out += s[i] == ',' ? std::string(",") : std::string(sub[s[i] - '0']);
        }
      }
    } else if (s.compare(i, 3, " x ") == 0) {
      out += "×";
      i += 2;
    } else if (s.compare(i, 3, " | ") == 0) {
      out += " ⊔ ";
      i += 2;
    } else if (c == '*' && i > 0 && s[i - 1] == ')') {
      out += "∨";
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace wonderful
