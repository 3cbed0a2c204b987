#include "wonderful/report.hpp"

#include <sstream>

namespace wonderful {

using nlohmann::ordered_json;

namespace {

std::string joined(const std::vector<VmrtComponent>& cs) {
  std::string s;
  for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? " | " : "") + cs[i].name;
  return s;
}

ordered_json components(const std::vector<VmrtComponent>& cs) {
  ordered_json a = ordered_json::array();
  for (const auto& c : cs) a.push_back({{"name", c.name}, {"dimension", c.dimension}});
  return a;
}

ordered_json rationals(const Coweight& w) {
  ordered_json a = ordered_json::array();
  for (const auto& q : w.c) a.push_back(to_string(q));
  return a;
}

std::string vec(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

std::string vec(const Coweight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.c.size(); ++i) s += (i ? ", " : "") + to_string(w.c[i]);
  return s + ")";
}

std::string name(const std::string& ascii_name, bool ascii) { return ascii ? ascii_name : to_unicode(ascii_name); }

// Table cells are already separated by " | ".
std::string cell(const std::vector<VmrtComponent>& cs, bool ascii) {
  if (!ascii) return to_unicode(joined(cs));
  std::string s;
  for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? " U " : "") + cs[i].name;
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string type_unicode(const std::string& label) {
  static const char* sub[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string out;
  for (char c : label) out += std::isdigit(static_cast<unsigned char>(c)) ? std::string(sub[c - '0']) : std::string(1, c);
  return out;
}

ordered_json report_json(const SymmetricSpaceRecord& rec) {
  const VmrtReport& r = rec.report;
  const RestrictedRootSystem& rrs = *rec.restricted;
  const InstanceData& d = rec.data;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : d.params) {
    if (k == "type")
      params[k] = std::string(1, static_cast<char>(v));
    else
      params[k] = v;
  }
  ordered_json classes = ordered_json::array();
  for (const auto& c : r.minimal_classes) classes.push_back(c);
  ordered_json colors = ordered_json::array();
  for (const auto& c : rec.curves->colors()) {
    ordered_json members = ordered_json::array();
    for (auto m : c.members) members.push_back(m + 1);
    colors.push_back({{"nodes", members}, {"lambda", c.lambda}});
  }
  ordered_json black = ordered_json::array();
  for (auto b : d.black) black.push_back(b + 1);
  ordered_json eps = ordered_json::array();
  for (auto e : d.epsilon) eps.push_back(e + 1);

  return ordered_json{
      {"tool_version", kToolVersion},
      {"catalog_version", catalog_version()},
      {"family", d.family},
      {"params", params},
      {"row", d.expected.row},
      {"g_over_h", d.expected.g_over_h},
      {"black_nodes", black},
      {"diagram_involution", eps},
      {"restricted_type", r.restricted_type.str()},
      {"rank", r.rank},
      {"sigma_theta_is_minus_theta", r.sigma_theta_is_minus_theta},
      {"orbit_type", to_string(r.orbit_type)},
      {"boundary_degree", r.dims.boundary_degree},
      {"dim_family", r.dims.dim_family},
      {"dim_nilpotent_orbit", r.dims.dim_nilpotent_orbit},
      {"dim_hc", r.dims.dim_hc},
      {"dim_p", r.dim_p},
      {"hermitian", r.hermitian},
      {"exceptional", r.exceptional},
      {"fano", r.fano},
      {"picard_rank", r.picard_rank},
      {"colors", colors},
      {"minimal_classes", classes},
      {"hc", components(r.hc_components)},
      {"vmrt", components(r.vmrt_components)},
      {"embedding_degree", r.embedding_degree},
      {"kappa", r.kappa.c},
      {"sigma_sum", r.sigma_sum.c},
      {"theta", rrs.theta().c},
      {"theta_bar", rrs.theta_bar().c},
      {"theta_bar_coroot", rationals(rrs.theta_bar_covector())},
  };
}

std::string report_text(const SymmetricSpaceRecord& rec, bool ascii) {
  const VmrtReport& r = rec.report;
  const RestrictedRootSystem& rrs = *rec.restricted;
  const std::string rtype = ascii ? r.restricted_type.str() : type_unicode(r.restricted_type.str());
  std::ostringstream os;
  os << rec.data.label() << "  (" << rec.data.expected.g_over_h << ")\n";
  os << (ascii ? "restricted type    " : "R̄                  ") << rtype << ", rank " << r.rank << "\n";
  os << (ascii ? "sigma(Theta)=-Theta " : "σ(Θ) = −Θ          ") << yes_no(r.sigma_theta_is_minus_theta)
     << ", orbit " << to_string(r.orbit_type) << "\n";
  os << (ascii ? "theta-bar coroot   " : "Θ̄∨                 ") << vec(rrs.theta_bar_covector()) << "\n";
  os << (ascii ? "kappa              " : "κ                  ") << vec(r.kappa.c) << "\n";
  os << (ascii ? "Sigma              " : "Σ                  ") << vec(r.sigma_sum.c) << "\n";
  os << (ascii ? "boundary . C       " : "∂X·C               ") << r.dims.boundary_degree << "\n";
  os << "dim K_x            " << r.dims.dim_family << "\n";
  os << (ascii ? "dim G.m            " : "dim G·m            ") << r.dims.dim_nilpotent_orbit << "\n";
  os << (ascii ? "dim H.C            " : "dim H·C            ") << r.dims.dim_hc << "\n";
  os << (ascii ? "dim p              " : "dim 𝔭              ") << r.dim_p << "\n";
  os << "Picard rank        " << r.picard_rank << "\n";
  os << "minimal classes    ";
  for (std::size_t i = 0; i < r.minimal_classes.size(); ++i) os << (i ? ", " : "") << vec(r.minimal_classes[i]);
  os << "\n";
  os << (ascii ? "H.C                " : "H·C                ") << name(joined(r.hc_components), ascii) << "\n";
  os << "VMRT               " << name(joined(r.vmrt_components), ascii) << "\n";
  os << "embedding          " << r.embedding_degree << "\n";
  os << "hermitian          " << yes_no(r.hermitian) << ", exceptional " << yes_no(r.exceptional) << "\n";
  os << "Fano               " << yes_no(r.fano) << "\n";
  return os.str();
}

std::vector<std::string> table_header(bool ascii) {
  if (ascii) return {"Type", "G/H", "R", "H.C", "VMRT", "embedding", "sigma(Theta)=-Theta", "Herm/Exc", "Fano"};
  return {"Type", "G/H", "R̄", "H·C", "VMRT", "embedding", "σ(Θ)=−Θ", "Herm/Exc", "Fano"};
}

std::vector<std::string> table_row(const SymmetricSpaceRecord& rec, bool ascii) {
  const VmrtReport& r = rec.report;
  const std::string rtype = r.restricted_type.str();
  return {rec.data.label(),
          rec.data.expected.g_over_h,
          ascii ? rtype : type_unicode(rtype),
          cell(r.hc_components, ascii),
          cell(r.vmrt_components, ascii),
          r.embedding_degree,
          yes_no(r.sigma_theta_is_minus_theta),
          r.exceptional ? "H.e" : r.hermitian ? "H.n.e" : "",
          yes_no(r.fano)};
}

ordered_json table_json(const std::vector<SymmetricSpaceRecord>& recs) {
  ordered_json rows = ordered_json::array();
  for (const auto& rec : recs) {
    const VmrtReport& r = rec.report;
    rows.push_back({{"type", rec.data.label()},
                    {"family", rec.data.family},
                    {"g_over_h", rec.data.expected.g_over_h},
                    {"restricted_type", r.restricted_type.str()},
                    {"hc", joined(r.hc_components)},
                    {"vmrt", joined(r.vmrt_components)},
                    {"embedding_degree", r.embedding_degree},
                    {"sigma_theta_is_minus_theta", r.sigma_theta_is_minus_theta},
                    {"herm_exc", r.exceptional ? "H.e" : r.hermitian ? "H.n.e" : ""},
                    {"fano", r.fano}});
  }
  return ordered_json{{"tool_version", kToolVersion}, {"catalog_version", catalog_version()}, {"rows", rows}};
}

std::string table_text(const std::vector<SymmetricSpaceRecord>& recs, bool ascii) {
  auto line = [](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? " | " : "") + cells[i];
    return s + "\n";
  };
  std::string out = line(table_header(ascii));
  for (const auto& rec : recs) out += line(table_row(rec, ascii));
  return out;
}

}  // namespace wonderful
