#pragma once

#include "wonderful/vmrt.hpp"

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wonderful {

using Params = std::vector<std::pair<std::string, int>>;

Params parse_params(const std::string& text);  // "n=4,r=1"
std::string format_params(const Params& p);

/// Classification columns stored per instance.
struct Expected {
  std::string row;  // template row id, e.g. "AIII-equal"
  std::string g_over_h;
  std::string restricted_type;
  std::string hc_name;
  std::string vmrt_name;  // "H.C" when the VMRT is H·C itself
  std::string embedding;
  bool sigma_theta = true;
  std::string herm_exc;  // "", "H.n.e" or "H.e"
  bool fano = true;
  friend bool operator==(const Expected&, const Expected&) = default;
};

/// One symmetric space instance: Satake data, Kac diagram, expectations.
struct InstanceData {
  std::string family;
  Params params;
  std::vector<std::pair<char, int>> ambient;
  std::vector<std::size_t> black;    // 0-based
  std::vector<std::size_t> epsilon;  // 0-based permutation
  KacDiagram kac;
  Expected expected;

  std::string label() const;
  int ambient_rank() const;  // rank of G, or of H for group type
  friend bool operator==(const InstanceData&, const InstanceData&) = default;
};

std::vector<std::string> family_labels();
InstanceData instantiate(const std::string& family, const Params& params);
/// All instances with ambient rank ≤ max_rank, in classification-table order.
std::vector<InstanceData> enumerate(int max_rank, const std::optional<std::string>& family = std::nullopt);

/// Built structures for one instance.
struct SymmetricSpaceRecord {
  InstanceData data;
  InvolutionPtr involution;
  RestrictedPtr restricted;
  std::shared_ptr<const CurveClassModel> curves;
  VmrtReport report;
};

SymmetricSpaceRecord build_record(const InstanceData& data);

struct CheckResult {
  std::string check;
  bool passed = false;
  std::string detail;
};

/// Computed columns against stored ones. Build failures are reported as failed checks.
std::vector<CheckResult> validate(const InstanceData& data);

inline constexpr int kCatalogFormat = 1;
std::string catalog_version();
void write_catalog(std::ostream& os, const std::vector<InstanceData>& items);
std::vector<InstanceData> read_catalog(std::istream& is);
std::vector<InstanceData> load_catalog_file(const std::string& path);

}  // namespace wonderful
