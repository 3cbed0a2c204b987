#pragma once

#include "wonderful/catalog.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace wonderful {

inline constexpr const char* kToolVersion = "1.0.0";

nlohmann::ordered_json report_json(const SymmetricSpaceRecord& rec);
std::string report_text(const SymmetricSpaceRecord& rec, bool ascii);

/// Table columns: Type, G/H, R̄, H·C, VMRT, embedding, σ(Θ)=−Θ, Herm/Exc, Fano.
std::vector<std::string> table_header(bool ascii);
std::vector<std::string> table_row(const SymmetricSpaceRecord& rec, bool ascii);
nlohmann::ordered_json table_json(const std::vector<SymmetricSpaceRecord>& recs);
std::string table_text(const std::vector<SymmetricSpaceRecord>& recs, bool ascii);

/// "BC2" → "BC₂".
std::string type_unicode(const std::string& label);

}  // namespace wonderful
