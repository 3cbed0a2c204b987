// wonderful: reports, the classification table and the validation suite.

#include "wonderful/invariants.hpp"
#include "wonderful/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

using namespace wonderful;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2, ' ', true); }

int cmd_report(const std::string& family, const std::string& params, const std::string& format, bool ascii) {
  const auto rec = build_record(instantiate(family, parse_params(params)));
  if (format == "json")
    std::cout << dump(report_json(rec)) << "\n";
  else
    std::cout << report_text(rec, ascii);
  return kOk;
}

int cmd_table(int max_rank, const std::optional<std::string>& family, const std::string& format, bool ascii) {
  std::vector<SymmetricSpaceRecord> recs;
  for (const auto& d : enumerate(max_rank, family)) recs.push_back(build_record(d));
  if (format == "json")
    std::cout << dump(table_json(recs)) << "\n";
  else
    std::cout << table_text(recs, ascii);
  return kOk;
}

int cmd_check(int max_rank, const std::optional<std::string>& catalog) {
  std::vector<InstanceData> items;
  if (catalog) {
    for (auto& d : load_catalog_file(*catalog))
      if (d.ambient_rank() <= max_rank) items.push_back(std::move(d));
  } else {
    items = enumerate(max_rank);
  }
  const CheckSummary sum = run_checks(items);
  std::size_t total = 0;
  for (const auto& [name, c] : sum.counts) {
    std::cout << (c.first == c.second ? "pass " : "FAIL ") << name << " " << c.first << "/" << c.second << "\n";
    total += c.second;
  }
  for (const auto& f : sum.failures)
    std::cout << "failed: " << f.instance << " : " << f.check << " : " << f.detail << "\n";
  std::cout << sum.instances << " instances, " << total << " checks, " << sum.failures.size() << " failures\n";
  return sum.ok() ? kOk : kFailed;
}

int cmd_roots(const std::string& type, int rank, bool list) {
  if (type.size() != 1) throw InputError("type must be a single letter A..G");
  const auto rs = RootSystem::build({{type[0], rank}});
  std::cout << type << rank << ": " << rs->root_count() << " roots, " << rs->positive_roots().size()
            << " positive\n";
  std::cout << "highest root " << rs->highest_root() << "\n";
  if (list)
    for (const auto& b : rs->positive_roots()) std::cout << b << "\n";
  return kOk;
}

int cmd_export(int max_rank) {
  write_catalog(std::cout, enumerate(max_rank));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of wonderful compactifications of adjoint symmetric spaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string family, params, format = "text";
  bool ascii = false;
  auto* report = app.add_subcommand("report", "Full report for one symmetric space");
  report->add_option("--family", family, "Family label, e.g. AIII")->required();
  report->add_option("--params", params, "Parameters, e.g. n=4,r=1");
  report->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  report->add_flag("--ascii", ascii, "ASCII-only text output");

  int max_rank = 8;
  std::string table_family;
  auto* table = app.add_subcommand("table", "Rows of the classification table");
  table->add_option("--max-rank", max_rank)->required();
  table->add_option("--family", table_family);
  table->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  table->add_flag("--ascii", ascii, "ASCII-only text output");

  std::string catalog;
  auto* check = app.add_subcommand("check", "Validate every instance and run the invariant suites");
  check->add_option("--max-rank", max_rank);
  check->add_option("--catalog", catalog, "Catalog data file to validate instead of the built-in templates");

  std::string type;
  int rank = 0;
  bool list = false;
  auto* roots = app.add_subcommand("roots", "Root system summary");
  roots->add_option("--type", type)->required();
  roots->add_option("--rank", rank)->required();
  roots->add_flag("--list", list, "List the positive roots");

  auto* exp = app.add_subcommand("export-catalog", "Write the catalog data file to standard output");
  exp->add_option("--max-rank", max_rank);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*report) return cmd_report(family, params, format, ascii);
    if (*table)
      return cmd_table(max_rank, table_family.empty() ? std::nullopt : std::optional(table_family), format, ascii);
    if (*check) return cmd_check(max_rank, catalog.empty() ? std::nullopt : std::optional(catalog));
    if (*roots) return cmd_roots(type, rank, list);
    if (*exp) return cmd_export(max_rank);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
