// Acceptance run: one PASS/FAIL line per criterion.

#include "wonderful/invariants.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>

using namespace wonderful;

namespace {

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << " (" << title << "): " << detail << std::endl;
}

struct SuiteTally {
  std::size_t checks = 0;
  std::vector<std::string> failed;

  void add(const std::string& who, const std::vector<CheckResult>& rs) {
    for (const auto& c : rs) {
      ++checks;
      if (!c.passed) failed.push_back(who + " " + c.check + ": " + c.detail);
    }
  }
  std::string summary() const {
    std::string s = std::to_string(checks) + " checks, " + std::to_string(failed.size()) + " failures";
    if (!failed.empty()) s += "; first: " + failed.front();
    return s;
  }
};

struct Run {
  int status = -1;
  std::string output;
};

Run run(const std::string& cmd) {
  Run r;
  FILE* p = popen((cmd + " 2>&1").c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  while (fgets(buf.data(), buf.size(), p)) r.output += buf.data();
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::vector<std::string> failed_checks(const std::string& output) {
  std::vector<std::string> out;
  std::istringstream is(output);
  std::string line;
  while (std::getline(is, line)) {
    if (line.rfind("failed: ", 0) != 0) continue;
    // failed: <instance> : <check> : <detail>
    const auto a = line.find(" : ");
    const auto b = line.find(" : ", a + 3);
    if (a != std::string::npos && b != std::string::npos) out.push_back(line.substr(a + 3, b - a - 3));
  }
  return out;
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto items = enumerate(8);
  std::vector<SymmetricSpaceRecord> recs;
  std::string build_error;
  for (const auto& d : items) {
    try {
      recs.push_back(build_record(d));
    } catch (const std::exception& e) {
      if (build_error.empty()) build_error = d.label() + ": " + e.what();
    }
  }

  // 1. Classification table.
  {
    SuiteTally t;
    std::set<std::string> rows, families;
    for (const auto& d : items) {
      t.add(d.label(), validate(d));
      rows.insert(d.expected.row);
      families.insert(d.family);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = build_error.empty() && t.failed.empty() && items.size() >= 60 && rows.size() == 29 &&
                    families.size() == family_labels().size() && secs < 60;
    std::ostringstream os;
    os << items.size() << " instances, " << rows.size() << " table rows, " << families.size() << " family labels, "
       << t.summary() << ", " << secs << " s";
    if (!build_error.empty()) os << "; build error " << build_error;
    report(1, "table reproduction", ok, os.str());
  }

  auto suite = [&](int id, const std::string& title, auto fn) {
    SuiteTally t;
    for (const auto& r : recs) t.add(r.data.label(), fn(r));
    report(id, title, build_error.empty() && t.failed.empty() && t.checks > 0, t.summary());
  };
  suite(2, "dimension identities", dimension_suite);
  suite(3, "nilpotent orbit oracle", nilpotent_suite);
  suite(4, "restricted root invariants", [](const SymmetricSpaceRecord& r) {
    auto out = restricted_suite(r);
    auto core = root_core_suite(r.involution->roots());
    out.insert(out.end(), core.begin(), core.end());
    return out;
  });
  suite(5, "curve classes", curve_suite);

  // 6. Worked instances.
  {
    struct Anchor {
      std::string family;
      Params params;
      std::array<std::int64_t, 4> dims;
    };
    const std::vector<Anchor> anchors = {
        {"BDII", {{"n", 5}}, {2, 3, 6, 2}},
        {"AIII", {{"n", 4}, {"r", 1}}, {1, 2, 6, 2}},
        {"Group", {{"type", 'A'}, {"r", 1}}, {2, 2, 4, 1}},
    };
    bool ok = true;
    std::string detail;
    for (const auto& a : anchors) {
      const auto r = build_record(instantiate(a.family, a.params));
      const auto& d = r.report.dims;
      const std::array<std::int64_t, 4> got = {d.boundary_degree, d.dim_family, d.dim_nilpotent_orbit, d.dim_hc};
      ok = ok && got == a.dims;
      detail += r.data.label() + " (" + std::to_string(got[0]) + "," + std::to_string(got[1]) + "," +
                std::to_string(got[2]) + "," + std::to_string(got[3]) + ")";
      if (a.family == "AIII") {
        ok = ok && r.report.minimal_classes.size() == 2;
        detail += " families " + std::to_string(r.report.minimal_classes.size());
      }
      if (a.family == "Group") {
        ok = ok && r.report.picard_rank == 1;
        detail += " Pic " + std::to_string(r.report.picard_rank);
      }
      detail += "; ";
    }
    report(6, "worked instances", ok, detail);
  }

  // 7. Negative controls through the command line tool.
  {
    const std::string cli = WONDERFUL_CLI;
    const std::string fx = WONDERFUL_FIXTURES;
    const Run clean = run(cli + " check --catalog " + fx + "/clean.txt");
    struct Case {
      std::string file;
      std::string expect_check;
    };
    const std::vector<Case> cases = {
        {"corrupt_arrow.txt", "restricted-type"},
        {"corrupt_black.txt", "restricted-type"},
        {"corrupt_kac.txt", "hermitian-kac"},
    };
    bool ok = clean.status == 0;
    std::string detail = "clean fixture exit " + std::to_string(clean.status);
    for (const auto& c : cases) {
      const Run r = run(cli + " check --catalog " + fx + "/" + c.file);
      const auto names = failed_checks(r.output);
      const bool named = std::find(names.begin(), names.end(), c.expect_check) != names.end();
      ok = ok && r.status == 1 && named;
      detail += "; " + c.file + " exit " + std::to_string(r.status) + (named ? " names " : " missing ") + c.expect_check;
    }
    report(7, "negative controls", ok, detail);
  }

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failing") << std::endl;
  return failures == 0 ? 0 : 1;
}
