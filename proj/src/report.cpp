#include "uforge/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "uforge/errors.hpp"

namespace uforge {
namespace {

const char* kProvenances[] = {"closed-form", "enumeration", "cross-check",
                              "known-value", "diagnostic"};

void require_provenance(const std::string& provenance) {
  for (const char* known : kProvenances) {
    if (provenance == known) return;
  }
  throw ArgumentError("unknown provenance tag: " + provenance);
}

}  // namespace

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  throw ArgumentError("unknown check status");
}

CheckStatus check_status_from_string(const std::string& text) {
  if (text == "pass") return CheckStatus::pass;
  if (text == "fail") return CheckStatus::fail;
  if (text == "skipped") return CheckStatus::skipped;
  throw ConfigError("unknown check status: " + text);
}

void RunConfig::validate() const {
  if (p != 2 && p != 3) {
    throw ConfigError("verification runs support p = 2 or 3; got " +
                      std::to_string(p));
  }
  if (m != 1 && m != 2) {
    throw ConfigError("verification runs support m = 1 or 2; got " +
                      std::to_string(m));
  }
  if (max_order < 2 || max_order > 32) {
    throw ConfigError("verification runs cap the group order at 32; got " +
                      std::to_string(max_order));
  }
  if (parallel < 1 || parallel > 64) {
    throw ConfigError("parallel width must be in [1, 64]; got " +
                      std::to_string(parallel));
  }
  if (format != "table" && format != "json") {
    throw ConfigError("output format must be table or json; got " + format);
  }
}

bool SuiteReport::all_passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.status == CheckStatus::fail;
  });
}

std::size_t SuiteReport::count(CheckStatus status) const {
  return std::size_t(std::count_if(
      checks.begin(), checks.end(),
      [&](const CheckResult& c) { return c.status == status; }));
}

CheckResult make_check(std::string id, std::string anchor, std::string expected,
                       std::string computed, std::string provenance,
                       long long ms) {
  require_provenance(provenance);
  CheckResult check;
  check.status =
      expected == computed ? CheckStatus::pass : CheckStatus::fail;
  check.id = std::move(id);
  check.anchor = std::move(anchor);
  check.expected = std::move(expected);
  check.computed = std::move(computed);
  check.provenance = std::move(provenance);
  check.ms = ms;
  return check;
}

CheckResult make_skip(std::string id, std::string anchor, std::string expected,
                      std::string reason, std::string provenance) {
  require_provenance(provenance);
  CheckResult check;
  check.status = CheckStatus::skipped;
  check.id = std::move(id);
  check.anchor = std::move(anchor);
  check.expected = std::move(expected);
  check.computed = "skipped: " + reason;
  check.provenance = std::move(provenance);
  check.ms = 0;
  return check;
}

std::string to_json_string(const SuiteReport& report, int indent) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : report.checks) {
    checks.push_back({{"id", c.id},
                      {"anchor", c.anchor},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"provenance", c.provenance},
                      {"status", to_string(c.status)},
                      {"ms", c.ms}});
  }
  nlohmann::json doc = {
      {"suite", report.suite},
      {"config",
       {{"p", report.config.p},
        {"m", report.config.m},
        {"max_order", report.config.max_order},
        {"parallel", report.config.parallel},
        {"long", report.config.long_checks},
        {"format", report.config.format}}},
      {"checks", std::move(checks)}};
  return doc.dump(indent);
}

SuiteReport suite_report_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed report JSON: ") + e.what());
  }
  try {
    SuiteReport report;
    report.suite = doc.at("suite").get<std::string>();
    const nlohmann::json& config = doc.at("config");
    report.config.p = config.at("p").get<int>();
    report.config.m = config.at("m").get<int>();
    report.config.max_order = config.at("max_order").get<unsigned long long>();
    report.config.parallel = config.at("parallel").get<int>();
    report.config.long_checks = config.at("long").get<bool>();
    report.config.format = config.at("format").get<std::string>();
    for (const nlohmann::json& entry : doc.at("checks")) {
      CheckResult c;
      c.id = entry.at("id").get<std::string>();
      c.anchor = entry.at("anchor").get<std::string>();
      c.expected = entry.at("expected").get<std::string>();
      c.computed = entry.at("computed").get<std::string>();
      c.provenance = entry.at("provenance").get<std::string>();
      c.status = check_status_from_string(entry.at("status").get<std::string>());
      c.ms = entry.at("ms").get<long long>();
      report.checks.push_back(std::move(c));
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("report JSON misses a required field: ") +
                      e.what());
  }
}

std::string render_table(const SuiteReport& report) {
  std::ostringstream out;
  out << "suite " << report.suite << "  (p=" << report.config.p
      << " m=" << report.config.m << " max_order=" << report.config.max_order
      << " parallel=" << report.config.parallel
      << " long=" << (report.config.long_checks ? "on" : "off") << ")\n";
  std::size_t id_width = 2;
  for (const CheckResult& c : report.checks) {
    id_width = std::max(id_width, c.id.size());
  }
  for (const CheckResult& c : report.checks) {
    out << "  " << std::left << std::setw(7) << to_string(c.status)
        << ' ' << std::setw(int(id_width)) << c.id << "  [" << c.provenance
        << "] " << c.ms << "ms\n";
    out << "    expected: " << c.expected << "\n";
    if (c.status != CheckStatus::pass || c.computed != c.expected) {
      out << "    computed: " << c.computed << "\n";
    }
  }
  out << "  " << report.count(CheckStatus::pass) << " passed, "
      << report.count(CheckStatus::fail) << " failed, "
      << report.count(CheckStatus::skipped) << " skipped\n";
  return out.str();
}

}  // namespace uforge
