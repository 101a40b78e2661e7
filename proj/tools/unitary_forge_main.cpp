#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "uforge/abelian_type.hpp"
#include "uforge/black_box.hpp"
#include "uforge/errors.hpp"
#include "uforge/fingerprint.hpp"
#include "uforge/group_algebra.hpp"
#include "uforge/group_table.hpp"
#include "uforge/report.hpp"
#include "uforge/unitary.hpp"
#include "uforge/verify.hpp"

namespace {

using namespace uforge;

constexpr unsigned long long kEnumerationCap = 1ull << 24;

std::string spectrum_string(
    const std::map<unsigned long long, unsigned long long>& spectrum) {
  std::string out = "{";
  for (const auto& [order, count] : spectrum) {
    if (out.size() > 1) out += ", ";
    out += std::to_string(order) + ":" + std::to_string(count);
  }
  return out + "}";
}

std::string generator_labels(const GroupTable& table) {
  std::string out;
  for (std::uint32_t g : table.generators()) {
    if (!out.empty()) out += ", ";
    out += table.label(g);
  }
  return out;
}

int cmd_catalog(unsigned long long order, const std::string& filter,
                const std::string& format) {
  std::vector<GroupTable> groups = catalog((unsigned long)order, filter);
  if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const GroupTable& table : groups) {
      nlohmann::json spectrum = nlohmann::json::object();
      for (const auto& [element_order, count] : order_spectrum(table)) {
        spectrum[std::to_string(element_order)] = count;
      }
      nlohmann::json generators = nlohmann::json::array();
      for (std::uint32_t g : table.generators()) generators.push_back(table.label(g));
      rows.push_back({{"name", table.name()},
                      {"order", table.size()},
                      {"family", table.family()},
                      {"exponent", group_exponent(table)},
                      {"order_spectrum", std::move(spectrum)},
                      {"generators", std::move(generators)}});
    }
    std::cout << rows.dump(2) << "\n";
    return 0;
  }
  std::cout << "catalog order=" << order << " filter=" << filter << "  ("
            << groups.size() << " groups)\n";
  for (const GroupTable& table : groups) {
    std::cout << "  " << table.name() << "  family: " << table.family()
              << "  exponent: " << group_exponent(table)
              << "  element orders: " << spectrum_string(order_spectrum(table))
              << "  generators: " << generator_labels(table) << "\n";
  }
  return 0;
}

// The three ways to the unitary subgroup, cheapest admissible one first:
// full enumeration under the 2^24 cap, the odd-p abelian closure under the
// same cap on |V_*| itself, otherwise a capacity refusal naming both bounds.
UnitGroupView materialize_unitary(const AlgebraContext& ctx, int parallel) {
  unsigned long long q =
      pow_checked((unsigned long long)ctx.field().p(), ctx.field().m());
  unsigned long long group_order = ctx.group().size();
  bool enumerable = true;
  unsigned long long units = 1;
  for (unsigned long long i = 1; i < group_order; ++i) {
    units *= q;
    if (units > kEnumerationCap) {
      enumerable = false;
      break;
    }
  }
  if (enumerable) return unitary_subgroup(ctx, parallel);
  if (ctx.field().p() != 2 && is_abelian(ctx.group())) {
    unsigned long long closure_size = pow_checked(q, (group_order - 1) / 2);
    if (closure_size <= kEnumerationCap) return unitary_subgroup_closure(ctx);
  }
  throw CapacityError(
      "group " + ctx.group().name() + " over GF(" + std::to_string(q) +
      ") asks for " + std::to_string(q) + "^" + std::to_string(group_order - 1) +
      " normalized units; the enumeration cap is 2^24 and no closure route "
      "applies");
}

nlohmann::json invariants_json(const UnitaryInvariants& inv) {
  nlohmann::json doc = {{"p", inv.p}, {"m", inv.m}, {"order", inv.order}};
  if (inv.rank) doc["rank"] = *inv.rank;
  if (inv.type) {
    nlohmann::json parts = nlohmann::json::array();
    for (unsigned long long part : inv.type->parts()) parts.push_back(part);
    doc["type"] = std::move(parts);
  }
  return doc;
}

int cmd_unitary(const std::string& name, int p, int m, bool invariants_only,
                int parallel, const std::string& format) {
  GroupTable table = group_from_name(name);
  if (group_prime(table.size()) != p) {
    throw ConfigError("group " + table.name() + " has order " +
                      std::to_string(table.size()) +
                      ", not a power of the field characteristic " +
                      std::to_string(p));
  }
  std::optional<UnitaryInvariants> closed;
  if (is_abelian(table)) {
    AbelianType base = abelian_type(table);
    closed = p == 2 ? lemma1_forward(base, m) : lemma2_forward(base, m);
  }

  if (invariants_only) {
    UnitaryInvariants inv;
    if (closed) {
      inv = *closed;
    } else {
      inv.p = p;
      inv.m = m;
      AlgebraContext ctx(FieldDesc::get(p, m), table);
      inv.order = materialize_unitary(ctx, parallel).size();
    }
    std::cout << invariants_json(inv).dump(2) << "\n";
    return 0;
  }

  AlgebraContext ctx(FieldDesc::get(p, m), table);
  UnitGroupView view = materialize_unitary(ctx, parallel);
  Fingerprint print = fingerprint(view);

  if (format == "json") {
    nlohmann::json unitary = nlohmann::json::object();
    for (const std::string& field : fingerprint_fields()) {
      unitary[field] = fingerprint_field_value(print, field);
    }
    nlohmann::json doc = {{"group", table.name()},
                          {"family", table.family()},
                          {"p", p},
                          {"m", m},
                          {"unitary", std::move(unitary)}};
    if (closed) doc["invariants"] = invariants_json(*closed);
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << "group " << table.name() << "  order " << table.size()
            << "  family " << table.family() << "\n";
  std::cout << "field GF(" << pow_checked((unsigned long long)p, m) << ")\n";
  std::cout << "unitary subgroup:\n";
  for (const std::string& field : fingerprint_fields()) {
    std::cout << "  " << field << ": " << fingerprint_field_value(print, field)
              << "\n";
  }
  if (closed) {
    std::cout << "closed-form invariants: order=" << closed->order
              << " rank=" << *closed->rank << " type=" << closed->type->to_string()
              << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, const RunConfig& config) {
  SuiteReport report = run_suite(suite, config);
  if (config.format == "json") {
    std::cout << to_json_string(report) << "\n";
  } else {
    std::cout << render_table(report);
  }
  return report.all_passed() ? 0 : 1;
}

UnitaryInvariants invariants_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed invariants JSON: ") + e.what());
  }
  try {
    UnitaryInvariants inv;
    inv.p = doc.at("p").get<int>();
    inv.m = doc.at("m").get<int>();
    inv.order = doc.at("order").get<unsigned long long>();
    if (doc.contains("rank")) inv.rank = doc.at("rank").get<unsigned long long>();
    if (doc.contains("type")) {
      std::vector<long long> factors;
      for (const nlohmann::json& entry : doc.at("type")) {
        unsigned long long part = entry.get<unsigned long long>();
        if (part < 2 || !is_power_of(part, (unsigned long long)inv.p)) {
          throw ConfigError("type parts must be powers of p greater than 1; got " +
                            std::to_string(part));
        }
        std::size_t k = std::size_t(
            log_of_power(part, (unsigned long long)inv.p));
        if (factors.size() < k) factors.resize(k, 0);
        ++factors[k - 1];
      }
      inv.type = AbelianType(inv.p, std::move(factors));
    }
    return inv;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invariants JSON misses a required field: ") +
                      e.what());
  }
}

int cmd_reconstruct(const std::string& payload, const std::string& format) {
  std::string text = payload;
  if (text.empty()) {
    std::string line;
    while (std::getline(std::cin, line)) text += line + "\n";
  }
  UnitaryInvariants inv = invariants_from_json(text);
  AbelianType recovered = reconstruct(inv, inv.p, inv.m);
  unsigned long long base_order = order_of_base_group(inv.order, inv.p, inv.m);

  struct Candidate {
    std::string type;
    bool match;
  };
  std::vector<Candidate> candidates;
  for (const AbelianType& candidate :
       AbelianType::all_of_order(inv.p, base_order)) {
    UnitaryInvariants forward = inv.p == 2 ? lemma1_forward(candidate, inv.m)
                                           : lemma2_forward(candidate, inv.m);
    bool match = forward.order == inv.order &&
                 (!inv.type || *forward.type == *inv.type) &&
                 (!inv.rank || *forward.rank == *inv.rank);
    candidates.push_back({candidate.to_string(), match});
  }

  if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const Candidate& c : candidates) {
      rows.push_back({{"type", c.type}, {"match", c.match}});
    }
    nlohmann::json doc = {{"recovered", recovered.to_string()},
                          {"base_order", base_order},
                          {"candidates", std::move(rows)}};
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << "recovered: " << recovered.to_string() << "\n";
  std::cout << "base group order: " << base_order << "\n";
  std::cout << "candidates:\n";
  for (const Candidate& c : candidates) {
    std::cout << "  " << c.type << "  " << (c.match ? "match" : "no match")
              << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "unitary subgroups of modular group algebras: catalogs, invariants "
      "and a verification harness"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "table";
  int parallel = 1;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "json"}));
  app.add_option("--parallel", parallel, "worker pool width")
      ->envname("UNITARY_FORGE_PARALLEL")
      ->check(CLI::Range(1, 64));

  CLI::App* cat = app.add_subcommand("catalog", "list the groups of one order");
  unsigned long long cat_order = 0;
  std::string filter = "all";
  cat->add_option("--order", cat_order, "group order")->required();
  cat->add_option("--filter", filter,
                  "all, abelian, nonabelian or maximal-class");

  CLI::App* uni = app.add_subcommand(
      "unitary", "materialize and fingerprint one unitary subgroup");
  std::string group_name;
  int p = 2;
  int m = 1;
  bool invariants_only = false;
  uni->add_option("--group", group_name, "group name, e.g. D16 or C4xC2")
      ->required();
  uni->add_option("--p", p, "field characteristic");
  uni->add_option("--m", m, "field degree");
  uni->add_flag("--invariants", invariants_only,
                "emit only the closed-form invariants JSON");

  CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  bool long_checks = false;
  int verify_m = 2;
  unsigned long long max_order = 32;
  std::string suite_help = "one of:";
  for (const std::string& name : uforge::verification_suites()) {
    suite_help += " " + name;
  }
  ver->add_option("suite", suite, suite_help)->required();
  ver->add_flag("--long", long_checks, "enable checks above ten seconds");
  ver->add_option("--m", verify_m, "largest field degree scanned");
  ver->add_option("--max-order", max_order, "largest group order scanned");

  CLI::App* rec = app.add_subcommand(
      "reconstruct", "recover an abelian base group from invariants JSON");
  std::string payload;
  rec->add_option("json", payload, "invariants JSON; read from stdin when omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cat->parsed()) return cmd_catalog(cat_order, filter, format);
    if (uni->parsed()) {
      return cmd_unitary(group_name, p, m, invariants_only, parallel, format);
    }
    if (ver->parsed()) {
      uforge::RunConfig config;
      config.m = verify_m;
      config.max_order = max_order;
      config.parallel = parallel;
      config.long_checks = long_checks;
      config.format = format;
      return cmd_verify(suite, config);
    }
    if (rec->parsed()) return cmd_reconstruct(payload, format);
  } catch (const uforge::TheoremViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const uforge::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
