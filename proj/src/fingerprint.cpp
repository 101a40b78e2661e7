#include "uforge/fingerprint.hpp"

#include <atomic>
#include <exception>
#include <sstream>
#include <thread>
#include <utility>

#include "uforge/errors.hpp"
#include "uforge/group_algebra.hpp"
#include "uforge/unitary.hpp"

namespace uforge {
namespace {

std::string spectrum_string(
    const std::map<unsigned long long, unsigned long long>& spectrum) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [ord, count] : spectrum) {
    if (!first) out << ", ";
    first = false;
    out << ord << ":" << count;
  }
  out << "}";
  return out.str();
}

std::string type_string(const std::optional<AbelianType>& type) {
  return type ? type->to_string() : "nonabelian";
}

// Runs fn(i) for i in [0, count) on a small worker pool. Results must be
// written to per-index slots so the outcome is schedule-independent.
template <typename Fn>
void for_each_index(std::size_t count, int threads, Fn fn) {
  int t = threads < 1 ? 1 : threads;
  if (t > 64) t = 64;
  if (static_cast<std::size_t>(t) > count) t = static_cast<int>(count);
  if (t <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(t));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(t));
  for (int w = 0; w < t; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
          fn(i);
        }
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
}

}  // namespace

bool Fingerprint::operator==(const Fingerprint& other) const {
  return order == other.order && exponent == other.exponent &&
         order_spectrum == other.order_spectrum && theta == other.theta &&
         abelianization == other.abelianization && derived == other.derived &&
         center == other.center && hamiltonian == other.hamiltonian;
}

Fingerprint fingerprint(const BlackBoxGroup& group) {
  Fingerprint fp;
  fp.order = group.size();
  fp.order_spectrum = order_spectrum(group);
  unsigned long long total = 0;
  for (const auto& [ord, count] : fp.order_spectrum) {
    (void)ord;
    total += count;
  }
  if (total != fp.order) {
    throw InternalCheckError("order spectrum does not sum to the group order");
  }
  fp.exponent = group_exponent(group);
  auto at = [&](unsigned long long ord) -> unsigned long long {
    auto it = fp.order_spectrum.find(ord);
    return it == fp.order_spectrum.end() ? 0 : it->second;
  };
  fp.theta = at(1) + at(2);
  auto derived_elems = derived_subgroup_elements(group);
  SubgroupView derived_view(group, derived_elems);
  if (is_abelian(derived_view)) {
    fp.derived = abelian_type(derived_view);
  } else {
    fp.derived = std::nullopt;
  }
  fp.abelianization = quotient_type(group, derived_elems);
  fp.center = subgroup_type(group, center_elements(group));
  fp.hamiltonian = is_hamiltonian(group);
  return fp;
}

const std::vector<std::string>& fingerprint_fields() {
  static const std::vector<std::string> fields = {
      "order",    "hamiltonian",    "derived",        "theta",
      "exponent", "order_spectrum", "abelianization", "center"};
  return fields;
}

std::string fingerprint_field_value(const Fingerprint& fp,
                                    const std::string& field) {
  if (field == "order") return std::to_string(fp.order);
  if (field == "hamiltonian") return fp.hamiltonian ? "true" : "false";
  if (field == "derived") return type_string(fp.derived);
  if (field == "theta") return std::to_string(fp.theta);
  if (field == "exponent") return std::to_string(fp.exponent);
  if (field == "order_spectrum") return spectrum_string(fp.order_spectrum);
  if (field == "abelianization") return fp.abelianization.to_string();
  if (field == "center") return fp.center.to_string();
  throw ArgumentError("unknown fingerprint field: " + field);
}

namespace {

bool field_differs(const Fingerprint& a, const Fingerprint& b,
                   const std::string& field) {
  if (field == "order") return a.order != b.order;
  if (field == "hamiltonian") return a.hamiltonian != b.hamiltonian;
  if (field == "derived") return a.derived != b.derived;
  if (field == "theta") return a.theta != b.theta;
  if (field == "exponent") return a.exponent != b.exponent;
  if (field == "order_spectrum") return a.order_spectrum != b.order_spectrum;
  if (field == "abelianization") return a.abelianization != b.abelianization;
  if (field == "center") return a.center != b.center;
  throw ArgumentError("unknown fingerprint field: " + field);
}

}  // namespace

SeparationReport distinguish(const std::vector<GroupTable>& groups, int p, int m,
                             int threads) {
  if (groups.empty()) throw ArgumentError("no groups to distinguish");
  const FieldDesc& field = FieldDesc::get(p, m);
  SeparationReport report;
  report.names.reserve(groups.size());
  for (const GroupTable& g : groups) report.names.push_back(g.name());
  report.fingerprints.resize(groups.size());
  for_each_index(groups.size(), threads, [&](std::size_t i) {
    AlgebraContext ctx(field, groups[i]);
    report.fingerprints[i] = fingerprint(unitary_subgroup(ctx));
  });
  report.all_separated = true;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      SeparationPair pair;
      pair.left = report.names[i];
      pair.right = report.names[j];
      for (const std::string& f : fingerprint_fields()) {
        if (field_differs(report.fingerprints[i], report.fingerprints[j], f)) {
          if (pair.separating_field.empty()) pair.separating_field = f;
          pair.differing_fields.push_back(f);
        }
      }
      if (pair.separating_field.empty()) report.all_separated = false;
      report.pairs.push_back(std::move(pair));
    }
  }
  return report;
}

std::map<std::string, unsigned long long> unitary_order_table(
    unsigned long long order, int p, int m, const std::string& filter,
    int threads) {
  const FieldDesc& field = FieldDesc::get(p, m);
  std::vector<GroupTable> groups =
      catalog(static_cast<unsigned long>(order), filter);
  std::vector<unsigned long long> sizes(groups.size(), 0);
  for_each_index(groups.size(), threads, [&](std::size_t i) {
    AlgebraContext ctx(field, groups[i]);
    sizes[i] = unitary_subgroup(ctx).size();
  });
  std::map<std::string, unsigned long long> table;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    table[groups[i].name()] = sizes[i];
  }
  return table;
}

}  // namespace uforge
