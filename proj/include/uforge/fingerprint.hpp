#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uforge/abelian_type.hpp"
#include "uforge/black_box.hpp"
#include "uforge/group_table.hpp"

namespace uforge {

// Isomorphism-invariant profile of a finite group. Equal profiles are
// necessary for isomorphism, never treated as sufficient; the point is that
// unequal profiles certify non-isomorphism.
struct Fingerprint {
  unsigned long long order = 0;
  unsigned long long exponent = 0;
  // element order -> number of elements of that order
  std::map<unsigned long long, unsigned long long> order_spectrum;
  // number of solutions of x^2 = 1, identity included
  unsigned long long theta = 0;
  AbelianType abelianization = AbelianType::trivial(2);
  // absent when the derived subgroup is itself nonabelian
  std::optional<AbelianType> derived;
  AbelianType center = AbelianType::trivial(2);
  bool hamiltonian = false;

  bool operator==(const Fingerprint& other) const;
  bool operator!=(const Fingerprint& other) const { return !(*this == other); }
};

// Profiles a group given only by its multiplication oracle.
Fingerprint fingerprint(const BlackBoxGroup& group);

// Field names in the order used to pick the first separating field of a
// pair. Cheap structural bits come before the bulky spectra.
const std::vector<std::string>& fingerprint_fields();

// Printable value of one fingerprint field, for reports.
std::string fingerprint_field_value(const Fingerprint& fp, const std::string& field);

struct SeparationPair {
  std::string left;
  std::string right;
  // first entry of fingerprint_fields() on which the two profiles differ;
  // empty when the profiles are identical
  std::string separating_field;
  std::vector<std::string> differing_fields;
};

struct SeparationReport {
  std::vector<std::string> names;
  std::vector<Fingerprint> fingerprints;
  // all unordered pairs, in input order
  std::vector<SeparationPair> pairs;
  bool all_separated = false;
};

// Builds the group algebra of each input group over GF(p^m), materializes the
// unitary subgroup of its normalized units, fingerprints it, and compares
// every unordered pair of profiles. Distinct groups are spread over a worker
// pool; each unitary subgroup is computed single-threaded, and the report
// depends only on the input order.
SeparationReport distinguish(const std::vector<GroupTable>& groups, int p, int m,
                             int threads = 1);

// Brute-force order of the unitary subgroup for every catalog group of the
// given order, keyed by catalog name. The filter is passed through to the
// catalog ("all", "abelian", "nonabelian").
std::map<std::string, unsigned long long> unitary_order_table(
    unsigned long long order, int p, int m, const std::string& filter = "all",
    int threads = 1);

}  // namespace uforge
