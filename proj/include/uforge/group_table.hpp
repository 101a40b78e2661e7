#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uforge/abelian_type.hpp"
#include "uforge/black_box.hpp"

namespace uforge {

// A finite group as an explicit Cayley table, with identity at handle 0.
// Tables are capped at 64 elements and fully verified at construction:
// two-sided identity, Latin square, inverse consistency and exhaustive
// associativity. Groups are built from hand-coded normal forms per family;
// the defining relations are asserted in the test suite.
class GroupTable final : public BlackBoxGroup {
 public:
  static GroupTable cyclic(unsigned long n);
  // Order 2^(n+1); n >= 2 for dihedral and quaternion, n >= 3 for
  // semidihedral. Elements are stored in normal form a^i b^j.
  static GroupTable dihedral(int n);
  static GroupTable quaternion(int n);
  static GroupTable semidihedral(int n);
  static GroupTable m16();
  static GroupTable g44();
  // Central product: (D8 x C4) / <(a^2, c^2)>.
  static GroupTable d8yc4();
  // C4 semidirect C4 with the second factor inverting the first.
  static GroupTable c4sc4();
  static GroupTable q8xc2();
  static GroupTable d8xc2();

  static GroupTable direct_product(const GroupTable& A, const GroupTable& B);
  // Z is given by parent handles; must be a central subgroup.
  static GroupTable quotient_by_central(const GroupTable& G,
                                        const std::vector<std::uint32_t>& Z);
  // Direct product of cyclic groups of the given orders, e.g. {4, 2} for
  // C4xC2. Orders need not be sorted; the name lists them largest first.
  static GroupTable from_parts(std::vector<unsigned long> parts);
  static GroupTable from_abelian_type(const AbelianType& type);

  std::uint64_t size() const override { return n_; }
  std::uint32_t identity() const override { return 0; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override {
    return mul_[std::size_t(a) * n_ + b];
  }
  std::uint32_t inverse(std::uint32_t a) const override { return inv_[a]; }

  // CLI-parseable display name, e.g. "SD16", "C4xC2".
  const std::string& name() const { return name_; }
  // Family metadata tag, e.g. "semidihedral 3", "product", "quotient".
  const std::string& family() const { return family_; }
  const std::vector<std::uint32_t>& generators() const { return generators_; }
  const std::string& label(std::uint32_t g) const { return labels_[g]; }

 private:
  friend GroupTable induced_subgroup(const GroupTable& G,
                                     std::vector<std::uint32_t> elements);

  GroupTable(std::vector<std::uint16_t> table, std::vector<std::string> labels,
             std::vector<std::uint32_t> generators, std::string name,
             std::string family);

  // Normal form a^i b^j with b^2 = a^t and b^-1 a b = a^r.
  static GroupTable metacyclic(unsigned long N, unsigned long r, unsigned long t,
                               std::string name, std::string family);

  std::uint32_t n_ = 0;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> inv_;
  std::vector<std::string> labels_;
  std::vector<std::uint32_t> generators_;
  std::string name_;
  std::string family_;
};

// Induced table on a subset that must be closed; labels and element order
// are inherited from the parent.
GroupTable induced_subgroup(const GroupTable& G, std::vector<std::uint32_t> elements);

// Subgroup of p^i-th powers of an abelian group.
GroupTable power_subgroup(const GroupTable& G, std::size_t i);

// Subgroup {x : x^(p^i) = 1} of an abelian group.
GroupTable torsion_subgroup(const GroupTable& G, std::size_t i);

// Groups of one order under a filter, in a fixed deterministic order.
// Orders 2..32 (powers of two); filters: abelian, nonabelian, maximal-class,
// all. The nonabelian catalog is complete only through order 16, so
// nonabelian/all at order 32 is rejected; maximal-class at 32 is supported.
std::vector<GroupTable> catalog(unsigned long order, const std::string& filter);

// Names accepted: C{n}, C{a}xC{b}..., D{2^k}, Q{2^k}, SD{2^k}, M16, G44,
// D8YC4, Q8xC2, D8xC2, C4sC4. Anything else throws ConfigError listing the
// valid forms.
GroupTable group_from_name(const std::string& name);

}  // namespace uforge
