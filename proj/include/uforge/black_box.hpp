#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "uforge/abelian_type.hpp"

namespace uforge {

// A finite group presented through a multiplication oracle. Elements are
// handles in [0, size); implementations define what a handle denotes (a row
// of a Cayley table, a packed algebra element, a coset). Implementations are
// immutable after construction, so the analysis functions below may be
// called from concurrent workers.
class BlackBoxGroup {
 public:
  virtual ~BlackBoxGroup() = default;

  virtual std::uint64_t size() const = 0;
  virtual std::uint32_t identity() const = 0;
  virtual std::uint32_t mul(std::uint32_t a, std::uint32_t b) const = 0;
  virtual std::uint32_t inverse(std::uint32_t a) const = 0;
};

std::uint32_t bb_pow(const BlackBoxGroup& G, std::uint32_t g, unsigned long long e);

unsigned long long element_order(const BlackBoxGroup& G, std::uint32_t g);

// Order counts including order 1 for the identity.
std::map<unsigned long long, unsigned long long> order_spectrum(const BlackBoxGroup& G);

unsigned long long group_exponent(const BlackBoxGroup& G);

// Subgroup generated by gens, as a sorted handle list. Cost is proportional
// to the subgroup size times the generator count.
std::vector<std::uint32_t> subgroup_closure(const BlackBoxGroup& G,
                                            const std::vector<std::uint32_t>& gens);

// Small generating set found by random extension with a fixed seed: add a
// random element outside the current closure until the closure is the whole
// group. Deterministic across runs, at most log2(size) generators.
std::vector<std::uint32_t> greedy_generators(const BlackBoxGroup& G);

// Certified: computes a generating set and checks that all its pairs
// commute, which decides the question exactly.
bool is_abelian(const BlackBoxGroup& G);

bool is_normal(const BlackBoxGroup& G, const std::vector<std::uint32_t>& subgroup);

// Normal closure of the commutators of a generating set. Falls back to
// all-pairs element commutators if the generating set exceeds 20.
std::vector<std::uint32_t> derived_subgroup_elements(const BlackBoxGroup& G);

std::vector<std::uint32_t> center_elements(const BlackBoxGroup& G);

// Nonabelian with every cyclic subgroup normal.
bool is_hamiltonian(const BlackBoxGroup& G);

// Canonical type of an abelian group: the torsion counts N_i = #{x : x^(p^i)
// = 1} determine the multiplicities through second differences of log_p N_i.
// ArgumentError if G is not abelian.
AbelianType abelian_type(const BlackBoxGroup& G);

// A subgroup re-indexed as a group of its own. Holds a reference to the
// parent, which must outlive the view.
class SubgroupView : public BlackBoxGroup {
 public:
  SubgroupView(const BlackBoxGroup& parent, std::vector<std::uint32_t> elements);

  std::uint64_t size() const override { return elems_.size(); }
  std::uint32_t identity() const override { return id_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override;
  std::uint32_t inverse(std::uint32_t a) const override;

  const std::vector<std::uint32_t>& parent_elements() const { return elems_; }

 private:
  std::uint32_t local(std::uint32_t parent_handle) const;

  const BlackBoxGroup* parent_;
  std::vector<std::uint32_t> elems_;
  std::unordered_map<std::uint32_t, std::uint32_t> index_;
  std::uint32_t id_ = 0;
};

// Quotient by a normal subgroup; elements are cosets with the minimal parent
// handle as canonical representative. Holds a reference to the parent.
class QuotientView : public BlackBoxGroup {
 public:
  QuotientView(const BlackBoxGroup& parent, const std::vector<std::uint32_t>& normal);

  std::uint64_t size() const override { return reps_.size(); }
  std::uint32_t identity() const override { return id_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override;
  std::uint32_t inverse(std::uint32_t a) const override;

  std::uint32_t coset_of(std::uint32_t parent_handle) const;
  std::uint32_t representative(std::uint32_t coset) const { return reps_[coset]; }

 private:
  const BlackBoxGroup* parent_;
  std::vector<std::uint32_t> coset_of_;
  std::vector<std::uint32_t> reps_;
  std::uint32_t id_ = 0;
};

AbelianType subgroup_type(const BlackBoxGroup& G, const std::vector<std::uint32_t>& elements);

AbelianType quotient_type(const BlackBoxGroup& G, const std::vector<std::uint32_t>& normal);

}  // namespace uforge
