#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uforge/abelian_type.hpp"
#include "uforge/black_box.hpp"
#include "uforge/group_algebra.hpp"

namespace uforge {

// A materialized subgroup of the normalized unit group of an algebra,
// presented as a BlackBoxGroup whose handles index a sorted code list.
// Construction asserts that every element is normalized and spot-checks
// closure (exhaustively up to 2^12 elements, 10^3 random pairs beyond).
class UnitGroupView : public BlackBoxGroup {
 public:
  // star_closed marks sets closed under the classical involution, where the
  // group inverse is star itself; otherwise inverses fall back to
  // unit_inverse. The context must outlive the view.
  UnitGroupView(const AlgebraContext& ctx, std::vector<std::uint64_t> codes,
                bool star_closed);

  std::uint64_t size() const override { return codes_.size(); }
  std::uint32_t identity() const override { return id_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override;
  std::uint32_t inverse(std::uint32_t a) const override;

  const AlgebraContext& context() const { return *ctx_; }
  const std::vector<std::uint64_t>& codes() const { return codes_; }
  AlgebraElement element(std::uint32_t i) const;
  std::uint32_t index_of(std::uint64_t code) const;

 private:
  const AlgebraContext* ctx_;
  std::vector<std::uint64_t> codes_;  // sorted on construction
  bool star_closed_;
  std::uint32_t id_ = 0;
};

// Involution count for one maximal-class family member.
struct ThetaRecord {
  std::string family;  // "D", "Q" or "SD"
  int n = 0;           // group order 2^(n+1)
  unsigned long long theta = 0;
  std::string method;  // "brute", "structured" or "closed_form"
};

// What the closed formulas say about V_*(FG), and what reconstruction
// consumes. type is absent when the group is not abelian.
struct UnitaryInvariants {
  int p = 0;
  int m = 0;
  unsigned long long order = 0;
  std::optional<AbelianType> type;
  std::optional<unsigned long long> rank;
};

unsigned long long normalized_unit_count(const AlgebraContext& ctx);

// Count of symmetric normalized elements: one free coefficient per orbit of
// the inversion map on G, minus the augmentation constraint.
unsigned long long symmetric_normalized_count(const AlgebraContext& ctx);

// All augmentation-1 elements in deterministic order (lexicographic in the
// free coefficients; the identity coefficient is fixed by the constraint).
// CapacityError when |F|^(|G|-1) > 2^24.
UnitGroupView enumerate_normalized_units(const AlgebraContext& ctx, int threads = 1);

// {u in V : u star(u) = 1}, by filtering the full enumeration.
UnitGroupView unitary_subgroup(const AlgebraContext& ctx, int threads = 1);

// The same subgroup for odd p and abelian G, materialized without touching
// all of V: u -> u star(u)^-1 maps V onto the unitary subgroup, so closing
// its images of 1 + c(g_1-1)^(e_1)...(g_k-1)^(e_k) generators suffices.
// The combinatorial order |V|/|S| is asserted on the result.
UnitGroupView unitary_subgroup_closure(const AlgebraContext& ctx);

// Count of x in V_*(FG) with x^2 = 1, identity included; the group must be
// dihedral, quaternion or semidihedral over GF(2).
ThetaRecord theta_brute(const AlgebraContext& ctx, int threads = 1);

// Families "D": 2^(2^n+2) - 2^(3*2^(n-2)+1) and "Q": 2^(3*2^(n-2)+1),
// n >= 2. There is no closed form for "SD"; requesting it is an error.
ThetaRecord theta_closed_form(const std::string& family, int n);

// Counts solutions of the per-family coefficient systems over the cyclic
// subalgebra FC, n <= 4 ("D", "Q": n >= 2, "SD": n >= 3).
ThetaRecord theta_structured(const std::string& family, int n);

// |{h in V(FC_{2^n}) : h star(h) (1+a)^i (1+a^-1)^i has only even-power
// support}| over GF(2), by direct enumeration. 2 <= n <= 4, 0 <= i <= 2^n.
unsigned long long h_set_size(int n, std::size_t i);

// |{x in V(FC_{2^n}) : star(x) = x, x^2 = 1}| over GF(2), 2 <= n <= 4.
unsigned long long s_star_two_size(int n);

// Closed-form invariants of V_*(GF(2^m)G) for an abelian 2-group: the
// 2-rank, the full abelian type (V_* = G x M) and the order. The three
// formulas are evaluated independently and cross-checked; disagreement
// raises InternalCheckError.
UnitaryInvariants lemma1_forward(const AbelianType& type, int m);

// Closed-form type of V_*(GF(p^m)G) for an abelian p-group, p odd:
// f_i = (m/2)(|G^(p^(i-1))| - 2|G^(p^i)| + |G^(p^(i+1))|). Non-integer
// values raise FormulaDomainError; the order must come out as
// |F|^((|G|-1)/2).
UnitaryInvariants lemma2_forward(const AbelianType& type, int m);

// Inverts |V_*(FG)| to |G|. For p = 2 the order windows
// [q^(|G|/2), q^(|G|-1)] of consecutive group orders are disjoint; for odd
// p the order is exactly q^((|G|-1)/2). InconsistentInputError when the
// value fits no group order.
unsigned long long order_of_base_group(unsigned long long unitary_order, int p, int m);

// Search-based inversion of the forward formulas: forward-map every abelian
// type of the deduced group order and return the unique match.
// InconsistentInputError when nothing matches; TheoremViolation when more
// than one does (uniqueness is a theorem, so duplicates are diagnostics).
AbelianType reconstruct(const UnitaryInvariants& inv, int p, int m);

// Whether V_*(FG) = V(FG) for an abelian 2-group, decided by closed forms.
bool is_full_unitary(const AbelianType& type, int m);

}  // namespace uforge
