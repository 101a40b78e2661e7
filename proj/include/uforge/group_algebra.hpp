#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uforge/finite_field.hpp"
#include "uforge/group_table.hpp"

namespace uforge {

class AlgebraContext;

// An element of the group algebra FG: a coefficient vector over F indexed by
// group handles, packed into one 64-bit code (base-q digits, least
// significant digit at group handle 0). Immutable value type; operations go
// through the owning AlgebraContext, and elements of different contexts do
// not mix.
class AlgebraElement {
 public:
  AlgebraElement() = default;

  const AlgebraContext& context() const { return *ctx_; }
  std::uint64_t code() const { return code_; }

  // Field element code of the coefficient at a group handle.
  int coeff(std::uint32_t g) const;
  std::vector<int> coeffs() const;

  bool operator==(const AlgebraElement& o) const;
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }
  bool operator<(const AlgebraElement& o) const;

  std::string to_string() const;

 private:
  friend class AlgebraContext;
  AlgebraElement(const AlgebraContext* ctx, std::uint64_t code)
      : ctx_(ctx), code_(code) {}

  const AlgebraContext* ctx_ = nullptr;
  std::uint64_t code_ = 0;
};

// The algebra FG for a fixed field and group. Holds the multiplication
// machinery: a byte-permutation fast path when |F| = 2, the table-driven
// convolution otherwise. Contexts are immutable after construction and
// addresses must remain stable while elements exist, so the type is pinned.
class AlgebraContext {
 public:
  // CapacityError if the q^|G| element codes do not fit in 64 bits.
  AlgebraContext(const FieldDesc& field, GroupTable group);

  AlgebraContext(const AlgebraContext&) = delete;
  AlgebraContext& operator=(const AlgebraContext&) = delete;

  const FieldDesc& field() const { return *field_; }
  const GroupTable& group() const { return group_; }

  // Largest valid element code; the code space is exactly [0, max_code()].
  std::uint64_t max_code() const { return max_code_; }

  AlgebraElement zero() const { return element(0); }
  AlgebraElement one() const;
  AlgebraElement embed(std::uint32_t g) const;
  AlgebraElement element(std::uint64_t code) const;
  AlgebraElement from_coeffs(const std::vector<int>& coeffs) const;

  int coeff_of(std::uint64_t code, std::uint32_t g) const;

 private:
  friend class AlgebraElement;
  friend AlgebraElement operator+(const AlgebraElement&, const AlgebraElement&);
  friend AlgebraElement operator*(const AlgebraElement&, const AlgebraElement&);
  friend AlgebraElement mul_generic(const AlgebraElement&, const AlgebraElement&);
  friend AlgebraElement scale(const FieldElement&, const AlgebraElement&);
  friend AlgebraElement star(const AlgebraElement&);
  friend AlgebraElement tilde(const AlgebraElement&);
  friend FieldElement augmentation(const AlgebraElement&);

  std::uint64_t add_codes(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mul_codes(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mul_codes_generic(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mul_codes_packed(std::uint64_t a, std::uint64_t b) const;
  std::vector<int> decode(std::uint64_t code) const;
  std::uint64_t encode(const std::vector<int>& coeffs) const;

  const FieldDesc* field_;
  GroupTable group_;
  std::uint32_t n_;
  std::uint64_t max_code_;
  bool packed_;            // |F| = 2: digits are bits, addition is XOR
  std::uint32_t digit_bits_ = 0;  // p = 2: digits occupy fixed bit fields
  std::uint64_t digit_mask_ = 0;
  // packed path: for group handle g and byte position B of the operand,
  // perm_[(g * bytes + B) * 256 + byte] is the image of those 8 bits under
  // left multiplication by g.
  std::vector<std::uint64_t> perm_;
  std::uint32_t bytes_ = 0;
};

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);

// Reference convolution product; the fast path is validated against it.
AlgebraElement mul_generic(const AlgebraElement& x, const AlgebraElement& y);

AlgebraElement scale(const FieldElement& c, const AlgebraElement& x);

AlgebraElement algebra_pow(const AlgebraElement& x, unsigned long long e);

// Sum of coefficients; a ring homomorphism onto F.
FieldElement augmentation(const AlgebraElement& x);

// Classical involution: coefficient of g moves to g^{-1}. An involutive
// anti-automorphism.
AlgebraElement star(const AlgebraElement& x);

// Automorphism of F[C_{2^n}] induced by a -> a^(1+2^(n-1)): even powers of a
// are fixed, odd powers shift by 2^(n-1). ArgumentError unless the group is
// cyclic of 2-power order >= 4.
AlgebraElement tilde(const AlgebraElement& x);

// Inverse of a normalized element (augmentation exactly 1) of a modular
// p-group algebra, where every such element is a unit of 2-power or p-power
// order; computed as x^(ord-1). ArgumentError if augmentation != 1.
AlgebraElement unit_inverse(const AlgebraElement& x);

// Dimension over F of {y : x y = 0}, from the rank of the left
// multiplication matrix.
std::size_t annihilator_dim(const AlgebraElement& x);

}  // namespace uforge
