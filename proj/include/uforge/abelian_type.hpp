#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace uforge {

// p^e with an overflow guard; throws CapacityError past 64 bits.
unsigned long long pow_checked(unsigned long long base, unsigned long long exp);

// True if n is a power of p (1 counts); log_p(n) available via log_of_power.
bool is_power_of(unsigned long long n, unsigned long long p);
unsigned long long log_of_power(unsigned long long n, unsigned long long p);

// Smallest prime factor of a prime-power order; ArgumentError when the order
// is not a power of a single prime in {2,3,5,7}.
int group_prime(unsigned long long order);

// Canonical form of a finite abelian p-group: f(i) counts the cyclic factors
// of order p^i. Trailing zero multiplicities are trimmed, so two types are
// isomorphic iff they compare equal.
class AbelianType {
 public:
  // factors[0] is the multiplicity of C_p (that is, f(1)).
  AbelianType(int p, std::vector<long long> factors);
  static AbelianType trivial(int p);

  int p() const { return p_; }
  // f(i) for i >= 1; zero beyond the stored range. f(0) is not defined.
  long long f(std::size_t i) const;
  const std::vector<long long>& factors() const { return f_; }

  // e with exponent(G) = p^e; zero for the trivial group.
  std::size_t exponent_index() const { return f_.size(); }
  unsigned long long order() const;
  unsigned long long exponent() const;
  long long rank() const;
  bool is_trivial() const { return f_.empty(); }
  bool is_elementary() const { return f_.size() <= 1; }

  // Cyclic factor orders, largest first, e.g. {4, 2, 2}.
  std::vector<unsigned long long> parts() const;

  // Compact display form, e.g. "C4xC2^2"; "1" for the trivial group.
  std::string to_string() const;

  // |G^{p^i}|, |G^{p^i}[p]| and |G[p^i]| evaluated from the multiplicities:
  //   |G^{p^i}|    = p^(sum_{j>i} (j-i) f_j)
  //   |G^{p^i}[p]| = p^(sum_{j>i} f_j)
  //   |G[p^i]|     = p^(sum_j min(i,j) f_j)
  unsigned long long power_subgroup_order(std::size_t i) const;
  unsigned long long power_subgroup_p_torsion(std::size_t i) const;
  unsigned long long torsion_subgroup_order(std::size_t i) const;

  // Trivial types compare equal regardless of prime; there is only one
  // trivial group.
  bool operator==(const AbelianType& o) const {
    return f_ == o.f_ && (p_ == o.p_ || f_.empty());
  }
  bool operator!=(const AbelianType& o) const { return !(*this == o); }
  bool operator<(const AbelianType& o) const;

  // Every abelian p-group type of the given order, in a fixed deterministic
  // order (partitions of log_p(order), largest exponent first).
  static std::vector<AbelianType> all_of_order(int p, unsigned long long order);

 private:
  int p_;
  std::vector<long long> f_;
};

}  // namespace uforge
