#include "uforge/abelian_type.hpp"

#include <algorithm>
#include <sstream>

#include "uforge/errors.hpp"

namespace uforge {

unsigned long long pow_checked(unsigned long long base, unsigned long long exp) {
  unsigned __int128 acc = 1;
  for (unsigned long long i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > (unsigned __int128)0x7fffffffffffffffULL) {
      throw CapacityError("power " + std::to_string(base) + "^" + std::to_string(exp) +
                          " exceeds the 63-bit arithmetic bound");
    }
  }
  return (unsigned long long)acc;
}

bool is_power_of(unsigned long long n, unsigned long long p) {
  if (n == 0 || p < 2) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

unsigned long long log_of_power(unsigned long long n, unsigned long long p) {
  if (!is_power_of(n, p)) {
    throw ArgumentError(std::to_string(n) + " is not a power of " + std::to_string(p));
  }
  unsigned long long e = 0;
  while (n > 1) {
    n /= p;
    ++e;
  }
  return e;
}

int group_prime(unsigned long long order) {
  if (order == 0) throw ArgumentError("group order must be positive");
  for (int p : {2, 3, 5, 7}) {
    if (order % (unsigned long long)p == 0) {
      if (!is_power_of(order, (unsigned long long)p)) {
        throw ArgumentError("order " + std::to_string(order) +
                            " is not a prime power");
      }
      return p;
    }
  }
  if (order == 1) return 2;
  throw ArgumentError("order " + std::to_string(order) +
                      " has no prime factor in {2,3,5,7}");
}

AbelianType::AbelianType(int p, std::vector<long long> factors)
    : p_(p), f_(std::move(factors)) {
  if (p_ != 2 && p_ != 3 && p_ != 5 && p_ != 7) {
    throw ArgumentError("abelian type prime must be in {2,3,5,7}");
  }
  for (long long v : f_) {
    if (v < 0) throw ArgumentError("abelian type multiplicities must be nonnegative");
  }
  while (!f_.empty() && f_.back() == 0) f_.pop_back();
}

AbelianType AbelianType::trivial(int p) { return AbelianType(p, {}); }

long long AbelianType::f(std::size_t i) const {
  if (i == 0) throw ArgumentError("f(0) is not defined for an abelian type");
  return i <= f_.size() ? f_[i - 1] : 0;
}

unsigned long long AbelianType::order() const {
  unsigned long long e = 0;
  for (std::size_t i = 1; i <= f_.size(); ++i) e += (unsigned long long)i * (unsigned long long)f_[i - 1];
  return pow_checked((unsigned long long)p_, e);
}

unsigned long long AbelianType::exponent() const {
  return pow_checked((unsigned long long)p_, f_.size());
}

long long AbelianType::rank() const {
  long long r = 0;
  for (long long v : f_) r += v;
  return r;
}

std::vector<unsigned long long> AbelianType::parts() const {
  std::vector<unsigned long long> out;
  for (std::size_t i = f_.size(); i >= 1; --i) {
    for (long long k = 0; k < f_[i - 1]; ++k) {
      out.push_back(pow_checked((unsigned long long)p_, i));
    }
  }
  return out;
}

std::string AbelianType::to_string() const {
  if (f_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = f_.size(); i >= 1; --i) {
    long long mult = f_[i - 1];
    if (mult == 0) continue;
    if (!first) out << "x";
    out << "C" << pow_checked((unsigned long long)p_, i);
    if (mult > 1) out << "^" << mult;
    first = false;
  }
  return out.str();
}

unsigned long long AbelianType::power_subgroup_order(std::size_t i) const {
  unsigned long long e = 0;
  for (std::size_t j = i + 1; j <= f_.size(); ++j) {
    e += (unsigned long long)(j - i) * (unsigned long long)f_[j - 1];
  }
  return pow_checked((unsigned long long)p_, e);
}

unsigned long long AbelianType::power_subgroup_p_torsion(std::size_t i) const {
  unsigned long long e = 0;
  for (std::size_t j = i + 1; j <= f_.size(); ++j) e += (unsigned long long)f_[j - 1];
  return pow_checked((unsigned long long)p_, e);
}

unsigned long long AbelianType::torsion_subgroup_order(std::size_t i) const {
  unsigned long long e = 0;
  for (std::size_t j = 1; j <= f_.size(); ++j) {
    e += (unsigned long long)std::min(i, j) * (unsigned long long)f_[j - 1];
  }
  return pow_checked((unsigned long long)p_, e);
}

bool AbelianType::operator<(const AbelianType& o) const {
  if (f_.empty() && o.f_.empty()) return false;
  if (p_ != o.p_) return p_ < o.p_;
  return f_ < o.f_;
}

namespace {

void descending_partitions(long long remaining, long long max_part,
                           std::vector<long long>& prefix,
                           std::vector<std::vector<long long>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (long long part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    descending_partitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<AbelianType> AbelianType::all_of_order(int p, unsigned long long order) {
  unsigned long long k = log_of_power(order, (unsigned long long)p);
  std::vector<std::vector<long long>> partitions;
  std::vector<long long> prefix;
  descending_partitions((long long)k, (long long)k, prefix, partitions);
  std::vector<AbelianType> out;
  out.reserve(partitions.size());
  for (const auto& parts : partitions) {
    std::vector<long long> f(parts.empty() ? 0 : std::size_t(parts.front()), 0);
    for (long long part : parts) ++f[std::size_t(part - 1)];
    out.emplace_back(p, std::move(f));
  }
  return out;
}

}  // namespace uforge
