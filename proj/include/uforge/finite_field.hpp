#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace uforge {

// Exact arithmetic in GF(p^m) for p in {2,3,5,7} and 1 <= m <= 4.
//
// Elements are codes in [0, q) with q = p^m: the base-p digits of a code are
// the coefficients of its polynomial representative, least significant digit
// first. Code 0 is zero, code 1 is one, code p is the generator x (m >= 2).
// All operations are table driven; there is no floating point anywhere.
class FieldDesc {
 public:
  // Shared descriptor for GF(p^m). Built once per (p, m) from a fixed table
  // of reduction polynomials and cached for the process lifetime, so every
  // downstream count is reproducible across runs. Unsupported (p, m) throws
  // ConfigError. Thread safe.
  static const FieldDesc& get(int p, int m);

  int p() const { return p_; }
  int m() const { return m_; }
  int q() const { return q_; }

  // Monic reduction polynomial; coefficient of x^i at index i, length m+1.
  // Irreducibility is re-verified at construction by trial division.
  const std::vector<int>& reduction_poly() const { return poly_; }

  int add(int a, int b) const { return add_[index(a, b)]; }
  int sub(int a, int b) const { return add_[index(a, neg(b))]; }
  int mul(int a, int b) const { return mul_[index(a, b)]; }
  int neg(int a) const { return neg_[check(a)]; }
  // Throws DivisionByZeroError on inv(0).
  int inv(int a) const;
  int pow(int a, unsigned long long e) const;

  int zero() const { return 0; }
  int one() const { return 1; }

  std::vector<int> coeffs(int a) const;
  int from_coeffs(const std::vector<int>& c) const;
  std::string to_string(int a) const;

 private:
  FieldDesc(int p, int m, const std::vector<int>& poly);

  std::size_t index(int a, int b) const {
    return std::size_t(check(a)) * std::size_t(q_) + std::size_t(check(b));
  }
  int check(int a) const;

  int p_ = 0;
  int m_ = 0;
  int q_ = 0;
  std::vector<int> poly_;
  std::vector<uint16_t> add_;
  std::vector<uint16_t> mul_;
  std::vector<uint16_t> neg_;
  std::vector<uint16_t> inv_;
};

// A field element that carries its field, so values from different fields
// cannot be combined silently. Thin wrapper over the code representation;
// hot paths work on raw codes through FieldDesc directly.
class FieldElement {
 public:
  FieldElement(const FieldDesc& field, int code);

  const FieldDesc& field() const { return *field_; }
  int code() const { return code_; }
  std::vector<int> coeffs() const { return field_->coeffs(code_); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(unsigned long long e) const;

  bool operator==(const FieldElement& o) const {
    return field_ == o.field_ && code_ == o.code_;
  }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  const FieldDesc* field_;
  int code_;
};

// Dense matrix over a single field, entries stored as codes.
class Matrix {
 public:
  Matrix(const FieldDesc& field, std::size_t rows, std::size_t cols);

  const FieldDesc& field() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  int at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, int code);

 private:
  const FieldDesc* field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<uint16_t> a_;
};

// Basis of the right null space {v : Mv = 0} via Gaussian elimination.
// Each basis vector is a code list of length cols; the list is empty when
// the kernel is trivial. dim(kernel) + rank = cols.
std::vector<std::vector<int>> kernel_basis(const Matrix& M);

std::size_t matrix_rank(const Matrix& M);

}  // namespace uforge
