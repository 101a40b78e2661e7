#include "uforge/finite_field.hpp"

#include <doctest.h>

#include <random>
#include <vector>

#include "uforge/errors.hpp"

using uforge::ArgumentError;
using uforge::ConfigError;
using uforge::DivisionByZeroError;
using uforge::FieldDesc;
using uforge::FieldElement;
using uforge::Matrix;
using uforge::kernel_basis;
using uforge::matrix_rank;

namespace {

const int kSupportedP[] = {2, 3, 5, 7};

// Trial-division irreducibility oracle, written independently of the library
// implementation: evaluates candidate divisors via explicit long division.
bool oracle_irreducible(const std::vector<int>& f, int p) {
  int deg = int(f.size()) - 1;
  while (deg >= 0 && f[std::size_t(deg)] == 0) --deg;
  if (deg < 1) return false;
  for (int d = 1; 2 * d <= deg; ++d) {
    long long total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    for (long long t = 0; t < total; ++t) {
      std::vector<int> g(std::size_t(d) + 1, 0);
      long long v = t;
      for (int i = 0; i < d; ++i) {
        g[std::size_t(i)] = int(v % p);
        v /= p;
      }
      g[std::size_t(d)] = 1;
      std::vector<int> r = f;
      for (int k = deg; k >= d; --k) {
        int lead = r[std::size_t(k)] % p;
        if (lead == 0) continue;
        for (int i = 0; i <= d; ++i) {
          int& c = r[std::size_t(k - d + i)];
          c = ((c - lead * g[std::size_t(i)]) % p + p) % p;
        }
      }
      bool zero = true;
      for (int i = 0; i < d; ++i) zero = zero && r[std::size_t(i)] % p == 0;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("supported fields construct and reject") {
  for (int p : kSupportedP) {
    for (int m = 1; m <= 4; ++m) {
      const FieldDesc& f = FieldDesc::get(p, m);
      CHECK(f.p() == p);
      CHECK(f.m() == m);
      int q = 1;
      for (int i = 0; i < m; ++i) q *= p;
      CHECK(f.q() == q);
      CHECK(int(f.reduction_poly().size()) == m + 1);
      CHECK(f.reduction_poly().back() == 1);
      if (m >= 2) {
        CHECK(oracle_irreducible(f.reduction_poly(), p));
      }
    }
  }
  CHECK_THROWS_AS(FieldDesc::get(4, 1), ConfigError);
  CHECK_THROWS_AS(FieldDesc::get(11, 1), ConfigError);
  CHECK_THROWS_AS(FieldDesc::get(2, 0), ConfigError);
  CHECK_THROWS_AS(FieldDesc::get(2, 5), ConfigError);
}

TEST_CASE("field descriptors are cached singletons") {
  const FieldDesc& a = FieldDesc::get(2, 3);
  const FieldDesc& b = FieldDesc::get(2, 3);
  CHECK(&a == &b);
}

TEST_CASE("field axioms hold exhaustively for q <= 81") {
  for (auto [p, m] : {std::pair{2, 1}, {2, 2}, {2, 3}, {2, 4},
                      {3, 1}, {3, 2}, {3, 3}, {5, 1}, {7, 1}}) {
    const FieldDesc& f = FieldDesc::get(p, m);
    int q = f.q();
    for (int a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.mul(a, 0) == 0);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (int b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
      }
    }
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        for (int c = 0; c < q; ++c) {
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("multiplicative group order is q-1 in every supported field") {
  for (int p : kSupportedP) {
    for (int m = 1; m <= 4; ++m) {
      const FieldDesc& f = FieldDesc::get(p, m);
      for (int a = 1; a < f.q(); ++a) {
        CHECK(f.pow(a, (unsigned long long)(f.q() - 1)) == 1);
      }
    }
  }
}

TEST_CASE("Frobenius holds exhaustively for q <= 81") {
  for (auto [p, m] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}}) {
    const FieldDesc& f = FieldDesc::get(p, m);
    for (int a = 0; a < f.q(); ++a) {
      for (int b = 0; b < f.q(); ++b) {
        CHECK(f.pow(f.add(a, b), (unsigned long long)p) ==
              f.add(f.pow(a, (unsigned long long)p), f.pow(b, (unsigned long long)p)));
      }
    }
  }
}

TEST_CASE("pinned arithmetic values") {
  const FieldDesc& f2 = FieldDesc::get(2, 1);
  CHECK(f2.add(1, 1) == 0);

  // GF(4): x*x = x+1 under x^2+x+1. Code of x is 2, of x+1 is 3.
  const FieldDesc& f4 = FieldDesc::get(2, 2);
  CHECK(f4.mul(2, 2) == 3);
  CHECK(f4.to_string(3) == "x+1");

  // GF(9): x*x = 2 under x^2+1. Code of x is 3.
  const FieldDesc& f9 = FieldDesc::get(3, 2);
  CHECK(f9.mul(3, 3) == 2);

  CHECK(f9.from_coeffs({0, 1}) == 3);
  CHECK(f9.coeffs(5) == std::vector<int>{2, 1});
  CHECK_THROWS_AS(f9.from_coeffs({0, 3}), ArgumentError);
  CHECK_THROWS_AS(f2.inv(0), DivisionByZeroError);
}

TEST_CASE("field elements refuse cross-field arithmetic") {
  const FieldDesc& f4 = FieldDesc::get(2, 2);
  const FieldDesc& f9 = FieldDesc::get(3, 2);
  FieldElement a(f4, 2);
  FieldElement b(f9, 2);
  CHECK_THROWS_AS(a + b, ArgumentError);
  CHECK_THROWS_AS(a * b, ArgumentError);
  CHECK(a + a == FieldElement(f4, 0));
  CHECK(a * a == FieldElement(f4, 3));
  CHECK(a.inverse() * a == FieldElement(f4, 1));
  CHECK(a.pow(3) == FieldElement(f4, 1));
}

TEST_CASE("kernel of identity and zero matrices") {
  const FieldDesc& f2 = FieldDesc::get(2, 1);
  Matrix id(f2, 3, 3);
  for (std::size_t i = 0; i < 3; ++i) id.set(i, i, 1);
  CHECK(kernel_basis(id).empty());
  CHECK(matrix_rank(id) == 3);

  Matrix zero(f2, 2, 2);
  CHECK(kernel_basis(zero).size() == 2);
  CHECK(matrix_rank(zero) == 0);
}

TEST_CASE("kernel vectors annihilate and match brute-force counts") {
  std::mt19937_64 rng(7);
  for (auto [p, m] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    const FieldDesc& f = FieldDesc::get(p, m);
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t rows = 1 + std::size_t(rng() % 4);
      std::size_t cols = 1 + std::size_t(rng() % 5);
      Matrix M(f, rows, cols);
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
          M.set(r, c, int(rng() % (unsigned long long)f.q()));
        }
      }
      auto basis = kernel_basis(M);
      for (const auto& v : basis) {
        for (std::size_t r = 0; r < rows; ++r) {
          int s = 0;
          for (std::size_t c = 0; c < cols; ++c) s = f.add(s, f.mul(M.at(r, c), v[c]));
          CHECK(s == 0);
        }
      }
      // Brute-force count of null vectors: q^dim(kernel) must match.
      unsigned long long total = 1;
      for (std::size_t c = 0; c < cols; ++c) total *= (unsigned long long)f.q();
      unsigned long long null_count = 0;
      for (unsigned long long t = 0; t < total; ++t) {
        unsigned long long v = t;
        std::vector<int> x(cols, 0);
        for (std::size_t c = 0; c < cols; ++c) {
          x[c] = int(v % (unsigned long long)f.q());
          v /= (unsigned long long)f.q();
        }
        bool null = true;
        for (std::size_t r = 0; r < rows && null; ++r) {
          int s = 0;
          for (std::size_t c = 0; c < cols; ++c) s = f.add(s, f.mul(M.at(r, c), x[c]));
          null = s == 0;
        }
        if (null) ++null_count;
      }
      unsigned long long expect = 1;
      for (std::size_t i = 0; i < basis.size(); ++i) expect *= (unsigned long long)f.q();
      CHECK(null_count == expect);
      CHECK(matrix_rank(M) + basis.size() == cols);
    }
  }
}
