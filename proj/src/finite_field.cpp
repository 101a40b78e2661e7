#include "uforge/finite_field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <utility>

#include "uforge/errors.hpp"

namespace uforge {
namespace {

// Fixed reduction polynomials, little endian, one per supported (p, m).
// Keeping these built in (rather than user supplied) makes every downstream
// count reproducible across runs and machines.
struct PolyEntry {
  int p;
  int m;
  std::vector<int> coeffs;
};

const std::vector<PolyEntry>& poly_table() {
  static const std::vector<PolyEntry> table = {
      {2, 1, {0, 1}},          {2, 2, {1, 1, 1}},
      {2, 3, {1, 1, 0, 1}},    {2, 4, {1, 1, 0, 0, 1}},
      {3, 1, {0, 1}},          {3, 2, {1, 0, 1}},
      {3, 3, {1, 2, 0, 1}},    {3, 4, {2, 0, 0, 2, 1}},
      {5, 1, {0, 1}},          {5, 2, {2, 0, 1}},
      {5, 3, {1, 1, 0, 1}},    {5, 4, {2, 0, 0, 0, 1}},
      {7, 1, {0, 1}},          {7, 2, {1, 0, 1}},
      {7, 3, {2, 0, 0, 1}},    {7, 4, {1, 0, 0, 1, 1}},
  };
  return table;
}

int poly_degree(const std::vector<int>& f) {
  for (int d = int(f.size()) - 1; d >= 0; --d) {
    if (f[std::size_t(d)] != 0) return d;
  }
  return -1;
}

// Remainder of f modulo g over GF(p), g nonzero.
std::vector<int> poly_mod(std::vector<int> f, const std::vector<int>& g, int p) {
  int dg = poly_degree(g);
  int lead_inv = 0;
  for (int c = 1; c < p; ++c) {
    if (c * g[std::size_t(dg)] % p == 1) lead_inv = c;
  }
  for (int d = poly_degree(f); d >= dg; d = poly_degree(f)) {
    int factor = f[std::size_t(d)] * lead_inv % p;
    for (int i = 0; i <= dg; ++i) {
      int& c = f[std::size_t(d - dg + i)];
      c = ((c - factor * g[std::size_t(i)]) % p + p) % p;
    }
  }
  f.resize(std::size_t(dg));
  return f;
}

bool poly_is_zero(const std::vector<int>& f) { return poly_degree(f) < 0; }

// Irreducibility over GF(p) by trial division with every monic polynomial of
// degree 1..deg/2. Degrees here are at most 4, so the trial space is tiny.
bool poly_irreducible(const std::vector<int>& f, int p) {
  int deg = poly_degree(f);
  if (deg < 1) return false;
  for (int d = 1; 2 * d <= deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long t = 0; t < count; ++t) {
      std::vector<int> g(std::size_t(d) + 1, 0);
      long long v = t;
      for (int i = 0; i < d; ++i) {
        g[std::size_t(i)] = int(v % p);
        v /= p;
      }
      g[std::size_t(d)] = 1;
      if (poly_is_zero(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

std::vector<int> code_to_poly(int code, int p, int m) {
  std::vector<int> c(std::size_t(m), 0);
  for (int i = 0; i < m; ++i) {
    c[std::size_t(i)] = code % p;
    code /= p;
  }
  return c;
}

int poly_to_code(const std::vector<int>& c, int p, int m) {
  int code = 0;
  for (int i = m - 1; i >= 0; --i) {
    int digit = i < int(c.size()) ? c[std::size_t(i)] : 0;
    code = code * p + digit;
  }
  return code;
}

}  // namespace

const FieldDesc& FieldDesc::get(int p, int m) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<FieldDesc>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, m);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  for (const PolyEntry& e : poly_table()) {
    if (e.p == p && e.m == m) {
      auto desc = std::unique_ptr<FieldDesc>(new FieldDesc(p, m, e.coeffs));
      auto* raw = desc.get();
      cache.emplace(key, std::move(desc));
      return *raw;
    }
  }
  throw ConfigError("unsupported field GF(" + std::to_string(p) + "^" +
                    std::to_string(m) +
                    "): supported p in {2,3,5,7}, 1 <= m <= 4");
}

FieldDesc::FieldDesc(int p, int m, const std::vector<int>& poly)
    : p_(p), m_(m), poly_(poly) {
  if (!poly_irreducible(poly_, p_)) {
    throw ConfigError("reduction polynomial for GF(" + std::to_string(p) +
                      "^" + std::to_string(m) + ") is not irreducible");
  }
  q_ = 1;
  for (int i = 0; i < m_; ++i) q_ *= p_;

  add_.assign(std::size_t(q_) * std::size_t(q_), 0);
  mul_.assign(std::size_t(q_) * std::size_t(q_), 0);
  neg_.assign(std::size_t(q_), 0);
  inv_.assign(std::size_t(q_), 0);

  for (int a = 0; a < q_; ++a) {
    std::vector<int> pa = code_to_poly(a, p_, m_);
    std::vector<int> na(std::size_t(m_), 0);
    for (int i = 0; i < m_; ++i) na[std::size_t(i)] = (p_ - pa[std::size_t(i)]) % p_;
    neg_[std::size_t(a)] = uint16_t(poly_to_code(na, p_, m_));
    for (int b = 0; b < q_; ++b) {
      std::vector<int> pb = code_to_poly(b, p_, m_);
      std::vector<int> s(std::size_t(m_), 0);
      for (int i = 0; i < m_; ++i) {
        s[std::size_t(i)] = (pa[std::size_t(i)] + pb[std::size_t(i)]) % p_;
      }
      add_[std::size_t(a) * std::size_t(q_) + std::size_t(b)] =
          uint16_t(poly_to_code(s, p_, m_));

      std::vector<int> prod(std::size_t(2 * m_ - 1), 0);
      for (int i = 0; i < m_; ++i) {
        for (int j = 0; j < m_; ++j) {
          prod[std::size_t(i + j)] =
              (prod[std::size_t(i + j)] + pa[std::size_t(i)] * pb[std::size_t(j)]) % p_;
        }
      }
      std::vector<int> red = poly_mod(prod, poly_, p_);
      int code = poly_to_code(red, p_, m_);
      mul_[std::size_t(a) * std::size_t(q_) + std::size_t(b)] = uint16_t(code);
      if (code == 1) inv_[std::size_t(a)] = uint16_t(b);
    }
  }
}

int FieldDesc::check(int a) const {
  if (a < 0 || a >= q_) {
    throw ArgumentError("field code " + std::to_string(a) + " out of range for GF(" +
                        std::to_string(p_) + "^" + std::to_string(m_) + ")");
  }
  return a;
}

int FieldDesc::inv(int a) const {
  if (check(a) == 0) {
    throw DivisionByZeroError("inverse of zero in GF(" + std::to_string(p_) + "^" +
                              std::to_string(m_) + ")");
  }
  return inv_[std::size_t(a)];
}

int FieldDesc::pow(int a, unsigned long long e) const {
  int base = check(a);
  int acc = 1;
  while (e > 0) {
    if (e & 1ULL) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1ULL;
  }
  return acc;
}

std::vector<int> FieldDesc::coeffs(int a) const {
  return code_to_poly(check(a), p_, m_);
}

int FieldDesc::from_coeffs(const std::vector<int>& c) const {
  if (int(c.size()) > m_) {
    throw ArgumentError("coefficient list longer than extension degree");
  }
  for (int v : c) {
    if (v < 0 || v >= p_) throw ArgumentError("coefficient out of [0, p)");
  }
  return poly_to_code(c, p_, m_);
}

std::string FieldDesc::to_string(int a) const {
  std::vector<int> c = coeffs(a);
  std::ostringstream out;
  bool first = true;
  for (int i = m_ - 1; i >= 0; --i) {
    int v = c[std::size_t(i)];
    if (v == 0) continue;
    if (!first) out << "+";
    if (i == 0 || v > 1) out << v;
    if (i >= 1) out << (v > 1 ? "*x" : "x");
    if (i >= 2) out << "^" << i;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

FieldElement::FieldElement(const FieldDesc& field, int code) : field_(&field), code_(code) {
  if (code < 0 || code >= field.q()) {
    throw ArgumentError("field element code out of range");
  }
}

namespace {
const FieldDesc& same_field(const FieldElement& a, const FieldElement& b) {
  if (&a.field() != &b.field()) {
    throw ArgumentError("field elements belong to different fields");
  }
  return a.field();
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  const FieldDesc& f = same_field(*this, o);
  return FieldElement(f, f.add(code_, o.code_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  const FieldDesc& f = same_field(*this, o);
  return FieldElement(f, f.sub(code_, o.code_));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  const FieldDesc& f = same_field(*this, o);
  return FieldElement(f, f.mul(code_, o.code_));
}

FieldElement FieldElement::operator-() const {
  return FieldElement(*field_, field_->neg(code_));
}

FieldElement FieldElement::inverse() const {
  return FieldElement(*field_, field_->inv(code_));
}

FieldElement FieldElement::pow(unsigned long long e) const {
  return FieldElement(*field_, field_->pow(code_, e));
}

Matrix::Matrix(const FieldDesc& field, std::size_t rows, std::size_t cols)
    : field_(&field), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

int Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw ArgumentError("matrix index out of range");
  return a_[r * cols_ + c];
}

void Matrix::set(std::size_t r, std::size_t c, int code) {
  if (r >= rows_ || c >= cols_) throw ArgumentError("matrix index out of range");
  if (code < 0 || code >= field_->q()) throw ArgumentError("matrix entry out of range");
  a_[r * cols_ + c] = uint16_t(code);
}

namespace {

// Row echelon pass; returns pivot column per row-rank entry.
std::vector<std::size_t> eliminate(const FieldDesc& f, std::vector<int>& a,
                                   std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = row;
    while (sel < rows && a[sel * cols + col] == 0) ++sel;
    if (sel == rows) continue;
    for (std::size_t c = 0; c < cols; ++c) {
      std::swap(a[sel * cols + c], a[row * cols + c]);
    }
    int piv_inv = f.inv(a[row * cols + col]);
    for (std::size_t c = 0; c < cols; ++c) {
      a[row * cols + c] = f.mul(a[row * cols + c], piv_inv);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r * cols + col] == 0) continue;
      int factor = a[r * cols + col];
      for (std::size_t c = 0; c < cols; ++c) {
        a[r * cols + c] = f.sub(a[r * cols + c], f.mul(factor, a[row * cols + c]));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<int>> kernel_basis(const Matrix& M) {
  const FieldDesc& f = M.field();
  std::size_t rows = M.rows();
  std::size_t cols = M.cols();
  std::vector<int> a(rows * cols, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = M.at(r, c);
  }
  std::vector<std::size_t> pivots = eliminate(f, a, rows, cols);

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<std::vector<int>> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<int> v(cols, 0);
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = f.neg(a[r * cols + free_col]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t matrix_rank(const Matrix& M) {
  return M.cols() - kernel_basis(M).size();
}

}  // namespace uforge
