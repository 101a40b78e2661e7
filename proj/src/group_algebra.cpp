#include "uforge/group_algebra.hpp"

#include <algorithm>

#include "uforge/errors.hpp"

namespace uforge {
namespace {

const AlgebraContext& common_context(const AlgebraElement& x, const AlgebraElement& y) {
  if (&x.context() != &y.context()) {
    throw ArgumentError("elements belong to different algebra contexts");
  }
  return x.context();
}

}  // namespace

AlgebraContext::AlgebraContext(const FieldDesc& field, GroupTable group)
    : field_(&field), group_(std::move(group)) {
  n_ = std::uint32_t(group_.size());
  unsigned __int128 total = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    total *= (unsigned)field_->q();
    if (total > (unsigned __int128)1 << 64) {
      throw CapacityError("algebra needs q^|G| element codes, which exceeds 64 bits");
    }
  }
  max_code_ = std::uint64_t(total - 1);
  packed_ = field_->q() == 2;
  if (field_->p() == 2) {
    digit_bits_ = std::uint32_t(field_->m());
    digit_mask_ = (1ULL << digit_bits_) - 1;
  }
  if (packed_) {
    bytes_ = (n_ + 7) / 8;
    perm_.assign(std::size_t(n_) * bytes_ * 256, 0);
    for (std::uint32_t g = 0; g < n_; ++g) {
      for (std::uint32_t B = 0; B < bytes_; ++B) {
        std::uint64_t* row = &perm_[(std::size_t(g) * bytes_ + B) * 256];
        for (std::uint32_t byte = 0; byte < 256; ++byte) {
          std::uint64_t image = 0;
          for (std::uint32_t b = 0; b < 8; ++b) {
            std::uint32_t h = B * 8 + b;
            if ((byte >> b & 1u) && h < n_) {
              image |= 1ULL << group_.mul(g, h);
            }
          }
          row[byte] = image;
        }
      }
    }
  }
}

AlgebraElement AlgebraContext::one() const { return embed(group_.identity()); }

AlgebraElement AlgebraContext::embed(std::uint32_t g) const {
  if (g >= n_) throw ArgumentError("group handle out of range");
  if (digit_bits_ != 0) return AlgebraElement(this, 1ULL << (g * digit_bits_));
  std::uint64_t code = 1;
  for (std::uint32_t i = 0; i < g; ++i) code *= (std::uint64_t)field_->q();
  return AlgebraElement(this, code);
}

AlgebraElement AlgebraContext::element(std::uint64_t code) const {
  if (code > max_code_) throw ArgumentError("algebra element code out of range");
  return AlgebraElement(this, code);
}

AlgebraElement AlgebraContext::from_coeffs(const std::vector<int>& coeffs) const {
  if (coeffs.size() != n_) throw ArgumentError("coefficient vector has wrong length");
  return AlgebraElement(this, encode(coeffs));
}

int AlgebraContext::coeff_of(std::uint64_t code, std::uint32_t g) const {
  if (g >= n_) throw ArgumentError("group handle out of range");
  if (digit_bits_ != 0) return int(code >> (g * digit_bits_) & digit_mask_);
  std::uint64_t q = (std::uint64_t)field_->q();
  for (std::uint32_t i = 0; i < g; ++i) code /= q;
  return int(code % q);
}

std::vector<int> AlgebraContext::decode(std::uint64_t code) const {
  std::vector<int> out(n_);
  if (digit_bits_ != 0) {
    for (std::uint32_t i = 0; i < n_; ++i) {
      out[i] = int(code >> (i * digit_bits_) & digit_mask_);
    }
    return out;
  }
  std::uint64_t q = (std::uint64_t)field_->q();
  for (std::uint32_t i = 0; i < n_; ++i) {
    out[i] = int(code % q);
    code /= q;
  }
  return out;
}

std::uint64_t AlgebraContext::encode(const std::vector<int>& coeffs) const {
  std::uint64_t q = (std::uint64_t)field_->q();
  std::uint64_t code = 0;
  for (std::uint32_t i = n_; i > 0; --i) {
    int c = coeffs[i - 1];
    if (c < 0 || c >= field_->q()) throw ArgumentError("coefficient code out of range");
    code = code * q + (std::uint64_t)c;
  }
  return code;
}

std::uint64_t AlgebraContext::add_codes(std::uint64_t a, std::uint64_t b) const {
  if (digit_bits_ != 0) return a ^ b;  // char 2: coefficientwise xor
  std::vector<int> xa = decode(a), xb = decode(b);
  for (std::uint32_t i = 0; i < n_; ++i) xa[i] = field_->add(xa[i], xb[i]);
  return encode(xa);
}

std::uint64_t AlgebraContext::mul_codes(std::uint64_t a, std::uint64_t b) const {
  return packed_ ? mul_codes_packed(a, b) : mul_codes_generic(a, b);
}

std::uint64_t AlgebraContext::mul_codes_packed(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t acc = 0;
  while (a != 0) {
    std::uint32_t g = std::uint32_t(__builtin_ctzll(a));
    a &= a - 1;
    const std::uint64_t* rows = &perm_[std::size_t(g) * bytes_ * 256];
    std::uint64_t rest = b;
    for (std::uint32_t B = 0; B < bytes_; ++B) {
      acc ^= rows[std::size_t(B) * 256 + (rest & 0xFF)];
      rest >>= 8;
    }
  }
  return acc;
}

std::uint64_t AlgebraContext::mul_codes_generic(std::uint64_t a, std::uint64_t b) const {
  std::vector<int> xa = decode(a), xb = decode(b), out(n_, 0);
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (xa[i] == 0) continue;
    for (std::uint32_t j = 0; j < n_; ++j) {
      if (xb[j] == 0) continue;
      std::uint32_t k = group_.mul(i, j);
      out[k] = field_->add(out[k], field_->mul(xa[i], xb[j]));
    }
  }
  return encode(out);
}

int AlgebraElement::coeff(std::uint32_t g) const { return ctx_->coeff_of(code_, g); }

std::vector<int> AlgebraElement::coeffs() const { return ctx_->decode(code_); }

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  if (ctx_ != o.ctx_) {
    throw ArgumentError("elements belong to different algebra contexts");
  }
  return code_ == o.code_;
}

bool AlgebraElement::operator<(const AlgebraElement& o) const {
  if (ctx_ != o.ctx_) {
    throw ArgumentError("elements belong to different algebra contexts");
  }
  return code_ < o.code_;
}

std::string AlgebraElement::to_string() const {
  const FieldDesc& F = ctx_->field();
  const GroupTable& G = ctx_->group();
  std::string out;
  for (std::uint32_t g = 0; g < G.size(); ++g) {
    int c = coeff(g);
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    std::string cs = F.to_string(c);
    bool composite = cs.find('+') != std::string::npos;
    if (g == G.identity()) {
      out += composite ? "(" + cs + ")" : cs;
    } else if (c == F.one()) {
      out += G.label(g);
    } else {
      out += (composite ? "(" + cs + ")" : cs) + "*" + G.label(g);
    }
  }
  return out.empty() ? "0" : out;
}

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
  const AlgebraContext& ctx = common_context(x, y);
  return ctx.element(ctx.add_codes(x.code(), y.code()));
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
  const AlgebraContext& ctx = common_context(x, y);
  return ctx.element(ctx.mul_codes(x.code(), y.code()));
}

AlgebraElement mul_generic(const AlgebraElement& x, const AlgebraElement& y) {
  const AlgebraContext& ctx = common_context(x, y);
  return ctx.element(ctx.mul_codes_generic(x.code(), y.code()));
}

AlgebraElement scale(const FieldElement& c, const AlgebraElement& x) {
  const AlgebraContext& ctx = x.context();
  if (&c.field() != &ctx.field()) {
    throw ArgumentError("scalar belongs to a different field");
  }
  std::vector<int> v = x.coeffs();
  for (int& e : v) e = ctx.field().mul(c.code(), e);
  return ctx.from_coeffs(v);
}

AlgebraElement algebra_pow(const AlgebraElement& x, unsigned long long e) {
  AlgebraElement acc = x.context().one();
  AlgebraElement base = x;
  while (e > 0) {
    if (e & 1ULL) acc = acc * base;
    base = base * base;
    e >>= 1ULL;
  }
  return acc;
}

FieldElement augmentation(const AlgebraElement& x) {
  const FieldDesc& F = x.context().field();
  int acc = F.zero();
  for (int c : x.coeffs()) acc = F.add(acc, c);
  return FieldElement(F, acc);
}

AlgebraElement star(const AlgebraElement& x) {
  const AlgebraContext& ctx = x.context();
  const GroupTable& G = ctx.group();
  std::vector<int> in = x.coeffs(), out(in.size());
  for (std::uint32_t g = 0; g < G.size(); ++g) out[G.inverse(g)] = in[g];
  return ctx.from_coeffs(out);
}

AlgebraElement tilde(const AlgebraElement& x) {
  const AlgebraContext& ctx = x.context();
  const GroupTable& G = ctx.group();
  std::uint64_t N = G.size();
  if (G.family().rfind("cyclic", 0) != 0 || !is_power_of(N, 2) || N < 4) {
    throw ArgumentError("tilde is defined on cyclic groups of 2-power order >= 4");
  }
  std::uint64_t shift = 1 + N / 2;
  std::vector<int> in = x.coeffs(), out(in.size());
  for (std::uint64_t i = 0; i < N; ++i) out[(i * shift) % N] = in[i];
  return ctx.from_coeffs(out);
}

AlgebraElement unit_inverse(const AlgebraElement& x) {
  const AlgebraContext& ctx = x.context();
  const FieldDesc& F = ctx.field();
  if (augmentation(x).code() != F.one()) {
    throw ArgumentError("unit_inverse requires augmentation exactly 1");
  }
  // x generates a cyclic p-group inside the normalized unit group, so its
  // order is found by repeated p-th powers.
  unsigned long long p = (unsigned long long)F.p();
  AlgebraElement one = ctx.one();
  AlgebraElement y = x;
  unsigned long long ord = 1;
  while (!(y == one)) {
    y = algebra_pow(y, p);
    ord *= p;
    if (ord > (1ULL << 62)) {
      throw ArgumentError("element has no p-power order; the algebra is not modular");
    }
  }
  return algebra_pow(x, ord - 1);
}

std::size_t annihilator_dim(const AlgebraElement& x) {
  const AlgebraContext& ctx = x.context();
  const GroupTable& G = ctx.group();
  std::size_t n = G.size();
  Matrix M(ctx.field(), n, n);
  for (std::uint32_t c = 0; c < n; ++c) {
    AlgebraElement col = x * ctx.embed(c);
    for (std::uint32_t r = 0; r < n; ++r) M.set(r, c, col.coeff(r));
  }
  return n - matrix_rank(M);
}

}  // namespace uforge
