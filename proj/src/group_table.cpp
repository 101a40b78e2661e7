#include "uforge/group_table.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_set>

#include "uforge/errors.hpp"

namespace uforge {
namespace {

constexpr std::uint32_t kMaxTable = 64;

std::string power_label(const std::string& sym, unsigned long e) {
  if (e == 0) return "";
  if (e == 1) return sym;
  return sym + "^" + std::to_string(e);
}

std::string join_label(std::initializer_list<std::string> parts) {
  std::string out;
  for (const std::string& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += "*";
    out += p;
  }
  return out.empty() ? "1" : out;
}

}  // namespace

GroupTable::GroupTable(std::vector<std::uint16_t> table, std::vector<std::string> labels,
                       std::vector<std::uint32_t> generators, std::string name,
                       std::string family)
    : mul_(std::move(table)),
      labels_(std::move(labels)),
      generators_(std::move(generators)),
      name_(std::move(name)),
      family_(std::move(family)) {
  n_ = std::uint32_t(labels_.size());
  if (n_ == 0 || n_ > kMaxTable) {
    throw ArgumentError("Cayley tables support 1..64 elements, got " +
                        std::to_string(n_));
  }
  if (mul_.size() != std::size_t(n_) * n_) {
    throw ArgumentError("multiplication table has wrong shape");
  }
  for (std::uint16_t v : mul_) {
    if (v >= n_) throw ArgumentError("multiplication table entry out of range");
  }
  for (std::uint32_t g : generators_) {
    if (g >= n_) throw ArgumentError("generator handle out of range");
  }

  // Identity at handle 0, two sided.
  for (std::uint32_t a = 0; a < n_; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) {
      throw ArgumentError("handle 0 is not a two-sided identity");
    }
  }
  // Latin square.
  for (std::uint32_t a = 0; a < n_; ++a) {
    std::vector<bool> row(n_, false), col(n_, false);
    for (std::uint32_t b = 0; b < n_; ++b) {
      if (row[mul(a, b)] || col[mul(b, a)]) {
        throw ArgumentError("multiplication table is not a Latin square");
      }
      row[mul(a, b)] = true;
      col[mul(b, a)] = true;
    }
  }
  // Inverses.
  inv_.assign(n_, 0);
  for (std::uint32_t a = 0; a < n_; ++a) {
    bool found = false;
    for (std::uint32_t b = 0; b < n_; ++b) {
      if (mul(a, b) == 0) {
        if (mul(b, a) != 0) throw ArgumentError("one-sided inverse in table");
        inv_[a] = std::uint16_t(b);
        found = true;
        break;
      }
    }
    if (!found) throw ArgumentError("element without inverse");
  }
  // Exhaustive associativity; tables are capped at 64 so this is cheap.
  for (std::uint32_t a = 0; a < n_; ++a) {
    for (std::uint32_t b = 0; b < n_; ++b) {
      std::uint32_t ab = mul(a, b);
      for (std::uint32_t c = 0; c < n_; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) {
          throw ArgumentError("multiplication table is not associative");
        }
      }
    }
  }
}

GroupTable GroupTable::cyclic(unsigned long n) {
  if (n == 0 || n > kMaxTable) {
    throw ArgumentError("cyclic group order must be in 1..64");
  }
  std::vector<std::uint16_t> mul(std::size_t(n) * n);
  std::vector<std::string> labels(n);
  for (unsigned long i = 0; i < n; ++i) {
    labels[i] = power_label("a", i).empty() ? "1" : power_label("a", i);
    for (unsigned long j = 0; j < n; ++j) {
      mul[i * n + j] = std::uint16_t((i + j) % n);
    }
  }
  std::vector<std::uint32_t> gens;
  if (n > 1) gens.push_back(1);
  return GroupTable(std::move(mul), std::move(labels), std::move(gens),
                    "C" + std::to_string(n), "cyclic " + std::to_string(n));
}

namespace {

unsigned long pow2(int e) { return 1UL << e; }

}  // namespace

// Shared normal form a^i b^j (0 <= i < N, j in {0,1}). Covers the dihedral,
// quaternion, semidihedral and M16 presentations.
GroupTable GroupTable::metacyclic(unsigned long N, unsigned long r, unsigned long t,
                                  std::string name, std::string family) {
  unsigned long size = 2 * N;
  std::vector<std::uint16_t> mul(size * size);
  std::vector<std::string> labels(size);
  for (unsigned long j = 0; j < 2; ++j) {
    for (unsigned long i = 0; i < N; ++i) {
      labels[i + N * j] = join_label({power_label("a", i), power_label("b", j)});
    }
  }
  auto rpow = [&](unsigned long j) { return j == 0 ? 1UL : r % N; };
  for (unsigned long j = 0; j < 2; ++j) {
    for (unsigned long i = 0; i < N; ++i) {
      for (unsigned long l = 0; l < 2; ++l) {
        for (unsigned long k = 0; k < N; ++k) {
          unsigned long expo = (i + k * rpow(j)) % N;
          unsigned long jj = j + l;
          if (jj == 2) {
            expo = (expo + t) % N;
            jj = 0;
          }
          mul[(i + N * j) * size + (k + N * l)] = std::uint16_t(expo + N * jj);
        }
      }
    }
  }
  return GroupTable(std::move(mul), std::move(labels), {1, std::uint32_t(N)},
                    std::move(name), std::move(family));
}

GroupTable GroupTable::dihedral(int n) {
  if (n < 2) throw ArgumentError("dihedral family requires n >= 2");
  unsigned long N = pow2(n);
  return metacyclic(N, N - 1, 0, "D" + std::to_string(2 * N),
                    "dihedral " + std::to_string(n));
}

GroupTable GroupTable::quaternion(int n) {
  if (n < 2) throw ArgumentError("quaternion family requires n >= 2");
  unsigned long N = pow2(n);
  return metacyclic(N, N - 1, N / 2, "Q" + std::to_string(2 * N),
                    "quaternion " + std::to_string(n));
}

GroupTable GroupTable::semidihedral(int n) {
  if (n < 3) throw ArgumentError("semidihedral family requires n >= 3");
  unsigned long N = pow2(n);
  return metacyclic(N, N / 2 - 1, 0, "SD" + std::to_string(2 * N),
                    "semidihedral " + std::to_string(n));
}

GroupTable GroupTable::m16() {
  GroupTable g = metacyclic(8, 5, 0, "M16", "M16");
  return g;
}

GroupTable GroupTable::g44() {
  // Normal form a^i b^j c^k with a^4 = b^2 = c^2 = 1, b central and
  // c^-1 a c = a b, which gives c^k a^i = a^i b^(k*i) c^k.
  std::vector<std::uint16_t> mul(16 * 16);
  std::vector<std::string> labels(16);
  auto idx = [](unsigned long i, unsigned long j, unsigned long k) {
    return i + 4 * j + 8 * k;
  };
  for (unsigned long k = 0; k < 2; ++k) {
    for (unsigned long j = 0; j < 2; ++j) {
      for (unsigned long i = 0; i < 4; ++i) {
        labels[idx(i, j, k)] = join_label(
            {power_label("a", i), power_label("b", j), power_label("c", k)});
        for (unsigned long k2 = 0; k2 < 2; ++k2) {
          for (unsigned long j2 = 0; j2 < 2; ++j2) {
            for (unsigned long i2 = 0; i2 < 4; ++i2) {
              unsigned long ii = (i + i2) % 4;
              unsigned long jj = (j + j2 + k * i2) % 2;
              unsigned long kk = (k + k2) % 2;
              mul[idx(i, j, k) * 16 + idx(i2, j2, k2)] = std::uint16_t(idx(ii, jj, kk));
            }
          }
        }
      }
    }
  }
  return GroupTable(std::move(mul), std::move(labels), {1, 4, 8}, "G44", "G44");
}

GroupTable GroupTable::c4sc4() {
  // Normal form a^i b^j, |a| = |b| = 4, b^-1 a b = a^-1.
  std::vector<std::uint16_t> mul(16 * 16);
  std::vector<std::string> labels(16);
  auto idx = [](unsigned long i, unsigned long j) { return i + 4 * j; };
  for (unsigned long j = 0; j < 4; ++j) {
    for (unsigned long i = 0; i < 4; ++i) {
      labels[idx(i, j)] = join_label({power_label("a", i), power_label("b", j)});
      for (unsigned long l = 0; l < 4; ++l) {
        for (unsigned long k = 0; k < 4; ++k) {
          unsigned long ii = j % 2 == 0 ? (i + k) % 4 : (i + 4 - k % 4) % 4;
          unsigned long jj = (j + l) % 4;
          mul[idx(i, j) * 16 + idx(k, l)] = std::uint16_t(idx(ii, jj));
        }
      }
    }
  }
  return GroupTable(std::move(mul), std::move(labels), {1, 4}, "C4sC4", "semidirect");
}

GroupTable GroupTable::direct_product(const GroupTable& A, const GroupTable& B) {
  std::uint64_t size = A.size() * B.size();
  if (size > kMaxTable) {
    throw ArgumentError("direct product exceeds the 64-element table cap");
  }
  std::uint32_t na = std::uint32_t(A.size());
  auto idx = [na](std::uint32_t x, std::uint32_t y) { return x + na * y; };
  std::size_t count = std::size_t(size);
  std::vector<std::uint16_t> mul(count * count);
  std::vector<std::string> labels(count);
  for (std::uint32_t y = 0; y < B.size(); ++y) {
    for (std::uint32_t x = 0; x < A.size(); ++x) {
      labels[idx(x, y)] = "(" + A.label(x) + "," + B.label(y) + ")";
      for (std::uint32_t y2 = 0; y2 < B.size(); ++y2) {
        for (std::uint32_t x2 = 0; x2 < A.size(); ++x2) {
          mul[idx(x, y) * size + idx(x2, y2)] =
              std::uint16_t(idx(A.mul(x, x2), B.mul(y, y2)));
        }
      }
    }
  }
  std::vector<std::uint32_t> gens;
  for (std::uint32_t g : A.generators()) gens.push_back(idx(g, 0));
  for (std::uint32_t g : B.generators()) gens.push_back(idx(0, g));
  return GroupTable(std::move(mul), std::move(labels), std::move(gens),
                    A.name() + "x" + B.name(), "product");
}

GroupTable GroupTable::quotient_by_central(const GroupTable& G,
                                           const std::vector<std::uint32_t>& Z) {
  std::unordered_set<std::uint32_t> zset(Z.begin(), Z.end());
  if (zset.empty() || zset.count(0) == 0) {
    throw ArgumentError("central subgroup must contain the identity");
  }
  for (std::uint32_t z : Z) {
    if (z >= G.size()) throw ArgumentError("central subgroup handle out of range");
    for (std::uint32_t z2 : Z) {
      if (zset.count(G.mul(z, z2)) == 0) {
        throw ArgumentError("central subgroup is not closed");
      }
    }
    for (std::uint32_t g = 0; g < G.size(); ++g) {
      if (G.mul(z, g) != G.mul(g, z)) {
        throw ArgumentError("subgroup is not central");
      }
    }
  }

  std::vector<std::uint32_t> coset_of(G.size(), UINT32_MAX);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t g = 0; g < G.size(); ++g) {
    if (coset_of[g] != UINT32_MAX) continue;
    std::uint32_t id = std::uint32_t(reps.size());
    reps.push_back(g);
    for (std::uint32_t z : Z) coset_of[G.mul(g, z)] = id;
  }
  std::size_t size = reps.size();
  std::vector<std::uint16_t> mul(size * size);
  std::vector<std::string> labels(size);
  for (std::size_t i = 0; i < size; ++i) {
    labels[i] = "[" + G.label(reps[i]) + "]";
    for (std::size_t j = 0; j < size; ++j) {
      mul[i * size + j] = std::uint16_t(coset_of[G.mul(reps[i], reps[j])]);
    }
  }
  std::vector<std::uint32_t> gens;
  for (std::uint32_t g : G.generators()) {
    std::uint32_t c = coset_of[g];
    if (c != 0 && std::find(gens.begin(), gens.end(), c) == gens.end()) {
      gens.push_back(c);
    }
  }
  return GroupTable(std::move(mul), std::move(labels), std::move(gens),
                    G.name() + "/Z" + std::to_string(Z.size()), "quotient");
}

GroupTable GroupTable::d8yc4() {
  GroupTable p = direct_product(dihedral(2), cyclic(4));
  // (a^2, c^2) sits at handle 2 + 8*2 in the product indexing.
  GroupTable g = quotient_by_central(p, {0, 18});
  g.name_ = "D8YC4";
  g.family_ = "D8YC4";
  return g;
}

GroupTable GroupTable::q8xc2() {
  GroupTable g = direct_product(quaternion(2), cyclic(2));
  g.name_ = "Q8xC2";
  return g;
}

GroupTable GroupTable::d8xc2() {
  GroupTable g = direct_product(dihedral(2), cyclic(2));
  g.name_ = "D8xC2";
  return g;
}

GroupTable GroupTable::from_parts(std::vector<unsigned long> parts) {
  if (parts.empty()) parts.push_back(1);
  std::sort(parts.begin(), parts.end(), std::greater<unsigned long>());
  if (parts.size() == 1) return cyclic(parts[0]);

  unsigned long long size = 1;
  for (unsigned long p : parts) {
    if (p == 0) throw ArgumentError("cyclic factor order must be positive");
    size *= p;
    if (size > kMaxTable) {
      throw ArgumentError("abelian product exceeds the 64-element table cap");
    }
  }
  std::size_t k = parts.size();
  auto decode = [&](std::uint32_t h) {
    std::vector<unsigned long> digits(k);
    for (std::size_t d = 0; d < k; ++d) {
      digits[d] = h % parts[d];
      h = std::uint32_t(h / parts[d]);
    }
    return digits;
  };
  auto encode = [&](const std::vector<unsigned long>& digits) {
    std::uint32_t h = 0;
    for (std::size_t d = k; d >= 1; --d) {
      h = std::uint32_t(h * parts[d - 1] + digits[d - 1]);
    }
    return h;
  };
  std::size_t count = std::size_t(size);
  std::vector<std::uint16_t> mul(count * count);
  std::vector<std::string> labels(count);
  for (std::uint32_t x = 0; x < size; ++x) {
    std::vector<unsigned long> dx = decode(x);
    std::ostringstream lab;
    lab << "(";
    for (std::size_t d = 0; d < k; ++d) lab << (d ? "," : "") << dx[d];
    lab << ")";
    labels[x] = lab.str();
    for (std::uint32_t y = 0; y < size; ++y) {
      std::vector<unsigned long> dy = decode(y);
      std::vector<unsigned long> s(k);
      for (std::size_t d = 0; d < k; ++d) s[d] = (dx[d] + dy[d]) % parts[d];
      mul[std::size_t(x) * std::size_t(size) + y] = std::uint16_t(encode(s));
    }
  }
  std::vector<std::uint32_t> gens;
  std::string name;
  for (std::size_t d = 0; d < k; ++d) {
    std::vector<unsigned long> unit(k, 0);
    if (parts[d] > 1) {
      unit[d] = 1;
      gens.push_back(encode(unit));
    }
    name += (d ? "x" : "") + ("C" + std::to_string(parts[d]));
  }
  return GroupTable(std::move(mul), std::move(labels), std::move(gens), name,
                    "product");
}

GroupTable GroupTable::from_abelian_type(const AbelianType& type) {
  std::vector<unsigned long> parts;
  for (unsigned long long p : type.parts()) parts.push_back((unsigned long)p);
  return from_parts(parts);
}

GroupTable induced_subgroup(const GroupTable& G, std::vector<std::uint32_t> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<std::uint32_t> local(G.size(), UINT32_MAX);
  for (std::uint32_t i = 0; i < elements.size(); ++i) {
    if (elements[i] >= G.size()) throw ArgumentError("subgroup handle out of range");
    local[elements[i]] = i;
  }
  if (elements.empty() || local[0] == UINT32_MAX) {
    throw ArgumentError("subgroup must contain the identity");
  }
  std::size_t size = elements.size();
  std::vector<std::uint16_t> mul(size * size);
  std::vector<std::string> labels(size);
  for (std::size_t i = 0; i < size; ++i) {
    labels[i] = G.label(elements[i]);
    for (std::size_t j = 0; j < size; ++j) {
      std::uint32_t prod = G.mul(elements[i], elements[std::uint32_t(j)]);
      if (local[prod] == UINT32_MAX) {
        throw ArgumentError("element set is not closed under multiplication");
      }
      mul[i * size + j] = std::uint16_t(local[prod]);
    }
  }
  return GroupTable(std::move(mul), std::move(labels), {},
                    G.name() + ".sub" + std::to_string(size), "subgroup");
}

GroupTable power_subgroup(const GroupTable& G, std::size_t i) {
  if (!is_abelian(G)) throw ArgumentError("power_subgroup requires an abelian group");
  int p = group_prime(G.size());
  unsigned long long e = pow_checked((unsigned long long)p, i);
  std::vector<std::uint32_t> elems;
  for (std::uint32_t g = 0; g < G.size(); ++g) elems.push_back(bb_pow(G, g, e));
  return induced_subgroup(G, std::move(elems));
}

GroupTable torsion_subgroup(const GroupTable& G, std::size_t i) {
  if (!is_abelian(G)) throw ArgumentError("torsion_subgroup requires an abelian group");
  int p = group_prime(G.size());
  unsigned long long e = pow_checked((unsigned long long)p, i);
  std::vector<std::uint32_t> elems;
  for (std::uint32_t g = 0; g < G.size(); ++g) {
    if (bb_pow(G, g, e) == 0) elems.push_back(g);
  }
  return induced_subgroup(G, std::move(elems));
}

std::vector<GroupTable> catalog(unsigned long order, const std::string& filter) {
  if (order != 2 && order != 4 && order != 8 && order != 16 && order != 32) {
    throw ArgumentError("catalog supports orders 2, 4, 8, 16, 32; got " +
                        std::to_string(order));
  }
  if (filter != "abelian" && filter != "nonabelian" && filter != "maximal-class" &&
      filter != "all") {
    throw ArgumentError(
        "catalog filter must be abelian, nonabelian, maximal-class or all");
  }

  std::vector<GroupTable> out;
  if (filter == "abelian" || filter == "all") {
    for (const AbelianType& t : AbelianType::all_of_order(2, order)) {
      out.push_back(GroupTable::from_abelian_type(t));
    }
  }
  if (filter == "nonabelian" || filter == "all") {
    if (order == 32) {
      throw ArgumentError(
          "the nonabelian catalog is complete only through order 16; "
          "order 32 supports the abelian and maximal-class filters");
    }
    if (order == 8) {
      out.push_back(GroupTable::dihedral(2));
      out.push_back(GroupTable::quaternion(2));
    } else if (order == 16) {
      out.push_back(GroupTable::q8xc2());
      out.push_back(GroupTable::m16());
      out.push_back(GroupTable::quaternion(3));
      out.push_back(GroupTable::c4sc4());
      out.push_back(GroupTable::semidihedral(3));
      out.push_back(GroupTable::d8yc4());
      out.push_back(GroupTable::dihedral(3));
      out.push_back(GroupTable::g44());
      out.push_back(GroupTable::d8xc2());
    }
  }
  if (filter == "maximal-class") {
    if (order == 8) {
      out.push_back(GroupTable::dihedral(2));
      out.push_back(GroupTable::quaternion(2));
    } else if (order >= 16) {
      int n = 2;
      for (unsigned long v = 8; v < order; v *= 2) ++n;
      out.push_back(GroupTable::dihedral(n));
      out.push_back(GroupTable::quaternion(n));
      out.push_back(GroupTable::semidihedral(n));
    }
  }
  return out;
}

namespace {

bool parse_ulong(const std::string& s, unsigned long& out) {
  if (s.empty() || s.size() > 9) return false;
  out = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    out = out * 10 + (unsigned long)(c - '0');
  }
  return !s.empty() && (s.size() == 1 || s[0] != '0');
}

[[noreturn]] void reject_name(const std::string& name) {
  throw ConfigError("unknown group name '" + name +
                    "'; valid names: C{n}, C{a}xC{b}..., D{2^k}, Q{2^k}, "
                    "SD{2^k}, M16, G44, D8YC4, Q8xC2, D8xC2, C4sC4");
}

}  // namespace

GroupTable group_from_name(const std::string& name) {
  if (name == "M16") return GroupTable::m16();
  if (name == "G44") return GroupTable::g44();
  if (name == "D8YC4") return GroupTable::d8yc4();
  if (name == "Q8xC2") return GroupTable::q8xc2();
  if (name == "D8xC2") return GroupTable::d8xc2();
  if (name == "C4sC4") return GroupTable::c4sc4();

  unsigned long v = 0;
  if (name.size() >= 2 && name[0] == 'D' && parse_ulong(name.substr(1), v)) {
    if (v >= 8 && is_power_of(v, 2)) {
      return GroupTable::dihedral(int(log_of_power(v, 2)) - 1);
    }
    reject_name(name);
  }
  if (name.size() >= 2 && name[0] == 'Q' && parse_ulong(name.substr(1), v)) {
    if (v >= 8 && is_power_of(v, 2)) {
      return GroupTable::quaternion(int(log_of_power(v, 2)) - 1);
    }
    reject_name(name);
  }
  if (name.size() >= 3 && name.rfind("SD", 0) == 0 && parse_ulong(name.substr(2), v)) {
    if (v >= 16 && is_power_of(v, 2)) {
      return GroupTable::semidihedral(int(log_of_power(v, 2)) - 1);
    }
    reject_name(name);
  }
  // C{n} or a product C{a}xC{b}x...
  std::vector<unsigned long> parts;
  std::size_t pos = 0;
  while (pos < name.size()) {
    if (name[pos] != 'C') reject_name(name);
    std::size_t end = name.find('x', pos);
    std::string tok = end == std::string::npos ? name.substr(pos + 1)
                                               : name.substr(pos + 1, end - pos - 1);
    if (!parse_ulong(tok, v) || v == 0 || v > kMaxTable) reject_name(name);
    parts.push_back(v);
    pos = end == std::string::npos ? name.size() : end + 1;
    if (end != std::string::npos && pos == name.size()) reject_name(name);
  }
  if (parts.empty()) reject_name(name);
  return GroupTable::from_parts(parts);
}

}  // namespace uforge
