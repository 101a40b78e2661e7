#include "uforge/unitary.hpp"

#include <algorithm>
#include <cstddef>
#include <exception>
#include <map>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "uforge/errors.hpp"
#include "uforge/finite_field.hpp"
#include "uforge/group_table.hpp"

namespace uforge {

namespace {

constexpr std::uint64_t kEnumerationCap = std::uint64_t(1) << 24;

// Code of the idx-th normalized element: idx spells the non-identity
// coefficients as base-q digits (handle 1 least significant) and the
// identity coefficient is solved from the augmentation constraint.
std::uint64_t normalized_code_at(const AlgebraContext& ctx, std::uint64_t idx) {
  const FieldDesc& F = ctx.field();
  const std::uint64_t n = ctx.group().size();
  const int q = F.q();
  std::vector<int> coeffs(n, 0);
  int acc = F.zero();
  for (std::uint64_t g = 1; g < n; ++g) {
    coeffs[g] = int(idx % q);
    idx /= q;
    acc = F.add(acc, coeffs[g]);
  }
  coeffs[0] = F.sub(F.one(), acc);
  return ctx.from_coeffs(coeffs).code();
}

std::uint64_t normalized_index_count(const AlgebraContext& ctx) {
  const std::uint64_t q = ctx.field().q();
  const std::uint64_t n = ctx.group().size();
  std::uint64_t total = 1;
  for (std::uint64_t g = 1; g < n; ++g) {
    total *= q;
    if (total > kEnumerationCap) {
      throw CapacityError("normalized unit enumeration needs |F|^(|G|-1) <= 2^24");
    }
  }
  return total;
}

int clamp_threads(int threads, std::uint64_t total) {
  if (threads < 1) threads = 1;
  if (threads > 64) threads = 64;
  while (threads > 1 && total / std::uint64_t(threads) < 1024) --threads;
  return threads;
}

// Runs fn over [begin, end) slices of [0, total); slice boundaries depend
// only on the worker count, and results are merged in slice order, so the
// outcome is identical for any worker count.
template <typename Fn>
void run_partitioned(std::uint64_t total, int threads, Fn fn) {
  threads = clamp_threads(threads, total);
  if (threads == 1) {
    fn(0, 0, total);
    return;
  }
  const std::uint64_t chunk = (total + threads - 1) / threads;
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (int t = 0; t < threads; ++t) {
    const std::uint64_t begin = std::min(total, chunk * std::uint64_t(t));
    const std::uint64_t end = std::min(total, begin + chunk);
    pool.emplace_back([&, t, begin, end] {
      try {
        fn(std::size_t(t), begin, end);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// Collects the codes in [0, total) whose element satisfies pred, in
// enumeration order.
template <typename Pred>
std::vector<std::uint64_t> collect_normalized(const AlgebraContext& ctx,
                                              std::uint64_t total, int threads,
                                              Pred pred) {
  const int t = clamp_threads(threads, total);
  std::vector<std::vector<std::uint64_t>> buckets(static_cast<std::size_t>(t));
  run_partitioned(total, t, [&](std::size_t tid, std::uint64_t b, std::uint64_t e) {
    auto& out = buckets[tid];
    for (std::uint64_t idx = b; idx < e; ++idx) {
      const std::uint64_t code = normalized_code_at(ctx, idx);
      if (pred(ctx.element(code))) out.push_back(code);
    }
  });
  std::vector<std::uint64_t> codes;
  for (auto& b : buckets) codes.insert(codes.end(), b.begin(), b.end());
  return codes;
}

struct MaximalClassFamily {
  std::string family;  // "D", "Q" or "SD"
  int n = 0;
};

MaximalClassFamily parse_maximal_class(const GroupTable& G) {
  std::istringstream in(G.family());
  std::string word;
  int n = 0;
  in >> word >> n;
  if (word == "dihedral") return {"D", n};
  if (word == "quaternion") return {"Q", n};
  if (word == "semidihedral") return {"SD", n};
  throw ArgumentError("involution counts need a dihedral, quaternion or "
                      "semidihedral group, got " + G.name());
}

void require_gf2(const AlgebraContext& ctx) {
  if (ctx.field().q() != 2) {
    throw ArgumentError("involution counts are tabulated over GF(2)");
  }
}

// Codes of all inversion-symmetric elements of GF(2)C_N, N = 2^n: one free
// bit per orbit {i, N-i}.
std::vector<std::uint64_t> symmetric_codes_gf2(unsigned long N) {
  const unsigned long half = N / 2;
  std::vector<std::vector<unsigned long>> orbits;
  orbits.push_back({0});
  orbits.push_back({half});
  for (unsigned long i = 1; i < half; ++i) orbits.push_back({i, N - i});
  std::vector<std::uint64_t> out;
  out.reserve(std::size_t(1) << orbits.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << orbits.size()); ++mask) {
    std::uint64_t code = 0;
    for (std::size_t k = 0; k < orbits.size(); ++k) {
      if (mask >> k & 1) {
        for (unsigned long pos : orbits[k]) code |= std::uint64_t(1) << pos;
      }
    }
    out.push_back(code);
  }
  return out;
}

// Codes fixed by the index map i -> i(1 + N/2): even positions are free,
// odd positions pair up as {i, i + N/2}.
std::vector<std::uint64_t> tilde_fixed_codes_gf2(unsigned long N) {
  const unsigned long half = N / 2;
  std::vector<std::vector<unsigned long>> slots;
  for (unsigned long i = 0; i < N; i += 2) slots.push_back({i});
  for (unsigned long i = 1; i < half; i += 2) slots.push_back({i, i + half});
  std::vector<std::uint64_t> out;
  out.reserve(std::size_t(1) << slots.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << slots.size()); ++mask) {
    std::uint64_t code = 0;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (mask >> k & 1) {
        for (unsigned long pos : slots[k]) code |= std::uint64_t(1) << pos;
      }
    }
    out.push_back(code);
  }
  return out;
}

void require_structured_range(const std::string& family, int n) {
  const int lo = family == "SD" ? 3 : 2;
  if (n < lo || n > 4) {
    throw ArgumentError("structured counting supports " + family + " with " +
                        std::to_string(lo) + " <= n <= 4");
  }
}

}  // namespace

UnitGroupView::UnitGroupView(const AlgebraContext& ctx,
                             std::vector<std::uint64_t> codes, bool star_closed)
    : ctx_(&ctx), codes_(std::move(codes)), star_closed_(star_closed) {
  if (codes_.empty()) throw ArgumentError("a unit set cannot be empty");
  if (codes_.size() > std::uint64_t(1) << 31) {
    throw CapacityError("unit set too large for 32-bit handles");
  }
  std::sort(codes_.begin(), codes_.end());
  if (std::adjacent_find(codes_.begin(), codes_.end()) != codes_.end()) {
    throw ArgumentError("unit set contains duplicate codes");
  }
  for (std::uint64_t code : codes_) {
    if (augmentation(ctx_->element(code)) !=
        FieldElement(ctx_->field(), ctx_->field().one())) {
      throw ArgumentError("unit set contains a non-normalized element");
    }
  }
  const auto it = std::lower_bound(codes_.begin(), codes_.end(), ctx_->one().code());
  if (it == codes_.end() || *it != ctx_->one().code()) {
    throw ArgumentError("unit set does not contain the identity");
  }
  id_ = std::uint32_t(it - codes_.begin());
  if (star_closed_) {
    for (std::uint64_t code : codes_) {
      if (!std::binary_search(codes_.begin(), codes_.end(),
                              star(ctx_->element(code)).code())) {
        throw ArgumentError("unit set is not closed under the involution");
      }
    }
  }
  auto closed = [&](std::uint64_t a, std::uint64_t b) {
    return std::binary_search(codes_.begin(), codes_.end(),
                              (ctx_->element(a) * ctx_->element(b)).code());
  };
  if (codes_.size() <= (std::size_t(1) << 12)) {
    for (std::uint64_t a : codes_) {
      for (std::uint64_t b : codes_) {
        if (!closed(a, b)) throw ArgumentError("unit set is not closed");
      }
    }
  } else {
    std::mt19937_64 rng(0x756e697461727921ULL);
    std::uniform_int_distribution<std::uint64_t> pick(0, codes_.size() - 1);
    for (int i = 0; i < 1000; ++i) {
      if (!closed(codes_[pick(rng)], codes_[pick(rng)])) {
        throw ArgumentError("unit set is not closed");
      }
    }
  }
}

std::uint32_t UnitGroupView::index_of(std::uint64_t code) const {
  const auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
  if (it == codes_.end() || *it != code) {
    throw InternalCheckError("a product left the materialized unit set");
  }
  return std::uint32_t(it - codes_.begin());
}

std::uint32_t UnitGroupView::mul(std::uint32_t a, std::uint32_t b) const {
  return index_of((element(a) * element(b)).code());
}

std::uint32_t UnitGroupView::inverse(std::uint32_t a) const {
  if (star_closed_) return index_of(star(element(a)).code());
  return index_of(unit_inverse(element(a)).code());
}

AlgebraElement UnitGroupView::element(std::uint32_t i) const {
  if (i >= codes_.size()) throw ArgumentError("unit handle out of range");
  return ctx_->element(codes_[i]);
}

unsigned long long normalized_unit_count(const AlgebraContext& ctx) {
  return pow_checked(ctx.field().q(), ctx.group().size() - 1);
}

unsigned long long symmetric_normalized_count(const AlgebraContext& ctx) {
  const GroupTable& G = ctx.group();
  unsigned long long orbits = 0;
  for (std::uint32_t g = 0; g < G.size(); ++g) {
    if (G.inverse(g) >= g) ++orbits;
  }
  return pow_checked(ctx.field().q(), orbits - 1);
}

UnitGroupView enumerate_normalized_units(const AlgebraContext& ctx, int threads) {
  const std::uint64_t total = normalized_index_count(ctx);
  auto codes = collect_normalized(ctx, total, threads,
                                  [](const AlgebraElement&) { return true; });
  return UnitGroupView(ctx, std::move(codes), false);
}

UnitGroupView unitary_subgroup(const AlgebraContext& ctx, int threads) {
  const std::uint64_t total = normalized_index_count(ctx);
  const AlgebraElement one = ctx.one();
  auto codes = collect_normalized(ctx, total, threads, [&](const AlgebraElement& x) {
    return x * star(x) == one;
  });
  return UnitGroupView(ctx, std::move(codes), true);
}

UnitGroupView unitary_subgroup_closure(const AlgebraContext& ctx) {
  const FieldDesc& F = ctx.field();
  const GroupTable& G = ctx.group();
  if (F.p() == 2) {
    throw ArgumentError("the image closure route requires odd characteristic");
  }
  if (group_prime(G.size()) != F.p()) {
    throw ArgumentError("the group order must be a power of the field "
                        "characteristic");
  }
  if (!is_abelian(G)) {
    throw ArgumentError("the image closure route requires an abelian group");
  }

  const unsigned long long expected =
      pow_checked(F.q(), (G.size() - 1) / 2);
  if (expected > kEnumerationCap) {
    throw CapacityError("the unitary subgroup would exceed 2^24 elements");
  }
  if (normalized_unit_count(ctx) / symmetric_normalized_count(ctx) != expected) {
    throw InternalCheckError("symmetric element count disagrees with the "
                             "expected unitary order");
  }

  std::vector<std::uint32_t> gens = G.generators();
  unsigned long long gen_order_product = 1;
  std::vector<unsigned long long> orders;
  for (std::uint32_t g : gens) {
    orders.push_back(element_order(G, g));
    gen_order_product *= orders.back();
  }
  if (gen_order_product != G.size()) {
    throw ArgumentError("the image closure route needs independent generators");
  }

  // Normalized units 1 + c * (g_1-1)^(e_1)...(g_k-1)^(e_k); their images
  // under u -> u star(u)^-1 generate the unitary subgroup.
  const AlgebraElement one = ctx.one();
  const FieldElement minus_one(F, F.neg(F.one()));
  std::vector<AlgebraElement> gen_minus_one;
  for (std::uint32_t g : gens) {
    gen_minus_one.push_back(ctx.embed(g) + scale(minus_one, one));
  }
  std::vector<std::uint64_t> images;
  std::vector<unsigned long long> expo(gens.size(), 0);
  for (;;) {
    std::size_t r = 0;
    while (r < gens.size() && expo[r] + 1 == orders[r]) {
      expo[r] = 0;
      ++r;
    }
    if (r == gens.size()) break;
    ++expo[r];
    AlgebraElement monomial = one;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      for (unsigned long long j = 0; j < expo[k]; ++j) {
        monomial = monomial * gen_minus_one[k];
      }
    }
    if (monomial == ctx.zero()) continue;
    for (int c = 1; c < F.q(); ++c) {
      const AlgebraElement u = one + scale(FieldElement(F, c), monomial);
      images.push_back((u * unit_inverse(star(u))).code());
    }
  }

  std::vector<std::uint64_t> elems{one.code()};
  std::unordered_set<std::uint64_t> seen{one.code()};
  seen.reserve(std::size_t(expected * 2));
  for (std::uint64_t gcode : images) {
    if (seen.count(gcode)) continue;
    const std::size_t base = elems.size();
    const AlgebraElement g = ctx.element(gcode);
    AlgebraElement r = g;
    while (!seen.count(r.code())) {
      for (std::size_t i = 0; i < base; ++i) {
        const std::uint64_t t = (ctx.element(elems[i]) * r).code();
        if (!seen.insert(t).second) {
          throw InternalCheckError("coset extension revisited an element");
        }
        elems.push_back(t);
      }
      r = r * g;
    }
  }

  if (elems.size() != expected) {
    throw InternalCheckError("closure of the unitary generators has order " +
                             std::to_string(elems.size()) + ", expected " +
                             std::to_string(expected));
  }
  return UnitGroupView(ctx, std::move(elems), true);
}

ThetaRecord theta_brute(const AlgebraContext& ctx, int threads) {
  require_gf2(ctx);
  const MaximalClassFamily fam = parse_maximal_class(ctx.group());
  const std::uint64_t total = normalized_index_count(ctx);
  const AlgebraElement one = ctx.one();
  const int t = clamp_threads(threads, total);
  std::vector<unsigned long long> counts(std::size_t(t), 0);
  run_partitioned(total, t, [&](std::size_t tid, std::uint64_t b, std::uint64_t e) {
    unsigned long long local = 0;
    for (std::uint64_t idx = b; idx < e; ++idx) {
      const AlgebraElement x = ctx.element(normalized_code_at(ctx, idx));
      if (x * x == one && star(x) == x) ++local;
    }
    counts[tid] = local;
  });
  unsigned long long theta = 0;
  for (unsigned long long c : counts) theta += c;
  return {fam.family, fam.n, theta, "brute"};
}

ThetaRecord theta_closed_form(const std::string& family, int n) {
  if (family == "SD") {
    throw ArgumentError("no closed involution count exists for the "
                        "semidihedral family");
  }
  if (family != "D" && family != "Q") {
    throw ArgumentError("closed involution counts cover families D and Q");
  }
  if (n < 2) throw ArgumentError("maximal-class families start at n = 2");
  const unsigned long long small = 3ULL * (1ULL << (n - 2)) + 1;
  unsigned long long theta;
  if (family == "Q") {
    theta = pow_checked(2, small);
  } else {
    theta = pow_checked(2, (1ULL << n) + 2) - pow_checked(2, small);
  }
  return {family, n, theta, "closed_form"};
}

ThetaRecord theta_structured(const std::string& family, int n) {
  if (family != "D" && family != "Q" && family != "SD") {
    throw ArgumentError("structured counting covers families D, Q and SD");
  }
  require_structured_range(family, n);
  const unsigned long N = 1UL << n;
  const AlgebraContext ctx(FieldDesc::get(2, 1), GroupTable::cyclic(N));
  const AlgebraElement one = ctx.one();
  const auto symmetric = symmetric_codes_gf2(N);
  unsigned long long theta = 0;

  if (family == "SD") {
    // x = x1 + x2 b is a unitary involution iff x1 is symmetric, x2 is
    // fixed by tilde, x1^2 = x2 star(x2) + 1 and x2 (x1 + tilde(x1)) = 0.
    const auto partners = tilde_fixed_codes_gf2(N);
    std::vector<std::uint64_t> keys;
    keys.reserve(partners.size());
    for (std::uint64_t code : partners) {
      const AlgebraElement x2 = ctx.element(code);
      keys.push_back((x2 * star(x2) + one).code());
    }
    for (std::uint64_t scode : symmetric) {
      const AlgebraElement x1 = ctx.element(scode);
      const std::uint64_t square = (x1 * x1).code();
      const AlgebraElement drift = x1 + tilde(x1);
      for (std::size_t k = 0; k < partners.size(); ++k) {
        if (keys[k] != square) continue;
        if ((ctx.element(partners[k]) * drift) == ctx.zero()) ++theta;
      }
    }
    return {family, n, theta, "structured"};
  }

  // For D and Q the cross terms vanish for every admissible x2, so counting
  // reduces to a lookup of x2 star(x2) + 1 among squares of symmetric x1.
  std::map<std::uint64_t, unsigned long long> square_count;
  for (std::uint64_t scode : symmetric) {
    const AlgebraElement s = ctx.element(scode);
    ++square_count[(s * s).code()];
  }
  std::vector<std::uint64_t> partners;
  if (family == "D") {
    partners.resize(std::size_t(1) << N);
    for (std::uint64_t code = 0; code < partners.size(); ++code) {
      partners[code] = code;
    }
  } else {
    const unsigned long half = N / 2;
    partners.resize(std::size_t(1) << half);
    for (std::uint64_t low = 0; low < partners.size(); ++low) {
      partners[low] = low | (low << half);
    }
  }
  for (std::uint64_t code : partners) {
    const AlgebraElement x2 = ctx.element(code);
    const auto it = square_count.find((x2 * star(x2) + one).code());
    if (it != square_count.end()) theta += it->second;
  }
  return {family, n, theta, "structured"};
}

unsigned long long h_set_size(int n, std::size_t i) {
  if (n < 2 || n > 4) throw ArgumentError("h_set_size supports 2 <= n <= 4");
  const unsigned long N = 1UL << n;
  if (i > N) throw ArgumentError("h_set_size needs 0 <= i <= 2^n");
  const AlgebraContext ctx(FieldDesc::get(2, 1), GroupTable::cyclic(N));
  const AlgebraElement one = ctx.one();
  const AlgebraElement lead = one + ctx.embed(1);
  const AlgebraElement trail = one + ctx.embed(ctx.group().inverse(1));
  const AlgebraElement window = algebra_pow(lead, i) * algebra_pow(trail, i);
  std::uint64_t odd_mask = 0;
  for (unsigned long g = 1; g < N; g += 2) odd_mask |= std::uint64_t(1) << g;
  unsigned long long count = 0;
  const std::uint64_t total = std::uint64_t(1) << (N - 1);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const AlgebraElement h = ctx.element(normalized_code_at(ctx, idx));
    const AlgebraElement r = h * star(h) * window;
    if ((r.code() & odd_mask) == 0) ++count;
  }
  return count;
}

unsigned long long s_star_two_size(int n) {
  if (n < 2 || n > 4) throw ArgumentError("s_star_two_size supports 2 <= n <= 4");
  const unsigned long N = 1UL << n;
  const AlgebraContext ctx(FieldDesc::get(2, 1), GroupTable::cyclic(N));
  const AlgebraElement one = ctx.one();
  const FieldElement field_one(ctx.field(), ctx.field().one());
  unsigned long long count = 0;
  for (std::uint64_t code : symmetric_codes_gf2(N)) {
    const AlgebraElement s = ctx.element(code);
    if (augmentation(s) == field_one && s * s == one) ++count;
  }
  return count;
}

namespace {

void require_field_degree(int m) {
  if (m < 1 || m > 16) throw ArgumentError("field degree must be in 1..16");
}

// Twice t_i = m(|G^{2^i}| - |G^{2^i}[2]|)/2, kept doubled so odd m stays in
// integers until the combination step.
std::vector<long long> doubled_t(const AbelianType& type, int m) {
  const std::size_t e = type.exponent_index();
  std::vector<long long> T(e + 3, 0);
  for (std::size_t i = 0; i <= e + 2; ++i) {
    const unsigned long long B = type.power_subgroup_order(i);
    const unsigned long long C = type.power_subgroup_p_torsion(i);
    T[i] = (long long)(m) * (long long)(B - C);
  }
  return T;
}

long long halved(long long doubled, const char* what) {
  if (doubled % 2 != 0) {
    throw InternalCheckError(std::string(what) + " is not an integer");
  }
  return doubled / 2;
}

}  // namespace

UnitaryInvariants lemma1_forward(const AbelianType& type, int m) {
  require_field_degree(m);
  if (!type.is_trivial() && type.p() != 2) {
    throw ArgumentError("the even closed forms need an abelian 2-group");
  }
  if (type.order() > (std::uint64_t(1) << 40)) {
    throw CapacityError("group order too large for the closed forms");
  }

  const long long A = (long long)type.order();
  const long long G2tor = (long long)type.torsion_subgroup_order(1);
  const long long B1 = (long long)type.power_subgroup_order(1);
  const long long C1 = (long long)type.power_subgroup_p_torsion(1);
  const std::size_t e = type.exponent_index();

  const long long rank =
      halved(m * (A + G2tor + C1 - B1), "the unitary rank formula") - m;

  const std::vector<long long> T = doubled_t(type, m);
  std::vector<long long> fv(e + 1, 0);
  for (std::size_t i = 1; i <= e; ++i) {
    long long doubled = T[i - 1] - 2 * T[i] + T[i + 1];
    if (i == 1) {
      doubled += 2 * m * (G2tor - 1) - 2 * type.f(1) - 2 * type.f(2);
    } else {
      doubled -= 2 * type.f(i + 1);
    }
    const long long fm = halved(doubled, "a complement multiplicity");
    if (fm < 0) {
      throw InternalCheckError("negative complement multiplicity at index " +
                               std::to_string(i));
    }
    fv[i] = type.f(i) + fm;
  }

  const long long order_exp =
      halved(m * (A + G2tor), "the unitary order exponent") - m +
      (long long)log_of_power((unsigned long long)C1, 2);
  const unsigned long long order = pow_checked(2, (unsigned long long)order_exp);

  long long rank_check = 0;
  long long exp_check = 0;
  for (std::size_t i = 1; i <= e; ++i) {
    rank_check += fv[i];
    exp_check += (long long)i * fv[i];
  }
  if (rank_check != rank || exp_check != order_exp) {
    throw InternalCheckError("the rank, type and order formulas disagree for " +
                             type.to_string());
  }

  UnitaryInvariants inv;
  inv.p = 2;
  inv.m = m;
  inv.order = order;
  inv.type = AbelianType(2, std::vector<long long>(fv.begin() + 1, fv.end()));
  inv.rank = (unsigned long long)rank;
  return inv;
}

UnitaryInvariants lemma2_forward(const AbelianType& type, int m) {
  require_field_degree(m);
  if (!type.is_trivial() && type.p() == 2) {
    throw ArgumentError("the odd closed forms need an abelian p-group, p odd");
  }
  if (type.order() > (std::uint64_t(1) << 40)) {
    throw CapacityError("group order too large for the closed forms");
  }
  const int p = type.is_trivial() ? 3 : type.p();
  const std::size_t e = type.exponent_index();

  std::vector<long long> fv(e + 1, 0);
  for (std::size_t i = 1; i <= e; ++i) {
    const long long lo = (long long)type.power_subgroup_order(i - 1);
    const long long mid = (long long)type.power_subgroup_order(i);
    const long long hi = (long long)type.power_subgroup_order(i + 1);
    const long long doubled = (long long)m * (lo - 2 * mid + hi);
    if (doubled < 0) {
      throw FormulaDomainError("power subgroup orders are not convex for " +
                               type.to_string());
    }
    if (doubled % 2 != 0) {
      throw FormulaDomainError("the odd closed form is not integral for " +
                               type.to_string());
    }
    fv[i] = doubled / 2;
  }

  long long rank = 0;
  long long order_exp = 0;
  for (std::size_t i = 1; i <= e; ++i) {
    rank += fv[i];
    order_exp += (long long)i * fv[i];
  }
  const long long expected_exp = (long long)m * ((long long)type.order() - 1) / 2;
  if ((long long)m * ((long long)type.order() - 1) % 2 != 0 ||
      order_exp != expected_exp) {
    throw InternalCheckError("the odd type formula misses the expected order "
                             "for " + type.to_string());
  }

  UnitaryInvariants inv;
  inv.p = p;
  inv.m = m;
  inv.order = pow_checked((unsigned long long)p, (unsigned long long)order_exp);
  inv.type = AbelianType(p, std::vector<long long>(fv.begin() + 1, fv.end()));
  inv.rank = (unsigned long long)rank;
  return inv;
}

unsigned long long order_of_base_group(unsigned long long unitary_order, int p,
                                       int m) {
  if (p != 2 && p != 3 && p != 5 && p != 7) {
    throw ArgumentError("the characteristic must be one of 2, 3, 5, 7");
  }
  require_field_degree(m);
  if (unitary_order == 0) {
    throw InconsistentInputError("a unitary order of zero is impossible");
  }
  if (unitary_order == 1) return 1;
  if (!is_power_of(unitary_order, (unsigned long long)p)) {
    throw InconsistentInputError("the unitary order must be a power of the "
                                 "field characteristic");
  }
  const unsigned long long e = log_of_power(unitary_order, (unsigned long long)p);

  if (p == 2) {
    for (int k = 1; k <= 60; ++k) {
      const unsigned long long lo = (unsigned long long)m << (k - 1);
      const unsigned long long hi = (unsigned long long)m * ((1ULL << k) - 1);
      if (e < lo) break;
      if (e <= hi) return 1ULL << k;
    }
    throw InconsistentInputError("2^" + std::to_string(e) + " falls in no "
                                 "unitary order window over GF(2^" +
                                 std::to_string(m) + ")");
  }

  if ((2 * e) % (unsigned long long)m != 0) {
    throw InconsistentInputError("the unitary order is not a half power of "
                                 "the field size");
  }
  const unsigned long long size = 2 * e / (unsigned long long)m + 1;
  if (!is_power_of(size, (unsigned long long)p)) {
    throw InconsistentInputError("the deduced group order " +
                                 std::to_string(size) + " is not a power of " +
                                 std::to_string(p));
  }
  return size;
}

AbelianType reconstruct(const UnitaryInvariants& inv, int p, int m) {
  if (inv.p != 0 && inv.p != p) {
    throw InconsistentInputError("the invariants carry a different "
                                 "characteristic than requested");
  }
  if (inv.m != 0 && inv.m != m) {
    throw InconsistentInputError("the invariants carry a different field "
                                 "degree than requested");
  }
  const unsigned long long size = order_of_base_group(inv.order, p, m);
  const std::vector<AbelianType> candidates =
      size == 1 ? std::vector<AbelianType>{AbelianType::trivial(p)}
                : AbelianType::all_of_order(p, size);

  std::vector<AbelianType> matches;
  for (const AbelianType& cand : candidates) {
    const UnitaryInvariants fwd =
        p == 2 ? lemma1_forward(cand, m) : lemma2_forward(cand, m);
    if (fwd.order != inv.order) continue;
    if (inv.type && *fwd.type != *inv.type) continue;
    if (inv.rank && *fwd.rank != *inv.rank) continue;
    matches.push_back(cand);
  }
  if (matches.empty()) {
    throw InconsistentInputError("no abelian group of order " +
                                 std::to_string(size) +
                                 " yields these unitary invariants");
  }
  if (matches.size() > 1) {
    std::string listing;
    for (const AbelianType& t : matches) {
      if (!listing.empty()) listing += ", ";
      listing += t.to_string();
    }
    throw TheoremViolation("reconstruction is ambiguous between " + listing);
  }
  return matches.front();
}

bool is_full_unitary(const AbelianType& type, int m) {
  const UnitaryInvariants inv = lemma1_forward(type, m);
  const unsigned long long full_exp =
      (unsigned long long)m * (type.order() - 1);
  return log_of_power(inv.order, 2) == full_exp;
}

}  // namespace uforge
