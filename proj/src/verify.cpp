#include "uforge/verify.hpp"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>
#include <utility>

#include "uforge/abelian_type.hpp"
#include "uforge/black_box.hpp"
#include "uforge/errors.hpp"
#include "uforge/fingerprint.hpp"
#include "uforge/group_algebra.hpp"
#include "uforge/group_table.hpp"
#include "uforge/unitary.hpp"

namespace uforge {
namespace {

constexpr unsigned long long kEnumerationCap = 1ull << 24;

struct CheckSpec {
  std::string id;
  std::string anchor;
  std::string provenance;
  std::string expected;
  std::function<std::string()> compute;  // absent: emit a skip record
  std::string skip_reason;
};

std::string ts(unsigned long long v) { return std::to_string(v); }

std::string invariant_line(unsigned long long order, unsigned long long rank,
                           const AbelianType& type) {
  return "order=" + ts(order) + " rank=" + ts(rank) + " type=" + type.to_string();
}

std::string invariant_line(const UnitaryInvariants& inv) {
  return invariant_line(inv.order, *inv.rank, *inv.type);
}

// Abelian type from a multiplication oracle, by counting the fixed points of
// the iterated p-th power map. The map is materialized once as a permutation
// table, so deeper levels cost one lookup per element; this keeps
// million-element views affordable.
AbelianType profile_type(const BlackBoxGroup& G, int p) {
  unsigned long long total_log =
      log_of_power(G.size(), (unsigned long long)p);
  std::vector<std::uint32_t> pow_map(G.size());
  for (std::size_t i = 0; i < pow_map.size(); ++i) {
    pow_map[i] = bb_pow(G, std::uint32_t(i), (unsigned long long)p);
  }
  std::vector<std::uint32_t> cur(G.size());
  for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = std::uint32_t(i);
  const std::uint32_t id = G.identity();
  std::vector<unsigned long long> n = {0};
  while (n.back() < total_log) {
    unsigned long long fixed = 0;
    for (std::uint32_t& x : cur) {
      x = pow_map[x];
      if (x == id) ++fixed;
    }
    n.push_back(log_of_power(fixed, (unsigned long long)p));
  }
  std::size_t e = n.size() - 1;
  std::vector<long long> f(e, 0);
  for (std::size_t i = 1; i <= e; ++i) {
    unsigned long long up = n[i] - n[i - 1];
    unsigned long long next = i < e ? n[i + 1] - n[i] : 0;
    f[i - 1] = (long long)(up - next);
  }
  return AbelianType(p, std::move(f));
}

std::string brute_abelian_profile(const AbelianType& type, int p, int m) {
  AlgebraContext ctx(FieldDesc::get(p, m), GroupTable::from_abelian_type(type));
  unsigned long long units = 1;
  bool enumerable = true;
  for (unsigned long long i = 1; i < type.order(); ++i) {
    for (int j = 0; j < m; ++j) units *= (unsigned long long)p;
    if (units > kEnumerationCap) {
      enumerable = false;
      break;
    }
  }
  UnitGroupView v =
      enumerable ? unitary_subgroup(ctx) : unitary_subgroup_closure(ctx);
  AbelianType got = profile_type(v, p);
  return invariant_line(v.size(), got.rank(), got);
}

std::vector<AbelianType> types_through(int p, unsigned long long max_order) {
  std::vector<AbelianType> out;
  for (unsigned long long order = (unsigned long long)p; order <= max_order;
       order *= (unsigned long long)p) {
    for (const AbelianType& t : AbelianType::all_of_order(p, order)) {
      out.push_back(t);
    }
  }
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& s : parts) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

// --------------------------------------------------------------- suite lemma1

const char* kAnchor1 =
    "closed forms in characteristic 2: rank, direct decomposition and order "
    "of the unitary subgroup of an abelian group algebra";

std::vector<CheckSpec> build_lemma1(const RunConfig& config) {
  std::vector<CheckSpec> specs;
  unsigned long long brute_bound =
      config.max_order < 16 ? config.max_order : 16;
  for (int m = 1; m <= config.m; ++m) {
    for (const AbelianType& type : types_through(2, brute_bound)) {
      CheckSpec spec;
      spec.id = "lemma1/" + type.to_string() + "/m" + ts(m);
      spec.anchor = kAnchor1;
      spec.provenance = "enumeration";
      spec.expected = invariant_line(lemma1_forward(type, m));
      if ((type.order() - 1) * (unsigned long long)m > 24) {
        spec.skip_reason = "enumerating " + ts(type.order() - 1) +
                           " base-4 digits exceeds the 2^24 unit cap";
      } else {
        spec.compute = [type, m] { return brute_abelian_profile(type, 2, m); };
      }
      specs.push_back(std::move(spec));
    }
  }
  {
    CheckSpec spec;
    spec.id = "lemma1/internal-consistency";
    spec.anchor = kAnchor1;
    spec.provenance = "cross-check";
    std::size_t cases =
        types_through(2, config.max_order).size() * std::size_t(config.m);
    spec.expected =
        "rank, decomposition and order clauses agree on " + ts(cases) + " cases";
    unsigned long long max_order = config.max_order;
    int max_m = config.m;
    spec.compute = [max_order, max_m, cases]() -> std::string {
      for (int m = 1; m <= max_m; ++m) {
        for (const AbelianType& type : types_through(2, max_order)) {
          try {
            (void)lemma1_forward(type, m);
          } catch (const Error& e) {
            return type.to_string() + " at m=" + ts((unsigned long long)m) +
                   ": " + e.what();
          }
        }
      }
      return "rank, decomposition and order clauses agree on " + ts(cases) +
             " cases";
    };
    specs.push_back(std::move(spec));
  }
  return specs;
}

// --------------------------------------------------------------- suite lemma2

const char* kAnchor2 =
    "closed form in odd characteristic: the cyclic decomposition of the "
    "unitary subgroup, which determines the abelian base group";

std::vector<CheckSpec> build_lemma2(const RunConfig& config) {
  std::vector<CheckSpec> specs;
  unsigned long long bound = config.max_order < 27 ? config.max_order : 27;
  for (int m = 1; m <= config.m; ++m) {
    for (const AbelianType& type : types_through(3, bound)) {
      // group order 27 stays on the m=1 lane; 9^13 elements are out of reach
      if (type.order() == 27 && m == 2) continue;
      unsigned long long digits = (type.order() - 1) * (unsigned long long)m;
      bool enumerable = pow_checked(3, digits) <= kEnumerationCap;
      unsigned long long closure_size = pow_checked(3, digits / 2);
      CheckSpec spec;
      spec.id = "lemma2/" + type.to_string() + "/m" + ts((unsigned long long)m);
      spec.anchor = kAnchor2;
      spec.provenance = "enumeration";
      spec.expected = invariant_line(lemma2_forward(type, m));
      if (!enumerable && closure_size > 1000000 && !config.long_checks) {
        spec.skip_reason = "materializes " + ts(closure_size) +
                           " unitary units, enable with --long";
      } else {
        spec.compute = [type, m] { return brute_abelian_profile(type, 3, m); };
      }
      specs.push_back(std::move(spec));
    }
    {
      CheckSpec spec;
      spec.id = "lemma2/m" + ts((unsigned long long)m) + "/forward-injectivity";
      spec.anchor = kAnchor2;
      spec.provenance = "cross-check";
      std::size_t count = types_through(3, bound).size();
      spec.expected =
          ts(count) + " base types map to pairwise distinct unitary profiles";
      unsigned long long b = bound;
      spec.compute = [b, m, count]() -> std::string {
        std::vector<std::string> seen;
        for (const AbelianType& type : types_through(3, b)) {
          std::string line = invariant_line(lemma2_forward(type, m));
          for (const std::string& prior : seen) {
            if (prior == line) return "collision on " + line;
          }
          seen.push_back(std::move(line));
        }
        return ts(count) + " base types map to pairwise distinct unitary profiles";
      };
      specs.push_back(std::move(spec));
    }
  }
  {
    CheckSpec spec;
    spec.id = "lemma2/C3^3/direct-enumeration";
    spec.anchor = kAnchor2;
    spec.provenance = "enumeration";
    spec.expected = invariant_line(lemma2_forward(AbelianType(3, {3}), 1));
    spec.skip_reason =
        "the full normalized unit group has 3^26 elements; only the image "
        "closure route above is feasible";
    specs.push_back(std::move(spec));
  }
  return specs;
}

// --------------------------------------------------------------- suite lemma3

const char* kAnchor3 =
    "the unitary subgroup exhausts the normalized units only for elementary "
    "abelian base groups, plus C4 over the 2-element field";

std::string full_unitary_scan(unsigned long long max_order, int m,
                              bool predicted) {
  std::vector<std::string> names;
  for (const AbelianType& type : types_through(2, max_order)) {
    bool full = predicted
                    ? (type.is_elementary() ||
                       (m == 1 && type == AbelianType(2, {0, 1})))
                    : is_full_unitary(type, m);
    if (full) names.push_back(type.to_string());
  }
  return join(names);
}

std::vector<CheckSpec> build_lemma3(const RunConfig& config) {
  std::vector<CheckSpec> specs;
  for (int m = 1; m <= config.m; ++m) {
    CheckSpec spec;
    spec.id = "lemma3/m" + ts((unsigned long long)m) + "/classification";
    spec.anchor = kAnchor3;
    spec.provenance = "closed-form";
    spec.expected = full_unitary_scan(config.max_order, m, true);
    unsigned long long max_order = config.max_order;
    spec.compute = [max_order, m] {
      return full_unitary_scan(max_order, m, false);
    };
    specs.push_back(std::move(spec));
  }
  struct BruteCase {
    int m;
    unsigned long long order;
  };
  for (BruteCase c : {BruteCase{1, 4}, BruteCase{1, 8}, BruteCase{2, 4}}) {
    if (c.m > config.m || c.order > config.max_order) continue;
    CheckSpec spec;
    spec.id = "lemma3/m" + ts((unsigned long long)c.m) + "/order" +
              ts(c.order) + "/brute";
    spec.anchor = kAnchor3;
    spec.provenance = "enumeration";
    std::vector<std::string> expect;
    for (const AbelianType& type : AbelianType::all_of_order(2, c.order)) {
      if (type.is_elementary() || (c.m == 1 && type == AbelianType(2, {0, 1}))) {
        expect.push_back(type.to_string());
      }
    }
    spec.expected = join(expect);
    spec.compute = [c] {
      std::vector<std::string> full;
      for (const AbelianType& type : AbelianType::all_of_order(2, c.order)) {
        AlgebraContext ctx(FieldDesc::get(2, c.m),
                           GroupTable::from_abelian_type(type));
        if (unitary_subgroup(ctx).size() == normalized_unit_count(ctx)) {
          full.push_back(type.to_string());
        }
      }
      return join(full);
    };
    specs.push_back(std::move(spec));
  }
  return specs;
}

// --------------------------------------------------------------- suite lemma4

const char* kAnchor4 =
    "the order of the unitary subgroup pins the order of the abelian base "
    "group: disjoint exponent windows in characteristic 2, an exact exponent "
    "formula in odd characteristic";

std::vector<CheckSpec> build_lemma4(const RunConfig& config) {
  std::vector<CheckSpec> specs;
  for (int m = 1; m <= config.m; ++m) {
    for (int p : {2, 3}) {
      unsigned long long cap = p == 2 ? 32 : 27;
      if (config.max_order < cap) cap = config.max_order;
      for (unsigned long long order = (unsigned long long)p; order <= cap;
           order *= (unsigned long long)p) {
        CheckSpec spec;
        spec.id = "lemma4/m" + ts((unsigned long long)m) + "/p" +
                  ts((unsigned long long)p) + "/order" + ts(order);
        spec.anchor = kAnchor4;
        spec.provenance = "cross-check";
        std::size_t count = AbelianType::all_of_order(p, order).size();
        spec.expected =
            "all " + ts(count) + " types of order " + ts(order) + " invert";
        spec.compute = [p, m, order, count]() -> std::string {
          for (const AbelianType& type : AbelianType::all_of_order(p, order)) {
            UnitaryInvariants inv =
                p == 2 ? lemma1_forward(type, m) : lemma2_forward(type, m);
            unsigned long long back = order_of_base_group(inv.order, p, m);
            if (back != order) {
              return type.to_string() + " inverted to " + ts(back);
            }
          }
          return "all " + ts(count) + " types of order " + ts(order) +
                 " invert";
        };
        specs.push_back(std::move(spec));
      }
    }
    {
      CheckSpec spec;
      spec.id = "lemma4/m" + ts((unsigned long long)m) + "/window-disjointness";
      spec.anchor = kAnchor4;
      spec.provenance = "closed-form";
      spec.expected =
          "exponent windows ordered and pairwise disjoint for k in [1, 20]";
      spec.compute = [m]() -> std::string {
        unsigned long long prev_hi = 0;
        for (int k = 1; k <= 20; ++k) {
          unsigned long long lo = (unsigned long long)m << (k - 1);
          unsigned long long hi =
              (unsigned long long)m * ((1ull << k) - 1);
          if (lo > hi || (k > 1 && lo <= prev_hi)) {
            return "window overlap at k=" + ts((unsigned long long)k);
          }
          prev_hi = hi;
        }
        return "exponent windows ordered and pairwise disjoint for k in [1, 20]";
      };
      specs.push_back(std::move(spec));
    }
    {
      CheckSpec spec;
      spec.id = "lemma4/m" + ts((unsigned long long)m) + "/rejections";
      spec.anchor = kAnchor4;
      spec.provenance = "cross-check";
      std::size_t probes = m == 1 ? 3 : 4;
      spec.expected = "rejected " + ts(probes) + " of " + ts(probes) +
                      " impossible unitary orders";
      spec.compute = [m, probes]() -> std::string {
        struct Probe {
          unsigned long long order;
          int p;
        };
        std::vector<Probe> list = {{0, 2}, {82, 2}, {243, 3}};
        if (m == 2) list.push_back({8, 2});
        std::size_t rejected = 0;
        for (const Probe& probe : list) {
          try {
            (void)order_of_base_group(probe.order, probe.p, m);
            return "accepted impossible order " + ts(probe.order);
          } catch (const InconsistentInputError&) {
            ++rejected;
          }
        }
        return "rejected " + ts(rejected) + " of " + ts(probes) +
               " impossible unitary orders";
      };
      specs.push_back(std::move(spec));
    }
  }
  return specs;
}

// --------------------------------------------------------------- suite lemma5

const char* kAnchor5 =
    "for an abelian 2-group of exponent 2^e with e >= 2, the 2^(e-1)-th "
    "power subgroup is elementary abelian";

std::vector<CheckSpec> build_lemma5(const RunConfig& config) {
  std::vector<CheckSpec> specs;
  {
    CheckSpec spec;
    spec.id = "lemma5/closed-forms";
    spec.anchor = kAnchor5;
    spec.provenance = "closed-form";
    std::size_t cases = 0;
    for (const AbelianType& type : types_through(2, config.max_order)) {
      if (type.exponent_index() >= 2) ++cases;
    }
    spec.expected = "last power subgroup elementary for " + ts(cases) +
                    " types of exponent at least 4";
    unsigned long long max_order = config.max_order;
    spec.compute = [max_order, cases]() -> std::string {
      for (const AbelianType& type : types_through(2, max_order)) {
        std::size_t e = type.exponent_index();
        if (e < 2) continue;
        if (type.power_subgroup_order(e - 1) !=
            type.power_subgroup_p_torsion(e - 1)) {
          return type.to_string() + " violates the torsion identity";
        }
      }
      return "last power subgroup elementary for " + ts(cases) +
             " types of exponent at least 4";
    };
    specs.push_back(std::move(spec));
  }
  {
    CheckSpec spec;
    spec.id = "lemma5/brute-tables";
    spec.anchor = kAnchor5;
    spec.provenance = "enumeration";
    unsigned long long bound = config.max_order < 16 ? config.max_order : 16;
    std::size_t cases = 0;
    for (const AbelianType& type : types_through(2, bound)) {
      if (type.exponent_index() >= 2) ++cases;
    }
    spec.expected =
        "verified on " + ts(cases) + " multiplication tables";
    spec.compute = [bound, cases]() -> std::string {
      for (const AbelianType& type : types_through(2, bound)) {
        std::size_t e = type.exponent_index();
        if (e < 2) continue;
        GroupTable table = GroupTable::from_abelian_type(type);
        GroupTable power = power_subgroup(table, e - 1);
        if (!abelian_type(power).is_elementary() ||
            torsion_subgroup(power, 1).size() != power.size()) {
          return type.to_string() + " has a non-elementary power subgroup";
        }
      }
      return "verified on " + ts(cases) + " multiplication tables";
    };
    specs.push_back(std::move(spec));
  }
  return specs;
}

// --------------------------------------------------------------- suite lemma6

const char* kAnchor6 =
    "solution counts for the windowed unitary condition over a cyclic "
    "2-group: zero at odd index, 2^(3*2^(n-2)+l) at index 2l, the full "
    "normalized unit group from half order upward";

unsigned long long h_rule(int n, std::size_t i) {
  unsigned long long half = 1ull << (n - 1);
  if (i >= half) return 1ull << ((1ull << n) - 1);
  if (i % 2 == 1) return 0;
  return 1ull << (3ull * (1ull << (n - 2)) + i / 2);
}

std::vector<CheckSpec> build_lemma6(const RunConfig&) {
  std::vector<CheckSpec> specs;
  for (int n = 2; n <= 4; ++n) {
    {
      CheckSpec spec;
      spec.id = "lemma6/n" + ts((unsigned long long)n) + "/window-table";
      spec.anchor = kAnchor6;
      spec.provenance = "enumeration";
      std::vector<std::string> expect;
      for (std::size_t i = 0; i <= (1ull << n); ++i) {
        expect.push_back(ts(h_rule(n, i)));
      }
      spec.expected = "[" + join(expect) + "]";
      spec.compute = [n] {
        std::vector<std::string> got;
        for (std::size_t i = 0; i <= (1ull << n); ++i) {
          got.push_back(ts(h_set_size(n, i)));
        }
        return "[" + join(got) + "]";
      };
      specs.push_back(std::move(spec));
    }
    {
      CheckSpec spec;
      spec.id = "lemma6/n" + ts((unsigned long long)n) +
                "/annihilator-dimensions";
      spec.anchor = kAnchor6;
      spec.provenance = "enumeration";
      std::vector<std::string> expect;
      for (std::size_t i = 0; i <= (1ull << n); ++i) expect.push_back(ts(i));
      spec.expected = "[" + join(expect) + "]";
      spec.compute = [n]() -> std::string {
        AlgebraContext ctx(FieldDesc::get(2, 1),
                           GroupTable::cyclic(1ull << n));
        unsigned long long slots = 1ull << n;
        std::vector<std::string> dims;
        for (std::size_t i = 0; i <= slots; ++i) {
          AlgebraElement window =
              algebra_pow(ctx.one() + ctx.embed(1), (unsigned long long)i);
          unsigned long long kills = 0;
          for (std::uint64_t code = 0; code < (1ull << slots); ++code) {
            if ((ctx.element(code) * window).code() == 0) ++kills;
          }
          if (!is_power_of(kills, 2ull)) {
            return "annihilator count " + ts(kills) + " at index " + ts(i) +
                   " is not a power of 2";
          }
          dims.push_back(ts(log_of_power(kills, 2ull)));
        }
        return "[" + join(dims) + "]";
      };
      specs.push_back(std::move(spec));
    }
  }
  return specs;
}

// --------------------------------------------------------------- suite lemma7

const char* kAnchor7 =
    "symmetric involutions among the normalized units of a cyclic 2-group "
    "of order 2^n number exactly 2^(2^(n-2)+1)";

std::vector<CheckSpec> build_lemma7(const RunConfig&) {
  std::vector<CheckSpec> specs;
  for (int n = 2; n <= 4; ++n) {
    CheckSpec spec;
    spec.id = "lemma7/n" + ts((unsigned long long)n);
    spec.anchor = kAnchor7;
    spec.provenance = "enumeration";
    spec.expected = ts(1ull << ((1ull << (n - 2)) + 1));
    spec.compute = [n] { return ts(s_star_two_size(n)); };
    specs.push_back(std::move(spec));
  }
  return specs;
}

// ------------------------------------------------------------------ theta

const char* kAnchorTheta =
    "involution counts in the unitary subgroups of maximal-class group "
    "algebras: closed forms for the dihedral and quaternion families, a "
    "frozen reference value for each semidihedral case";

AlgebraContext family_context(const std::string& family, int n) {
  if (family == "D") {
    return AlgebraContext(FieldDesc::get(2, 1), GroupTable::dihedral(n));
  }
  if (family == "Q") {
    return AlgebraContext(FieldDesc::get(2, 1), GroupTable::quaternion(n));
  }
  return AlgebraContext(FieldDesc::get(2, 1), GroupTable::semidihedral(n));
}

std::vector<CheckSpec> build_theta(const RunConfig& config) {
  std::vector<CheckSpec> specs;
  struct Closed {
    const char* family;
    int n;
  };
  for (Closed c : {Closed{"D", 2}, Closed{"Q", 2}, Closed{"D", 3},
                   Closed{"Q", 3}}) {
    CheckSpec spec;
    spec.id = std::string("theta/") + c.family + ts(1ull << (c.n + 1)) +
              "/brute-vs-closed";
    spec.anchor = kAnchorTheta;
    spec.provenance = "enumeration";
    spec.expected = ts(theta_closed_form(c.family, c.n).theta);
    std::string family = c.family;
    int n = c.n;
    spec.compute = [family, n] {
      return ts(theta_brute(family_context(family, n)).theta);
    };
    specs.push_back(std::move(spec));
  }
  {
    CheckSpec spec;
    spec.id = "theta/SD16/brute-vs-known";
    spec.anchor = kAnchorTheta;
    spec.provenance = "known-value";
    spec.expected = "384";
    spec.compute = [] { return ts(theta_brute(family_context("SD", 3)).theta); };
    specs.push_back(std::move(spec));
  }
  struct Pair {
    const char* family;
    int n;
    unsigned long long known;
  };
  for (Pair c : {Pair{"D", 2, 48}, Pair{"Q", 2, 16}, Pair{"D", 3, 896},
                 Pair{"Q", 3, 128}, Pair{"SD", 3, 384}}) {
    CheckSpec spec;
    spec.id = std::string("theta/") + c.family + ts(1ull << (c.n + 1)) +
              "/structured-vs-brute";
    spec.anchor = kAnchorTheta;
    spec.provenance = "cross-check";
    spec.expected =
        "structured=" + ts(c.known) + " brute=" + ts(c.known);
    std::string family = c.family;
    int n = c.n;
    spec.compute = [family, n] {
      unsigned long long s = theta_structured(family, n).theta;
      unsigned long long b = theta_brute(family_context(family, n)).theta;
      return "structured=" + ts(s) + " brute=" + ts(b);
    };
    specs.push_back(std::move(spec));
  }
  if (config.long_checks) {
    struct Long {
      const char* family;
      unsigned long long known;
      const char* provenance;
      const char* tail;
    };
    for (Long c : {Long{"D", 253952, "cross-check", "structured-vs-closed"},
                   Long{"Q", 8192, "cross-check", "structured-vs-closed"},
                   Long{"SD", 32768, "known-value", "structured-vs-known"}}) {
      CheckSpec spec;
      spec.id = std::string("theta/") + c.family + "32/" + c.tail;
      spec.anchor = kAnchorTheta;
      spec.provenance = c.provenance;
      spec.expected = ts(c.known);
      std::string family = c.family;
      spec.compute = [family] { return ts(theta_structured(family, 4).theta); };
      specs.push_back(std::move(spec));
    }
  }
  return specs;
}

// ------------------------------------------------------------- suite theorem1

const char* kAnchorT1 =
    "the unitary subgroup of an abelian modular group algebra determines "
    "the base group up to isomorphism";

std::vector<CheckSpec> build_theorem1(const RunConfig& config) {
  std::vector<CheckSpec> specs;
  for (int p : {2, 3}) {
    unsigned long long cap = p == 2 ? 32 : 27;
    if (config.max_order < cap) cap = config.max_order;
    for (int m = 1; m <= config.m; ++m) {
      for (unsigned long long order = (unsigned long long)p; order <= cap;
           order *= (unsigned long long)p) {
        CheckSpec spec;
        spec.id = "theorem1/p" + ts((unsigned long long)p) + "/m" +
                  ts((unsigned long long)m) + "/order" + ts(order) +
                  "/round-trip";
        spec.anchor = kAnchorT1;
        spec.provenance = "cross-check";
        std::size_t count = AbelianType::all_of_order(p, order).size();
        spec.expected =
            "all " + ts(count) + " types recovered uniquely";
        spec.compute = [p, m, order, count]() -> std::string {
          for (const AbelianType& type : AbelianType::all_of_order(p, order)) {
            UnitaryInvariants inv =
                p == 2 ? lemma1_forward(type, m) : lemma2_forward(type, m);
            try {
              AbelianType back = reconstruct(inv, p, m);
              if (back != type) {
                return type.to_string() + " came back as " + back.to_string();
              }
            } catch (const Error& e) {
              return type.to_string() + ": " + e.what();
            }
          }
          return "all " + ts(count) + " types recovered uniquely";
        };
        specs.push_back(std::move(spec));
      }
      {
        CheckSpec spec;
        spec.id = "theorem1/p" + ts((unsigned long long)p) + "/m" +
                  ts((unsigned long long)m) + "/forward-injectivity";
        spec.anchor = kAnchorT1;
        spec.provenance = "cross-check";
        std::size_t count = types_through(p, cap).size();
        spec.expected = ts(count) + " unitary profiles pairwise distinct";
        unsigned long long c = cap;
        spec.compute = [p, m, c, count]() -> std::string {
          std::vector<std::string> seen;
          for (const AbelianType& type : types_through(p, c)) {
            UnitaryInvariants inv =
                p == 2 ? lemma1_forward(type, m) : lemma2_forward(type, m);
            std::string line = invariant_line(inv);
            for (const std::string& prior : seen) {
              if (prior == line) return "collision on " + line;
            }
            seen.push_back(std::move(line));
          }
          return ts(count) + " unitary profiles pairwise distinct";
        };
        specs.push_back(std::move(spec));
      }
    }
  }
  return specs;
}

// ------------------------------------------------------------- suite theorem2

const char* kAnchorT2 =
    "maximal-class base groups are told apart by their unitary involution "
    "counts: quaternion strictly below semidihedral strictly below dihedral";

std::string render_chain(const std::vector<unsigned long long>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += values[i - 1] < values[i] ? " < " : " !< ";
    out += ts(values[i]);
  }
  return out;
}

std::vector<CheckSpec> build_theorem2(const RunConfig& config) {
  std::vector<CheckSpec> specs;
  {
    CheckSpec spec;
    spec.id = "theorem2/n2/brute-pair";
    spec.anchor = kAnchorT2;
    spec.provenance = "enumeration";
    spec.expected = "16 < 48";
    spec.compute = [] {
      return render_chain({theta_brute(family_context("Q", 2)).theta,
                           theta_brute(family_context("D", 2)).theta});
    };
    specs.push_back(std::move(spec));
  }
  {
    CheckSpec spec;
    spec.id = "theorem2/n3/brute-chain";
    spec.anchor = kAnchorT2;
    spec.provenance = "enumeration";
    spec.expected = "128 < 384 < 896";
    spec.compute = [] {
      return render_chain({theta_brute(family_context("Q", 3)).theta,
                           theta_brute(family_context("SD", 3)).theta,
                           theta_brute(family_context("D", 3)).theta});
    };
    specs.push_back(std::move(spec));
  }
  {
    CheckSpec spec;
    spec.id = "theorem2/closed-form/strictness";
    spec.anchor = kAnchorT2;
    spec.provenance = "closed-form";
    spec.expected = "quaternion count below dihedral count for n in [2, 10]";
    spec.compute = []() -> std::string {
      for (int n = 2; n <= 10; ++n) {
        // compare exponents: 2^(3*2^(n-2)+2) < 2^(2^n+2)
        unsigned long long q = 3ull * (1ull << (n - 2)) + 2;
        unsigned long long d = (1ull << n) + 2;
        if (q >= d) return "violated at n=" + ts((unsigned long long)n);
      }
      return "quaternion count below dihedral count for n in [2, 10]";
    };
    specs.push_back(std::move(spec));
  }
  if (config.long_checks) {
    {
      CheckSpec spec;
      spec.id = "theorem2/n4/structured-chain";
      spec.anchor = kAnchorT2;
      spec.provenance = "cross-check";
      spec.expected = "8192 < 32768 < 253952";
      spec.compute = [] {
        return render_chain({theta_structured("Q", 4).theta,
                             theta_structured("SD", 4).theta,
                             theta_structured("D", 4).theta});
      };
      specs.push_back(std::move(spec));
    }
    {
      CheckSpec spec;
      spec.id = "theorem2/n4/endpoints-match-closed";
      spec.anchor = kAnchorT2;
      spec.provenance = "cross-check";
      spec.expected = "Q=" + ts(theta_closed_form("Q", 4).theta) +
                      " D=" + ts(theta_closed_form("D", 4).theta);
      spec.compute = [] {
        return "Q=" + ts(theta_structured("Q", 4).theta) +
               " D=" + ts(theta_structured("D", 4).theta);
      };
      specs.push_back(std::move(spec));
    }
  }
  return specs;
}

// ------------------------------------------------------------- suite theorem3

const char* kAnchorT3 =
    "the nine nonabelian groups of order 16 have pairwise non-isomorphic "
    "unitary subgroups over the 2-element field";

struct CatalogProfiles {
  std::once_flag once;
  SeparationReport sixteen;
  SeparationReport eight;
};

std::vector<CheckSpec> build_theorem3(const RunConfig& config) {
  auto shared = std::make_shared<CatalogProfiles>();
  int parallel = config.parallel;
  auto profiles = [shared, parallel]() -> CatalogProfiles& {
    std::call_once(shared->once, [shared, parallel] {
      shared->sixteen = distinguish(catalog(16, "nonabelian"), 2, 1, parallel);
      shared->eight = distinguish(catalog(8, "maximal-class"), 2, 1, 1);
    });
    return *shared;
  };
  auto lookup = [](const SeparationReport& report,
                   const std::string& name) -> const Fingerprint& {
    for (std::size_t i = 0; i < report.names.size(); ++i) {
      if (report.names[i] == name) return report.fingerprints[i];
    }
    throw InternalCheckError("no profile recorded for " + name);
  };

  std::vector<CheckSpec> specs;
  struct OrderRow {
    const char* name;
    unsigned long long order;
  };
  for (OrderRow row :
       {OrderRow{"D8", 64}, OrderRow{"Q8", 64}, OrderRow{"Q8xC2", 2048},
        OrderRow{"M16", 1024}, OrderRow{"Q16", 1024}, OrderRow{"C4sC4", 2048},
        OrderRow{"SD16", 2048}, OrderRow{"D8YC4", 2048}, OrderRow{"D16", 4096},
        OrderRow{"G44", 4096}, OrderRow{"D8xC2", 8192}}) {
    CheckSpec spec;
    spec.id = std::string("theorem3/") + row.name + "/unitary-order";
    spec.anchor = kAnchorT3;
    spec.provenance = "known-value";
    spec.expected = ts(row.order);
    std::string name = row.name;
    bool small = row.order == 64;
    spec.compute = [profiles, lookup, name, small] {
      const SeparationReport& report =
          small ? profiles().eight : profiles().sixteen;
      return ts(lookup(report, name).order);
    };
    specs.push_back(std::move(spec));
  }
  struct DerivedRow {
    const char* name;
    const char* type;
  };
  for (DerivedRow row :
       {DerivedRow{"Q8xC2", "C2"}, DerivedRow{"M16", "C2^3"},
        DerivedRow{"Q16", "C4xC2^2"}, DerivedRow{"C4sC4", "C2^4"},
        DerivedRow{"SD16", "C4xC2^4"}, DerivedRow{"D8YC4", "C2"},
        DerivedRow{"D16", "C4xC2^5"}, DerivedRow{"G44", "C2^4"}}) {
    CheckSpec spec;
    spec.id = std::string("theorem3/") + row.name + "/derived-type";
    spec.anchor = kAnchorT3;
    spec.provenance = "known-value";
    spec.expected = row.type;
    std::string name = row.name;
    spec.compute = [profiles, lookup, name] {
      return fingerprint_field_value(lookup(profiles().sixteen, name),
                                     "derived");
    };
    specs.push_back(std::move(spec));
  }
  {
    CheckSpec spec;
    spec.id = "theorem3/hamiltonian-flags";
    spec.anchor = kAnchorT3;
    spec.provenance = "known-value";
    spec.expected = "Q8, Q8xC2";
    spec.compute = [profiles]() {
      std::vector<std::string> flagged;
      const CatalogProfiles& shared = profiles();
      for (const SeparationReport* report :
           {&shared.eight, &shared.sixteen}) {
        for (std::size_t i = 0; i < report->names.size(); ++i) {
          if (report->fingerprints[i].hamiltonian) {
            flagged.push_back(report->names[i]);
          }
        }
      }
      return join(flagged);
    };
    specs.push_back(std::move(spec));
  }
  {
    CheckSpec spec;
    spec.id = "theorem3/separation/all-pairs";
    spec.anchor = kAnchorT3;
    spec.provenance = "enumeration";
    spec.expected = "36 of 36 pairs separated";
    spec.compute = [profiles]() {
      const SeparationReport& report = profiles().sixteen;
      std::size_t separated = 0;
      for (const SeparationPair& pair : report.pairs) {
        if (!pair.separating_field.empty()) ++separated;
      }
      return ts(separated) + " of " + ts(report.pairs.size()) +
             " pairs separated";
    };
    specs.push_back(std::move(spec));
  }
  return specs;
}

// ----------------------------------------------------------------- runner

std::vector<CheckSpec> build_suite(const std::string& suite,
                                   const RunConfig& config) {
  bool fixed_shape = suite == "lemma6" || suite == "lemma7" ||
                     suite == "theta" || suite == "theorem2" ||
                     suite == "theorem3";
  if (fixed_shape && config.max_order < 16) {
    throw ConfigError("suite " + suite +
                      " touches groups of order 16; raise max_order");
  }
  if (suite == "lemma1") return build_lemma1(config);
  if (suite == "lemma2") return build_lemma2(config);
  if (suite == "lemma3") return build_lemma3(config);
  if (suite == "lemma4") return build_lemma4(config);
  if (suite == "lemma5") return build_lemma5(config);
  if (suite == "lemma6") return build_lemma6(config);
  if (suite == "lemma7") return build_lemma7(config);
  if (suite == "theta") return build_theta(config);
  if (suite == "theorem1") return build_theorem1(config);
  if (suite == "theorem2") return build_theorem2(config);
  if (suite == "theorem3") return build_theorem3(config);
  if (suite == "all") {
    std::vector<CheckSpec> specs;
    for (const std::string& name : verification_suites()) {
      if (name == "all") continue;
      std::vector<CheckSpec> part = build_suite(name, config);
      for (CheckSpec& spec : part) specs.push_back(std::move(spec));
    }
    return specs;
  }
  std::string names;
  for (const std::string& name : verification_suites()) {
    if (!names.empty()) names += ", ";
    names += name;
  }
  throw ConfigError("unknown suite " + suite + "; expected one of " + names);
}

}  // namespace

const std::vector<std::string>& verification_suites() {
  static const std::vector<std::string> suites = {
      "lemma1", "lemma2", "lemma3",   "lemma4",   "lemma5",   "lemma6",
      "lemma7", "theta",  "theorem1", "theorem2", "theorem3", "all"};
  return suites;
}

SuiteReport run_suite(const std::string& suite, const RunConfig& config) {
  config.validate();
  std::vector<CheckSpec> specs = build_suite(suite, config);
  SuiteReport report;
  report.suite = suite;
  report.config = config;
  report.checks.resize(specs.size());

  auto run_one = [&](std::size_t i) {
    const CheckSpec& spec = specs[i];
    if (!spec.compute) {
      report.checks[i] = make_skip(spec.id, spec.anchor, spec.expected,
                                   spec.skip_reason, spec.provenance);
      return;
    }
    auto start = std::chrono::steady_clock::now();
    std::string computed;
    try {
      computed = spec.compute();
    } catch (const std::exception& e) {
      computed = std::string("unexpected error: ") + e.what();
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    report.checks[i] = make_check(spec.id, spec.anchor, spec.expected,
                                  computed, spec.provenance, elapsed);
  };

  int width = config.parallel;
  if (std::size_t(width) > specs.size()) width = int(specs.size());
  if (width <= 1) {
    for (std::size_t i = 0; i < specs.size(); ++i) run_one(i);
    return report;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(std::size_t(width));
  for (int w = 0; w < width; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < specs.size();
           i = next.fetch_add(1)) {
        run_one(i);
      }
    });
  }
  for (auto& th : pool) th.join();
  return report;
}

}  // namespace uforge
