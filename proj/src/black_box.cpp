#include "uforge/black_box.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

#include "uforge/errors.hpp"

namespace uforge {
namespace {

// Incrementally closed subgroup of a fixed parent group. add() extends the
// current subgroup by one generator, appending whole cosets of the previous
// subgroup (Dimino's method), so total work stays proportional to the final
// size times the generator count.
class Closure {
 public:
  explicit Closure(const BlackBoxGroup& G) : g_(&G) {
    elems_.push_back(G.identity());
    set_.insert(G.identity());
  }

  bool contains(std::uint32_t x) const { return set_.count(x) != 0; }
  const std::vector<std::uint32_t>& elements() const { return elems_; }
  std::uint64_t size() const { return elems_.size(); }

  void add(std::uint32_t gen) {
    if (contains(gen)) return;
    used_.push_back(gen);
    std::vector<std::uint32_t> base = elems_;
    std::vector<std::uint32_t> reps = {gen};
    while (!reps.empty()) {
      std::uint32_t r = reps.back();
      reps.pop_back();
      if (contains(r)) continue;
      for (std::uint32_t h : base) {
        std::uint32_t x = g_->mul(h, r);
        if (set_.insert(x).second) elems_.push_back(x);
      }
      for (std::uint32_t s : used_) reps.push_back(g_->mul(r, s));
    }
  }

  std::vector<std::uint32_t> sorted_elements() const {
    std::vector<std::uint32_t> out = elems_;
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  const BlackBoxGroup* g_;
  std::vector<std::uint32_t> elems_;
  std::unordered_set<std::uint32_t> set_;
  std::vector<std::uint32_t> used_;
};

std::uint32_t conjugate(const BlackBoxGroup& G, std::uint32_t x, std::uint32_t g) {
  return G.mul(G.mul(G.inverse(g), x), g);
}

std::uint32_t commutator(const BlackBoxGroup& G, std::uint32_t a, std::uint32_t b) {
  return G.mul(G.mul(G.inverse(a), G.inverse(b)), G.mul(a, b));
}

}  // namespace

std::uint32_t bb_pow(const BlackBoxGroup& G, std::uint32_t g, unsigned long long e) {
  std::uint32_t acc = G.identity();
  std::uint32_t base = g;
  while (e > 0) {
    if (e & 1ULL) acc = G.mul(acc, base);
    base = G.mul(base, base);
    e >>= 1ULL;
  }
  return acc;
}

unsigned long long element_order(const BlackBoxGroup& G, std::uint32_t g) {
  std::uint32_t e = G.identity();
  std::uint32_t acc = g;
  unsigned long long ord = 1;
  while (acc != e) {
    acc = G.mul(acc, g);
    ++ord;
    if (ord > G.size()) {
      throw InternalCheckError("element order exceeds group size");
    }
  }
  return ord;
}

std::map<unsigned long long, unsigned long long> order_spectrum(const BlackBoxGroup& G) {
  std::map<unsigned long long, unsigned long long> spectrum;
  for (std::uint64_t i = 0; i < G.size(); ++i) {
    ++spectrum[element_order(G, std::uint32_t(i))];
  }
  return spectrum;
}

unsigned long long group_exponent(const BlackBoxGroup& G) {
  unsigned long long exp = 1;
  for (std::uint64_t i = 0; i < G.size(); ++i) {
    unsigned long long ord = element_order(G, std::uint32_t(i));
    exp = std::lcm(exp, ord);
  }
  return exp;
}

std::vector<std::uint32_t> subgroup_closure(const BlackBoxGroup& G,
                                            const std::vector<std::uint32_t>& gens) {
  Closure c(G);
  for (std::uint32_t g : gens) c.add(g);
  return c.sorted_elements();
}

std::vector<std::uint32_t> greedy_generators(const BlackBoxGroup& G) {
  std::mt19937_64 rng(0x756e697461727921ULL);
  Closure c(G);
  std::vector<std::uint32_t> gens;
  while (c.size() < G.size()) {
    std::uint32_t cand = std::uint32_t(rng() % G.size());
    while (c.contains(cand)) cand = std::uint32_t((cand + 1) % G.size());
    gens.push_back(cand);
    c.add(cand);
  }
  return gens;
}

bool is_abelian(const BlackBoxGroup& G) {
  std::vector<std::uint32_t> gens = greedy_generators(G);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (G.mul(gens[i], gens[j]) != G.mul(gens[j], gens[i])) return false;
    }
  }
  return true;
}

bool is_normal(const BlackBoxGroup& G, const std::vector<std::uint32_t>& subgroup) {
  std::unordered_set<std::uint32_t> set(subgroup.begin(), subgroup.end());
  std::vector<std::uint32_t> gens = greedy_generators(G);
  for (std::uint32_t s : subgroup) {
    for (std::uint32_t g : gens) {
      if (set.count(conjugate(G, s, g)) == 0) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> derived_subgroup_elements(const BlackBoxGroup& G) {
  std::vector<std::uint32_t> gens = greedy_generators(G);
  Closure c(G);
  if (gens.size() > 20) {
    for (std::uint64_t i = 0; i < G.size(); ++i) {
      for (std::uint64_t j = i + 1; j < G.size(); ++j) {
        c.add(commutator(G, std::uint32_t(i), std::uint32_t(j)));
      }
    }
  } else {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        c.add(commutator(G, gens[i], gens[j]));
      }
    }
  }
  // Normal closure under conjugation by the generating set; the element list
  // grows while scanning, so the loop reaches a fixpoint.
  for (std::size_t i = 0; i < c.elements().size(); ++i) {
    std::uint32_t x = c.elements()[i];
    for (std::uint32_t g : gens) {
      std::uint32_t y = conjugate(G, x, g);
      if (!c.contains(y)) c.add(y);
    }
  }
  return c.sorted_elements();
}

std::vector<std::uint32_t> center_elements(const BlackBoxGroup& G) {
  std::vector<std::uint32_t> gens = greedy_generators(G);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 0; i < G.size(); ++i) {
    bool central = true;
    for (std::uint32_t g : gens) {
      if (G.mul(std::uint32_t(i), g) != G.mul(g, std::uint32_t(i))) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(std::uint32_t(i));
  }
  return out;
}

bool is_hamiltonian(const BlackBoxGroup& G) {
  if (is_abelian(G)) return false;
  std::vector<std::uint32_t> gens = greedy_generators(G);
  for (std::uint64_t i = 0; i < G.size(); ++i) {
    std::uint32_t x = std::uint32_t(i);
    std::unordered_set<std::uint32_t> cyc;
    std::uint32_t acc = x;
    while (cyc.insert(acc).second) acc = G.mul(acc, x);
    for (std::uint32_t g : gens) {
      if (cyc.count(conjugate(G, x, g)) == 0) return false;
    }
  }
  return true;
}

AbelianType abelian_type(const BlackBoxGroup& G) {
  if (!is_abelian(G)) {
    throw ArgumentError("abelian_type requires an abelian group");
  }
  int p = group_prime(G.size());
  unsigned long long total_log = log_of_power(G.size(), (unsigned long long)p);

  // n_k = log_p #{x : x^(p^k) = 1}, nondecreasing, n_0 = 0. The bucket for
  // k holds the elements of order exactly p^k, so the running total over
  // buckets 0..k is the torsion count N_k.
  std::vector<unsigned long long> n;
  std::vector<unsigned long long> count_by_k;
  for (std::uint64_t i = 0; i < G.size(); ++i) {
    unsigned long long ord = element_order(G, std::uint32_t(i));
    unsigned long long k = log_of_power(ord, (unsigned long long)p);
    if (count_by_k.size() <= k) count_by_k.resize(k + 1, 0);
    ++count_by_k[k];
  }
  unsigned long long cum = 0;
  for (unsigned long long c : count_by_k) {
    cum += c;
    n.push_back(log_of_power(cum, (unsigned long long)p));
  }
  std::size_t e = n.size() - 1;
  std::vector<long long> f(e, 0);
  for (std::size_t i = 1; i <= e; ++i) {
    unsigned long long d_i = n[i] - n[i - 1];
    unsigned long long d_next = i + 1 <= e ? n[i + 1] - n[i] : 0;
    f[i - 1] = (long long)d_i - (long long)d_next;
    if (f[i - 1] < 0) throw InternalCheckError("torsion counts are not concave");
  }
  AbelianType type(p, f);
  if (log_of_power(type.order(), (unsigned long long)p) != total_log) {
    throw InternalCheckError("abelian type order disagrees with group size");
  }
  return type;
}

SubgroupView::SubgroupView(const BlackBoxGroup& parent, std::vector<std::uint32_t> elements)
    : parent_(&parent), elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end());
  index_.reserve(elems_.size() * 2);
  for (std::uint32_t i = 0; i < elems_.size(); ++i) index_[elems_[i]] = i;
  auto it = index_.find(parent.identity());
  if (it == index_.end()) {
    throw ArgumentError("subgroup element list lacks the identity");
  }
  id_ = it->second;
  if (elems_.size() <= 2048) {
    for (std::uint32_t a : elems_) {
      for (std::uint32_t b : elems_) {
        if (index_.find(parent_->mul(a, b)) == index_.end()) {
          throw ArgumentError("subgroup element list is not closed");
        }
      }
    }
  }
}

std::uint32_t SubgroupView::local(std::uint32_t parent_handle) const {
  auto it = index_.find(parent_handle);
  if (it == index_.end()) {
    throw ArgumentError("product escapes the subgroup element list");
  }
  return it->second;
}

std::uint32_t SubgroupView::mul(std::uint32_t a, std::uint32_t b) const {
  return local(parent_->mul(elems_[a], elems_[b]));
}

std::uint32_t SubgroupView::inverse(std::uint32_t a) const {
  return local(parent_->inverse(elems_[a]));
}

QuotientView::QuotientView(const BlackBoxGroup& parent,
                           const std::vector<std::uint32_t>& normal)
    : parent_(&parent) {
  if (parent.size() % std::uint64_t(normal.size() ? normal.size() : 1) != 0 ||
      normal.empty()) {
    throw ArgumentError("normal subgroup size must divide the group size");
  }
  std::unordered_set<std::uint32_t> nset(normal.begin(), normal.end());
  if (nset.size() != normal.size() || nset.count(parent.identity()) == 0) {
    throw ArgumentError("normal subgroup must list distinct elements and the identity");
  }
  for (std::uint32_t a : normal) {
    for (std::uint32_t b : normal) {
      if (nset.count(parent.mul(a, b)) == 0) {
        throw ArgumentError("normal subgroup element list is not closed");
      }
    }
  }
  if (!is_normal(parent, normal)) {
    throw ArgumentError("quotient requires a normal subgroup");
  }
  coset_of_.assign(parent.size(), UINT32_MAX);
  for (std::uint64_t i = 0; i < parent.size(); ++i) {
    if (coset_of_[i] != UINT32_MAX) continue;
    std::uint32_t id = std::uint32_t(reps_.size());
    reps_.push_back(std::uint32_t(i));
    for (std::uint32_t n : normal) {
      coset_of_[parent.mul(std::uint32_t(i), n)] = id;
    }
  }
  id_ = coset_of_[parent.identity()];
}

std::uint32_t QuotientView::coset_of(std::uint32_t parent_handle) const {
  return coset_of_[parent_handle];
}

std::uint32_t QuotientView::mul(std::uint32_t a, std::uint32_t b) const {
  return coset_of_[parent_->mul(reps_[a], reps_[b])];
}

std::uint32_t QuotientView::inverse(std::uint32_t a) const {
  return coset_of_[parent_->inverse(reps_[a])];
}

AbelianType subgroup_type(const BlackBoxGroup& G,
                          const std::vector<std::uint32_t>& elements) {
  SubgroupView view(G, elements);
  return abelian_type(view);
}

AbelianType quotient_type(const BlackBoxGroup& G,
                          const std::vector<std::uint32_t>& normal) {
  QuotientView view(G, normal);
  return abelian_type(view);
}

}  // namespace uforge
