#include <doctest.h>

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <vector>

#include "uforge/errors.hpp"
#include "uforge/group_table.hpp"

using namespace uforge;

namespace {

using Spec = std::map<unsigned long long, unsigned long long>;

// Independent reference: the affine maps x -> ux + v on Z/8 with u in {1,3}
// form a group of order 16 generated by s: x -> x+1 and t: x -> 3x, and
// s, t satisfy the semidihedral relations t^2 = id, t s t^-1 = s^3.
struct Perm8 {
  std::array<int, 8> map;
  bool operator<(const Perm8& o) const { return map < o.map; }
  bool operator==(const Perm8& o) const { return map == o.map; }
};

Perm8 compose(const Perm8& f, const Perm8& g) {
  Perm8 h{};
  for (int x = 0; x < 8; ++x) h.map[x] = f.map[g.map[x]];
  return h;
}

std::set<Perm8> perm_closure(std::vector<Perm8> gens) {
  Perm8 id{};
  for (int x = 0; x < 8; ++x) id.map[x] = x;
  std::set<Perm8> seen = {id};
  std::vector<Perm8> frontier = {id};
  while (!frontier.empty()) {
    Perm8 cur = frontier.back();
    frontier.pop_back();
    for (const Perm8& g : gens) {
      Perm8 next = compose(g, cur);
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  return seen;
}

int perm_order(const Perm8& f) {
  Perm8 id{};
  for (int x = 0; x < 8; ++x) id.map[x] = x;
  Perm8 acc = f;
  int ord = 1;
  while (!(acc == id)) {
    acc = compose(acc, f);
    ++ord;
  }
  return ord;
}

// All-pairs commutator closure, the slow reference for derived subgroups.
std::vector<std::uint32_t> derived_reference(const GroupTable& G) {
  std::set<std::uint32_t> elems = {0};
  bool grew = true;
  auto comm = [&](std::uint32_t a, std::uint32_t b) {
    return G.mul(G.mul(G.inverse(a), G.inverse(b)), G.mul(a, b));
  };
  for (std::uint32_t a = 0; a < G.size(); ++a) {
    for (std::uint32_t b = 0; b < G.size(); ++b) elems.insert(comm(a, b));
  }
  while (grew) {
    grew = false;
    std::vector<std::uint32_t> cur(elems.begin(), elems.end());
    for (std::uint32_t a : cur) {
      for (std::uint32_t b : cur) {
        if (elems.insert(G.mul(a, b)).second) grew = true;
      }
    }
  }
  return {elems.begin(), elems.end()};
}

std::vector<std::uint32_t> center_reference(const GroupTable& G) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t g = 0; g < G.size(); ++g) {
    bool central = true;
    for (std::uint32_t h = 0; h < G.size(); ++h) {
      if (G.mul(g, h) != G.mul(h, g)) central = false;
    }
    if (central) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("powers and element orders") {
  GroupTable c12 = GroupTable::cyclic(12);
  CHECK(bb_pow(c12, 1, 0) == 0);
  CHECK(bb_pow(c12, 1, 7) == 7);
  CHECK(bb_pow(c12, 5, 1000000007ULL) == (5 * 1000000007ULL) % 12);
  CHECK(element_order(c12, 1) == 12);
  CHECK(element_order(c12, 4) == 3);
  CHECK(element_order(c12, 0) == 1);

  CHECK(order_spectrum(GroupTable::cyclic(4)) == Spec{{1, 1}, {2, 1}, {4, 2}});
  CHECK(order_spectrum(GroupTable::dihedral(2)) == Spec{{1, 1}, {2, 5}, {4, 2}});
  CHECK(order_spectrum(GroupTable::quaternion(2)) == Spec{{1, 1}, {2, 1}, {4, 6}});
  CHECK(group_exponent(GroupTable::from_parts({2, 4})) == 4);
  CHECK(group_exponent(GroupTable::dihedral(4)) == 16);
}

TEST_CASE("semidihedral table agrees with the affine permutation model") {
  Perm8 s{}, t{};
  for (int x = 0; x < 8; ++x) {
    s.map[x] = (x + 1) % 8;
    t.map[x] = (3 * x) % 8;
  }
  // Defining relations in the model.
  CHECK(perm_order(s) == 8);
  CHECK(perm_order(t) == 2);
  Perm8 conj = compose(compose(t, s), t);
  CHECK(conj == compose(s, compose(s, s)));

  std::set<Perm8> model = perm_closure({s, t});
  REQUIRE(model.size() == 16);
  std::map<int, int> model_spectrum;
  for (const Perm8& f : model) ++model_spectrum[perm_order(f)];

  Spec table_spectrum = order_spectrum(GroupTable::semidihedral(3));
  REQUIRE(model_spectrum.size() == table_spectrum.size());
  for (auto [ord, count] : model_spectrum) {
    CHECK(table_spectrum[(unsigned long long)ord] == (unsigned long long)count);
  }
}

TEST_CASE("closures and generators") {
  GroupTable d16 = GroupTable::dihedral(3);
  CHECK(subgroup_closure(d16, {2}) == std::vector<std::uint32_t>{0, 2, 4, 6});
  CHECK(subgroup_closure(d16, {8}) == std::vector<std::uint32_t>{0, 8});
  CHECK(subgroup_closure(d16, {1, 8}).size() == 16);
  CHECK(subgroup_closure(d16, {}) == std::vector<std::uint32_t>{0});
  CHECK(subgroup_closure(d16, {0}) == std::vector<std::uint32_t>{0});

  for (unsigned long order : {8UL, 16UL}) {
    for (const auto& g : catalog(order, "all")) {
      auto gens = greedy_generators(g);
      CHECK(gens.size() <= 4);
      CHECK(subgroup_closure(g, gens).size() == g.size());
    }
  }
  GroupTable c27 = GroupTable::from_parts({27});
  CHECK(greedy_generators(c27).size() == 1);
  CHECK(greedy_generators(GroupTable::cyclic(1)).empty());
}

TEST_CASE("abelian and normality tests") {
  for (const auto& g : catalog(16, "abelian")) CHECK(is_abelian(g));
  for (const auto& g : catalog(16, "nonabelian")) CHECK(!is_abelian(g));

  GroupTable d8 = GroupTable::dihedral(2);
  CHECK(is_normal(d8, {0, 1, 2, 3}));
  CHECK(is_normal(d8, {0, 2}));
  CHECK(!is_normal(d8, {0, 4}));
  CHECK(is_normal(d8, subgroup_closure(d8, {4, 2})));
}

TEST_CASE("derived subgroup and center match slow references") {
  std::vector<GroupTable> groups;
  groups.push_back(GroupTable::dihedral(2));
  groups.push_back(GroupTable::quaternion(2));
  for (auto& g : catalog(16, "nonabelian")) groups.push_back(std::move(g));
  for (auto& g : catalog(32, "maximal-class")) groups.push_back(std::move(g));
  groups.push_back(GroupTable::cyclic(8));

  for (const GroupTable& g : groups) {
    INFO(g.name());
    auto derived = derived_subgroup_elements(g);
    CHECK(derived == derived_reference(g));
    CHECK(is_normal(g, derived));
    CHECK(is_abelian(QuotientView(g, derived)));
    CHECK(center_elements(g) == center_reference(g));
  }

  CHECK(derived_subgroup_elements(GroupTable::dihedral(2)) ==
        std::vector<std::uint32_t>{0, 2});
  CHECK(derived_subgroup_elements(GroupTable::dihedral(3)) ==
        std::vector<std::uint32_t>{0, 2, 4, 6});
  CHECK(derived_subgroup_elements(GroupTable::cyclic(8)) ==
        std::vector<std::uint32_t>{0});
}

TEST_CASE("hamiltonian recognition") {
  CHECK(is_hamiltonian(GroupTable::quaternion(2)));
  CHECK(is_hamiltonian(GroupTable::q8xc2()));
  CHECK(!is_hamiltonian(GroupTable::dihedral(2)));
  CHECK(!is_hamiltonian(GroupTable::cyclic(8)));
  for (const auto& g : catalog(16, "nonabelian")) {
    CHECK(is_hamiltonian(g) == (g.name() == "Q8xC2"));
  }
}

TEST_CASE("abelian type recovery from black-box groups") {
  CHECK(abelian_type(GroupTable::from_parts({2, 4})) == AbelianType(2, {1, 1}));
  CHECK(abelian_type(GroupTable::from_parts({2, 2, 2})) == AbelianType(2, {3}));
  CHECK(abelian_type(GroupTable::cyclic(1)) == AbelianType::trivial(2));
  CHECK(abelian_type(GroupTable::from_parts({3, 9})) == AbelianType(3, {1, 1}));
  CHECK_THROWS_AS(abelian_type(GroupTable::dihedral(2)), ArgumentError);
  CHECK_THROWS_AS(abelian_type(GroupTable::cyclic(12)), ArgumentError);
}

TEST_CASE("subgroup views") {
  GroupTable d16 = GroupTable::dihedral(3);
  SubgroupView rot(d16, {0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(rot.size() == 8);
  CHECK(subgroup_type(d16, {0, 1, 2, 3, 4, 5, 6, 7}) == AbelianType(2, {0, 0, 1}));
  CHECK(subgroup_type(d16, center_elements(d16)) == AbelianType(2, {1}));
  CHECK(rot.parent_elements() == std::vector<std::uint32_t>{0, 1, 2, 3, 4, 5, 6, 7});

  CHECK_THROWS_AS(SubgroupView(d16, {1, 2, 3}), ArgumentError);
  CHECK_THROWS_AS(SubgroupView(d16, {0, 1}), ArgumentError);
}

TEST_CASE("quotient views") {
  GroupTable d16 = GroupTable::dihedral(3);
  QuotientView q(d16, {0, 2, 4, 6});
  CHECK(q.size() == 4);
  CHECK(q.identity() == q.coset_of(0));
  CHECK(quotient_type(d16, {0, 2, 4, 6}) == AbelianType(2, {2}));
  CHECK(quotient_type(GroupTable::dihedral(2), {0, 2}) == AbelianType(2, {2}));
  CHECK(quotient_type(GroupTable::quaternion(2), {0, 2}) == AbelianType(2, {2}));
  // Cosets use the least parent handle as representative.
  for (std::uint32_t c = 0; c < q.size(); ++c) {
    std::uint32_t rep = q.representative(c);
    for (std::uint32_t g = 0; g < d16.size(); ++g) {
      if (q.coset_of(g) == c) CHECK(rep <= g);
    }
  }

  GroupTable d8 = GroupTable::dihedral(2);
  CHECK_THROWS_AS(QuotientView(d8, {0, 4}), ArgumentError);
  CHECK_THROWS_AS(QuotientView(d8, {0, 1, 2}), ArgumentError);
  CHECK_THROWS_AS(QuotientView(GroupTable::cyclic(4), {0, 1}), ArgumentError);
  CHECK_THROWS_AS(QuotientView(d8, {}), ArgumentError);
}
