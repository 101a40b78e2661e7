#include <doctest.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "uforge/errors.hpp"
#include "uforge/group_table.hpp"

using namespace uforge;

namespace {

std::map<unsigned long long, unsigned long long> spectrum(const GroupTable& g) {
  return order_spectrum(g);
}

using Spec = std::map<unsigned long long, unsigned long long>;

}  // namespace

TEST_CASE("cyclic groups") {
  GroupTable c6 = GroupTable::cyclic(6);
  CHECK(c6.size() == 6);
  CHECK(c6.name() == "C6");
  CHECK(c6.label(0) == "1");
  CHECK(c6.label(1) == "a");
  CHECK(c6.label(5) == "a^5");
  CHECK(c6.mul(4, 3) == 1);
  CHECK(c6.inverse(1) == 5);
  CHECK(c6.generators() == std::vector<std::uint32_t>{1});

  GroupTable c1 = GroupTable::cyclic(1);
  CHECK(c1.size() == 1);
  CHECK(c1.generators().empty());

  CHECK_THROWS_AS(GroupTable::cyclic(0), ArgumentError);
  CHECK_THROWS_AS(GroupTable::cyclic(65), ArgumentError);
}

TEST_CASE("two generator presentations satisfy their relations") {
  struct Case {
    GroupTable g;
    unsigned long N;      // order of a
    unsigned long r;      // b^-1 a b = a^r
    unsigned long t;      // b^2 = a^t
  };
  std::vector<Case> cases;
  cases.push_back({GroupTable::dihedral(3), 8, 7, 0});
  cases.push_back({GroupTable::quaternion(3), 8, 7, 4});
  cases.push_back({GroupTable::semidihedral(3), 8, 3, 0});
  cases.push_back({GroupTable::m16(), 8, 5, 0});
  cases.push_back({GroupTable::dihedral(4), 16, 15, 0});
  cases.push_back({GroupTable::quaternion(4), 16, 15, 8});
  cases.push_back({GroupTable::semidihedral(4), 16, 7, 0});

  for (const Case& c : cases) {
    INFO(c.g.name());
    CHECK(c.g.size() == 2 * c.N);
    std::uint32_t a = 1, b = std::uint32_t(c.N);
    CHECK(element_order(c.g, a) == c.N);
    CHECK(bb_pow(c.g, b, 2) == bb_pow(c.g, a, c.t));
    std::uint32_t conj = c.g.mul(c.g.mul(c.g.inverse(b), a), b);
    CHECK(conj == bb_pow(c.g, a, c.r));
    CHECK(c.g.generators() == std::vector<std::uint32_t>{a, b});
  }
}

TEST_CASE("order spectra of the nonabelian order 16 groups") {
  CHECK(spectrum(GroupTable::dihedral(3)) == Spec{{1, 1}, {2, 9}, {4, 2}, {8, 4}});
  CHECK(spectrum(GroupTable::quaternion(3)) == Spec{{1, 1}, {2, 1}, {4, 10}, {8, 4}});
  CHECK(spectrum(GroupTable::semidihedral(3)) == Spec{{1, 1}, {2, 5}, {4, 6}, {8, 4}});
  CHECK(spectrum(GroupTable::m16()) == Spec{{1, 1}, {2, 3}, {4, 4}, {8, 8}});
  CHECK(spectrum(GroupTable::g44()) == Spec{{1, 1}, {2, 7}, {4, 8}});
  CHECK(spectrum(GroupTable::c4sc4()) == Spec{{1, 1}, {2, 3}, {4, 12}});
  CHECK(spectrum(GroupTable::d8yc4()) == Spec{{1, 1}, {2, 7}, {4, 8}});
  CHECK(spectrum(GroupTable::q8xc2()) == Spec{{1, 1}, {2, 3}, {4, 12}});
  CHECK(spectrum(GroupTable::d8xc2()) == Spec{{1, 1}, {2, 11}, {4, 4}});
}

TEST_CASE("direct products and abelian tables") {
  GroupTable g = GroupTable::from_parts({2, 4});
  CHECK(g.name() == "C4xC2");
  CHECK(g.size() == 8);
  CHECK(is_abelian(g));
  CHECK(abelian_type(g) == AbelianType(2, {1, 1}));

  GroupTable prod = GroupTable::direct_product(GroupTable::cyclic(4),
                                               GroupTable::cyclic(2));
  CHECK(prod.size() == 8);
  CHECK(is_abelian(prod));
  CHECK(abelian_type(prod) == AbelianType(2, {1, 1}));
  CHECK(prod.name() == "C4xC2");

  CHECK(GroupTable::from_parts({}).size() == 1);
  CHECK(GroupTable::from_parts({1}).name() == "C1");
  CHECK_THROWS_AS(GroupTable::from_parts({8, 16}), ArgumentError);

  for (unsigned long order : {1UL, 2UL, 4UL, 8UL, 16UL, 32UL}) {
    for (const AbelianType& t : AbelianType::all_of_order(2, order)) {
      CHECK(abelian_type(GroupTable::from_abelian_type(t)) == t);
    }
  }
  for (unsigned long order : {1UL, 3UL, 9UL, 27UL}) {
    for (const AbelianType& t : AbelianType::all_of_order(3, order)) {
      CHECK(abelian_type(GroupTable::from_abelian_type(t)) == t);
    }
  }
  for (const AbelianType& t : AbelianType::all_of_order(5, 25)) {
    CHECK(abelian_type(GroupTable::from_abelian_type(t)) == t);
  }
  for (const AbelianType& t : AbelianType::all_of_order(7, 49)) {
    CHECK(abelian_type(GroupTable::from_abelian_type(t)) == t);
  }
}

TEST_CASE("central quotients") {
  GroupTable c4 = GroupTable::cyclic(4);
  GroupTable q = GroupTable::quotient_by_central(c4, {0, 2});
  CHECK(q.size() == 2);

  GroupTable d8 = GroupTable::dihedral(2);
  CHECK_THROWS_AS(GroupTable::quotient_by_central(d8, {0, 1, 2, 3}), ArgumentError);
  CHECK_THROWS_AS(GroupTable::quotient_by_central(d8, {0, 1}), ArgumentError);
  CHECK_THROWS_AS(GroupTable::quotient_by_central(d8, {2}), ArgumentError);

  GroupTable y = GroupTable::d8yc4();
  CHECK(y.size() == 16);
  CHECK(y.name() == "D8YC4");
  CHECK(!is_abelian(y));
  CHECK(center_elements(y).size() == 4);
  CHECK(subgroup_type(y, center_elements(y)) == AbelianType(2, {0, 1}));
  CHECK(derived_subgroup_elements(y).size() == 2);
  CHECK(group_exponent(y) == 4);
}

TEST_CASE("structure of the remaining order 16 groups") {
  GroupTable g44 = GroupTable::g44();
  CHECK(!is_abelian(g44));
  CHECK(center_elements(g44).size() == 4);
  CHECK(subgroup_type(g44, center_elements(g44)) == AbelianType(2, {2}));
  CHECK(derived_subgroup_elements(g44) == std::vector<std::uint32_t>{0, 4});
  CHECK(group_exponent(g44) == 4);
  // b (handle 4) is central and generates the derived subgroup, so the
  // abelianization has order 8.
  auto zg44 = center_elements(g44);
  CHECK(std::find(zg44.begin(), zg44.end(), 4u) != zg44.end());
  CHECK(quotient_type(g44, derived_subgroup_elements(g44)).order() == 8);

  GroupTable m16 = GroupTable::m16();
  CHECK(derived_subgroup_elements(m16) == std::vector<std::uint32_t>{0, 4});

  GroupTable s = GroupTable::c4sc4();
  CHECK(!is_abelian(s));
  CHECK(center_elements(s).size() == 4);
  CHECK(subgroup_type(s, center_elements(s)) == AbelianType(2, {2}));
  CHECK(derived_subgroup_elements(s).size() == 2);
  CHECK(group_exponent(s) == 4);

  CHECK(center_elements(GroupTable::dihedral(3)).size() == 2);
  CHECK(center_elements(GroupTable::quaternion(3)).size() == 2);
  CHECK(center_elements(GroupTable::semidihedral(3)).size() == 2);
  CHECK(center_elements(GroupTable::m16()).size() == 4);
  CHECK(center_elements(GroupTable::q8xc2()).size() == 4);
  CHECK(center_elements(GroupTable::d8xc2()).size() == 4);

  CHECK(derived_subgroup_elements(GroupTable::dihedral(3)).size() == 4);
  CHECK(derived_subgroup_elements(GroupTable::quaternion(3)).size() == 4);
  CHECK(derived_subgroup_elements(GroupTable::semidihedral(3)).size() == 4);
  CHECK(derived_subgroup_elements(GroupTable::m16()).size() == 2);
  CHECK(derived_subgroup_elements(GroupTable::q8xc2()).size() == 2);
  CHECK(derived_subgroup_elements(GroupTable::d8xc2()).size() == 2);
}

TEST_CASE("induced, power and torsion subgroups") {
  GroupTable d8 = GroupTable::dihedral(2);
  GroupTable rot = induced_subgroup(d8, {0, 1, 2, 3});
  CHECK(rot.size() == 4);
  CHECK(is_abelian(rot));
  CHECK_THROWS_AS(induced_subgroup(d8, {0, 1}), ArgumentError);
  CHECK_THROWS_AS(induced_subgroup(d8, {1, 2, 3}), ArgumentError);

  GroupTable c8 = GroupTable::cyclic(8);
  CHECK(power_subgroup(c8, 1).size() == 4);
  CHECK(abelian_type(power_subgroup(c8, 1)) == AbelianType(2, {0, 1}));

  GroupTable c2c4 = GroupTable::from_parts({2, 4});
  CHECK(torsion_subgroup(c2c4, 1).size() == 4);
  CHECK(power_subgroup(c2c4, 1).size() == 2);
  CHECK(torsion_subgroup(power_subgroup(c2c4, 1), 1).size() == 2);
  CHECK(power_subgroup(c2c4, 5).size() == 1);
  CHECK(torsion_subgroup(c2c4, 5).size() == 8);

  CHECK_THROWS_AS(power_subgroup(d8, 1), ArgumentError);
  CHECK_THROWS_AS(torsion_subgroup(d8, 1), ArgumentError);

  // Closed-form subgroup orders agree with table enumeration.
  for (unsigned long order : {2UL, 4UL, 8UL, 16UL, 32UL}) {
    for (const AbelianType& t : AbelianType::all_of_order(2, order)) {
      GroupTable g = GroupTable::from_abelian_type(t);
      for (std::size_t i = 0; i <= t.exponent_index() + 1; ++i) {
        CHECK(power_subgroup(g, i).size() == t.power_subgroup_order(i));
        CHECK(torsion_subgroup(g, i).size() == t.torsion_subgroup_order(i));
        CHECK(torsion_subgroup(power_subgroup(g, i), 1).size() ==
              t.power_subgroup_p_torsion(i));
      }
    }
  }
  for (const AbelianType& t : AbelianType::all_of_order(3, 27)) {
    GroupTable g = GroupTable::from_abelian_type(t);
    for (std::size_t i = 0; i <= 3; ++i) {
      CHECK(power_subgroup(g, i).size() == t.power_subgroup_order(i));
      CHECK(torsion_subgroup(g, i).size() == t.torsion_subgroup_order(i));
      CHECK(torsion_subgroup(power_subgroup(g, i), 1).size() ==
            t.power_subgroup_p_torsion(i));
    }
  }
}

TEST_CASE("top power subgroup is elementary abelian") {
  // For exponent 2^e >= 4 the subgroup of 2^(e-1)-th powers is killed by 2,
  // so its order equals that of its own 2-torsion.
  for (unsigned long order : {4UL, 8UL, 16UL, 32UL}) {
    for (const AbelianType& t : AbelianType::all_of_order(2, order)) {
      if (t.exponent() < 4) continue;
      std::size_t e = t.exponent_index();
      GroupTable g = GroupTable::from_abelian_type(t);
      GroupTable pw = power_subgroup(g, e - 1);
      CHECK(pw.size() == torsion_subgroup(pw, 1).size());
      CHECK(t.power_subgroup_order(e - 1) == t.power_subgroup_p_torsion(e - 1));
    }
  }
}

TEST_CASE("catalog contents and ordering") {
  auto c16 = catalog(16, "nonabelian");
  REQUIRE(c16.size() == 9);
  std::vector<std::string> names;
  for (const auto& g : c16) names.push_back(g.name());
  CHECK(names == std::vector<std::string>{"Q8xC2", "M16", "Q16", "C4sC4", "SD16",
                                          "D8YC4", "D16", "G44", "D8xC2"});
  for (const auto& g : c16) {
    CHECK(g.size() == 16);
    CHECK(!is_abelian(g));
  }

  auto a16 = catalog(16, "abelian");
  CHECK(a16.size() == 5);
  for (const auto& g : a16) CHECK(is_abelian(g));

  auto all8 = catalog(8, "all");
  REQUIRE(all8.size() == 5);
  names.clear();
  for (const auto& g : all8) names.push_back(g.name());
  CHECK(names == std::vector<std::string>{"C8", "C4xC2", "C2xC2xC2", "D8", "Q8"});

  CHECK(catalog(4, "nonabelian").empty());
  CHECK(catalog(2, "maximal-class").empty());
  CHECK(catalog(4, "maximal-class").empty());
  CHECK(catalog(8, "maximal-class").size() == 2);

  auto mc16 = catalog(16, "maximal-class");
  REQUIRE(mc16.size() == 3);
  CHECK(mc16[0].name() == "D16");
  CHECK(mc16[1].name() == "Q16");
  CHECK(mc16[2].name() == "SD16");

  auto mc32 = catalog(32, "maximal-class");
  REQUIRE(mc32.size() == 3);
  CHECK(mc32[0].name() == "D32");
  CHECK(mc32[2].name() == "SD32");
  CHECK(catalog(32, "abelian").size() == 7);

  CHECK_THROWS_AS(catalog(12, "all"), ArgumentError);
  CHECK_THROWS_AS(catalog(16, "solvable"), ArgumentError);
  CHECK_THROWS_AS(catalog(32, "nonabelian"), ArgumentError);
  CHECK_THROWS_AS(catalog(32, "all"), ArgumentError);
}

TEST_CASE("group names parse back to groups") {
  CHECK(group_from_name("C12").size() == 12);
  CHECK(group_from_name("C1").size() == 1);
  CHECK(group_from_name("C2xC8").name() == "C8xC2");
  CHECK(group_from_name("C2xC2xC2").size() == 8);
  CHECK(group_from_name("D16").family() == "dihedral 3");
  CHECK(group_from_name("Q32").size() == 32);
  CHECK(group_from_name("SD16").size() == 16);
  CHECK(group_from_name("M16").name() == "M16");
  CHECK(group_from_name("G44").size() == 16);
  CHECK(group_from_name("D8YC4").size() == 16);
  CHECK(group_from_name("Q8xC2").size() == 16);
  CHECK(group_from_name("D8xC2").size() == 16);
  CHECK(group_from_name("C4sC4").size() == 16);

  for (const char* bad : {"", "D12", "D4", "SD8", "Q4", "C0", "Cx", "C4x",
                          "X99", "c4", "C4xD8", "C04"}) {
    INFO(bad);
    CHECK_THROWS_AS(group_from_name(bad), ConfigError);
  }

  // Catalog names round trip through the parser.
  for (unsigned long order : {2UL, 4UL, 8UL, 16UL}) {
    for (const auto& g : catalog(order, "all")) {
      GroupTable h = group_from_name(g.name());
      CHECK(h.size() == g.size());
      CHECK(h.name() == g.name());
    }
  }
}
