#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "uforge/abelian_type.hpp"
#include "uforge/errors.hpp"

using namespace uforge;

namespace {

// Independent model of a finite abelian p-group: tuples under componentwise
// addition, one coordinate per cyclic part. Used to check the closed-form
// subgroup counting methods without going through any group machinery.
struct TupleModel {
  std::vector<unsigned long long> parts;

  unsigned long long order() const {
    unsigned long long n = 1;
    for (auto p : parts) n *= p;
    return n;
  }

  std::vector<unsigned long long> decode(unsigned long long h) const {
    std::vector<unsigned long long> x(parts.size());
    for (std::size_t d = 0; d < parts.size(); ++d) {
      x[d] = h % parts[d];
      h /= parts[d];
    }
    return x;
  }

  unsigned long long count_images(unsigned long long e) const {
    // |{x^e : x in G}|
    std::set<std::vector<unsigned long long>> seen;
    for (unsigned long long h = 0; h < order(); ++h) {
      auto x = decode(h);
      for (std::size_t d = 0; d < parts.size(); ++d) x[d] = (x[d] * e) % parts[d];
      seen.insert(x);
    }
    return seen.size();
  }

  unsigned long long count_killed(unsigned long long e) const {
    // |{x : x^e = 1}|
    unsigned long long c = 0;
    for (unsigned long long h = 0; h < order(); ++h) {
      auto x = decode(h);
      bool killed = true;
      for (std::size_t d = 0; d < parts.size(); ++d) {
        if ((x[d] * e) % parts[d] != 0) killed = false;
      }
      if (killed) ++c;
    }
    return c;
  }
};

}  // namespace

TEST_CASE("pow_checked computes powers and rejects overflow") {
  CHECK(pow_checked(2, 0) == 1);
  CHECK(pow_checked(2, 10) == 1024);
  CHECK(pow_checked(3, 27) == 7625597484987ULL);
  CHECK(pow_checked(2, 62) == (1ULL << 62));
  CHECK_THROWS_AS(pow_checked(2, 64), CapacityError);
  CHECK_THROWS_AS(pow_checked(3, 40), CapacityError);
  CHECK_THROWS_AS(pow_checked(10, 19), CapacityError);
}

TEST_CASE("prime power recognition") {
  CHECK(is_power_of(8, 2));
  CHECK(is_power_of(1, 2));
  CHECK(!is_power_of(12, 2));
  CHECK(!is_power_of(6, 3));
  CHECK(log_of_power(32, 2) == 5);
  CHECK(log_of_power(81, 3) == 4);
  CHECK(log_of_power(1, 7) == 0);

  CHECK(group_prime(8) == 2);
  CHECK(group_prime(27) == 3);
  CHECK(group_prime(125) == 5);
  CHECK(group_prime(49) == 7);
  CHECK(group_prime(1) == 2);
  CHECK_THROWS_AS(group_prime(12), ArgumentError);
  CHECK_THROWS_AS(group_prime(0), ArgumentError);
  CHECK_THROWS_AS(group_prime(11 * 11), ArgumentError);
}

TEST_CASE("abelian type basic invariants") {
  AbelianType t(2, {2, 1});  // C4 x C2 x C2
  CHECK(t.p() == 2);
  CHECK(t.f(1) == 2);
  CHECK(t.f(2) == 1);
  CHECK(t.f(3) == 0);
  CHECK(t.order() == 16);
  CHECK(t.exponent() == 4);
  CHECK(t.exponent_index() == 2);
  CHECK(t.rank() == 3);
  CHECK(!t.is_trivial());
  CHECK(!t.is_elementary());
  CHECK(t.parts() == std::vector<unsigned long long>{4, 2, 2});
  CHECK(t.to_string() == "C4xC2^2");

  AbelianType e(3, {3});
  CHECK(e.is_elementary());
  CHECK(e.to_string() == "C3^3");
  CHECK(e.exponent() == 3);

  AbelianType one = AbelianType::trivial(5);
  CHECK(one.is_trivial());
  CHECK(one.order() == 1);
  CHECK(one.exponent() == 1);
  CHECK(one.rank() == 0);
  CHECK(one.to_string() == "1");

  CHECK(AbelianType(2, {0, 1, 0}) == AbelianType(2, {0, 1}));
  CHECK(AbelianType(2, {1}) != AbelianType(3, {1}));
  CHECK_THROWS_AS(AbelianType(4, {1}), ArgumentError);
  CHECK_THROWS_AS(AbelianType(2, {-1}), ArgumentError);
  CHECK_THROWS_AS(t.f(0), ArgumentError);
}

TEST_CASE("all_of_order enumerates partitions exactly once") {
  auto t16 = AbelianType::all_of_order(2, 16);
  CHECK(t16.size() == 5);
  std::set<std::string> names;
  for (const auto& t : t16) {
    CHECK(t.order() == 16);
    names.insert(t.to_string());
  }
  CHECK(names.size() == 5);
  CHECK(names.count("C16") == 1);
  CHECK(names.count("C8xC2") == 1);
  CHECK(names.count("C4^2") == 1);
  CHECK(names.count("C4xC2^2") == 1);
  CHECK(names.count("C2^4") == 1);

  CHECK(AbelianType::all_of_order(3, 27).size() == 3);
  CHECK(AbelianType::all_of_order(2, 1).size() == 1);
  CHECK(AbelianType::all_of_order(2, 1)[0].is_trivial());
  CHECK(AbelianType::all_of_order(2, 64).size() == 11);
  CHECK_THROWS_AS(AbelianType::all_of_order(2, 12), ArgumentError);
}

TEST_CASE("subgroup order formulas match the tuple model") {
  std::vector<std::pair<int, unsigned long long>> domains = {
      {2, 64}, {3, 81}, {5, 125}, {7, 49}};
  for (auto [p, max_order] : domains) {
    for (unsigned long long n = 1; n <= max_order; n *= p) {
      for (const AbelianType& t : AbelianType::all_of_order(p, n)) {
        TupleModel model{t.parts()};
        REQUIRE(model.order() == t.order());
        for (std::size_t i = 0; i <= t.exponent_index() + 1; ++i) {
          unsigned long long e = pow_checked(p, i);
          CHECK(t.power_subgroup_order(i) == model.count_images(e));
          CHECK(t.torsion_subgroup_order(i) == model.count_killed(e));
          // G^{p^i}[p] = elements of G^{p^i} killed by p: count via the
          // model of the image group, whose parts are parts[d] / gcd.
          TupleModel image;
          for (auto part : model.parts) {
            unsigned long long g = std::min<unsigned long long>(part, e);
            while (part % g != 0) --g;  // gcd(part, e) for prime powers
            if (part / g > 1) image.parts.push_back(part / g);
          }
          if (image.parts.empty()) image.parts.push_back(1);
          CHECK(t.power_subgroup_p_torsion(i) == image.count_killed(p));
        }
      }
    }
  }
}

TEST_CASE("ordering is a strict weak order on a mixed set") {
  auto ts = AbelianType::all_of_order(2, 32);
  std::sort(ts.begin(), ts.end());
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    CHECK(ts[i] < ts[i + 1]);
    CHECK(!(ts[i + 1] < ts[i]));
    CHECK(ts[i] != ts[i + 1]);
  }
}
