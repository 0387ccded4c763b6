#include <doctest.h>

#include <algorithm>
#include <set>

#include "pgspec/group.hpp"

using namespace pgspec;

namespace {

const GroupParams P23 = GroupParams::make(2, 3);

GroupElement table_product(const CayleyTable& t, const GroupElement& a, const GroupElement& b) {
  const auto& els = t.elements();
  const auto ia = std::find(els.begin(), els.end(), a) - els.begin();
  const auto ib = std::find(els.begin(), els.end(), b) - els.begin();
  return els[t.product(static_cast<std::size_t>(ia), static_cast<std::size_t>(ib))];
}

}  // namespace

TEST_CASE("parameters") {
  CHECK(P23.rotation_order() == 12);
  CHECK(P23.order() == 24);
  CHECK(P23.multiplier() == 5);
  CHECK(GroupParams::make(2, 5).order() == 40);
  CHECK_THROWS_AS(GroupParams::make(2, 2), ParameterError);
  CHECK_THROWS_AS(GroupParams::make(2, 4), ParameterError);
  CHECK_THROWS_AS(GroupParams::make(2, 9), ParameterError);
  CHECK_THROWS_AS(GroupParams::make(1, 3), ParameterError);
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE("multiplier squares to one") {
  for (int k = 2; k <= 6; ++k)
    for (int p : {3, 5, 7, 11, 13}) {
      const auto g = GroupParams::make(k, p);
      const std::int64_t m = g.multiplier();
      CHECK(m * m % g.rotation_order() == 1);
    }
}

TEST_CASE("multiply") {
  const auto s = reflection(0, P23);
  const auto r = rotation(1, P23);
  CHECK(multiply(s, r, P23) == GroupElement{1, 1});
  CHECK(multiply(r, s, P23) == GroupElement{1, 5});
  CHECK(multiply(GroupElement{1, 2}, GroupElement{1, 2}, P23) == identity_element);
  for (const auto& a : canonical_elements(P23)) {
    CHECK(multiply(a, identity_element, P23) == a);
    CHECK(multiply(identity_element, a, P23) == a);
    CHECK(multiply(a, inverse(a, P23), P23) == identity_element);
  }
}

TEST_CASE("mismatched parameters") {
  CHECK_THROWS_AS(multiply(GroupElement{0, 15}, rotation(1, P23), P23), ParameterMismatch);
  CHECK_THROWS_AS(multiply(GroupElement{2, 0}, rotation(1, P23), P23), ParameterMismatch);
  CHECK_THROWS_AS(order(GroupElement{0, -1}, P23), ParameterMismatch);
}

TEST_CASE("conjugation relation") {
  for (auto [k, p] : {std::pair{2, 3}, {2, 5}, {3, 3}, {3, 7}, {4, 5}}) {
    const auto g = GroupParams::make(k, p);
    const auto s = reflection(0, g);
    const auto sr = multiply(s, rotation(1, g), g);
    CHECK(multiply(sr, inverse(s, g), g) == rotation(g.multiplier(), g));
  }
}

TEST_CASE("power") {
  const auto r = rotation(1, P23);
  CHECK(power(r, 12, P23) == identity_element);
  CHECK(power(GroupElement{1, 1}, 2, P23) == GroupElement{0, 6});
  for (const auto& a : canonical_elements(P23)) CHECK(power(a, 0, P23) == identity_element);
  CHECK(power(r, 5, P23) == rotation(5, P23));
}

TEST_CASE("order") {
  CHECK(order(identity_element, P23) == 1);
  CHECK(order(GroupElement{1, 2}, P23) == 2);
  CHECK(order(GroupElement{1, 1}, P23) == 4);
  CHECK(order(rotation(1, P23), P23) == 12);
  for (auto [k, p] : {std::pair{2, 3}, {2, 5}, {3, 3}}) {
    const auto g = GroupParams::make(k, p);
    for (const auto& a : canonical_elements(g)) CHECK(g.order() % order(a, g) == 0);
  }
}

TEST_CASE("cyclic subgroups") {
  CHECK(cyclic_subgroup(identity_element, P23) == std::vector<GroupElement>{identity_element});
  const auto h2 = cyclic_subgroup(GroupElement{1, 2}, P23);
  CHECK(std::set<GroupElement>(h2.begin(), h2.end()) == std::set<GroupElement>{identity_element, {1, 2}});
  CHECK(cyclic_subgroup(rotation(1, P23), P23).size() == 12);
  const auto h3 = cyclic_subgroup(GroupElement{1, 1}, P23);
  CHECK(std::set<GroupElement>(h3.begin(), h3.end()) ==
        std::set<GroupElement>{identity_element, {1, 1}, {0, 6}, {1, 7}});
  for (const auto& a : canonical_elements(P23)) CHECK(cyclic_subgroup(a, P23).size() == static_cast<std::size_t>(order(a, P23)));
}

TEST_CASE("element strings") {
  CHECK(to_string(identity_element) == "e");
  CHECK(to_string(rotation(3, P23)) == "r^3");
  CHECK(to_string(GroupElement{1, 0}) == "s");
  CHECK(to_string(GroupElement{1, 5}) == "s r^5");
  for (const auto& a : canonical_elements(P23)) CHECK(parse_element(to_string(a), P23) == a);
  CHECK(parse_element("s^1 r^3", P23) == GroupElement{1, 3});
  CHECK_FALSE(parse_element("q", P23).has_value());
  CHECK_FALSE(parse_element("r^12", P23).has_value());
}

TEST_CASE("canonical order") {
  const auto els = canonical_elements(P23);
  REQUIRE(els.size() == 24);
  CHECK(els[0] == identity_element);
  CHECK(els[6] == rotation(6, P23));
  CHECK(els[12] == GroupElement{1, 0});
  CHECK(els[13] == GroupElement{1, 2});
  CHECK(els[18] == GroupElement{1, 1});
  for (std::size_t i = 0; i < els.size(); ++i) CHECK(canonical_index(els[i], P23) == i);
}

TEST_CASE("word reduction") {
  CHECK(reduce_word("", P23) == identity_element);
  CHECK(reduce_word("rs", P23) == GroupElement{1, 5});
  CHECK(reduce_word("ss", P23) == identity_element);
  CHECK(reduce_word(std::string(12, 'r'), P23) == identity_element);
  CHECK(reduce_word("srsr", P23) == GroupElement{0, 6});
}

TEST_CASE("Cayley table oracle") {
  const auto t = CayleyTable::build(P23);
  CHECK(t.size() == 24);
  const auto audit = t.audit();
  CHECK(audit.latin_square);
  CHECK(audit.identity);
  CHECK(audit.inverses);
  CHECK(audit.associative);
  CHECK(audit.exhaustive_associativity);
  CHECK(audit.triples_checked == 24u * 24u * 24u);
  CHECK(audit.agrees_with_multiply);
  CHECK(audit.pairs_checked == 576);
  CHECK(table_product(t, GroupElement{1, 2}, GroupElement{1, 2}) == identity_element);
  CHECK(table_product(t, GroupElement{1, 1}, GroupElement{1, 1}) == GroupElement{0, 6});
}

TEST_CASE("Cayley table for larger orders") {
  const auto t40 = CayleyTable::build(GroupParams::make(2, 5));
  CHECK(t40.size() == 40);
  CHECK(t40.audit().ok());
  const auto t56 = CayleyTable::build(GroupParams::make(2, 7));
  const auto audit = t56.audit(7);
  CHECK(audit.ok());
  CHECK_FALSE(audit.exhaustive_associativity);
  CHECK(audit.triples_checked == 10000);
  CHECK_THROWS_AS(CayleyTable::build(GroupParams::make(4, 5)), ParameterError);
  CHECK(CayleyTable::build(GroupParams::make(4, 5), 200).size() == 160);
}
