#include <doctest.h>

#include "oracle.hpp"
#include "qpart/counters.hpp"
#include "qpart/partition.hpp"

using namespace qpart;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

bool member(ClassId id, std::optional<int> k, const Member& m) { return is_member(ClassSpec::make(id, k), m); }

}  // namespace

TEST_CASE("construction and accessors") {
  const auto p = P({4, 2, 2, 1});
  CHECK(p.weight() == 9);
  CHECK(p.size() == 4);
  CHECK(p.largest() == 4);
  CHECK(p.smallest() == 1);
  CHECK(p.multiplicity(2) == 2);
  CHECK_FALSE(p.all_distinct());
  CHECK(p.with_part(3) == P({4, 3, 2, 2, 1}));
  CHECK(p.without_part(2) == P({4, 2, 1}));
  CHECK_THROWS_AS(p.without_part(7), std::invalid_argument);
  CHECK(P({7, 0, 0}).has_zero());
  CHECK(P({7, 0, 0}).without_zeros() == P({7}));
  CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(P({2, -1}), std::invalid_argument);
  CHECK(Partition::from_unsorted({1, 3, 2}) == P({3, 2, 1}));
}

TEST_CASE("parse and print") {
  CHECK(parse_partition("4+2+2+1") == P({4, 2, 2, 1}));
  CHECK(parse_partition("1,2,4,2") == P({4, 2, 2, 1}));
  CHECK(parse_partition("2 4 1 2") == P({4, 2, 2, 1}));
  CHECK(to_string(P({4, 2, 2, 1})) == "4+2+2+1");
  CHECK(to_string(Partition()) == "()");
  CHECK(to_string(AnchoredPartition(2, P({4, 2, 2, 1}))) == "[2] 4+2+2+1");
  CHECK_THROWS(parse_partition("4+x"));
}

TEST_CASE("class names round-trip") {
  for (const auto id : all_class_ids()) CHECK(parse_class_id(class_name(id)) == id);
  CHECK_FALSE(parse_class_id("Nope").has_value());
  CHECK_THROWS_AS(ClassSpec::make(ClassId::Dk), std::invalid_argument);
  CHECK_THROWS_AS(ClassSpec::make(ClassId::A, 2), std::invalid_argument);
  CHECK_THROWS_AS(ClassSpec::make(ClassId::Dk, 0), std::invalid_argument);
  CHECK(ClassSpec::make(ClassId::Bk_e, 2).label() == "Bk_e[k=2]");
}

TEST_CASE("membership examples") {
  CHECK(member(ClassId::Dk, 2, P({7, 0, 0})));
  CHECK(member(ClassId::Dk_o, 2, P({7, 0, 0})));
  CHECK(member(ClassId::Dk_e, 2, P({3, 2, 1, 1})));
  CHECK_FALSE(member(ClassId::Dk_o, 2, P({3, 2, 1, 1})));
  CHECK_FALSE(member(ClassId::Dk, 2, P({3, 1, 1, 1})));
  CHECK_FALSE(member(ClassId::Dk, 2, P({3, 3, 1, 1})));
  CHECK(member(ClassId::SptKd, 2, P({3, 1, 1})));
  CHECK_FALSE(member(ClassId::SptKd, 2, P({3, 0, 0})));

  CHECK_FALSE(member(ClassId::B, std::nullopt, P({4, 3})));
  CHECK(member(ClassId::B, std::nullopt, P({3, 3, 1})));
  CHECK(member(ClassId::A, std::nullopt, P({4, 3})));
  CHECK_FALSE(member(ClassId::A, std::nullopt, P({3, 3})));

  CHECK(member(ClassId::Bk_o, 3, P({4, 1, 1, 1})));
  CHECK(member(ClassId::Bk_e, 3, P({6, 4, 1})));
  CHECK_FALSE(member(ClassId::Bk_e, 3, P({8, 1})));

  CHECK(member(ClassId::Ck_o, 2, AnchoredPartition(2, P({4, 2, 2, 1}))));
  CHECK_FALSE(member(ClassId::Ck_o, 2, AnchoredPartition(4, P({4, 2, 2, 1}))));
  CHECK(member(ClassId::Ck_o, 3, AnchoredPartition(2, P({4, 2, 2}))));
  CHECK_THROWS_AS(member(ClassId::Ck_o, 2, P({4, 2, 2, 1})), std::invalid_argument);
  CHECK_THROWS_AS(member(ClassId::B, std::nullopt, AnchoredPartition(2, P({2}))), std::invalid_argument);

  CHECK(member(ClassId::C, std::nullopt, P({4, 3, 3, 1})));
  CHECK_FALSE(member(ClassId::C, std::nullopt, P({4, 1, 1})));
  CHECK(member(ClassId::C, std::nullopt, AnchoredPartition(4, P({4, 3, 3, 1}))));

  CHECK(member(ClassId::E, std::nullopt, P({5, 1, 1})));
  CHECK_FALSE(member(ClassId::E, std::nullopt, P({5, 5})));
  CHECK(member(ClassId::F, std::nullopt, P({6, 1})));
  CHECK_FALSE(member(ClassId::F, std::nullopt, P({6, 2})));
  CHECK(member(ClassId::Pprime, 4, P({4, 1, 1, 1})));
  CHECK(member(ClassId::Pdprime, 4, P({2, 2, 2, 1})));
  CHECK(member(ClassId::Pe_bounded, 4, P({3, 1})));
  CHECK_FALSE(member(ClassId::Pe_bounded, 4, P({4, 1})));
}

TEST_CASE("smallest part profile") {
  CHECK(smallest_part_profile(P({5, 3, 1, 1})) == SmallestPartProfile{1, 2, true});
  CHECK(smallest_part_profile(P({5, 5, 1})) == SmallestPartProfile{1, 1, false});
  CHECK(smallest_part_profile(P({7, 0, 0})) == SmallestPartProfile{0, 2, true});
  CHECK_THROWS_AS(smallest_part_profile(Partition()), std::invalid_argument);
}

TEST_CASE("anchor decompositions") {
  const auto d = anchor_decompositions(2, P({4, 2}));
  REQUIRE(d.size() == 2);
  CHECK(d[0].anchor == 4);
  CHECK(d[1].anchor == 2);
  CHECK(d[1].extras() == std::vector<int>{4});
  CHECK(anchor_decompositions(2, P({4, 4, 1})).size() == 1);
  CHECK(anchor_decompositions(1, P({8, 1})).size() == 1);
  CHECK(anchor_decompositions(3, P({5, 3})).empty());
  CHECK(is_raw_c_member(2, Parity::Odd, P({4, 2})));
  CHECK(is_raw_c_member(2, Parity::Even, P({4, 2})));
}

TEST_CASE("with k = 1 the anchored family is class C") {
  for (int n = 1; n <= 40; ++n) {
    for (const auto& raw : oracle::partitions(n)) {
      const Partition p(raw);
      const auto d = anchor_decompositions(1, p);
      const bool in_c = member(ClassId::C, std::nullopt, p);
      CHECK(d.size() == (in_c ? 1u : 0u));
      if (in_c) CHECK(d.front().anchor == p.largest());
    }
  }
}

TEST_CASE("enumerated members satisfy is_member and are sorted and unique") {
  for (const auto id : all_class_ids()) {
    for (int k = 1; k <= (requires_k(id) ? 4 : 1); ++k) {
      const auto spec = ClassSpec::make(id, requires_k(id) ? std::optional<int>(k) : std::nullopt);
      for (int n = 0; n <= 14; ++n) {
        const auto ms = enumerate(spec, n);
        const auto key = [](const Member& m) {
          if (const auto* a = std::get_if<AnchoredPartition>(&m)) return std::pair(a->partition, a->anchor);
          return std::pair(std::get<Partition>(m), 0);
        };
        CHECK(std::is_sorted(ms.begin(), ms.end(), [&](const Member& a, const Member& b) { return key(a) < key(b); }));
        CHECK(std::adjacent_find(ms.begin(), ms.end()) == ms.end());
        for (const auto& m : ms) {
          CHECK(is_member(spec, m));
          const int w = std::visit(
              [](const auto& v) {
                if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Partition>) return v.weight();
                else return v.partition.weight();
              },
              m);
          CHECK(w == n);
        }
      }
    }
  }
}
