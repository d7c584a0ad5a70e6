#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "qpart/counters.hpp"

using namespace qpart;

namespace {

std::int64_t cnt(ClassId id, std::optional<int> k, int n, CountMethod m = CountMethod::Series) {
  return count(ClassSpec::make(id, k), n, m);
}

std::set<std::string> member_strings(ClassId id, std::optional<int> k, int n, bool drop_anchor = false) {
  std::set<std::string> out;
  for (const auto& m : enumerate(ClassSpec::make(id, k), n)) {
    if (drop_anchor) out.insert(to_string(std::get<AnchoredPartition>(m).partition));
    else out.insert(to_string(m));
  }
  return out;
}

}  // namespace

TEST_CASE("both counting paths agree with the brute-force oracle") {
  for (const auto id : all_class_ids()) {
    const int kmax = requires_k(id) ? 5 : 1;
    for (int k = 1; k <= kmax; ++k) {
      const std::optional<int> kk = requires_k(id) ? std::optional<int>(k) : std::nullopt;
      const auto spec = ClassSpec::make(id, kk);
      const int nmax = requires_k(id) ? 22 : 30;
      const auto gf = generating_function(spec, nmax);
      for (int n = 0; n <= nmax; ++n) {
        const auto expected = oracle::count_named(std::string(class_name(id)), k, n);
        CAPTURE(spec.label());
        CAPTURE(n);
        CHECK(gf[n] == expected);
        CHECK(count_by_enumeration(spec, n) == expected);
        CHECK(static_cast<std::int64_t>(enumerate(spec, n).size()) == expected);
      }
    }
  }
}

TEST_CASE("series and enumeration agree further out for the unparameterised classes") {
  for (const auto id : {ClassId::A, ClassId::B, ClassId::C, ClassId::E, ClassId::F}) {
    for (int n = 31; n <= 45; ++n) {
      CHECK(cnt(id, std::nullopt, n, CountMethod::Series) == cnt(id, std::nullopt, n, CountMethod::Enumeration));
    }
  }
}

TEST_CASE("reference values: k=2, n=8 and n+1=9") {
  CHECK(cnt(ClassId::Bk_e, 2, 8) == 6);
  CHECK(cnt(ClassId::Ck_e, 2, 9) == 6);
  CHECK(cnt(ClassId::Bk_o, 2, 8) == 1);
  CHECK(cnt(ClassId::Ck_o, 2, 9) == 1);
  CHECK(member_strings(ClassId::Bk_e, 2, 8) ==
        std::set<std::string>{"7+1", "5+3", "5+1+1+1", "3+3+1+1", "1+1+1+1+1+1+1+1", "3+1+1+1+1+1"});
  CHECK(member_strings(ClassId::Ck_e, 2, 9, true) ==
        std::set<std::string>{"8+1", "6+3", "6+2+1", "4+4+1", "4+3+2", "2+2+2+2+1"});
  CHECK(member_strings(ClassId::Bk_o, 2, 8) == std::set<std::string>{"4+1+1+1+1"});
  CHECK(member_strings(ClassId::Ck_o, 2, 9) == std::set<std::string>{"[2] 4+2+2+1"});
}

TEST_CASE("reference values: D_2(7) and D_4(8)") {
  CHECK(cnt(ClassId::Dk, 2, 7) == 8);
  CHECK(cnt(ClassId::Dk_e, 2, 7) == 4);
  CHECK(cnt(ClassId::Dk_o, 2, 7) == 4);
  CHECK(cnt(ClassId::Dk, 4, 8) == 8);
  CHECK(member_strings(ClassId::Dk, 4, 8) ==
        std::set<std::string>{"8+0+0+0+0", "6+2+0+0+0+0", "7+1+0+0+0+0", "5+3+0+0+0+0", "5+2+1+0+0+0+0",
                              "4+3+1+0+0+0+0", "4+1+1+1+1", "2+2+2+2"});
}

TEST_CASE("reference values: k=3, n=7") {
  CHECK(member_strings(ClassId::Bk_o, 3, 7).count("4+1+1+1") == 1);
  CHECK(member_strings(ClassId::Ck_o, 3, 8).count("[2] 4+2+2") == 1);
  CHECK(cnt(ClassId::P1, std::nullopt, 7) == 3);
  CHECK(cnt(ClassId::Pprime, 4, 7) == 1);
  CHECK(cnt(ClassId::P2, std::nullopt, 7) == 3);
  CHECK(cnt(ClassId::Pdprime, 4, 7) == 1);
}

TEST_CASE("k=3 parity split at n=7 and n+1=8, computed from the definitions") {
  // Enumerated by the oracle, not hard-coded.
  const auto be = oracle::count_bk(3, 0, 7);
  const auto bo = oracle::count_bk(3, 1, 7);
  CHECK(be == 5);
  CHECK(bo == 2);
  CHECK(cnt(ClassId::Bk_e, 3, 7) == be);
  CHECK(cnt(ClassId::Bk_o, 3, 7) == bo);
  CHECK(cnt(ClassId::Ck_e, 3, 8) == be);
  CHECK(cnt(ClassId::Ck_o, 3, 8) == bo);
  CHECK(member_strings(ClassId::Bk_o, 3, 7) == std::set<std::string>{"4+1+1+1", "6+1"});
}

TEST_CASE("class relations") {
  for (int k = 1; k <= 5; ++k) {
    for (int n = 0; n <= 40; ++n) {
      CHECK(cnt(ClassId::Dk, k, n) == cnt(ClassId::A, std::nullopt, n) + cnt(ClassId::SptKd, k, n));
      CHECK(cnt(ClassId::Dk, k, n) == cnt(ClassId::Dk_e, k, n) + cnt(ClassId::Dk_o, k, n));
    }
  }
  CHECK(cnt(ClassId::Dk, 1, 0) == 1);
  for (int n = 1; n <= 40; ++n) CHECK(cnt(ClassId::Dk, 1, n) == 2 * cnt(ClassId::A, std::nullopt, n));
}

TEST_CASE("Legendre: distinct parts by parity differ by the pentagonal coefficients") {
  const auto pent = oracle::euler_pentagonal(60);
  for (int n = 0; n <= 60; ++n) {
    CHECK(cnt(ClassId::Pe_d, std::nullopt, n) - cnt(ClassId::Po_d, std::nullopt, n) == pent[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("2 A_k(n) from the four distinct-part classes") {
  CHECK(count_Ak_doubled(4, 7) == 8);
  CHECK(count_Ak_doubled(4, 7, CountMethod::Series) == 8);
  for (int k = 1; k <= 5; ++k) {
    for (int n = 2; n <= 30; ++n) {
      const auto e = count_Ak_doubled(k, n, CountMethod::Enumeration);
      CHECK(e == count_Ak_doubled(k, n, CountMethod::Series));
      CHECK(e == cnt(ClassId::Dk, k, n + 1));
    }
  }
}

TEST_CASE("derived D_k relations") {
  const auto r3 = derive_dk_relation(3);
  CHECK(r3.coefficients == std::vector<std::int64_t>{1, -1, 0, 1});
  CHECK(r3.threshold == 3);
  CHECK(derive_dk_relation(1).coefficients == std::vector<std::int64_t>{1});
  CHECK(derive_dk_relation(2).coefficients == std::vector<std::int64_t>{0, 1});
  for (int k = 1; k <= 6; ++k) {
    const auto rel = derive_dk_relation(k);
    std::vector<std::int64_t> a;
    for (int n = 0; n <= 60; ++n) a.push_back(oracle::count_named("A", 0, std::min(n, 30)));
    for (int n = rel.threshold + 1; n <= 30; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      CHECK(apply_dk_relation(rel, a, n) == oracle::count_dk(k, -1, n));
    }
  }
}

TEST_CASE("count tables") {
  const auto t = count_table(ClassSpec::make(ClassId::A), 0, 10, CountMethod::Series);
  CHECK(t.values.size() == 11);
  CHECK(t.values.at(10) == 10);
  CHECK_THROWS_AS(count_table(ClassSpec::make(ClassId::A), 5, 4, CountMethod::Series), std::invalid_argument);
}

TEST_CASE("anchored and raw C_k counts diverge at k=2, n=6") {
  const auto c = compare_c_counts(2, 6);
  CHECK(c.anchored_even == 3);
  CHECK(c.anchored_odd == 1);
  CHECK(c.raw_even == 3);
  CHECK(c.raw_odd == 1);
  REQUIRE(c.ambiguous.size() == 1);
  CHECK(to_string(c.ambiguous.front().multiset) == "4+2");
  CHECK(c.ambiguous.front().decompositions.size() == 2);
  CHECK(c.diverges());
  CHECK_FALSE(compare_c_counts(1, 12).diverges());
}
