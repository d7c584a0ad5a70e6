#pragma once

// Two independent ways to count every partition class: explicit
// enumeration of the members, and coefficient extraction from the class's
// generating function. Each path is the other's oracle.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "qpart/partition.hpp"
#include "qpart/series.hpp"

namespace qpart {

enum class CountMethod { Enumeration, Series };

std::string_view method_name(CountMethod m);

// ---------------------------------------------------------------------------
// Enumeration

// Visits every member of weight n exactly once, in generation order. C-family
// members are visited as AnchoredPartition, all others as Partition.
void for_each_member(const ClassSpec& spec, int n, const std::function<void(const Member&)>& visit);

// All members of weight n, sorted in canonical (lexicographic) order.
std::vector<Member> enumerate(const ClassSpec& spec, int n);

// Same count as enumerate(spec, n).size() without materialising members.
std::int64_t count_by_enumeration(const ClassSpec& spec, int n);

// ---------------------------------------------------------------------------
// Generating functions

// Truncated generating function whose q^n coefficient is the class count.
TruncatedSeries generating_function(const ClassSpec& spec, int order);

std::int64_t count_by_series(const ClassSpec& spec, int n);

std::int64_t count(const ClassSpec& spec, int n, CountMethod method);

// Paired e/o families evaluated with the extra-part marker at x = +1 and
// x = -1. even = (sum + difference) / 2, odd = (sum - difference) / 2.
enum class ParityFamily { Dk, Bk, Ck, Pd, Pbounded };

struct ParityPair {
  TruncatedSeries sum;
  TruncatedSeries difference;
};

ParityPair parity_pair(ParityFamily family, int k, int order);

// sum_{n>=0} q^{nk} (-q^{n+1};q)_inf
TruncatedSeries dk_series(int k, int order);
// sum_{n>=0} q^{nk} (q^{n+1};q)_inf, the D_k^e - D_k^o series
TruncatedSeries dk_difference_series(int k, int order);

// ---------------------------------------------------------------------------
// Derived counters

// 2*A_k(n) = P_1(d,n) + P'_{k-1}(d,n) + P_2(d,n) + P''_{k-1}(d,n).
std::int64_t count_Ak_doubled(int k, int n, CountMethod method = CountMethod::Enumeration);

// D_k(n) = 2 * sum_m coefficients[m] * A(n - m) for every n > threshold.
struct DkRelation {
  int k;
  std::vector<std::int64_t> coefficients;
  int threshold;
};

DkRelation derive_dk_relation(int k);

// Right-hand side of the relation at n, given A(0..n).
std::int64_t apply_dk_relation(const DkRelation& rel, const std::vector<std::int64_t>& a_values,
                               int n);

// ---------------------------------------------------------------------------
// Tables

struct CountTable {
  ClassSpec spec;
  CountMethod method;
  std::map<int, std::int64_t> values;
};

CountTable count_table(const ClassSpec& spec, int nmin, int nmax, CountMethod method);

// ---------------------------------------------------------------------------
// Anchored vs raw C_k counting

struct AnchorAmbiguity {
  Partition multiset;
  std::vector<AnchoredPartition> decompositions;
};

struct CCountComparison {
  int k;
  int n;
  std::int64_t anchored_even = 0;
  std::int64_t anchored_odd = 0;
  std::int64_t raw_even = 0;
  std::int64_t raw_odd = 0;
  // Multisets with more than one valid anchor.
  std::vector<AnchorAmbiguity> ambiguous;

  bool diverges() const {
    return !ambiguous.empty() || anchored_even != raw_even || anchored_odd != raw_odd;
  }
};

std::int64_t count_raw_c(int k, Parity parity, int n);
CCountComparison compare_c_counts(int k, int n);

}  // namespace qpart
