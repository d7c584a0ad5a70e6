#include <set>
#include <stdexcept>

#include "qpart/checked.hpp"
#include "qpart/counters.hpp"

namespace qpart {

std::int64_t count_Ak_doubled(int k, int n, CountMethod method) {
  if (k < 1) throw std::invalid_argument("k must be a positive integer");
  if (n < 0) throw std::invalid_argument("weight must be non-negative");
  std::int64_t total = 0;
  total = checked_add(total, count(ClassSpec::make(ClassId::P1), n, method));
  total = checked_add(total, count(ClassSpec::make(ClassId::Pprime, k), n, method));
  total = checked_add(total, count(ClassSpec::make(ClassId::P2), n, method));
  total = checked_add(total, count(ClassSpec::make(ClassId::Pdprime, k), n, method));
  return total;
}

// p_k(q) = sum_{j=0}^{k-1} (-1)^j (q^{k-j};q)_j; every term has degree at
// most k(k-1)/2, which is also the degree of the correction (q;q)_{k-1}.
DkRelation derive_dk_relation(int k) {
  if (k < 1) throw std::invalid_argument("k must be a positive integer");
  const int degree = k * (k - 1) / 2;
  auto poly = TruncatedSeries::zero(degree);
  for (int j = 0; j < k; ++j) {
    const auto term = pochhammer_finite(Sign::Minus, k - j, 1, j, degree);
    poly = j % 2 == 0 ? poly + term : poly - term;
  }
  std::vector<std::int64_t> c(poly.coeffs().begin(), poly.coeffs().end());
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  return DkRelation{k, std::move(c), degree};
}

std::int64_t apply_dk_relation(const DkRelation& rel, const std::vector<std::int64_t>& a_values,
                               int n) {
  if (n < 0 || static_cast<std::size_t>(n) >= a_values.size()) {
    throw std::out_of_range("A values do not reach the requested weight");
  }
  std::int64_t sum = 0;
  for (std::size_t m = 0; m < rel.coefficients.size() && static_cast<int>(m) <= n; ++m) {
    sum = checked_add(sum, checked_mul(rel.coefficients[m], a_values[static_cast<std::size_t>(n) - m]));
  }
  return checked_mul(sum, 2);
}

CountTable count_table(const ClassSpec& spec, int nmin, int nmax, CountMethod method) {
  if (nmin < 0 || nmax < nmin) throw std::invalid_argument("invalid weight range");
  CountTable table{spec, method, {}};
  if (method == CountMethod::Series) {
    const auto gf = generating_function(spec, nmax);
    for (int n = nmin; n <= nmax; ++n) table.values[n] = gf[n];
  } else {
    for (int n = nmin; n <= nmax; ++n) table.values[n] = count_by_enumeration(spec, n);
  }
  return table;
}

namespace {

std::set<Partition> raw_c_multisets(int k, Parity parity, int n) {
  std::set<Partition> out;
  const auto id = parity == Parity::Even ? ClassId::Ck_e : ClassId::Ck_o;
  for_each_member(ClassSpec::make(id, k), n, [&](const Member& m) {
    out.insert(std::get<AnchoredPartition>(m).partition);
  });
  return out;
}

}  // namespace

std::int64_t count_raw_c(int k, Parity parity, int n) {
  return static_cast<std::int64_t>(raw_c_multisets(k, parity, n).size());
}

CCountComparison compare_c_counts(int k, int n) {
  CCountComparison cmp;
  cmp.k = k;
  cmp.n = n;
  cmp.anchored_even = count_by_enumeration(ClassSpec::make(ClassId::Ck_e, k), n);
  cmp.anchored_odd = count_by_enumeration(ClassSpec::make(ClassId::Ck_o, k), n);
  const auto even = raw_c_multisets(k, Parity::Even, n);
  const auto odd = raw_c_multisets(k, Parity::Odd, n);
  cmp.raw_even = static_cast<std::int64_t>(even.size());
  cmp.raw_odd = static_cast<std::int64_t>(odd.size());
  std::set<Partition> all = even;
  all.insert(odd.begin(), odd.end());
  for (const auto& p : all) {
    auto decs = anchor_decompositions(k, p);
    if (decs.size() > 1) cmp.ambiguous.push_back({p, std::move(decs)});
  }
  return cmp;
}

}  // namespace qpart
