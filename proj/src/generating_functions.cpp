// Generating functions of every class, built from q-Pochhammer products.
// Sums over an unbounded index stop at the first term whose lowest
// exponent exceeds the truncation order.

#include <stdexcept>

#include "qpart/counters.hpp"

namespace qpart {

namespace {

// sum_{n>=start} q^{n*k + offset} (sign q^{n+1+gap};q)_inf, accumulated from
// the top index down so that each infinite product is one factor away from
// the previous one.
TruncatedSeries smallest_part_sum(Sign sign, int k, int start, int offset, int gap, int order) {
  auto total = TruncatedSeries::zero(order);
  int last = start - 1;
  while (static_cast<long long>(last + 1) * k + offset <= order) ++last;
  if (last < start) return total;
  // tail = (sign q^{last+1+gap};q)_inf
  auto tail = pochhammer_infinite(sign, last + 1 + gap, 1, order);
  for (int n = last; n >= start; --n) {
    total = total + series_shift(tail, n * k + offset);
    if (n + gap >= 1) tail = mul_binomial(tail, sign, n + gap);
  }
  return total;
}

// sum_{n>=1} q^{2n-1} (-x q^{2n+2};q^2)_{k-1} / (q;q^2)_n at x = +1 / -1.
TruncatedSeries bk_series(int k, Sign marker, int order) {
  auto total = TruncatedSeries::zero(order);
  auto inv_odd = TruncatedSeries::one(order);  // 1/(q;q^2)_n
  for (int n = 1; 2 * n - 1 <= order; ++n) {
    inv_odd = div_binomial(inv_odd, Sign::Minus, 2 * n - 1);
    const auto window = pochhammer_finite(marker, 2 * n + 2, 2, k - 1, order);
    total = total + series_shift(window * inv_odd, 2 * n - 1);
  }
  return total;
}

// sum_{n>=1} q^{2n} (-q;q)_n (-x q^{2n+2};q^2)_{k-1} / (q^{n+1};q)_n.
TruncatedSeries ck_series(int k, Sign marker, int order) {
  auto total = TruncatedSeries::zero(order);
  auto distinct_small = TruncatedSeries::one(order);  // (-q;q)_n
  for (int n = 1; 2 * n <= order; ++n) {
    distinct_small = mul_binomial(distinct_small, Sign::Plus, n);
    const auto middle = pochhammer_finite_reciprocal(Sign::Minus, n + 1, 1, n, order);
    const auto window = pochhammer_finite(marker, 2 * n + 2, 2, k - 1, order);
    total = total + series_shift(distinct_small * middle * window, 2 * n);
  }
  return total;
}

// sum_{n>=n0} q^{2n + shift} / (q;q^2)_n
TruncatedSeries odd_parts_below(int n0, int shift, int order) {
  auto total = TruncatedSeries::zero(order);
  auto inv_odd = TruncatedSeries::one(order);
  for (int n = 0; 2 * n + shift <= order; ++n) {
    if (n >= 1) inv_odd = div_binomial(inv_odd, Sign::Minus, 2 * n - 1);
    if (n >= n0) total = total + series_shift(inv_odd, 2 * n + shift);
  }
  return total;
}

TruncatedSeries even_part(const ParityPair& p) { return series_halve(p.sum + p.difference); }
TruncatedSeries odd_part(const ParityPair& p) { return series_halve(p.sum - p.difference); }

}  // namespace

TruncatedSeries dk_series(int k, int order) {
  if (k < 1) throw std::invalid_argument("k must be a positive integer");
  return smallest_part_sum(Sign::Plus, k, 0, 0, 0, order);
}

TruncatedSeries dk_difference_series(int k, int order) {
  if (k < 1) throw std::invalid_argument("k must be a positive integer");
  return smallest_part_sum(Sign::Minus, k, 0, 0, 0, order);
}

ParityPair parity_pair(ParityFamily family, int k, int order) {
  if (k < 1) throw std::invalid_argument("k must be a positive integer");
  switch (family) {
    case ParityFamily::Dk:
      return {dk_series(k, order), dk_difference_series(k, order)};
    case ParityFamily::Bk:
      return {bk_series(k, Sign::Plus, order), bk_series(k, Sign::Minus, order)};
    case ParityFamily::Ck:
      return {ck_series(k, Sign::Plus, order), ck_series(k, Sign::Minus, order)};
    case ParityFamily::Pd:
      return {pochhammer_infinite(Sign::Plus, 1, 1, order),
              pochhammer_infinite(Sign::Minus, 1, 1, order)};
    case ParityFamily::Pbounded:
      return {pochhammer_finite(Sign::Plus, 1, 1, k - 1, order),
              pochhammer_finite(Sign::Minus, 1, 1, k - 1, order)};
  }
  throw std::logic_error("unhandled parity family");
}

TruncatedSeries generating_function(const ClassSpec& spec, int order) {
  const auto one = TruncatedSeries::one(order);
  switch (spec.id) {
    case ClassId::A:
      return pochhammer_infinite(Sign::Plus, 1, 1, order);
    case ClassId::B:
      // B(0) = 0: the empty partition is not an odd-part partition here.
      return series_reciprocal(pochhammer_infinite(Sign::Minus, 1, 2, order)) - one;
    case ClassId::C:
      return ck_series(1, Sign::Plus, order);
    case ClassId::Dk:
      return dk_series(spec.param(), order);
    case ClassId::Dk_e:
      return even_part(parity_pair(ParityFamily::Dk, spec.param(), order));
    case ClassId::Dk_o:
      return odd_part(parity_pair(ParityFamily::Dk, spec.param(), order));
    case ClassId::SptKd:
      return smallest_part_sum(Sign::Plus, spec.param(), 1, 0, 0, order);
    case ClassId::Bk_e:
      return even_part(parity_pair(ParityFamily::Bk, spec.param(), order));
    case ClassId::Bk_o:
      return odd_part(parity_pair(ParityFamily::Bk, spec.param(), order));
    case ClassId::Ck_e:
      return even_part(parity_pair(ParityFamily::Ck, spec.param(), order));
    case ClassId::Ck_o:
      return odd_part(parity_pair(ParityFamily::Ck, spec.param(), order));
    case ClassId::E:
      return odd_parts_below(0, 1, order);
    case ClassId::F:
      return odd_parts_below(1, 0, order);
    case ClassId::P1:
      // smallest part s >= 2, larger parts distinct
      return smallest_part_sum(Sign::Plus, 1, 2, 0, 0, order);
    case ClassId::P2:
      // smallest part s, larger parts distinct and >= s + 2
      return smallest_part_sum(Sign::Plus, 1, 1, 0, 1, order);
    case ClassId::Pprime: {
      const int k = spec.param();
      const auto from_two = pochhammer_infinite(Sign::Plus, 2, 1, order);
      if (k == 1) return from_two - one;
      return series_shift(from_two, k - 1);
    }
    case ClassId::Pdprime: {
      // q^{s + (s+1)(k-1)} (-q^{s+2};q)_inf = q^{k-1} * q^{s k} (...)
      const int k = spec.param();
      return smallest_part_sum(Sign::Plus, k, 1, k - 1, 1, order);
    }
    case ClassId::Pe_d:
      return even_part(parity_pair(ParityFamily::Pd, 1, order));
    case ClassId::Po_d:
      return odd_part(parity_pair(ParityFamily::Pd, 1, order));
    case ClassId::Pe_bounded:
      return even_part(parity_pair(ParityFamily::Pbounded, spec.param(), order));
    case ClassId::Po_bounded:
      return odd_part(parity_pair(ParityFamily::Pbounded, spec.param(), order));
  }
  throw std::logic_error("unhandled class in generating_function");
}

std::int64_t count_by_series(const ClassSpec& spec, int n) {
  if (n < 0) throw std::invalid_argument("weight must be non-negative");
  return generating_function(spec, n)[n];
}

std::int64_t count(const ClassSpec& spec, int n, CountMethod method) {
  return method == CountMethod::Enumeration ? count_by_enumeration(spec, n)
                                            : count_by_series(spec, n);
}

}  // namespace qpart
