#include "qpart/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qpart {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("series order mismatch: " + std::to_string(a.order()) +
                                " vs " + std::to_string(b.order()));
  }
}

void require_order(int order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
}

std::int64_t sign_value(Sign s) { return s == Sign::Plus ? 1 : -1; }

}  // namespace

TruncatedSeries::TruncatedSeries(int order) {
  require_order(order);
  coeffs_.assign(static_cast<std::size_t>(order) + 1, 0);
}

TruncatedSeries::TruncatedSeries(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::one(int order) { return monomial(0, 1, order); }

TruncatedSeries TruncatedSeries::monomial(int exp, std::int64_t coeff, int order) {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  TruncatedSeries s(order);
  if (exp <= order) s.coeffs_[static_cast<std::size_t>(exp)] = coeff;
  return s;
}

std::int64_t TruncatedSeries::operator[](int i) const {
  if (i < 0 || i > order()) {
    throw std::out_of_range("coefficient index " + std::to_string(i) +
                            " outside truncation order " + std::to_string(order()));
  }
  return coeffs_[static_cast<std::size_t>(i)];
}

TruncatedSeries TruncatedSeries::with_order(int order) const {
  require_order(order);
  std::vector<std::int64_t> c(coeffs_);
  c.resize(static_cast<std::size_t>(order) + 1, 0);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  std::vector<std::int64_t> r(a.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_add(a.coeffs()[i], b.coeffs()[i]);
  return TruncatedSeries(std::move(r));
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  std::vector<std::int64_t> r(a.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_sub(a.coeffs()[i], b.coeffs()[i]);
  return TruncatedSeries(std::move(r));
}

TruncatedSeries series_negate(const TruncatedSeries& a) { return series_scale(a, -1); }

TruncatedSeries series_scale(const TruncatedSeries& a, std::int64_t factor) {
  std::vector<std::int64_t> r(a.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_mul(a.coeffs()[i], factor);
  return TruncatedSeries(std::move(r));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  const std::size_t n = ca.size();
  std::vector<std::int64_t> r(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (ca[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (cb[j] == 0) continue;
      r[i + j] = checked_add(r[i + j], checked_mul(ca[i], cb[j]));
    }
  }
  return TruncatedSeries(std::move(r));
}

TruncatedSeries series_reciprocal(const TruncatedSeries& a) {
  const auto ca = a.coeffs();
  const std::int64_t c0 = ca[0];
  if (c0 != 1 && c0 != -1) {
    throw std::domain_error("reciprocal needs constant term +1 or -1, got " + std::to_string(c0));
  }
  const std::size_t n = ca.size();
  std::vector<std::int64_t> r(n, 0);
  r[0] = c0;  // 1/c0 == c0 for a unit
  for (std::size_t m = 1; m < n; ++m) {
    std::int64_t acc = 0;
    for (std::size_t i = 1; i <= m; ++i) {
      if (ca[i] == 0 || r[m - i] == 0) continue;
      acc = checked_add(acc, checked_mul(ca[i], r[m - i]));
    }
    r[m] = checked_mul(checked_neg(acc), c0);
  }
  return TruncatedSeries(std::move(r));
}

TruncatedSeries series_shift(const TruncatedSeries& a, int c) {
  if (c < 0) throw std::invalid_argument("shift must be non-negative");
  std::vector<std::int64_t> out(a.coeffs().size(), 0);
  for (std::size_t i = static_cast<std::size_t>(c); i < out.size(); ++i) {
    out[i] = a.coeffs()[i - static_cast<std::size_t>(c)];
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries series_halve(const TruncatedSeries& a) {
  std::vector<std::int64_t> r(a.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const std::int64_t c = a.coeffs()[i];
    if (c % 2 != 0) {
      throw std::domain_error("coefficient of q^" + std::to_string(i) + " is odd (" +
                              std::to_string(c) + "), cannot halve");
    }
    r[i] = c / 2;
  }
  return TruncatedSeries(std::move(r));
}

TruncatedSeries mul_binomial(const TruncatedSeries& a, Sign sign, int exp) {
  if (exp < 1) throw std::invalid_argument("binomial factor exponent must be positive");
  std::vector<std::int64_t> r(a.coeffs().begin(), a.coeffs().end());
  const std::int64_t s = sign_value(sign);
  // Descending so that r[i - exp] is still the input coefficient.
  for (std::size_t i = r.size(); i-- > static_cast<std::size_t>(exp);) {
    r[i] = checked_add(r[i], checked_mul(s, r[i - static_cast<std::size_t>(exp)]));
  }
  return TruncatedSeries(std::move(r));
}

TruncatedSeries div_binomial(const TruncatedSeries& a, Sign sign, int exp) {
  if (exp < 1) throw std::invalid_argument("binomial factor exponent must be positive");
  std::vector<std::int64_t> r(a.coeffs().begin(), a.coeffs().end());
  const std::int64_t s = sign_value(sign);
  // r = a / (1 + s q^e)  <=>  r[i] = a[i] - s r[i - e], ascending.
  for (std::size_t i = static_cast<std::size_t>(exp); i < r.size(); ++i) {
    r[i] = checked_sub(r[i], checked_mul(s, r[i - static_cast<std::size_t>(exp)]));
  }
  return TruncatedSeries(std::move(r));
}

TruncatedSeries pochhammer_finite(Sign sign, int start_exp, int step, int terms, int order) {
  if (terms < 0) throw std::invalid_argument("pochhammer term count must be non-negative");
  if (start_exp < 1 || step < 1) {
    throw std::invalid_argument("pochhammer start exponent and step must be positive");
  }
  auto r = TruncatedSeries::one(order);
  for (int i = 0; i < terms; ++i) {
    const long long e = start_exp + static_cast<long long>(i) * step;
    if (e > order) break;
    r = mul_binomial(r, sign, static_cast<int>(e));
  }
  return r;
}

TruncatedSeries pochhammer_infinite(Sign sign, int start_exp, int step, int order) {
  if (start_exp < 1 || step < 1) {
    throw std::invalid_argument("pochhammer start exponent and step must be positive");
  }
  auto r = TruncatedSeries::one(order);
  for (long long e = start_exp; e <= order; e += step) r = mul_binomial(r, sign, static_cast<int>(e));
  return r;
}

TruncatedSeries pochhammer_finite_reciprocal(Sign sign, int start_exp, int step, int terms,
                                             int order) {
  if (terms < 0) throw std::invalid_argument("pochhammer term count must be non-negative");
  if (start_exp < 1 || step < 1) {
    throw std::invalid_argument("pochhammer start exponent and step must be positive");
  }
  auto r = TruncatedSeries::one(order);
  for (int i = 0; i < terms; ++i) {
    const long long e = start_exp + static_cast<long long>(i) * step;
    if (e > order) break;
    r = div_binomial(r, sign, static_cast<int>(e));
  }
  return r;
}

EqualityOutcome series_equal_report(const TruncatedSeries& a, const TruncatedSeries& b, int from) {
  require_same_order(a, b);
  for (int i = std::max(from, 0); i <= a.order(); ++i) {
    if (a[i] != b[i]) return EqualityOutcome{false, CoefficientMismatch{i, a[i], b[i]}};
  }
  return {};
}

std::string to_string(const TruncatedSeries& s) {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i <= s.order(); ++i) {
    const std::int64_t c = s[i];
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) out << mag;
    if (i > 0) out << "q";
    if (i > 1) out << "^" << i;
    first = false;
  }
  if (first) out << "0";
  out << " + O(q^" << (s.order() + 1) << ")";
  return out.str();
}

}  // namespace qpart
