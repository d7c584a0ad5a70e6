#pragma once

// Exact truncated power series in one variable q with 64-bit integer
// coefficients. A series of order N is known modulo q^{N+1}. Every
// arithmetic step is overflow-checked and throws qpart::OverflowError
// instead of wrapping.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qpart/checked.hpp"

namespace qpart {

inline constexpr int kDefaultOrder = 200;

// Sign of the factors of a Pochhammer-type product: Plus builds
// prod(1 + q^e), Minus builds prod(1 - q^e).
enum class Sign { Plus, Minus };

class TruncatedSeries {
public:
  // The zero series of the given order.
  explicit TruncatedSeries(int order);
  // Coefficients c[0..N]; the order is c.size() - 1.
  explicit TruncatedSeries(std::vector<std::int64_t> coeffs);

  static TruncatedSeries zero(int order) { return TruncatedSeries(order); }
  static TruncatedSeries one(int order);
  // coeff * q^exp, or zero when exp > order.
  static TruncatedSeries monomial(int exp, std::int64_t coeff, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const std::int64_t> coeffs() const { return coeffs_; }

  // Coefficient of q^i; throws std::out_of_range past the truncation order.
  std::int64_t operator[](int i) const;

  // Returns a copy truncated (or zero-extended) to another order.
  TruncatedSeries with_order(int order) const;

  bool operator==(const TruncatedSeries&) const = default;

private:
  std::vector<std::int64_t> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_negate(const TruncatedSeries& a);
TruncatedSeries series_scale(const TruncatedSeries& a, std::int64_t factor);

// Cauchy product truncated at the common order.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// Multiplicative inverse; the constant term must be +1 or -1
// (std::domain_error otherwise).
TruncatedSeries series_reciprocal(const TruncatedSeries& a);

// Multiplication by q^c.
TruncatedSeries series_shift(const TruncatedSeries& a, int c);

// Exact division of every coefficient by 2; std::domain_error if any
// coefficient is odd.
TruncatedSeries series_halve(const TruncatedSeries& a);

// Multiply / divide by the single factor (1 + q^e) or (1 - q^e), e >= 1.
// Both run in linear time; the division is exact because the factor has
// unit constant term.
TruncatedSeries mul_binomial(const TruncatedSeries& a, Sign sign, int exp);
TruncatedSeries div_binomial(const TruncatedSeries& a, Sign sign, int exp);

// prod_{i=0}^{terms-1} (1 +- q^{start + i*step}); terms == 0 gives 1.
TruncatedSeries pochhammer_finite(Sign sign, int start_exp, int step, int terms, int order);

// prod_{i>=0} (1 +- q^{start + i*step}), keeping exactly the factors whose
// exponent is at most the order.
TruncatedSeries pochhammer_infinite(Sign sign, int start_exp, int step, int order);

// 1 / prod_{i=0}^{terms-1} (1 +- q^{start + i*step}).
TruncatedSeries pochhammer_finite_reciprocal(Sign sign, int start_exp, int step, int terms,
                                             int order);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_add(a, b);
}
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_sub(a, b);
}
inline TruncatedSeries operator-(const TruncatedSeries& a) { return series_negate(a); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_mul(a, b);
}
inline TruncatedSeries operator*(std::int64_t s, const TruncatedSeries& a) {
  return series_scale(a, s);
}

struct CoefficientMismatch {
  int index;
  std::int64_t lhs;
  std::int64_t rhs;
};

struct EqualityOutcome {
  bool equal = true;
  std::optional<CoefficientMismatch> mismatch;  // smallest failing index
  explicit operator bool() const { return equal; }
};

// Compares coefficients with index in [from, order].
EqualityOutcome series_equal_report(const TruncatedSeries& a, const TruncatedSeries& b,
                                    int from = 0);

// Human readable form, e.g. "1 - q - q^2 + q^3 + O(q^11)".
std::string to_string(const TruncatedSeries& s);

}  // namespace qpart
