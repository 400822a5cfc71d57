#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "braidkit/errors.hpp"

namespace braidkit {

namespace detail {

// Built-in integers are overflow-checked; arbitrary precision types pass through.
template <class Int>
Int checked_add(const Int& a, const Int& b) {
  if constexpr (std::is_integral_v<Int>) {
    Int out;
    if (__builtin_add_overflow(a, b, &out)) throw ResourceError("integer coefficient overflow");
    return out;
  } else {
    return a + b;
  }
}

template <class Int>
Int checked_mul(const Int& a, const Int& b) {
  if constexpr (std::is_integral_v<Int>) {
    Int out;
    if (__builtin_mul_overflow(a, b, &out)) throw ResourceError("integer coefficient overflow");
    return out;
  } else {
    return a * b;
  }
}

}  // namespace detail

/// Exact Laurent polynomial sum_i coeffs[i] * t^(min_degree + i) over an
/// integer type.
///
/// The stored coefficient range is trimmed so both ends are nonzero; the
/// zero polynomial has no coefficients and min_degree 0.
template <class Int>
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;

  LaurentPolynomial(Int constant) : coeffs_{std::move(constant)} { trim(); }  // NOLINT

  LaurentPolynomial(std::vector<Int> coeffs, long min_degree)
      : coeffs_(std::move(coeffs)), min_degree_(min_degree) {
    trim();
  }

  static LaurentPolynomial monomial(Int c, long degree) { return LaurentPolynomial({std::move(c)}, degree); }
  static LaurentPolynomial t() { return monomial(Int(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  long min_degree() const { return min_degree_; }
  long max_degree() const { return min_degree_ + static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  Int coeff(long degree) const {
    if (is_zero() || degree < min_degree_ || degree > max_degree()) return Int(0);
    return coeffs_[static_cast<std::size_t>(degree - min_degree_)];
  }

  const Int& leading() const { return coeffs_.back(); }
  const Int& trailing() const { return coeffs_.front(); }

  // Value at t = 1.
  Int at_one() const {
    Int sum(0);
    for (const auto& c : coeffs_) sum = detail::checked_add(sum, c);
    return sum;
  }

  // p(t) -> p(1/t).
  LaurentPolynomial reflect() const {
    if (is_zero()) return {};
    return LaurentPolynomial(std::vector<Int>(coeffs_.rbegin(), coeffs_.rend()), -max_degree());
  }

  // Multiply by t^by.
  LaurentPolynomial shifted(long by) const {
    LaurentPolynomial out = *this;
    if (!out.is_zero()) out.min_degree_ += by;
    return out;
  }

  LaurentPolynomial operator-() const {
    LaurentPolynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    const long lo = std::min(min_degree_, rhs.min_degree_);
    const long hi = std::max(max_degree(), rhs.max_degree());
    std::vector<Int> sum(static_cast<std::size_t>(hi - lo + 1), Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) sum[i + (min_degree_ - lo)] = coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
      auto& slot = sum[i + (rhs.min_degree_ - lo)];
      slot = detail::checked_add(slot, rhs.coeffs_[i]);
    }
    coeffs_ = std::move(sum);
    min_degree_ = lo;
    trim();
    return *this;
  }

  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs) { return *this += -rhs; }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        prod[i + j] = detail::checked_add(prod[i + j], detail::checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return LaurentPolynomial(std::move(prod), a.min_degree_ + b.min_degree_);
  }

  LaurentPolynomial& operator*=(const LaurentPolynomial& rhs) { return *this = *this * rhs; }

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      Int c = coeffs_[i];
      if (c == 0) continue;
      const long d = min_degree_ + static_cast<long>(i);
      const bool negative = c < 0;
      if (negative) c = -c;
      if (first)
        os << (negative ? "-" : "");
      else
        os << (negative ? " - " : " + ");
      first = false;
      if (d == 0 || c != 1) os << c;
      if (d != 0) os << (c != 1 ? "*t" : "t");
      if (d != 0 && d != 1) os << '^' << d;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) { return os << p.to_string(); }

 private:
  void trim() {
    std::size_t lo = 0;
    while (lo < coeffs_.size() && coeffs_[lo] == 0) ++lo;
    if (lo == coeffs_.size()) {
      coeffs_.clear();
      min_degree_ = 0;
      return;
    }
    std::size_t hi = coeffs_.size();
    while (coeffs_[hi - 1] == 0) --hi;
    coeffs_ = std::vector<Int>(coeffs_.begin() + static_cast<std::ptrdiff_t>(lo),
                               coeffs_.begin() + static_cast<std::ptrdiff_t>(hi));
    min_degree_ += static_cast<long>(lo);
  }

  std::vector<Int> coeffs_;
  long min_degree_ = 0;
};

/// Quotient a / b, which must be exact in Z[t, 1/t]; throws
/// InexactDivision otherwise.
template <class Int>
LaurentPolynomial<Int> divide_exact(const LaurentPolynomial<Int>& a, const LaurentPolynomial<Int>& b) {
  if (b.is_zero()) throw InexactDivision("division by the zero polynomial");
  if (a.is_zero()) return {};
  // An exact quotient has degrees in [a.min - b.min, a.max - b.max].
  const long q_lo = a.min_degree() - b.min_degree();
  const long q_hi = a.max_degree() - b.max_degree();
  if (q_hi < q_lo) throw InexactDivision("degree range admits no exact quotient");
  std::vector<Int> quotient(static_cast<std::size_t>(q_hi - q_lo + 1), Int(0));
  LaurentPolynomial<Int> rem = a;
  for (long d = q_hi; d >= q_lo && !rem.is_zero(); --d) {
    const Int top = rem.coeff(d + b.max_degree());
    if (top == 0) continue;
    if (top % b.leading() != 0) throw InexactDivision("leading coefficient not divisible");
    const Int qc = top / b.leading();
    quotient[static_cast<std::size_t>(d - q_lo)] = qc;
    rem -= LaurentPolynomial<Int>::monomial(qc, d) * b;
  }
  if (!rem.is_zero()) throw InexactDivision("nonzero remainder " + rem.to_string());
  return LaurentPolynomial<Int>(std::move(quotient), q_lo);
}

/// Unit normalization +-t^m p(t): lowest degree 0, constant term positive.
template <class Int>
LaurentPolynomial<Int> normalize_alexander(const LaurentPolynomial<Int>& p) {
  if (p.is_zero()) return p;
  LaurentPolynomial<Int> out = p.shifted(-p.min_degree());
  return out.trailing() < 0 ? -out : out;
}

}  // namespace braidkit
