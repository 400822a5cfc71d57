#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "braidkit/braid_word.hpp"
#include "braidkit/errors.hpp"
#include "braidkit/laurent.hpp"

namespace braidkit {

using BigInt = boost::multiprecision::cpp_int;
using LaurentPoly = LaurentPolynomial<BigInt>;

/// Square matrix over Z[t, 1/t].
class BurauMatrix {
 public:
  explicit BurauMatrix(int dim) : dim_(dim), entries_(static_cast<std::size_t>(dim) * dim) {}

  static BurauMatrix identity(int dim) {
    BurauMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = LaurentPoly(1);
    return m;
  }

  int dim() const { return dim_; }
  LaurentPoly& operator()(int row, int col) { return entries_[index(row, col)]; }
  const LaurentPoly& operator()(int row, int col) const { return entries_[index(row, col)]; }

  friend BurauMatrix operator*(const BurauMatrix& a, const BurauMatrix& b) {
    if (a.dim_ != b.dim_) throw StrandMismatch(a.dim_ + 1, b.dim_ + 1);
    BurauMatrix out(a.dim_);
    for (int i = 0; i < a.dim_; ++i)
      for (int k = 0; k < a.dim_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (int j = 0; j < a.dim_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend bool operator==(const BurauMatrix&, const BurauMatrix&) = default;

  // Right multiplication by the image of sigma_index^sign. The generator
  // matrix differs from the identity only in row c = index-1:
  //   sigma:    (c,c-1) = t, (c,c) = -t,   (c,c+1) = 1
  //   inverse:  (c,c-1) = 1, (c,c) = -1/t, (c,c+1) = 1/t
  // so only columns c-1, c, c+1 change.
  void apply_generator(int index, int sign) {
    const int c = index - 1;
    const LaurentPoly t = LaurentPoly::t();
    const LaurentPoly t_inv = LaurentPoly::monomial(1, -1);
    const LaurentPoly left_w = sign > 0 ? t : LaurentPoly(1);
    const LaurentPoly diag_w = sign > 0 ? -t : -t_inv;
    const LaurentPoly right_w = sign > 0 ? LaurentPoly(1) : t_inv;
    for (int row = 0; row < dim_; ++row) {
      const LaurentPoly pivot = (*this)(row, c);
      if (pivot.is_zero()) continue;
      if (c - 1 >= 0) (*this)(row, c - 1) += pivot * left_w;
      if (c + 1 < dim_) (*this)(row, c + 1) += pivot * right_w;
      (*this)(row, c) = pivot * diag_w;
    }
  }

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(col);
  }

  int dim_;
  std::vector<LaurentPoly> entries_;
};

/// Reduced Burau representation, (n-1)-dimensional.
inline BurauMatrix reduced_burau(const BraidWord& w) {
  if (w.strands() < 2) throw DomainError("reduced Burau needs at least 2 strands");
  BurauMatrix m = BurauMatrix::identity(w.strands() - 1);
  for (int code : w.codes()) m.apply_generator(std::abs(code), code > 0 ? 1 : -1);
  return m;
}

/// Fraction-free (Bareiss) determinant; every division is exact.
inline LaurentPoly determinant(BurauMatrix m) {
  const int n = m.dim();
  if (n == 0) return LaurentPoly(1);
  LaurentPoly prev(1);
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    int pivot = k;
    while (pivot < n && m(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return {};
    if (pivot != k) {
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m(i, j) = divide_exact(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      m(i, k) = LaurentPoly();
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

/// Number of components of the closure: cycles of the permutation image.
inline int closure_components(const BraidWord& w) { return permutation(w).cycle_count(); }

struct InvariantOptions {
  // Words longer than this are refused; Burau degrees grow with length.
  std::size_t degree_cap = 2000;
};

/// Alexander polynomial of the closure of w, which must be a knot:
/// det(B(w) - I) * (1 - t) / (1 - t^n), unit-normalized.
inline LaurentPoly alexander(const BraidWord& w, const InvariantOptions& options = {}) {
  if (closure_components(w) != 1)
    throw DomainError("closure has " + std::to_string(closure_components(w)) + " components, not a knot");
  if (w.size() > options.degree_cap)
    throw ResourceError("word length " + std::to_string(w.size()) + " exceeds degree cap " +
                        std::to_string(options.degree_cap));
  const int n = w.strands();
  if (n == 1) return LaurentPoly(1);
  BurauMatrix m = reduced_burau(w);
  for (int i = 0; i < m.dim(); ++i) m(i, i) -= LaurentPoly(1);
  const LaurentPoly one_minus_t({1, -1}, 0);
  const LaurentPoly one_minus_tn = LaurentPoly(1) - LaurentPoly::monomial(1, n);
  return normalize_alexander(divide_exact(determinant(std::move(m)) * one_minus_t, one_minus_tn));
}

/// Closed form (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)) for coprime p, q.
inline LaurentPoly torus_alexander(long p, long q, const InvariantOptions& options = {}) {
  if (p < 2 || q < 2) throw DomainError("torus_alexander needs p, q >= 2");
  if (std::gcd(p, q) != 1) throw DomainError("torus_alexander needs coprime p, q");
  if (static_cast<std::size_t>(p * q) > options.degree_cap)
    throw ResourceError("pq = " + std::to_string(p * q) + " exceeds degree cap");
  const auto t_pow_minus_one = [](long e) { return LaurentPoly::monomial(1, e) - LaurentPoly(1); };
  const LaurentPoly num = t_pow_minus_one(p * q) * t_pow_minus_one(1);
  return normalize_alexander(divide_exact(divide_exact(num, t_pow_minus_one(p)), t_pow_minus_one(q)));
}

}  // namespace braidkit
