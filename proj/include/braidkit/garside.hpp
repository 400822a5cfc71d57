#pragma once

#include <cstddef>
#include <cstdlib>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "braidkit/braid_word.hpp"
#include "braidkit/errors.hpp"
#include "braidkit/permutation.hpp"

namespace braidkit {

/// A positive braid in which each pair of strands crosses at most once.
///
/// Such braids are in bijection with permutations, so they are stored as
/// the permutation (strand starting at position i ends at image(i)) and
/// every factor operation is combinatorial.
class PermutationBraid {
 public:
  explicit PermutationBraid(Permutation perm) : perm_(std::move(perm)) {}

  static PermutationBraid identity(int strands) { return PermutationBraid(Permutation(strands)); }
  static PermutationBraid delta(int strands) {
    return PermutationBraid(Permutation::reversal(strands));
  }
  // sigma_i, 1-based.
  static PermutationBraid generator(int strands, int index) {
    return PermutationBraid(Permutation::adjacent_swap(strands, index - 1));
  }

  int strands() const { return perm_.size(); }
  const Permutation& perm() const { return perm_; }

  bool is_identity() const { return perm_.is_identity(); }
  bool is_delta() const { return perm_ == Permutation::reversal(strands()); }

  // sigma_i is a prefix: the strands at positions i, i+1 cross.
  bool starts_with(int index) const { return perm_[index - 1] > perm_[index]; }

  // sigma_i is a suffix: the strands ending at positions i, i+1 crossed.
  bool finishes_with(int index) const {
    const Permutation inv = perm_.inverse();
    return inv[index - 1] > inv[index];
  }

  std::vector<int> starting_set() const {
    std::vector<int> out;
    for (int i = 1; i < strands(); ++i)
      if (starts_with(i)) out.push_back(i);
    return out;
  }

  std::vector<int> finishing_set() const {
    const Permutation inv = perm_.inverse();
    std::vector<int> out;
    for (int i = 1; i < strands(); ++i)
      if (inv[i - 1] > inv[i]) out.push_back(i);
    return out;
  }

  // Letter length of the positive word.
  long length() const { return perm_.inversions(); }

  // Delta^-1 * this * Delta, i.e. sigma_i -> sigma_{n-i}.
  PermutationBraid tau() const {
    const int n = strands();
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) images[j] = n - 1 - perm_[n - 1 - j];
    return PermutationBraid(Permutation(std::move(images)));
  }

  PermutationBraid tau_power(long exponent) const {
    return exponent % 2 == 0 ? *this : tau();
  }

  // The simple element this^-1 * Delta.
  PermutationBraid right_complement() const {
    return PermutationBraid(perm_.inverse() * Permutation::reversal(strands()));
  }

  // A positive word for this braid, peeling off starting generators
  // from the left (lowest index first).
  BraidWord to_word() const {
    const int n = strands();
    std::vector<int> images = perm_.images();
    BraidWord out(n);
    for (;;) {
      int i = 0;
      while (i + 1 < n && images[i] < images[i + 1]) ++i;
      if (i + 1 >= n) break;
      out.push_back(i + 1);
      std::swap(images[i], images[i + 1]);
    }
    return out;
  }

  friend bool operator==(const PermutationBraid&, const PermutationBraid&) = default;
  friend auto operator<=>(const PermutationBraid&, const PermutationBraid&) = default;

 private:
  Permutation perm_;
};

/// Left-weighted pair test: every starting generator of b finishes a.
inline bool is_left_weighted(const PermutationBraid& a, const PermutationBraid& b) {
  if (a.strands() != b.strands()) throw StrandMismatch(a.strands(), b.strands());
  for (int i = 1; i < a.strands(); ++i)
    if (b.starts_with(i) && !a.finishes_with(i)) return false;
  return true;
}

namespace detail {

// Rewrites (a, b) in place into the left-weighted pair with the same
// product by moving starting generators of b into a while a stays
// simple. Returns whether anything moved.
inline bool left_weight(Permutation& a, Permutation& b) {
  const int n = a.size();
  std::vector<int> a_inv = a.inverse().images();
  std::vector<int> b_img = b.images();
  bool changed = false;
  for (;;) {
    int moved = -1;
    for (int i = 0; i + 1 < n; ++i) {
      if (b_img[i] > b_img[i + 1] && a_inv[i] < a_inv[i + 1]) {
        moved = i;
        break;
      }
    }
    if (moved < 0) break;
    std::swap(a_inv[moved], a_inv[moved + 1]);
    std::swap(b_img[moved], b_img[moved + 1]);
    changed = true;
  }
  if (changed) {
    a = Permutation(std::move(a_inv)).inverse();
    b = Permutation(std::move(b_img));
  }
  return changed;
}

}  // namespace detail

/// Garside left normal form Delta^inf * A_1 ... A_k.
///
/// Factors are never the identity or Delta and each adjacent pair is
/// left-weighted, which makes the form a canonical certificate for the
/// element of B_n.
struct NormalForm {
  int strands = 1;
  long inf = 0;
  std::vector<PermutationBraid> factors;

  long sup() const { return inf + static_cast<long>(factors.size()); }
  std::size_t canonical_length() const { return factors.size(); }
  bool is_identity() const { return inf == 0 && factors.empty(); }

  BraidWord to_word() const {
    BraidWord out = power(half_twist(strands), inf);
    for (const auto& f : factors) out *= f.to_word();
    return out;
  }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// Incrementally builds a left normal form from simple factors appended
/// on the right. Each append restores left-weightedness by a right to
/// left sweep that stops at the first pair left unchanged.
///
/// A factor that becomes Delta during the sweep is pulled to the front at
/// once. Everything to its left is twisted by tau, which is recorded by
/// flipping a global parity; only the short suffix already visited by
/// the sweep is corrected factor by factor.
class NormalFormBuilder {
 public:
  explicit NormalFormBuilder(int strands, long inf = 0)
      : strands_(strands), inf_(inf), full_(Permutation::reversal(strands)) {}

  void append(const PermutationBraid& factor) { append(factor.perm()); }

  void append(Permutation factor) {
    if (factor.size() != strands_) throw StrandMismatch(strands_, factor.size());
    if (factor.is_identity()) return;
    factors_.push_back({std::move(factor), twist_});
    std::size_t k = factors_.size() - 1;
    while (k > 0) {
      Permutation& a = actual(k - 1);
      Permutation& b = actual(k);
      if (!detail::left_weight(a, b)) break;
      if (a == full_) extract_delta(k - 1);
      --k;
    }
    if (!factors_.empty() && actual(factors_.size() - 1).is_identity()) factors_.pop_back();
    if (factors_.size() == 1 && actual(0) == full_) extract_delta(0);
  }

  void shift_inf(long by) { inf_ += by; }

  NormalForm finish() && {
    NormalForm nf;
    nf.strands = strands_;
    if (strands_ == 1) return nf;
    nf.inf = inf_;
    nf.factors.reserve(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) nf.factors.emplace_back(std::move(actual(i)));
    return nf;
  }

 private:
  struct Slot {
    Permutation perm;
    bool twist;  // perm is exact when twist matches the builder's parity
  };

  Permutation& actual(std::size_t i) {
    Slot& s = factors_[i];
    if (s.twist != twist_) {
      s.perm = PermutationBraid(std::move(s.perm)).tau().perm();
      s.twist = twist_;
    }
    return s.perm;
  }

  // Removes the Delta at position i; Delta A_1..A_{i-1} becomes
  // tau(A_1)..tau(A_{i-1}) Delta, and the suffix keeps its values.
  void extract_delta(std::size_t i) {
    factors_.erase(factors_.begin() + static_cast<std::ptrdiff_t>(i));
    for (std::size_t j = i; j < factors_.size(); ++j) actual(j);
    twist_ = !twist_;
    for (std::size_t j = i; j < factors_.size(); ++j) factors_[j].twist = twist_;
    ++inf_;
  }

  int strands_;
  long inf_;
  Permutation full_;
  bool twist_ = false;
  std::vector<Slot> factors_;
};

/// Normal form of Delta^inf * f_1 * ... * f_m for arbitrary simple f_i.
inline NormalForm normalize(int strands, long inf, std::span<const PermutationBraid> simples) {
  NormalFormBuilder builder(strands, inf);
  for (const auto& s : simples) builder.append(s);
  return std::move(builder).finish();
}

/// Left normal form of a word.
///
/// Each inverse letter is rewritten as Delta^-1 (Delta sigma_i^-1); all
/// Delta^-1 are collected on the left, twisting the factors they pass by
/// tau. The resulting positive simple factors are then appended one at a
/// time.
inline NormalForm to_normal_form(const BraidWord& w) {
  const int n = w.strands();
  const auto codes = w.codes();
  long negatives_after = 0;
  for (int code : codes)
    if (code < 0) ++negatives_after;

  NormalFormBuilder builder(n, -negatives_after);
  const Permutation full = Permutation::reversal(n);
  for (int code : codes) {
    const int i = std::abs(code) - 1;
    Permutation factor = code > 0 ? Permutation::adjacent_swap(n, i) : full;
    if (code < 0) {
      factor.then_swap(i);
      --negatives_after;
    }
    if (negatives_after % 2 != 0) factor = PermutationBraid(std::move(factor)).tau().perm();
    builder.append(std::move(factor));
  }
  return std::move(builder).finish();
}

inline long exponent_sum(const NormalForm& nf) {
  long sum = nf.inf * static_cast<long>(nf.strands) * (nf.strands - 1) / 2;
  for (const auto& f : nf.factors) sum += f.length();
  return sum;
}

/// Structural check of every NormalForm invariant.
inline bool is_normal(const NormalForm& nf) {
  for (const auto& f : nf.factors) {
    if (f.strands() != nf.strands) return false;
    if (f.is_identity() || f.is_delta()) return false;
  }
  for (std::size_t i = 0; i + 1 < nf.factors.size(); ++i)
    if (!is_left_weighted(nf.factors[i], nf.factors[i + 1])) return false;
  return true;
}

/// Group equality in B_n. Exponent sum and permutation image are compared
/// first since both are cheap necessary conditions.
inline bool equals(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw StrandMismatch(a.strands(), b.strands());
  if (exponent_sum(a) != exponent_sum(b)) return false;
  if (permutation(a) != permutation(b)) return false;
  return to_normal_form(a) == to_normal_form(b);
}

/// True iff c^-1 a c == b.
inline bool is_conjugate_by(const BraidWord& a, const BraidWord& b, const BraidWord& c) {
  if (a.strands() != b.strands()) throw StrandMismatch(a.strands(), b.strands());
  if (a.strands() != c.strands()) throw StrandMismatch(a.strands(), c.strands());
  return equals(conjugate(a, c), b);
}

/// Letter-wise image under conjugation by Delta: sigma_i -> sigma_{n-i}.
inline BraidWord tau(const BraidWord& w) {
  const int n = w.strands();
  BraidWord out(n);
  for (int code : w.codes()) out.push_back(code > 0 ? n - code : -(n + code));
  return out;
}

/// (sigma_1 ... sigma_{n-1})^n, the generator of the center of B_n.
inline BraidWord center_full_twist(int strands) {
  if (strands < 3)
    throw DomainError("center_full_twist needs at least 3 strands; B_1 and B_2 are abelian");
  return power(pi(1, strands - 1, strands), strands);
}

struct NormalFormHash {
  std::size_t operator()(const NormalForm& nf) const {
    std::size_t h = std::hash<long>{}(nf.inf) ^ (static_cast<std::size_t>(nf.strands) << 48);
    for (const auto& f : nf.factors)
      for (int v : f.perm().images()) h = h * 1000003u ^ static_cast<std::size_t>(v);
    return h;
  }
};

}  // namespace braidkit
