#pragma once

#include <cstdlib>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "braidkit/errors.hpp"
#include "braidkit/permutation.hpp"

namespace braidkit {

/// One Artin generator sigma_index raised to sign = +1 or -1.
struct BraidLetter {
  int index = 1;
  int sign = 1;

  // Signed encoding used by BraidWord storage and the JSON format.
  int code() const { return sign * index; }
  static BraidLetter from_code(int code) { return {std::abs(code), code < 0 ? -1 : 1}; }

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

/// A word in the Artin generators of B_n.
///
/// Letters are kept as a flat sequence of signed generator indices
/// (+i for sigma_i, -i for its inverse), indexed from 1. Equality via
/// `operator==` is letter-for-letter; group equality lives in garside.hpp.
class BraidWord {
 public:
  explicit BraidWord(int strands) : strands_(strands) {
    if (strands < 1) throw DomainError("a braid needs at least one strand");
  }

  BraidWord(int strands, std::vector<int> letters)
      : strands_(strands), letters_(std::move(letters)) {
    if (strands < 1) throw DomainError("a braid needs at least one strand");
    for (int code : letters_) check_code(code);
  }

  static BraidWord generator(int strands, int index, int sign = 1) {
    return BraidWord(strands, {sign < 0 ? -index : index});
  }

  int strands() const { return strands_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const int> codes() const { return letters_; }
  BraidLetter letter(std::size_t pos) const { return BraidLetter::from_code(letters_[pos]); }

  void push_back(int code) {
    check_code(code);
    letters_.push_back(code);
  }

  BraidWord& operator*=(const BraidWord& rhs) {
    if (rhs.strands_ != strands_) throw StrandMismatch(strands_, rhs.strands_);
    letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
    return *this;
  }

  friend BraidWord operator*(BraidWord lhs, const BraidWord& rhs) { return lhs *= rhs; }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  void check_code(int code) const {
    if (code == 0 || std::abs(code) > strands_ - 1)
      throw DomainError("generator index " + std::to_string(code) + " out of range for B_" +
                        std::to_string(strands_));
  }

  int strands_;
  std::vector<int> letters_;
};

inline BraidWord concat(std::initializer_list<BraidWord> words) {
  if (words.size() == 0) throw DomainError("concat of no words has no strand count");
  BraidWord out(words.begin()->strands());
  for (const auto& w : words) out *= w;
  return out;
}

inline BraidWord invert(const BraidWord& w) {
  std::vector<int> codes(w.codes().rbegin(), w.codes().rend());
  for (int& c : codes) c = -c;
  return BraidWord(w.strands(), std::move(codes));
}

inline BraidWord power(const BraidWord& w, long exponent) {
  const BraidWord base = exponent < 0 ? invert(w) : w;
  BraidWord out(w.strands());
  for (long i = 0; i < std::labs(exponent); ++i) out *= base;
  return out;
}

/// c^-1 w c.
inline BraidWord conjugate(const BraidWord& w, const BraidWord& c) {
  if (w.strands() != c.strands()) throw StrandMismatch(w.strands(), c.strands());
  return concat({invert(c), w, c});
}

/// Letters in reverse order with signs unchanged.
inline BraidWord rev(const BraidWord& w) {
  return BraidWord(w.strands(), std::vector<int>(w.codes().rbegin(), w.codes().rend()));
}

namespace detail {
inline void check_block(int l, int s, int strands) {
  if (l < 1 || s > strands - 1 || s < l - 1)
    throw DomainError("block bounds l=" + std::to_string(l) + ", s=" + std::to_string(s) +
                      " invalid for B_" + std::to_string(strands));
}
}  // namespace detail

/// sigma_l sigma_{l+1} ... sigma_s; empty when s == l-1.
inline BraidWord pi(int l, int s, int strands) {
  detail::check_block(l, s, strands);
  BraidWord out(strands);
  for (int i = l; i <= s; ++i) out.push_back(i);
  return out;
}

/// pi(l,s) pi(l,s-1) ... pi(l,l). delta(1, n-1, n) is the half twist of B_n.
inline BraidWord delta(int l, int s, int strands) {
  detail::check_block(l, s, strands);
  BraidWord out(strands);
  for (int top = s; top >= l; --top) out *= pi(l, top, strands);
  return out;
}

inline BraidWord half_twist(int strands) { return delta(1, strands - 1, strands); }

/// Cancels adjacent inverse pairs until none remain (stack based, so
/// cascades like s1 s2 S2 S1 vanish in one pass). No braid relations.
inline BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> stack;
  stack.reserve(w.size());
  for (int code : w.codes()) {
    if (!stack.empty() && stack.back() == -code)
      stack.pop_back();
    else
      stack.push_back(code);
  }
  return BraidWord(w.strands(), std::move(stack));
}

/// Image of w in S_n: position i (0-based) is sent to image(i) after
/// reading the word left to right.
inline Permutation permutation(const BraidWord& w) {
  Permutation p(w.strands());
  for (int code : w.codes()) p.then_swap(std::abs(code) - 1);
  return p;
}

inline long exponent_sum(const BraidWord& w) {
  long sum = 0;
  for (int code : w.codes()) sum += code > 0 ? 1 : -1;
  return sum;
}

/// Compact human form, e.g. "s1 s2 S1" (capital S is an inverse letter).
inline std::string to_string(const BraidWord& w) {
  if (w.empty()) return "e";
  std::string out;
  for (int code : w.codes()) {
    if (!out.empty()) out += ' ';
    out += code > 0 ? 's' : 'S';
    out += std::to_string(std::abs(code));
  }
  return out;
}

}  // namespace braidkit
