#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "braidkit/errors.hpp"

namespace braidkit {

/// A permutation of {0, ..., n-1} stored as its image list.
///
/// `image(i)` is where position i is sent. Products compose in reading
/// order: `(a * b).image(i) == b.image(a.image(i))`, so a word acts
/// left to right, the way braid words are read.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(int size) : images_(static_cast<std::size_t>(size)) {
    std::iota(images_.begin(), images_.end(), 0);
  }

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[v])
        throw DomainError("image list is not a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(int size) { return Permutation(size); }

  // The order-reversing permutation i -> n-1-i.
  static Permutation reversal(int size) {
    Permutation p(size);
    std::reverse(p.images_.begin(), p.images_.end());
    return p;
  }

  // Swap of adjacent positions i and i+1 (0-based i).
  static Permutation adjacent_swap(int size, int i) {
    Permutation p(size);
    std::swap(p.images_[i], p.images_[i + 1]);
    return p;
  }

  int size() const { return static_cast<int>(images_.size()); }
  int image(int i) const { return images_[static_cast<std::size_t>(i)]; }
  int operator[](int i) const { return image(i); }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation inv(size());
    for (int i = 0; i < size(); ++i) inv.images_[images_[i]] = i;
    return inv;
  }

  // Apply this, then rhs.
  Permutation operator*(const Permutation& rhs) const {
    if (rhs.size() != size()) throw StrandMismatch(size(), rhs.size());
    Permutation out(size());
    for (int i = 0; i < size(); ++i) out.images_[i] = rhs.images_[images_[i]];
    return out;
  }

  // Post-compose with the swap of positions i, i+1 in place.
  void then_swap(int i) {
    for (int& v : images_) {
      if (v == i)
        v = i + 1;
      else if (v == i + 1)
        v = i;
    }
  }

  // Number of pairs i < j with image(i) > image(j).
  long inversions() const {
    long count = 0;
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (images_[i] > images_[j]) ++count;
    return count;
  }

  int cycle_count() const {
    std::vector<bool> seen(images_.size(), false);
    int cycles = 0;
    for (int i = 0; i < size(); ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (int j = i; !seen[j]; j = images_[j]) seen[j] = true;
    }
    return cycles;
  }

  // Sorted cycle lengths; a complete conjugacy invariant in S_n.
  std::vector<int> cycle_type() const {
    std::vector<bool> seen(images_.size(), false);
    std::vector<int> lengths;
    for (int i = 0; i < size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace braidkit
