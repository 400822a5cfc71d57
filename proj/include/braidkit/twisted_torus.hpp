#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <optional>
#include <string>

#include "braidkit/braid_word.hpp"
#include "braidkit/errors.hpp"

namespace braidkit {

/// Twisted torus knot K(p, q, r, n): the (p, q) torus knot with r
/// adjacent strands given n extra full twists.
///
/// Any integers are accepted as parameters; operations that need more
/// (a braid realization, a Seifert fibration) check their own domain.
struct TwistedTorusKnot {
  long p = 0;
  long q = 0;
  long r = 0;
  long n = 0;

  friend bool operator==(const TwistedTorusKnot&, const TwistedTorusKnot&) = default;
};

inline std::string to_string(const TwistedTorusKnot& k) {
  return "K(" + std::to_string(k.p) + "," + std::to_string(k.q) + "," + std::to_string(k.r) + "," +
         std::to_string(k.n) + ")";
}

// Exceptional fibre multiplicities of a Seifert fibration over the disk.
struct SeifertData {
  long a1 = 1;
  long a2 = 1;
  friend bool operator==(const SeifertData&, const SeifertData&) = default;
};

// (k, p - kq) Seifert data together with the k that produced it.
struct SeifertFibration {
  long k = 0;
  SeifertData data;
  friend bool operator==(const SeifertFibration&, const SeifertFibration&) = default;
};

enum class Verdict { primitive_primitive, primitive_seifert, outside_criteria };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::primitive_primitive: return "PrimitivePrimitive";
    case Verdict::primitive_seifert: return "PrimitiveSeifert";
    case Verdict::outside_criteria: return "OutsideCriteria";
  }
  return "?";
}

/// Primitivity on each side of the genus 2 splitting plus the Seifert
/// data of the inner handlebody, when it exists.
struct Classification {
  bool primitive_h = false;
  bool primitive_h_prime = false;
  std::optional<SeifertFibration> seifert_h;
  Verdict verdict = Verdict::outside_criteria;
};

enum class SurgeryKind { sfs_s2, lens_space, connected_sum_of_lens_spaces, unknown };

inline const char* to_string(SurgeryKind k) {
  switch (k) {
    case SurgeryKind::sfs_s2: return "SFS_S2";
    case SurgeryKind::lens_space: return "LensSpace";
    case SurgeryKind::connected_sum_of_lens_spaces: return "ConnectedSumOfLensSpaces";
    case SurgeryKind::unknown: return "Unknown";
  }
  return "?";
}

struct SurgeryResult {
  long slope = 0;
  SurgeryKind kind = SurgeryKind::unknown;
  // Meaningful for sfs_s2 only; signs exactly as the formula yields them.
  std::array<long, 3> multiplicities{};
};

/// Braid on q strands whose closure is the knot:
///   (s_{q-1} ... s_1)^p (s_{r-1} ... s_1)^(n r).
/// For n = -1 the twist block is literally (S1 S2 ... S_{r-1})^r.
inline BraidWord ttk_braid(const TwistedTorusKnot& k) {
  if (k.q < 2) throw DomainError("braid realization needs q >= 2");
  if (k.r < 0 || k.r > k.q) throw DomainError("braid realization needs 0 <= r <= q, got r = " + std::to_string(k.r));
  const int strands = static_cast<int>(k.q);
  BraidWord w = power(rev(pi(1, strands - 1, strands)), k.p);
  if (k.r >= 2) w *= power(rev(pi(1, static_cast<int>(k.r) - 1, strands)), k.n * k.r);
  return w;
}

inline long surface_slope(const TwistedTorusKnot& k) { return k.p * k.q + k.n * k.r * k.r; }

/// The k with r = p - kq and 1 <= k < p/q, if any; gives (k, r) Seifert
/// data over the disk.
inline std::optional<SeifertFibration> seifert_data(long p, long q, long r) {
  if (q < 2) throw DomainError("seifert_data needs q >= 2");
  if (r < 1) throw DomainError("seifert_data needs r >= 1");
  const long diff = p - r;
  if (diff % q != 0) return std::nullopt;
  const long k = diff / q;
  if (k < 1 || k * q >= p) return std::nullopt;
  return SeifertFibration{k, {k, r}};
}

namespace detail {
inline long mod(long x, long m) {
  const long v = x % m;
  return v < 0 ? v + std::labs(m) : v;
}
inline bool congruent(long a, long b, long m) { return mod(a - b, m) == 0; }
}  // namespace detail

/// Primitive with respect to the inner handlebody: p = 1, or
/// r = +-1 or +-q mod p.
inline bool is_primitive_h(long p, long q, long r) {
  if (p < 1) throw DomainError("is_primitive_h needs p >= 1");
  return p == 1 || detail::congruent(r, 1, p) || detail::congruent(r, -1, p) || detail::congruent(r, q, p) ||
         detail::congruent(r, -q, p);
}

/// Same test with the roles of p and q exchanged.
inline bool is_primitive_h_prime(long p, long q, long r) {
  if (q < 1) throw DomainError("is_primitive_h_prime needs q >= 1");
  return q == 1 || detail::congruent(r, 1, q) || detail::congruent(r, -1, q) || detail::congruent(r, p, q) ||
         detail::congruent(r, -p, q);
}

/// Parameter conditions for a Seifert/primitive twisted torus knot:
/// n = +-1, r < max(p, q), r = p - kq with 2 <= k <= (p-2)/q and
/// 1 < q < p/2, all boundaries strict as written.
inline bool meets_seifert_criteria(const TwistedTorusKnot& k, const std::optional<SeifertFibration>& sf) {
  if (std::labs(k.n) != 1 || !sf) return false;
  if (k.r >= std::max(k.p, k.q)) return false;
  if (sf->k < 2 || sf->k * k.q > k.p - 2) return false;
  return 1 < k.q && 2 * k.q < k.p;
}

inline Classification classify(const TwistedTorusKnot& k) {
  Classification c;
  c.primitive_h = k.p >= 1 && is_primitive_h(k.p, k.q, k.r);
  c.primitive_h_prime = k.q >= 1 && is_primitive_h_prime(k.p, k.q, k.r);
  if (k.q >= 2 && k.r >= 1) c.seifert_h = seifert_data(k.p, k.q, k.r);
  if (c.primitive_h && c.primitive_h_prime)
    c.verdict = Verdict::primitive_primitive;
  else if (meets_seifert_criteria(k, c.seifert_h) && c.primitive_h_prime)
    c.verdict = Verdict::primitive_seifert;
  else
    c.verdict = Verdict::outside_criteria;
  return c;
}

inline SurgeryResult surgery_description(const TwistedTorusKnot& k) {
  SurgeryResult out;
  out.slope = surface_slope(k);
  const Classification c = classify(k);
  if (c.verdict == Verdict::primitive_seifert) {
    const long kk = c.seifert_h->k;
    out.kind = SurgeryKind::sfs_s2;
    out.multiplicities = {kk, k.p - kk * k.q, k.p - (kk - k.n) * k.q};
  } else if (k.r == 1 && std::labs(k.n) == 1) {
    out.kind = SurgeryKind::lens_space;
  }
  return out;
}

}  // namespace braidkit
