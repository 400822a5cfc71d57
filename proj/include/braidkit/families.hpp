#pragma once

#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidkit/alexander.hpp"
#include "braidkit/braid_word.hpp"
#include "braidkit/conjugacy.hpp"
#include "braidkit/errors.hpp"
#include "braidkit/garside.hpp"
#include "braidkit/parallel.hpp"
#include "braidkit/twisted_torus.hpp"

namespace braidkit {

enum class Status { verified, falsified, inconclusive };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::falsified: return "falsified";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

/// Outcome of one machine check. Every verified report can be
/// recomputed from `claim` and `params` alone.
struct VerificationReport {
  std::string claim;
  std::map<std::string, long> params;
  Status status = Status::inconclusive;
  std::optional<BraidWord> witness;
  std::chrono::microseconds elapsed{0};
  std::string notes;
};

// Prefix used in notes whenever a commonly quoted value disagrees with
// what the formulas produce.
inline constexpr const char* kDiscrepancyTag = "discrepancy noted: ";

namespace detail {

template <class Fn>
VerificationReport timed(std::string claim, std::map<std::string, long> params, Fn&& body) {
  VerificationReport report;
  report.claim = std::move(claim);
  report.params = std::move(params);
  const auto start = std::chrono::steady_clock::now();
  body(report);
  report.elapsed =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

inline void append_note(VerificationReport& r, const std::string& note) {
  if (!r.notes.empty()) r.notes += "; ";
  r.notes += note;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Named families

enum class FamilyLabel { t1, p1_torus };

inline const char* to_string(FamilyLabel l) { return l == FamilyLabel::t1 ? "T1" : "P1torus"; }

struct FamilyPair {
  FamilyLabel label;
  long q;
  long k;
  TwistedTorusKnot first;
  TwistedTorusKnot second;
};

/// K(kq + (q-1)/2, q, (q-1)/2, -1) and K(kq + (q+1)/2, q, (q+1)/2, -1).
inline FamilyPair t1_pair(long q, long k) {
  detail::require(q >= 5 && q % 2 == 1, "t1_pair needs odd q >= 5");
  detail::require(k >= 2, "t1_pair needs k >= 2");
  const long r = (q - 1) / 2;
  return {FamilyLabel::t1, q, k, {k * q + r, q, r, -1}, {k * q + r + 1, q, r + 1, -1}};
}

/// The torus knot T(kq+1, q) = K(kq+1, q, 1, -1) and K((k+1)q - 1, q, q-1, -1).
inline FamilyPair p1_torus_pair(long q, long k) {
  detail::require(q >= 3, "p1_torus_pair needs q >= 3");
  detail::require(k >= 2, "p1_torus_pair needs k >= 2");
  return {FamilyLabel::p1_torus, q, k, {k * q + 1, q, 1, -1}, {(k + 1) * q - 1, q, q - 1, -1}};
}

/// beta1 = (rev pi(1,2r))^r (rev pi(1,r-1))^-r and
/// beta2 = (rev pi(1,2r))^(r+1) (rev pi(1,r))^-(r+1), both in B_{2r+1}.
inline std::pair<BraidWord, BraidWord> beta_words(int r) {
  detail::require(r >= 2, "beta_words needs r >= 2");
  const int n = 2 * r + 1;
  const BraidWord torus = rev(pi(1, 2 * r, n));
  return {power(torus, r) * power(rev(pi(1, r - 1, n)), -r),
          power(torus, r + 1) * power(rev(pi(1, r, n)), -(r + 1))};
}

/// rev delta(1, r-1) * rev delta(r+1, 2r) in B_{2r+1}.
inline BraidWord p1_conjugator(int r) {
  detail::require(r >= 2, "p1_conjugator needs r >= 2");
  const int n = 2 * r + 1;
  return rev(delta(1, r - 1, n)) * rev(delta(r + 1, 2 * r, n));
}

/// The same conjugator written out as the explicit product
/// (s1)(s2 s1)...(s_{r-1}...s1)(s_{r+1})(s_{r+2} s_{r+1})...(s_{2r}...s_{r+1}).
inline BraidWord p1_conjugator_product(int r) {
  detail::require(r >= 2, "p1_conjugator needs r >= 2");
  BraidWord out(2 * r + 1);
  for (int top = 1; top <= r - 1; ++top)
    for (int i = top; i >= 1; --i) out.push_back(i);
  for (int top = r + 1; top <= 2 * r; ++top)
    for (int i = top; i >= r + 1; --i) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------------------
// Braid identities

enum class Lemma { L1, L3, L5, L6, L7, L8 };

inline const char* to_string(Lemma l) {
  switch (l) {
    case Lemma::L1: return "L1";
    case Lemma::L3: return "L3";
    case Lemma::L5: return "L5";
    case Lemma::L6: return "L6";
    case Lemma::L7: return "L7";
    case Lemma::L8: return "L8";
  }
  return "?";
}

inline std::optional<Lemma> parse_lemma(const std::string& s) {
  for (Lemma l : {Lemma::L1, Lemma::L3, Lemma::L5, Lemma::L6, Lemma::L7, Lemma::L8})
    if (s == to_string(l)) return l;
  return std::nullopt;
}

namespace detail {
inline long param(const std::map<std::string, long>& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) throw DomainError("missing parameter '" + key + "'");
  return it->second;
}
}  // namespace detail

/// Left and right sides of a lemma, built verbatim from its statement.
/// L1/L3 read l, t, s, strands; L5-L8 read r and work in B_{2r+1}.
inline std::pair<BraidWord, BraidWord> lemma_sides(Lemma lemma, const std::map<std::string, long>& params) {
  if (lemma == Lemma::L1 || lemma == Lemma::L3) {
    const int l = static_cast<int>(detail::param(params, "l"));
    const int t = static_cast<int>(detail::param(params, "t"));
    const int s = static_cast<int>(detail::param(params, "s"));
    const int n = static_cast<int>(detail::param(params, "strands"));
    detail::require(1 <= l && l < t && t <= s && s <= n - 1, "lemma needs 1 <= l < t <= s <= strands-1");
    const BraidWord block = pi(l, s, n);
    if (lemma == Lemma::L1)
      return {BraidWord::generator(n, t) * block, block * BraidWord::generator(n, t - 1)};
    return {BraidWord::generator(n, t - 1) * invert(block), invert(block) * BraidWord::generator(n, t)};
  }
  const int r = static_cast<int>(detail::param(params, "r"));
  detail::require(r >= 2, "lemma needs r >= 2");
  const int n = 2 * r + 1;
  switch (lemma) {
    case Lemma::L5:
      return {delta(1, r - 1, n) * power(pi(1, r - 1, n), -r), invert(delta(1, r - 1, n))};
    case Lemma::L6:
      return {delta(2, r, n) * power(pi(1, r, n), -r), invert(delta(1, r, n))};
    case Lemma::L7: {
      BraidWord rhs(n);
      for (int l = r + 1; l >= 1; --l) rhs *= pi(l, 2 * r, n);
      return {invert(delta(1, r, n)) * power(pi(1, 2 * r, n), r + 1), rhs};
    }
    case Lemma::L8: {
      BraidWord rhs(n);
      for (int s = 2 * r; s >= r; --s) rhs *= pi(1, s, n);
      return {power(pi(1, 2 * r, n), r + 1) * invert(delta(r + 1, 2 * r, n)), rhs};
    }
    default: break;
  }
  throw DomainError("unknown lemma");
}

inline VerificationReport verify_lemma(Lemma lemma, const std::map<std::string, long>& params) {
  return detail::timed(to_string(lemma), params, [&](VerificationReport& rep) {
    const auto [lhs, rhs] = lemma_sides(lemma, params);
    rep.status = equals(lhs, rhs) ? Status::verified : Status::falsified;
  });
}

/// Every (l, t, s) with l < t <= s <= strands-1 for strands in 3..max_strands,
/// folded into one report.
inline VerificationReport verify_lemma_sweep(Lemma lemma, int max_strands) {
  detail::require(lemma == Lemma::L1 || lemma == Lemma::L3, "sweeps cover L1 and L3");
  return detail::timed(std::string(to_string(lemma)) + "-sweep", {{"max_strands", max_strands}},
                       [&](VerificationReport& rep) {
                         long cases = 0;
                         long failures = 0;
                         for (int n = 3; n <= max_strands; ++n)
                           for (int s = 2; s <= n - 1; ++s)
                             for (int t = 2; t <= s; ++t)
                               for (int l = 1; l < t; ++l) {
                                 ++cases;
                                 const auto [lhs, rhs] =
                                     lemma_sides(lemma, {{"l", l}, {"t", t}, {"s", s}, {"strands", n}});
                                 if (!equals(lhs, rhs)) {
                                   ++failures;
                                   detail::append_note(rep, "fails at l=" + std::to_string(l) + " t=" +
                                                                std::to_string(t) + " s=" + std::to_string(s) +
                                                                " strands=" + std::to_string(n));
                                 }
                               }
                         rep.params["cases"] = cases;
                         rep.status = failures == 0 ? Status::verified : Status::falsified;
                       });
}

/// One displayed identity: lhs must equal every entry of rhs (chained
/// displays list several right-hand forms).
struct Equation {
  std::string id;
  BraidWord lhs;
  std::vector<BraidWord> rhs;
};

/// The eight identities of the conjugacy argument, plus the commutation
/// fact used between the first two, all in B_{2r+1}.
inline std::vector<Equation> equation_chain(int r) {
  detail::require(r >= 2, "equation chain needs r >= 2");
  const int n = 2 * r + 1;
  const auto P = [&](int s) { return pi(1, s, n); };
  const auto D = [&](int s) { return delta(1, s, n); };
  const BraidWord upper = delta(r + 1, 2 * r, n);  // Delta_{2r}^{r+1}
  const BraidWord lower = D(r - 1) * power(P(r - 1), -r);
  const BraidWord top_r = power(P(2 * r), r);
  const BraidWord top_r1 = power(P(2 * r), r + 1);
  const BraidWord neg_r1 = power(P(r), -(r + 1));

  std::vector<Equation> eqs;
  eqs.push_back({"step1", upper * lower * top_r, {neg_r1 * top_r1 * upper * D(r - 1)}});
  eqs.push_back({"step2", lower * top_r * D(r), {neg_r1 * top_r1 * upper * D(r - 1)}});
  eqs.push_back({"step3", lower * top_r * P(r), {neg_r1 * top_r1 * upper}});
  eqs.push_back({"step4", invert(D(r - 1)) * top_r * P(r), {neg_r1 * top_r1 * upper}});
  eqs.push_back({"step5",
                 top_r * P(r),
                 {D(r - 1) * neg_r1 * top_r1 * upper,
                  invert(P(r)) * delta(2, r, n) * power(P(r), -r) * top_r1 * upper,
                  invert(P(r)) * invert(D(r)) * top_r1 * upper}});
  eqs.push_back({"step6", P(r) * top_r * P(r), {invert(D(r)) * top_r1 * upper}});
  eqs.push_back({"step7", top_r1, {invert(D(r)) * top_r1 * upper}});
  eqs.push_back({"step8", top_r1 * invert(upper), {invert(D(r)) * top_r1}});
  eqs.push_back({"commute", lower * upper, {upper * lower}});
  return eqs;
}

/// Checks each identity independently. Exponent sums are compared first
/// and recorded.
inline std::vector<VerificationReport> verify_equation_chain(int r) {
  std::vector<VerificationReport> out;
  for (const auto& eq : equation_chain(r)) {
    out.push_back(detail::timed(eq.id, {{"r", r}}, [&](VerificationReport& rep) {
      bool ok = true;
      bool sums_agree = true;
      for (const auto& rhs : eq.rhs) {
        sums_agree = sums_agree && exponent_sum(eq.lhs) == exponent_sum(rhs);
        ok = ok && equals(eq.lhs, rhs);
      }
      rep.notes = std::string("exponent sums ") + (sums_agree ? "agree" : "differ") + " (" +
                  std::to_string(exponent_sum(eq.lhs)) + ")";
      if (eq.rhs.size() > 1) detail::append_note(rep, std::to_string(eq.rhs.size()) + " right-hand forms");
      rep.status = ok ? Status::verified : Status::falsified;
    }));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Conjugacy claims

namespace detail {
// c^-1 a c = b is tried first; if only c a c^-1 = b holds that is
// recorded, never silently swapped.
inline void check_explicit_conjugator(VerificationReport& rep, const BraidWord& a, const BraidWord& b,
                                      const BraidWord& c) {
  rep.witness = c;
  if (is_conjugate_by(a, b, c)) {
    rep.status = Status::verified;
    append_note(rep, "c^-1 w1 c = w2");
  } else if (is_conjugate_by(a, b, invert(c))) {
    rep.status = Status::verified;
    append_note(rep, "only the reverse direction c w1 c^-1 = w2 holds");
  } else {
    rep.status = Status::falsified;
    append_note(rep, "neither c^-1 w1 c nor c w1 c^-1 equals w2");
  }
}
}  // namespace detail

/// beta1 and beta2 are conjugate by p1_conjugator(r).
inline VerificationReport verify_p1(int r) {
  return detail::timed("P1", {{"r", r}}, [&](VerificationReport& rep) {
    const auto [b1, b2] = beta_words(r);
    detail::check_explicit_conjugator(rep, b1, b2, p1_conjugator(r));
  });
}

/// Full-word conjugacy of the T1 pair by p1_conjugator((q-1)/2), plus the
/// identity (s_{q-1}...s_1)^q = (s_1...s_{q-1})^q that lets the central
/// part cancel.
inline VerificationReport verify_t1(long q, long k) {
  return detail::timed("T1", {{"q", q}, {"k", k}}, [&](VerificationReport& rep) {
    const FamilyPair pair = t1_pair(q, k);
    const int n = static_cast<int>(q);
    const int r = static_cast<int>((q - 1) / 2);
    const BraidWord w1 = ttk_braid(pair.first);
    const BraidWord w2 = ttk_braid(pair.second);
    detail::check_explicit_conjugator(rep, w1, w2, p1_conjugator(r));
    const bool center = equals(power(rev(pi(1, n - 1, n)), n), center_full_twist(n));
    detail::append_note(rep, std::string("full twist identity ") + (center ? "holds" : "FAILS"));
    if (!center) rep.status = Status::falsified;
    rep.params["slope"] = surface_slope(pair.first);
    if (surface_slope(pair.second) != surface_slope(pair.first)) {
      rep.status = Status::falsified;
      detail::append_note(rep, "surface slopes differ");
    }
  });
}

struct SuiteOptions {
  ConjugacyOptions conjugacy;
  InvariantOptions invariants;
};

/// The T(kq+1, q) pair: certified by conjugation with the half twist
/// (either direction, or the tau image), else by the general search.
/// Alexander polynomials of both closures are compared in the notes.
inline VerificationReport verify_p1_theorem(long q, long k, const SuiteOptions& options = {}) {
  return detail::timed("p1-halftwist", {{"q", q}, {"k", k}}, [&](VerificationReport& rep) {
    const FamilyPair pair = p1_torus_pair(q, k);
    const BraidWord w1 = ttk_braid(pair.first);
    const BraidWord w2 = ttk_braid(pair.second);
    const BraidWord half = half_twist(static_cast<int>(q));
    if (is_conjugate_by(w1, w2, half)) {
      rep.status = Status::verified;
      rep.witness = half;
      rep.notes = "Delta^-1 w1 Delta = w2";
    } else if (is_conjugate_by(w2, w1, half)) {
      rep.status = Status::verified;
      rep.witness = invert(half);
      rep.notes = "Delta^-1 w2 Delta = w1";
    } else if (equals(tau(w2), w1)) {
      rep.status = Status::verified;
      rep.witness = invert(half);
      rep.notes = "tau(w2) = w1";
    } else {
      const ConjugacyResult res = are_conjugate(w1, w2, options.conjugacy);
      rep.params["nodes"] = static_cast<long>(res.nodes_visited);
      if (res.verdict == ConjugacyVerdict::conjugate) {
        rep.status = Status::verified;
        rep.witness = res.witness;
        rep.notes = std::string(kDiscrepancyTag) + "half twist does not conjugate; general search found witness";
      } else {
        rep.status = res.verdict == ConjugacyVerdict::not_conjugate ? Status::falsified : Status::inconclusive;
        rep.notes = std::string("general search: ") + res.reason;
      }
    }
    try {
      const LaurentPoly a1 = alexander(w1, options.invariants);
      const LaurentPoly a2 = alexander(w2, options.invariants);
      const LaurentPoly expected = torus_alexander(k * q + 1, q, options.invariants);
      detail::append_note(rep, std::string("alexander ") + (a1 == a2 ? "equal" : "DIFFER") +
                                   (a1 == expected && a2 == expected ? ", matches torus knot T(" : ", torus knot T(") +
                                   std::to_string(k * q + 1) + "," + std::to_string(q) + ")" +
                                   (a1 == expected && a2 == expected ? "" : " MISMATCH"));
    } catch (const ResourceError& e) {
      detail::append_note(rep, std::string("alexander skipped: ") + e.what());
    }
  });
}

// ---------------------------------------------------------------------------
// Parameter claims

/// K(17,5,2,-1) and K(18,5,3,-1) share surface slope 81.
inline VerificationReport verify_slope_example() {
  return detail::timed("slope-81", {{"p1", 17}, {"p2", 18}, {"q", 5}}, [](VerificationReport& rep) {
    const long s1 = surface_slope({17, 5, 2, -1});
    const long s2 = surface_slope({18, 5, 3, -1});
    rep.params["slope"] = s1;
    rep.status = s1 == 81 && s2 == 81 ? Status::verified : Status::falsified;
  });
}

/// Seifert data and surgery description for the slope-81 pair, with the
/// commonly quoted (2,5)/(3,5) and S^2(2,3,5) flagged against the
/// formula values.
inline VerificationReport verify_seifert_example() {
  return detail::timed("sfs-81", {{"p1", 17}, {"p2", 18}, {"q", 5}}, [](VerificationReport& rep) {
    const TwistedTorusKnot a{17, 5, 2, -1};
    const TwistedTorusKnot b{18, 5, 3, -1};
    const Classification ca = classify(a);
    const Classification cb = classify(b);
    const SurgeryResult sa = surgery_description(a);
    const SurgeryResult sb = surgery_description(b);
    const bool ok = ca.verdict == Verdict::primitive_seifert && cb.verdict == Verdict::primitive_seifert &&
                    ca.seifert_h && ca.seifert_h->data == SeifertData{3, 2} && cb.seifert_h &&
                    cb.seifert_h->data == SeifertData{3, 3} && sa.multiplicities == std::array<long, 3>{3, 2, -3} &&
                    sb.multiplicities == std::array<long, 3>{3, 3, -2};
    rep.status = ok ? Status::verified : Status::falsified;
    rep.notes = "K(17,5,2,-1): (3,2) over D^2, S^2(3,2,-3); K(18,5,3,-1): (3,3) over D^2, S^2(3,3,-2)";
    detail::append_note(rep, std::string(kDiscrepancyTag) +
                                 "quoted values (2,5) and (3,5) Seifert over D^2 and S^2(2,3,5) do not match the "
                                 "(k, p-kq) and S^2(k, p-kq, p-(k-n)q) formula instantiations");
  });
}

/// T1 members share k and slope; their second Seifert multiplicities
/// differ by exactly one.
inline VerificationReport verify_t1_data(long q, long k) {
  return detail::timed("T1-data", {{"q", q}, {"k", k}}, [&](VerificationReport& rep) {
    const FamilyPair pair = t1_pair(q, k);
    const Classification c1 = classify(pair.first);
    const Classification c2 = classify(pair.second);
    const bool ok = c1.verdict == Verdict::primitive_seifert && c2.verdict == Verdict::primitive_seifert &&
                    c1.seifert_h->k == k && c2.seifert_h->k == k &&
                    c2.seifert_h->data.a2 - c1.seifert_h->data.a2 == 1 &&
                    surface_slope(pair.first) == surface_slope(pair.second);
    rep.params["slope"] = surface_slope(pair.first);
    rep.status = ok ? Status::verified : Status::falsified;
  });
}

/// Both torus-pair members have slope kq^2 + q - 1.
inline VerificationReport verify_p1_torus_slope(long q, long k) {
  return detail::timed("p1-slope", {{"q", q}, {"k", k}}, [&](VerificationReport& rep) {
    const FamilyPair pair = p1_torus_pair(q, k);
    const long expected = k * q * q + q - 1;
    const long s1 = surface_slope(pair.first);
    const long s2 = surface_slope(pair.second);
    const Classification c1 = classify(pair.first);
    const Classification c2 = classify(pair.second);
    rep.params["slope"] = s1;
    const bool ok = s1 == expected && s2 == expected && c1.verdict == Verdict::primitive_primitive &&
                    c2.verdict == Verdict::primitive_seifert && c2.seifert_h &&
                    c2.seifert_h->data == SeifertData{k, q - 1};
    rep.status = ok ? Status::verified : Status::falsified;
    rep.notes = std::string(kDiscrepancyTag) + "alternative quoted slope kq^2+q+1 = " +
                std::to_string(expected + 2) + " differs from computed pq+nr^2 = " + std::to_string(s1);
  });
}

struct SweepRow {
  TwistedTorusKnot knot;
  Classification classification;
};

/// Classifies every K(p, q, r, n) with p in [p_lo, p_hi], q in
/// [q_lo, q_hi], 0 <= r <= q and n in ns.
inline std::vector<SweepRow> classification_sweep(long p_lo, long p_hi, long q_lo, long q_hi,
                                                  const std::vector<long>& ns) {
  std::vector<SweepRow> rows;
  for (long p = p_lo; p <= p_hi; ++p)
    for (long q = q_lo; q <= q_hi; ++q)
      for (long r = 0; r <= q; ++r)
        for (long n : ns) {
          const TwistedTorusKnot k{p, q, r, n};
          rows.push_back({k, classify(k)});
        }
  return rows;
}

/// Every PrimitiveSeifert verdict is primitive on the outer side, not on
/// the inner side, and carries Seifert data.
inline bool sweep_row_consistent(const SweepRow& row) {
  const auto& c = row.classification;
  if (c.verdict == Verdict::primitive_seifert) return c.primitive_h_prime && !c.primitive_h && c.seifert_h.has_value();
  if (c.verdict == Verdict::primitive_primitive) return c.primitive_h && c.primitive_h_prime;
  return true;
}

inline VerificationReport verify_classification_sweep(long p_max, long q_max) {
  return detail::timed("classification-sweep", {{"p_max", p_max}, {"q_max", q_max}}, [&](VerificationReport& rep) {
    const auto rows = classification_sweep(1, p_max, 2, q_max, {-1, 1});
    long ps = 0;
    long bad = 0;
    for (const auto& row : rows) {
      if (row.classification.verdict == Verdict::primitive_seifert) ++ps;
      if (!sweep_row_consistent(row)) ++bad;
    }
    rep.params["rows"] = static_cast<long>(rows.size());
    rep.params["primitive_seifert"] = ps;
    rep.params["inconsistent"] = bad;
    rep.status = bad == 0 ? Status::verified : Status::falsified;
  });
}

// ---------------------------------------------------------------------------
// Whole suite

struct Range {
  long lo;
  long hi;
};

struct SuiteRanges {
  Range p1_r{2, 8};
  Range lemma_r{2, 8};
  int lemma_max_strands = 10;
  Range chain_r{2, 6};
  Range t1_q{5, 9};
  Range t1_k{2, 3};
  Range p1th_q{3, 9};
  Range p1th_k{2, 3};
  long sweep_p_max = 60;
  long sweep_q_max = 12;
};

struct ReportSection {
  std::string name;
  std::vector<VerificationReport> reports;
};

using ReportTask = std::function<VerificationReport()>;

inline std::vector<ReportTask> p1_tasks(Range r) {
  std::vector<ReportTask> tasks;
  for (long v = r.lo; v <= r.hi; ++v) tasks.push_back([v] { return verify_p1(static_cast<int>(v)); });
  return tasks;
}

inline std::vector<ReportTask> lemma_tasks(Range r, int max_strands) {
  std::vector<ReportTask> tasks;
  tasks.push_back([max_strands] { return verify_lemma_sweep(Lemma::L1, max_strands); });
  tasks.push_back([max_strands] { return verify_lemma_sweep(Lemma::L3, max_strands); });
  for (Lemma l : {Lemma::L5, Lemma::L6, Lemma::L7, Lemma::L8})
    for (long v = r.lo; v <= r.hi; ++v) tasks.push_back([l, v] { return verify_lemma(l, {{"r", v}}); });
  return tasks;
}

// T1 needs odd q; even values in the range are skipped.
inline std::vector<ReportTask> t1_tasks(Range q, Range k) {
  std::vector<ReportTask> tasks;
  for (long qq = q.lo; qq <= q.hi; ++qq)
    for (long kk = k.lo; kk <= k.hi; ++kk)
      if (qq % 2 == 1) tasks.push_back([qq, kk] { return verify_t1(qq, kk); });
  return tasks;
}

inline std::vector<ReportTask> p1_theorem_tasks(Range q, Range k, const SuiteOptions& options) {
  std::vector<ReportTask> tasks;
  for (long qq = q.lo; qq <= q.hi; ++qq)
    for (long kk = k.lo; kk <= k.hi; ++kk)
      tasks.push_back([qq, kk, options] { return verify_p1_theorem(qq, kk, options); });
  return tasks;
}

inline std::vector<VerificationReport> chain_reports(Range r) {
  std::vector<std::function<std::vector<VerificationReport>()>> tasks;
  for (long v = r.lo; v <= r.hi; ++v) tasks.push_back([v] { return verify_equation_chain(static_cast<int>(v)); });
  std::vector<VerificationReport> out;
  for (auto& batch : run_ordered(tasks))
    for (auto& rep : batch) out.push_back(std::move(rep));
  return out;
}

/// Slope and Seifert examples, T1 data, torus-pair slopes and the
/// classification sweep.
inline std::vector<ReportTask> knot_data_tasks(const SuiteRanges& ranges) {
  std::vector<ReportTask> data{verify_slope_example, verify_seifert_example};
  for (long q = ranges.t1_q.lo; q <= ranges.t1_q.hi; ++q)
    for (long k = ranges.t1_k.lo; k <= ranges.t1_k.hi; ++k)
      if (q % 2 == 1) data.push_back([q, k] { return verify_t1_data(q, k); });
  for (long q = ranges.p1th_q.lo; q <= ranges.p1th_q.hi; ++q)
    for (long k = ranges.p1th_k.lo; k <= ranges.p1th_k.hi; ++k)
      data.push_back([q, k] { return verify_p1_torus_slope(q, k); });
  data.push_back([ranges] { return verify_classification_sweep(ranges.sweep_p_max, ranges.sweep_q_max); });
  return data;
}

/// Runs every check in three sections: knot data (slopes, Seifert data,
/// classification), braid identities (lemmas, equation chain, P1, T1) and
/// the torus-knot coincidence.
inline std::vector<ReportSection> run_suite(const SuiteRanges& ranges = {}, const SuiteOptions& options = {}) {
  std::vector<ReportSection> sections;

  sections.push_back({"knot-data", run_ordered(knot_data_tasks(ranges))});

  std::vector<ReportTask> identities = lemma_tasks(ranges.lemma_r, ranges.lemma_max_strands);
  auto identity_reports = run_ordered(identities);
  for (auto& rep : chain_reports(ranges.chain_r)) identity_reports.push_back(std::move(rep));
  for (auto& rep : run_ordered(p1_tasks(ranges.p1_r))) identity_reports.push_back(std::move(rep));
  for (auto& rep : run_ordered(t1_tasks(ranges.t1_q, ranges.t1_k))) identity_reports.push_back(std::move(rep));
  sections.push_back({"braid-identities", std::move(identity_reports)});

  sections.push_back({"torus-coincidence", run_ordered(p1_theorem_tasks(ranges.p1th_q, ranges.p1th_k, options))});
  return sections;
}

}  // namespace braidkit
