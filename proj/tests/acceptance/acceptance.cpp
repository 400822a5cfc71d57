// Acceptance run: one PASS/FAIL line per criterion, wall-clock limits
// enforced. Exits nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "braidkit/braidkit.hpp"
#include "../test_support.hpp"

namespace {

using namespace braidkit;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects the first failure message of a criterion.
struct Check {
  std::string failure;
  void expect(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
  void within(double elapsed, double limit, const std::string& what) {
    std::ostringstream os;
    os << what << " took " << elapsed << " s, limit " << limit << " s";
    expect(elapsed < limit, os.str());
  }
};

std::string knot_label(long q, long k) { return "(q=" + std::to_string(q) + ",k=" + std::to_string(k) + ")"; }

void slope_reproduction(Check& c) {
  const auto start = Clock::now();
  const long a = surface_slope({17, 5, 2, -1});
  const long b = surface_slope({18, 5, 3, -1});
  c.within(seconds_since(start), 1e-3, "slopes");
  c.expect(a == 81, "K(17,5,2,-1) slope " + std::to_string(a));
  c.expect(b == 81, "K(18,5,3,-1) slope " + std::to_string(b));
}

void p1_conjugacy(Check& c) {
  for (int r = 2; r <= 8; ++r) {
    const auto start = Clock::now();
    const auto rep = verify_p1(r);
    c.within(seconds_since(start), 5.0, "P1 r=" + std::to_string(r));
    c.expect(rep.status == Status::verified, "P1 r=" + std::to_string(r) + " " + to_string(rep.status));
  }
}

void t1_conjugacy(Check& c) {
  for (long q : {5L, 7L, 9L})
    for (long k : {2L, 3L}) {
      const auto start = Clock::now();
      const auto rep = verify_t1(q, k);
      c.within(seconds_since(start), 30.0, "T1 " + knot_label(q, k));
      c.expect(rep.status == Status::verified, "T1 " + knot_label(q, k) + " " + to_string(rep.status));
    }
}

void lemma_suite(Check& c) {
  const auto start = Clock::now();
  for (Lemma l : {Lemma::L1, Lemma::L3}) {
    const auto rep = verify_lemma_sweep(l, 10);
    c.expect(rep.status == Status::verified, rep.claim + ": " + rep.notes);
  }
  for (Lemma l : {Lemma::L5, Lemma::L6, Lemma::L7, Lemma::L8})
    for (long r = 2; r <= 8; ++r)
      c.expect(verify_lemma(l, {{"r", r}}).status == Status::verified,
               std::string(to_string(l)) + " r=" + std::to_string(r));
  c.within(seconds_since(start), 60.0, "lemma sweep");
}

void equation_chain_check(Check& c) {
  for (int r = 2; r <= 6; ++r) {
    const auto reports = verify_equation_chain(r);
    c.expect(reports.size() == 9, "chain size");
    for (const auto& rep : reports)
      c.expect(rep.status == Status::verified, rep.claim + " r=" + std::to_string(r));
  }
}

void torus_coincidence(Check& c) {
  for (long q : {3L, 5L})
    for (long k : {2L, 3L}) {
      const auto start = Clock::now();
      const auto rep = verify_p1_theorem(q, k);
      const FamilyPair pair = p1_torus_pair(q, k);
      const LaurentPoly expected = torus_alexander(k * q + 1, q);
      const bool a1 = alexander(ttk_braid(pair.first)) == expected;
      const bool a2 = alexander(ttk_braid(pair.second)) == expected;
      c.within(seconds_since(start), 30.0, "pair " + knot_label(q, k));
      c.expect(rep.status == Status::verified, "conjugacy " + knot_label(q, k) + " " + to_string(rep.status));
      c.expect(a1 && a2, "Alexander mismatch " + knot_label(q, k));
    }
}

void classification_table(Check& c) {
  long ps = 0;
  for (const auto& row : classification_sweep(1, 60, 2, 12, {-1, 1})) {
    const auto& cl = row.classification;
    if (cl.verdict != Verdict::primitive_seifert) continue;
    ++ps;
    c.expect(cl.primitive_h_prime && !cl.primitive_h && cl.seifert_h.has_value(),
             "inconsistent " + to_string(row.knot));
  }
  c.expect(ps > 0, "no PrimitiveSeifert rows");
  const TwistedTorusKnot k{17, 5, 2, -1};
  const Classification cl = classify(k);
  c.expect(cl.seifert_h && cl.seifert_h->data == SeifertData{3, 2}, "K(17,5,2,-1) Seifert data");
  const SurgeryResult s = surgery_description(k);
  c.expect(s.kind == SurgeryKind::sfs_s2 && s.multiplicities == std::array<long, 3>{3, 2, -3},
           "K(17,5,2,-1) surgery");
  const auto rep = verify_seifert_example();
  c.expect(rep.notes.find(kDiscrepancyTag) != std::string::npos && rep.notes.find("(2,5)") != std::string::npos &&
               rep.notes.find("S^2(2,3,5)") != std::string::npos,
           "discrepancy note missing");
}

void canonicity(Check& c) {
  const auto start = Clock::now();
  std::mt19937_64 rng(20261019);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 3 + trial % 6;
    BraidWord w = testing::random_word(rng, n, 24);
    const NormalForm expected = to_normal_form(w);
    for (int k = 0; k < 3; ++k) w = testing::insert_trivial(rng, w);
    c.expect(to_normal_form(w) == expected, "relator insertion changed normal form");
  }
  for (int trial = 0; trial < 500; ++trial) {
    const BraidWord w = testing::random_word(rng, 3 + trial % 6, 30);
    c.expect(to_normal_form(w * invert(w)).is_identity(), "w w^-1 not identity");
  }
  c.within(seconds_since(start), 60.0, "canonicity suite");
}

void oracle_battery(Check& c) {
  std::mt19937_64 rng(1019);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 4;
    const BraidWord w = testing::random_knot_word(rng, n, 14);
    const LaurentPoly a = alexander(w);
    c.expect(alexander(conjugate(w, testing::random_word(rng, n, 8))) == a, "conjugation changed polynomial");
    BraidWord stab(n + 1, std::vector<int>(w.codes().begin(), w.codes().end()));
    stab.push_back(trial % 2 ? n : -n);
    c.expect(alexander(stab) == a, "stabilization changed polynomial");
    c.expect(normalize_alexander(a) == normalize_alexander(a.reflect()), "asymmetric polynomial");
    c.expect(a.at_one() == 1 || a.at_one() == -1, "value at 1 is not a unit");
  }
}

void torus_slopes(Check& c) {
  for (long q : {3L, 5L, 7L})
    for (long k : {2L, 3L}) {
      const FamilyPair pair = p1_torus_pair(q, k);
      const long expected = k * q * q + q - 1;
      c.expect(surface_slope(pair.first) == expected && surface_slope(pair.second) == expected,
               "slope " + knot_label(q, k));
      const auto rep = verify_p1_torus_slope(q, k);
      c.expect(rep.status == Status::verified, "report " + knot_label(q, k));
      c.expect(rep.notes.find(kDiscrepancyTag) != std::string::npos, "typo note missing " + knot_label(q, k));
    }
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Check&)>> criteria[] = {
      {"slope reproduction", slope_reproduction},
      {"P1 conjugacy r=2..8", p1_conjugacy},
      {"T1 full-word conjugacy", t1_conjugacy},
      {"lemma suite", lemma_suite},
      {"equation chain r=2..6", equation_chain_check},
      {"torus-knot coincidence", torus_coincidence},
      {"classification table", classification_table},
      {"normal-form canonicity", canonicity},
      {"Alexander oracle battery", oracle_battery},
      {"torus-pair slope identity", torus_slopes},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Check check;
    const auto start = Clock::now();
    try {
      run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(start);
    const bool ok = check.failure.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << std::setw(2) << index << "  " << std::left << std::setw(28) << name
              << std::right << std::fixed << std::setprecision(3) << std::setw(9) << elapsed << " s";
    if (!ok) std::cout << "  " << check.failure;
    std::cout << std::endl;
  }
  std::cout << (10 - failed) << "/10 criteria passed\n";
  return failed == 0 ? 0 : 1;
}
